//! Dense univariate polynomials over the rationals.
//!
//! Degrees in play are tiny, so a dense coefficient vector is the right
//! representation. Squarefree decomposition uses Yun's method; the k-th
//! root is recovered by coefficient recursion from the leading term.

use crate::rational::{rat, Rat};
use crate::{Error, Result};
use num::{One, Zero};
use std::fmt;

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `x^i`,
/// with trailing zeros trimmed (the zero polynomial has no coefficients).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        UniPoly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// `c * x^k`.
    pub fn monomial(k: usize, c: Rat) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Multiplicity of the root 0, i.e. the index of the lowest nonzero
    /// coefficient. `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `x^k`.
    pub fn mul_xpow(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        UniPoly::from_coeffs(out)
    }

    pub fn pow(&self, k: u32) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat(i as i64))
            .collect();
        UniPoly::from_coeffs(out)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division; `other` must be nonzero.
    pub fn divmod(&self, other: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let d = other.degree().ok_or(Error::NonDivisible)?;
        let lc = other.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d && !self.is_zero() && self.coeffs.len() - 1 < d {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len().saturating_sub(d)];
        while rem.len() > d || (rem.len() == d + 1 && d == 0) {
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= d {
                break;
            }
            let shift = rem.len() - 1 - d;
            let factor = rem.last().unwrap() / &lc;
            for (j, b) in other.coeffs.iter().enumerate() {
                let idx = shift + j;
                let sub = b * &factor;
                rem[idx] -= sub;
            }
            quot[shift] = factor;
            rem.pop();
        }
        Ok((UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem)))
    }

    /// Exact division; fails with `NonDivisible` when the remainder is nonzero.
    pub fn exact_div(&self, other: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.divmod(other)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonDivisible)
        }
    }

    /// Monic gcd. `gcd(0, 0)` is undefined.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> UniPoly {
        match self.leading_coeff() {
            None => UniPoly::zero(),
            Some(lc) => {
                let inv = Rat::one() / lc;
                self.scale(&inv)
            }
        }
    }

    /// Yun's squarefree decomposition over a characteristic-zero field:
    /// returns `(const, [(s_i, m_i)])` with the `s_i` monic, squarefree and
    /// pairwise coprime, such that `self = const * prod s_i^{m_i}`.
    pub fn squarefree_decomposition(&self) -> Result<(Rat, Vec<(UniPoly, u32)>)> {
        let lc = self.leading_coeff().ok_or(Error::ZeroPolynomial)?.clone();
        let a = self.monic();
        if a.is_constant() {
            return Ok((lc, Vec::new()));
        }
        let da = a.derivative();
        let g = a.gcd(&da)?;
        let mut w = a.exact_div(&g)?;
        let y = da.exact_div(&g)?;
        let mut z = y.sub(&w.derivative());
        let mut out = Vec::new();
        let mut mult = 1u32;
        while !w.is_constant() {
            let s = w.gcd(&z)?;
            if !s.is_constant() {
                out.push((s.clone(), mult));
            }
            w = w.exact_div(&s)?;
            let y_next = z.exact_div(&s)?;
            z = y_next.sub(&w.derivative());
            mult += 1;
        }
        Ok((lc, out))
    }

    /// Monic k-th root of the monic part of `self`: returns `g` with
    /// `g^k = self / lc(self)`, or `None` when no such `g` exists over the
    /// rationals. Coefficients are determined top-down from the leading term.
    pub fn kth_root(&self, k: u32) -> Option<UniPoly> {
        if self.is_zero() || k == 0 {
            return None;
        }
        let deg = self.degree().unwrap();
        if deg % (k as usize) != 0 {
            return None;
        }
        let target = self.monic();
        let n = deg / (k as usize);
        let mut g = vec![Rat::zero(); n + 1];
        g[n] = Rat::one();
        for t in 1..=n {
            let current = UniPoly::from_coeffs(g.clone()).pow(k);
            let want = target.coeff(deg - t);
            let have = current.coeff(deg - t);
            g[n - t] = (want - have) / rat(k as i64);
        }
        let g = UniPoly::from_coeffs(g);
        if g.pow(k) == target {
            Some(g)
        } else {
            None
        }
    }

    /// Multiplicity of the monic factor `s` in `self` (number of exact
    /// divisions by `s` that succeed).
    pub fn multiplicity_of(&self, s: &UniPoly) -> Result<(u32, UniPoly)> {
        if s.is_constant() {
            return Err(Error::PreconditionViolated(
                "multiplicity of a constant factor".into(),
            ));
        }
        let mut count = 0u32;
        let mut rest = self.clone();
        loop {
            match rest.exact_div(s) {
                Ok(q) => {
                    rest = q;
                    count += 1;
                }
                Err(_) => break,
            }
        }
        Ok((count, rest))
    }

    /// True when the polynomial has no repeated roots.
    pub fn is_separable(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(true);
        }
        Ok(self.gcd(&self.derivative())?.is_constant())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = if c < &Rat::zero() { -c.clone() } else { c.clone() };
            if first {
                if c < &Rat::zero() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < &Rat::zero() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag_str = crate::rational::format_rat(&mag);
            match i {
                0 => write!(f, "{mag_str}")?,
                _ => {
                    if mag.is_one() {
                        write!(f, "x")?;
                    } else {
                        write!(f, "{mag_str}*x")?;
                    }
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
