//! Elements of the fractional Weyl algebra `A_1^(l)` and of its commutative
//! Laurent shadow `L^(l)`, with exact normal-ordered arithmetic.
//!
//! Canonical storage is the normal-ordered basis `X^{i/l} Y^j`, which is also
//! the `Ψ`-image basis; `psi` is therefore a structural copy and `mul` is the
//! only place where noncommutativity lives. Binary operations between
//! different levels silently embed both operands to the lcm of the levels.

use crate::rational::{falling_factorial, format_rat, generalized_binomial, rat, to_i64, Rat};
use crate::{Error, Result};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A support point `(i/l, j)`: exponent of `X` (rational, denominator
/// dividing the owning element's level) and exponent of `Y` (a nonnegative
/// integer, stored as a rational for uniform exact arithmetic).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point { x: rat(x), y: rat(y) }
    }

    pub fn add(&self, other: &Point) -> Point {
        Point::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn scale(&self, c: &Rat) -> Point {
        Point::new(&self.x * c, &self.y * c)
    }

    /// `self × other = x1*y2 - y1*x2`.
    pub fn cross(&self, other: &Point) -> Rat {
        &self.x * &other.y - &self.y * &other.x
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", format_rat(&self.x), format_rat(&self.y))
    }
}

/// Read-only view shared by Weyl and Laurent elements; all of the support
/// geometry is defined against this interface.
pub trait Support {
    fn level(&self) -> u32;
    fn terms(&self) -> &BTreeMap<Point, Rat>;

    fn is_zero(&self) -> bool {
        self.terms().is_empty()
    }

    fn support(&self) -> Vec<Point> {
        self.terms().keys().cloned().collect()
    }
}

pub(crate) fn lcm_u32(a: u32, b: u32) -> u32 {
    a / gcd_u32(a, b) * b
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

/// Validates a term map: `y` must be a nonnegative integer and `x * level`
/// an integer. Negative `x` is accepted (the algebra contains `X^{-1/l}`).
fn validate_terms(
    level: u32,
    terms: impl IntoIterator<Item = (Point, Rat)>,
) -> Result<BTreeMap<Point, Rat>> {
    let l = rat(level as i64);
    let mut map: BTreeMap<Point, Rat> = BTreeMap::new();
    for (p, c) in terms {
        if c.is_zero() {
            continue;
        }
        if !p.y.is_integer() || p.y.is_negative() {
            return Err(Error::PreconditionViolated(format!(
                "Y-exponent {} must be a nonnegative integer",
                format_rat(&p.y)
            )));
        }
        if !(&p.x * &l).is_integer() {
            return Err(Error::PreconditionViolated(format!(
                "X-exponent {} is not supported at level {level}",
                format_rat(&p.x)
            )));
        }
        let entry = map.entry(p).or_insert_with(Rat::zero);
        *entry += c;
    }
    map.retain(|_, c| !c.is_zero());
    Ok(map)
}

macro_rules! element_common {
    ($t:ident) => {
        impl $t {
            pub fn zero(level: u32) -> Self {
                assert!(level >= 1);
                $t { level, terms: BTreeMap::new() }
            }

            pub fn from_terms(
                level: u32,
                terms: impl IntoIterator<Item = (Point, Rat)>,
            ) -> Result<Self> {
                assert!(level >= 1);
                Ok($t { level, terms: validate_terms(level, terms)? })
            }

            /// `c * X^x Y^y` (lowercase generators for the Laurent side).
            pub fn monomial(level: u32, x: Rat, y: Rat, c: Rat) -> Result<Self> {
                Self::from_terms(level, [(Point::new(x, y), c)])
            }

            pub fn constant(c: Rat) -> Self {
                Self::from_terms(1, [(Point::from_ints(0, 0), c)]).unwrap()
            }

            pub fn one() -> Self {
                Self::constant(num::One::one())
            }

            pub fn coeff(&self, p: &Point) -> Rat {
                self.terms.get(p).cloned().unwrap_or_else(Rat::zero)
            }

            /// Same element viewed at the larger level `h`; requires `level | h`.
            pub fn embed(&self, h: u32) -> Result<Self> {
                if h % self.level != 0 {
                    return Err(Error::NotDivisible(self.level, h));
                }
                Ok($t { level: h, terms: self.terms.clone() })
            }

            pub fn neg(&self) -> Self {
                $t {
                    level: self.level,
                    terms: self.terms.iter().map(|(p, c)| (p.clone(), -c.clone())).collect(),
                }
            }

            pub fn scale(&self, c: &Rat) -> Self {
                if c.is_zero() {
                    return Self::zero(self.level);
                }
                $t {
                    level: self.level,
                    terms: self.terms.iter().map(|(p, k)| (p.clone(), k * c)).collect(),
                }
            }

            pub fn add(&self, other: &Self) -> Self {
                let level = lcm_u32(self.level, other.level);
                let mut terms = self.terms.clone();
                for (p, c) in &other.terms {
                    let entry = terms.entry(p.clone()).or_insert_with(Rat::zero);
                    *entry += c;
                }
                terms.retain(|_, c| !c.is_zero());
                $t { level, terms }
            }

            pub fn sub(&self, other: &Self) -> Self {
                self.add(&other.neg())
            }

            pub fn pow(&self, k: u32) -> Self {
                let mut acc = Self::one();
                for _ in 0..k {
                    acc = acc.mul(self);
                }
                acc
            }
        }

        // Equality is semantic: the level records the representation lattice
        // `(1/l)ℤ`, and embedding is the identity on terms, so two elements
        // are equal exactly when their term maps coincide.
        impl PartialEq for $t {
            fn eq(&self, other: &Self) -> bool {
                self.terms == other.terms
            }
        }

        impl Eq for $t {}

        impl Support for $t {
            fn level(&self) -> u32 {
                self.level
            }

            fn terms(&self) -> &BTreeMap<Point, Rat> {
                &self.terms
            }
        }
    };
}

/// A normal-ordered element of `A_1^(l)`.
#[derive(Debug, Clone)]
pub struct WeylElement {
    level: u32,
    terms: BTreeMap<Point, Rat>,
}

/// An element of the commutative algebra `L^(l) = K[x^{1/l}, x^{-1/l}, y]`.
#[derive(Debug, Clone)]
pub struct LaurentElement {
    level: u32,
    terms: BTreeMap<Point, Rat>,
}

element_common!(WeylElement);
element_common!(LaurentElement);

impl WeylElement {
    /// `X^e` at the smallest level carrying the exponent.
    pub fn x_pow(e: Rat) -> Self {
        let level = u32::try_from(e.denom().clone()).expect("exponent denominator too large");
        Self::monomial(level, e, Rat::zero(), num::One::one()).unwrap()
    }

    pub fn x() -> Self {
        Self::x_pow(rat(1))
    }

    pub fn y_pow(j: u32) -> Self {
        Self::monomial(1, Rat::zero(), rat(j as i64), num::One::one()).unwrap()
    }

    pub fn y() -> Self {
        Self::y_pow(1)
    }

    /// Exact normal-ordered Ore product. On monomials,
    /// `(X^a Y^b)(X^c Y^d) = Σ_k k!·C(b,k)·C(c,k) X^{a+c-k} Y^{b+d-k}`,
    /// extended bilinearly; operands at different levels are embedded first.
    pub fn mul(&self, other: &Self) -> Self {
        let level = lcm_u32(self.level, other.level);
        let mut terms: BTreeMap<Point, Rat> = BTreeMap::new();
        for (p, lam) in &self.terms {
            let b = to_i64(&p.y);
            for (q, mu) in &other.terms {
                for k in 0..=b {
                    let k32 = k as u32;
                    let coef =
                        lam * mu * falling_factorial(&p.y, k32) * generalized_binomial(&q.x, k32);
                    if coef.is_zero() {
                        continue;
                    }
                    let point =
                        Point::new(&p.x + &q.x - rat(k), &p.y + &q.y - rat(k));
                    let entry = terms.entry(point).or_insert_with(Rat::zero);
                    *entry += coef;
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        WeylElement { level, terms }
    }

    /// `[P, Q] = PQ - QP`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// The image under `Ψ^(l)`: a basis-wise copy into `L^(l)`.
    pub fn psi(&self) -> LaurentElement {
        LaurentElement { level: self.level, terms: self.terms.clone() }
    }
}

impl LaurentElement {
    pub fn x_pow(e: Rat) -> Self {
        let level = u32::try_from(e.denom().clone()).expect("exponent denominator too large");
        Self::monomial(level, e, Rat::zero(), num::One::one()).unwrap()
    }

    pub fn x() -> Self {
        Self::x_pow(rat(1))
    }

    pub fn y_pow(j: u32) -> Self {
        Self::monomial(1, Rat::zero(), rat(j as i64), num::One::one()).unwrap()
    }

    pub fn y() -> Self {
        Self::y_pow(1)
    }

    /// Commutative product: exponents add.
    pub fn mul(&self, other: &Self) -> Self {
        let level = lcm_u32(self.level, other.level);
        let mut terms: BTreeMap<Point, Rat> = BTreeMap::new();
        for (p, lam) in &self.terms {
            for (q, mu) in &other.terms {
                let coef = lam * mu;
                let entry = terms.entry(p.add(q)).or_insert_with(Rat::zero);
                *entry += coef;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentElement { level, terms }
    }
}

/// Renders terms sorted by `(xExp, yExp)` descending, in the element grammar.
/// `upper` selects the Weyl spelling `X, Y` over the Laurent `x, y`.
pub(crate) fn format_terms(terms: &BTreeMap<Point, Rat>, upper: bool) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let (xv, yv) = if upper { ("X", "Y") } else { ("x", "y") };
    let mut out = String::new();
    for (i, (p, c)) in terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        let mag = if neg { -c.clone() } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mut factors: Vec<String> = Vec::new();
        for (var, e) in [(xv, &p.x), (yv, &p.y)] {
            if e.is_zero() {
                continue;
            }
            if e.is_one() {
                factors.push(var.to_string());
            } else if e.is_integer() {
                factors.push(format!("{var}^{}", e.numer()));
            } else {
                factors.push(format!("{var}^({}/{})", e.numer(), e.denom()));
            }
        }
        if factors.is_empty() {
            out.push_str(&format_rat(&mag));
        } else {
            if !mag.is_one() {
                out.push_str(&format_rat(&mag));
                out.push('*');
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_terms(&self.terms, true))
    }
}

impl fmt::Display for LaurentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_terms(&self.terms, false))
    }
}
