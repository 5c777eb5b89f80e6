//! The `(ρ,σ)`-bracket, proportionality, f-polynomials, the two bracket
//! identities, and the PE / multiplicity machinery.

use crate::geometry::{leading, st, v_deg, DegreeValue, Direction};
use crate::rational::{rat, Rat};
use crate::unipoly::UniPoly;
use crate::weyl::{LaurentElement, Point, Support, WeylElement};
use crate::{Error, Result};
use num::{BigInt, One, Signed, Zero};

/// Outcome of the `(ρ,σ)`-bracket: either the leading term of the
/// commutator at its maximal possible degree, or zero when `P` and `Q` are
/// `(ρ,σ)`-proportional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketOutcome {
    pub proportional: bool,
    pub value: LaurentElement,
}

impl BracketOutcome {
    fn proportional(level: u32) -> Self {
        BracketOutcome { proportional: true, value: LaurentElement::zero(level) }
    }
}

impl std::fmt::Display for BracketOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.proportional {
            write!(f, "0 (proportional)")
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// `P` and `Q` are `(ρ,σ)`-proportional when
/// `v_{ρ,σ}([P,Q]) < v_{ρ,σ}(P) + v_{ρ,σ}(Q) - (ρ+σ)`.
pub fn is_proportional(p: &WeylElement, q: &WeylElement, d: &Direction) -> Result<bool> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroElement);
    }
    let lhs = v_deg(&p.commutator(q), d);
    let bound = v_deg(p, d)
        .add(&v_deg(q, d))
        .add(&DegreeValue::Finite(rat(-(d.rho() + d.sigma()))));
    Ok(lhs < bound)
}

/// `[P,Q]_{ρ,σ}` via the definition: the `(ρ,σ)`-leading term of the true
/// commutator when it attains the maximal degree, zero otherwise.
pub fn bracket(p: &WeylElement, q: &WeylElement, d: &Direction) -> Result<BracketOutcome> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroElement);
    }
    let comm = p.commutator(q);
    if is_proportional(p, q, d)? {
        return Ok(BracketOutcome::proportional(comm.level()));
    }
    Ok(BracketOutcome { proportional: false, value: leading(&comm, d)? })
}

/// `[P,Q]_{ρ,σ}` via the closed formula, valid for `ρ > 0`: for leading
/// terms `λ x^p` of `P` and `μ x^q` of `Q`, the contribution is
/// `λμ (q × p)` at the point `p + q - (1,1)`.
pub fn bracket_formula(p: &WeylElement, q: &WeylElement, d: &Direction) -> Result<BracketOutcome> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !d.in_v0() {
        return Err(Error::NonPositiveRho);
    }
    let lp = leading(p, d)?;
    let lq = leading(q, d)?;
    let one = Point::from_ints(1, 1);
    let mut terms: Vec<(Point, Rat)> = Vec::new();
    for (pp, lam) in lp.terms() {
        for (qq, mu) in lq.terms() {
            let c = lam * mu * qq.cross(pp);
            if c.is_zero() {
                continue;
            }
            terms.push((pp.add(qq).sub(&one), c));
        }
    }
    let value = LaurentElement::from_terms(crate::weyl::lcm_u32(lp.level(), lq.level()), terms)?;
    if value.is_zero() {
        Ok(BracketOutcome::proportional(value.level()))
    } else {
        Ok(BracketOutcome { proportional: false, value })
    }
}

/// The associated polynomial `f^{(l)}_{P,ρ,σ}` for `ρ > 0`: coefficients of
/// `ℓ_{ρ,σ}(P)` read along the progression `st + i·(-σ/ρ, 1)`, so that
/// `ℓ_{ρ,σ}(P) = x^{r/l} y^s f(x^{-σ/ρ} y)` with `(r/l, s) = st_{ρ,σ}(P)`.
pub fn f_poly(p: &impl Support, d: &Direction) -> Result<UniPoly> {
    if p.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !d.in_v0() {
        return Err(Error::NonPositiveRho);
    }
    let lead = leading(p, d)?;
    let start = st(&lead, d)?;
    let step = Point::new(Rat::new(BigInt::from(-d.sigma()), BigInt::from(d.rho())), rat(1));
    let mut coeffs: Vec<Rat> = Vec::new();
    for (pt, c) in lead.terms() {
        let i = &pt.y - &start.y;
        debug_assert!(i.is_integer() && !i.is_negative());
        let i = crate::rational::to_i64(&i) as usize;
        debug_assert_eq!(*pt, start.add(&step.scale(&rat(i as i64))));
        if coeffs.len() <= i {
            coeffs.resize(i + 1, Rat::zero());
        }
        coeffs[i] = c.clone();
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// Rebuilds `x^{r/l} y^s f(x^{-σ/ρ} y)` from a start corner and an
/// f-polynomial; the inverse of [`f_poly`] on leading terms.
pub fn laurent_from_f_poly(
    start: &Point,
    f: &UniPoly,
    d: &Direction,
    level: u32,
) -> Result<LaurentElement> {
    let step = Point::new(Rat::new(BigInt::from(-d.sigma()), BigInt::from(d.rho())), rat(1));
    LaurentElement::from_terms(
        level,
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| (start.add(&step.scale(&rat(i as i64))), c.clone())),
    )
}

/// Witness for the first bracket identity
/// `x^h f_{[P,Q]} = c f_P f_Q + a x f'_P f_Q - b x f'_Q f_P`
/// with `a = v_{ρ,σ}(Q)/ρ`, `b = v_{ρ,σ}(P)/ρ` and `c = st(Q) × st(P)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PEWitness {
    pub h: usize,
    pub c: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Identity1Outcome {
    Witness(PEWitness),
    /// The bracket vanished and the degenerate identity `RHS = 0` held.
    Proportional,
}

/// Verifies the first bracket identity exactly and returns its witness.
/// `IdentityViolation` signals an implementation bug: the identity is a
/// theorem.
pub fn check_identity_1(
    p: &WeylElement,
    q: &WeylElement,
    d: &Direction,
) -> Result<Identity1Outcome> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !d.in_v0() {
        return Err(Error::NonPositiveRho);
    }
    let rho = rat(d.rho());
    let a = v_deg(q, d).finite().unwrap() / &rho;
    let b = v_deg(p, d).finite().unwrap() / &rho;
    let c = st(q, d)?.cross(&st(p, d)?);
    let fp = f_poly(p, d)?;
    let fq = f_poly(q, d)?;
    let rhs = fp
        .mul(&fq)
        .scale(&c)
        .add(&fp.derivative().mul(&fq).mul_xpow(1).scale(&a))
        .sub(&fq.derivative().mul(&fp).mul_xpow(1).scale(&b));
    let out = bracket(p, q, d)?;
    if out.proportional {
        return if rhs.is_zero() {
            Ok(Identity1Outcome::Proportional)
        } else {
            Err(Error::IdentityViolation(format!(
                "zero bracket but rhs = {rhs} for P = {p}, Q = {q} at {d}"
            )))
        };
    }
    let f_br = f_poly(&out.value, d)?;
    let violation = || {
        Error::IdentityViolation(format!(
            "identity fails for P = {p}, Q = {q} at {d}: rhs = {rhs}, f_bracket = {f_br}"
        ))
    };
    let h = match (rhs.valuation(), f_br.valuation()) {
        (Some(hv), Some(0)) => hv,
        _ => return Err(violation()),
    };
    if rhs == f_br.mul_xpow(h) {
        Ok(Identity1Outcome::Witness(PEWitness { h, c }))
    } else {
        Err(violation())
    }
}

/// The common-root data of the second bracket identity:
/// `ℓ_{ρ,σ}(P) = λ_P R^m` and `ℓ_{ρ,σ}(Q) = λ_Q R^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonRoot {
    pub m: u32,
    pub n: u32,
    pub lambda_p: Rat,
    pub lambda_q: Rat,
    pub r: LaurentElement,
}

/// Extracts the common root `R` of the leading terms of a proportional pair
/// with positive `(ρ,σ)`-degrees. Returns `None` when the required root does
/// not exist over the rationals (possible, since the underlying statement
/// holds over an algebraically closed field).
pub fn extract_common_root(
    p: &WeylElement,
    q: &WeylElement,
    d: &Direction,
) -> Result<Option<CommonRoot>> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !d.in_v0() {
        return Err(Error::NonPositiveRho);
    }
    if !is_proportional(p, q, d)? {
        return Err(Error::PreconditionViolated(
            "extract_common_root requires a proportional pair".into(),
        ));
    }
    let vp = v_deg(p, d).finite().unwrap().clone();
    let vq = v_deg(q, d).finite().unwrap().clone();
    if !vp.is_positive() || !vq.is_positive() {
        return Err(Error::PreconditionViolated(
            "extract_common_root requires positive degrees".into(),
        ));
    }
    let ratio = &vp / &vq;
    let m = u32::try_from(ratio.numer().clone()).expect("power out of range");
    let n = u32::try_from(ratio.denom().clone()).expect("power out of range");
    let fp = f_poly(p, d)?;
    let fq = f_poly(q, d)?;
    let g = match fp.kth_root(m) {
        Some(g) => g,
        None => return Ok(None),
    };
    if fq.kth_root(n) != Some(g.clone()) {
        return Ok(None);
    }
    let lambda_p = fp.leading_coeff().unwrap().clone();
    let lambda_q = fq.leading_coeff().unwrap().clone();
    // R starts at st(P)/m; its exponents must land in some (1/l')ℤ × ℕ₀.
    let st_p = st(p, d)?;
    let start = st_p.scale(&Rat::new(BigInt::one(), BigInt::from(m)));
    if !start.y.is_integer() {
        return Ok(None);
    }
    let level = lcm_of_levels(p, q, d, &start);
    let r = match laurent_from_f_poly(&start, &g, d, level) {
        Ok(r) => r,
        Err(_) => return Ok(None),
    };
    // Round trip: the rebuilt powers must equal the true leading terms.
    if r.pow(m).scale(&lambda_p) != leading(p, d)?.embed(level).unwrap()
        || r.pow(n).scale(&lambda_q) != leading(q, d)?.embed(level).unwrap()
    {
        return Ok(None);
    }
    Ok(Some(CommonRoot { m, n, lambda_p, lambda_q, r }))
}

/// Smallest level accommodating both operands, the direction step, and the
/// scaled start corner.
fn lcm_of_levels(p: &impl Support, q: &impl Support, d: &Direction, start: &Point) -> u32 {
    let mut l = num_integer_lcm(p.level() as u64, q.level() as u64);
    l = num_integer_lcm(l, d.rho().unsigned_abs());
    let start_den = u64::try_from(start.x.denom().clone()).unwrap_or(1);
    l = num_integer_lcm(l, start_den);
    u32::try_from(l).expect("level out of range")
}

fn num_integer_lcm(a: u64, b: u64) -> u64 {
    num::Integer::lcm(&a, &b)
}

/// Tests the polynomial equation `PE(k,j,ε,b,c)`:
/// `x^h f^{k+j} = c f^k g + a x (f^k)' g - b x g' f^k` with `a = (j/k)b + ε`.
/// Returns whether some `h ≥ 0` satisfies it, together with that `h`.
pub fn pe_check(
    f: &UniPoly,
    g: &UniPoly,
    k: u32,
    j: u32,
    epsilon: &Rat,
    b: &Rat,
    c: &Rat,
) -> (bool, Option<usize>) {
    assert!(k >= 1 && !f.is_zero() && !g.is_zero());
    let a = Rat::new(BigInt::from(j), BigInt::from(k)) * b + epsilon;
    let fk = f.pow(k);
    let lhs_base = f.pow(k + j);
    let rhs = fk
        .mul(g)
        .scale(c)
        .add(&fk.derivative().mul(g).mul_xpow(1).scale(&a))
        .sub(&g.derivative().mul(&fk).mul_xpow(1).scale(b));
    if rhs.is_zero() {
        return (false, None);
    }
    let (vr, vl) = (rhs.valuation().unwrap(), lhs_base.valuation().unwrap());
    if vr < vl {
        return (false, None);
    }
    let h = vr - vl;
    if rhs == lhs_base.mul_xpow(h) {
        (true, Some(h))
    } else {
        (false, None)
    }
}

/// Verdict of the multiplicity bookkeeping between `f` and `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MultiplicityVerdict {
    Pass,
    /// The displayed squarefree layer violates the expected multiplicity,
    /// or `g/f^j` failed to be separable.
    Fail(String),
}

/// Checks that every squarefree layer `s` of `f` with multiplicity `m` has
/// multiplicity exactly `jm+1` in `g`, and that `g/f^j` is separable.
pub fn multiplicity_report(f: &UniPoly, g: &UniPoly, j: u32) -> Result<MultiplicityVerdict> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.coeff(0).is_zero() || g.coeff(0).is_zero() {
        return Err(Error::ZeroAtOrigin);
    }
    let (_, layers) = f.squarefree_decomposition()?;
    for (s, m) in &layers {
        let want = j * m + 1;
        let (got, _) = g.multiplicity_of(s)?;
        if got != want {
            return Ok(MultiplicityVerdict::Fail(format!(
                "layer {s} has multiplicity {got} in g, expected {want}"
            )));
        }
    }
    let gbar = match g.exact_div(&f.pow(j)) {
        Ok(q) => q,
        Err(_) => {
            return Ok(MultiplicityVerdict::Fail("f^j does not divide g".into()));
        }
    };
    if !gbar.is_separable()? {
        return Ok(MultiplicityVerdict::Fail("g/f^j is not separable".into()));
    }
    Ok(MultiplicityVerdict::Pass)
}

/// True iff `f = μ (x^ρ - λ)^γ` with `γ = deg(f)/ρ` for some rationals
/// `μ ≠ 0`, `λ`: every exponent is a multiple of `ρ` and the recompressed
/// polynomial is a power of a linear factor.
pub fn is_power_of_binomial(f: &UniPoly, rho: u32) -> bool {
    assert!(rho >= 1);
    let deg = match f.degree() {
        None => return false,
        Some(0) => return true, // γ = 0
        Some(deg) => deg,
    };
    if deg % (rho as usize) != 0 {
        return false;
    }
    let gamma = (deg / rho as usize) as u32;
    let mut compressed = vec![Rat::zero(); gamma as usize + 1];
    for (i, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if i % (rho as usize) != 0 {
            return false;
        }
        compressed[i / rho as usize] = c.clone();
    }
    UniPoly::from_coeffs(compressed).kth_root(gamma).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_element;
    use crate::rational::frac;

    fn d(rho: i64, sigma: i64) -> Direction {
        Direction::new(rho, sigma).unwrap()
    }

    fn poly(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    fn figure_element() -> WeylElement {
        parse_element("X^3+X^5+X^6*Y+X*Y^3+X^6*Y^3+X^3*Y^4+X*Y^6+X^4*Y^6+X^2*Y^7").unwrap()
    }

    #[test]
    fn proportionality_examples() {
        let p = figure_element();
        assert!(is_proportional(&p, &p, &d(1, 1)).unwrap());
        let x = WeylElement::x();
        let y = WeylElement::y();
        assert!(!is_proportional(&x, &y, &d(1, 0)).unwrap());
        // [XY, X] = X: v_{1,1}(X) = 1 equals the bound 2+1-2, so not proportional
        let xy = parse_element("X*Y").unwrap();
        assert!(!is_proportional(&xy, &x, &d(1, 1)).unwrap());
        // [XY, (XY)^2 + X] = X has degree 1 < 2+4-2
        let big = parse_element("X^2*Y^2 + X*Y + X").unwrap();
        assert_eq!(big, xy.mul(&xy).add(&x));
        assert!(is_proportional(&xy, &big, &d(1, 1)).unwrap());
    }

    #[test]
    fn bracket_examples() {
        let x = WeylElement::x();
        let y = WeylElement::y();
        let out = bracket(&x, &y, &d(1, 0)).unwrap();
        assert!(!out.proportional);
        assert_eq!(out.value.to_string(), "-1");
        assert_eq!(bracket_formula(&x, &y, &d(1, 0)).unwrap(), out);
        let p = figure_element();
        let self_bracket = bracket(&p, &p, &d(1, 1)).unwrap();
        assert!(self_bracket.proportional);
        // commuting elements are proportional: P against P^2
        let p2 = p.mul(&p);
        let out = bracket(&p, &p2, &d(3, 2)).unwrap();
        assert!(out.proportional);
        assert_eq!(bracket_formula(&p, &p2, &d(3, 2)).unwrap(), out);
    }

    #[test]
    fn f_poly_examples() {
        let p = figure_element();
        assert_eq!(f_poly(&p, &d(3, 2)).unwrap(), poly(&[1, 0, 0, 1]));
        let m = parse_element("5*X^2*Y^3").unwrap();
        assert_eq!(f_poly(&m, &d(1, 0)).unwrap(), poly(&[5]));
        let s = parse_element("X+Y").unwrap();
        assert_eq!(f_poly(&s, &d(1, 1)).unwrap(), poly(&[1, 1]));
    }

    #[test]
    fn f_poly_reconstruction() {
        let p = figure_element();
        let dir = d(3, 2);
        let f = f_poly(&p, &dir).unwrap();
        let start = st(&p, &dir).unwrap();
        let rebuilt = laurent_from_f_poly(&start, &f, &dir, p.level() * 3).unwrap();
        assert_eq!(rebuilt, leading(&p, &dir).unwrap().embed(p.level() * 3).unwrap());
    }

    #[test]
    fn identity_1_examples() {
        // P = X, F = -XY at (1,0): f_P = 1, f_F = -1, a = b = 1, c = -1, h = 0
        let p = WeylElement::x();
        let f = parse_element("-X*Y").unwrap();
        match check_identity_1(&p, &f, &d(1, 0)).unwrap() {
            Identity1Outcome::Witness(w) => {
                assert_eq!(w.h, 0);
                assert_eq!(w.c, rat(-1));
            }
            other => panic!("expected witness, got {other:?}"),
        }
        // P = Q: degenerate identity
        assert_eq!(
            check_identity_1(&p, &p, &d(1, 0)).unwrap(),
            Identity1Outcome::Proportional
        );
        // P = X, Q = Y at (1,0): h = 0, c = -1
        match check_identity_1(&p, &WeylElement::y(), &d(1, 0)).unwrap() {
            Identity1Outcome::Witness(w) => {
                assert_eq!(w.h, 0);
                assert_eq!(w.c, rat(-1));
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn common_root_examples() {
        let s = parse_element("X+Y").unwrap();
        let p = s.pow(2);
        let q = s.pow(3);
        let root = extract_common_root(&p, &q, &d(1, 1)).unwrap().unwrap();
        assert_eq!(root.m, 2);
        assert_eq!(root.n, 3);
        assert_eq!(root.r.to_string(), "x + y");
        // P = Q
        let root = extract_common_root(&p, &p, &d(1, 1)).unwrap().unwrap();
        assert_eq!((root.m, root.n), (1, 1));
        // a non-proportional pair violates the precondition
        let q_bad = parse_element("X^2 + 2*Y^2").unwrap();
        let p4 = s.pow(4);
        assert!(!is_proportional(&p4, &q_bad, &d(1, 1)).unwrap());
        assert!(matches!(
            extract_common_root(&p4, &q_bad, &d(1, 1)),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn pe_examples() {
        // f = g = x-1, k=1, j=0, b=1, c=0: a = ε, and the PE identity
        // x^h f = εx f' g - ... holds with h = 1 exactly when ε = 2
        let f = poly(&[-1, 1]);
        let (holds, h) = pe_check(&f, &f, 1, 0, &rat(2), &rat(1), &rat(0));
        assert!(holds);
        assert_eq!(h, Some(1));
        // f = (x-1)^2, g = x-1, k=1, j=0, ε=1, b=1, c=0 → h = 1
        let f2 = f.pow(2);
        let (holds, h) = pe_check(&f2, &f, 1, 0, &rat(1), &rat(1), &rat(0));
        assert!(holds);
        assert_eq!(h, Some(1));
        // distinct roots: no h works
        let g = poly(&[-2, 1]);
        let (holds, h) = pe_check(&f, &g, 1, 0, &rat(1), &rat(1), &rat(0));
        assert!(!holds);
        assert_eq!(h, None);
    }

    #[test]
    fn multiplicity_examples() {
        let x1 = poly(&[-1, 1]);
        let x2 = poly(&[-2, 1]);
        // f = (x-1)^2, g = (x-1)(x-2), j = 0 → pass
        assert_eq!(
            multiplicity_report(&x1.pow(2), &x1.mul(&x2), 0).unwrap(),
            MultiplicityVerdict::Pass
        );
        // f = x-1, g = (x-1)^3 (x-2), j = 2 → pass (jm+1 = 3)
        assert_eq!(
            multiplicity_report(&x1, &x1.pow(3).mul(&x2), 2).unwrap(),
            MultiplicityVerdict::Pass
        );
        // f = x-1, g = (x-1)^2 (x-2), j = 0 → fail
        assert!(matches!(
            multiplicity_report(&x1, &x1.pow(2).mul(&x2), 0).unwrap(),
            MultiplicityVerdict::Fail(_)
        ));
        // f(0) = 0 is rejected
        assert_eq!(
            multiplicity_report(&poly(&[0, 1]), &x1, 0),
            Err(Error::ZeroAtOrigin)
        );
    }

    #[test]
    fn binomial_power_examples() {
        // (x^3 - 2)^2, expanded as the oracle
        let f = poly(&[-2, 0, 0, 1]).pow(2);
        assert_eq!(f, poly(&[4, 0, 0, -4, 0, 0, 1]));
        assert!(is_power_of_binomial(&f, 3));
        assert!(!is_power_of_binomial(&poly(&[-1, 0, 1]), 1));
        assert!(is_power_of_binomial(&poly(&[7]), 4));
        assert!(is_power_of_binomial(&poly(&[1, 2, 1]), 1));
        assert!(!is_power_of_binomial(&f, 2));
    }

    #[test]
    fn identity_1_with_fractional_c_is_flagged_not_failed() {
        // a fractional-level pair still verifies exactly
        let p = parse_element("X^(1/2)*Y + X").unwrap();
        let q = parse_element("X*Y^2 + Y").unwrap();
        let out = check_identity_1(&p, &q, &d(2, 1));
        assert!(out.is_ok());
    }

    #[test]
    fn pe_check_with_fractional_scalars() {
        let f = poly(&[-1, 1]);
        let (holds, _) = pe_check(&f, &f, 2, 1, &frac(1, 2), &frac(3, 2), &rat(0));
        // not asserting the outcome shape here, only that it is well defined
        let _ = holds;
    }
}
