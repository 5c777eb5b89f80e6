//! The elementary automorphisms of `A_1^(l)` and verification of their
//! leading-term behavior.

use crate::geometry::{leading, sample_between, Direction};
use crate::rational::{rat, to_i64, Rat};
use crate::weyl::{LaurentElement, Support, WeylElement};
use crate::{Error, Result};
use num::{BigInt, Signed};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn apply(&self, c: Rat) -> Rat {
        match self {
            Sign::Plus => c,
            Sign::Minus => -c,
        }
    }

    fn flip(&self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// An elementary automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Automorphism {
    /// `X^{1/l'} ↦ X^{1/l'}`, `Y ↦ Y + λ X^{σ/ρ}`, acting at level
    /// `l' = lcm(l, ρ)` where `exponent = σ/ρ` in lowest terms with `ρ > 0`.
    ShiftY { lambda: Rat, exponent: Rat },
    /// `X ↦ X`, `Y ↦ Y ± λ X^n`.
    ShiftYPoly { lambda: Rat, n: u32, sign: Sign },
    /// `X ↦ X ± λ Y^n`, `Y ↦ Y` (level-1 elements only).
    ShiftXPoly { lambda: Rat, n: u32, sign: Sign },
    /// `X ↦ Y`, `Y ↦ -X` (level-1 elements only).
    Rotation,
}

impl Automorphism {
    /// The symbolic inverse, as a composition to apply left-to-right.
    pub fn inverse_sequence(&self) -> Vec<Automorphism> {
        match self {
            Automorphism::ShiftY { lambda, exponent } => vec![Automorphism::ShiftY {
                lambda: -lambda.clone(),
                exponent: exponent.clone(),
            }],
            Automorphism::ShiftYPoly { lambda, n, sign } => vec![Automorphism::ShiftYPoly {
                lambda: lambda.clone(),
                n: *n,
                sign: sign.flip(),
            }],
            Automorphism::ShiftXPoly { lambda, n, sign } => vec![Automorphism::ShiftXPoly {
                lambda: lambda.clone(),
                n: *n,
                sign: sign.flip(),
            }],
            Automorphism::Rotation => {
                vec![Automorphism::Rotation, Automorphism::Rotation, Automorphism::Rotation]
            }
        }
    }
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    num::Integer::lcm(&(a as u64), &(b as u64)) as u32
}

fn int_exponent(x: &Rat) -> Result<u32> {
    if !x.is_integer() || x.is_negative() {
        return Err(Error::PreconditionViolated(
            "this automorphism is defined for nonnegative integer X-exponents".into(),
        ));
    }
    Ok(to_i64(x) as u32)
}

/// Applies the automorphism to a Weyl element: each monomial `X^{i/l} Y^j`
/// is replaced by the product of the generator images, renormalized via the
/// exact Ore multiplication. Powers of the shifted generator are computed by
/// repeated multiplication.
pub fn apply(a: &Automorphism, p: &WeylElement) -> Result<WeylElement> {
    match a {
        Automorphism::ShiftY { lambda, exponent } => {
            let rho = u32::try_from(exponent.denom().clone())
                .expect("exponent denominator too large")
                .max(1);
            let target = lcm_u32(p.level(), rho);
            let shifted = WeylElement::y().add(
                &WeylElement::monomial(rho, exponent.clone(), rat(0), lambda.clone()).unwrap(),
            );
            let mut acc = WeylElement::zero(target);
            for (pt, c) in p.terms() {
                let j = to_i64(&pt.y) as u32;
                let xpart =
                    WeylElement::monomial(target, pt.x.clone(), rat(0), c.clone()).unwrap();
                acc = acc.add(&xpart.mul(&shifted.pow(j)));
            }
            Ok(acc)
        }
        Automorphism::ShiftYPoly { lambda, n, sign } => {
            let shifted = WeylElement::y().add(
                &WeylElement::monomial(1, rat(*n as i64), rat(0), sign.apply(lambda.clone()))
                    .unwrap(),
            );
            let mut acc = WeylElement::zero(p.level());
            for (pt, c) in p.terms() {
                let j = to_i64(&pt.y) as u32;
                let xpart =
                    WeylElement::monomial(p.level(), pt.x.clone(), rat(0), c.clone()).unwrap();
                acc = acc.add(&xpart.mul(&shifted.pow(j)));
            }
            Ok(acc)
        }
        Automorphism::ShiftXPoly { lambda, n, sign } => {
            let shifted = WeylElement::x().add(
                &WeylElement::monomial(1, rat(0), rat(*n as i64), sign.apply(lambda.clone()))
                    .unwrap(),
            );
            let mut acc = WeylElement::zero(p.level());
            for (pt, c) in p.terms() {
                let i = int_exponent(&pt.x)?;
                let ypart = WeylElement::monomial(1, rat(0), pt.y.clone(), c.clone()).unwrap();
                acc = acc.add(&shifted.pow(i).mul(&ypart));
            }
            Ok(acc)
        }
        Automorphism::Rotation => {
            let mut acc = WeylElement::zero(p.level());
            for (pt, c) in p.terms() {
                let i = int_exponent(&pt.x)?;
                let j = to_i64(&pt.y) as u32;
                // X^i Y^j ↦ Y^i (-X)^j
                let sign = if j % 2 == 0 { c.clone() } else { -c.clone() };
                let ypart = WeylElement::y_pow(i);
                let xpart = WeylElement::monomial(1, rat(j as i64), rat(0), sign).unwrap();
                acc = acc.add(&ypart.mul(&xpart));
            }
            Ok(acc)
        }
    }
}

/// Applies the induced commutative automorphism `φ_L` to a Laurent element.
pub fn apply_l(a: &Automorphism, p: &LaurentElement) -> Result<LaurentElement> {
    let mut acc = LaurentElement::zero(p.level());
    match a {
        Automorphism::ShiftY { lambda, exponent } => {
            let rho = u32::try_from(exponent.denom().clone()).expect("exponent denominator");
            let shifted = LaurentElement::y().add(
                &LaurentElement::monomial(rho.max(1), exponent.clone(), rat(0), lambda.clone())
                    .unwrap(),
            );
            for (pt, c) in p.terms() {
                let j = to_i64(&pt.y) as u32;
                let xpart =
                    LaurentElement::monomial(p.level(), pt.x.clone(), rat(0), c.clone()).unwrap();
                acc = acc.add(&xpart.mul(&shifted.pow(j)));
            }
        }
        Automorphism::ShiftYPoly { lambda, n, sign } => {
            let shifted = LaurentElement::y().add(
                &LaurentElement::monomial(1, rat(*n as i64), rat(0), sign.apply(lambda.clone()))
                    .unwrap(),
            );
            for (pt, c) in p.terms() {
                let j = to_i64(&pt.y) as u32;
                let xpart =
                    LaurentElement::monomial(p.level(), pt.x.clone(), rat(0), c.clone()).unwrap();
                acc = acc.add(&xpart.mul(&shifted.pow(j)));
            }
        }
        Automorphism::ShiftXPoly { lambda, n, sign } => {
            let shifted = LaurentElement::x().add(
                &LaurentElement::monomial(1, rat(0), rat(*n as i64), sign.apply(lambda.clone()))
                    .unwrap(),
            );
            for (pt, c) in p.terms() {
                let i = int_exponent(&pt.x)?;
                let ypart =
                    LaurentElement::monomial(1, rat(0), pt.y.clone(), c.clone()).unwrap();
                acc = acc.add(&shifted.pow(i).mul(&ypart));
            }
        }
        Automorphism::Rotation => {
            for (pt, c) in p.terms() {
                let i = int_exponent(&pt.x)?;
                let j = to_i64(&pt.y) as u32;
                let sign = if j % 2 == 0 { c.clone() } else { -c.clone() };
                acc = acc.add(
                    &LaurentElement::monomial(1, rat(j as i64), rat(i as i64), sign).unwrap(),
                );
            }
        }
    }
    Ok(acc)
}

/// Checks Proposition-style leading-term transport for a `ShiftY` matching
/// the direction `d`: `ℓ_d(φ(P)) = φ_L(ℓ_d(P))`, and invariance
/// `ℓ_{d₁}(φ(P)) = ℓ_{d₁}(P)` at sampled directions `d < d₁ < (-1,1)`.
pub fn verify_leading_transport(
    a: &Automorphism,
    p: &WeylElement,
    d: &Direction,
) -> Result<bool> {
    let exponent = match a {
        Automorphism::ShiftY { exponent, .. } => exponent.clone(),
        _ => return Err(Error::DirectionMismatch),
    };
    let expected = Rat::new(BigInt::from(d.sigma()), BigInt::from(d.rho()));
    if d.rho() <= 0 || exponent != expected {
        return Err(Error::DirectionMismatch);
    }
    if p.is_zero() {
        return Ok(true);
    }
    let image = apply(a, p)?;
    let level = image.level();
    let transported = apply_l(a, &leading(p, d)?)?.embed(level).unwrap();
    if leading(&image, d)? != transported {
        return Ok(false);
    }
    for d1 in sample_between(d, &Direction::max_dir()) {
        let lhs = leading(&image, &d1)?;
        let rhs = leading(p, &d1)?.embed(level).unwrap();
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
