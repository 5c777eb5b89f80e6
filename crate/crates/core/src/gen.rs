//! Seeded random generators for elements, directions, and polynomials, used
//! by the property suites. Kept deliberately small-valued so that exact
//! arithmetic stays fast while fractional levels are still exercised.

use crate::geometry::{all_directions_bounded, Direction};
use crate::rational::{frac, rat, Rat};
use crate::unipoly::UniPoly;
use crate::weyl::{Point, Support, WeylElement};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const COEFFS: [(i64, i64); 8] =
    [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2), (3, 1), (-3, 1)];

fn coeff(rng: &mut impl Rng) -> Rat {
    let (n, d) = COEFFS[rng.gen_range(0..COEFFS.len())];
    frac(n, d)
}

/// A nonzero element: level in {1,2,3}, at most 5 terms, X-exponents
/// `k/level` with `k ∈ 0..=6`, Y-exponents in `0..=6`, coefficients from a
/// small fixed palette.
pub fn element(rng: &mut impl Rng) -> WeylElement {
    let level = rng.gen_range(1..=3u32);
    loop {
        let n_terms = rng.gen_range(1..=5);
        let terms = (0..n_terms).map(|_| {
            let x = frac(rng.gen_range(0..=6), level as i64);
            let y = rat(rng.gen_range(0..=6));
            (Point::new(x, y), coeff(rng))
        });
        let el = WeylElement::from_terms(level, terms).unwrap();
        if !el.is_zero() {
            return el;
        }
    }
}

/// A nonzero level-1 element with exponents in `0..=bound`.
pub fn element_level1(rng: &mut impl Rng, bound: i64) -> WeylElement {
    loop {
        let n_terms = rng.gen_range(1..=5);
        let terms = (0..n_terms).map(|_| {
            (Point::from_ints(rng.gen_range(0..=bound), rng.gen_range(0..=bound)), coeff(rng))
        });
        let el = WeylElement::from_terms(1, terms).unwrap();
        if !el.is_zero() {
            return el;
        }
    }
}

/// A nonzero `(1,-1)`-homogeneous element of the given integer degree:
/// a sum of terms `X^{deg+j} Y^j`.
pub fn homogeneous_element(rng: &mut impl Rng, deg: i64) -> WeylElement {
    loop {
        let n_terms = rng.gen_range(1..=4);
        let terms = (0..n_terms).map(|_| {
            let j = rng.gen_range(0.max(-deg)..=4);
            (Point::from_ints(deg + j, j), coeff(rng))
        });
        let el = WeylElement::from_terms(1, terms).unwrap();
        if !el.is_zero() {
            return el;
        }
    }
}

/// A random polynomial in `XY` (degree at most 3 in `XY`), i.e. an element
/// of the degree-0 part of the `(1,-1)`-grading.
pub fn polynomial_in_xy(rng: &mut impl Rng) -> WeylElement {
    let xy = WeylElement::x().mul(&WeylElement::y());
    let mut acc = WeylElement::constant(coeff(rng));
    for k in 1..=3u32 {
        if rng.gen_bool(0.6) {
            acc = acc.add(&xy.pow(k).scale(&coeff(rng)));
        }
    }
    acc
}

/// A direction drawn from all of `𝔙̄` with `|ρ|,|σ| ≤ 5`.
pub fn direction(rng: &mut impl Rng) -> Direction {
    let all = all_directions_bounded(5);
    all[rng.gen_range(0..all.len())]
}

/// A direction in `𝔙` (`ρ+σ > 0`).
pub fn direction_strict(rng: &mut impl Rng) -> Direction {
    loop {
        let d = direction(rng);
        if d.is_strict() {
            return d;
        }
    }
}

/// A direction in `𝔙⁰` (`ρ > 0` and `ρ+σ > 0`).
pub fn direction_v0(rng: &mut impl Rng) -> Direction {
    loop {
        let d = direction(rng);
        if d.in_v0() {
            return d;
        }
    }
}

/// A nonzero univariate polynomial with small integer coefficients and
/// degree at most `max_deg`.
pub fn unipoly(rng: &mut impl Rng, max_deg: usize) -> UniPoly {
    loop {
        let deg = rng.gen_range(0..=max_deg);
        let coeffs = (0..=deg)
            .map(|_| {
                if rng.gen_bool(0.7) {
                    rat(rng.gen_range(-3..=3))
                } else {
                    rat(0)
                }
            })
            .collect();
        let p = UniPoly::from_coeffs(coeffs);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A monic polynomial that factors as a product of `x - λ` with small
/// integer roots (possibly repeated), avoiding the root 0.
pub fn split_poly(rng: &mut impl Rng, factors: usize) -> UniPoly {
    let mut acc = UniPoly::one();
    for _ in 0..factors {
        let root = loop {
            let r = rng.gen_range(-3..=3i64);
            if r != 0 {
                break r;
            }
        };
        acc = acc.mul(&UniPoly::from_coeffs(vec![rat(-root), rat(1)]));
    }
    acc
}
