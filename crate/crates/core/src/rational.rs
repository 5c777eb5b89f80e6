//! Exact rational scalars and the generalized binomial coefficient.

use num::bigint::BigInt;
use num::{One, Signed};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator (enforced by the underlying representation).
pub type Rat = num::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a reduced rational. `d` must be nonzero.
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Generalized binomial coefficient `c(c-1)...(c-k+1) / k!` for rational `c`.
pub fn generalized_binomial(c: &Rat, k: u32) -> Rat {
    let mut num = Rat::one();
    let mut factor = c.clone();
    for _ in 0..k {
        num *= &factor;
        factor -= Rat::one();
    }
    let mut fact = BigInt::one();
    for i in 2..=k {
        fact *= BigInt::from(i);
    }
    num / Rat::from_integer(fact)
}

/// Falling factorial `y (y-1) ... (y-k+1)`, i.e. `k! * binom(y, k)`.
pub fn falling_factorial(y: &Rat, k: u32) -> Rat {
    let mut acc = Rat::one();
    let mut factor = y.clone();
    for _ in 0..k {
        acc *= &factor;
        factor -= Rat::one();
    }
    acc
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when `r` is a nonnegative integer.
pub fn is_nonneg_integer(r: &Rat) -> bool {
    r.is_integer() && !r.is_negative()
}

/// Converts to `i64`; panics when out of range (exponents in this crate
/// are small by construction).
pub fn to_i64(r: &Rat) -> i64 {
    assert!(r.is_integer(), "expected an integer, got {r}");
    let n = r.numer();
    i64::try_from(n.clone()).expect("integer out of i64 range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_linear_case() {
        assert_eq!(generalized_binomial(&frac(1, 2), 1), frac(1, 2));
    }

    #[test]
    fn binomial_vanishes_above_integer() {
        assert_eq!(generalized_binomial(&rat(1), 2), rat(0));
    }

    #[test]
    fn binomial_half_choose_two() {
        // (1/2)(-1/2)/2 = -1/8
        assert_eq!(generalized_binomial(&frac(1, 2), 2), frac(-1, 8));
    }

    #[test]
    fn binomial_matches_integer_binomial() {
        // 5 choose 2 = 10
        assert_eq!(generalized_binomial(&rat(5), 2), rat(10));
        assert_eq!(generalized_binomial(&rat(6), 3), rat(20));
        assert_eq!(generalized_binomial(&rat(4), 0), rat(1));
    }

    #[test]
    fn format_reduced() {
        assert_eq!(format_rat(&frac(2, 4)), "1/2");
        assert_eq!(format_rat(&frac(-6, 3)), "-2");
    }
}
