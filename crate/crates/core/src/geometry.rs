//! Directions, degree functionals, leading terms, corners, the total order
//! on directions, `Dir(P)`, successors/predecessors, and the
//! subrectangularity predicate.

use crate::rational::{format_rat, rat, Rat};
use crate::weyl::{LaurentElement, Point, Support, WeylElement};
use crate::{Error, Result};
use num::{BigInt, Integer, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// A direction `(ρ,σ)`: a coprime integer pair with `ρ+σ ≥ 0`, totally
/// ordered with `(1,-1)` minimal and `(-1,1)` maximal and all other pairs
/// compared by the sign of the cross product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Direction {
    rho: i64,
    sigma: i64,
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd_i64(b, a % b)
    }
}

impl Direction {
    pub fn new(rho: i64, sigma: i64) -> Result<Self> {
        if (rho == 0 && sigma == 0) || gcd_i64(rho, sigma) != 1 || rho + sigma < 0 {
            return Err(Error::InvalidDirection(rho, sigma));
        }
        Ok(Direction { rho, sigma })
    }

    pub fn rho(&self) -> i64 {
        self.rho
    }

    pub fn sigma(&self) -> i64 {
        self.sigma
    }

    /// Membership in `𝔙`, i.e. `ρ+σ > 0`.
    pub fn is_strict(&self) -> bool {
        self.rho + self.sigma > 0
    }

    /// Membership in `𝔙⁰`, i.e. `ρ+σ > 0` and `ρ > 0`.
    pub fn in_v0(&self) -> bool {
        self.is_strict() && self.rho > 0
    }

    pub fn min_dir() -> Self {
        Direction { rho: 1, sigma: -1 }
    }

    pub fn max_dir() -> Self {
        Direction { rho: -1, sigma: 1 }
    }

    /// `ρ₁σ₂ - σ₁ρ₂`.
    pub fn cross(&self, other: &Direction) -> i64 {
        self.rho * other.sigma - self.sigma * other.rho
    }
}

impl Ord for Direction {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        if *self == Direction::min_dir() || *other == Direction::max_dir() {
            return Ordering::Less;
        }
        if *self == Direction::max_dir() || *other == Direction::min_dir() {
            return Ordering::Greater;
        }
        // Distinct directions in the open range have nonzero cross product.
        if self.cross(other) > 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Direction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.rho, self.sigma)
    }
}

/// A `(ρ,σ)`-degree: `-∞` exactly for the zero element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum DegreeValue {
    NegInfinity,
    Finite(Rat),
}

impl DegreeValue {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            DegreeValue::NegInfinity => None,
            DegreeValue::Finite(v) => Some(v),
        }
    }

    /// Sum, absorbing `-∞`.
    pub fn add(&self, other: &DegreeValue) -> DegreeValue {
        match (self, other) {
            (DegreeValue::Finite(a), DegreeValue::Finite(b)) => DegreeValue::Finite(a + b),
            _ => DegreeValue::NegInfinity,
        }
    }
}

impl fmt::Display for DegreeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeValue::NegInfinity => write!(f, "-inf"),
            DegreeValue::Finite(v) => write!(f, "{}", format_rat(v)),
        }
    }
}

/// `v_{ρ,σ}` of a single point.
pub fn v_point(p: &Point, d: &Direction) -> Rat {
    &p.x * rat(d.rho) + &p.y * rat(d.sigma)
}

/// The `(ρ,σ)`-degree of an element; `-∞` for zero.
pub fn v_deg(el: &impl Support, d: &Direction) -> DegreeValue {
    el.terms()
        .keys()
        .map(|p| v_point(p, d))
        .max()
        .map_or(DegreeValue::NegInfinity, DegreeValue::Finite)
}

/// The `(ρ,σ)`-leading term `ℓ_{ρ,σ}(P)`, returned in `L^(l)`.
pub fn leading(el: &impl Support, d: &Direction) -> Result<LaurentElement> {
    let max = match v_deg(el, d) {
        DegreeValue::NegInfinity => return Err(Error::ZeroElement),
        DegreeValue::Finite(v) => v,
    };
    LaurentElement::from_terms(
        el.level(),
        el.terms()
            .iter()
            .filter(|(p, _)| v_point(p, d) == max)
            .map(|(p, c)| (p.clone(), c.clone())),
    )
}

/// `w(P)`: the support point of `ℓ_{1,-1}(P)` with maximal first coordinate.
pub fn w_corner(el: &impl Support) -> Result<Point> {
    let l = leading(el, &Direction::min_dir())?;
    Ok(l.terms().keys().max_by(|a, b| a.x.cmp(&b.x)).unwrap().clone())
}

/// `w̄(P)`: the support point of `ℓ_{-1,1}(P)` with maximal first coordinate
/// (its support lies on a diagonal segment, so this is also the maximal
/// second coordinate).
pub fn wbar_corner(el: &impl Support) -> Result<Point> {
    let l = leading(el, &Direction::max_dir())?;
    Ok(l.terms().keys().max_by(|a, b| a.x.cmp(&b.x)).unwrap().clone())
}

/// `st_{ρ,σ}(P) = w(ℓ_{ρ,σ}(P))`; undefined at `(1,-1)`.
pub fn st(el: &impl Support, d: &Direction) -> Result<Point> {
    if *d == Direction::min_dir() {
        return Err(Error::ForbiddenDirection(d.rho, d.sigma));
    }
    w_corner(&leading(el, d)?)
}

/// `en_{ρ,σ}(P) = w̄(ℓ_{ρ,σ}(P))`; undefined at `(-1,1)`.
pub fn en(el: &impl Support, d: &Direction) -> Result<Point> {
    if *d == Direction::max_dir() {
        return Err(Error::ForbiddenDirection(d.rho, d.sigma));
    }
    wbar_corner(&leading(el, d)?)
}

/// The unique `(ρ,σ) ∈ 𝔙` with `v_{ρ,σ}(p) = 0`, for `p` off the diagonal:
/// the integer normalization of `±(-p.y, p.x)` with positive coordinate sum.
pub fn dir_of(p: &Point) -> Result<Direction> {
    if p.x == p.y {
        return Err(Error::DiagonalPoint);
    }
    // Clear denominators of (-y, x).
    let denom_lcm: BigInt = p.x.denom().lcm(p.y.denom());
    let scale = Rat::from_integer(denom_lcm);
    let a = (-&p.y * &scale).to_integer();
    let b = (&p.x * &scale).to_integer();
    let g = a.gcd(&b);
    let (mut a, mut b) = (a / &g, b / &g);
    if &a + &b < BigInt::zero() {
        a = -a;
        b = -b;
    }
    let rho = i64::try_from(a).expect("direction component out of i64 range");
    let sigma = i64::try_from(b).expect("direction component out of i64 range");
    Direction::new(rho, sigma)
}

fn unique_points(el: &impl Support) -> Vec<Point> {
    el.terms().keys().cloned().collect()
}

/// Monotone-chain convex hull (counterclockwise); exact arithmetic.
fn convex_hull(mut pts: Vec<Point>) -> Vec<Point> {
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let cross3 = |o: &Point, a: &Point, b: &Point| a.sub(o).cross(&b.sub(o));
    let mut lower: Vec<Point> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && cross3(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= Rat::zero()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && cross3(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= Rat::zero()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Edges of the convex hull of `Supp(P)` as vertex pairs, in hull order.
pub fn hull_edges(el: &impl Support) -> Vec<(Point, Point)> {
    let hull = convex_hull(unique_points(el));
    match hull.len() {
        0 | 1 => Vec::new(),
        2 => vec![(hull[0].clone(), hull[1].clone())],
        _ => (0..hull.len())
            .map(|i| (hull[i].clone(), hull[(i + 1) % hull.len()].clone()))
            .collect(),
    }
}

/// `Dir(P)`: the directions in `𝔙` whose leading support has more than one
/// point, sorted by the direction order. Computed from the convex hull edges.
pub fn directions(el: &impl Support) -> Result<Vec<Direction>> {
    if el.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut dirs: Vec<Direction> = Vec::new();
    for (a, b) in hull_edges(el) {
        let diff = b.sub(&a);
        let d = match dir_of(&diff) {
            Ok(d) => d,
            Err(_) => continue, // diagonal edge: its normals are outside 𝔙
        };
        if !d.is_strict() {
            continue;
        }
        if !dirs.contains(&d) && leading(el, &d)?.terms().len() > 1 {
            dirs.push(d);
        }
    }
    dirs.sort();
    Ok(dirs)
}

/// Brute-force `Dir(P)` over all pairwise support differences; the test
/// oracle for [`directions`].
pub fn directions_bruteforce(el: &impl Support) -> Result<Vec<Direction>> {
    if el.is_zero() {
        return Err(Error::ZeroElement);
    }
    let pts = unique_points(el);
    let mut dirs: Vec<Direction> = Vec::new();
    for p in &pts {
        for q in &pts {
            if p == q {
                continue;
            }
            let d = match dir_of(&q.sub(p)) {
                Ok(d) => d,
                Err(_) => continue,
            };
            if d.is_strict() && !dirs.contains(&d) && leading(el, &d)?.terms().len() > 1 {
                dirs.push(d);
            }
        }
    }
    dirs.sort();
    Ok(dirs)
}

/// `Succ_P(d)`: the minimum of `Dir(P)` strictly greater than `d`.
pub fn succ(el: &impl Support, d: &Direction) -> Result<Option<Direction>> {
    Ok(directions(el)?.into_iter().find(|e| d < e))
}

/// `Pred_P(d)`: the maximum of `Dir(P)` strictly less than `d`.
pub fn pred(el: &impl Support, d: &Direction) -> Result<Option<Direction>> {
    Ok(directions(el)?.into_iter().rev().find(|e| e < d))
}

/// Direct subrectangularity test for a nonzero level-1 element: the vertex
/// `(v_{1,0}(P), v_{0,1}(P))` lies in the support and the support fits in
/// the rectangle it spans.
pub fn is_subrectangular(el: &WeylElement) -> Result<bool> {
    if el.is_zero() {
        return Err(Error::ZeroElement);
    }
    if el.level() != 1 {
        return Err(Error::PreconditionViolated(
            "subrectangularity is defined at level 1".into(),
        ));
    }
    let a = v_deg(el, &Direction::new(1, 0).unwrap());
    let b = v_deg(el, &Direction::new(0, 1).unwrap());
    let (a, b) = (a.finite().unwrap().clone(), b.finite().unwrap().clone());
    let vertex = Point::new(a.clone(), b.clone());
    if !el.terms().contains_key(&vertex) {
        return Ok(false);
    }
    Ok(el.terms().keys().all(|p| {
        !p.x.is_negative() && !p.y.is_negative() && p.x <= a && p.y <= b
    }))
}

/// The `Dir`-criterion for subrectangularity: no direction of `P` lies
/// strictly between `(1,0)` and `(0,1)`. Equivalent to the direct test for
/// elements outside `K[X] ∪ K[Y]`.
pub fn subrectangular_dir_criterion(el: &WeylElement) -> Result<bool> {
    let lo = Direction::new(1, 0).unwrap();
    let hi = Direction::new(0, 1).unwrap();
    Ok(directions(el)?.into_iter().all(|d| !(lo < d && d < hi)))
}

/// True iff neither of the two positive integers divides the other.
pub fn divisibility_filter(p: u64, q: u64) -> bool {
    q % p != 0 && p % q != 0
}

/// A direction strictly between `d1 < d2`: the normalized mediant, except
/// for the antipodal pair `(1,-1) < (-1,1)` where the mediant degenerates
/// and `(1,0)` is used.
pub fn mediant(d1: &Direction, d2: &Direction) -> Direction {
    debug_assert!(d1 < d2);
    let (r, s) = (d1.rho + d2.rho, d1.sigma + d2.sigma);
    if r == 0 && s == 0 {
        return Direction::new(1, 0).unwrap();
    }
    let g = gcd_i64(r, s);
    Direction::new(r / g, s / g).unwrap()
}

/// Three directions strictly between `d1 < d2`: the mediant and one further
/// mediant on each side.
pub fn sample_between(d1: &Direction, d2: &Direction) -> Vec<Direction> {
    let m = mediant(d1, d2);
    let mut out = vec![mediant(d1, &m), m, mediant(&m, d2)];
    out.dedup();
    out
}

/// Every direction in `𝔙̄` with `|ρ|,|σ| ≤ bound`, sorted by the direction
/// order (includes the distinguished `(1,-1)`, `(-1,1)`, `(1,0)`, `(0,1)`,
/// `(1,1)` for `bound ≥ 1`).
pub fn all_directions_bounded(bound: i64) -> Vec<Direction> {
    let mut out = Vec::new();
    for rho in -bound..=bound {
        for sigma in -bound..=bound {
            if let Ok(d) = Direction::new(rho, sigma) {
                out.push(d);
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_element;
    use crate::rational::frac;

    fn d(rho: i64, sigma: i64) -> Direction {
        Direction::new(rho, sigma).unwrap()
    }

    /// The nine-point element of the leading-term example used throughout.
    fn figure_element() -> WeylElement {
        parse_element("X^3+X^5+X^6*Y+X*Y^3+X^6*Y^3+X^3*Y^4+X*Y^6+X^4*Y^6+X^2*Y^7").unwrap()
    }

    #[test]
    fn direction_order() {
        assert_eq!(d(1, -1).cross(&d(2, -1)), 1);
        assert!(d(1, -1) < d(2, -1));
        assert!(d(1, 0) < d(0, 1));
        assert!(d(1, -1) < d(-1, 1));
        assert!(d(1, 1) < d(-1, 1));
        assert!(d(1, -1) < d(1, 1));
        let mut dirs = vec![d(0, 1), d(1, -1), d(1, 1), d(-1, 1), d(1, 0)];
        dirs.sort();
        assert_eq!(dirs, vec![d(1, -1), d(1, 0), d(1, 1), d(0, 1), d(-1, 1)]);
    }

    #[test]
    fn invalid_directions_rejected() {
        assert!(Direction::new(2, -2).is_err());
        assert!(Direction::new(0, 0).is_err());
        assert!(Direction::new(-1, 0).is_err());
        assert!(Direction::new(2, 4).is_err());
    }

    #[test]
    fn degree_examples() {
        let p = figure_element();
        assert_eq!(v_deg(&p, &d(3, 2)), DegreeValue::Finite(rat(24)));
        let m = parse_element("X^2*Y^3").unwrap();
        assert_eq!(v_deg(&m, &d(1, 1)), DegreeValue::Finite(rat(5)));
        assert_eq!(v_deg(&WeylElement::zero(1), &d(1, 1)), DegreeValue::NegInfinity);
    }

    #[test]
    fn leading_examples() {
        let p = figure_element();
        assert_eq!(leading(&p, &d(3, 2)).unwrap().to_string(), "x^6*y^3 + x^4*y^6");
        let m = parse_element("X^2*Y^3").unwrap();
        assert_eq!(leading(&m, &d(1, 0)).unwrap(), m.psi());
        let s = parse_element("X+Y").unwrap();
        assert_eq!(leading(&s, &d(1, 1)).unwrap().to_string(), "x + y");
        assert_eq!(leading(&WeylElement::zero(1), &d(1, 1)), Err(Error::ZeroElement));
    }

    #[test]
    fn corner_examples() {
        let p = figure_element();
        assert_eq!(st(&p, &d(3, 2)).unwrap(), Point::from_ints(6, 3));
        assert_eq!(en(&p, &d(3, 2)).unwrap(), Point::from_ints(4, 6));
        let s = parse_element("X+Y").unwrap();
        assert_eq!(w_corner(&s).unwrap(), Point::from_ints(1, 0));
        assert_eq!(wbar_corner(&s).unwrap(), Point::from_ints(0, 1));
        let m = parse_element("X^3*Y^2").unwrap();
        for dir in [d(1, 1), d(2, -1), d(0, 1)] {
            assert_eq!(st(&m, &dir).unwrap(), Point::from_ints(3, 2));
            assert_eq!(en(&m, &dir).unwrap(), Point::from_ints(3, 2));
        }
        assert_eq!(st(&s, &d(1, -1)), Err(Error::ForbiddenDirection(1, -1)));
        assert_eq!(en(&s, &d(-1, 1)), Err(Error::ForbiddenDirection(-1, 1)));
    }

    #[test]
    fn dir_of_examples() {
        assert_eq!(dir_of(&Point::from_ints(1, 3)).unwrap(), d(3, -1));
        assert_eq!(dir_of(&Point::from_ints(2, -1)).unwrap(), d(1, 2));
        assert_eq!(dir_of(&Point::from_ints(1, 1)), Err(Error::DiagonalPoint));
        assert_eq!(dir_of(&Point::new(frac(1, 2), rat(2))).unwrap(), d(4, -1));
        // v vanishes at the point for a sample of inputs
        for (x, y) in [(1i64, 3i64), (2, -1), (5, 2), (-1, 4), (0, 1), (1, 0)] {
            let p = Point::from_ints(x, y);
            let dir = dir_of(&p).unwrap();
            assert!(dir.is_strict());
            assert_eq!(v_point(&p, &dir), rat(0));
        }
    }

    #[test]
    fn directions_examples() {
        let m = parse_element("X*Y").unwrap();
        assert_eq!(directions(&m).unwrap(), Vec::new());
        let p = figure_element();
        assert!(directions(&p).unwrap().contains(&d(3, 2)));
        let s = parse_element("X+Y").unwrap();
        assert_eq!(directions(&s).unwrap(), vec![d(1, 1)]);
        // hull computation agrees with the brute-force oracle
        assert_eq!(directions(&p).unwrap(), directions_bruteforce(&p).unwrap());
    }

    #[test]
    fn succ_pred_examples() {
        let m = parse_element("X*Y").unwrap();
        assert_eq!(succ(&m, &d(1, 1)).unwrap(), None);
        assert_eq!(pred(&m, &d(1, 1)).unwrap(), None);
        let s = parse_element("X+Y").unwrap();
        assert_eq!(succ(&s, &d(1, 0)).unwrap(), Some(d(1, 1)));
        assert_eq!(succ(&s, &d(1, 1)).unwrap(), None);
        assert_eq!(pred(&s, &d(1, 1)).unwrap(), None);
        assert_eq!(pred(&s, &d(0, 1)).unwrap(), Some(d(1, 1)));
    }

    #[test]
    fn subrectangular_examples() {
        let yes = parse_element("X^2*Y + X + Y").unwrap();
        assert!(is_subrectangular(&yes).unwrap());
        let no = parse_element("X + Y").unwrap();
        assert!(!is_subrectangular(&no).unwrap());
        let m = parse_element("X*Y").unwrap();
        assert!(is_subrectangular(&m).unwrap());
    }

    #[test]
    fn divisibility_examples() {
        assert!(divisibility_filter(4, 6));
        assert!(!divisibility_filter(3, 6));
        assert!(!divisibility_filter(5, 5));
    }

    #[test]
    fn mediant_between() {
        let m = mediant(&d(1, 0), &d(0, 1));
        assert_eq!(m, d(1, 1));
        assert_eq!(mediant(&d(1, -1), &d(-1, 1)), d(1, 0));
        for s in sample_between(&d(1, -1), &d(1, 1)) {
            assert!(d(1, -1) < s && s < d(1, 1));
        }
    }
}
