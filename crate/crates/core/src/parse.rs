//! Text parsing for Weyl elements, directions, and points.
//!
//! Element grammar (whitespace insignificant):
//!
//! ```text
//! element  := term (('+'|'-') term)*
//! term     := coeff | [coeff '*'] factor ('*' factor)*
//! coeff    := integer | integer '/' positive-integer
//! factor   := ('X'|'Y') ['^' exponent]
//! exponent := integer | '(' integer '/' positive-integer ')'
//! ```
//!
//! `Y` exponents must be nonnegative integers; `X` exponents may be rational.
//! Terms are normal-ordered on parse, so `"Y*X"` yields `X*Y + 1`.

use crate::geometry::Direction;
use crate::rational::{rat, Rat};
use crate::weyl::{Point, WeylElement};
use crate::{Error, Result};
use num::BigInt;

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { bytes: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", b as char)))
        }
    }

    fn error(&self, message: String) -> Error {
        Error::Parse { offset: self.pos, message }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// Unsigned decimal integer.
    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number".into()));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    /// Signed `integer` or `integer '/' positive-integer`.
    fn number(&mut self) -> Result<Rat> {
        let neg = self.eat(b'-');
        let numer = self.integer()?;
        let numer = if neg { -numer } else { numer };
        if self.eat(b'/') {
            let denom = self.integer()?;
            if denom == BigInt::from(0) {
                return Err(self.error("zero denominator".into()));
            }
            Ok(Rat::new(numer, denom))
        } else {
            Ok(Rat::from_integer(numer))
        }
    }

    /// `integer` or `'(' integer '/' positive-integer ')'`, signed.
    fn exponent(&mut self) -> Result<Rat> {
        if self.eat(b'(') {
            let value = self.number()?;
            self.expect(b')')?;
            Ok(value)
        } else {
            let neg = self.eat(b'-');
            let n = self.integer()?;
            let n = if neg { -n } else { n };
            Ok(Rat::from_integer(n))
        }
    }

    /// `('X'|'Y') ['^' exponent]` as a one-generator element.
    fn factor(&mut self) -> Result<WeylElement> {
        let var = self.peek().ok_or_else(|| self.error("expected 'X' or 'Y'".into()))?;
        if var != b'X' && var != b'Y' {
            return Err(self.error("expected 'X' or 'Y'".into()));
        }
        self.pos += 1;
        let exp = if self.eat(b'^') { self.exponent()? } else { rat(1) };
        if var == b'X' {
            let level = u32::try_from(exp.denom().clone())
                .map_err(|_| self.error("exponent denominator too large".into()))?;
            Ok(WeylElement::monomial(level.max(1), exp, rat(0), rat(1)).unwrap())
        } else {
            if !exp.is_integer() || exp < rat(0) {
                return Err(self.error("Y exponent must be a nonnegative integer".into()));
            }
            Ok(WeylElement::monomial(1, rat(0), exp, rat(1)).unwrap())
        }
    }

    /// One term, already multiplied out (normal-ordered) with its sign.
    fn term(&mut self, negate: bool) -> Result<WeylElement> {
        let next = self.peek().ok_or_else(|| self.error("expected a term".into()))?;
        let mut acc = if next.is_ascii_digit() || next == b'-' {
            let c = self.number()?;
            if !self.eat(b'*') {
                // bare constant term
                let c = if negate { -c } else { c };
                return Ok(WeylElement::constant(c));
            }
            WeylElement::constant(c)
        } else {
            WeylElement::one()
        };
        acc = acc.mul(&self.factor()?);
        while self.eat(b'*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(if negate { acc.neg() } else { acc })
    }
}

/// Parses an element of `A_1^(l)`; the level is the lcm of the exponent
/// denominators encountered (at least 1).
pub fn parse_element(text: &str) -> Result<WeylElement> {
    let mut cur = Cursor::new(text);
    let negate = cur.eat(b'-');
    let mut acc = cur.term(negate)?;
    loop {
        if cur.at_end() {
            return Ok(acc);
        }
        let negate = if cur.eat(b'+') {
            false
        } else if cur.eat(b'-') {
            true
        } else {
            return Err(cur.error("expected '+' or '-'".into()));
        };
        acc = acc.add(&cur.term(negate)?);
    }
}

/// Parses a direction given as `"ρ,σ"` (optionally parenthesized).
pub fn parse_direction(text: &str) -> Result<Direction> {
    let trimmed = text.trim().trim_start_matches('(').trim_end_matches(')');
    let mut parts = trimmed.splitn(2, ',');
    let parse_int = |s: Option<&str>| -> Result<i64> {
        s.map(str::trim)
            .filter(|s| !s.is_empty())
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse {
                offset: 0,
                message: format!("expected a direction \"rho,sigma\", got {text:?}"),
            })
    };
    let rho = parse_int(parts.next())?;
    let sigma = parse_int(parts.next())?;
    Direction::new(rho, sigma)
}

/// Parses a point given as `"(p,q)"` with rational coordinates.
pub fn parse_point(text: &str) -> Result<Point> {
    let bad = || Error::Parse {
        offset: 0,
        message: format!("expected a point \"(x,y)\", got {text:?}"),
    };
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(bad)?;
    let mut parts = inner.splitn(2, ',');
    let coord = |s: Option<&str>| -> Result<Rat> {
        let s = s.ok_or_else(bad)?.trim();
        let mut cur = Cursor::new(s);
        let value = cur.number()?;
        if !cur.at_end() {
            return Err(bad());
        }
        Ok(value)
    };
    let x = coord(parts.next())?;
    let y = coord(parts.next())?;
    Ok(Point::new(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use crate::weyl::Support;

    #[test]
    fn normal_orders_on_parse() {
        let p = parse_element("Y*X").unwrap();
        assert_eq!(p, parse_element("X*Y + 1").unwrap());
        assert_eq!(p.to_string(), "X*Y + 1");
    }

    #[test]
    fn figure_prefix() {
        let p = parse_element("X^3 + X^5 + X^6*Y").unwrap();
        assert_eq!(p.terms().len(), 3);
        assert_eq!(p.to_string(), "X^6*Y + X^5 + X^3");
    }

    #[test]
    fn fractional_levels() {
        let p = parse_element("X^(1/2) + X^(1/3)").unwrap();
        assert_eq!(p.level(), 6);
    }

    #[test]
    fn coefficients_and_signs() {
        let p = parse_element("-2*X + 1/2*Y - 3").unwrap();
        assert_eq!(p.coeff(&Point::from_ints(1, 0)), rat(-2));
        assert_eq!(p.coeff(&Point::from_ints(0, 1)), frac(1, 2));
        assert_eq!(p.coeff(&Point::from_ints(0, 0)), rat(-3));
        assert_eq!(parse_element("-X").unwrap(), WeylElement::x().neg());
        assert_eq!(parse_element("7").unwrap(), WeylElement::constant(rat(7)));
    }

    #[test]
    fn negative_exponents() {
        let p = parse_element("X^-2 + X^(-1/2)").unwrap();
        assert_eq!(p.level(), 2);
        assert_eq!(p.coeff(&Point::from_ints(-2, 0)), rat(1));
        assert_eq!(p.coeff(&Point::new(frac(-1, 2), rat(0))), rat(1));
    }

    #[test]
    fn parse_errors_have_offsets() {
        match parse_element("X^") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_element("Y^(1/2)").is_err());
        assert!(parse_element("X + ").is_err());
        assert!(parse_element("Z").is_err());
        assert!(parse_element("").is_err());
    }

    #[test]
    fn roundtrip_format_parse() {
        for text in [
            "X^6*Y + X^5 + X^3",
            "X*Y + 1",
            "-2*X^6*Y + X^3 + 1",
            "3/2*X^(1/3)*Y^2",
            "X^(1/2)*Y - 1/2",
            "0",
        ] {
            let p = parse_element(text).unwrap();
            assert_eq!(parse_element(&p.to_string()).unwrap(), p, "roundtrip of {text:?}");
        }
    }

    #[test]
    fn parse_zero() {
        assert!(parse_element("0").unwrap().is_zero());
        assert!(parse_element("X - X").unwrap().is_zero());
    }

    #[test]
    fn directions_and_points() {
        assert_eq!(parse_direction("3,2").unwrap(), Direction::new(3, 2).unwrap());
        assert_eq!(parse_direction("(1,-1)").unwrap(), Direction::new(1, -1).unwrap());
        assert!(parse_direction("2,4").is_err());
        assert!(parse_direction("x").is_err());
        assert_eq!(parse_point("(6,3)").unwrap(), Point::from_ints(6, 3));
        assert_eq!(parse_point("(5/3, 2)").unwrap(), Point::new(frac(5, 3), rat(2)));
        assert!(parse_point("6,3").is_err());
    }
}
