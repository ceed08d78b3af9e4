//! Recursive-descent parser for character-value literals.
//!
//! Accepts sums and products of integers, fractions, decimals, `sqrt(n)` and
//! the imaginary unit `i`, with parentheses and implicit multiplication, so
//! `(1+sqrt(5))/2`, `3sqrt(5)/2`, `(a+b*sqrt(d))/c` and
//! `-1/2 + (sqrt(3)/2)i` all parse. Whitespace is ignored.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{AlgebraicValue, Real, Surd};
use crate::error::{Error, Result};

/// Parses a value literal into its canonical form.
pub fn parse_value(text: &str) -> Result<AlgebraicValue> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let v = p.sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.expected("end of value"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expected(&self, what: &str) -> Error {
        Error::Syntax {
            position: self.pos,
            expected: what.to_string(),
        }
    }

    fn sum(&mut self) -> Result<AlgebraicValue> {
        let mut acc = if self.eat(b'-') {
            self.product()?.neg()
        } else {
            self.eat(b'+');
            self.product()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.product()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.product()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<AlgebraicValue> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let rhs = self.factor()?;
                    acc = acc
                        .div(&rhs)
                        .map_err(|_| Error::Domain(format!("division by zero at position {at}")))?;
                }
                // implicit multiplication: 3sqrt(5), (sqrt(3)/2)i, 2i
                Some(b'(' | b's' | b'i') => acc = acc.mul(&self.factor()?),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<AlgebraicValue> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.sum()?;
                if !self.eat(b')') {
                    return Err(self.expected("')'"));
                }
                Ok(v)
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(AlgebraicValue::imaginary_unit())
            }
            Some(b's') => self.sqrt(),
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            _ => Err(self.expected("number, 'sqrt(', 'i' or '('")),
        }
    }

    fn sqrt(&mut self) -> Result<AlgebraicValue> {
        if !self.src[self.pos..].starts_with(b"sqrt") {
            return Err(self.expected("'sqrt('"));
        }
        self.pos += 4;
        if !self.eat(b'(') {
            return Err(self.expected("'(' after sqrt"));
        }
        let negative = self.eat(b'-');
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.expected("unsigned integer radicand"));
        }
        let n: u64 = digits.parse().map_err(|_| Error::Syntax {
            position: start,
            expected: "radicand that fits in 64 bits".into(),
        })?;
        if negative || n == 0 {
            let sign = if negative { "-" } else { "" };
            return Err(Error::Domain(format!(
                "square root of non-positive radicand {sign}{n} at position {start}"
            )));
        }
        if !self.eat(b')') {
            return Err(self.expected("')' closing sqrt"));
        }
        Ok(AlgebraicValue::from_surd(Surd::sqrt_of_uint(n)))
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits")
    }

    fn number(&mut self) -> Result<AlgebraicValue> {
        self.skip_ws();
        let start = self.pos;
        let int_part = self.digits().to_string();
        let mut decimal = false;
        if self.src.get(self.pos) == Some(&b'.') {
            decimal = true;
            self.pos += 1;
            self.digits();
        }
        if matches!(self.src.get(self.pos), Some(b'e' | b'E')) {
            decimal = true;
            self.pos += 1;
            if matches!(self.src.get(self.pos), Some(b'+' | b'-')) {
                self.pos += 1;
            }
            if self.digits().is_empty() {
                return Err(self.expected("exponent digits"));
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        if decimal {
            let x: f64 = text.parse().map_err(|_| Error::Syntax {
                position: start,
                expected: "decimal literal".into(),
            })?;
            return Ok(AlgebraicValue::real(Real::Approx(x)));
        }
        let n: BigInt = int_part.parse().map_err(|_| Error::Syntax {
            position: start,
            expected: "integer literal".into(),
        })?;
        Ok(AlgebraicValue::from_surd(Surd::from_rational(
            BigRational::from_integer(n),
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn integer_literal() {
        assert_eq!(parse_value("3").unwrap(), AlgebraicValue::from_integer(3));
        assert_eq!(
            parse_value("  -12 ").unwrap(),
            AlgebraicValue::from_integer(-12)
        );
    }

    #[test]
    fn golden_ratio_literal() {
        let v = parse_value("(1+sqrt(5))/2").unwrap();
        let s = v.re().as_surd().unwrap();
        assert_eq!(s.numerator_a(), &BigInt::from(1));
        assert_eq!(s.numerator_b(), &BigInt::from(1));
        assert_eq!(s.radicand(), 5);
        assert_eq!(s.denominator(), &BigInt::from(2));
        assert!(v.is_real());
    }

    #[test]
    fn equivalent_spellings() {
        let phi = parse_value("(1+sqrt(5))/2").unwrap();
        for text in [
            "1/2 + sqrt(5)/2",
            "(1 + 1*sqrt(5))/2",
            "1/2+1sqrt(5)/2",
            "(2+2*sqrt(5))/4",
        ] {
            assert_eq!(parse_value(text).unwrap(), phi, "{text}");
        }
        assert_eq!(
            parse_value("3sqrt(20)/2").unwrap(),
            parse_value("3*sqrt(5)").unwrap()
        );
    }

    #[test]
    fn sixth_root_of_unity() {
        let z = parse_value("-1/2 + (sqrt(3)/2)i").unwrap();
        assert!(!z.is_real());
        assert_eq!(z.norm_sqr(), Real::from_integer(1));
        assert_eq!(parse_value("-1/2 + sqrt(3)/2 i").unwrap(), z);
    }

    #[test]
    fn decimals_are_approximate() {
        let v = parse_value("1.6180339887498949").unwrap();
        assert!(!v.is_exact());
        assert!(!parse_value("2.5e-1").unwrap().is_exact());
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_value("1 + ") {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_value("(1+sqrt(5)/2"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_value("sqrt(2.5)"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(parse_value("3 x"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_value(""), Err(Error::Syntax { .. })));
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(parse_value("sqrt(-5)"), Err(Error::Domain(_))));
        assert!(matches!(parse_value("sqrt(0)"), Err(Error::Domain(_))));
        assert!(matches!(parse_value("1/0"), Err(Error::Domain(_))));
    }

    fn arb_surd() -> impl Strategy<Value = Surd> {
        (-50i64..50, -50i64..50, 1u64..40, 1i64..30)
            .prop_map(|(a, b, d, c)| Surd::new(a, b, d, c).unwrap())
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(re in arb_surd(), im in arb_surd()) {
            let v = AlgebraicValue::new(Real::Exact(re.clone()), Real::Exact(im));
            prop_assert_eq!(parse_value(&v.to_string()).unwrap(), v);
            let r = AlgebraicValue::from_surd(re);
            prop_assert_eq!(parse_value(&r.to_string()).unwrap(), r);
        }

        #[test]
        fn canonicalisation_is_idempotent(s in arb_surd()) {
            let again = Surd::from_parts(s.rational_part(), s.surd_part(), s.radicand());
            prop_assert_eq!(again, s);
        }

        #[test]
        fn exact_abs_squares_to_norm(re in arb_surd(), im in arb_surd()) {
            let v = AlgebraicValue::new(Real::Exact(re), Real::Exact(im));
            let a = super::super::abs_value(&v);
            let norm = v.norm_sqr();
            if a.is_exact() {
                prop_assert_eq!(a.re().mul(a.re()), norm);
            } else {
                let n = norm.to_f64();
                prop_assert!((a.re().to_f64().powi(2) - n).abs() <= 1e-9 * n.max(1.0));
            }
        }

        #[test]
        fn pow_real_is_multiplicative_in_exponent(x in 0.0f64..10.0, s in 0.0f64..64.0, t in 0.0f64..64.0) {
            let v = AlgebraicValue::from_f64(x);
            let lhs = super::super::pow_real(&v, s + t).unwrap();
            let rhs = super::super::pow_real(&v, s).unwrap() * super::super::pow_real(&v, t).unwrap();
            let scale = lhs.abs().max(rhs.abs());
            prop_assert!((lhs - rhs).abs() <= 4.0 * 1e-9 * scale.max(f64::MIN_POSITIVE));
        }
    }
}
