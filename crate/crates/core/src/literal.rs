//! Parser for quaternion and biquaternion literals.
//!
//! ```text
//! quat  := '-'? term (('+' | '-') term)*
//! term  := coeff unit? | unit
//! coeff := digits ('/' digits)?
//! unit  := 'e1' | 'e2' | 'e3'
//! biquat := quat ';' quat          (real part ; imaginary part)
//! ```
//!
//! Whitespace between tokens is ignored. Repeated units accumulate, so
//! `e1+e1` is `2e1`. Error offsets are byte offsets into the original text.

use crate::error::ParseError;
use crate::quaternion::{Biquaternion, Quaternion};
use crate::scalar::Rational;

const TERM_START: &[&str] = &["rational", "e1", "e2", "e3"];
const AFTER_TERM: &[&str] = &["'+'", "'-'", "end of input"];

pub fn parse_quaternion(text: &str) -> Result<Quaternion, ParseError> {
    QuatParser { text, pos: 0, end: text.len() }.parse()
}

pub fn parse_biquaternion(text: &str) -> Result<Biquaternion, ParseError> {
    let Some(split) = text.find(';') else {
        return Err(ParseError { offset: text.len(), expected: vec!["';'"] });
    };
    let re = QuatParser { text, pos: 0, end: split }.parse()?;
    let im = QuatParser { text, pos: split + 1, end: text.len() }.parse()?;
    Ok(Biquaternion::new(re, im))
}

struct QuatParser<'a> {
    text: &'a str,
    pos: usize,
    end: usize,
}

impl QuatParser<'_> {
    fn peek(&self) -> Option<u8> {
        (self.pos < self.end).then(|| self.text.as_bytes()[self.pos])
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError { offset: self.pos, expected: expected.to_vec() }
    }

    fn parse(mut self) -> Result<Quaternion, ParseError> {
        let mut acc = Quaternion::zero();
        self.skip_ws();
        let mut negative = false;
        if self.peek() == Some(b'-') {
            negative = true;
            self.pos += 1;
            self.skip_ws();
        }
        loop {
            let (coeff, unit) = self.term()?;
            let slot = &mut acc.0[unit];
            if negative {
                *slot -= &coeff;
            } else {
                *slot += &coeff;
            }
            self.skip_ws();
            match self.peek() {
                None => return Ok(acc),
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return Err(self.error(AFTER_TERM)),
            }
            self.pos += 1;
            self.skip_ws();
        }
    }

    fn term(&mut self) -> Result<(Rational, usize), ParseError> {
        match self.peek() {
            Some(b'e') => Ok((Rational::one(), self.unit()?)),
            Some(b) if b.is_ascii_digit() => {
                let (coeff, used) = Rational::parse_prefix(&self.text[..self.end], self.pos)?;
                self.pos += used;
                self.skip_ws();
                if self.peek() == Some(b'e') {
                    Ok((coeff, self.unit()?))
                } else {
                    Ok((coeff, 0))
                }
            }
            _ => Err(self.error(TERM_START)),
        }
    }

    fn unit(&mut self) -> Result<usize, ParseError> {
        let digit = self.text.as_bytes().get(self.pos + 1).filter(|_| self.pos + 1 < self.end);
        let index = match digit {
            Some(b'1') => 1,
            Some(b'2') => 2,
            Some(b'3') => 3,
            _ => return Err(self.error(&["e1", "e2", "e3"])),
        };
        self.pos += 2;
        Ok(index)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn grammar_examples() {
        assert_eq!(
            parse_quaternion("1+2e1-3/2e3").unwrap(),
            Quaternion::new(1, 2, 0, Rational::new(-3, 2).unwrap())
        );
        assert_eq!(parse_quaternion("e2").unwrap(), Quaternion::e2());
        assert_eq!(parse_quaternion(" - e1 + 4 ").unwrap(), Quaternion::new(4, -1, 0, 0));
        assert_eq!(parse_quaternion("e1+e1").unwrap(), Quaternion::new(0, 2, 0, 0));
        assert_eq!(parse_quaternion("0").unwrap(), Quaternion::zero());
        assert_eq!(parse_quaternion("2 e3").unwrap(), Quaternion::new(0, 0, 0, 2));
    }

    #[test]
    fn rejects_malformed() {
        let err = parse_quaternion("1++e1").unwrap_err();
        assert_eq!(err.offset, 2);
        assert_eq!(err.expected, TERM_START);
        assert_eq!(parse_quaternion("").unwrap_err().offset, 0);
        assert_eq!(parse_quaternion("e4").unwrap_err().offset, 0);
        assert_eq!(parse_quaternion("1e").unwrap_err().offset, 1);
        assert_eq!(parse_quaternion("1/0e1").unwrap_err().offset, 2);
        assert_eq!(parse_quaternion("e1e2").unwrap_err().offset, 2);
        assert_eq!(parse_quaternion("+1").unwrap_err().offset, 0);
        assert_eq!(parse_quaternion("1+-e1").unwrap_err().offset, 2);
        assert_eq!(parse_quaternion("1 2").unwrap_err().expected, AFTER_TERM);
        assert!(parse_quaternion("i").is_err());
    }

    #[test]
    fn biquaternion_literals() {
        let x = parse_biquaternion("1+2e1 ; -3e2+1/2e3").unwrap();
        assert_eq!(x.re, Quaternion::new(1, 2, 0, 0));
        assert_eq!(x.im, Quaternion::new(0, 0, -3, Rational::new(1, 2).unwrap()));
        assert_eq!(x.to_string(), "1+2e1 ; -3e2+1/2e3");
        assert_eq!(parse_biquaternion("1").unwrap_err().offset, 1);
        let err = parse_biquaternion("1 ; 2 ; 3").unwrap_err();
        assert_eq!(err.offset, 6);
        assert_eq!(parse_biquaternion("1;").unwrap_err().offset, 2);
    }

    #[test]
    fn serialization_forms() {
        assert_eq!(Quaternion::new(0, -1, 0, 0).to_string(), "-e1");
        assert_eq!(Quaternion::new(-2, 1, 0, Rational::new(-1, 3).unwrap()).to_string(), "-2+e1-1/3e3");
        assert_eq!(Quaternion::zero().to_string(), "0");
    }

    fn rational() -> impl Strategy<Value = Rational> {
        prop_oneof![
            Just(Rational::zero()),
            (-40i64..40, 1i64..12).prop_map(|(n, d)| Rational::new(n, d).unwrap()),
        ]
    }

    fn literal_term() -> impl Strategy<Value = String> {
        (1i64..40, 1i64..9, prop::option::of(1usize..=3), any::<bool>()).prop_map(|(n, d, unit, frac)| {
            let coeff = if frac { format!("{n}/{d}") } else { n.to_string() };
            match unit {
                Some(u) if n == 1 && !frac => format!("e{u}"),
                Some(u) => format!("{coeff}e{u}"),
                None => coeff,
            }
        })
    }

    fn grammar_literal() -> impl Strategy<Value = String> {
        (any::<bool>(), literal_term(), prop::collection::vec((any::<bool>(), literal_term()), 0..6)).prop_map(
            |(lead, first, rest)| {
                let mut s = if lead { format!("-{first}") } else { first };
                for (minus, term) in rest {
                    s.push_str(if minus { " - " } else { "+" });
                    s.push_str(&term);
                }
                s
            },
        )
    }

    proptest! {
        #[test]
        fn serialize_parse_round_trip(coeffs in proptest::array::uniform4(rational())) {
            let q = Quaternion(coeffs);
            prop_assert_eq!(parse_quaternion(&q.to_string()).unwrap(), q);
        }

        #[test]
        fn parse_serialize_reparse(text in grammar_literal()) {
            let q = parse_quaternion(&text).unwrap();
            prop_assert_eq!(parse_quaternion(&q.to_string()).unwrap(), q);
        }
    }
}
