//! Parser for polynomial literals like `x1^2*x2 + 2*x2^3 - (1/2)*x1^(7/2)`.
//!
//! Grammar (whitespace-insensitive):
//!   expr     := ['+'|'-'] term (('+'|'-') term)*
//!   term     := factor ('*' factor)*
//!   factor   := atom ['^' exponent]
//!   atom     := 'x1' | 'x2' | int ['/' int] | '(' expr ')'
//!   exponent := int | '(' int ['/' int] ')'
//!
//! Exponents are nonnegative; a parenthesized subexpression admits only
//! integer powers. `/` joins integer literals only.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::CoreError;
use crate::poly::{Exponent2, PuiseuxPoly};
use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Int(BigInt),
    Var1,
    Var2,
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, CoreError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            b'-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            b'*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            b'^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            b'/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            b'(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            b')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = BigInt::parse_bytes(&bytes[start..i], 10).ok_or(CoreError::Parse {
                    pos: start,
                    msg: "bad integer literal".into(),
                })?;
                toks.push((Tok::Int(n), start));
            }
            b'x' => {
                if i + 1 < bytes.len() && (bytes[i + 1] == b'1' || bytes[i + 1] == b'2') {
                    toks.push((
                        if bytes[i + 1] == b'1' { Tok::Var1 } else { Tok::Var2 },
                        i,
                    ));
                    i += 2;
                } else {
                    return Err(CoreError::Parse {
                        pos: i,
                        msg: "expected x1 or x2".into(),
                    });
                }
            }
            _ => {
                return Err(CoreError::Parse {
                    pos: i,
                    msg: format!("unexpected character '{}'", b as char),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), CoreError> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(CoreError::Parse {
                pos: self.here(),
                msg: format!("expected {what}"),
            })
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, CoreError> {
        Err(CoreError::Parse {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn int(&mut self, what: &str) -> Result<BigInt, CoreError> {
        match self.peek() {
            Some(Tok::Int(_)) => {
                if let Some(Tok::Int(n)) = self.bump() {
                    Ok(n)
                } else {
                    unreachable!()
                }
            }
            Some(Tok::Minus) => self.err(format!("negative {what} not allowed")),
            _ => self.err(format!("expected {what}")),
        }
    }

    /// `int ['/' int]`, already knowing the next token is an integer.
    fn rational_literal(&mut self) -> Result<Rat, CoreError> {
        let num = self.int("integer")?;
        if self.peek() == Some(&Tok::Slash) {
            self.pos += 1;
            let den_pos = self.here();
            let den = self.int("denominator")?;
            if den.is_zero() {
                return Err(CoreError::Parse {
                    pos: den_pos,
                    msg: "zero denominator".into(),
                });
            }
            Ok(Rat::new(num, den))
        } else {
            Ok(Rat::from_integer(num))
        }
    }

    fn exponent(&mut self) -> Result<Rat, CoreError> {
        match self.peek() {
            Some(Tok::Int(_)) => self.rational_exponent_bare(),
            Some(Tok::LParen) => {
                self.pos += 1;
                let r = match self.peek() {
                    Some(Tok::Minus) => return self.err("negative exponent not allowed"),
                    _ => self.rational_literal()?,
                };
                self.expect(Tok::RParen, "')' after exponent")?;
                Ok(r)
            }
            Some(Tok::Minus) => self.err("negative exponent not allowed"),
            _ => self.err("expected exponent"),
        }
    }

    /// A bare exponent is a plain integer; `x1^3/2` stays `(x1^3)/2` and is
    /// rejected later where `/` is checked, so require parens for fractions.
    fn rational_exponent_bare(&mut self) -> Result<Rat, CoreError> {
        let n = self.int("exponent")?;
        Ok(Rat::from_integer(n))
    }

    fn atom(&mut self) -> Result<PuiseuxPoly, CoreError> {
        match self.peek() {
            Some(Tok::Var1) | Some(Tok::Var2) => {
                let var2 = self.peek() == Some(&Tok::Var2);
                self.pos += 1;
                let exp = if self.peek() == Some(&Tok::Caret) {
                    self.pos += 1;
                    self.exponent()?
                } else {
                    Rat::from_integer(BigInt::from(1))
                };
                let (e1, e2) = if var2 {
                    (Rat::zero(), exp)
                } else {
                    (exp, Rat::zero())
                };
                Ok(PuiseuxPoly::monomial(
                    Exponent2::new(e1, e2)?,
                    Rat::from_integer(BigInt::from(1)),
                ))
            }
            Some(Tok::Int(_)) => {
                let r = self.rational_literal()?;
                Ok(PuiseuxPoly::constant(r))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                if self.peek() == Some(&Tok::Caret) {
                    self.pos += 1;
                    let pos = self.here();
                    let e = self.exponent()?;
                    if !e.is_integer() {
                        return Err(CoreError::Parse {
                            pos,
                            msg: "fractional power of a subexpression".into(),
                        });
                    }
                    let n = e.to_integer().to_u32().filter(|n| *n <= 64).ok_or(
                        CoreError::Parse {
                            pos,
                            msg: "power of a subexpression must be an integer in 0..=64".into(),
                        },
                    )?;
                    Ok(inner.pow(n))
                } else {
                    Ok(inner)
                }
            }
            _ => self.err("expected x1, x2, a number, or '('"),
        }
    }

    fn term(&mut self) -> Result<PuiseuxPoly, CoreError> {
        let mut acc = self.atom()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.atom()?;
                    acc = acc.mul(&rhs);
                }
                Some(Tok::Slash) => {
                    return self.err("'/' is only allowed between integer literals");
                }
                Some(Tok::Caret) => {
                    return self.err("unexpected '^' (powers bind to a single factor)");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn expr(&mut self) -> Result<PuiseuxPoly, CoreError> {
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            negate = true;
        } else if self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }
}

/// Parse a polynomial literal in the variables `x1`, `x2`.
pub fn parse_poly(input: &str) -> Result<PuiseuxPoly, CoreError> {
    let toks = lex(input)?;
    if toks.is_empty() {
        return Err(CoreError::Parse {
            pos: 0,
            msg: "empty input".into(),
        });
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: input.len(),
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_i};

    fn e(a: i64, b: i64) -> Exponent2 {
        Exponent2::new(rat_i(a), rat_i(b)).unwrap()
    }

    #[test]
    fn parses_plain_terms() {
        let p = parse_poly("x1^2*x2 + 2*x2^3 - x1*x2").unwrap();
        assert_eq!(p.coeff(&e(2, 1)), rat_i(1));
        assert_eq!(p.coeff(&e(0, 3)), rat_i(2));
        assert_eq!(p.coeff(&e(1, 1)), rat_i(-1));
        assert_eq!(p.num_terms(), 3);
    }

    #[test]
    fn parses_rational_coefficients_and_exponents() {
        let p = parse_poly("(1/2)*x1^(7/2) - 3/4*x2").unwrap();
        let ex = Exponent2::new(rat(7, 2), rat_i(0)).unwrap();
        assert_eq!(p.coeff(&ex), rat(1, 2));
        assert_eq!(p.coeff(&e(0, 1)), rat(-3, 4));
    }

    #[test]
    fn parses_sheared_blocks() {
        let p = parse_poly("x1*(x2 + x1^2)^3 + x1^8").unwrap();
        let q = parse_poly("x1*x2^3 + 3*x1^3*x2^2 + 3*x1^5*x2 + x1^7 + x1^8").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rejects_negative_exponents() {
        let err = parse_poly("x1^-2").unwrap_err();
        match err {
            CoreError::Parse { msg, .. } => assert!(msg.contains("negative exponent")),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_poly("x2^(-1/2)").is_err());
    }

    #[test]
    fn rejects_stray_division_and_trailing_input() {
        assert!(parse_poly("x1/2").is_err());
        assert!(parse_poly("x1 + ").is_err());
        assert!(parse_poly("x1 x2").is_err());
        assert!(parse_poly("").is_err());
    }

    #[test]
    fn roundtrips_through_render() {
        for src in [
            "x1^2*x2 + 2*x2^3 - x1*x2",
            "x1*(x2 + x1^2)^3 + x1^8",
            "(1/2)*x1^(7/2) - 3/4*x2 + 1",
        ] {
            let p = parse_poly(src).unwrap();
            let q = parse_poly(&p.render()).unwrap();
            assert_eq!(p, q);
        }
    }
}
