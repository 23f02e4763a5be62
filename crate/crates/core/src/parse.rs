//! Textual polynomial syntax.
//!
//! Input accepts sums of products of integer or rational literals, ring
//! variables, powers (`x^3`, `(x - y)^2`) and parentheses. Output is the
//! canonical form `3*x01^2*x11 - 1/2*T*x00`: terms in monomial order,
//! factors in variable order, unit coefficients omitted. Printing then
//! parsing is the identity, and canonical text parses and prints back
//! byte for byte.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::RingRef;

pub fn format_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let ring = p.ring();
    let field = ring.field();
    let mut out = String::new();
    for (idx, t) in p.terms().iter().enumerate() {
        let neg = t.coeff.is_negative();
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = t.coeff.abs();
        let unit = field.is_one(&mag);
        let mut factors: Vec<String> = Vec::new();
        if !unit || t.mono.is_one() {
            factors.push(mag.to_string());
        }
        for (i, &e) in t.mono.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(ring.name(i).to_string()),
                _ => factors.push(format!("{}^{}", ring.name(i), e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(s[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(s[start..i].to_string())));
                continue;
            }
            other => {
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected character {other:?}"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a RingRef,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -&self.term()?
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.offset();
                    let d = self.power()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(Error::Parse {
                            pos: at,
                            msg: "division by a non-constant or zero".into(),
                        });
                    }
                    let field = self.ring.field();
                    let inv = field.inv(d.leading_coeff().unwrap())?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Int(e)) => {
                    self.pos += 1;
                    let e: u32 = e.try_into().or_else(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => self.err("expected a non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                let c = self
                    .ring
                    .field()
                    .from_rational(&BigRational::from_integer(v))?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(Tok::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Polynomial::var(self.ring, i))
                }
                None => self.err(format!("unknown variable {name}")),
            },
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected ')'"),
                }
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_polynomial(ring: &RingRef, s: &str) -> Result<Polynomial> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty polynomial".into(),
        });
    }
    let mut parser = Parser {
        ring,
        toks,
        pos: 0,
        end: s.len(),
    };
    let p = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return parser.err("trailing input");
    }
    Ok(p)
}

/// Parses a point `a:b` on the line as a pair of exact rationals.
pub fn parse_point(s: &str) -> Result<(BigRational, BigRational)> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| Error::InvalidArgument(format!("point {s:?} is not of the form a:b")))?;
    Ok((
        crate::field::parse_rational(a)?,
        crate::field::parse_rational(b)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::ring::{MonomialOrder, Ring};

    #[test]
    fn canonical_text_round_trips() {
        let r = Ring::new(
            [("x01", 1), ("x11", 1), ("T", 1), ("x00", 1)],
            MonomialOrder::Lex,
            Field::Rational,
        )
        .unwrap();
        let s = "3*x01^2*x11 - 1/2*T*x00";
        let p = parse_polynomial(&r, s).unwrap();
        assert_eq!(p.to_string(), s);
    }

    #[test]
    fn accepts_looser_input() {
        let r = Ring::standard(["x", "y"], Field::Rational).unwrap();
        let p = parse_polynomial(&r, "(x - y)^2 + 2 * x*y / 1 - 1/2*x*2").unwrap();
        assert_eq!(p.to_string(), "x^2 + y^2 - x");
        assert_eq!(parse_polynomial(&r, "0").unwrap().to_string(), "0");
        assert_eq!(parse_polynomial(&r, "-1").unwrap().to_string(), "-1");
    }

    #[test]
    fn reports_errors() {
        let r = Ring::standard(["x"], Field::Rational).unwrap();
        assert!(matches!(
            parse_polynomial(&r, "x + z"),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(parse_polynomial(&r, "x / x").is_err());
        assert!(parse_polynomial(&r, "x +").is_err());
        assert!(parse_polynomial(&r, "").is_err());
        assert!(parse_polynomial(&r, "(x").is_err());
    }

    #[test]
    fn prime_field_prints_residues() {
        let r = Ring::standard(["x", "y"], Field::Prime(7)).unwrap();
        let p = parse_polynomial(&r, "-x + 1/2*y").unwrap();
        assert_eq!(p.to_string(), "6*x + 4*y");
        assert_eq!(parse_polynomial(&r, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn points() {
        let (a, b) = parse_point("1:-1").unwrap();
        assert_eq!(a, BigRational::from_integer(1.into()));
        assert_eq!(b, BigRational::from_integer((-1).into()));
        assert!(parse_point("1").is_err());
    }
}
