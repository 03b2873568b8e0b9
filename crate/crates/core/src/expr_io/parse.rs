use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lie::{AlgebraSpec, BasisElement, MultiIndex, Sl2Root};
use crate::poly::{Monomial, Polynomial};
use crate::Scalar;

struct Parser<'s> {
    src: &'s [u8],
    pos: usize,
}

impl<'s> Parser<'s> {
    fn new(s: &'s str) -> Self {
        Parser {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn digits(&mut self) -> Result<&'s str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn uint(&mut self) -> Result<u32> {
        let start = self.pos;
        let d = self.digits()?;
        d.parse().map_err(|_| Error::Syntax {
            pos: start,
            msg: format!("{d} is too large"),
        })
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let start = self.pos;
        let d = self.digits()?;
        let v: i64 = d.parse().map_err(|_| Error::Syntax {
            pos: start,
            msg: format!("{d} is too large"),
        })?;
        Ok(if neg { -v } else { v })
    }

    fn ident(&mut self) -> &'s str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).expect("ascii letters")
    }

    fn index_list(&mut self) -> Result<Vec<u32>> {
        let mut out = vec![self.uint()?];
        while self.eat(b',') {
            out.push(self.uint()?);
        }
        Ok(out)
    }

    fn bracketed_int(&mut self) -> Result<i64> {
        self.expect(b'[')?;
        let v = self.int()?;
        self.expect(b']')?;
        Ok(v)
    }

    fn bracketed_multi(&mut self) -> Result<MultiIndex> {
        self.expect(b'[')?;
        let v = self.index_list()?;
        self.expect(b']')?;
        Ok(MultiIndex::new(v))
    }

    fn basis(&mut self, alg: AlgebraSpec) -> Result<BasisElement> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let name = self.ident();
        let b = match name {
            "e" => BasisElement::E(self.bracketed_int()?),
            "z" => BasisElement::Z,
            "x" => {
                let exp = self.bracketed_multi()?;
                if self.ident() != "d" {
                    return self.err("expected 'd[k]' after x[...]");
                }
                self.expect(b'[')?;
                let k = self.uint()?;
                self.expect(b']')?;
                BasisElement::W {
                    exp,
                    dir: dir(k, self.pos)?,
                }
            }
            "SA" => BasisElement::SA(self.bracketed_multi()?),
            "SB" => {
                self.expect(b'[')?;
                let exp = MultiIndex::new(self.index_list()?);
                self.expect(b';')?;
                let k = self.uint()?;
                self.expect(b']')?;
                BasisElement::SB {
                    exp,
                    dir: dir(k, self.pos)?,
                }
            }
            "DH" => BasisElement::DH(self.bracketed_multi()?),
            "DK" => BasisElement::DK(self.bracketed_multi()?),
            "E" | "F" | "H" => {
                let root = match name {
                    "E" => Sl2Root::E,
                    "F" => Sl2Root::F,
                    _ => Sl2Root::H,
                };
                BasisElement::Loop {
                    root,
                    power: self.bracketed_int()?,
                }
            }
            "X" => BasisElement::X(self.bracketed_int()?),
            "Y" => BasisElement::Y,
            "" => {
                self.pos = start;
                return self.err("expected a variable");
            }
            other => {
                self.pos = start;
                return self.err(format!("unknown variable family {other:?}"));
            }
        };
        alg.validate(&b)?;
        Ok(b)
    }

    fn number(&mut self) -> Result<Scalar> {
        let start = self.pos;
        let num = BigInt::from_str(self.digits()?).expect("digits");
        let den = if self.eat(b'/') {
            BigInt::from_str(self.digits()?).expect("digits")
        } else {
            BigInt::from(1)
        };
        if den == BigInt::from(0) {
            return Err(Error::Syntax {
                pos: start,
                msg: "zero denominator".into(),
            });
        }
        Ok(Scalar::new(num, den))
    }

    fn factor(
        &mut self,
        alg: AlgebraSpec,
        coeff: &mut Scalar,
        factors: &mut Vec<(BasisElement, u32)>,
    ) -> Result<()> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                *coeff = &*coeff * self.number()?;
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let b = self.basis(alg)?;
                let e = if self.eat(b'^') { self.uint()? } else { 1 };
                factors.push((b, e));
            }
            Some(c) => return self.err(format!("unexpected '{}'", c as char)),
            None => return self.err("unexpected end of input"),
        }
        Ok(())
    }

    fn term(&mut self, alg: AlgebraSpec) -> Result<(Monomial, Scalar)> {
        let mut coeff = crate::int(1);
        let mut factors = Vec::new();
        self.factor(alg, &mut coeff, &mut factors)?;
        while self.eat(b'*') {
            self.factor(alg, &mut coeff, &mut factors)?;
        }
        Ok((Monomial::from_factors(factors), coeff))
    }

    fn poly(&mut self, alg: AlgebraSpec) -> Result<Polynomial> {
        let mut terms = Vec::new();
        let mut neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (m, c) = self.term(alg)?;
            terms.push((m, if neg { -c } else { c }));
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                break;
            }
        }
        if !self.at_end() {
            return self.err("expected '+', '-' or '*'");
        }
        Polynomial::from_terms(alg, terms)
    }
}

fn dir(k: u32, pos: usize) -> Result<u8> {
    u8::try_from(k).map_err(|_| Error::Syntax {
        pos,
        msg: format!("direction {k} is too large"),
    })
}

/// Parses a signed sum of terms such as `e[1]^2*e[4] - 1/2*e[7]`.
pub fn parse_poly(alg: AlgebraSpec, s: &str) -> Result<Polynomial> {
    Parser::new(s).poly(alg)
}

/// Parses a single basis element name such as `x[1,0]d[2]` or `SB[1,1;2]`.
pub fn parse_basis(alg: AlgebraSpec, s: &str) -> Result<BasisElement> {
    let mut p = Parser::new(s);
    let b = p.basis(alg)?;
    if !p.at_end() {
        return p.err("trailing input after basis element");
    }
    Ok(b)
}

/// Parses a whitespace separated list of pairs `(M1, N1) (M2, N2) …`.
pub fn parse_pairs(alg: AlgebraSpec, s: &str) -> Result<Vec<(BasisElement, BasisElement)>> {
    let mut p = Parser::new(s);
    let mut out = Vec::new();
    while !p.at_end() {
        p.expect(b'(')?;
        let m = p.basis(alg)?;
        p.expect(b',')?;
        let n = p.basis(alg)?;
        p.expect(b')')?;
        p.eat(b',');
        out.push((m, n));
    }
    Ok(out)
}

pub fn print_poly(_alg: AlgebraSpec, f: &Polynomial) -> String {
    f.to_string()
}
