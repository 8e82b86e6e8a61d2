//! Text syntax for Laurent polynomials, e.g. `1-2*z+y^3*x^-3+1/2*(1+z)^2`.
//!
//! Variables are ordered by first appearance. The grammar accepts everything
//! `LaurentPoly`'s `Display` produces.

use num_traits::One;

use super::laurent::{parse_coeff, LaurentPoly};
use crate::error::{Error, Result};
use crate::rational::Q;

pub fn parse_laurent(src: &str) -> Result<LaurentPoly> {
    let mut p = Parser { chars: src.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, vars: Vec::new() };
    if p.chars.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let poly = p.sum()?;
    if p.pos != p.chars.len() {
        return Err(p.error("unexpected character"));
    }
    // Canonical variable order: first appearance.
    let vars = p.vars.clone();
    Ok(poly.with_vars(&vars).unwrap_or(poly))
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    vars: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, what: &str) -> Error {
        let src: String = self.chars.iter().collect();
        Error::Parse(format!("{what} at offset {} in `{src}`", self.pos))
    }

    fn sum(&mut self) -> Result<LaurentPoly> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -self.product()?
            }
            Some('+') => {
                self.pos += 1;
                self.product()?
            }
            _ => self.product()?,
        };
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = &acc + &self.product()?;
                }
                '-' => {
                    self.pos += 1;
                    acc = &acc - &self.product()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.power()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<LaurentPoly> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let neg = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let digits = self.take_while(|c| c.is_ascii_digit());
        let k: i64 = digits.parse().map_err(|_| self.error("expected exponent"))?;
        let k = if neg { -k } else { k };
        base.pow_i(k).ok_or_else(|| self.error("negative power of a non-monomial"))
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let mut lit = self.take_while(|c| c.is_ascii_digit());
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let den = self.take_while(|c| c.is_ascii_digit());
                    if den.is_empty() {
                        return Err(self.error("expected denominator"));
                    }
                    lit = format!("{lit}/{den}");
                }
                let q: Q = parse_coeff(&lit)?;
                Ok(LaurentPoly::constant(q))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let name = self.take_while(|c| c.is_alphanumeric() || c == '_');
                if !self.vars.contains(&name) {
                    self.vars.push(name.clone());
                }
                Ok(LaurentPoly::monomial(vec![name], vec![1], Q::one()))
            }
            _ => Err(self.error("expected a number, variable or `(`")),
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> String {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }
}
