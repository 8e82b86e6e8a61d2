//! Univariate polynomials over Q and rational power series `N(t) / D(t)`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{QStr, Q};
use crate::series::TruncatedSeries;

/// `Σ c_i t^i`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Q>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![Q::one()])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Euclidean division.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Q::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = &rem[top] / &lead;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[top - dd + i] -= &c * dc;
                }
                quot[top - dd] = c;
            }
            rem.pop();
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        match a.degree() {
            None => a,
            Some(d) => {
                let lead = a.coeffs[d].clone();
                a.scale(&(Q::one() / lead))
            }
        }
    }

    pub fn to_series(&self, n: usize) -> TruncatedSeries<Q> {
        TruncatedSeries::new(n, self.coeffs.iter().take(n + 1).cloned().collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Q::zero();
            let abs = if neg { -c } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        write!(f, "{out}")
    }
}

impl Serialize for UniPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.iter().cloned().map(QStr).collect::<Vec<_>>().serialize(s)
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Self::new(Vec::<QStr>::deserialize(d)?.into_iter().map(|x| x.0).collect()))
    }
}

/// `N(t) / D(t)` with `N(0) = D(0) = 1` and `gcd(N, D) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalFunctionSeries {
    numerator: UniPoly,
    denominator: UniPoly,
}

impl RationalFunctionSeries {
    pub fn new(numerator: UniPoly, denominator: UniPoly) -> Result<Self> {
        for (what, p) in [("numerator", &numerator), ("denominator", &denominator)] {
            if p.coeff(0) != Q::one() {
                return Err(Error::SeriesPrecondition(format!("{what} needs constant term 1")));
            }
        }
        let g = numerator.gcd(&denominator);
        let (mut num, mut den) = (numerator.div_rem(&g).0, denominator.div_rem(&g).0);
        let c = den.coeff(0);
        if !c.is_one() {
            let inv = Q::one() / c;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(Self { numerator: num, denominator: den })
    }

    pub fn polynomial(p: UniPoly) -> Result<Self> {
        Self::new(p, UniPoly::one())
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.denominator
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.numerator.mul(&other.numerator), self.denominator.mul(&other.denominator))
            .expect("constant terms stay 1")
    }

    pub fn reciprocal(&self) -> Self {
        Self { numerator: self.denominator.clone(), denominator: self.numerator.clone() }
    }

    /// Power series expansion up to `t^n`.
    pub fn expand(&self, n: usize) -> TruncatedSeries<Q> {
        let den = self.denominator.to_series(n).inverse().expect("constant term 1");
        &self.numerator.to_series(n) * &den
    }
}

impl fmt::Display for RationalFunctionSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == UniPoly::one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

impl<'de> Deserialize<'de> for RationalFunctionSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            numerator: UniPoly,
            denominator: UniPoly,
        }
        let w = Wire::deserialize(d)?;
        Self::new(w.numerator, w.denominator).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&x| q(x)).collect())
    }

    #[test]
    fn gcd_normalization() {
        // (1 - t^2) / (1 - t) = 1 + t
        let r = RationalFunctionSeries::new(up(&[1, 0, -1]), up(&[1, -1])).unwrap();
        assert_eq!(r.numerator(), &up(&[1, 1]));
        assert_eq!(r.denominator(), &up(&[1]));
        assert!(RationalFunctionSeries::new(up(&[2]), up(&[1])).is_err());
    }

    #[test]
    fn expansion_and_display() {
        let r = RationalFunctionSeries::new(up(&[1]), up(&[1, -2])).unwrap();
        assert_eq!(r.expand(4).coeffs(), &[q(1), q(2), q(4), q(8), q(16)]);
        assert_eq!(r.to_string(), "(1) / (1-2*t)");
        let j = serde_json::to_string(&r).unwrap();
        assert_eq!(j, r#"{"numerator":["1"],"denominator":["1","-2"]}"#);
        let back: RationalFunctionSeries = serde_json::from_str(&j).unwrap();
        assert_eq!(back, r);
    }
}
