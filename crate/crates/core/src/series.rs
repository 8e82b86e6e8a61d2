//! Truncated power series in `t` over an [`AdamsRing`], with exp/log,
//! plethystic Exp/Log and power structures.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{mobius, q, Q};
use crate::ring::{needs_parens, AdamsRing};

/// `Σ_{n ≤ N} c_n t^n`. Everything above `t^N` is unknown and dropped.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<C> {
    max_degree: usize,
    coeffs: Vec<C>,
}

impl<C: AdamsRing> TruncatedSeries<C> {
    /// Pads with zeros or drops coefficients so that exactly `N + 1` remain.
    pub fn new(max_degree: usize, mut coeffs: Vec<C>) -> Self {
        coeffs.resize(max_degree + 1, C::zero());
        Self { max_degree, coeffs }
    }

    pub fn from_fn(max_degree: usize, f: impl FnMut(usize) -> C) -> Self {
        Self { max_degree, coeffs: (0..=max_degree).map(f).collect() }
    }

    pub fn zero(max_degree: usize) -> Self {
        Self::new(max_degree, Vec::new())
    }

    pub fn one(max_degree: usize) -> Self {
        Self::constant(C::one(), max_degree)
    }

    pub fn constant(c: C, max_degree: usize) -> Self {
        Self::new(max_degree, vec![c])
    }

    /// `c · t^k`.
    pub fn monomial(c: C, k: usize, max_degree: usize) -> Self {
        Self::from_fn(max_degree, |n| if n == k { c.clone() } else { C::zero() })
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn constant_term(&self) -> &C {
        &self.coeffs[0]
    }

    pub fn truncated(&self, n: usize) -> Self {
        let n = n.min(self.max_degree);
        Self { max_degree: n, coeffs: self.coeffs[..=n].to_vec() }
    }

    pub fn map_coeffs<D: AdamsRing>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries { max_degree: self.max_degree, coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn try_map_coeffs<D: AdamsRing>(&self, f: impl Fn(&C) -> Result<D>) -> Result<TruncatedSeries<D>> {
        Ok(TruncatedSeries { max_degree: self.max_degree, coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map_coeffs(|x| x.mul_ref(c))
    }

    fn scale_q(&self, x: &Q) -> Self {
        self.map_coeffs(|c| c.scale(x))
    }

    fn common(&self, other: &Self) -> (usize, Self, Self) {
        let n = self.max_degree.min(other.max_degree);
        (n, self.truncated(n), other.truncated(n))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (n, a, b) = self.common(other);
        let mut out = vec![C::zero(); n + 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs[..=n - i].iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] = out[i + j].add_ref(&x.mul_ref(y));
                }
            }
        }
        Self { max_degree: n, coeffs: out }
    }

    /// `Ψ_r(Σ c_n t^n) = Σ ψ_r(c_n) t^{rn}`, truncated at the same `N`.
    pub fn adams(&self, r: usize) -> Self {
        assert!(r >= 1, "Adams operations are indexed from 1");
        let mut out = Self::zero(self.max_degree);
        for (n, c) in self.coeffs.iter().enumerate() {
            if n * r > self.max_degree {
                break;
            }
            out.coeffs[n * r] = c.adams(r);
        }
        out
    }

    fn require_constant(&self, want_one: bool, op: &str) -> Result<()> {
        let c = self.constant_term();
        let ok = if want_one { *c == C::one() } else { c.is_zero() };
        if ok {
            Ok(())
        } else {
            let need = if want_one { "1" } else { "0" };
            Err(Error::SeriesPrecondition(format!("{op} needs constant term {need}")))
        }
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn inverse(&self) -> Result<Self> {
        self.require_constant(true, "inverse")?;
        let mut out = vec![C::one()];
        for n in 1..=self.max_degree {
            let mut acc = C::zero();
            for k in 1..=n {
                acc = acc.sub_ref(&self.coeffs[k].mul_ref(&out[n - k]));
            }
            out.push(acc);
        }
        Ok(Self { max_degree: self.max_degree, coeffs: out })
    }

    /// `exp(s)` for `s` with zero constant term, via `n E_n = Σ k s_k E_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        self.require_constant(false, "exp")?;
        let mut out = vec![C::one()];
        for n in 1..=self.max_degree {
            let mut acc = C::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = acc.add_ref(&self.coeffs[k].mul_ref(&out[n - k]).scale(&q(k as i64)));
                }
            }
            out.push(acc.scale(&Q::new(1.into(), (n as i64).into())));
        }
        Ok(Self { max_degree: self.max_degree, coeffs: out })
    }

    /// `log(s)` for `s` with constant term 1, via
    /// `n L_n = n s_n - Σ_{k<n} k L_k s_{n-k}`.
    pub fn log(&self) -> Result<Self> {
        self.require_constant(true, "log")?;
        let mut out = vec![C::zero()];
        for n in 1..=self.max_degree {
            let mut acc = self.coeffs[n].scale(&q(n as i64));
            for (k, lk) in out.iter().enumerate().skip(1) {
                if !lk.is_zero() && !self.coeffs[n - k].is_zero() {
                    acc = acc.sub_ref(&lk.mul_ref(&self.coeffs[n - k]).scale(&q(k as i64)));
                }
            }
            out.push(acc.scale(&Q::new(1.into(), (n as i64).into())));
        }
        Ok(Self { max_degree: self.max_degree, coeffs: out })
    }

    /// `Exp(s) = exp(Σ_r Ψ_r(s) / r)`.
    pub fn plethystic_exp(&self) -> Result<Self> {
        self.require_constant(false, "plethystic Exp")?;
        let mut arg = Self::zero(self.max_degree);
        for r in 1..=self.max_degree {
            arg = &arg + &self.adams(r).scale_q(&Q::new(1.into(), (r as i64).into()));
        }
        arg.exp()
    }

    /// `Log(s) = Σ_r μ(r)/r · Ψ_r(log s)`, the inverse of [`Self::plethystic_exp`].
    pub fn plethystic_log(&self) -> Result<Self> {
        self.require_constant(true, "plethystic Log")?;
        let l = self.log()?;
        let mut out = Self::zero(self.max_degree);
        for r in 1..=self.max_degree {
            let m = mobius(r);
            if m != 0 {
                out = &out + &l.adams(r).scale_q(&Q::new(m.into(), (r as i64).into()));
            }
        }
        Ok(out)
    }

    /// `(1 + A)^b = Exp(b · Log(1 + A))`.
    pub fn power_structure(&self, exponent: &C) -> Result<Self> {
        self.require_constant(true, "power structure")?;
        self.plethystic_log()?.scale(exponent).plethystic_exp()
    }
}

impl<C: AdamsRing> Add for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn add(self, rhs: Self) -> TruncatedSeries<C> {
        let (n, a, b) = self.common(rhs);
        TruncatedSeries { max_degree: n, coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.add_ref(y)).collect() }
    }
}

impl<C: AdamsRing> Sub for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn sub(self, rhs: Self) -> TruncatedSeries<C> {
        let (n, a, b) = self.common(rhs);
        TruncatedSeries { max_degree: n, coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.sub_ref(y)).collect() }
    }
}

impl<C: AdamsRing> Mul for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn mul(self, rhs: Self) -> TruncatedSeries<C> {
        TruncatedSeries::mul(self, rhs)
    }
}

impl<C: AdamsRing> Neg for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn neg(self) -> TruncatedSeries<C> {
        self.map_coeffs(C::neg_ref)
    }
}

impl<C: AdamsRing + fmt::Display> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let tp = match n {
                0 => {
                    parts.push(cs);
                    continue;
                }
                1 => "t".to_string(),
                _ => format!("t^{n}"),
            };
            parts.push(if c.is_one() {
                tp
            } else if c.neg_ref().is_one() {
                format!("-{tp}")
            } else if needs_parens(&cs) {
                format!("({cs}) {tp}")
            } else {
                format!("{cs} {tp}")
            });
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        for (i, part) in parts.iter().enumerate() {
            match (i, part.strip_prefix('-')) {
                (0, _) => write!(f, "{part}")?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {part}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesWire<C> {
    max_degree: usize,
    coeffs: Vec<C>,
}

impl<C: AdamsRing + Serialize> Serialize for TruncatedSeries<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesWire { max_degree: self.max_degree, coeffs: self.coeffs.clone() }.serialize(s)
    }
}

impl<'de, C: AdamsRing + Deserialize<'de>> Deserialize<'de> for TruncatedSeries<C> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = SeriesWire::<C>::deserialize(d)?;
        if w.coeffs.len() > w.max_degree + 1 {
            return Err(serde::de::Error::custom("more coefficients than max_degree + 1"));
        }
        Ok(Self::new(w.max_degree, w.coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::LaurentPoly;
    use crate::partition::Partition;
    use crate::rational::q_frac;
    use crate::symfunc::{h_basis, SymFunc};
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    type SQ = TruncatedSeries<Q>;
    type SS = TruncatedSeries<SymFunc<LaurentPoly>>;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn geometric(n: usize) -> SQ {
        SQ::from_fn(n, |_| q(1))
    }

    #[test]
    fn exp_log_examples() {
        assert_eq!(SQ::zero(6).exp().unwrap(), SQ::one(6));
        let arg = SQ::from_fn(10, |r| if r == 0 { q(0) } else { q_frac(1, r as i64) });
        assert_eq!(arg.exp().unwrap(), geometric(10));
        let one_plus_t = SQ::new(8, vec![q(1), q(1)]);
        let mercator =
            SQ::from_fn(8, |n| if n == 0 { q(0) } else { q_frac(if n % 2 == 1 { 1 } else { -1 }, n as i64) });
        assert_eq!(one_plus_t.log().unwrap(), mercator);
        assert!(matches!(SQ::one(3).exp(), Err(Error::SeriesPrecondition(_))));
        assert!(matches!(SQ::zero(3).log(), Err(Error::SeriesPrecondition(_))));
    }

    #[test]
    fn plethystic_examples() {
        let t = SQ::monomial(q(1), 1, 9);
        assert_eq!(t.plethystic_exp().unwrap(), geometric(9));
        assert_eq!((-&t).plethystic_exp().unwrap(), SQ::new(9, vec![q(1), q(-1)]));
        assert_eq!(geometric(9).plethystic_log().unwrap(), t);
        assert_eq!(SQ::one(5).plethystic_log().unwrap(), SQ::zero(5));
        let one_plus_t = SQ::new(9, vec![q(1), q(1)]);
        assert_eq!(one_plus_t.plethystic_log().unwrap().plethystic_exp().unwrap(), one_plus_t);
    }

    #[test]
    fn exp_of_point_class_is_complete_homogeneous() {
        let n = 6;
        let p1t = SS::monomial(SymFunc::power_sum(1), 1, n);
        let got = p1t.plethystic_exp().unwrap();
        for k in 0..=n {
            assert_eq!(got.coeff(k), &h_basis::<LaurentPoly>(k));
        }
    }

    #[test]
    fn power_structure_examples() {
        let one_plus_t = SQ::new(6, vec![q(1), q(1)]);
        assert_eq!(one_plus_t.power_structure(&q(0)).unwrap(), SQ::one(6));
        assert_eq!(one_plus_t.power_structure(&q(3)).unwrap(), SQ::new(6, vec![q(1), q(3), q(3), q(1)]));
        assert_eq!(one_plus_t.power_structure(&q(1)).unwrap(), one_plus_t);
        // (1 + t + t^2 + ...)^{1+z^2} = 1/((1-t)(1-z^2 t)).
        let base = TruncatedSeries::<LaurentPoly>::from_fn(7, |_| LaurentPoly::one());
        let got = base.power_structure(&lp("1+z^2")).unwrap();
        let want = TruncatedSeries::from_fn(7, |n| {
            (0..=n as i64).fold(LaurentPoly::zero(), |acc, k| &acc + &lp(&format!("z^{}", 2 * k)))
        });
        assert_eq!(got, want);
        assert!(SQ::zero(3).power_structure(&q(2)).is_err());
    }

    #[test]
    fn display_and_json() {
        let s = TruncatedSeries::from_fn(2, |n| {
            (0..=n as i64).fold(LaurentPoly::zero(), |acc, k| &acc + &lp(&format!("z^{}", 2 * k)))
        });
        assert_eq!(s.to_string(), "1 + (1+z^2) t + (1+z^2+z^4) t^2");
        let json = serde_json::to_string(&s).unwrap();
        assert!(json.starts_with(r#"{"max_degree":2,"coeffs":[{"vars":["z"]"#));
        let back: TruncatedSeries<LaurentPoly> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        let short: TruncatedSeries<LaurentPoly> =
            serde_json::from_str(r#"{"max_degree":2,"coeffs":["1","1/2"]}"#).unwrap();
        assert_eq!(short.coeffs(), &[lp("1"), lp("1/2"), LaurentPoly::zero()]);
        assert!(serde_json::from_str::<TruncatedSeries<LaurentPoly>>(r#"{"max_degree":0,"coeffs":["1","2"]}"#).is_err());
    }

    #[test]
    fn mixed_bounds_truncate_to_minimum() {
        let a = geometric(5);
        let b = geometric(3);
        assert_eq!((&a * &b).max_degree(), 3);
        assert_eq!((&a + &b).max_degree(), 3);
        assert_eq!(&a * &b, SQ::from_fn(3, |n| q(n as i64 + 1)));
    }

    fn arb_coeff() -> impl Strategy<Value = SymFunc<LaurentPoly>> {
        let parts: Vec<Partition> = (0..=3).flat_map(crate::partition::partitions_of).collect();
        let term = (0..parts.len(), -2i64..=2, 0i64..=2)
            .prop_map(move |(i, a, e)| (parts[i].clone(), LaurentPoly::monomial(vec!["z".into()], vec![e], q(a))));
        prop::collection::vec(term, 0..3).prop_map(SymFunc::from_terms)
    }

    fn arb_series(constant: Option<i64>) -> impl Strategy<Value = SS> {
        prop::collection::vec(arb_coeff(), 9).prop_map(move |mut cs| {
            if let Some(c) = constant {
                cs[0] = SymFunc::constant(LaurentPoly::from_int(c));
            }
            SS::new(8, cs)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn ring_axioms(a in arb_series(None), b in arb_series(None), c in arb_series(None)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &SS::one(8), a.clone());
        }

        #[test]
        fn exp_log_inverse(a in arb_series(Some(0))) {
            let e = a.exp().unwrap();
            prop_assert_eq!(e.log().unwrap(), a.clone());
            let one_plus = &SS::one(8) + &a;
            prop_assert_eq!(one_plus.log().unwrap().exp().unwrap(), one_plus);
        }

        #[test]
        fn plethystic_exp_log_inverse(a in arb_series(Some(0))) {
            prop_assert_eq!(a.plethystic_exp().unwrap().plethystic_log().unwrap(), a.clone());
            let one_plus = &SS::one(8) + &a;
            prop_assert_eq!(one_plus.plethystic_log().unwrap().plethystic_exp().unwrap(), one_plus);
        }

        #[test]
        fn exp_is_homomorphism(a in arb_series(Some(0)), b in arb_series(Some(0))) {
            prop_assert_eq!((&a + &b).exp().unwrap(), &a.exp().unwrap() * &b.exp().unwrap());
            prop_assert_eq!(
                (&a + &b).plethystic_exp().unwrap(),
                &a.plethystic_exp().unwrap() * &b.plethystic_exp().unwrap()
            );
        }

        #[test]
        fn power_structure_additive(a in arb_series(Some(0)), b in arb_coeff(), c in arb_coeff()) {
            let base = &SS::one(8) + &a;
            let lhs = base.power_structure(&(&b + &c)).unwrap();
            let rhs = &base.power_structure(&b).unwrap() * &base.power_structure(&c).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(base.power_structure(&SymFunc::one()).unwrap(), base);
        }

        #[test]
        fn inverse_is_inverse(a in arb_series(Some(1))) {
            prop_assert_eq!(&a * &a.inverse().unwrap(), SS::one(8));
        }
    }
}
