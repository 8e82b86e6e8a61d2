//! The group ring of the roots of unity, `Z[μ̂]`, and its Q-algebra extension
//! with Laurent polynomial coefficients.
//!
//! A root `e^{2πi a/q}` is stored as the reduced fraction `a/q ∈ [0, 1)`. The
//! Adams operation is `λ ↦ λ^r`, i.e. `a/q ↦ r a/q mod 1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coeffring::LaurentPoly;
use crate::error::{Error, Result};
use crate::rational::Q;
use crate::ring::AdamsRing;

/// A root of unity as a reduced fraction in `[0, 1)`.
pub type Root = Ratio<i64>;

fn reduce(x: Root) -> Root {
    let f = x - x.floor();
    if f < Root::zero() {
        f + Root::one()
    } else {
        f
    }
}

fn root_to_string(x: &Root) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

fn parse_root(s: &str) -> Result<Root> {
    let bad = || Error::Parse(format!("invalid root fraction `{s}`"));
    let (a, b) = s.split_once('/').unwrap_or((s, "1"));
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if b == 0 {
        return Err(bad());
    }
    Ok(reduce(Root::new(a, b)))
}

/// `Σ m_λ [λ]` with integer multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RootOfUnityElement {
    terms: BTreeMap<Root, BigInt>,
}

impl RootOfUnityElement {
    pub fn from_terms<I: IntoIterator<Item = (Root, BigInt)>>(terms: I) -> Self {
        let mut out = Self::default();
        for (r, m) in terms {
            out.add_term(reduce(r), m);
        }
        out
    }

    /// `e^{2πi a/q}`.
    pub fn root(a: i64, q: i64) -> Self {
        Self::from_terms([(Root::new(a, q), BigInt::one())])
    }

    fn add_term(&mut self, r: Root, m: BigInt) {
        let e = self.terms.entry(r).or_default();
        *e += m;
        if e.is_zero() {
            self.terms.remove(&r);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Root, &BigInt)> {
        self.terms.iter()
    }

    /// `λ ↦ λ^r`.
    pub fn mu_adams(&self, r: usize) -> Self {
        assert!(r >= 1);
        Self::from_terms(self.terms.iter().map(|(k, m)| (*k * r as i64, m.clone())))
    }

    /// Sum of multiplicities: the value at the trivial character.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Add for &RootOfUnityElement {
    type Output = RootOfUnityElement;
    fn add(self, rhs: Self) -> RootOfUnityElement {
        let mut out = self.clone();
        for (r, m) in &rhs.terms {
            out.add_term(*r, m.clone());
        }
        out
    }
}

impl Neg for &RootOfUnityElement {
    type Output = RootOfUnityElement;
    fn neg(self) -> RootOfUnityElement {
        RootOfUnityElement { terms: self.terms.iter().map(|(r, m)| (*r, -m)).collect() }
    }
}

impl Sub for &RootOfUnityElement {
    type Output = RootOfUnityElement;
    fn sub(self, rhs: Self) -> RootOfUnityElement {
        self + &(-rhs)
    }
}

impl Mul for &RootOfUnityElement {
    type Output = RootOfUnityElement;
    fn mul(self, rhs: Self) -> RootOfUnityElement {
        let mut out = RootOfUnityElement::default();
        for (a, m) in &self.terms {
            for (b, n) in &rhs.terms {
                out.add_term(reduce(a + b), m * n);
            }
        }
        out
    }
}

impl fmt::Display for RootOfUnityElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(r, m)| format!("{m}*e({})", root_to_string(r))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct RootTermWire {
    root: String,
    mult: i64,
}

impl Serialize for RootOfUnityElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::Error as _;
        let terms: std::result::Result<Vec<RootTermWire>, S::Error> = self
            .terms
            .iter()
            .map(|(r, m)| {
                let mult = i64::try_from(m).map_err(|_| S::Error::custom("multiplicity overflows i64"))?;
                Ok(RootTermWire { root: root_to_string(r), mult })
            })
            .collect();
        terms?.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RootOfUnityElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = Vec::<RootTermWire>::deserialize(d)?;
        let mut terms = Vec::new();
        for t in wire {
            terms.push((parse_root(&t.root).map_err(serde::de::Error::custom)?, BigInt::from(t.mult)));
        }
        Ok(Self::from_terms(terms))
    }
}

/// `Σ_λ c_λ [λ]` with `c_λ` Laurent polynomials: `Q[y, x, z][μ̂]`.
///
/// Adams acts on both factors, `ψ_r(c [λ]) = ψ_r(c) [λ^r]`.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct MuPoly {
    terms: BTreeMap<Root, LaurentPoly>,
}

impl MuPoly {
    pub fn from_terms<I: IntoIterator<Item = (Root, LaurentPoly)>>(terms: I) -> Self {
        let mut out = Self::default();
        for (r, c) in terms {
            out.add_term(reduce(r), c);
        }
        out
    }

    fn add_term(&mut self, r: Root, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&r) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(r, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Root, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, r: &Root) -> LaurentPoly {
        self.terms.get(&reduce(*r)).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    /// Forgets the roots: `[λ] ↦ 1`.
    pub fn augmentation(&self) -> LaurentPoly {
        self.terms.values().fold(LaurentPoly::zero(), |a, c| &a + c)
    }
}

impl From<&RootOfUnityElement> for MuPoly {
    fn from(x: &RootOfUnityElement) -> Self {
        Self::from_terms(x.terms.iter().map(|(r, m)| (*r, LaurentPoly::constant(Q::from_integer(m.clone())))))
    }
}

impl Add for &MuPoly {
    type Output = MuPoly;
    fn add(self, rhs: Self) -> MuPoly {
        let mut out = self.clone();
        for (r, c) in &rhs.terms {
            out.add_term(*r, c.clone());
        }
        out
    }
}

impl Neg for &MuPoly {
    type Output = MuPoly;
    fn neg(self) -> MuPoly {
        MuPoly { terms: self.terms.iter().map(|(r, c)| (*r, -c)).collect() }
    }
}

impl Sub for &MuPoly {
    type Output = MuPoly;
    fn sub(self, rhs: Self) -> MuPoly {
        self + &(-rhs)
    }
}

impl Mul for &MuPoly {
    type Output = MuPoly;
    fn mul(self, rhs: Self) -> MuPoly {
        let mut out = MuPoly::default();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(reduce(a + b), c * d);
            }
        }
        out
    }
}

macro_rules! forward_owned_mu {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for MuPoly {
            type Output = MuPoly;
            fn $m(self, rhs: MuPoly) -> MuPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned_mu!(Add add, Sub sub, Mul mul);

impl Neg for MuPoly {
    type Output = MuPoly;
    fn neg(self) -> MuPoly {
        -&self
    }
}

impl Zero for MuPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MuPoly {
    fn one() -> Self {
        Self::from_terms([(Root::zero(), LaurentPoly::one())])
    }
}

impl AdamsRing for MuPoly {
    fn adams(&self, r: usize) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (*k * r as i64, c.adams(r))))
    }

    fn from_rational(x: &Q) -> Self {
        Self::from_terms([(Root::zero(), LaurentPoly::constant(x.clone()))])
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn scale(&self, x: &Q) -> Self {
        MuPoly { terms: self.terms.iter().map(|(r, c)| (*r, c.scale_by(x))).collect() }
    }
}

impl fmt::Display for MuPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(r, c)| if r.is_zero() { format!("{c}") } else { format!("({c})*e({})", root_to_string(r)) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct MuTermWire {
    root: String,
    coeff: LaurentPoly,
}

impl Serialize for MuPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.terms
            .iter()
            .map(|(r, c)| MuTermWire { root: root_to_string(r), coeff: c.clone() })
            .collect::<Vec<_>>()
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MuPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = Vec::<MuTermWire>::deserialize(d)?;
        let mut terms = Vec::new();
        for t in wire {
            terms.push((parse_root(&t.root).map_err(serde::de::Error::custom)?, t.coeff));
        }
        Ok(Self::from_terms(terms))
    }
}

/// Generating series `Σ_n h(X^{(n)}) t^n = Exp(h t)` for a finite-order
/// automorphism whose eigenvalue-refined class is `h`.
pub fn finite_order_series(h: &MuPoly, n: usize) -> crate::series::TruncatedSeries<MuPoly> {
    crate::series::TruncatedSeries::monomial(h.clone(), 1, n).plethystic_exp().expect("zero constant term")
}
