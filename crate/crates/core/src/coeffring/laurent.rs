use std::borrow::Cow;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_q, parse_q, Q};
use crate::ring::{pow, AdamsRing};

/// Exponent vector of a Laurent monomial, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Exponent(pub Vec<i64>);

impl Exponent {
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
///
/// Each polynomial carries its own ordered variable list. Binary operations on
/// polynomials with different lists work over the union of both lists (left
/// operand's variables first). Equality is semantic: a polynomial does not
/// change by declaring extra variables it does not use.
#[derive(Clone)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponent, Q>,
}

impl LaurentPoly {
    pub fn constant(c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exponent(Vec::new()), c);
        }
        Self { vars: Vec::new(), terms }
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(crate::rational::q(c))
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(name: &str) -> Self {
        Self::monomial(vec![name.to_string()], vec![1], Q::one())
    }

    pub fn monomial(vars: Vec<String>, exp: Vec<i64>, coeff: Q) -> Self {
        assert_eq!(vars.len(), exp.len());
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(Exponent(exp), coeff);
        }
        Self { vars, terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I>(vars: Vec<String>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i64>, Q)>,
    {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::Parse(format!("duplicate variable `{v}`")));
            }
        }
        let mut out = Self { vars, terms: BTreeMap::new() };
        for (exp, c) in terms {
            if exp.len() != out.vars.len() {
                return Err(Error::Parse(format!(
                    "exponent vector {exp:?} does not match {} variables",
                    out.vars.len()
                )));
            }
            out.add_term(Exponent(exp), c);
        }
        Ok(out)
    }

    /// Same polynomial with an empty term set and the given variables.
    pub fn zero_in(vars: Vec<String>) -> Self {
        Self { vars, terms: BTreeMap::new() }
    }

    fn add_term(&mut self, exp: Exponent, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &Q)> {
        self.terms.iter().map(|(e, c)| (e.0.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.0.iter().all(|&x| x == 0))
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(&vec![0; self.vars.len()])
    }

    pub fn coeff(&self, exp: &[i64]) -> Q {
        self.terms.get(&Exponent(exp.to_vec())).cloned().unwrap_or_else(Q::zero)
    }

    /// Coefficient of the monomial given as `variable -> exponent`; missing
    /// variables have exponent zero.
    pub fn coeff_of(&self, mono: &[(&str, i64)]) -> Q {
        let mut exp = vec![0; self.vars.len()];
        for &(name, e) in mono {
            match self.vars.iter().position(|v| v == name) {
                Some(i) => exp[i] = e,
                None if e == 0 => {}
                None => return Q::zero(),
            }
        }
        self.coeff(&exp)
    }

    /// Returns the value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Q> {
        self.is_constant().then(|| self.constant_term())
    }

    /// Re-expresses the polynomial over `vars`, which must contain every
    /// variable this polynomial actually uses.
    pub fn with_vars(&self, vars: &[String]) -> Option<Self> {
        if vars == self.vars.as_slice() {
            return Some(self.clone());
        }
        let index: Vec<Option<usize>> = self.vars.iter().map(|v| vars.iter().position(|w| w == v)).collect();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut exp = vec![0; vars.len()];
            for (i, &x) in e.0.iter().enumerate() {
                if x != 0 {
                    exp[index[i]?] = x;
                }
            }
            terms.insert(Exponent(exp), c.clone());
        }
        Some(Self { vars: vars.to_vec(), terms })
    }

    /// Drops declared variables that occur with exponent zero everywhere.
    pub fn trim_vars(&self) -> Self {
        let used: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|e| e.0[*i] != 0))
            .map(|(_, v)| v.clone())
            .collect();
        self.with_vars(&used).expect("used variables are kept")
    }

    fn unified<'a>(a: &'a Self, b: &'a Self) -> (Cow<'a, Self>, Cow<'a, Self>) {
        if a.vars == b.vars {
            return (Cow::Borrowed(a), Cow::Borrowed(b));
        }
        if b.vars.is_empty() || b.vars.iter().all(|v| a.vars.contains(v)) {
            let b2 = b.with_vars(&a.vars).expect("superset");
            return (Cow::Borrowed(a), Cow::Owned(b2));
        }
        let mut vars = a.vars.clone();
        for v in &b.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        let a2 = a.with_vars(&vars).expect("superset");
        let b2 = b.with_vars(&vars).expect("superset");
        (Cow::Owned(a2), Cow::Owned(b2))
    }

    pub fn scale_by(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero_in(self.vars.clone());
        }
        Self { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    /// `ψ_r`: multiplies every exponent vector entrywise by `r`.
    pub fn adams(&self, r: usize) -> Self {
        assert!(r >= 1, "Adams operations are indexed by r >= 1");
        let r = r as i64;
        Self {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exponent(e.0.iter().map(|&x| x * r).collect()), c.clone()))
                .collect(),
        }
    }

    /// Multiplicative inverse; only monomials are units of a Laurent ring.
    pub fn inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Self::monomial(self.vars.clone(), e.0.iter().map(|x| -x).collect(), c.recip()))
    }

    /// Integer power; negative exponents require a monomial.
    pub fn pow_i(&self, k: i64) -> Option<Self> {
        if k >= 0 {
            Some(pow(self, k as usize))
        } else {
            self.inverse().map(|inv| pow(&inv, k.unsigned_abs() as usize))
        }
    }

    /// Substitution homomorphism `var ↦ value`. Variables not in the
    /// assignment are kept.
    pub fn specialize(&self, assignment: &BTreeMap<String, LaurentPoly>) -> Result<Self> {
        let kept: Vec<String> = self.vars.iter().filter(|v| !assignment.contains_key(*v)).cloned().collect();
        let mut cache: HashMap<(usize, i64), LaurentPoly> = HashMap::new();
        let mut out = Self::zero_in(kept.clone());
        for (e, c) in &self.terms {
            let mut kept_exp = Vec::with_capacity(kept.len());
            let mut factor = Self::constant(c.clone());
            for (i, &x) in e.0.iter().enumerate() {
                let name = &self.vars[i];
                match assignment.get(name) {
                    None => kept_exp.push(x),
                    Some(_) if x == 0 => {}
                    Some(value) => {
                        let p = match cache.get(&(i, x)) {
                            Some(p) => p.clone(),
                            None => {
                                let p = value.pow_i(x).ok_or_else(|| Error::NotInvertible {
                                    var: name.clone(),
                                    value: value.to_string(),
                                })?;
                                cache.insert((i, x), p.clone());
                                p
                            }
                        };
                        factor = &factor * &p;
                    }
                }
            }
            let mono = Self::monomial(kept.clone(), kept_exp, Q::one());
            out = &out + &(&mono * &factor);
        }
        Ok(out)
    }

    /// Specializes every variable to a rational value.
    pub fn evaluate(&self, values: &BTreeMap<String, Q>) -> Result<Q> {
        let assignment: BTreeMap<String, LaurentPoly> =
            values.iter().map(|(k, v)| (k.clone(), LaurentPoly::constant(v.clone()))).collect();
        let s = self.specialize(&assignment)?;
        s.as_constant().ok_or_else(|| Error::Parse(format!("unassigned variables remain in {s}")))
    }
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::unified(self, other);
        a.terms == b.terms
    }
}

impl Eq for LaurentPoly {}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> =
                e.0.iter()
                    .zip(&self.vars)
                    .filter(|(x, _)| **x != 0)
                    .map(|(&x, v)| if x == 1 { v.clone() } else { format!("{v}^{x}") })
                    .collect();
            let mono = mono.join("*");
            let body = if mono.is_empty() {
                format_q(&c.abs())
            } else if c.abs().is_one() {
                mono
            } else {
                format!("{}*{mono}", format_q(&c.abs()))
            };
            match (idx, c.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, "+{body}")?,
                (_, true) => write!(f, "-{body}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let (a, b) = LaurentPoly::unified(self, rhs);
        let mut out = a.into_owned();
        for (e, c) in &b.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let (a, b) = LaurentPoly::unified(self, rhs);
        let mut out = a.into_owned();
        for (e, c) in &b.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul for &'a LaurentPoly {
    type Output = LaurentPoly;
    // monomial exponents add under multiplication
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let (a, b) = LaurentPoly::unified(self, rhs);
        let mut out = LaurentPoly::zero_in(a.vars.clone());
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let exp = ea.0.iter().zip(&eb.0).map(|(x, y)| x + y).collect();
                out.add_term(Exponent(exp), ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        Self { vars: Vec::new(), terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::constant(Q::one())
    }
}

impl From<Q> for LaurentPoly {
    fn from(c: Q) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl AdamsRing for LaurentPoly {
    fn adams(&self, r: usize) -> Self {
        LaurentPoly::adams(self, r)
    }

    fn from_rational(x: &Q) -> Self {
        Self::constant(x.clone())
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
        self.scale_by(x)
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    exp: Vec<i64>,
    #[serde(with = "crate::rational::serde_q")]
    coeff: Q,
}

#[derive(Serialize, Deserialize)]
struct PolyWire {
    vars: Vec<String>,
    terms: Vec<TermWire>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyWire {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| TermWire { exp: e.0.clone(), coeff: c.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Wire(PolyWire),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Wire(w) => LaurentPoly::from_terms(w.vars, w.terms.into_iter().map(|t| (t.exp, t.coeff))),
            Raw::Text(s) => s.parse(),
        }
        .map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_laurent(s)
    }
}

/// Parses a rational literal; re-exported for the parser.
pub(crate) fn parse_coeff(s: &str) -> Result<Q> {
    parse_q(s)
}
