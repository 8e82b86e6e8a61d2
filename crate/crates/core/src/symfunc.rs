//! Symmetric functions in the power-sum basis with coefficients in an
//! [`AdamsRing`].
//!
//! `p_λ` is the only internal basis. `h_n`, `e_n` and `s_μ` exist as
//! conversions into it. Products, internal products and plethysm are all
//! computed term by term on `p_λ`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::characters::character_table;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::rational::{q, q_from_biguint, Q};
use crate::ring::{needs_parens, AdamsRing};

/// `Σ_λ c_λ p_λ`, optionally known only up to degree `max_degree`.
///
/// Equality compares the stored terms only, not the truncation bound.
#[derive(Clone, Debug)]
pub struct SymFunc<C> {
    terms: BTreeMap<Partition, C>,
    max_degree: Option<usize>,
}

fn min_bound(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn within(bound: Option<usize>, degree: usize) -> bool {
    bound.is_none_or(|b| degree <= b)
}

impl<C: AdamsRing> SymFunc<C> {
    pub fn constant(c: C) -> Self {
        Self::from_terms([(Partition::empty(), c)])
    }

    /// `p_λ` with coefficient 1.
    pub fn p(lambda: Partition) -> Self {
        Self::from_terms([(lambda, C::one())])
    }

    /// The power sum `p_r`.
    pub fn power_sum(r: usize) -> Self {
        Self::p(Partition::single(r))
    }

    pub fn term(lambda: Partition, c: C) -> Self {
        Self::from_terms([(lambda, c)])
    }

    /// Sums repeated partitions and drops zero coefficients.
    pub fn from_terms<I: IntoIterator<Item = (Partition, C)>>(terms: I) -> Self {
        let mut out = Self { terms: BTreeMap::new(), max_degree: None };
        for (l, c) in terms {
            out.add_term(l, c);
        }
        out
    }

    fn add_term(&mut self, lambda: Partition, c: C) {
        if c.is_zero() || !within(self.max_degree, lambda.size()) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add_ref(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Drops every term of degree above `n` and records the bound.
    pub fn truncated(&self, n: usize) -> Self {
        let bound = min_bound(self.max_degree, Some(n));
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| within(bound, l.size()))
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
            max_degree: bound,
        }
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.max_degree
    }

    /// Terms in (size, reverse-lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, lambda: &Partition) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&Partition::empty())
    }

    /// Largest degree carrying a nonzero term.
    pub fn top_degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::size).max()
    }

    pub fn is_homogeneous_of(&self, n: usize) -> bool {
        self.terms.keys().all(|l| l.size() == n)
    }

    pub fn homogeneous(&self, n: usize) -> Self {
        Self {
            terms: self.terms.iter().filter(|(l, _)| l.size() == n).map(|(l, c)| (l.clone(), c.clone())).collect(),
            max_degree: None,
        }
    }

    pub fn map_coeffs<D, F>(&self, f: F) -> SymFunc<D>
    where
        D: AdamsRing,
        F: Fn(&C) -> D,
    {
        let mut out = SymFunc { terms: BTreeMap::new(), max_degree: self.max_degree };
        for (l, c) in &self.terms {
            out.add_term(l.clone(), f(c));
        }
        out
    }

    pub fn mul_coeff(&self, c: &C) -> Self {
        self.map_coeffs(|x| x.mul_ref(c))
    }

    /// Ring product: `p_λ · p_μ = p_{λ ∪ μ}`, coefficients multiply.
    pub fn mul(&self, other: &Self) -> Self {
        let bound = min_bound(self.max_degree, other.max_degree);
        let mut out = Self { terms: BTreeMap::new(), max_degree: bound };
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if within(bound, a.size() + b.size()) {
                    out.add_term(a.union(b), ca.mul_ref(cb));
                }
            }
        }
        out
    }

    /// Internal product: `p_λ ∗ p_μ = δ_{λμ} z_λ p_λ`.
    pub fn internal_product(&self, other: &Self) -> Self {
        let bound = min_bound(self.max_degree, other.max_degree);
        let mut out = Self { terms: BTreeMap::new(), max_degree: bound };
        for (l, a) in &self.terms {
            if let Some(b) = other.terms.get(l) {
                let z = C::from_rational(&q_from_biguint(&l.z()));
                out.add_term(l.clone(), a.mul_ref(b).mul_ref(&z));
            }
        }
        out
    }

    /// Hall inner product `⟨f, g⟩ = Σ_λ z_λ f_λ g_λ`, i.e. `f ∗ g` at `p_r = 1`.
    pub fn hall_inner(&self, other: &Self) -> C {
        self.internal_product(other).terms.into_values().fold(C::zero(), |acc, c| acc.add_ref(&c))
    }

    /// `Ψ_r`: Adams on every coefficient together with `p_j ↦ p_{rj}`.
    pub fn adams(&self, r: usize) -> Self {
        let bound = self.max_degree.map(|b| b * r);
        let mut out = Self { terms: BTreeMap::new(), max_degree: bound };
        for (l, c) in &self.terms {
            out.add_term(l.scale(r), c.adams(r));
        }
        out
    }

    /// Plethysm `f ∘ g`: each `p_i` of `f` is replaced by `Ψ_i g`; the
    /// coefficients of `f` are left as they are. The result is truncated at
    /// `max_degree` (and at any bound carried by the inputs).
    pub fn plethysm(&self, g: &Self, max_degree: usize) -> Result<Self> {
        let g_const = !g.constant_term().is_zero();
        if g_const && self.max_degree.is_some() {
            return Err(Error::PlethysmConstantTerm);
        }
        let bound = min_bound(Some(max_degree), min_bound(self.max_degree, g.max_degree)).expect("explicit bound");
        let mut powers: HashMap<usize, Vec<Self>> = HashMap::new();
        let mut out = Self { terms: BTreeMap::new(), max_degree: Some(bound) };
        for (lambda, coeff) in &self.terms {
            if !g_const && lambda.size() > bound {
                continue;
            }
            let mut product = Self::one().truncated(bound);
            for &(r, k) in lambda.mults() {
                let cache =
                    powers.entry(r).or_insert_with(|| vec![Self::one().truncated(bound), g.adams(r).truncated(bound)]);
                while cache.len() <= k {
                    let next = cache.last().expect("nonempty").mul(&cache[1]);
                    cache.push(next);
                }
                product = &product * &cache[k];
            }
            for (l, c) in product.terms {
                out.add_term(l, coeff.mul_ref(&c));
            }
        }
        Ok(out)
    }

    /// Substitutes `p_r ↦ rule(r)` and collapses into the coefficient ring.
    pub fn specialize_p<F>(&self, rule: F) -> Result<C>
    where
        F: Fn(usize) -> Option<C>,
    {
        let mut cache: HashMap<usize, C> = HashMap::new();
        let mut total = C::zero();
        for (l, c) in &self.terms {
            let mut value = c.clone();
            for &(r, k) in l.mults() {
                let base = match cache.get(&r) {
                    Some(v) => v.clone(),
                    None => {
                        let v = rule(r).ok_or(Error::MissingRule(r))?;
                        cache.insert(r, v.clone());
                        v
                    }
                };
                value = value.mul_ref(&crate::ring::pow(&base, k));
            }
            total = total.add_ref(&value);
        }
        Ok(total)
    }
}

impl SymFunc<Q> {
    /// Embeds rational coefficients into another coefficient ring.
    pub fn lift<D: AdamsRing>(&self) -> SymFunc<D> {
        self.map_coeffs(D::from_rational)
    }
}

/// Standard specializations of the power sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PSpecialization {
    /// `p_r = 1`: invariant part.
    Invariant,
    /// `p_r = (-1)^{r-1}`: anti-invariant part.
    Alternating,
    /// `p_1 = 1`, `p_r = 0` for `r ≥ 2`: forget the action.
    Forget,
}

impl PSpecialization {
    pub fn value(self, r: usize) -> Q {
        match self {
            Self::Invariant => q(1),
            Self::Alternating => q(if r % 2 == 1 { 1 } else { -1 }),
            Self::Forget => q(if r == 1 { 1 } else { 0 }),
        }
    }

    pub fn apply<C: AdamsRing>(self, f: &SymFunc<C>) -> C {
        f.specialize_p(|r| Some(C::from_rational(&self.value(r)))).expect("total rule")
    }
}

/// `h_n = Σ_{λ ⊢ n} p_λ / z_λ`.
pub fn h_basis<C: AdamsRing>(n: usize) -> SymFunc<C> {
    SymFunc::from_terms(partitions_of(n).into_iter().map(|l| {
        let c = C::from_rational(&(Q::one() / q_from_biguint(&l.z())));
        (l, c)
    }))
}

/// `e_n = Σ_{λ ⊢ n} ε_λ p_λ / z_λ`.
pub fn e_basis<C: AdamsRing>(n: usize) -> SymFunc<C> {
    SymFunc::from_terms(partitions_of(n).into_iter().map(|l| {
        let c = C::from_rational(&(q(l.sign()) / q_from_biguint(&l.z())));
        (l, c)
    }))
}

/// `s_μ = Σ_λ χ^μ_λ / z_λ · p_λ`.
pub fn schur<C: AdamsRing>(mu: &Partition) -> SymFunc<C> {
    let table = character_table(mu.size());
    SymFunc::from_terms(table.partitions().iter().zip(table.row(mu)).map(|(l, chi)| {
        let c = C::from_rational(&(Q::from_integer(chi.clone()) / q_from_biguint(&l.z())));
        (l.clone(), c)
    }))
}

impl<C: AdamsRing> PartialEq for SymFunc<C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<'a, C: AdamsRing> Add for &'a SymFunc<C> {
    type Output = SymFunc<C>;
    fn add(self, rhs: &'a SymFunc<C>) -> SymFunc<C> {
        let mut out = self.clone();
        out.max_degree = min_bound(self.max_degree, rhs.max_degree);
        if out.max_degree != self.max_degree {
            out = out.truncated(out.max_degree.expect("bounded"));
        }
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl<'a, C: AdamsRing> Sub for &'a SymFunc<C> {
    type Output = SymFunc<C>;
    fn sub(self, rhs: &'a SymFunc<C>) -> SymFunc<C> {
        self + &(-rhs)
    }
}

impl<'a, C: AdamsRing> Mul for &'a SymFunc<C> {
    type Output = SymFunc<C>;
    fn mul(self, rhs: &'a SymFunc<C>) -> SymFunc<C> {
        SymFunc::mul(self, rhs)
    }
}

impl<C: AdamsRing> Neg for &SymFunc<C> {
    type Output = SymFunc<C>;
    fn neg(self) -> SymFunc<C> {
        SymFunc {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c.neg_ref())).collect(),
            max_degree: self.max_degree,
        }
    }
}

macro_rules! forward_owned_symfunc {
    ($($tr:ident $m:ident),*) => {$(
        impl<C: AdamsRing> $tr for SymFunc<C> {
            type Output = SymFunc<C>;
            fn $m(self, rhs: SymFunc<C>) -> SymFunc<C> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned_symfunc!(Add add, Sub sub, Mul mul);

impl<C: AdamsRing> Neg for SymFunc<C> {
    type Output = SymFunc<C>;
    fn neg(self) -> SymFunc<C> {
        -&self
    }
}

impl<C: AdamsRing> Zero for SymFunc<C> {
    fn zero() -> Self {
        Self { terms: BTreeMap::new(), max_degree: None }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: AdamsRing> One for SymFunc<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: AdamsRing> AdamsRing for SymFunc<C> {
    fn adams(&self, r: usize) -> Self {
        SymFunc::adams(self, r)
    }

    fn from_rational(x: &Q) -> Self {
        Self::constant(C::from_rational(x))
    }

    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }

    fn mul_ref(&self, other: &Self) -> Self {
        SymFunc::mul(self, other)
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn scale(&self, x: &Q) -> Self {
        self.map_coeffs(|c| c.scale(x))
    }
}

impl<C: AdamsRing + fmt::Display> fmt::Display for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| {
                let cs = c.to_string();
                if l.is_empty() {
                    cs
                } else if c.is_one() {
                    format!("p{l}")
                } else if needs_parens(&cs) {
                    format!("({cs})*p{l}")
                } else {
                    format!("{cs}*p{l}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct SymTermWire<C> {
    partition: Partition,
    coeff: C,
}

#[derive(Serialize, Deserialize)]
struct SymFuncWire<C> {
    terms: Vec<SymTermWire<C>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    max_degree: Option<usize>,
}

impl<C: AdamsRing + Serialize> Serialize for SymFunc<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncWire {
            terms: self.terms.iter().map(|(l, c)| SymTermWire { partition: l.clone(), coeff: c.clone() }).collect(),
            max_degree: self.max_degree,
        }
        .serialize(s)
    }
}

impl<'de, C> Deserialize<'de> for SymFunc<C>
where
    C: AdamsRing + Deserialize<'de>,
{
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = SymFuncWire::<C>::deserialize(d)?;
        let f = SymFunc::from_terms(w.terms.into_iter().map(|t| (t.partition, t.coeff)));
        Ok(match w.max_degree {
            Some(n) => f.truncated(n),
            None => f,
        })
    }
}
