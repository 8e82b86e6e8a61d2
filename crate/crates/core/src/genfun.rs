//! Generating series of symmetric products, twisted tensor powers,
//! quotients, configuration spaces and Hilbert schemes of points.
//!
//! A space enters only through its Poincaré or mixed Hodge polynomial `P`.
//! The `t^n` coefficient of [`char_series`] is the graded character of `Σ_n`
//! on `H*(X^n)`, encoded as `Σ_{λ ⊢ n} p_λ / z_λ · Π_r ψ_r(P)^{k_r}`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::characters::{induced_trivial_character, ClassFunction, SubgroupProfile};
use crate::coeffring::{from_betti, from_hodge, HodgeNumber, LaurentPoly};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::rational::{q, q_from_biguint};
use crate::ring::pow;
use crate::series::TruncatedSeries;
use crate::symfunc::{h_basis, schur, PSpecialization, SymFunc};

/// Series with symmetric-function coefficients over Laurent polynomials.
pub type CharSeries = TruncatedSeries<SymFunc<LaurentPoly>>;

/// Series with Laurent polynomial coefficients.
pub type PolySeries = TruncatedSeries<LaurentPoly>;

/// A space (or a pair `(X, M)`) described by its Poincaré or Hodge polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct SpaceDescriptor {
    pub name: String,
    pub poly: LaurentPoly,
}

impl SpaceDescriptor {
    pub fn new(name: impl Into<String>, poly: LaurentPoly) -> Self {
        Self { name: name.into(), poly }
    }

    pub fn from_betti(name: impl Into<String>, betti: &BTreeMap<i64, i64>) -> Result<Self> {
        Ok(Self::new(name, from_betti(betti)?))
    }

    pub fn from_hodge(name: impl Into<String>, hodge: &[HodgeNumber]) -> Result<Self> {
        Ok(Self::new(name, from_hodge(hodge)?))
    }

    pub fn point() -> Self {
        Self::new("pt", LaurentPoly::one())
    }
}

#[derive(Serialize, Deserialize)]
struct SpaceWire {
    #[serde(default)]
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    poly: Option<LaurentPoly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    betti: Option<BTreeMap<i64, i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hodge: Option<Vec<HodgeNumber>>,
}

impl Serialize for SpaceDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SpaceWire { name: self.name.clone(), poly: Some(self.poly.clone()), betti: None, hodge: None }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SpaceDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = SpaceWire::deserialize(d)?;
        let poly = match (w.poly, w.betti, w.hodge) {
            (Some(p), None, None) => p,
            (None, Some(b), None) => from_betti(&b).map_err(D::Error::custom)?,
            (None, None, Some(h)) => from_hodge(&h).map_err(D::Error::custom)?,
            _ => return Err(D::Error::custom("give exactly one of `poly`, `betti`, `hodge`")),
        };
        Ok(Self { name: w.name, poly })
    }
}

/// Memoizes `ψ_r(P)^k`.
struct AdamsPowers<'a> {
    poly: &'a LaurentPoly,
    base: HashMap<usize, LaurentPoly>,
    powers: HashMap<(usize, usize), LaurentPoly>,
}

impl<'a> AdamsPowers<'a> {
    fn new(poly: &'a LaurentPoly) -> Self {
        Self { poly, base: HashMap::new(), powers: HashMap::new() }
    }

    fn get(&mut self, r: usize, k: usize) -> LaurentPoly {
        if let Some(v) = self.powers.get(&(r, k)) {
            return v.clone();
        }
        let b = self.base.entry(r).or_insert_with(|| self.poly.adams(r)).clone();
        let v = pow(&b, k);
        self.powers.insert((r, k), v.clone());
        v
    }

    /// `Π_r ψ_r(P)^{k_r}`.
    fn cycle_product(&mut self, lambda: &Partition) -> LaurentPoly {
        lambda.mults().iter().fold(LaurentPoly::one(), |acc, &(r, k)| &acc * &self.get(r, k))
    }
}

fn twisted_with(v: &ClassFunction, powers: &mut AdamsPowers<'_>) -> SymFunc<LaurentPoly> {
    SymFunc::from_terms(partitions_of(v.degree()).into_iter().filter_map(|l| {
        let chi = v.value(&l);
        if chi.is_zero() {
            return None;
        }
        let c = powers.cycle_product(&l).scale_by(&(chi / q_from_biguint(&l.z())));
        Some((l, c))
    }))
}

/// `Σ_n tr_{Σ_n} H*(X^n) t^n = exp(Σ_r p_r ψ_r(P) t^r / r)`, computed
/// coefficientwise from the closed form.
pub fn char_series(x: &SpaceDescriptor, n: usize) -> CharSeries {
    let mut powers = AdamsPowers::new(&x.poly);
    CharSeries::from_fn(n, |k| twisted_with(&ClassFunction::trivial(k), &mut powers))
}

/// The same series as [`char_series`], computed as `Exp(P · p_1 · t)`.
pub fn char_series_via_exp(x: &SpaceDescriptor, n: usize) -> CharSeries {
    let seed = CharSeries::monomial(SymFunc::term(Partition::single(1), x.poly.clone()), 1, n);
    seed.plethystic_exp().expect("zero constant term")
}

/// Class of `V ⊗ H*(X)^{⊗n}` for a `Σ_n`-character `V`:
/// `Σ_{λ ⊢ n} p_λ / z_λ · χ_V(λ) · Π_r ψ_r(P)^{k_r}`.
pub fn twisted_character(v: &ClassFunction, x: &SpaceDescriptor) -> SymFunc<LaurentPoly> {
    twisted_with(v, &mut AdamsPowers::new(&x.poly))
}

/// Graded dimension of `(V ⊗ H*(X)^{⊗n})^{Σ_n}`, i.e. the twisted character
/// at `p_r = 1`.
pub fn schur_value(v: &ClassFunction, x: &SpaceDescriptor) -> LaurentPoly {
    PSpecialization::Invariant.apply(&twisted_character(v, x))
}

/// Isotypic decomposition of `H*(X^n)`: `μ ↦ S_μ(P)` with
/// `Σ_μ s_μ · S_μ(P)` equal to the `t^n` coefficient of [`char_series`].
pub fn schur_decomposition(x: &SpaceDescriptor, n: usize) -> BTreeMap<Partition, LaurentPoly> {
    let f = twisted_character(&ClassFunction::trivial(n), x);
    partitions_of(n)
        .into_iter()
        .map(|mu| {
            let s = schur::<LaurentPoly>(&mu);
            let v = s.hall_inner(&f);
            (mu, v)
        })
        .collect()
}

/// `exp(Σ_r c_r ψ_r(P) t^r / r)`: the image of [`char_series`] under
/// `p_r ↦ c_r`.
fn specialized_series(x: &SpaceDescriptor, n: usize, spec: PSpecialization) -> PolySeries {
    let arg = PolySeries::from_fn(n, |r| {
        if r == 0 {
            return LaurentPoly::zero();
        }
        let c = spec.value(r) / q(r as i64);
        if c.is_zero() {
            LaurentPoly::zero()
        } else {
            x.poly.adams(r).scale_by(&c)
        }
    });
    arg.exp().expect("zero constant term")
}

/// Poincaré polynomials of the symmetric products `X^{(n)}`.
pub fn macdonald_series(x: &SpaceDescriptor, n: usize) -> PolySeries {
    specialized_series(x, n, PSpecialization::Invariant)
}

/// Sign-isotypic parts `(H*(X^n) ⊗ sgn)^{Σ_n}`.
pub fn alternating_series(x: &SpaceDescriptor, n: usize) -> PolySeries {
    specialized_series(x, n, PSpecialization::Alternating)
}

/// `exp(P t)`: the `t^n` coefficient is `P^n / n!`.
pub fn kunneth_series(x: &SpaceDescriptor, n: usize) -> PolySeries {
    specialized_series(x, n, PSpecialization::Forget)
}

/// Specializes every coefficient of a [`CharSeries`].
pub fn specialize_series(s: &CharSeries, spec: PSpecialization) -> PolySeries {
    s.map_coeffs(|f| spec.apply(f))
}

/// Poincaré polynomial of `X^n / K`.
pub fn quotient_polynomial(k: &SubgroupProfile, x: &SpaceDescriptor) -> Result<LaurentPoly> {
    Ok(schur_value(&induced_trivial_character(k)?, x))
}

/// `Σ_n cl_n(F(X, n)) t^n = Exp(E · Log(1 + p_1 t))`. The polynomial must be the
/// compactly supported class of `X`; this is not checked.
pub fn configuration_series(x: &SpaceDescriptor, n: usize) -> CharSeries {
    let base = CharSeries::new(n, vec![SymFunc::one(), SymFunc::power_sum(1)]);
    base.power_structure(&SymFunc::constant(x.poly.clone())).expect("constant term 1")
}

/// Which Hilbert scheme generating series to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HilbertMode {
    /// Base `1 + Σ c_i h_i t^i`, equivariant classes.
    Ordered,
    /// Base `1 + Σ c_i t^i`, plain classes.
    Symmetric,
}

fn check_punctual(punctual: &PolySeries) -> Result<()> {
    if punctual.constant_term().is_one() {
        Ok(())
    } else {
        Err(Error::SeriesPrecondition("punctual series needs constant term 1".into()))
    }
}

/// `(1 + Σ_i c_i h_i t^i)^{[X]}` from the punctual series `1 + Σ c_i t^i`.
pub fn hilbert_series_ordered(x: &SpaceDescriptor, punctual: &PolySeries, n: usize) -> Result<CharSeries> {
    check_punctual(punctual)?;
    let punctual = punctual.truncated(n);
    let base = CharSeries::from_fn(punctual.max_degree(), |i| {
        if i == 0 {
            SymFunc::one()
        } else {
            h_basis::<LaurentPoly>(i).mul_coeff(punctual.coeff(i))
        }
    });
    base.power_structure(&SymFunc::constant(x.poly.clone()))
}

/// `(1 + Σ_i c_i t^i)^{[X]}`.
pub fn hilbert_series_symmetric(x: &SpaceDescriptor, punctual: &PolySeries, n: usize) -> Result<PolySeries> {
    check_punctual(punctual)?;
    punctual.truncated(n).power_structure(&x.poly)
}

/// Either mode, symmetric results embedded as constant symmetric functions.
pub fn hilbert_series(x: &SpaceDescriptor, punctual: &PolySeries, n: usize, mode: HilbertMode) -> Result<CharSeries> {
    match mode {
        HilbertMode::Ordered => hilbert_series_ordered(x, punctual, n),
        HilbertMode::Symmetric => {
            Ok(hilbert_series_symmetric(x, punctual, n)?.map_coeffs(|c| SymFunc::constant(c.clone())))
        }
    }
}

/// Punctual series of a smooth curve: every `Hilb^i_0` is a point.
pub fn curve_punctual_series(n: usize) -> PolySeries {
    PolySeries::from_fn(n, |_| LaurentPoly::one())
}

/// Euler characteristic specialization `z = 1`.
pub fn at_z_one(f: &LaurentPoly) -> Result<LaurentPoly> {
    f.specialize(&BTreeMap::from([("z".to_string(), LaurentPoly::one())]))
}
