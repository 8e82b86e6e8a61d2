//! Class functions on the symmetric group, the irreducible character table
//! and the Frobenius characteristic map.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::rational::{factorial, format_q, is_integer, q, q_from_biguint, Q};
use crate::symfunc::SymFunc;

/// A rational-valued function on the conjugacy classes of `Σ_n`, indexed by
/// cycle type. Virtual characters are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, Q>,
}

impl ClassFunction {
    /// Checks that `values` covers exactly the partitions of `n`.
    pub fn new(n: usize, values: BTreeMap<Partition, Q>) -> Result<Self> {
        for lambda in values.keys() {
            if lambda.size() != n {
                return Err(Error::DegreeMismatch { expected: n, found: lambda.size() });
            }
        }
        for lambda in partitions_of(n) {
            if !values.contains_key(&lambda) {
                return Err(Error::UndefinedClass(lambda.to_string()));
            }
        }
        Ok(Self { n, values })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> Q) -> Self {
        let values = partitions_of(n).into_iter().map(|l| {
            let v = f(&l);
            (l, v)
        });
        Self { n, values: values.collect() }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| Q::zero())
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |_| Q::one())
    }

    pub fn sign(n: usize) -> Self {
        Self::from_fn(n, |l| q(l.sign()))
    }

    /// Character of the regular representation: `n!` at the identity.
    pub fn regular(n: usize) -> Self {
        let identity = Partition::ones(n);
        Self::from_fn(n, |l| if *l == identity { q_from_biguint(&factorial(n)) } else { Q::zero() })
    }

    /// The irreducible character `χ^μ`.
    pub fn irreducible(mu: &Partition) -> Self {
        let mut memo = HashMap::new();
        Self::from_fn(mu.size(), |l| Q::from_integer(mn_value(&mu.parts(), &l.parts(), &mut memo)))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn value(&self, lambda: &Partition) -> &Q {
        &self.values[lambda]
    }

    pub fn values(&self) -> impl Iterator<Item = (&Partition, &Q)> {
        self.values.iter()
    }

    /// Value at the identity class.
    pub fn dimension(&self) -> Q {
        self.values[&Partition::ones(self.n)].clone()
    }

    pub fn is_integral(&self) -> bool {
        self.values.values().all(is_integer)
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    fn zip(&self, other: &Self, f: impl Fn(&Q, &Q) -> Q) -> Result<Self> {
        self.check_degree(other)?;
        let values = self.values.iter().map(|(l, v)| (l.clone(), f(v, &other.values[l]))).collect();
        Ok(Self { n: self.n, values })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self { n: self.n, values: self.values.iter().map(|(l, v)| (l.clone(), v * c)).collect() }
    }

    /// Pointwise product, the character of a tensor product.
    pub fn pointwise_product(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a * b)
    }

    /// `⟨V, W⟩ = Σ_λ V(λ) W(λ) / z_λ`.
    pub fn inner_product(&self, other: &Self) -> Result<Q> {
        self.check_degree(other)?;
        Ok(self.values.iter().map(|(l, v)| v * &other.values[l] / q_from_biguint(&l.z())).fold(Q::zero(), |a, b| a + b))
    }

    /// Character of `Ind_{Σ_n × Σ_m}^{Σ_{n+m}} (V ⊗ W)`, computed on the
    /// group side: `Σ_{α ∪ β = λ} z_λ / (z_α z_β) · V(α) W(β)`.
    pub fn induction_product(&self, other: &Self) -> Self {
        let total = self.n + other.n;
        let mut values: BTreeMap<Partition, Q> = partitions_of(total).into_iter().map(|l| (l, Q::zero())).collect();
        for (a, va) in &self.values {
            for (b, vb) in &other.values {
                let l = a.union(b);
                let coeff = q_from_biguint(&l.z()) / (q_from_biguint(&a.z()) * q_from_biguint(&b.z()));
                *values.get_mut(&l).expect("all partitions present") += coeff * va * vb;
            }
        }
        Self { n: total, values }
    }
}

#[derive(Serialize, Deserialize)]
struct ClassValueWire {
    class: Partition,
    #[serde(with = "crate::rational::serde_q")]
    value: Q,
}

#[derive(Serialize, Deserialize)]
struct ClassFunctionWire {
    n: usize,
    values: Vec<ClassValueWire>,
}

impl Serialize for ClassFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ClassFunctionWire {
            n: self.n,
            values: self.values.iter().map(|(l, v)| ClassValueWire { class: l.clone(), value: v.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ClassFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = ClassFunctionWire::deserialize(d)?;
        let mut values = BTreeMap::new();
        for cv in w.values {
            if values.insert(cv.class.clone(), cv.value).is_some() {
                return Err(serde::de::Error::custom(format!("duplicate class {}", cv.class)));
            }
        }
        ClassFunction::new(w.n, values).map_err(serde::de::Error::custom)
    }
}

impl std::fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let body: Vec<String> = self.values.iter().map(|(l, v)| format!("{l}: {}", format_q(v))).collect();
        write!(f, "{{{}}}", body.join(", "))
    }
}

/// Irreducible characters of `Σ_n`: `value(μ, λ) = χ^μ(λ)`.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn degree(&self) -> usize {
        self.n
    }

    /// Row and column labels, in reverse-lexicographic order.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn value(&self, mu: &Partition, lambda: &Partition) -> &BigInt {
        &self.values[self.index[mu]][self.index[lambda]]
    }

    pub fn row(&self, mu: &Partition) -> &[BigInt] {
        &self.values[self.index[mu]]
    }

    pub fn character(&self, mu: &Partition) -> ClassFunction {
        let row = self.row(mu);
        let values = self.partitions.iter().zip(row).map(|(l, v)| (l.clone(), Q::from_integer(v.clone()))).collect();
        ClassFunction { n: self.n, values }
    }
}

/// Character table of `Σ_n` by the Murnaghan–Nakayama rule, memoized per
/// call.
pub fn character_table(n: usize) -> CharacterTable {
    let partitions = partitions_of(n);
    let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut memo = HashMap::new();
    let values = partitions
        .iter()
        .map(|mu| {
            let mp = mu.parts();
            partitions.iter().map(|l| mn_value(&mp, &l.parts(), &mut memo)).collect()
        })
        .collect();
    CharacterTable { n, partitions, index, values }
}

/// `χ^μ(λ)` for a single pair.
pub fn character_value(mu: &Partition, lambda: &Partition) -> BigInt {
    assert_eq!(mu.size(), lambda.size(), "character of Σ_n evaluated on a class of another Σ_m");
    mn_value(&mu.parts(), &lambda.parts(), &mut HashMap::new())
}

type MnMemo = HashMap<(Vec<usize>, Vec<usize>), BigInt>;

/// Murnaghan–Nakayama on beta-sets: removing a rim hook of length `r` moves
/// a bead from `b` to `b - r`, with sign `(-1)^{beads jumped}`.
fn mn_value(mu: &[usize], lambda: &[usize], memo: &mut MnMemo) -> BigInt {
    let Some((&r, rest)) = lambda.split_first() else {
        return if mu.is_empty() { BigInt::one() } else { BigInt::zero() };
    };
    let key = (mu.to_vec(), lambda.to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let len = mu.len();
    let beads: Vec<usize> = mu.iter().enumerate().map(|(i, &m)| m + len - 1 - i).collect();
    let mut total = BigInt::zero();
    for (i, &b) in beads.iter().enumerate() {
        if b < r || beads.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let jumped = beads.iter().filter(|&&c| c > target && c < b).count();
        let mut next = beads.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> = next.iter().enumerate().map(|(j, &c)| c - (len - 1 - j)).filter(|&p| p > 0).collect();
        let v = mn_value(&shape, rest, memo);
        if jumped % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// `ch_F(V) = Σ_λ χ_λ(V) / z_λ · p_λ`.
pub fn frobenius_char(v: &ClassFunction) -> SymFunc<Q> {
    SymFunc::from_terms(v.values.iter().map(|(l, x)| (l.clone(), x / q_from_biguint(&l.z()))))
}

/// A subgroup `K ≤ Σ_n` described by how many of its elements have each
/// cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupProfile {
    n: usize,
    order: BigUint,
    counts: BTreeMap<Partition, BigUint>,
}

impl SubgroupProfile {
    pub fn new(n: usize, order: BigUint, counts: BTreeMap<Partition, BigUint>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InconsistentProfile(msg));
        for l in counts.keys() {
            if l.size() != n {
                return bad(format!("class {l} is not a partition of {n}"));
            }
        }
        let total: BigUint = counts.values().sum();
        if total != order {
            return bad(format!("counts sum to {total}, order is {order}"));
        }
        if counts.get(&Partition::ones(n)) != Some(&BigUint::one()) {
            return bad("the identity cycle type must occur exactly once".into());
        }
        if order.is_zero() || !(factorial(n) % &order).is_zero() {
            return bad(format!("order {order} does not divide {n}!"));
        }
        Ok(Self { n, order, counts })
    }

    /// The trivial subgroup `{e}`.
    pub fn trivial(n: usize) -> Self {
        let counts = BTreeMap::from([(Partition::ones(n), BigUint::one())]);
        Self { n, order: BigUint::one(), counts }
    }

    /// `Σ_n` itself.
    pub fn full(n: usize) -> Self {
        let counts: BTreeMap<Partition, BigUint> = partitions_of(n)
            .into_iter()
            .map(|l| {
                let c = l.class_size();
                (l, c)
            })
            .collect();
        Self { n, order: factorial(n), counts }
    }

    /// The cyclic subgroup generated by an `n`-cycle: `c^k` has cycle type
    /// `((n/g)^g)` with `g = gcd(k, n)`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "C_n needs n >= 1");
        let mut counts: BTreeMap<Partition, BigUint> = BTreeMap::new();
        for k in 0..n {
            let g = k.gcd(&n);
            let l = Partition::from_mults([(n / g, g)]).expect("positive parts");
            *counts.entry(l).or_default() += 1u32;
        }
        Self { n, order: BigUint::from(n), counts }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn counts(&self) -> &BTreeMap<Partition, BigUint> {
        &self.counts
    }
}

#[derive(Serialize, Deserialize)]
struct ProfileCountWire {
    class: Partition,
    count: u64,
}

#[derive(Serialize, Deserialize)]
struct ProfileWire {
    n: usize,
    order: u64,
    cycle_type_counts: Vec<ProfileCountWire>,
}

impl Serialize for SubgroupProfile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let to_u64 = |x: &BigUint| u64::try_from(x).map_err(serde::ser::Error::custom);
        ProfileWire {
            n: self.n,
            order: to_u64(&self.order)?,
            cycle_type_counts: self
                .counts
                .iter()
                .map(|(l, c)| Ok(ProfileCountWire { class: l.clone(), count: to_u64(c)? }))
                .collect::<std::result::Result<_, S::Error>>()?,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SubgroupProfile {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = ProfileWire::deserialize(d)?;
        let mut counts: BTreeMap<Partition, BigUint> = BTreeMap::new();
        for c in w.cycle_type_counts {
            if c.count > 0 {
                *counts.entry(c.class).or_default() += c.count;
            }
        }
        SubgroupProfile::new(w.n, BigUint::from(w.order), counts).map_err(serde::de::Error::custom)
    }
}

/// `χ(Ind_K^{Σ_n} triv_K)(λ) = (n!/|K|) · count_K(λ) / class_size(λ)`.
pub fn induced_trivial_character(k: &SubgroupProfile) -> Result<ClassFunction> {
    let index = q_from_biguint(&factorial(k.n)) / q_from_biguint(&k.order);
    let mut values = BTreeMap::new();
    for l in partitions_of(k.n) {
        let count = k.counts.get(&l).cloned().unwrap_or_default();
        let v = &index * q_from_biguint(&count) / q_from_biguint(&l.class_size());
        if !is_integer(&v) {
            return Err(Error::InconsistentProfile(format!(
                "induced character value {} at class {l} is not an integer",
                format_q(&v)
            )));
        }
        values.insert(l, v);
    }
    Ok(ClassFunction { n: k.n, values })
}
