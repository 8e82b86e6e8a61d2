//! Integer partitions, cycle types and the centralizer orders `z_λ`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::factorial;

/// A partition `λ = (1^{k_1} 2^{k_2} ...)`, stored as its multiplicity map.
///
/// `mults` holds `(part, multiplicity)` pairs with strictly decreasing parts
/// and nonzero multiplicities. Partitions order first by size and then in
/// reverse-lexicographic order of their part lists, so `(3) < (2,1) < (1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    mults: Vec<(usize, usize)>,
    size: usize,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted(&parts))
    }

    fn from_sorted(parts: &[usize]) -> Self {
        let mut mults: Vec<(usize, usize)> = Vec::new();
        for &p in parts {
            match mults.last_mut() {
                Some((r, k)) if *r == p => *k += 1,
                _ => mults.push((p, 1)),
            }
        }
        Self { mults, size: parts.iter().sum() }
    }

    /// Builds a partition from `(part, multiplicity)` pairs in any order.
    pub fn from_mults<I: IntoIterator<Item = (usize, usize)>>(mults: I) -> Result<Self> {
        let mut parts = Vec::new();
        for (r, k) in mults {
            if r == 0 && k > 0 {
                return Err(Error::InvalidPartition("part 0".into()));
            }
            parts.extend(std::iter::repeat_n(r, k));
        }
        Self::new(parts)
    }

    /// The one-part partition `(n)`; `n = 0` gives the empty partition.
    pub fn single(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self { mults: vec![(n, 1)], size: n }
        }
    }

    /// `(1^n)`, the cycle type of the identity.
    pub fn ones(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self { mults: vec![(1, n)], size: n }
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn num_parts(&self) -> usize {
        self.mults.iter().map(|&(_, k)| k).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// `(r, k_r)` pairs, largest part first.
    pub fn mults(&self) -> &[(usize, usize)] {
        &self.mults
    }

    pub fn multiplicity(&self, r: usize) -> usize {
        self.mults.iter().find(|&&(p, _)| p == r).map_or(0, |&(_, k)| k)
    }

    /// Weakly decreasing part list.
    pub fn parts(&self) -> Vec<usize> {
        self.mults.iter().flat_map(|&(r, k)| std::iter::repeat_n(r, k)).collect()
    }

    pub fn largest_part(&self) -> Option<usize> {
        self.mults.first().map(|&(r, _)| r)
    }

    /// `z_λ = ∏_r r^{k_r} k_r!`, the order of the centralizer of a permutation
    /// of cycle type `λ`.
    pub fn z(&self) -> BigUint {
        self.mults.iter().fold(BigUint::one(), |acc, &(r, k)| acc * BigUint::from(r).pow(k as u32) * factorial(k))
    }

    /// `n!/z_λ`, the number of permutations with this cycle type.
    pub fn class_size(&self) -> BigUint {
        factorial(self.size) / self.z()
    }

    /// `ε_λ = ∏_r (-1)^{(r-1) k_r}`, the sign of a permutation of this type.
    pub fn sign(&self) -> i64 {
        if (self.size - self.num_parts()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Multiplies every part by `r`; this is `p_λ ↦ p_{rλ}`.
    pub fn scale(&self, r: usize) -> Self {
        assert!(r >= 1);
        Self { mults: self.mults.iter().map(|&(p, k)| (p * r, k)).collect(), size: self.size * r }
    }

    /// Multiset union of parts; `p_λ · p_μ = p_{λ ∪ μ}`.
    pub fn union(&self, other: &Self) -> Self {
        let mut mults = Vec::with_capacity(self.mults.len() + other.mults.len());
        let (mut i, mut j) = (0, 0);
        while i < self.mults.len() || j < other.mults.len() {
            match (self.mults.get(i), other.mults.get(j)) {
                (Some(&(a, ka)), Some(&(b, kb))) if a == b => {
                    mults.push((a, ka + kb));
                    i += 1;
                    j += 1;
                }
                (Some(&(a, ka)), Some(&(b, _))) if a > b => {
                    mults.push((a, ka));
                    i += 1;
                }
                (Some(_), Some(&(b, kb))) => {
                    mults.push((b, kb));
                    j += 1;
                }
                (Some(&x), None) => {
                    mults.push(x);
                    i += 1;
                }
                (None, Some(&y)) => {
                    mults.push(y);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Self { mults, size: self.size + other.size }
    }

    /// Removes one copy of part `r`, if present.
    pub fn remove_part(&self, r: usize) -> Option<Self> {
        let idx = self.mults.iter().position(|&(p, _)| p == r)?;
        let mut mults = self.mults.clone();
        if mults[idx].1 == 1 {
            mults.remove(idx);
        } else {
            mults[idx].1 -= 1;
        }
        Some(Self { mults, size: self.size - r })
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Self {
        let parts = self.parts();
        let first = parts.first().copied().unwrap_or(0);
        let conj: Vec<usize> = (1..=first).map(|i| parts.iter().filter(|&&p| p >= i).count()).collect();
        Self::from_sorted(&conj)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        // Comparing (part, multiplicity) runs lexicographically is the same as
        // comparing the expanded part lists.
        self.size.cmp(&other.size).then_with(|| other.mults.cmp(&self.mults))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts().iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in reverse-lexicographic order; `partitions_of(0)`
/// is the single empty partition.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::from_sorted(current));
        return;
    }
    for part in (1..=max.min(rest)).rev() {
        current.push(part);
        fill(rest - part, part, current, out);
        current.pop();
    }
}

/// Partitions of every size `0..=n`, grouped by size.
pub fn partitions_up_to(n: usize) -> Vec<Vec<Partition>> {
    (0..=n).map(partitions_of).collect()
}

pub fn stabilizer_order(lambda: &Partition) -> BigUint {
    lambda.z()
}

pub fn class_size(lambda: &Partition) -> BigUint {
    lambda.class_size()
}
