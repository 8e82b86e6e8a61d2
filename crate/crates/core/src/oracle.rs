//! Brute-force ground truth: explicit Koszul-signed actions of `Σ_n` on
//! tensor powers of small graded vector spaces.
//!
//! Nothing here uses symmetric functions or Adams operations. Traces are
//! summed over every basis tensor and invariant parts are exact ranks of the
//! averaging projector.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::characters::ClassFunction;
use crate::coeffring::LaurentPoly;
use crate::equivariant::QMatrix;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{factorial, q, q_from_biguint, Q};

/// Largest number of basis tensors the oracle will enumerate.
pub const SIZE_LIMIT: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisVector {
    pub label: String,
    pub degree: i64,
}

/// A finite graded vector space given by an explicit basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplicitGradedSpace {
    pub basis: Vec<BasisVector>,
}

impl ExplicitGradedSpace {
    pub fn new<S: Into<String>>(basis: impl IntoIterator<Item = (S, i64)>) -> Self {
        Self { basis: basis.into_iter().map(|(l, d)| BasisVector { label: l.into(), degree: d }).collect() }
    }

    /// One basis vector per unit of each Betti number.
    pub fn from_betti(betti: &BTreeMap<i64, usize>) -> Self {
        Self::new(betti.iter().flat_map(|(&k, &b)| (0..b).map(move |i| (format!("v{k}_{i}"), k))))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.basis.iter().map(|b| b.degree).collect()
    }

    /// Graded trace of the identity, `Σ_k dim V^k (-z)^k`.
    pub fn poincare(&self) -> LaurentPoly {
        self.basis.iter().fold(LaurentPoly::zero(), |acc, b| &acc + &signed_z(b.degree))
    }
}

fn signed_z(k: i64) -> LaurentPoly {
    let c = if k.rem_euclid(2) == 0 { Q::one() } else { -Q::one() };
    LaurentPoly::monomial(vec!["z".into()], vec![k], c)
}

fn check_size(v: &ExplicitGradedSpace, n: usize) -> Result<()> {
    let mut total: u128 = 1;
    for _ in 0..n {
        total = total.saturating_mul(v.dim() as u128);
        if total > SIZE_LIMIT {
            return Err(Error::SizeBound(total));
        }
    }
    Ok(())
}

/// The permutation `π` of `{0, …, n-1}` with consecutive cycles of the given
/// lengths: `π(j)` is the next element of `j`'s cycle.
pub fn standard_permutation(cycle_type: &Partition) -> Vec<usize> {
    let mut perm = Vec::with_capacity(cycle_type.size());
    let mut start = 0;
    for len in cycle_type.parts() {
        for j in 0..len {
            perm.push(start + (j + 1) % len);
        }
        start += len;
    }
    perm
}

pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut lens = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut j = s;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        lens.push(len);
    }
    Partition::new(lens).expect("positive cycle lengths")
}

/// All permutations of `{0, …, n-1}` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Image of a basis tensor under `π` (factor `j` moves to slot `π(j)`) and
/// the Koszul sign `Π_{j<k, π(j)>π(k)} (-1)^{d_j d_k}`.
fn act(perm: &[usize], tuple: &[usize], degrees: &[i64]) -> (Vec<usize>, bool) {
    let n = perm.len();
    let mut image = vec![0; n];
    for j in 0..n {
        image[perm[j]] = tuple[j];
    }
    let mut negative = false;
    for j in 0..n {
        let dj = degrees[tuple[j]];
        if dj.rem_euclid(2) == 0 {
            continue;
        }
        for k in j + 1..n {
            if perm[j] > perm[k] && degrees[tuple[k]].rem_euclid(2) == 1 {
                negative = !negative;
            }
        }
    }
    (image, negative)
}

fn for_each_tuple(dim: usize, n: usize, mut f: impl FnMut(&[usize])) {
    if dim == 0 && n > 0 {
        return;
    }
    let mut t = vec![0; n];
    loop {
        f(&t);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < dim {
                break;
            }
            t[i] = 0;
        }
    }
}

/// Graded trace `Σ_k tr(π | (V^{⊗n})^k) (-z)^k` of an arbitrary permutation.
pub fn permutation_trace(v: &ExplicitGradedSpace, perm: &[usize]) -> Result<LaurentPoly> {
    let n = perm.len();
    check_size(v, n)?;
    let degrees = v.degrees();
    let mut by_degree: BTreeMap<i64, i64> = BTreeMap::new();
    for_each_tuple(v.dim(), n, |t| {
        let (image, negative) = act(perm, t, &degrees);
        if image == t {
            let deg: i64 = t.iter().map(|&i| degrees[i]).sum();
            *by_degree.entry(deg).or_default() += if negative { -1 } else { 1 };
        }
    });
    Ok(by_degree.into_iter().fold(LaurentPoly::zero(), |acc, (k, tr)| &acc + &signed_z(k).scale_by(&q(tr))))
}

/// Graded trace of a permutation of cycle type `sigma` on `V^{⊗n}`, times
/// `χ_twist(sigma)` when a twist is given.
pub fn permutation_action_trace(
    v: &ExplicitGradedSpace,
    n: usize,
    sigma: &Partition,
    twist: Option<&ClassFunction>,
) -> Result<LaurentPoly> {
    if sigma.size() != n {
        return Err(Error::DegreeMismatch { expected: n, found: sigma.size() });
    }
    let tr = permutation_trace(v, &standard_permutation(sigma))?;
    match twist {
        None => Ok(tr),
        Some(chi) => {
            if chi.degree() != n {
                return Err(Error::DegreeMismatch { expected: n, found: chi.degree() });
            }
            Ok(tr.scale_by(chi.value(sigma)))
        }
    }
}

/// Graded dimension of `(V_twist ⊗ V^{⊗n})^{Σ_n}`: the rank of the isotypic
/// projector `(d/n!) Σ_σ χ(σ) σ` on each graded piece, divided by
/// `d = χ(1)`. The twist must be an irreducible character.
pub fn projector_rank(v: &ExplicitGradedSpace, n: usize, twist: &ClassFunction) -> Result<LaurentPoly> {
    if twist.degree() != n {
        return Err(Error::DegreeMismatch { expected: n, found: twist.degree() });
    }
    let d = twist.dimension();
    if d <= Q::zero() || twist.inner_product(twist)? != Q::one() {
        return Err(Error::NotIrreducible(twist.to_string()));
    }
    check_size(v, n)?;
    if v.dim() == 0 && n > 0 {
        return Ok(LaurentPoly::zero());
    }
    let degrees = v.degrees();
    let perms: Vec<(Vec<usize>, Q)> = all_permutations(n)
        .into_iter()
        .map(|p| {
            let c = twist.value(&cycle_type(&p)).clone();
            (p, c)
        })
        .collect();
    let scale = &d / q_from_biguint(&factorial(n));
    let mut by_degree: BTreeMap<i64, Q> = BTreeMap::new();
    // σ permutes the tensors whose factors form a fixed multiset, so the
    // projector is block diagonal over multisets.
    let mut multiset = vec![0usize; n];
    loop {
        let orbit = arrangements(&multiset);
        let index: HashMap<&[usize], usize> = orbit.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
        let mut m = QMatrix::zero(orbit.len());
        for (src, t) in orbit.iter().enumerate() {
            for (p, chi) in &perms {
                if chi.is_zero() {
                    continue;
                }
                let (image, negative) = act(p, t, &degrees);
                let dst = index[image.as_slice()];
                let c = if negative { -chi } else { chi.clone() };
                let cur = m.get(dst, src) + c * &scale;
                m.set(dst, src, cur);
            }
        }
        let deg: i64 = multiset.iter().map(|&i| degrees[i]).sum();
        *by_degree.entry(deg).or_insert_with(Q::zero) += q(m.rank() as i64);
        if !next_multiset(&mut multiset, v.dim()) {
            break;
        }
    }
    let mut out = LaurentPoly::zero();
    for (k, rank) in by_degree {
        let mult = rank / &d;
        if !mult.denom().is_one() {
            return Err(Error::Inconsistent {
                identity: "projector rank divisible by the twist dimension".into(),
                location: format!("degree {k}"),
            });
        }
        out = &out + &signed_z(k).scale_by(&mult);
    }
    Ok(out)
}

/// Next non-decreasing tuple with entries below `dim`; `false` when done.
fn next_multiset(t: &mut [usize], dim: usize) -> bool {
    if dim == 0 {
        return false;
    }
    let Some(i) = (0..t.len()).rev().find(|&i| t[i] + 1 < dim) else { return false };
    let v = t[i] + 1;
    for x in &mut t[i..] {
        *x = v;
    }
    true
}

/// Distinct rearrangements of a sorted tuple.
fn arrangements(sorted: &[usize]) -> Vec<Vec<usize>> {
    let n = sorted.len();
    let mut out = Vec::new();
    let mut cur = sorted.to_vec();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Every graded space with at most `max_dim` basis vectors, all in degrees
/// `lo..=hi`, up to isomorphism.
pub fn small_spaces(max_dim: usize, lo: i64, hi: i64) -> Vec<ExplicitGradedSpace> {
    let degrees: Vec<i64> = (lo..=hi).collect();
    let mut out = vec![ExplicitGradedSpace::new(Vec::<(String, i64)>::new())];
    for size in 1..=max_dim {
        let mut t = vec![0usize; size];
        loop {
            out.push(ExplicitGradedSpace::new(t.iter().enumerate().map(|(i, &d)| (format!("b{i}"), degrees[d]))));
            if !next_multiset(&mut t, degrees.len()) {
                break;
            }
        }
    }
    out
}

/// Every graded space with `dim V^k ≤ max_per_degree` for `k` in `lo..=hi`.
pub fn spaces_by_profile(max_per_degree: usize, lo: i64, hi: i64) -> Vec<ExplicitGradedSpace> {
    let mut out = vec![BTreeMap::new()];
    for k in lo..=hi {
        out = out
            .into_iter()
            .flat_map(|m: BTreeMap<i64, usize>| {
                (0..=max_per_degree).map(move |b| {
                    let mut m = m.clone();
                    m.insert(k, b);
                    m
                })
            })
            .collect();
    }
    out.iter().map(ExplicitGradedSpace::from_betti).collect()
}
