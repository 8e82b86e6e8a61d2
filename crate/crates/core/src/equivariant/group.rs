//! Finite groups given by their conjugacy classes and power maps.
//!
//! The Adams operation on class functions is `ψ_r(α)(g) = α(g^r)`, so all a
//! group needs to supply is the class of `g^r` for each class `g`.

use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::coeffring::LaurentPoly;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::rational::q;
use crate::series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupClass {
    pub name: String,
    pub size: u64,
    /// `r ↦` class of `g^r`. Unlisted exponents are derived, see
    /// [`FiniteGroupData::power`].
    #[serde(default)]
    pub power_maps: BTreeMap<usize, String>,
}

/// Conjugacy classes of a finite group. The first class is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteGroupData {
    order: u64,
    classes: Vec<GroupClass>,
    #[serde(skip)]
    index: HashMap<String, usize>,
}

impl FiniteGroupData {
    pub fn new(order: u64, classes: Vec<GroupClass>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidGroup(m));
        if classes.is_empty() {
            return bad("no classes".into());
        }
        let mut index = HashMap::new();
        for (i, c) in classes.iter().enumerate() {
            if c.size == 0 {
                return bad(format!("class `{}` has size 0", c.name));
            }
            if index.insert(c.name.clone(), i).is_some() {
                return bad(format!("duplicate class `{}`", c.name));
            }
        }
        let total: u64 = classes.iter().map(|c| c.size).sum();
        if total != order {
            return bad(format!("class sizes sum to {total}, order is {order}"));
        }
        if classes[0].size != 1 {
            return bad("the first class must be the identity".into());
        }
        for c in &classes {
            if !order.is_multiple_of(c.size) {
                return bad(format!("class `{}` size does not divide the order", c.name));
            }
            for (&r, target) in &c.power_maps {
                if r == 0 {
                    return bad("power maps are indexed from 1".into());
                }
                if !index.contains_key(target) {
                    return Err(Error::UndefinedClass(target.clone()));
                }
                if r == 1 && *target != c.name {
                    return bad(format!("power map 1 of `{}` is not the identity", c.name));
                }
            }
        }
        if classes[0].power_maps.values().any(|t| *t != classes[0].name) {
            return bad("identity class must power to itself".into());
        }
        let g = Self { order, classes, index };
        g.check_consistency()?;
        Ok(g)
    }

    /// Every explicit entry `g^{ab}` agrees with `(g^a)^b` whenever both sides
    /// are resolvable.
    fn check_consistency(&self) -> Result<()> {
        for (i, c) in self.classes.iter().enumerate() {
            for (&r, target) in &c.power_maps {
                for a in 2..r {
                    if r % a != 0 {
                        continue;
                    }
                    let Ok(ga) = self.power_index(i, a) else { continue };
                    if let Ok(gab) = self.power_index(ga, r / a) {
                        if self.classes[gab].name != *target {
                            return Err(Error::InvalidGroup(format!(
                                "power maps of `{}` disagree at exponent {r}",
                                c.name
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn trivial() -> Self {
        Self::new(1, vec![GroupClass { name: "e".into(), size: 1, power_maps: BTreeMap::new() }]).expect("valid")
    }

    /// `C_n` with classes `e, g, g2, …, g{n-1}`.
    pub fn cyclic(n: u64) -> Self {
        assert!(n >= 1);
        let name = |k: u64| match k {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g{k}"),
        };
        let classes = (0..n)
            .map(|k| GroupClass {
                name: name(k),
                size: 1,
                power_maps: (1..=n).map(|r| (r as usize, name(k * r % n))).collect(),
            })
            .collect();
        Self::new(n, classes).expect("valid")
    }

    /// `Σ_n` with classes named by cycle type, power maps listed up to `bound`.
    pub fn symmetric(n: usize, bound: usize) -> Self {
        let order: u64 = (1..=n as u64).product();
        let parts = partitions_of(n);
        let mut ordered: Vec<Partition> = vec![Partition::ones(n)];
        ordered.extend(parts.into_iter().filter(|l| *l != Partition::ones(n)));
        let classes = ordered
            .iter()
            .map(|l| GroupClass {
                name: l.to_string(),
                size: u64::try_from(l.class_size()).expect("fits u64"),
                power_maps: (1..=bound).map(|r| (r, cycle_type_power(l, r).to_string())).collect(),
            })
            .collect();
        Self::new(order, classes).expect("valid")
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn classes(&self) -> &[GroupClass] {
        &self.classes
    }

    pub fn class_index(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| Error::UndefinedClass(name.into()))
    }

    /// Class of `g^r`. Resolution order: `r = 1`; an explicit entry; reduction
    /// of `r` modulo the group order; factoring `r = a b` with `a` the smallest
    /// prime factor and composing.
    pub fn power(&self, class: &str, r: usize) -> Result<&str> {
        let i = self.class_index(class)?;
        Ok(&self.classes[self.power_index(i, r)?].name)
    }

    fn power_index(&self, i: usize, r: usize) -> Result<usize> {
        assert!(r >= 1);
        if r == 1 || i == 0 {
            return Ok(i);
        }
        let c = &self.classes[i];
        if let Some(t) = c.power_maps.get(&r) {
            return Ok(self.index[t]);
        }
        let order = self.order as usize;
        if r > order {
            return self.power_index(i, (r - 1) % order + 1);
        }
        let p = (2..=r).find(|p| r.is_multiple_of(*p)).expect("r >= 2");
        if p < r {
            let gp = self.power_index(i, p)?;
            return self.power_index(gp, r / p);
        }
        Err(Error::MissingPowerMap { class: c.name.clone(), r })
    }

    /// Per class `g`: `exp(Σ_r ψ_r(h)(g) t^r / r)` with
    /// `ψ_r(h)(g) = h(g^r)` evaluated at `y^r, x^r, z^r`.
    pub fn macdonald(
        &self,
        h: &BTreeMap<String, LaurentPoly>,
        n: usize,
    ) -> Result<BTreeMap<String, TruncatedSeries<LaurentPoly>>> {
        for c in &self.classes {
            if !h.contains_key(&c.name) {
                return Err(Error::UndefinedClass(c.name.clone()));
            }
        }
        let mut out = BTreeMap::new();
        for (i, c) in self.classes.iter().enumerate() {
            let mut arg = vec![LaurentPoly::from_int(0)];
            for r in 1..=n {
                let gr = &self.classes[self.power_index(i, r)?].name;
                arg.push(h[gr].adams(r).scale_by(&(q(1) / q(r as i64))));
            }
            let s = TruncatedSeries::new(n, arg).exp().expect("zero constant term");
            out.insert(c.name.clone(), s);
        }
        Ok(out)
    }
}

/// Cycle type of `σ^r` for `σ` of cycle type `lambda`.
pub fn cycle_type_power(lambda: &Partition, r: usize) -> Partition {
    let mut parts = Vec::new();
    for &(l, k) in lambda.mults() {
        let g = l.gcd(&r);
        parts.extend(std::iter::repeat_n(l / g, g * k));
    }
    Partition::new(parts).expect("positive parts")
}

impl<'de> Deserialize<'de> for FiniteGroupData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            order: u64,
            classes: Vec<GroupClass>,
        }
        let w = Wire::deserialize(d)?;
        Self::new(w.order, w.classes).map_err(serde::de::Error::custom)
    }
}

/// `group_macdonald` as a free function.
pub fn group_macdonald(
    g: &FiniteGroupData,
    h: &BTreeMap<String, LaurentPoly>,
    n: usize,
) -> Result<BTreeMap<String, TruncatedSeries<LaurentPoly>>> {
    g.macdonald(h, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::{macdonald_series, SpaceDescriptor};
    use crate::rational::q_frac;
    use num_traits::One;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn power_map_resolution() {
        let c6 = FiniteGroupData::cyclic(6);
        assert_eq!(c6.power("g", 4).unwrap(), "g4");
        assert_eq!(c6.power("g", 13).unwrap(), "g");
        assert_eq!(c6.power("g2", 3).unwrap(), "e");
        let s4 = FiniteGroupData::symmetric(4, 3);
        assert_eq!(s4.power("[4]", 2).unwrap(), "[2,2]");
        assert_eq!(s4.power("[4]", 4).unwrap(), "[1,1,1,1]");
        assert_eq!(s4.power("[3,1]", 3).unwrap(), "[1,1,1,1]");
        assert!(matches!(s4.power("[4]", 5), Err(Error::MissingPowerMap { .. })));
        let c2: FiniteGroupData = serde_json::from_str(
            r#"{"order":2,"classes":[{"name":"e","size":1},{"name":"g","size":1,"power_maps":{"2":"e"}}]}"#,
        )
        .unwrap();
        assert_eq!(c2.power("g", 7).unwrap(), "g");
        assert_eq!(c2.power("g", 8).unwrap(), "e");
    }

    #[test]
    fn invalid_groups() {
        let cls = |name: &str, size| GroupClass { name: name.into(), size, power_maps: BTreeMap::new() };
        assert!(FiniteGroupData::new(3, vec![cls("e", 1), cls("g", 1)]).is_err());
        assert!(FiniteGroupData::new(2, vec![cls("e", 1), cls("e", 1)]).is_err());
        let mut g = cls("g", 1);
        g.power_maps.insert(2, "h".into());
        assert!(matches!(FiniteGroupData::new(2, vec![cls("e", 1), g]), Err(Error::UndefinedClass(_))));
        let mut g = cls("g", 2);
        g.power_maps.insert(2, "g".into());
        g.power_maps.insert(4, "e".into());
        assert!(FiniteGroupData::new(3, vec![cls("e", 1), g]).is_err());
    }

    #[test]
    fn c2_regular_example() {
        let c2 = FiniteGroupData::cyclic(2);
        let h = BTreeMap::from([("e".to_string(), lp("2")), ("g".to_string(), lp("0"))]);
        let s = c2.macdonald(&h, 4).unwrap();
        assert_eq!(s["g"].coeff(2), &LaurentPoly::one());
        assert_eq!(s["e"].coeff(2), &lp("3"));
        let missing = BTreeMap::from([("e".to_string(), lp("2"))]);
        assert!(matches!(c2.macdonald(&missing, 2), Err(Error::UndefinedClass(_))));
    }

    #[test]
    fn trivial_group_reduces_to_macdonald() {
        let p = lp("1-2*z+3*z^2");
        let s = FiniteGroupData::trivial().macdonald(&BTreeMap::from([("e".into(), p.clone())]), 8).unwrap();
        assert_eq!(s["e"], macdonald_series(&SpaceDescriptor::new("X", p.clone()), 8));
        // Constant h with all power maps landing on the same value also reduces.
        let s3 = FiniteGroupData::symmetric(3, 8);
        let h: BTreeMap<String, LaurentPoly> = s3.classes().iter().map(|c| (c.name.clone(), p.clone())).collect();
        for series in s3.macdonald(&h, 8).unwrap().values() {
            assert_eq!(series, &macdonald_series(&SpaceDescriptor::new("X", p.clone()), 8));
        }
    }

    #[test]
    fn class_average_gives_invariants() {
        // C_3 acting on itself: one invariant vector in degree 0.
        let c3 = FiniteGroupData::cyclic(3);
        let h = BTreeMap::from([("e".to_string(), lp("3")), ("g".to_string(), lp("0")), ("g2".to_string(), lp("0"))]);
        let s = c3.macdonald(&h, 3).unwrap();
        let avg = |n: usize| s.values().fold(LaurentPoly::from_int(0), |a, v| &a + v.coeff(n)).scale_by(&q_frac(1, 3));
        assert_eq!(avg(1), lp("1"));
    }

    #[test]
    fn cycle_type_powers() {
        let l = Partition::new(vec![6, 4, 1]).unwrap();
        assert_eq!(cycle_type_power(&l, 2), Partition::new(vec![3, 3, 2, 2, 1]).unwrap());
        assert_eq!(cycle_type_power(&l, 12), Partition::ones(11));
    }
}
