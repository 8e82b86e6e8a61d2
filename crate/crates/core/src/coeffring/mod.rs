//! Coefficient pre-lambda rings: Laurent polynomials over Q with Adams
//! operations by exponent scaling, and the Poincaré / Hodge constructors.
//!
//! Cohomological degree `k` always enters as `(-z)^k`, so odd classes carry
//! the Koszul sign through every Adams operation: `ψ_r(-z) = -z^r`.

mod laurent;
mod parse;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

pub use laurent::{Exponent, LaurentPoly};
pub use parse::parse_laurent;

use crate::error::{Error, Result};
use crate::rational::Q;

fn signed_power(k: i64) -> Q {
    if k.rem_euclid(2) == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

/// `Σ_k b_k (-z)^k` in the single variable `z`.
pub fn from_betti(betti: &BTreeMap<i64, i64>) -> Result<LaurentPoly> {
    let mut terms = Vec::new();
    for (&k, &b) in betti {
        if b < 0 {
            return Err(Error::NegativeDimension { degree: k, dim: b.to_string() });
        }
        terms.push((vec![k], signed_power(k) * Q::from_integer(BigInt::from(b))));
    }
    LaurentPoly::from_terms(vec!["z".into()], terms)
}

/// One entry `h^{p,q,k}` of a mixed Hodge table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct HodgeNumber {
    pub p: i64,
    pub q: i64,
    pub k: i64,
    pub dim: i64,
}

/// `Σ h^{p,q,k} y^p x^q (-z)^k` in the variables `y, x, z`.
pub fn from_hodge(entries: &[HodgeNumber]) -> Result<LaurentPoly> {
    let mut terms = Vec::new();
    for h in entries {
        if h.dim < 0 {
            return Err(Error::NegativeDimension { degree: h.k, dim: h.dim.to_string() });
        }
        terms.push((vec![h.p, h.q, h.k], signed_power(h.k) * Q::from_integer(BigInt::from(h.dim))));
    }
    LaurentPoly::from_terms(vec!["y".into(), "x".into(), "z".into()], terms)
}

/// `ψ_r` on a Laurent polynomial.
pub fn adams(f: &LaurentPoly, r: usize) -> LaurentPoly {
    f.adams(r)
}

/// Substitution homomorphism.
pub fn specialize(f: &LaurentPoly, assignment: &BTreeMap<String, LaurentPoly>) -> Result<LaurentPoly> {
    f.specialize(assignment)
}

/// Convenience: assignment map from `(name, value)` pairs.
pub fn assignment<I, S>(pairs: I) -> BTreeMap<String, LaurentPoly>
where
    I: IntoIterator<Item = (S, LaurentPoly)>,
    S: Into<String>,
{
    pairs.into_iter().map(|(k, v)| (k.into(), v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_frac};
    use num_traits::Zero;
    use proptest::prelude::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn adams_examples() {
        assert_eq!(adams(&lp("1+z^2"), 2), lp("1+z^4"));
        assert_eq!(adams(&LaurentPoly::one(), 5), LaurentPoly::one());
        assert_eq!(adams(&lp("y*x^-1+2*z"), 3), lp("y^3*x^-3+2*z^3"));
    }

    #[test]
    fn betti_examples() {
        let p1 = from_betti(&BTreeMap::from([(0, 1), (2, 1)])).unwrap();
        assert_eq!(p1, lp("1+z^2"));
        assert!(from_betti(&BTreeMap::new()).unwrap().is_zero());
        assert_eq!(from_betti(&BTreeMap::from([(0, 1), (1, 2)])).unwrap(), lp("1-2*z"));
        assert_eq!(from_betti(&BTreeMap::from([(-1, 1)])).unwrap(), lp("-z^-1"));
        assert!(matches!(from_betti(&BTreeMap::from([(0, -1)])), Err(Error::NegativeDimension { .. })));
    }

    #[test]
    fn hodge_examples() {
        let pt = from_hodge(&[HodgeNumber { p: 0, q: 0, k: 0, dim: 1 }]).unwrap();
        assert_eq!(pt, LaurentPoly::one());
        let p1 =
            from_hodge(&[HodgeNumber { p: 0, q: 0, k: 0, dim: 1 }, HodgeNumber { p: 1, q: 1, k: 2, dim: 1 }]).unwrap();
        assert_eq!(p1, lp("1+y*x*z^2"));
        let yx1 = assignment([("y", LaurentPoly::one()), ("x", LaurentPoly::one())]);
        assert_eq!(p1.specialize(&yx1).unwrap(), lp("1+z^2"));
        assert!(from_hodge(&[HodgeNumber { p: 0, q: 0, k: 0, dim: -2 }]).is_err());
    }

    #[test]
    fn specialize_examples() {
        let z1 = assignment([("z", LaurentPoly::one())]);
        assert_eq!(lp("1+z^2").specialize(&z1).unwrap(), LaurentPoly::from_int(2));
        let id = assignment([("z", lp("z"))]);
        assert_eq!(lp("1-3*z^-2+z").specialize(&id).unwrap(), lp("1-3*z^-2+z"));
        let bad = assignment([("z", lp("1+z"))]);
        assert!(matches!(lp("z^-1").specialize(&bad), Err(Error::NotInvertible { .. })));
        let zero = assignment([("z", LaurentPoly::zero())]);
        assert!(lp("z^-1").specialize(&zero).is_err());
        let half = assignment([("z", LaurentPoly::constant(q_frac(1, 2)))]);
        assert_eq!(lp("z^-2").specialize(&half).unwrap(), LaurentPoly::constant(q(4)));
        let mono = assignment([("z", lp("2*u"))]);
        assert_eq!(lp("z^-1+z").specialize(&mono).unwrap(), lp("1/2*u^-1+2*u"));
    }

    #[test]
    fn display_and_parse() {
        let f = lp("y*x^-1 - 2*z + 1/2");
        assert_eq!(f.to_string(), "1/2+y*x^-1-2*z");
        assert_eq!(lp("(1+z)^2"), lp("1+2*z+z^2"));
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(lp("-z").to_string(), "-z");
        assert!("1+".parse::<LaurentPoly>().is_err());
        assert!("(1+z)^-1".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn json_round_trip_and_schema() {
        let json = r#"{"vars":["y","x","z"],"terms":[{"exp":[0,0,0],"coeff":"1"},{"exp":[1,1,2],"coeff":"1"}]}"#;
        let f: LaurentPoly = serde_json::from_str(json).unwrap();
        assert_eq!(f, lp("1+y*x*z^2"));
        assert_eq!(serde_json::to_string(&f).unwrap(), json);
        let g: LaurentPoly = serde_json::from_str(r#""1+z^2""#).unwrap();
        assert_eq!(g, lp("1+z^2"));
        assert!(serde_json::from_str::<LaurentPoly>(r#"{"vars":["z"],"terms":[{"exp":[1,2],"coeff":"1"}]}"#).is_err());
    }

    #[test]
    fn mixed_variable_sets() {
        let a = lp("z");
        let b = lp("u+1");
        assert_eq!(&a * &b, lp("z*u+z"));
        assert_eq!(lp("z-z+u"), lp("u"));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        let term = (-2i64..=3, -2i64..=3, -3i64..=3, 1i64..=3).prop_map(|(a, b, c, d)| (vec![a, b], q_frac(c, d)));
        prop::collection::vec(term, 0..4)
            .prop_map(|ts| LaurentPoly::from_terms(vec!["x".into(), "z".into()], ts).unwrap())
    }

    proptest! {
        #[test]
        fn adams_is_ring_hom(f in arb_poly(), g in arb_poly(), r in 1usize..5) {
            prop_assert_eq!(adams(&(&f + &g), r), &adams(&f, r) + &adams(&g, r));
            prop_assert_eq!(adams(&(&f * &g), r), &adams(&f, r) * &adams(&g, r));
        }

        #[test]
        fn adams_composes(f in arb_poly(), r in 1usize..5, s in 1usize..5) {
            prop_assert_eq!(adams(&adams(&f, s), r), adams(&f, r * s));
            prop_assert_eq!(adams(&f, 1), f);
        }

        #[test]
        fn display_parses_back(f in arb_poly()) {
            let back: LaurentPoly = f.to_string().parse().unwrap();
            prop_assert_eq!(back, f);
        }

        #[test]
        fn hodge_specializes_to_betti(
            entries in prop::collection::vec((0i64..3, 0i64..3, -1i64..5, 0i64..4), 0..6)
        ) {
            let hodge: Vec<HodgeNumber> =
                entries.iter().map(|&(p, q, k, dim)| HodgeNumber { p, q, k, dim }).collect();
            let mut betti = BTreeMap::new();
            for h in &hodge {
                *betti.entry(h.k).or_insert(0) += h.dim;
            }
            let yx1 = assignment([("y", LaurentPoly::one()), ("x", LaurentPoly::one())]);
            prop_assert_eq!(
                from_hodge(&hodge).unwrap().specialize(&yx1).unwrap(),
                from_betti(&betti).unwrap()
            );
        }

        #[test]
        fn specialize_commutes_with_adams_on_variable_maps(f in arb_poly(), r in 1usize..4) {
            let swap = assignment([("x", lp("z")), ("z", lp("x"))]);
            prop_assert_eq!(
                adams(&f.specialize(&swap).unwrap(), r),
                adams(&f, r).specialize(&swap).unwrap()
            );
        }
    }
}
