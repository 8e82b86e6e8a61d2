//! Equivariant versions of the generating series: an endomorphism acting on
//! cohomology (traces and Lefschetz zeta functions), a finite group acting
//! through class functions, and finite-order automorphisms through
//! eigenvalue-refined classes.

mod group;
mod matrix;
mod ratfunc;
mod roots;

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use group::{cycle_type_power, group_macdonald, FiniteGroupData, GroupClass};
pub use matrix::QMatrix;
pub use ratfunc::{RationalFunctionSeries, UniPoly};
pub use roots::{finite_order_series, MuPoly, Root, RootOfUnityElement};

use crate::coeffring::LaurentPoly;
use crate::error::{Error, Result};
use crate::rational::Q;
use crate::series::TruncatedSeries;

/// An endomorphism `g` of a graded vector space, one matrix per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedEndomorphism {
    blocks: BTreeMap<i64, QMatrix>,
}

impl GradedEndomorphism {
    pub fn new<I: IntoIterator<Item = (i64, QMatrix)>>(blocks: I) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (k, m) in blocks {
            if map.insert(k, m).is_some() {
                return Err(Error::DuplicateBlock(k));
            }
        }
        Ok(Self { blocks: map })
    }

    /// Identity on a space with the given Betti numbers.
    pub fn identity(betti: &BTreeMap<i64, usize>) -> Self {
        Self { blocks: betti.iter().map(|(&k, &b)| (k, QMatrix::identity(b))).collect() }
    }

    pub fn blocks(&self) -> &BTreeMap<i64, QMatrix> {
        &self.blocks
    }

    /// `P^g(z) = Σ_k tr(g | H^k) (-z)^k`.
    pub fn graded_trace_poly(&self) -> LaurentPoly {
        self.blocks.iter().fold(LaurentPoly::zero(), |acc, (&k, m)| {
            let sign = if k.rem_euclid(2) == 0 { Q::one() } else { -Q::one() };
            &acc + &LaurentPoly::monomial(vec!["z".into()], vec![k], sign * m.trace())
        })
    }

    /// `g^r` blockwise.
    pub fn endo_power(&self, r: usize) -> Self {
        assert!(r >= 1, "powers are indexed from 1");
        Self { blocks: self.blocks.iter().map(|(&k, m)| (k, m.pow(r))).collect() }
    }
}

#[derive(Serialize, Deserialize)]
struct BlockWire {
    degree: i64,
    matrix: QMatrix,
}

#[derive(Serialize, Deserialize)]
struct EndoWire {
    blocks: Vec<BlockWire>,
}

impl Serialize for GradedEndomorphism {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EndoWire { blocks: self.blocks.iter().map(|(&degree, m)| BlockWire { degree, matrix: m.clone() }).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedEndomorphism {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = EndoWire::deserialize(d)?;
        Self::new(w.blocks.into_iter().map(|b| (b.degree, b.matrix))).map_err(serde::de::Error::custom)
    }
}

/// `det(1 - tM)` as a polynomial in `t`.
pub fn det_one_minus(m: &QMatrix) -> UniPoly {
    UniPoly::new(m.char_poly_coeffs())
}

/// `det(1 + tM)` as a polynomial in `t`.
pub fn det_one_plus(m: &QMatrix) -> UniPoly {
    UniPoly::new(m.char_poly_coeffs().into_iter().enumerate().map(|(i, c)| if i % 2 == 0 { c } else { -c }).collect())
}

/// `L(V, g)(t) = det(1 - tg)^{-1}`; its `t^i` coefficient is the trace of `g`
/// on `Sym^i V`.
pub fn l_function(m: &QMatrix) -> RationalFunctionSeries {
    RationalFunctionSeries::new(UniPoly::one(), det_one_minus(m)).expect("constant term 1")
}

/// `λ_t(V, g) = det(1 + tg)`; its `t^i` coefficient is the trace of `g` on
/// `Λ^i V`.
pub fn char_poly_lambda(m: &QMatrix) -> RationalFunctionSeries {
    RationalFunctionSeries::polynomial(det_one_plus(m)).expect("constant term 1")
}

/// `Σ_n P^g(X^{(n)}) t^n`, computed both as `exp(Σ_r P^{g^r}(z^r) t^r / r)`
/// and as `Π_k L(H^k, g)(z^k t)^{(-1)^k}`. The two must agree; a mismatch is
/// reported as [`Error::Inconsistent`]. With `graded = false`, `z = 1`.
pub fn lefschetz_zeta(g: &GradedEndomorphism, n: usize, graded: bool) -> Result<TruncatedSeries<LaurentPoly>> {
    let exp_form = lefschetz_exp_form(g, n);
    let prod_form = lefschetz_product_form(g, n);
    if let Some(i) = (0..=n).find(|&i| exp_form.coeff(i) != prod_form.coeff(i)) {
        return Err(Error::Inconsistent {
            identity: "Lefschetz zeta: exp form vs L-function product".into(),
            location: format!("t^{i}"),
        });
    }
    if graded {
        Ok(exp_form)
    } else {
        let z1 = BTreeMap::from([("z".to_string(), LaurentPoly::one())]);
        exp_form.try_map_coeffs(|c| c.specialize(&z1))
    }
}

/// `exp(Σ_r P^{g^r}(z^r) t^r / r)`.
pub fn lefschetz_exp_form(g: &GradedEndomorphism, n: usize) -> TruncatedSeries<LaurentPoly> {
    let arg = TruncatedSeries::from_fn(n, |r| {
        if r == 0 {
            LaurentPoly::zero()
        } else {
            g.endo_power(r).graded_trace_poly().adams(r).scale_by(&Q::new(1.into(), (r as i64).into()))
        }
    });
    arg.exp().expect("zero constant term")
}

/// `Π_k L(H^k, g)(z^k t)^{(-1)^k}`.
pub fn lefschetz_product_form(g: &GradedEndomorphism, n: usize) -> TruncatedSeries<LaurentPoly> {
    let mut acc = TruncatedSeries::one(n);
    for (&k, m) in g.blocks() {
        let det = det_one_minus(m);
        let factor = TruncatedSeries::new(
            n,
            (0..=n).map(|i| LaurentPoly::monomial(vec!["z".into()], vec![k * i as i64], det.coeff(i))).collect(),
        );
        let factor = if k.rem_euclid(2) == 0 { factor.inverse().expect("constant term 1") } else { factor };
        acc = &acc * &factor;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::{macdonald_series, SpaceDescriptor};
    use crate::rational::q;
    use crate::symfunc::{e_basis, h_basis, SymFunc};
    use proptest::prelude::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn p1_map(d: i64) -> GradedEndomorphism {
        GradedEndomorphism::new([(0, QMatrix::from_ints(&[&[1]]).unwrap()), (2, QMatrix::from_ints(&[&[d]]).unwrap())])
            .unwrap()
    }

    fn coeffs(s: &TruncatedSeries<Q>) -> Vec<Q> {
        s.coeffs().to_vec()
    }

    #[test]
    fn trace_poly_examples() {
        assert_eq!(GradedEndomorphism::identity(&BTreeMap::from([(0, 1), (2, 1)])).graded_trace_poly(), lp("1+z^2"));
        assert_eq!(p1_map(3).graded_trace_poly(), lp("1+3*z^2"));
        let zero = GradedEndomorphism::new([(1, QMatrix::zero(2))]).unwrap();
        assert!(zero.graded_trace_poly().is_zero());
        assert!(matches!(
            GradedEndomorphism::new([(0, QMatrix::identity(1)), (0, QMatrix::identity(1))]),
            Err(Error::DuplicateBlock(0))
        ));
    }

    #[test]
    fn endo_power_examples() {
        let g = p1_map(5);
        assert_eq!(g.endo_power(1), g);
        let swap = GradedEndomorphism::new([(0, QMatrix::from_ints(&[&[0, 1], &[1, 0]]).unwrap())]).unwrap();
        assert_eq!(swap.endo_power(2).blocks()[&0], QMatrix::identity(2));
        assert_eq!(swap.endo_power(2).graded_trace_poly(), lp("2"));
        let two = GradedEndomorphism::new([(0, QMatrix::from_ints(&[&[2]]).unwrap())]).unwrap();
        assert_eq!(two.endo_power(3).graded_trace_poly(), lp("8"));
    }

    #[test]
    fn l_function_examples() {
        let one = l_function(&QMatrix::from_ints(&[&[1]]).unwrap());
        assert_eq!(coeffs(&one.expand(4)), vec![q(1); 5]);
        let two = l_function(&QMatrix::from_ints(&[&[2]]).unwrap());
        assert_eq!(coeffs(&two.expand(4)), vec![q(1), q(2), q(4), q(8), q(16)]);
        let swap = QMatrix::from_ints(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(l_function(&swap).denominator(), &UniPoly::new(vec![q(1), q(0), q(-1)]));
        assert_eq!(char_poly_lambda(&swap).numerator(), &UniPoly::new(vec![q(1), q(0), q(-1)]));
        assert_eq!(char_poly_lambda(&QMatrix::identity(2)).numerator(), &UniPoly::new(vec![q(1), q(2), q(1)]));
        assert_eq!(char_poly_lambda(&QMatrix::zero(1)).numerator(), &UniPoly::one());
    }

    #[test]
    fn zeta_examples() {
        let id = p1_map(1);
        let p1 = SpaceDescriptor::new("P1", lp("1+z^2"));
        assert_eq!(lefschetz_zeta(&id, 8, true).unwrap(), macdonald_series(&p1, 8));
        for d in [-2, 0, 2, 3] {
            // 1/((1 - t)(1 - d t)) and 1/((1 - t)(1 - d z^2 t))
            let ungraded = lefschetz_zeta(&p1_map(d), 6, false).unwrap();
            let want: Vec<LaurentPoly> =
                (0..=6u32).map(|n| LaurentPoly::from_int((0..=n).map(|k| d.pow(k)).sum())).collect();
            assert_eq!(ungraded.coeffs(), &want[..]);
            let graded = lefschetz_zeta(&p1_map(d), 6, true).unwrap();
            for n in 0..=6usize {
                let w = (0..=n as i64).fold(LaurentPoly::zero(), |acc, k| {
                    &acc + &LaurentPoly::monomial(vec!["z".into()], vec![2 * k], q(d.pow(k as u32)))
                });
                assert_eq!(graded.coeff(n), &w);
            }
        }
    }

    fn arb_matrix(max_dim: usize) -> impl Strategy<Value = QMatrix> {
        (1..=max_dim).prop_flat_map(|n| {
            prop::collection::vec(-2i64..=2, n * n).prop_map(move |v| {
                QMatrix::new(v.chunks(n).map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
            })
        })
    }

    fn arb_endo() -> impl Strategy<Value = GradedEndomorphism> {
        prop::collection::btree_map(0i64..=4, arb_matrix(3), 1..4).prop_map(|m| GradedEndomorphism::new(m).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn zeta_forms_agree(g in arb_endo()) {
            prop_assert!(lefschetz_zeta(&g, 8, true).is_ok());
            prop_assert_eq!(lefschetz_exp_form(&g, 8), lefschetz_product_form(&g, 8));
        }

        #[test]
        fn newton_identities(m in arb_matrix(3)) {
            // t^i coefficient of L equals h_i at p_r = tr(M^r), and of λ_t
            // equals e_i at the same point.
            let l = l_function(&m).expand(6);
            let lam = char_poly_lambda(&m).expand(6);
            let traces: Vec<Q> = (0..=6).map(|r| if r == 0 { q(1) } else { m.pow(r).trace() }).collect();
            for i in 0..=6 {
                let h: SymFunc<Q> = h_basis(i);
                let e: SymFunc<Q> = e_basis(i);
                prop_assert_eq!(h.specialize_p(|r| Some(traces[r].clone())).unwrap(), l.coeff(i).clone());
                prop_assert_eq!(e.specialize_p(|r| Some(traces[r].clone())).unwrap(), lam.coeff(i).clone());
            }
        }

        #[test]
        fn l_function_multiplicative(a in arb_matrix(3), b in arb_matrix(2)) {
            let sum = QMatrix::block_diag(&[a.clone(), b.clone()]);
            prop_assert_eq!(l_function(&sum), l_function(&a).mul(&l_function(&b)));
            prop_assert_eq!(l_function(&sum).expand(8), &l_function(&a).expand(8) * &l_function(&b).expand(8));
        }

        #[test]
        fn endo_power_law(g in arb_endo(), r in 1usize..4, s in 1usize..4) {
            prop_assert_eq!(g.endo_power(r).endo_power(s), g.endo_power(r * s));
        }
    }
}
