//! Commutative Q-algebras carrying Adams operations.
//!
//! Every coefficient ring used by the engine (rationals, Laurent polynomials,
//! symmetric functions over them, class-function rings, root-of-unity group
//! rings) implements [`AdamsRing`]. Series code is written once against it.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::Q;

/// A commutative Q-algebra with Adams operations `ψ_r`.
///
/// Implementations must satisfy `ψ_1 = id`, `ψ_r ∘ ψ_s = ψ_{rs}` and make each
/// `ψ_r` a ring endomorphism.
pub trait AdamsRing:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn adams(&self, r: usize) -> Self;

    fn from_rational(x: &Q) -> Self;

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn neg_ref(&self) -> Self {
        -self.clone()
    }

    fn scale(&self, x: &Q) -> Self {
        self.mul_ref(&Self::from_rational(x))
    }
}

impl AdamsRing for Q {
    fn adams(&self, _r: usize) -> Self {
        self.clone()
    }

    fn from_rational(x: &Q) -> Self {
        x.clone()
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
        self * x
    }
}

/// `x^k` by repeated squaring.
pub fn pow<C: AdamsRing>(x: &C, mut k: usize) -> C {
    let mut base = x.clone();
    let mut acc = C::one();
    while k > 0 {
        if k & 1 == 1 {
            acc = acc.mul_ref(&base);
        }
        k >>= 1;
        if k > 0 {
            base = base.mul_ref(&base);
        }
    }
    acc
}

/// Whether a printed coefficient has to be parenthesized before a factor.
pub(crate) fn needs_parens(s: &str) -> bool {
    s.char_indices().any(|(i, c)| i > 0 && (c == '+' || c == '-') && !s[..i].ends_with('^'))
}
