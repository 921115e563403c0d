//! Exact field arithmetic: prime fields GF(p), small extension fields
//! GF(p^k) presented as GF(p)[a]/(m(a)), and the Gaussian rationals Q(i).
//!
//! Everything is exact; there is no floating point anywhere in this
//! workspace. Fields are lightweight context objects and elements are plain
//! data, so both can be shared freely across threads.

mod ext;
mod gaussian;
mod polymod;
mod prime;
mod spec;

pub use ext::{embed, find_embedding_root, ExtElem, ExtField};
pub use gaussian::{GaussianRationals, Qi};
pub use polymod::is_irreducible;
pub use prime::PrimeField;
pub use spec::FieldSpec;

use std::fmt::Debug;
use std::hash::Hash;

/// Errors raised while constructing a field from a description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    /// The characteristic is neither 0 nor a prime.
    BadCharacteristic(u64),
    /// The extension modulus is not monic.
    NotMonic,
    /// The extension modulus factors over the prime field.
    Reducible,
    /// Extension degree outside the supported range 2..=4.
    BadDegree(usize),
    /// A malformed field or modulus literal.
    Parse(String),
}

impl std::fmt::Display for FieldError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldError::BadCharacteristic(p) => {
                write!(f, "characteristic {} is neither 0 nor prime", p)
            }
            FieldError::NotMonic => write!(f, "extension modulus is not monic"),
            FieldError::Reducible => write!(f, "extension modulus is reducible"),
            FieldError::BadDegree(d) => {
                write!(f, "extension degree {} unsupported (expected 2..=4)", d)
            }
            FieldError::Parse(s) => write!(f, "bad field literal: {}", s),
        }
    }
}

impl std::error::Error for FieldError {}

/// An exact field. The field value carries the context (characteristic,
/// modulus); elements are inert data reduced to a canonical form, so two
/// elements are equal iff their representations are equal.
pub trait Field: Clone + PartialEq + Eq + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static;

    /// 0 for characteristic zero, otherwise the prime p.
    fn characteristic(&self) -> u64;

    /// Number of elements, if finite.
    fn order(&self) -> Option<u64>;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn from_i64(&self, n: i64) -> Self::Elem;

    fn pow(&self, a: &Self::Elem, mut n: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    /// The p-th power map. Panics in characteristic 0.
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem {
        let p = self.characteristic();
        assert!(p > 0, "frobenius is only defined in positive characteristic");
        self.pow(a, p)
    }

    /// The distinguished generator: `a` for extension fields, `i` for the
    /// Gaussian rationals, absent for prime fields.
    fn generator(&self) -> Option<Self::Elem>;

    /// Name of the distinguished generator in element literals.
    fn generator_name(&self) -> Option<char>;

    /// Canonical text form; round-trips through the literal grammar.
    fn fmt_elem(&self, a: &Self::Elem) -> String;

    /// All field elements in a fixed enumeration order (finite fields only).
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    /// Rescale a nonempty coefficient run by a single common unit to the
    /// field's preferred working form. Over finite fields this makes the
    /// first coefficient 1; over Q(i) it clears denominators and divides by
    /// the integer content, which keeps Groebner intermediates small.
    fn normalize_unit(&self, coeffs: &mut [Self::Elem]) {
        if coeffs.is_empty() || self.is_zero(&coeffs[0]) {
            return;
        }
        let lead_inv = self.inv(&coeffs[0]);
        for c in coeffs.iter_mut() {
            *c = self.mul(c, &lead_inv);
        }
    }

    /// Multipliers (a, b) with a*cf = b*cg, used for the cancellation step
    /// a*f - b*m*g. The default keeps f unscaled; rings with integer
    /// structure divide out a gcd first so both multipliers stay small.
    fn reduction_pair(&self, cf: &Self::Elem, cg: &Self::Elem) -> (Self::Elem, Self::Elem) {
        (self.one(), self.div(cf, cg))
    }
}
