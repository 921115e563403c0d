//! Groebner bases (Buchberger), normal forms, and the ideal calculus:
//! sums, products, saturation, elimination, dimension, degree, and Hilbert
//! series/function/polynomial data.

mod engine;
mod hilbert;
mod ideal;
mod order;

pub use engine::{buchberger, GroebnerBasis};
pub use hilbert::{
    hilbert, hilbert_from_lts, hilbert_function, hilbert_function_from_lts, series_numerator,
    standard_monomials, HilbertData, HilbertError,
};
pub use ideal::{eliminate, intersect, saturate, saturate_poly, Ideal};
pub use order::MonomialOrder;
