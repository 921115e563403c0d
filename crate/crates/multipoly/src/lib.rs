//! Sparse multivariate polynomials over an exact field, with single- or
//! bigraded structure, a text front-end, and linear substitution actions.

pub mod action;
pub mod cubics;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;

pub use action::{substitute, ActionError, LinearAction};
pub use monomial::{grevlex, Monomial};
pub use parse::{parse_poly, ParseError};
pub use poly::Polynomial;
pub use ring::{multideg, Multidegree, Ring, RingRef};
