//! The spanning cubics on P^5 invariant under the square of the coordinate
//! shift and the diagonal character, the pencil member f_p they combine
//! into, and the group elements acting on the coordinates.

use crate::action::LinearAction;
use crate::parse::parse_poly;
use crate::poly::Polynomial;
use crate::ring::{multideg, Multidegree, Ring, RingRef};
use arith::Field;

pub const X_VARS: [&str; 6] = ["x0", "x1", "x2", "x3", "x4", "x5"];

/// k[x0..x5] with the standard grading.
pub fn p5_ring<F: Field>(field: F) -> RingRef<F> {
    Ring::standard(field, &X_VARS)
}

/// k[x0..x5, y0, y1] bigraded: x-variables degree (1,0), y-variables (0,1).
pub fn p5xp1_ring<F: Field>(field: F) -> RingRef<F> {
    let vars = ["x0", "x1", "x2", "x3", "x4", "x5", "y0", "y1"];
    let mut degrees: Vec<Multidegree> = vec![multideg(&[1, 0]); 6];
    degrees.push(multideg(&[0, 1]));
    degrees.push(multideg(&[0, 1]));
    Ring::with_degrees(field, &vars, degrees)
}

/// The four shift-square-invariant cubics spanning the pencil space
/// together with their sigma-translates.
pub fn spanning_cubics<F: Field>(ring: &RingRef<F>) -> [Polynomial<F>; 4] {
    let f0 = parse_poly("x0^3+x2^3+x4^3", ring).unwrap();
    let f1 = parse_poly("x1^2*x4+x3^2*x0+x5^2*x2", ring).unwrap();
    let f2 = parse_poly("x1*x2*x3+x3*x4*x5+x5*x0*x1", ring).unwrap();
    let f3 = parse_poly("x0*x2*x4", ring).unwrap();
    [f0, f1, f2, f3]
}

/// The order-6 coordinate shift acting on polynomials by x_i -> x_{i+1}.
pub fn sigma<F: Field>(ring: &RingRef<F>) -> LinearAction<F> {
    shift_by(ring, 1)
}

/// x_i -> x_{i+k mod 6} (indices taken among the first six variables; any
/// remaining variables are fixed).
pub fn shift_by<F: Field>(ring: &RingRef<F>, k: usize) -> LinearAction<F> {
    let n = ring.nvars();
    assert!(n >= 6);
    let mut perm: Vec<usize> = (0..n).collect();
    for (i, p) in perm.iter_mut().enumerate().take(6) {
        *p = (i + k) % 6;
    }
    LinearAction::permutation(ring, &perm, Some(&format!("s^{}", k)))
}

/// The honest cube of the diagonal character: diag(1,-1,1,-1,1,-1), defined
/// in every characteristic different from 2.
pub fn tau_cubed<F: Field>(ring: &RingRef<F>) -> LinearAction<F> {
    let field = &ring.field;
    let n = ring.nvars();
    let mut scalars = vec![field.one(); n];
    for (i, s) in scalars.iter_mut().enumerate().take(6) {
        *s = if i % 2 == 1 {
            field.from_i64(-1)
        } else {
            field.one()
        };
    }
    LinearAction::diagonal(ring, &scalars, Some("t^3"))
}

/// Weight vector of the diagonal mu_6 character on x0..x5: x_j scales by
/// zeta^{-w_j} with w_j = j mod 6. A polynomial is invariant iff every
/// monomial has weight 0 mod 6.
pub fn mu6_weights() -> [u32; 6] {
    [0, 1, 2, 3, 4, 5]
}

/// Weights of the square of the character, a mu_3 action: w_j = j mod 3.
pub fn mu3_weights() -> [u32; 6] {
    [0, 1, 2, 0, 1, 2]
}

/// Weight of a polynomial's monomials mod n, if they all agree.
pub fn uniform_weight<F: Field>(f: &Polynomial<F>, weights: &[u32], n: u32) -> Option<u32> {
    let mut seen: Option<u32> = None;
    for (m, _) in f.terms() {
        let mut w = 0u32;
        for (i, &e) in m.0.iter().enumerate().take(weights.len()) {
            w = (w + weights[i] * e as u32) % n;
        }
        match seen {
            None => seen = Some(w),
            Some(s) if s != w => return None,
            _ => {}
        }
    }
    seen
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroParameterVector;

impl std::fmt::Display for ZeroParameterVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parameter vector must be nonzero")
    }
}

impl std::error::Error for ZeroParameterVector {}

/// f_p = p0 f0 + p1 f1 + p2 f2 + p3 f3 and its sigma-translate.
pub fn build_fp<F: Field>(
    ring: &RingRef<F>,
    p: &[F::Elem; 4],
) -> Result<(Polynomial<F>, Polynomial<F>), ZeroParameterVector> {
    let field = &ring.field;
    if p.iter().all(|c| field.is_zero(c)) {
        return Err(ZeroParameterVector);
    }
    let cubics = spanning_cubics(ring);
    let mut fp = Polynomial::zero(ring);
    for (c, f) in p.iter().zip(cubics.iter()) {
        fp = fp.add(&f.scale(c));
    }
    let sfp = crate::action::substitute(&fp, &sigma(ring));
    Ok((fp, sfp))
}

/// Parse the four comma-separated parameter coordinates in field literal
/// syntax, e.g. `1,a+1,-a,-a`.
pub fn parse_parameter<F: Field>(text: &str, ring: &RingRef<F>) -> Result<[F::Elem; 4], String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected 4 coordinates, got {}", parts.len()));
    }
    let mut out = vec![];
    for part in parts {
        let poly = parse_poly(part.trim(), ring).map_err(|e| e.to_string())?;
        if poly.is_zero() {
            out.push(ring.field.zero());
        } else if poly.num_terms() == 1 && poly.terms()[0].0.is_one() {
            out.push(poly.terms()[0].1.clone());
        } else {
            return Err(format!("`{}` is not a field constant", part));
        }
    }
    Ok([
        out[0].clone(),
        out[1].clone(),
        out[2].clone(),
        out[3].clone(),
    ])
}
