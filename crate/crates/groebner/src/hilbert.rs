//! Hilbert series, functions, polynomials, dimension and degree, all read
//! off the leading-term ideal. The numerator recursion is the standard
//! pivot-splitting algorithm on monomial ideals.

use crate::ideal::Ideal;
use crate::order::MonomialOrder;
use arith::Field;
use multipoly::{multideg, Monomial, Multidegree, RingRef};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HilbertError {
    NonHomogeneous,
    WrongGradingRank { expected: usize, got: usize },
}

impl std::fmt::Display for HilbertError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HilbertError::NonHomogeneous => write!(f, "ideal is not homogeneous"),
            HilbertError::WrongGradingRank { expected, got } => {
                write!(f, "grading rank {} where {} required", got, expected)
            }
        }
    }
}

impl std::error::Error for HilbertError {}

/// Numerator of the multigraded Hilbert series of S/I over the standard
/// denominator, as a map multidegree -> integer coefficient.
pub fn series_numerator<F: Field>(
    lts: &[Monomial],
    ring: &RingRef<F>,
) -> HashMap<Multidegree, i64> {
    let mut gens: Vec<Monomial> = lts.to_vec();
    minimalize(&mut gens);
    let mut out = HashMap::new();
    numerator_rec(&gens, ring, &mut out, &multideg(&vec![0; ring.grading_rank()]), 1);
    out.retain(|_, v| *v != 0);
    out
}

fn minimalize(gens: &mut Vec<Monomial>) {
    gens.sort_by_key(|m| m.degree());
    let mut kept: Vec<Monomial> = vec![];
    for g in gens.iter() {
        if !kept.iter().any(|k| k.divides(g)) {
            kept.push(g.clone());
        }
    }
    *gens = kept;
}

fn add_multideg(a: &Multidegree, b: &Multidegree) -> Multidegree {
    a.iter().zip(b.iter()).map(|(x, y)| x + y).collect()
}

fn numerator_rec<F: Field>(
    gens: &[Monomial],
    ring: &RingRef<F>,
    out: &mut HashMap<Multidegree, i64>,
    shift: &Multidegree,
    sign: i64,
) {
    if gens.is_empty() {
        *out.entry(shift.clone()).or_insert(0) += sign;
        return;
    }
    // pairwise coprime: regular sequence, product formula
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, g)| gens[i + 1..].iter().all(|h| g.coprime_with(h)));
    if coprime {
        // expand prod (1 - t^deg g_i)
        let mut acc: HashMap<Multidegree, i64> = HashMap::new();
        acc.insert(shift.clone(), sign);
        for g in gens {
            let d = ring.mono_degree(g);
            let mut next: HashMap<Multidegree, i64> = HashMap::with_capacity(acc.len() * 2);
            for (k, v) in &acc {
                *next.entry(k.clone()).or_insert(0) += v;
                *next.entry(add_multideg(k, &d)).or_insert(0) -= v;
            }
            acc = next;
        }
        for (k, v) in acc {
            *out.entry(k).or_insert(0) += v;
        }
        return;
    }
    // Pivot on the most used variable with exponent one. After
    // minimalization and the coprime base case that variable has at least
    // two users and is not itself a generator, so both branches strictly
    // shrink (generator count + total exponent sum) and the recursion
    // terminates.
    let nvars = ring.nvars();
    let mut counts = vec![0usize; nvars];
    for g in gens {
        for (i, &e) in g.0.iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let v = (0..nvars).max_by_key(|&i| counts[i]).unwrap();
    debug_assert!(counts[v] >= 2);
    let pivot = Monomial::var(nvars, v, 1);

    // I + (x_v): generators using x_v drop out
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.0[v] == 0).cloned().collect();
    plus.push(pivot.clone());
    numerator_rec(&plus, ring, out, shift, sign);

    // I : x_v: lower every x_v exponent by one
    let mut colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut m = g.clone();
            m.0[v] = m.0[v].saturating_sub(1);
            m
        })
        .collect();
    minimalize(&mut colon);
    let shift2 = add_multideg(shift, &ring.mono_degree(&pivot));
    numerator_rec(&colon, ring, out, &shift2, sign);
}

/// Dimension, degree, and Hilbert polynomial of a single-graded quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    /// Numerator coefficients of the Hilbert series, index = degree.
    pub numerator: Vec<i64>,
    /// Projective dimension; -1 encodes the empty scheme.
    pub dimension: i64,
    /// Degree (the length, for zero-dimensional schemes); 0 when empty.
    pub degree: i64,
    /// Hilbert polynomial coefficients, index = power of the variable.
    pub hilbert_polynomial: Vec<BigRational>,
}

impl HilbertData {
    pub fn eval_polynomial(&self, d: i64) -> BigRational {
        let mut acc = BigRational::zero();
        let dd = BigRational::from_integer(BigInt::from(d));
        for c in self.hilbert_polynomial.iter().rev() {
            acc = acc * &dd + c;
        }
        acc
    }
}

/// Multiply polynomial (coeff vec) by the linear factor (d + a).
fn mul_linear(poly: &mut Vec<BigRational>, a: i64) {
    let a = BigRational::from_integer(BigInt::from(a));
    let mut out = vec![BigRational::zero(); poly.len() + 1];
    for (i, c) in poly.iter().enumerate() {
        out[i] = &out[i] + c * &a;
        out[i + 1] = &out[i + 1] + c;
    }
    *poly = out;
}

/// The binomial C(d + c, k) as a polynomial in d.
fn binomial_poly(c: i64, k: usize) -> Vec<BigRational> {
    let mut poly = vec![BigRational::one()];
    for j in 0..k {
        mul_linear(&mut poly, c - j as i64);
    }
    let mut fact = BigInt::one();
    for j in 1..=k {
        fact *= BigInt::from(j as i64);
    }
    let f = BigRational::from_integer(fact);
    for coef in poly.iter_mut() {
        *coef = &*coef / &f;
    }
    poly
}

fn trim_poly(poly: &mut Vec<BigRational>) {
    while poly.last().map(|c| c.is_zero()).unwrap_or(false) {
        poly.pop();
    }
}

/// Hilbert data of S/I from the grevlex leading terms. Errors if the ideal
/// is not homogeneous or the grading is not single.
pub fn hilbert<F: Field>(ideal: &Ideal<F>) -> Result<HilbertData, HilbertError> {
    let ring = ideal.ring();
    if ring.grading_rank() != 1 {
        return Err(HilbertError::WrongGradingRank {
            expected: 1,
            got: ring.grading_rank(),
        });
    }
    if !ideal.is_homogeneous() {
        return Err(HilbertError::NonHomogeneous);
    }
    let gb = ideal.gb(MonomialOrder::Grevlex);
    Ok(hilbert_from_lts(gb.leading_terms(), ring))
}

pub fn hilbert_from_lts<F: Field>(lts: &[Monomial], ring: &RingRef<F>) -> HilbertData {
    let n = ring.nvars();
    assert!(ring.grading_rank() == 1);
    assert!(
        (0..n).all(|i| ring.var_degree(i)[0] == 1),
        "standard grading required"
    );
    let map = series_numerator(lts, ring);
    let max_deg = map.keys().map(|k| k[0]).max().unwrap_or(0) as usize;
    let mut numerator = vec![0i64; max_deg + 1];
    for (k, v) in &map {
        numerator[k[0] as usize] += v;
    }
    // Hilbert polynomial: sum_i numerator[i] * C(d - i + n - 1, n - 1)
    let mut hp = vec![BigRational::zero()];
    for (i, &c) in numerator.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let b = binomial_poly(n as i64 - 1 - i as i64, n - 1);
        if hp.len() < b.len() {
            hp.resize(b.len(), BigRational::zero());
        }
        let ci = BigRational::from_integer(BigInt::from(c));
        for (j, bc) in b.iter().enumerate() {
            hp[j] = &hp[j] + bc * &ci;
        }
    }
    trim_poly(&mut hp);
    let dimension = hp.len() as i64 - 1; // -1 for the zero polynomial
    let degree = if dimension < 0 {
        0
    } else {
        let mut fact = BigInt::one();
        for j in 1..=dimension {
            fact *= BigInt::from(j);
        }
        let lead = hp.last().unwrap() * BigRational::from_integer(fact);
        assert!(lead.is_integer(), "degree must be an integer");
        assert!(lead.is_positive(), "degree must be positive");
        lead.to_integer().to_i64().expect("degree fits in i64")
    };
    HilbertData {
        numerator,
        dimension,
        degree,
        hilbert_polynomial: hp,
    }
}

/// Exact Hilbert function of S/I in degree d, evaluated from the series.
pub fn hilbert_function<F: Field>(ideal: &Ideal<F>, d: u32) -> u64 {
    let ring = ideal.ring();
    assert!(ring.grading_rank() == 1);
    let gb = ideal.gb(MonomialOrder::Grevlex);
    hilbert_function_from_lts(gb.leading_terms(), ring, d)
}

pub fn hilbert_function_from_lts<F: Field>(
    lts: &[Monomial],
    ring: &RingRef<F>,
    d: u32,
) -> u64 {
    let n = ring.nvars() as i64;
    let map = series_numerator(lts, ring);
    let mut acc = BigInt::zero();
    for (k, v) in &map {
        let i = k[0];
        if i <= d as i64 {
            acc += BigInt::from(*v) * binomial_int(d as i64 - i + n - 1, n - 1);
        }
    }
    assert!(!acc.is_negative());
    acc.to_u64().expect("Hilbert function value fits in u64")
}

fn binomial_int(n: i64, k: i64) -> BigInt {
    if n < k || k < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// All monomials of the given multidegree, in no particular order.
fn monomials_of_multidegree<F: Field>(ring: &RingRef<F>, target: &Multidegree) -> Vec<Monomial> {
    let n = ring.nvars();
    let mut out = vec![];
    let mut current = Monomial::one(n);
    fn rec<F: Field>(
        ring: &RingRef<F>,
        var: usize,
        remaining: &Multidegree,
        current: &mut Monomial,
        out: &mut Vec<Monomial>,
    ) {
        let n = ring.nvars();
        if remaining.iter().all(|&r| r == 0) {
            // any remaining variables stay at exponent zero
            out.push(current.clone());
            return;
        }
        if var == n {
            return;
        }
        let vdeg = ring.var_degree(var);
        // max exponent for this variable
        let mut emax = u16::MAX;
        for (r, d) in remaining.iter().zip(vdeg.iter()) {
            if *d > 0 {
                emax = emax.min((*r / *d).max(0) as u16);
            } else if *r < 0 {
                return;
            }
        }
        for e in 0..=emax {
            let rem: Multidegree = remaining
                .iter()
                .zip(vdeg.iter())
                .map(|(r, d)| r - d * e as i64)
                .collect();
            if rem.iter().any(|&r| r < 0) {
                break;
            }
            current.0[var] = e;
            rec(ring, var + 1, &rem, current, out);
        }
        current.0[var] = 0;
    }
    rec(ring, 0, target, &mut current, &mut out);
    out
}

/// Monomial basis of the degree-`target` piece of S/I, i.e. the standard
/// monomials, sorted grevlex-descending for reproducible matrices.
pub fn standard_monomials<F: Field>(
    lts: &[Monomial],
    ring: &RingRef<F>,
    target: &Multidegree,
) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = monomials_of_multidegree(ring, target)
        .into_iter()
        .filter(|m| !lts.iter().any(|lt| lt.divides(m)))
        .collect();
    out.sort_by(|a, b| multipoly::grevlex(b, a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use arith::PrimeField;
    use multipoly::{parse_poly, Ring};

    fn gf3_ring2() -> RingRef<PrimeField> {
        Ring::standard(PrimeField::new(3).unwrap(), &["x0", "x1"])
    }

    #[test]
    fn zero_ideal_in_two_vars() {
        let ring = gf3_ring2();
        let ideal = Ideal::new(&ring, vec![]);
        let h = hilbert(&ideal).unwrap();
        assert_eq!(h.dimension, 1);
        assert_eq!(h.degree, 1);
        for d in 0..6 {
            assert_eq!(hilbert_function(&ideal, d), d as u64 + 1);
        }
    }

    #[test]
    fn irrelevant_ideal_is_empty_scheme() {
        let ring = gf3_ring2();
        let gens = vec![
            parse_poly("x0", &ring).unwrap(),
            parse_poly("x1", &ring).unwrap(),
        ];
        let h = hilbert(&Ideal::new(&ring, gens)).unwrap();
        assert_eq!(h.dimension, -1);
        assert_eq!(h.degree, 0);
        assert!(h.hilbert_polynomial.is_empty());
    }

    #[test]
    fn standard_monomial_basis() {
        let ring = gf3_ring2();
        let lts = vec![Monomial::from_exponents(&[2, 0])];
        let basis = standard_monomials(&lts, &ring, &multideg(&[3]));
        // degree 3 monomials not divisible by x0^2: x0*x1^2, x1^3
        assert_eq!(basis.len(), 2);
    }
}
