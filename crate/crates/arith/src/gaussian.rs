//! The Gaussian rationals Q(i) with arbitrary-precision coordinates.

use crate::Field;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::hash::{Hash, Hasher};

/// re + im*i with both parts exact rationals. Ratios stay reduced with a
/// positive denominator, so derived equality is canonical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Qi {
    pub re: BigRational,
    pub im: BigRational,
}

impl Hash for Qi {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.re.numer().hash(state);
        self.re.denom().hash(state);
        self.im.numer().hash(state);
        self.im.denom().hash(state);
    }
}

impl Qi {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Qi { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Qi {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct GaussianRationals;

impl GaussianRationals {
    pub fn new() -> Self {
        GaussianRationals
    }

    pub fn i(&self) -> Qi {
        Qi::from_ints(0, 1)
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Qi {
        assert!(den != 0);
        Qi {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }
}

/// Euclidean gcd in Z[i] by nearest-integer division; inputs must have
/// integral coordinates.
fn gaussian_gcd(a: &Qi, b: &Qi) -> Qi {
    let f = GaussianRationals;
    let mut a = a.clone();
    let mut b = b.clone();
    while !f.is_zero(&b) {
        // q = round(a / b) componentwise
        let quot = f.div(&a, &b);
        let q = Qi::new(round_rational(&quot.re), round_rational(&quot.im));
        let r = f.sub(&a, &f.mul(&q, &b));
        a = b;
        b = r;
    }
    a
}

fn round_rational(r: &BigRational) -> BigRational {
    let two = BigInt::from(2);
    let num = r.numer() * &two + r.denom();
    let den = r.denom() * &two;
    BigRational::from_integer(num.div_floor(&den))
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Field for GaussianRationals {
    type Elem = Qi;

    fn characteristic(&self) -> u64 {
        0
    }

    fn order(&self) -> Option<u64> {
        None
    }

    fn zero(&self) -> Qi {
        Qi::from_ints(0, 0)
    }

    fn one(&self) -> Qi {
        Qi::from_ints(1, 0)
    }

    fn is_zero(&self, a: &Qi) -> bool {
        a.re.is_zero() && a.im.is_zero()
    }

    fn add(&self, a: &Qi, b: &Qi) -> Qi {
        Qi::new(&a.re + &b.re, &a.im + &b.im)
    }

    fn sub(&self, a: &Qi, b: &Qi) -> Qi {
        Qi::new(&a.re - &b.re, &a.im - &b.im)
    }

    fn neg(&self, a: &Qi) -> Qi {
        Qi::new(-a.re.clone(), -a.im.clone())
    }

    fn mul(&self, a: &Qi, b: &Qi) -> Qi {
        Qi::new(
            &a.re * &b.re - &a.im * &b.im,
            &a.re * &b.im + &a.im * &b.re,
        )
    }

    fn inv(&self, a: &Qi) -> Qi {
        assert!(!self.is_zero(a), "inverse of zero");
        let norm = &a.re * &a.re + &a.im * &a.im;
        Qi::new(&a.re / &norm, -(&a.im / &norm))
    }

    fn from_i64(&self, n: i64) -> Qi {
        Qi::from_ints(n, 0)
    }

    fn generator(&self) -> Option<Qi> {
        Some(self.i())
    }

    fn generator_name(&self) -> Option<char> {
        Some('i')
    }

    fn fmt_elem(&self, a: &Qi) -> String {
        if self.is_zero(a) {
            return "0".to_string();
        }
        let mut out = String::new();
        if !a.re.is_zero() {
            out.push_str(&fmt_rational(&a.re));
        }
        if !a.im.is_zero() {
            let im = &a.im;
            let body = if im.numer().abs().is_one() && im.denom().is_one() {
                "i".to_string()
            } else {
                let mag = im.abs();
                format!("{}i", fmt_rational(&mag))
            };
            if im.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            out.push_str(&body);
        }
        out
    }

    fn elements(&self) -> Option<Vec<Qi>> {
        None
    }

    /// Divide out a Gaussian-integer gcd so the cancellation multipliers
    /// stay as small as possible. Falls back to plain cross-multiplication
    /// when a coordinate is not integral.
    fn reduction_pair(&self, cf: &Qi, cg: &Qi) -> (Qi, Qi) {
        if cf.re.denom().is_one()
            && cf.im.denom().is_one()
            && cg.re.denom().is_one()
            && cg.im.denom().is_one()
        {
            let d = gaussian_gcd(cf, cg);
            if !self.is_zero(&d) && d != self.one() {
                return (self.div(cg, &d), self.div(cf, &d));
            }
        }
        (cg.clone(), cf.clone())
    }

    /// Clear denominators and divide out the integer content, leaving a
    /// Gaussian-integer run with coprime coordinate gcd. This keeps
    /// elimination intermediates small without ever leaving exact
    /// arithmetic.
    fn normalize_unit(&self, coeffs: &mut [Qi]) {
        if coeffs.is_empty() {
            return;
        }
        let mut denom_lcm = BigInt::one();
        for c in coeffs.iter() {
            denom_lcm = denom_lcm.lcm(c.re.denom());
            denom_lcm = denom_lcm.lcm(c.im.denom());
        }
        let mut content = BigInt::zero();
        for c in coeffs.iter() {
            content = content.gcd(&(c.re.numer() * &denom_lcm / c.re.denom()));
            content = content.gcd(&(c.im.numer() * &denom_lcm / c.im.denom()));
        }
        if content.is_zero() {
            return;
        }
        let scale = BigRational::new(denom_lcm, content);
        // Fix the overall sign by the first nonzero coordinate.
        let mut scale = scale;
        for c in coeffs.iter() {
            let lead = if !c.re.is_zero() { &c.re } else { &c.im };
            if !lead.is_zero() {
                if (lead * &scale).is_negative() {
                    scale = -scale;
                }
                break;
            }
        }
        for c in coeffs.iter_mut() {
            c.re *= &scale;
            c.im *= &scale;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_of_one_minus_i() {
        let f = GaussianRationals::new();
        let x = Qi::from_ints(1, -1);
        let y = Qi::from_ints(1, 1);
        assert_eq!(f.mul(&x, &y), f.from_i64(2));
    }

    #[test]
    fn inverse() {
        let f = GaussianRationals::new();
        let x = Qi::from_ints(3, -2);
        assert_eq!(f.mul(&x, &f.inv(&x)), f.one());
    }

    #[test]
    fn formatting() {
        let f = GaussianRationals::new();
        assert_eq!(f.fmt_elem(&Qi::from_ints(1, -1)), "1-i");
        assert_eq!(f.fmt_elem(&Qi::from_ints(0, -1)), "-i");
        assert_eq!(f.fmt_elem(&Qi::from_ints(-2, 3)), "-2+3i");
        assert_eq!(f.fmt_elem(&f.from_ratio(1, 2)), "1/2");
    }

    #[test]
    fn normalize_clears_denominators() {
        let f = GaussianRationals::new();
        let mut v = vec![f.from_ratio(-2, 3), Qi::new(BigRational::zero(), BigRational::new(BigInt::from(4), BigInt::from(9)))];
        f.normalize_unit(&mut v);
        // -2/3, 4/9 i scaled by -9/2: 3, -2i
        assert_eq!(v[0], Qi::from_ints(3, 0));
        assert_eq!(v[1], Qi::from_ints(0, -2));
    }
}
