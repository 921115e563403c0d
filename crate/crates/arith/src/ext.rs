//! Extension fields GF(p^k) = GF(p)[a]/(m(a)) for k in 2..=4, with an
//! explicit user-supplied modulus rather than hidden lookup tables.

use crate::polymod::{is_irreducible, is_prime, poly_invmod};
use crate::{Field, FieldError};

pub(crate) const MAX_DEG: usize = 4;

/// An element, little-endian coordinates in powers of the generator.
/// Coordinates at index >= deg are always zero, so derived equality and
/// hashing are canonical.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ExtElem(pub [u64; MAX_DEG]);

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtField {
    p: u64,
    deg: usize,
    /// Monic modulus, little-endian, length deg + 1.
    modulus: [u64; MAX_DEG + 1],
}

impl ExtField {
    pub fn new(p: u64, modulus: &[u64]) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::BadCharacteristic(p));
        }
        let mut m: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        while m.last() == Some(&0) {
            m.pop();
        }
        if m.len() < 2 {
            return Err(FieldError::BadDegree(m.len().saturating_sub(1)));
        }
        let deg = m.len() - 1;
        if !(2..=MAX_DEG).contains(&deg) {
            return Err(FieldError::BadDegree(deg));
        }
        if m[deg] != 1 {
            return Err(FieldError::NotMonic);
        }
        if !is_irreducible(&m, p) {
            return Err(FieldError::Reducible);
        }
        let mut modulus = [0u64; MAX_DEG + 1];
        modulus[..m.len()].copy_from_slice(&m);
        Ok(ExtField { p, deg, modulus })
    }

    /// GF(9) presented by the quadratic x^2 + 2x + 2.
    pub fn gf9() -> Self {
        ExtField::new(3, &[2, 2, 1]).expect("x^2+2x+2 is irreducible over GF(3)")
    }

    /// GF(27) presented by x^3 + 2x + 1.
    pub fn gf27() -> Self {
        ExtField::new(3, &[1, 2, 0, 1]).expect("x^3+2x+1 is irreducible over GF(3)")
    }

    /// GF(81) presented by x^4 + 2x^3 + 2.
    pub fn gf81() -> Self {
        ExtField::new(3, &[2, 0, 0, 2, 1]).expect("x^4+2x^3+2 is irreducible over GF(3)")
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus[..=self.deg]
    }

    pub fn from_coords(&self, coords: &[i64]) -> ExtElem {
        assert!(coords.len() <= self.deg, "too many coordinates");
        let p = self.p as i64;
        let mut out = [0u64; MAX_DEG];
        for (i, &c) in coords.iter().enumerate() {
            out[i] = (((c % p) + p) % p) as u64;
        }
        ExtElem(out)
    }

    fn reduce(&self, acc: &mut [u64; 2 * MAX_DEG - 1]) -> ExtElem {
        let p = self.p;
        for i in (self.deg..2 * MAX_DEG - 1).rev() {
            let c = acc[i];
            if c == 0 {
                continue;
            }
            acc[i] = 0;
            for j in 0..self.deg {
                let sub = (c as u128 * self.modulus[j] as u128 % p as u128) as u64;
                acc[i - self.deg + j] = (acc[i - self.deg + j] + p - sub) % p;
            }
        }
        let mut out = [0u64; MAX_DEG];
        out[..self.deg].copy_from_slice(&acc[..self.deg]);
        ExtElem(out)
    }
}

impl Field for ExtField {
    type Elem = ExtElem;

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn order(&self) -> Option<u64> {
        Some(self.p.pow(self.deg as u32))
    }

    fn zero(&self) -> ExtElem {
        ExtElem([0; MAX_DEG])
    }

    fn one(&self) -> ExtElem {
        let mut c = [0; MAX_DEG];
        c[0] = 1;
        ExtElem(c)
    }

    fn is_zero(&self, a: &ExtElem) -> bool {
        a.0 == [0; MAX_DEG]
    }

    fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let mut out = [0; MAX_DEG];
        for i in 0..self.deg {
            let s = a.0[i] + b.0[i];
            out[i] = if s >= self.p { s - self.p } else { s };
        }
        ExtElem(out)
    }

    fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let mut out = [0; MAX_DEG];
        for i in 0..self.deg {
            out[i] = if a.0[i] >= b.0[i] {
                a.0[i] - b.0[i]
            } else {
                a.0[i] + self.p - b.0[i]
            };
        }
        ExtElem(out)
    }

    fn neg(&self, a: &ExtElem) -> ExtElem {
        let mut out = [0; MAX_DEG];
        for i in 0..self.deg {
            out[i] = if a.0[i] == 0 { 0 } else { self.p - a.0[i] };
        }
        ExtElem(out)
    }

    fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let p = self.p as u128;
        let mut acc = [0u64; 2 * MAX_DEG - 1];
        for i in 0..self.deg {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..self.deg {
                if b.0[j] == 0 {
                    continue;
                }
                let prod = a.0[i] as u128 * b.0[j] as u128 % p;
                acc[i + j] = ((acc[i + j] as u128 + prod) % p) as u64;
            }
        }
        let mut acc_full = [0u64; 2 * MAX_DEG - 1];
        acc_full.copy_from_slice(&acc);
        self.reduce(&mut acc_full)
    }

    fn inv(&self, a: &ExtElem) -> ExtElem {
        assert!(!self.is_zero(a), "inverse of zero");
        let coeffs: Vec<u64> = a.0[..self.deg].to_vec();
        let inv = poly_invmod(&coeffs, self.modulus(), self.p)
            .expect("element invertible in a field");
        let mut out = [0u64; MAX_DEG];
        out[..inv.len()].copy_from_slice(&inv);
        ExtElem(out)
    }

    fn from_i64(&self, n: i64) -> ExtElem {
        let p = self.p as i64;
        let mut out = [0u64; MAX_DEG];
        out[0] = (((n % p) + p) % p) as u64;
        ExtElem(out)
    }

    fn generator(&self) -> Option<ExtElem> {
        let mut c = [0; MAX_DEG];
        c[1] = 1;
        Some(ExtElem(c))
    }

    fn generator_name(&self) -> Option<char> {
        Some('a')
    }

    fn fmt_elem(&self, a: &ExtElem) -> String {
        if self.is_zero(a) {
            return "0".to_string();
        }
        let mut parts = vec![];
        for i in (0..self.deg).rev() {
            let c = a.0[i];
            if c == 0 {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{}", i),
            };
            let s = match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => var,
                _ => format!("{}{}", c, var),
            };
            parts.push(s);
        }
        parts.join("+")
    }

    fn elements(&self) -> Option<Vec<ExtElem>> {
        let q = self.order()?;
        let mut out = Vec::with_capacity(q as usize);
        let mut counter = vec![0u64; self.deg];
        for _ in 0..q {
            let mut c = [0u64; MAX_DEG];
            c[..self.deg].copy_from_slice(&counter);
            out.push(ExtElem(c));
            for d in counter.iter_mut() {
                *d += 1;
                if *d < self.p {
                    break;
                }
                *d = 0;
            }
        }
        Some(out)
    }
}

/// Locate a root of `src`'s modulus inside `dst`, which determines an
/// embedding GF(p^m) -> GF(p^n). Scans dst in its canonical enumeration
/// order, so the embedding is deterministic. Returns None when m does not
/// divide n or the characteristics differ.
pub fn find_embedding_root(src: &ExtField, dst: &ExtField) -> Option<ExtElem> {
    if src.p() != dst.p() || dst.degree() % src.degree() != 0 {
        return None;
    }
    let m = src.modulus();
    for cand in dst.elements()? {
        let mut val = dst.zero();
        for &c in m.iter().rev() {
            val = dst.mul(&val, &cand);
            val = dst.add(&val, &dst.from_i64(c as i64));
        }
        if dst.is_zero(&val) {
            return Some(cand);
        }
    }
    None
}

/// Push an element of `src` through the embedding determined by `root`.
pub fn embed(src: &ExtField, dst: &ExtField, root: &ExtElem, a: &ExtElem) -> ExtElem {
    let mut val = dst.zero();
    for i in (0..src.degree()).rev() {
        val = dst.mul(&val, root);
        val = dst.add(&val, &dst.from_i64(a.0[i] as i64));
    }
    val
}
