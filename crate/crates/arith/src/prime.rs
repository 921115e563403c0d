//! The prime field GF(p), elements as reduced residues.

use crate::polymod::is_prime;
use crate::{Field, FieldError};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::BadCharacteristic(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn order(&self) -> Option<u64> {
        Some(self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    fn from_i64(&self, n: i64) -> u64 {
        let p = self.p as i64;
        (((n % p) + p) % p) as u64
    }

    fn generator(&self) -> Option<u64> {
        None
    }

    fn generator_name(&self) -> Option<char> {
        None
    }

    fn fmt_elem(&self, a: &u64) -> String {
        a.to_string()
    }

    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf3_basics() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(f.elements().unwrap(), vec![0, 1, 2]);
        // 2 * 2 = 4 = 1, so 2 is its own inverse
        assert_eq!(f.inv(&2), 2);
        assert_eq!(f.from_i64(-1), 2);
    }

    #[test]
    fn composite_characteristic_rejected() {
        assert!(PrimeField::new(6).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(0).is_err());
    }
}
