use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Field element representative in `[0, p)`.
pub type Coeff = u32;

pub const DEFAULT_PRIME: u32 = 32003;

/// The prime field `F_p` for a prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary signed integer into `[0, p)`.
    pub fn from_i64(&self, v: i64) -> Coeff {
        v.rem_euclid(self.p as i64) as Coeff
    }

    #[inline]
    pub fn add(&self, a: Coeff, b: Coeff) -> Coeff {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: Coeff, b: Coeff) -> Coeff {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: Coeff) -> Coeff {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: Coeff, b: Coeff) -> Coeff {
        ((a as u64 * b as u64) % self.p as u64) as Coeff
    }

    pub fn pow(&self, mut base: Coeff, mut exp: u64) -> Coeff {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: Coeff) -> Coeff {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        self.from_i64(t0)
    }

    #[inline]
    pub fn div(&self, a: Coeff, b: Coeff) -> Coeff {
        self.mul(a, self.inv(b))
    }

    /// Signed representative in `(-p/2, p/2]`, used for printing.
    pub fn signed(&self, a: Coeff) -> i64 {
        if a as u64 > (self.p as u64) / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(32003).is_ok());
        assert!(PrimeField::new(5).is_ok());
        assert!(PrimeField::new(2).is_ok());
        assert!(matches!(PrimeField::new(1), Err(Error::NotPrime(1))));
        assert!(PrimeField::new(32004).is_err());
        assert!(PrimeField::new(91).is_err());
    }

    #[test]
    fn inverses() {
        let f = PrimeField::new(32003).unwrap();
        for a in [1u32, 2, 3, 17, 32002, 12345] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.inv(2), 3);
        assert_eq!(f5.from_i64(-1), 4);
        assert_eq!(f5.signed(4), -1);
    }
}
