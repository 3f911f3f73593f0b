use crate::error::{Error, Result};

/// The prime field `F_p`. Elements are stored as `u8`, so `p < 256`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u8,
}

pub(crate) fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) || p > 255 {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p: p as u8 })
    }

    pub fn p(self) -> u8 {
        self.p
    }

    pub fn add(self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.p as u16) as u8
    }

    pub fn sub(self, a: u8, b: u8) -> u8 {
        ((a as u16 + self.p as u16 - b as u16) % self.p as u16) as u8
    }

    pub fn neg(self, a: u8) -> u8 {
        self.sub(0, a)
    }

    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    pub fn inv(self, a: u8) -> u8 {
        assert!(a % self.p != 0, "zero has no inverse");
        (1..self.p).find(|&x| self.mul(a, x) == 1).expect("field")
    }

    pub fn units(self) -> impl Iterator<Item = u8> {
        1..self.p
    }
}
