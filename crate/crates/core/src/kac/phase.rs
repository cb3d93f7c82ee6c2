use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// The root of unity `exp(2πi·exponent/modulus)`, stored additively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Phase {
    pub exponent: u32,
    pub modulus: u32,
}

impl Phase {
    pub fn new(exponent: i64, modulus: u32) -> Self {
        assert!(modulus > 0, "phase modulus must be positive");
        Phase {
            exponent: exponent.rem_euclid(i64::from(modulus)) as u32,
            modulus,
        }
    }

    pub fn one(modulus: u32) -> Self {
        Phase::new(0, modulus)
    }

    pub fn is_one(self) -> bool {
        self.exponent == 0
    }

    /// The same root of unity written over a multiple of the modulus.
    pub fn lift(self, modulus: u32) -> Self {
        assert_eq!(modulus % self.modulus, 0, "target modulus must be a multiple");
        Phase {
            exponent: self.exponent * (modulus / self.modulus),
            modulus,
        }
    }

    /// Multiplicative order of the root of unity.
    pub fn order(self) -> u32 {
        self.modulus / num_integer::gcd(self.exponent, self.modulus)
    }
}

impl Add for Phase {
    type Output = Phase;
    fn add(self, rhs: Phase) -> Phase {
        assert_eq!(self.modulus, rhs.modulus, "phase moduli differ");
        Phase {
            exponent: (self.exponent + rhs.exponent) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Neg for Phase {
    type Output = Phase;
    fn neg(self) -> Phase {
        Phase {
            exponent: (self.modulus - self.exponent) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Sub for Phase {
    type Output = Phase;
    fn sub(self, rhs: Phase) -> Phase {
        self + (-rhs)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.exponent, self.modulus)
    }
}
