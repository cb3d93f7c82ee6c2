use crate::error::{Error, Result};

use super::system::{CocycleSystem, ValidationOptions};

/// A Kac algebra `L(N) ⋊_ξ H` given by a validated cocycle system.
///
/// Coideal phases `λ` live in the `m·exp(N)`-th roots of unity, where `m` is
/// the modulus of `η` and `ξ`: iterating `λ(n₁,h)λ(n₂,h) = λ(n₁n₂,h)η_h(n₁,n₂)`
/// along the powers of `n` shows `λ(n,h)^{ord n}` is an `m`-th root of unity.
/// `η` and `ξ` are read through [`KacAlgebra::eta`] and [`KacAlgebra::xi`],
/// already rescaled to that modulus.
#[derive(Debug, Clone)]
pub struct KacAlgebra {
    sys: CocycleSystem,
    modulus: u32,
    scale: u32,
}

impl KacAlgebra {
    pub fn new(sys: CocycleSystem) -> Result<Self> {
        let report = sys.validate(&ValidationOptions::default());
        if let Some(v) = report.violations.first() {
            return Err(Error::validation(format!(
                "{} violations; first: {} at {:?} ({} != {})",
                report.violation_count, v.kind, v.instance, v.lhs, v.rhs
            )));
        }
        let scale = sys.n_group().exponent() as u32;
        Ok(KacAlgebra {
            modulus: sys.modulus() * scale,
            scale,
            sys,
        })
    }

    pub fn system(&self) -> &CocycleSystem {
        &self.sys
    }

    /// `|N|·|H|`.
    pub fn dim(&self) -> usize {
        self.sys.n_group().order() * self.sys.h_group().order()
    }

    /// Modulus of the coideal phases `λ`.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn eta(&self, h: usize, a: usize, b: usize) -> u32 {
        self.sys.eta(h, a, b) * self.scale
    }

    pub fn xi(&self, n: usize, h1: usize, h2: usize) -> u32 {
        self.sys.xi(n, h1, h2) * self.scale
    }

    /// `n^h = h⁻¹ n h`.
    pub fn conj(&self, n: usize, h: usize) -> usize {
        self.sys.conj(n, h)
    }

    pub(crate) fn add(&self, a: u32, b: u32) -> u32 {
        (a + b) % self.modulus
    }

    pub(crate) fn sub(&self, a: u32, b: u32) -> u32 {
        (a + self.modulus - b) % self.modulus
    }
}
