use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Group, GroupAction};

use super::phase::Phase;

/// Cocycle data `(η, ξ)` for a semidirect product `N ⋊ H`, with values in
/// the `modulus`-th roots of unity stored as exponents.
///
/// `η_h(n₁, n₂)` is indexed by `(h, n₁, n₂)`, `ξ_n(h₁, h₂)` by `(n, h₁, h₂)`.
/// Conjugation is written `n^h = h⁻¹ n h`, which is `action.conj`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleSystem {
    n: Group,
    h: Group,
    action: GroupAction,
    modulus: u32,
    eta: Vec<u32>,
    xi: Vec<u32>,
}

impl CocycleSystem {
    /// All phases trivial.
    pub fn trivial(n: Group, h: Group, action: GroupAction, modulus: u32) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::domain("phase modulus must be positive"));
        }
        action.validate(&n, &h)?;
        let (no, ho) = (n.order(), h.order());
        Ok(CocycleSystem {
            eta: vec![0; ho * no * no],
            xi: vec![0; no * ho * ho],
            n,
            h,
            action,
            modulus,
        })
    }

    pub fn n_group(&self) -> &Group {
        &self.n
    }

    pub fn h_group(&self) -> &Group {
        &self.h
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    fn eta_index(&self, h: usize, n1: usize, n2: usize) -> usize {
        let no = self.n.order();
        (h * no + n1) * no + n2
    }

    fn xi_index(&self, n: usize, h1: usize, h2: usize) -> usize {
        let ho = self.h.order();
        (n * ho + h1) * ho + h2
    }

    /// Exponent of `η_h(n₁, n₂)`.
    pub fn eta(&self, h: usize, n1: usize, n2: usize) -> u32 {
        self.eta[self.eta_index(h, n1, n2)]
    }

    /// Exponent of `ξ_n(h₁, h₂)`.
    pub fn xi(&self, n: usize, h1: usize, h2: usize) -> u32 {
        self.xi[self.xi_index(n, h1, h2)]
    }

    pub fn eta_phase(&self, h: usize, n1: usize, n2: usize) -> Phase {
        Phase::new(i64::from(self.eta(h, n1, n2)), self.modulus)
    }

    pub fn xi_phase(&self, n: usize, h1: usize, h2: usize) -> Phase {
        Phase::new(i64::from(self.xi(n, h1, h2)), self.modulus)
    }

    pub fn set_eta(&mut self, h: usize, n1: usize, n2: usize, exponent: i64) {
        let i = self.eta_index(h, n1, n2);
        self.eta[i] = exponent.rem_euclid(i64::from(self.modulus)) as u32;
    }

    pub fn set_xi(&mut self, n: usize, h1: usize, h2: usize, exponent: i64) {
        let i = self.xi_index(n, h1, h2);
        self.xi[i] = exponent.rem_euclid(i64::from(self.modulus)) as u32;
    }

    /// `n^h = h⁻¹ n h`.
    pub fn conj(&self, n: usize, h: usize) -> usize {
        self.action.conj(&self.h, n, h)
    }

    /// Nonzero `η` entries as `(h, n₁, n₂, exponent)`, in index order.
    pub fn eta_entries(&self) -> Vec<[usize; 4]> {
        let no = self.n.order();
        self.eta
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| [i / (no * no), (i / no) % no, i % no, e as usize])
            .collect()
    }

    /// Nonzero `ξ` entries as `(n, h₁, h₂, exponent)`, in index order.
    pub fn xi_entries(&self) -> Vec<[usize; 4]> {
        let ho = self.h.order();
        self.xi
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| [i / (ho * ho), (i / ho) % ho, i % ho, e as usize])
            .collect()
    }

    /// Checks every cocycle, pentagon and normalization instance.
    pub fn validate(&self, options: &ValidationOptions) -> ValidationReport {
        let mut report = ValidationReport::new(options);
        let m = self.modulus as i64;
        let (no, ho) = (self.n.order(), self.h.order());
        let nmul = |a, b| self.n.mul(a, b);
        let hmul = |a, b| self.h.mul(a, b);
        let eta = |h, a, b| i64::from(self.eta(h, a, b));
        let xi = |n, a, b| i64::from(self.xi(n, a, b));
        let (ne, he) = (self.n.identity(), self.h.identity());

        for h in 0..ho {
            for a in 0..no {
                if eta(h, ne, a) != 0 {
                    report.push("eta-normalization", vec![h, ne, a], eta(h, ne, a), 0, m);
                }
                if eta(h, a, ne) != 0 && a != ne {
                    report.push("eta-normalization", vec![h, a, ne], eta(h, a, ne), 0, m);
                }
                if h == he {
                    for b in 0..no {
                        if eta(he, a, b) != 0 {
                            report.push("eta-normalization", vec![he, a, b], eta(he, a, b), 0, m);
                        }
                    }
                }
            }
        }
        for n in 0..no {
            for a in 0..ho {
                if xi(n, he, a) != 0 {
                    report.push("xi-normalization", vec![n, he, a], xi(n, he, a), 0, m);
                }
                if xi(n, a, he) != 0 && a != he {
                    report.push("xi-normalization", vec![n, a, he], xi(n, a, he), 0, m);
                }
            }
        }

        for h in 0..ho {
            for a in 0..no {
                for b in 0..no {
                    for c in 0..no {
                        let lhs = eta(h, a, b) + eta(h, nmul(a, b), c);
                        let rhs = eta(h, a, nmul(b, c)) + eta(h, b, c);
                        report.push("eta-cocycle", vec![h, a, b, c], lhs, rhs, m);
                    }
                }
            }
        }
        for n in 0..no {
            for a in 0..ho {
                for b in 0..ho {
                    for c in 0..ho {
                        let lhs = xi(n, hmul(a, b), c) + xi(n, a, b);
                        let twisted = match options.xi_cocycle {
                            XiCocycleForm::Twisted => xi(self.conj(n, a), b, c),
                            XiCocycleForm::Printed => xi(n, b, c),
                        };
                        let rhs = xi(n, a, hmul(b, c)) + twisted;
                        report.push("xi-cocycle", vec![n, a, b, c], lhs, rhs, m);
                    }
                }
            }
        }
        for h1 in 0..ho {
            for h2 in 0..ho {
                let h12 = hmul(h1, h2);
                for a in 0..no {
                    for b in 0..no {
                        let lhs = match options.pentagon {
                            PentagonForm::Closure => {
                                eta(h1, a, b) + eta(h2, self.conj(a, h1), self.conj(b, h1)) - eta(h12, a, b)
                            }
                            PentagonForm::ProofDisplay => {
                                eta(h1, a, b) + eta(h2, self.conj(a, h1), self.conj(b, h2)) - eta(h12, a, b)
                            }
                            PentagonForm::PrintedDisplay => {
                                eta(h2, self.conj(a, h1), self.conj(b, h2))
                            }
                        };
                        let rhs = xi(nmul(a, b), h1, h2) - xi(a, h1, h2) - xi(b, h1, h2);
                        report.push("pentagon", vec![h1, h2, a, b], lhs, rhs, m);
                    }
                }
            }
        }
        report
    }
}

/// Which reading of the pentagon equation to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PentagonForm {
    /// `η_{h₁}(n,m) η_{h₂}(n^{h₁}, m^{h₁}) / η_{h₁h₂}(n,m) = ξ_{nm} / (ξ_n ξ_m)`,
    /// the condition under which the spaces `C(h)` multiply correctly.
    #[default]
    Closure,
    /// As `Closure` but with the second argument conjugated by `h₂`.
    ProofDisplay,
    /// `η_{h₁}(n,m)` in both numerator and denominator, second argument
    /// conjugated by `h₂`.
    PrintedDisplay,
}

/// Which form of the `ξ` cocycle identity to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum XiCocycleForm {
    /// `ξ_n(h₁h₂,h₃) ξ_n(h₁,h₂) = ξ_n(h₁,h₂h₃) ξ_{n^{h₁}}(h₂,h₃)`, which is
    /// associativity of the crossed product.
    #[default]
    Twisted,
    /// The same identity with `ξ_n(h₂,h₃)` untwisted.
    Printed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ValidationOptions {
    pub pentagon: PentagonForm,
    pub xi_cocycle: XiCocycleForm,
}

/// One failed identity: `lhs ≠ rhs` as exponents modulo the system modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: String,
    /// Element ids in the order the identity names them.
    pub instance: Vec<usize>,
    pub lhs: u32,
    pub rhs: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub options: ValidationOptions,
    pub conventions: Vec<String>,
    pub checked: usize,
    pub violation_count: usize,
    /// The first violations found, capped at [`ValidationReport::LISTED`].
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub const LISTED: usize = 1000;

    fn new(options: &ValidationOptions) -> Self {
        ValidationReport {
            valid: true,
            options: *options,
            conventions: vec![
                "convention: lambdaeq-h2".to_string(),
                "conjugation: n^h = h^-1 n h".to_string(),
                "right operator: (R_n f)(m) = f(mn) eta_h(m,n)".to_string(),
            ],
            checked: 0,
            violation_count: 0,
            violations: Vec::new(),
        }
    }

    fn push(&mut self, kind: &str, instance: Vec<usize>, lhs: i64, rhs: i64, m: i64) {
        self.checked += 1;
        let (l, r) = (lhs.rem_euclid(m), rhs.rem_euclid(m));
        if l == r {
            return;
        }
        self.valid = false;
        self.violation_count += 1;
        if self.violations.len() < Self::LISTED {
            self.violations.push(Violation {
                kind: kind.to_string(),
                instance,
                lhs: l as u32,
                rhs: r as u32,
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kac::samples;

    #[test]
    fn trivial_systems_are_valid() {
        for sys in [samples::c3_c2_trivial(), samples::a4_trivial(), samples::group_algebra(crate::group::named::symmetric(3))] {
            let r = sys.validate(&ValidationOptions::default());
            assert!(r.valid, "{:?}", r.violations.first());
            assert!(r.conventions.iter().any(|c| c == "convention: lambdaeq-h2"));
        }
    }

    #[test]
    fn perturbed_eta_is_reported() {
        let mut sys = samples::bilinear_eta();
        let r = sys.validate(&ValidationOptions::default());
        assert!(r.valid);
        let s = 1;
        // η_s(n1,n2) with n1 = (1,0), n2 = (1,0): flip it
        let cur = sys.eta(s, 1, 1);
        sys.set_eta(s, 1, 1, i64::from(cur) + 1);
        let r = sys.validate(&ValidationOptions::default());
        assert!(!r.valid);
        assert!(r.violations.iter().any(|v| v.kind == "eta-cocycle"));
    }

    #[test]
    fn nontrivial_fixtures_are_valid() {
        for sys in [samples::bilinear_eta(), samples::bilinear_xi(), samples::swap_quadratic()] {
            let r = sys.validate(&ValidationOptions::default());
            assert!(r.valid, "{:?}", r.violations.first());
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn alternative_forms_differ_on_the_swap_fixture() {
        let sys = samples::swap_quadratic();
        let proof = ValidationOptions { pentagon: PentagonForm::ProofDisplay, ..Default::default() };
        let printed = ValidationOptions { pentagon: PentagonForm::PrintedDisplay, ..Default::default() };
        assert!(!sys.validate(&proof).valid);
        assert!(!sys.validate(&printed).valid);
        let untwisted = ValidationOptions { xi_cocycle: XiCocycleForm::Printed, ..Default::default() };
        assert!(sys.validate(&untwisted).valid);
    }

    #[test]
    fn entries_round_trip() {
        let sys = samples::swap_quadratic();
        let mut copy = CocycleSystem::trivial(
            sys.n_group().clone(),
            sys.h_group().clone(),
            sys.action().clone(),
            sys.modulus(),
        )
        .unwrap();
        for [h, a, b, e] in sys.eta_entries() {
            copy.set_eta(h, a, b, e as i64);
        }
        for [n, a, b, e] in sys.xi_entries() {
            copy.set_xi(n, a, b, e as i64);
        }
        assert_eq!(copy, sys);
    }
}
