use serde::{Deserialize, Serialize};

use super::system::CocycleSystem;

/// A phase-twisted permutation operator on `L(N)`:
/// `(T f)(m) = f(perm[m]) · ζ^{phase[m]}` with `ζ` a primitive
/// `modulus`-th root of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseOperator {
    pub perm: Vec<u32>,
    pub phase: Vec<u32>,
    pub modulus: u32,
}

impl PhaseOperator {
    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &PhaseOperator) -> PhaseOperator {
        assert_eq!(self.modulus, other.modulus);
        let perm = self.perm.iter().map(|&p| other.perm[p as usize]).collect();
        let phase = self
            .perm
            .iter()
            .zip(&self.phase)
            .map(|(&p, &a)| (a + other.phase[p as usize]) % self.modulus)
            .collect();
        PhaseOperator {
            perm,
            phase,
            modulus: self.modulus,
        }
    }

    /// Multiplies the operator by the scalar `ζ^exponent`.
    pub fn scaled(&self, exponent: u32) -> PhaseOperator {
        PhaseOperator {
            perm: self.perm.clone(),
            phase: self.phase.iter().map(|&a| (a + exponent) % self.modulus).collect(),
            modulus: self.modulus,
        }
    }

    /// Applies the operator to a function given by optional phase values
    /// (`None` is the value zero).
    pub fn apply(&self, f: &[Option<u32>]) -> Vec<Option<u32>> {
        self.perm
            .iter()
            .zip(&self.phase)
            .map(|(&p, &a)| f[p as usize].map(|v| (v + a) % self.modulus))
            .collect()
    }
}

/// `L_{n,η_h}` and `R_{n,η_h}` for every `n`, indexed by `n`:
/// `(L_n f)(m) = f(nm) η_h(n, m)` and `(R_n f)(m) = f(mn) η_h(m, n)`.
///
/// `R` is the operator by which the coproduct acts,
/// `Δ(f, h) = Σ_n (R_n f, h) ⊗ (δ_n, h)`.
pub fn left_right_operators(sys: &CocycleSystem, h: usize) -> (Vec<PhaseOperator>, Vec<PhaseOperator>) {
    let n = sys.n_group();
    let order = n.order();
    let m = sys.modulus();
    let left = (0..order)
        .map(|x| PhaseOperator {
            perm: (0..order).map(|y| n.mul(x, y) as u32).collect(),
            phase: (0..order).map(|y| sys.eta(h, x, y)).collect(),
            modulus: m,
        })
        .collect();
    let right = (0..order)
        .map(|x| PhaseOperator {
            perm: (0..order).map(|y| n.mul(y, x) as u32).collect(),
            phase: (0..order).map(|y| sys.eta(h, y, x)).collect(),
            modulus: m,
        })
        .collect();
    (left, right)
}

/// Failure counts for the three operator identities at one `h`:
/// `L_a L_b = η_h(b,a) L_{ba}`, `R_a R_b = η_h(a,b) R_{ab}`, `L_a R_b = R_b L_a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct OperatorRelationReport {
    pub pairs: usize,
    pub left_failures: usize,
    pub right_failures: usize,
    pub commutation_failures: usize,
}

impl OperatorRelationReport {
    pub fn holds(&self) -> bool {
        self.left_failures == 0 && self.right_failures == 0 && self.commutation_failures == 0
    }

    fn absorb(&mut self, other: OperatorRelationReport) {
        self.pairs += other.pairs;
        self.left_failures += other.left_failures;
        self.right_failures += other.right_failures;
        self.commutation_failures += other.commutation_failures;
    }
}

pub fn check_operator_relations(sys: &CocycleSystem, h: usize) -> OperatorRelationReport {
    let n = sys.n_group();
    let (left, right) = left_right_operators(sys, h);
    let mut report = OperatorRelationReport::default();
    for a in 0..n.order() {
        for b in 0..n.order() {
            report.pairs += 1;
            let ll = left[a].compose(&left[b]);
            if ll != left[n.mul(b, a)].scaled(sys.eta(h, b, a)) {
                report.left_failures += 1;
            }
            let rr = right[a].compose(&right[b]);
            if rr != right[n.mul(a, b)].scaled(sys.eta(h, a, b)) {
                report.right_failures += 1;
            }
            if left[a].compose(&right[b]) != right[b].compose(&left[a]) {
                report.commutation_failures += 1;
            }
        }
    }
    report
}

/// [`check_operator_relations`] summed over every `h ∈ H`.
pub fn check_all_operator_relations(sys: &CocycleSystem) -> OperatorRelationReport {
    let mut total = OperatorRelationReport::default();
    for h in 0..sys.h_group().order() {
        total.absorb(check_operator_relations(sys, h));
    }
    total
}
