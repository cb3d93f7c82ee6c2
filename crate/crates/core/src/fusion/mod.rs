//! Fusion rings and their fusion-closed subsets of simple objects.

mod character;
mod cyclotomic;

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::Group;

pub use character::{CharacterTable, Entry};
pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic};

/// Based ring with nonnegative structure constants `N[i][j][k]`
/// (`x_i x_j = Σ_k N[i][j][k] x_k`), a unit object and a duality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionRing {
    n: usize,
    unit: usize,
    dual: Vec<usize>,
    constants: Vec<u32>,
    labels: Vec<String>,
}

impl FusionRing {
    /// Checks the unit, associativity and Frobenius duality axioms.
    pub fn new(unit: usize, dual: Vec<usize>, constants: Vec<u32>, labels: Vec<String>) -> Result<Self> {
        let n = dual.len();
        if constants.len() != n * n * n || labels.len() != n || unit >= n {
            return Err(Error::validation("fusion data has inconsistent sizes"));
        }
        let ring = FusionRing {
            n,
            unit,
            dual,
            constants,
            labels,
        };
        ring.validate()?;
        Ok(ring)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for i in 0..n {
            if self.dual[i] >= n || self.dual[self.dual[i]] != i {
                return Err(Error::validation(format!("dual is not an involution at object {i}")));
            }
            for j in 0..n {
                let delta = u32::from(i == j);
                if self.get(self.unit, i, j) != delta || self.get(i, self.unit, j) != delta {
                    return Err(Error::validation(format!("unit object does not act trivially on {i}")));
                }
                if self.get(i, j, self.unit) != u32::from(j == self.dual[i]) {
                    return Err(Error::validation(format!("duality fails for objects {i}, {j}")));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let lhs: u64 = (0..n).map(|t| u64::from(self.get(i, j, t)) * u64::from(self.get(t, k, l))).sum();
                        let rhs: u64 = (0..n).map(|t| u64::from(self.get(j, k, t)) * u64::from(self.get(i, t, l))).sum();
                        if lhs != rhs {
                            return Err(Error::validation(format!(
                                "associativity fails at ({i}, {j}, {k}; {l})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Group ring: objects are elements, `N[a][b][ab] = 1`.
    pub fn from_group(g: &Group) -> Self {
        let n = g.order();
        let mut constants = vec![0u32; n * n * n];
        for a in 0..n {
            for b in 0..n {
                constants[(a * n + b) * n + g.mul(a, b)] = 1;
            }
        }
        FusionRing {
            n,
            unit: g.identity(),
            dual: (0..n).map(|a| g.inv(a)).collect(),
            constants,
            labels: (0..n).map(|a| g.label(a)).collect(),
        }
    }

    /// Representation ring from an exact character table.
    pub fn from_character_table(table: &CharacterTable) -> Result<Self> {
        table.fusion_ring()
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        self.constants[(i * self.n + j) * self.n + k]
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| (0..self.n).all(|k| self.get(i, j, k) == self.get(j, i, k))))
    }

    /// Smallest subset containing `seed` and the unit that is closed under
    /// duals and under fusion support.
    pub fn closure(&self, seed: u64) -> u64 {
        let mut set = seed | (1 << self.unit);
        let mut queue: VecDeque<usize> = (0..self.n).filter(|&i| set & (1 << i) != 0).collect();
        while let Some(i) = queue.pop_front() {
            let add = |x: usize, set: &mut u64, queue: &mut VecDeque<usize>| {
                if *set & (1 << x) == 0 {
                    *set |= 1 << x;
                    queue.push_back(x);
                }
            };
            add(self.dual[i], &mut set, &mut queue);
            let members: Vec<usize> = (0..self.n).filter(|&j| set & (1 << j) != 0).collect();
            for j in members {
                for k in 0..self.n {
                    if self.get(i, j, k) > 0 || self.get(j, i, k) > 0 {
                        add(k, &mut set, &mut queue);
                    }
                }
            }
        }
        set
    }

    /// Every subset containing the unit that is closed under duals and fusion.
    pub fn closed_subsets(&self, caps: &Caps) -> Result<Vec<u64>> {
        if self.n > caps.fusion_objects.min(63) {
            return Err(Error::capacity("simple objects", self.n, caps.fusion_objects.min(63)));
        }
        let start = self.closure(0);
        let mut seen = HashSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for x in 0..self.n {
                if c & (1 << x) == 0 {
                    let d = self.closure(c | (1 << x));
                    if seen.insert(d) {
                        queue.push_back(d);
                    }
                }
            }
        }
        let mut out: Vec<u64> = seen.into_iter().collect();
        out.sort_by_key(|&m| (m.count_ones(), m.reverse_bits()));
        Ok(out)
    }
}

/// Maximal proper fusion-closed subsets, against the number of objects.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionReport {
    pub objects: usize,
    pub count: usize,
    /// Object indices of each maximal subset.
    pub subsets: Vec<Vec<usize>>,
    pub holds: bool,
    pub commutative: bool,
}

pub fn maximal_fusion_subalgebras(f: &FusionRing, caps: &Caps) -> Result<FusionReport> {
    let closed = f.closed_subsets(caps)?;
    let full = if f.n == 64 { u64::MAX } else { (1u64 << f.n) - 1 };
    let maximal: Vec<u64> = closed
        .iter()
        .copied()
        .filter(|&c| c != full && (0..f.n).all(|x| c & (1 << x) != 0 || f.closure(c | (1 << x)) == full))
        .collect();
    let subsets: Vec<Vec<usize>> = maximal
        .iter()
        .map(|&m| (0..f.n).filter(|&i| m & (1 << i) != 0).collect())
        .collect();
    Ok(FusionReport {
        objects: f.n,
        count: subsets.len(),
        holds: subsets.len() < f.n,
        subsets,
        commutative: f.is_commutative(),
    })
}
