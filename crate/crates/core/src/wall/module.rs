use num_bigint::BigInt;

use crate::bitset::BitSet;
use crate::group::{Group, Subgroup};
use crate::linalg::{ExactMatrix, RationalMatrix};

/// The permutation module on the left cosets `gH`.
///
/// Cosets are indexed by their smallest element, so the coset containing the
/// identity is point 0.
#[derive(Debug, Clone)]
pub struct PermModule<'g> {
    group: &'g Group,
    point_stabilizer: Subgroup,
    cosets: Vec<BitSet>,
    coset_of: Vec<usize>,
    reps: Vec<usize>,
    action: Vec<u32>,
}

impl<'g> PermModule<'g> {
    pub fn new(group: &'g Group, point_stabilizer: &Subgroup) -> Self {
        let order = group.order();
        let mut coset_of = vec![usize::MAX; order];
        let mut cosets = Vec::new();
        let mut reps = Vec::new();
        for x in 0..order {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let idx = cosets.len();
            let mut set = BitSet::new(order);
            for h in point_stabilizer.iter() {
                let y = group.mul(x, h);
                coset_of[y] = idx;
                set.insert(y);
            }
            cosets.push(set);
            reps.push(x);
        }
        let n = cosets.len();
        let mut action = Vec::with_capacity(order * n);
        for g in 0..order {
            for &r in &reps {
                action.push(coset_of[group.mul(g, r)] as u32);
            }
        }
        PermModule {
            group,
            point_stabilizer: point_stabilizer.clone(),
            cosets,
            coset_of,
            reps,
            action,
        }
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn point_stabilizer(&self) -> &Subgroup {
        &self.point_stabilizer
    }

    pub fn degree(&self) -> usize {
        self.cosets.len()
    }

    pub fn cosets(&self) -> &[BitSet] {
        &self.cosets
    }

    pub fn coset_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    pub fn representative(&self, point: usize) -> usize {
        self.reps[point]
    }

    /// Image of coset `point` under left multiplication by `g`.
    pub fn act(&self, g: usize, point: usize) -> usize {
        self.action[g * self.degree() + point] as usize
    }

    /// Orbits of `k` on cosets, each sorted, ordered by smallest point.
    pub fn orbits(&self, k: &Subgroup) -> Vec<Vec<usize>> {
        let n = self.degree();
        let gens = k.generators();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                let p = orbit[i];
                i += 1;
                for &g in gens {
                    let q = self.act(g, p);
                    if !seen[q] {
                        seen[q] = true;
                        orbit.push(q);
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Permutation matrix of `g`: column `p` has its one in row `g·p`.
    pub fn permutation_matrix(&self, g: usize) -> ExactMatrix {
        let n = self.degree();
        let mut m = ExactMatrix::zeros(n, n);
        for p in 0..n {
            m.set(self.act(g, p), p, BigInt::from(1));
        }
        m
    }

    /// `v` is unchanged by every element of `k`.
    pub fn is_fixed_by(&self, v: &[BigInt], k: &Subgroup) -> bool {
        k.generators()
            .iter()
            .all(|&g| (0..self.degree()).all(|p| v[self.act(g, p)] == v[p]))
    }
}

/// Basis of the `k`-fixed vectors in `ℓ(G/H)`, or in its weight-zero
/// hyperplane.
///
/// Without `weight_zero` the rows are orbit indicators. With it, for orbits
/// `O_0, …, O_{r-1}` and `n` cosets, the rows are `|O_j|·1 − n·1_{O_j}` for
/// `j = 1..r`; these are independent because `1_{O_0}` only appears through
/// the all-ones part.
pub fn fixed_space_basis(m: &PermModule<'_>, k: &Subgroup, weight_zero: bool) -> ExactMatrix {
    let n = m.degree();
    let orbits = m.orbits(k);
    let mut rows = Vec::new();
    if weight_zero {
        for orbit in orbits.iter().skip(1) {
            let mut row = vec![BigInt::from(orbit.len()); n];
            for &p in orbit {
                row[p] -= n;
            }
            rows.push(row);
        }
    } else {
        for orbit in &orbits {
            let mut row = vec![BigInt::from(0); n];
            for &p in orbit {
                row[p] = BigInt::from(1);
            }
            rows.push(row);
        }
    }
    ExactMatrix::from_rows(n, rows)
}

/// The averaging operator `e_K = |K|⁻¹ Σ_{k∈K} k` on `ℓ(G/H)`.
pub fn averaging_projector(m: &PermModule<'_>, k: &Subgroup) -> RationalMatrix {
    let n = m.degree();
    let mut num = ExactMatrix::zeros(n, n);
    for g in k.iter() {
        for p in 0..n {
            let q = m.act(g, p);
            let cur = num.get(q, p).clone();
            num.set(q, p, cur + 1);
        }
    }
    RationalMatrix::new(num, BigInt::from(k.order()))
}
