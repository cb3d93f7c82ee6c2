use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::lattice::is_maximal;
use crate::group::{Group, Subgroup};
use crate::linalg::{rank_of, EchelonBasis, ExactMatrix, ExactVector, ModPBasis};

use super::module::{fixed_space_basis, PermModule};

/// Outcome of the independent-fixed-vector check for a family of maximal
/// subgroups `K_1, …, K_n` with `H = ∩ K_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mod2Report {
    pub holds: bool,
    /// `witnesses[i]` is fixed by `K_i`, has weight zero, and the list is
    /// linearly independent. Empty when `holds` is false.
    pub witnesses: Vec<Vec<i64>>,
    /// A set of indices `S` with `dim Σ_{i∈S} V_i < |S|`.
    pub failed_subset: Option<Vec<usize>>,
    pub intersection_order: usize,
    /// Dimension of the weight-zero module `ℓ₀(G/H)`.
    pub module_dim: usize,
    /// Dimensions of the weight-zero `K_i`-fixed spaces.
    pub fixed_dims: Vec<usize>,
    /// Dimension of the `H`-fixed weight-zero vectors.
    pub invariant_dim: usize,
    /// The witnesses passed the fixedness, weight and rank re-checks.
    pub verified: bool,
    pub solvable: bool,
    /// `"holds"`, `"fails"` (solvable input), or `"no conclusion"` when a
    /// non-solvable input fails.
    pub conclusion: String,
}

/// Subspace basis that the subset search grows and rolls back.
trait SpanBasis {
    type Vector;
    fn rank(&self) -> usize;
    fn insert(&mut self, v: &Self::Vector) -> bool;
    fn truncate(&mut self, len: usize);
}

impl SpanBasis for EchelonBasis {
    type Vector = ExactVector;
    fn rank(&self) -> usize {
        EchelonBasis::rank(self)
    }
    fn insert(&mut self, v: &ExactVector) -> bool {
        EchelonBasis::insert(self, v)
    }
    fn truncate(&mut self, len: usize) {
        EchelonBasis::truncate(self, len)
    }
}

impl SpanBasis for ModPBasis {
    type Vector = Vec<u64>;
    fn rank(&self) -> usize {
        ModPBasis::rank(self)
    }
    fn insert(&mut self, v: &Vec<u64>) -> bool {
        ModPBasis::insert(self, v)
    }
    fn truncate(&mut self, len: usize) {
        ModPBasis::truncate(self, len)
    }
}

/// Depth-first subset search for `rank(Σ_{i∈S} V_i) < |S|`.
///
/// Branches stop once the running span reaches dimension `n`, since every
/// superset then satisfies the inequality.
fn subset_search<B: SpanBasis>(spaces: &[Vec<B::Vector>], basis: &mut B) -> Option<Vec<usize>> {
    fn visit<B: SpanBasis>(
        spaces: &[Vec<B::Vector>],
        start: usize,
        basis: &mut B,
        chosen: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        let n = spaces.len();
        for j in start..n {
            let saved = basis.rank();
            for v in &spaces[j] {
                basis.insert(v);
            }
            chosen.push(j);
            if basis.rank() < chosen.len() {
                return Some(chosen.clone());
            }
            if basis.rank() < n {
                if let Some(s) = visit(spaces, j + 1, basis, chosen) {
                    return Some(s);
                }
            }
            chosen.pop();
            basis.truncate(saved);
        }
        None
    }
    visit(spaces, 0, basis, &mut Vec::new())
}

/// Finds `S` with `rank(Σ_{i∈S} V_i) < |S|`.
///
/// The search runs over `F_p` first. Ranks mod `p` are lower bounds for the
/// rational ranks, so an empty result there is conclusive; a subset found mod
/// `p` is confirmed with an exact rank, and the exact search runs only if
/// that confirmation fails.
pub fn rado_violation(spaces: &[Vec<ExactVector>], dim: usize) -> Option<Vec<usize>> {
    let residues: Vec<Vec<Vec<u64>>> =
        spaces.iter().map(|s| s.iter().map(|v| ModPBasis::residues(v)).collect()).collect();
    let candidate = subset_search(&residues, &mut ModPBasis::new(dim))?;
    let rows: Vec<ExactVector> = candidate.iter().flat_map(|&i| spaces[i].iter().cloned()).collect();
    if rank_of(dim, &rows) < candidate.len() {
        return Some(candidate);
    }
    subset_search(spaces, &mut EchelonBasis::new(dim))
}

/// Picks one vector from each of `spaces` so that the picks are linearly
/// independent, as a maximum common independent set of the linear matroid
/// on all basis vectors and the partition matroid by space.
///
/// Returns `picks[i] = index into spaces[i]`, or `None` if no such choice
/// exists.
pub fn independent_transversal(spaces: &[Vec<ExactVector>], dim: usize) -> Option<Vec<usize>> {
    let ground: Vec<(usize, usize)> = spaces
        .iter()
        .enumerate()
        .flat_map(|(i, s)| (0..s.len()).map(move |j| (i, j)))
        .collect();
    let vector = |e: usize| &spaces[ground[e].0][ground[e].1];
    let family = |e: usize| ground[e].0;
    let m = ground.len();

    let mut in_set = vec![false; m];
    let mut used = vec![false; spaces.len()];
    {
        let mut basis = EchelonBasis::new(dim);
        for e in 0..m {
            if !used[family(e)] && basis.insert(vector(e)) {
                in_set[e] = true;
                used[family(e)] = true;
            }
        }
    }

    loop {
        let current: Vec<usize> = (0..m).filter(|&e| in_set[e]).collect();
        if current.len() == spaces.len() {
            break;
        }
        let mut basis = EchelonBasis::new(dim);
        for &e in &current {
            basis.insert(vector(e));
        }
        let mut holder = vec![usize::MAX; spaces.len()];
        for &e in &current {
            holder[family(e)] = e;
        }
        // exchange arcs x -> y (x in set) when current - x + y is linearly independent
        let mut linear_free = vec![false; m];
        let mut linear_arcs: Vec<Vec<usize>> = vec![Vec::new(); m];
        for y in (0..m).filter(|&y| !in_set[y]) {
            match basis.support_in_span(vector(y)) {
                None => linear_free[y] = true,
                Some(support) => {
                    for s in support {
                        linear_arcs[current[s]].push(y);
                    }
                }
            }
        }
        let mut prev = vec![usize::MAX; m];
        let mut seen = vec![false; m];
        let mut queue = VecDeque::new();
        for y in (0..m).filter(|&y| linear_free[y]) {
            seen[y] = true;
            queue.push_back(y);
        }
        let mut end = None;
        while let Some(u) = queue.pop_front() {
            if in_set[u] {
                for &y in &linear_arcs[u] {
                    if !seen[y] {
                        seen[y] = true;
                        prev[y] = u;
                        queue.push_back(y);
                    }
                }
            } else {
                let h = holder[family(u)];
                if h == usize::MAX {
                    end = Some(u);
                    break;
                }
                if !seen[h] {
                    seen[h] = true;
                    prev[h] = u;
                    queue.push_back(h);
                }
            }
        }
        let mut node = end?;
        loop {
            in_set[node] = !in_set[node];
            if prev[node] == usize::MAX {
                break;
            }
            node = prev[node];
        }
    }

    let mut picks = vec![0; spaces.len()];
    for e in (0..m).filter(|&e| in_set[e]) {
        picks[ground[e].0] = ground[e].1;
    }
    Some(picks)
}

fn to_i64(v: &[BigInt]) -> Vec<i64> {
    v.iter()
        .map(|x| x.to_i64().expect("orbit vector entries are bounded by the module degree"))
        .collect()
}

/// Decides whether maximal subgroups `ks` admit independent fixed weight-zero
/// vectors in `ℓ₀(G/∩ks)`, and produces them when they do.
pub fn check_mod2(g: &Group, ks: &[Subgroup], caps: &Caps) -> Result<Mod2Report> {
    if ks.len() > caps.rado {
        return Err(Error::capacity("subgroup family", ks.len(), caps.rado));
    }
    for (i, k) in ks.iter().enumerate() {
        if !is_maximal(g, k) {
            return Err(Error::domain(format!("subgroup {i} is not maximal")));
        }
        if ks[..i].contains(k) {
            return Err(Error::domain(format!("subgroup {i} is listed twice")));
        }
    }
    let h = ks.iter().fold(g.whole(), |acc, k| acc.intersection(g, k));
    let module = PermModule::new(g, &h);
    let dim = module.degree();
    let spaces: Vec<Vec<ExactVector>> = ks
        .iter()
        .map(|k| fixed_space_basis(&module, k, true).rows().map(<[BigInt]>::to_vec).collect())
        .collect();
    let solvable = g.is_solvable();
    let mut report = Mod2Report {
        holds: false,
        witnesses: Vec::new(),
        failed_subset: None,
        intersection_order: h.order(),
        module_dim: dim - 1,
        fixed_dims: spaces.iter().map(Vec::len).collect(),
        invariant_dim: module.orbits(&h).len() - 1,
        verified: false,
        solvable,
        conclusion: String::new(),
    };

    let violation = rado_violation(&spaces, dim);
    let transversal = independent_transversal(&spaces, dim);
    match (violation, transversal) {
        (Some(subset), None) => {
            report.failed_subset = Some(subset);
            report.conclusion = if solvable { "fails" } else { "no conclusion" }.to_string();
        }
        (None, Some(picks)) => {
            let witnesses: Vec<ExactVector> =
                picks.iter().enumerate().map(|(i, &j)| spaces[i][j].clone()).collect();
            report.verified = verify_witnesses(&module, ks, &witnesses);
            if !report.verified {
                return Err(Error::validation("witness vectors failed re-verification"));
            }
            report.holds = true;
            report.witnesses = witnesses.iter().map(|w| to_i64(w)).collect();
            report.conclusion = "holds".to_string();
        }
        _ => {
            return Err(Error::validation(
                "subset rank condition and transversal search disagree",
            ))
        }
    }
    Ok(report)
}

/// Fixed by the matching subgroup, weight zero, and full rank by Bareiss
/// elimination.
fn verify_witnesses(module: &PermModule<'_>, ks: &[Subgroup], witnesses: &[ExactVector]) -> bool {
    let dim = module.degree();
    let fixed = ks.iter().zip(witnesses).all(|(k, w)| {
        k.iter().all(|x| (0..dim).all(|p| w[module.act(x, p)] == w[p]))
    });
    let weight_zero = witnesses.iter().all(|w| w.iter().sum::<BigInt>().is_zero());
    let rank = ExactMatrix::from_rows(dim, witnesses.to_vec()).rank();
    fixed && weight_zero && rank == witnesses.len()
}
