use serde::{Deserialize, Serialize};

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::lattice::double_cosets;

use super::algebra::KacAlgebra;
use super::coideal::{constraint_basis, enumerate_coideals, CoidealLattice, CoidealTriple};

/// Maximal and minimal coideals of the whole algebra against `|N|·|H|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KacWallReport {
    pub dim: usize,
    pub node_count: usize,
    pub max_count: usize,
    pub min_count: usize,
    pub holds_max: bool,
    pub holds_min: bool,
    pub n_solvable: bool,
    pub h_solvable: bool,
    /// Node indices of the maximal coideals.
    pub maximal: Vec<usize>,
    /// Node indices of the minimal coideals.
    pub minimal: Vec<usize>,
}

pub fn check_kac_wall(a: &KacAlgebra, caps: &Caps) -> Result<KacWallReport> {
    let lat = enumerate_coideals(a, caps)?;
    Ok(kac_wall_for_lattice(a, &lat))
}

pub(crate) fn kac_wall_for_lattice(a: &KacAlgebra, lat: &CoidealLattice) -> KacWallReport {
    let sys = a.system();
    let maximal = lat.maximal();
    let minimal = lat.minimal();
    let dim = a.dim();
    KacWallReport {
        dim,
        node_count: lat.len(),
        max_count: maximal.len(),
        min_count: minimal.len(),
        holds_max: maximal.len() < dim,
        holds_min: minimal.len() < dim,
        n_solvable: sys.n_group().is_solvable(),
        h_solvable: sys.h_group().is_solvable(),
        maximal,
        minimal,
    }
}

/// `dim(C_R(h) ∩ C_L(h))` for each `h ∈ H₁`, as `(h, dim)`.
pub fn commutant_dims(a: &KacAlgebra, t: &CoidealTriple) -> Vec<(usize, usize)> {
    t.h1.iter().map(|h| (h, constraint_basis(a, t, h, true, true).len())).collect()
}

/// `Σ_{h∈H₁} dim(C_R(h) ∩ C_L(h))`: each `(N₁, N₁)` double coset on which
/// the left and right eigen-equations are consistent contributes one.
pub fn second_commutant_dim(a: &KacAlgebra, t: &CoidealTriple) -> usize {
    commutant_dims(a, t).iter().map(|&(_, d)| d).sum()
}

/// Maximal and minimal coideals strictly between the scalars and `B`,
/// against the second commutant dimension of `B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelativeKacReport {
    pub node: usize,
    pub bound: usize,
    /// Nodes `B' ⊆ B`, including both ends.
    pub interval_size: usize,
    pub max_count: usize,
    pub min_count: usize,
    pub holds_max: bool,
    pub holds_min: bool,
    pub solvable: bool,
    pub maximal: Vec<usize>,
    pub minimal: Vec<usize>,
}

/// For the coideal at `node`: the maximal coideals are those directly below
/// it, the minimal ones those directly above the scalars and inside it.
pub fn check_relative_kac_wall(a: &KacAlgebra, lat: &CoidealLattice, node: usize) -> Result<RelativeKacReport> {
    if node >= lat.len() {
        return Err(Error::domain(format!("no coideal with index {node}")));
    }
    let sys = a.system();
    let bound = second_commutant_dim(a, &lat.nodes[node]);
    let interval_size = (0..lat.len()).filter(|&i| lat.leq(i, node)).count();
    let (maximal, minimal) = if node == lat.bottom {
        (Vec::new(), Vec::new())
    } else {
        (
            lat.lower_covers(node),
            lat.minimal().into_iter().filter(|&i| lat.leq(i, node)).collect(),
        )
    };
    Ok(RelativeKacReport {
        node,
        bound,
        interval_size,
        max_count: maximal.len(),
        min_count: minimal.len(),
        holds_max: maximal.len() < bound,
        holds_min: minimal.len() < bound,
        solvable: sys.n_group().is_solvable() && sys.h_group().is_solvable(),
        maximal,
        minimal,
    })
}

/// One family of extensions `N_i ⊋ N₁` (pairwise meeting in `N₁`) checked
/// against the commutant dimension at one `h`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JbInstance {
    pub h: usize,
    /// Node indices of the extensions in the family.
    pub family: Vec<usize>,
    /// `1 + Σ (k_i − 1)` with `k_i` the number of `(N₁, N₁)` double cosets in `N_i`.
    pub bound: usize,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JbBoundReport {
    pub node: usize,
    pub extensions: usize,
    pub families_checked: usize,
    pub violations: Vec<JbInstance>,
}

impl JbBoundReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `dim(C_R(h) ∩ C_L(h)) ≥ 1 + Σ (k_i − 1)` for every family of
/// extensions of the node's phases to larger `N_i` with the same `H₁`,
/// pairwise intersecting in `N₁`.
pub fn jb_lower_bound_check(a: &KacAlgebra, lat: &CoidealLattice, node: usize) -> Result<JbBoundReport> {
    const MAX_FAMILIES: usize = 1 << 20;
    if node >= lat.len() {
        return Err(Error::domain(format!("no coideal with index {node}")));
    }
    let ng = a.system().n_group();
    let t = &lat.nodes[node];
    let ext: Vec<usize> = (0..lat.len())
        .filter(|&j| {
            let s = &lat.nodes[j];
            j != node && s.h1 == t.h1 && lat.leq(j, node)
        })
        .collect();
    let dc = double_cosets(ng, &t.n1, &t.n1);
    let k: Vec<usize> = ext
        .iter()
        .map(|&j| dc.parts.iter().filter(|p| lat.nodes[j].n1.contains(p[0])).count())
        .collect();
    let meets_in_n1 = |i: usize, j: usize| {
        let (x, y) = (&lat.nodes[ext[i]].n1, &lat.nodes[ext[j]].n1);
        x.intersection(ng, y) == t.n1
    };
    let dims = commutant_dims(a, t);
    let mut report = JbBoundReport {
        node,
        extensions: ext.len(),
        families_checked: 0,
        violations: Vec::new(),
    };
    // families are the cliques of the "meets in N1" graph, grown in index order
    let compatible: Vec<Vec<bool>> = (0..ext.len())
        .map(|i| (0..ext.len()).map(|j| i != j && meets_in_n1(i, j)).collect())
        .collect();
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
    while let Some((members, next)) = stack.pop() {
        report.families_checked += 1;
        if report.families_checked > MAX_FAMILIES {
            return Err(Error::capacity("extension families", report.families_checked, MAX_FAMILIES));
        }
        let bound = 1 + members.iter().map(|&i| k[i] - 1).sum::<usize>();
        for &(h, dim) in &dims {
            if dim < bound {
                report.violations.push(JbInstance {
                    h,
                    family: members.iter().map(|&i| ext[i]).collect(),
                    bound,
                    dim,
                });
            }
        }
        for j in next..ext.len() {
            if members.iter().all(|&i| compatible[i][j]) {
                let mut grown = members.clone();
                grown.push(j);
                stack.push((grown, j + 1));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::lattice::{double_coset_count, maximal_overgroups, minimal_overgroups};
    use crate::group::named;
    use crate::kac::samples;

    #[test]
    fn c3_c2_counts() {
        let a = KacAlgebra::new(samples::c3_c2_trivial()).unwrap();
        let r = check_kac_wall(&a, &Caps::default()).unwrap();
        assert_eq!((r.max_count, r.min_count, r.dim), (4, 4, 6));
        assert!(r.holds_max && r.holds_min && r.n_solvable && r.h_solvable);
    }

    #[test]
    fn degenerate_counts() {
        let a = KacAlgebra::new(samples::group_algebra(named::symmetric(3))).unwrap();
        let r = check_kac_wall(&a, &Caps::default()).unwrap();
        assert_eq!((r.max_count, r.dim), (4, 6));
        let a = KacAlgebra::new(samples::function_algebra(named::cyclic(4))).unwrap();
        let r = check_kac_wall(&a, &Caps::default()).unwrap();
        assert_eq!((r.max_count, r.dim), (1, 4));
        assert!(r.holds_max && r.holds_min);
    }

    #[test]
    fn commutant_at_ends() {
        for (name, sys) in samples::all() {
            let a = KacAlgebra::new(sys).unwrap();
            let top = CoidealTriple::top(&a);
            let bottom = CoidealTriple::bottom(&a);
            assert_eq!(second_commutant_dim(&a, &top), a.dim(), "{name}");
            assert_eq!(second_commutant_dim(&a, &bottom), 1, "{name}");
        }
    }

    #[test]
    fn relative_counts_on_c3_c2() {
        let a = KacAlgebra::new(samples::c3_c2_trivial()).unwrap();
        let lat = enumerate_coideals(&a, &Caps::default()).unwrap();
        let top = check_relative_kac_wall(&a, &lat, lat.top).unwrap();
        let whole = kac_wall_for_lattice(&a, &lat);
        assert_eq!(top.bound, a.dim());
        assert_eq!((top.max_count, top.min_count), (whole.max_count, whole.min_count));
        let zero = CoidealTriple {
            n1: lat.nodes[lat.bottom].n1.clone(),
            h1: a.system().h_group().whole(),
            lambda: vec![0; a.dim()],
        };
        let idx = lat.position(&zero).unwrap();
        let r = check_relative_kac_wall(&a, &lat, idx).unwrap();
        assert_eq!(r.interval_size, 2);
        assert_eq!((r.max_count, r.min_count, r.bound), (1, 1, 2));
        assert!(r.holds_max && r.holds_min);
    }

    #[test]
    fn function_algebra_reproduces_relative_subgroup_counts() {
        let caps = Caps::default();
        for g in [named::symmetric(3), named::dihedral(4), named::alternating(4)] {
            let a = KacAlgebra::new(samples::function_algebra(g.clone())).unwrap();
            let lat = enumerate_coideals(&a, &caps).unwrap();
            for (i, t) in lat.nodes.iter().enumerate() {
                if t.n1.order() == g.order() {
                    continue;
                }
                let r = check_relative_kac_wall(&a, &lat, i).unwrap();
                assert_eq!(r.bound, double_coset_count(&g, &t.n1, &t.n1));
                assert_eq!(r.min_count, maximal_overgroups(&g, &t.n1, &caps).unwrap().len());
                assert_eq!(r.max_count, minimal_overgroups(&g, &t.n1).unwrap().len());
            }
        }
    }

    #[test]
    fn lower_bound_never_violated() {
        for (name, sys) in samples::all() {
            let a = KacAlgebra::new(sys).unwrap();
            let lat = enumerate_coideals(&a, &Caps::default()).unwrap();
            for i in 0..lat.len() {
                let r = jb_lower_bound_check(&a, &lat, i).unwrap();
                assert!(r.holds(), "{name} node {i}: {:?}", r.violations);
                assert!(r.families_checked >= 1);
            }
        }
    }
}
