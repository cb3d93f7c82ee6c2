use std::cmp::Ordering;
use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::lattice::all_subgroups;
use crate::group::{Group, Subgroup};

use super::algebra::KacAlgebra;

/// Which eigen-equation defines the spaces `C(h)`: right coideals use
/// `L_{n,η_h} f = λ(n,h) f`, left coideals use `R_{n,η_h}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoidealSide {
    #[default]
    Right,
    Left,
}

/// The data `(N₁, H₁, λ)` describing a coideal
/// `B = ⊕_{h∈H₁} (C(h), h)`.
///
/// `lambda` holds exponents modulo [`KacAlgebra::modulus`] over all of
/// `N × H` (index `n·|H| + h`), zero outside `N₁ × H₁`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoidealTriple {
    pub n1: Subgroup,
    pub h1: Subgroup,
    pub lambda: Vec<u32>,
}

impl CoidealTriple {
    /// `({e}, H, 0)`, the whole algebra.
    pub fn top(a: &KacAlgebra) -> Self {
        let sys = a.system();
        CoidealTriple {
            n1: sys.n_group().trivial_subgroup(),
            h1: sys.h_group().whole(),
            lambda: vec![0; a.dim()],
        }
    }

    /// `(N, {e}, 0)`, the scalars.
    pub fn bottom(a: &KacAlgebra) -> Self {
        let sys = a.system();
        CoidealTriple {
            n1: sys.n_group().whole(),
            h1: sys.h_group().trivial_subgroup(),
            lambda: vec![0; a.dim()],
        }
    }

    pub fn lambda(&self, a: &KacAlgebra, n: usize, h: usize) -> u32 {
        self.lambda[n * a.system().h_group().order() + h]
    }

    /// `|H₁|·|N|/|N₁|`.
    pub fn dim(&self, a: &KacAlgebra) -> usize {
        self.h1.order() * a.system().n_group().order() / self.n1.order()
    }

    /// `H₁` normalizes `N₁` and `λ` satisfies
    /// `λ(n₁,h)λ(n₂,h) = λ(n₁n₂,h)η_h(n₁,n₂)` and
    /// `λ(n,h₁)λ(n^{h₁},h₂)ξ_n(h₁,h₂) = λ(n,h₁h₂)`.
    pub fn satisfies_relations(&self, a: &KacAlgebra) -> bool {
        let sys = a.system();
        let (ng, hg) = (sys.n_group(), sys.h_group());
        let ho = hg.order();
        if !normalizes(a, &self.h1, &self.n1) {
            return false;
        }
        let n1 = self.n1.to_vec();
        let h1 = self.h1.to_vec();
        let lam = |n: usize, h: usize| self.lambda[n * ho + h];
        for &h in &h1 {
            for &x in &n1 {
                for &y in &n1 {
                    if a.add(lam(x, h), lam(y, h)) != a.add(lam(ng.mul(x, y), h), a.eta(h, x, y)) {
                        return false;
                    }
                }
            }
        }
        for &p in &h1 {
            for &q in &h1 {
                for &x in &n1 {
                    let lhs = a.add(a.add(lam(x, p), lam(a.conj(x, p), q)), a.xi(x, p, q));
                    if lhs != lam(x, hg.mul(p, q)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Canonical node order: `|N₁|` descending, `|H₁|` ascending, then the
    /// subgroups, then the `λ` table.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        other
            .n1
            .order()
            .cmp(&self.n1.order())
            .then(self.h1.order().cmp(&other.h1.order()))
            .then_with(|| self.n1.cmp(&other.n1))
            .then_with(|| self.h1.cmp(&other.h1))
            .then_with(|| self.lambda.cmp(&other.lambda))
    }
}

/// `h N₁ h⁻¹ = N₁` for every `h ∈ H₁`.
pub fn normalizes(a: &KacAlgebra, h1: &Subgroup, n1: &Subgroup) -> bool {
    let act = a.system().action();
    h1.generators()
        .iter()
        .all(|&h| n1.iter().all(|x| n1.contains(act.apply(h, x))))
}

/// Solutions `μ` of `μ(x) + μ(y) = μ(xy) + c(x, y)` on the subgroup `k` of
/// `g`, with values modulo `modulus`, found by assigning the generators and
/// propagating. `c` must be normalized and a 2-cocycle for the propagation to
/// be consistent; every candidate is checked in full anyway.
pub(crate) fn twisted_characters(
    g: &Group,
    k: &Subgroup,
    modulus: u32,
    c: impl Fn(usize, usize) -> u32,
) -> Vec<Vec<u32>> {
    let gens = k.generators().to_vec();
    let members = k.to_vec();
    // a generator of order r must satisfy r·μ(x) = Σ_{i<r} c(x^i, x)
    let candidates: Vec<Vec<u32>> = gens
        .iter()
        .map(|&x| {
            let mut target = 0u64;
            let mut p = x;
            let mut r = 1u64;
            while p != g.identity() {
                target += u64::from(c(p, x));
                p = g.mul(p, x);
                r += 1;
            }
            let m = u64::from(modulus);
            (0..modulus).filter(|&v| (r * u64::from(v)) % m == target % m).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    if candidates.iter().any(Vec::is_empty) {
        return out;
    }
    'outer: loop {
        let mut table: Vec<Option<u32>> = vec![None; g.order()];
        table[g.identity()] = Some(0);
        let mut queue = VecDeque::from([g.identity()]);
        let mut ok = true;
        while let Some(x) = queue.pop_front() {
            for (j, &s) in gens.iter().enumerate() {
                let y = g.mul(x, s);
                let val = (table[x].unwrap() + candidates[j][choice[j]] + modulus - c(x, s) % modulus) % modulus;
                match table[y] {
                    Some(v) if v != val => {
                        ok = false;
                        break;
                    }
                    Some(_) => {}
                    None => {
                        table[y] = Some(val);
                        queue.push_back(y);
                    }
                }
            }
            if !ok {
                break;
            }
        }
        if ok {
            let full = members.iter().all(|&x| {
                members.iter().all(|&y| {
                    (table[x].unwrap() + table[y].unwrap()) % modulus
                        == (table[g.mul(x, y)].unwrap() + c(x, y)) % modulus
                })
            });
            if full {
                out.push(table.iter().map(|v| v.unwrap_or(0)).collect());
            }
        }
        for j in 0..gens.len() {
            choice[j] += 1;
            if choice[j] < candidates[j].len() {
                continue 'outer;
            }
            choice[j] = 0;
        }
        break;
    }
    out
}

/// All `λ` for a fixed pair `(N₁, H₁)`, in lexicographic table order.
pub fn lambdas_for_pair(a: &KacAlgebra, n1: &Subgroup, h1: &Subgroup) -> Vec<Vec<u32>> {
    let sys = a.system();
    let (ng, hg) = (sys.n_group(), sys.h_group());
    let (no, ho) = (ng.order(), hg.order());
    let m = a.modulus();
    if !normalizes(a, h1, n1) {
        return Vec::new();
    }
    let hgens = h1.generators().to_vec();
    let per_gen: Vec<Vec<Vec<u32>>> = hgens
        .iter()
        .map(|&s| twisted_characters(ng, n1, m, |x, y| a.eta(s, x, y)))
        .collect();
    if per_gen.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let n1_members = n1.to_vec();
    let mut out = Vec::new();
    let mut choice = vec![0usize; hgens.len()];
    'outer: loop {
        // rows[h] = λ(·, h) over N, filled along a BFS of H₁ with
        // λ(n, xs) = λ(n, x) + λ(n^x, s) + ξ_n(x, s)
        let mut rows: Vec<Option<Vec<u32>>> = vec![None; ho];
        rows[hg.identity()] = Some(vec![0; no]);
        let mut queue = VecDeque::from([hg.identity()]);
        let mut ok = true;
        'bfs: while let Some(x) = queue.pop_front() {
            for (j, &s) in hgens.iter().enumerate() {
                let y = hg.mul(x, s);
                let rx = rows[x].as_ref().unwrap();
                let gen_row = &per_gen[j][choice[j]];
                let mut ry = vec![0u32; no];
                for &n in &n1_members {
                    ry[n] = (rx[n] + gen_row[a.conj(n, x)] + a.xi(n, x, s)) % m;
                }
                match &rows[y] {
                    Some(existing) if *existing != ry => {
                        ok = false;
                        break 'bfs;
                    }
                    Some(_) => {}
                    None => {
                        rows[y] = Some(ry);
                        queue.push_back(y);
                    }
                }
            }
        }
        if ok {
            let mut lambda = vec![0u32; no * ho];
            for (h, row) in rows.iter().enumerate() {
                if let Some(row) = row {
                    for n in 0..no {
                        lambda[n * ho + h] = row[n];
                    }
                }
            }
            let t = CoidealTriple {
                n1: n1.clone(),
                h1: h1.clone(),
                lambda,
            };
            if t.satisfies_relations(a) {
                out.push(t.lambda);
            }
        }
        for j in 0..hgens.len() {
            choice[j] += 1;
            if choice[j] < per_gen[j].len() {
                continue 'outer;
            }
            choice[j] = 0;
        }
        break;
    }
    out.sort();
    out
}

/// Coideals ordered by inclusion.
#[derive(Debug, Clone)]
pub struct CoidealLattice {
    pub nodes: Vec<CoidealTriple>,
    pub dims: Vec<usize>,
    /// `leq[i][j]`: node `i` is contained in node `j`.
    leq: Vec<Vec<bool>>,
    /// Covering pairs `(lower, upper)`.
    pub covers: Vec<(usize, usize)>,
    pub top: usize,
    pub bottom: usize,
}

impl CoidealLattice {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn position(&self, t: &CoidealTriple) -> Option<usize> {
        self.nodes.iter().position(|x| x == t)
    }

    /// Nodes directly below `upper`.
    pub fn lower_covers(&self, upper: usize) -> Vec<usize> {
        self.covers.iter().filter(|c| c.1 == upper).map(|c| c.0).collect()
    }

    /// Nodes directly above `lower`.
    pub fn upper_covers(&self, lower: usize) -> Vec<usize> {
        self.covers.iter().filter(|c| c.0 == lower).map(|c| c.1).collect()
    }

    /// Maximal coideals: the nodes directly below the top.
    pub fn maximal(&self) -> Vec<usize> {
        self.lower_covers(self.top)
    }

    /// Minimal coideals: the nodes directly above the bottom.
    pub fn minimal(&self) -> Vec<usize> {
        self.upper_covers(self.bottom)
    }
}

/// `B₁ ⊆ B₂` iff `N₁ ⊇ N₂`, `H₁ ⊆ H₂` and the phases agree on `N₂ × H₁`.
pub fn triple_leq(a: &KacAlgebra, b1: &CoidealTriple, b2: &CoidealTriple) -> bool {
    b2.n1.is_subgroup_of(&b1.n1)
        && b1.h1.is_subgroup_of(&b2.h1)
        && b2
            .n1
            .iter()
            .all(|n| b1.h1.iter().all(|h| b1.lambda(a, n, h) == b2.lambda(a, n, h)))
}

/// Every coideal, found pair by pair over `(N₁, H₁)` with `H₁` normalizing
/// `N₁`, in canonical order, with the inclusion order.
pub fn enumerate_coideals(a: &KacAlgebra, caps: &Caps) -> Result<CoidealLattice> {
    let sys = a.system();
    let n_subs = all_subgroups(sys.n_group(), caps)?;
    let h_subs = all_subgroups(sys.h_group(), caps)?;
    let pairs = n_subs.len() * h_subs.len();
    if pairs > caps.coideal_pairs {
        return Err(Error::capacity("subgroup pairs", pairs, caps.coideal_pairs));
    }
    let mut nodes = Vec::new();
    for n1 in &n_subs {
        for h1 in &h_subs {
            for lambda in lambdas_for_pair(a, n1, h1) {
                nodes.push(CoidealTriple {
                    n1: n1.clone(),
                    h1: h1.clone(),
                    lambda,
                });
            }
        }
    }
    nodes.sort_by(CoidealTriple::canonical_cmp);
    Ok(build_lattice(a, nodes))
}

pub(crate) fn build_lattice(a: &KacAlgebra, nodes: Vec<CoidealTriple>) -> CoidealLattice {
    let k = nodes.len();
    let leq: Vec<Vec<bool>> = (0..k)
        .map(|i| (0..k).map(|j| triple_leq(a, &nodes[i], &nodes[j])).collect())
        .collect();
    let mut covers = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i != j && leq[i][j] && !(0..k).any(|z| z != i && z != j && leq[i][z] && leq[z][j]) {
                covers.push((i, j));
            }
        }
    }
    let top_t = CoidealTriple::top(a);
    let bottom_t = CoidealTriple::bottom(a);
    let top = nodes.iter().position(|t| *t == top_t).expect("the whole algebra is a coideal");
    let bottom = nodes.iter().position(|t| *t == bottom_t).expect("the scalars are a coideal");
    let dims = nodes.iter().map(|t| t.dim(a)).collect();
    CoidealLattice {
        nodes,
        dims,
        leq,
        covers,
        top,
        bottom,
    }
}

/// A function on `N` with values that are roots of unity or zero.
pub type PhaseFunction = Vec<Option<u32>>;

/// For one `h`, solves `f(n·m) η_h(n,m) = λ(n,h) f(m)` (when `left`) and
/// `f(m·n) η_h(m,n) = λ(n,h) f(m)` (when `right`) for all `n ∈ N₁`.
///
/// The solution space has a basis of functions supported on single
/// connected components of the constraint graph; one is returned for each
/// component whose constraints are consistent, normalized to exponent 0 at
/// its smallest element.
pub fn constraint_basis(a: &KacAlgebra, t: &CoidealTriple, h: usize, left: bool, right: bool) -> Vec<PhaseFunction> {
    let ng = a.system().n_group();
    let no = ng.order();
    let n1 = t.n1.to_vec();
    let mut edges: Vec<(usize, usize, u32)> = Vec::new();
    for m in 0..no {
        for &n in &n1 {
            let lam = t.lambda(a, n, h);
            if left {
                edges.push((m, ng.mul(n, m), a.sub(lam, a.eta(h, n, m))));
            }
            if right {
                edges.push((m, ng.mul(m, n), a.sub(lam, a.eta(h, m, n))));
            }
        }
    }
    let mut adjacency: Vec<Vec<(usize, u32)>> = vec![Vec::new(); no];
    for &(u, v, d) in &edges {
        adjacency[u].push((v, d));
    }
    let mut value: Vec<Option<u32>> = vec![None; no];
    let mut component = vec![usize::MAX; no];
    let mut basis = Vec::new();
    for start in 0..no {
        if value[start].is_some() {
            continue;
        }
        let id = basis.len();
        let mut members = vec![start];
        value[start] = Some(0);
        component[start] = id;
        let mut i = 0;
        while i < members.len() {
            let u = members[i];
            i += 1;
            for &(v, d) in &adjacency[u] {
                if value[v].is_none() {
                    value[v] = Some(a.add(value[u].unwrap(), d));
                    component[v] = id;
                    members.push(v);
                }
            }
        }
        let consistent = members.iter().all(|&u| {
            adjacency[u]
                .iter()
                .all(|&(v, d)| value[v] == Some(a.add(value[u].unwrap(), d)))
        });
        let mut f = vec![None; no];
        if consistent {
            for &u in &members {
                f[u] = value[u];
            }
        }
        basis.push((consistent, f));
    }
    basis.into_iter().filter(|(ok, _)| *ok).map(|(_, f)| f).collect()
}

/// The spaces `C(h)` of a triple for every `h ∈ H₁`, as `(h, basis)`.
pub fn materialize(a: &KacAlgebra, t: &CoidealTriple, side: CoidealSide) -> Vec<(usize, Vec<PhaseFunction>)> {
    let left = side == CoidealSide::Right;
    t.h1.iter().map(|h| (h, constraint_basis(a, t, h, left, !left))).collect()
}

/// Outcome of [`closure_report`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub holds: bool,
    /// `dim C(h)` for each `h ∈ H₁`, in element order.
    pub dims: Vec<usize>,
    /// Every `C(h)` has dimension `|N|/|N₁|`.
    pub dims_ok: bool,
    /// First `(h₁, h₂)` with `C(h₁) C(h₂)^{h₁} ξ(h₁,h₂) ⊄ C(h₁h₂)`.
    pub failed_pair: Option<(usize, usize)>,
}

/// `g ∈ span(basis)` where the basis functions have disjoint supports that
/// cover whole constraint components.
fn in_span(g: &PhaseFunction, basis: &[PhaseFunction], a: &KacAlgebra) -> bool {
    let mut covered = vec![false; g.len()];
    for b in basis {
        let support: Vec<usize> = (0..b.len()).filter(|&x| b[x].is_some()).collect();
        let mut offset = None;
        let mut any = false;
        let mut all = true;
        for &x in &support {
            covered[x] = true;
            match g[x] {
                Some(v) => {
                    any = true;
                    let d = a.sub(v, b[x].unwrap());
                    if *offset.get_or_insert(d) != d {
                        return false;
                    }
                }
                None => all = false,
            }
        }
        if any && !all {
            return false;
        }
    }
    (0..g.len()).all(|x| covered[x] || g[x].is_none())
}

/// Materializes every `C(h)` and checks the dimensions and the product
/// containment `C(h₁) · C(h₂)^{h₁} · ξ(h₁,h₂) ⊆ C(h₁h₂)` on basis functions.
pub fn closure_report(a: &KacAlgebra, t: &CoidealTriple, side: CoidealSide) -> ClosureReport {
    let sys = a.system();
    let (ng, hg) = (sys.n_group(), sys.h_group());
    let expected = ng.order() / t.n1.order();
    let spaces = materialize(a, t, side);
    let dims: Vec<usize> = spaces.iter().map(|(_, b)| b.len()).collect();
    let dims_ok = normalizes(a, &t.h1, &t.n1) && dims.iter().all(|&d| d == expected);
    let mut report = ClosureReport {
        holds: false,
        dims,
        dims_ok,
        failed_pair: None,
    };
    if !dims_ok {
        return report;
    }
    let index: Vec<Option<usize>> = {
        let mut v = vec![None; hg.order()];
        for (i, (h, _)) in spaces.iter().enumerate() {
            v[*h] = Some(i);
        }
        v
    };
    for (h1, b1) in &spaces {
        for (h2, b2) in &spaces {
            let target = &spaces[index[hg.mul(*h1, *h2)].expect("H₁ is a subgroup")].1;
            for f1 in b1 {
                for f2 in b2 {
                    let g: PhaseFunction = (0..ng.order())
                        .map(|x| match (f1[x], f2[a.conj(x, *h1)]) {
                            (Some(u), Some(v)) => Some(a.add(a.add(u, v), a.xi(x, *h1, *h2))),
                            _ => None,
                        })
                        .collect();
                    if !in_span(&g, target, a) {
                        report.failed_pair = Some((*h1, *h2));
                        return report;
                    }
                }
            }
        }
    }
    report.holds = true;
    report
}

/// Whether the triple defines a subalgebra with spaces of the expected size.
pub fn validate_triple_closure(a: &KacAlgebra, t: &CoidealTriple, side: CoidealSide) -> bool {
    closure_report(a, t, side).holds
}
