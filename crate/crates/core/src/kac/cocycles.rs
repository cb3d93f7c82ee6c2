use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::lattice::{all_subgroups, double_cosets};
use crate::group::{Group, GroupAction, Subgroup};

use super::coideal::twisted_characters;

/// Homomorphisms `k → μ_modulus`, as exponent tables over the ids of `g`
/// (zero outside `k`), in lexicographic order.
pub fn characters(g: &Group, k: &Subgroup, modulus: u32) -> Vec<Vec<u32>> {
    let mut out = twisted_characters(g, k, modulus, |_, _| 0);
    out.sort();
    out
}

/// A map `μ: H₁ → N̂₁` with `μ(h₁h₂)(n) = μ(h₁)(n) · μ(h₂)(n^{h₁})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cocycle {
    /// `(h, index of μ(h) in CocycleSet::characters)` for `h ∈ H₁`.
    pub values: Vec<(usize, usize)>,
    /// `μ(h) = ν⁻¹ · ν^h` for some character `ν`.
    pub coboundary: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleSet {
    /// Exponent modulus of the character values, `exp(N₁)`.
    pub modulus: u32,
    /// The character group `N̂₁`, as exponent tables over `N`.
    pub characters: Vec<Vec<u32>>,
    pub cocycles: Vec<Cocycle>,
    /// `H₁` fixes every character.
    pub acts_trivially: bool,
    /// `N̂₁` is nontrivial and has no `H₁`-invariant subgroups besides the
    /// trivial one and itself.
    pub irreducible: bool,
}

impl CocycleSet {
    pub fn count(&self) -> usize {
        self.cocycles.len()
    }

    pub fn coboundary_count(&self) -> usize {
        self.cocycles.iter().filter(|c| c.coboundary).count()
    }
}

fn subgroup_exponent(g: &Group, k: &Subgroup) -> u32 {
    k.iter().fold(1usize, |acc, x| num_integer::lcm(acc, g.element_order(x))) as u32
}

/// Cocycles from `H₁` to the character group of `N₁`, where `H₁ ≤ H` acts on
/// `N₁ ≤ N` through `act` and characters transform by `χ^h(n) = χ(n^h)`.
pub fn cocycle_set(
    n: &Group,
    h: &Group,
    act: &GroupAction,
    n1: &Subgroup,
    h1: &Subgroup,
) -> Result<CocycleSet> {
    let stable = h1
        .generators()
        .iter()
        .all(|&s| n1.iter().all(|x| n1.contains(act.apply(s, x))));
    if !stable {
        return Err(Error::domain("H1 does not normalize N1"));
    }
    let e = subgroup_exponent(n, n1);
    let chars = characters(n, n1, e);
    let index: HashMap<&[u32], usize> = chars.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    let n1_members = n1.to_vec();
    // twist[h][i] = index of χ_i^h, for h in H₁ only
    let twist: Vec<Vec<usize>> = (0..h.order())
        .map(|s| {
            if !h1.contains(s) {
                return Vec::new();
            }
            chars
                .iter()
                .map(|c| {
                    let mut t = vec![0u32; n.order()];
                    for &x in &n1_members {
                        t[x] = c[act.conj(h, x, s)];
                    }
                    index[t.as_slice()]
                })
                .collect()
        })
        .collect();
    let k = chars.len();
    let add = |i: usize, j: usize| -> usize {
        let mut t = vec![0u32; n.order()];
        for &x in &n1_members {
            t[x] = (chars[i][x] + chars[j][x]) % e;
        }
        index[t.as_slice()]
    };
    let neg = |i: usize| -> usize {
        let mut t = vec![0u32; n.order()];
        for &x in &n1_members {
            t[x] = (e - chars[i][x]) % e;
        }
        index[t.as_slice()]
    };
    let zero = index[vec![0u32; n.order()].as_slice()];

    let h1_members = h1.to_vec();
    let coboundaries: Vec<Vec<usize>> = {
        let mut v: Vec<Vec<usize>> = (0..k)
            .map(|nu| h1_members.iter().map(|&s| add(neg(nu), twist[s][nu])).collect())
            .collect();
        v.sort();
        v.dedup();
        v
    };

    let gens = h1.generators().to_vec();
    let mut cocycles = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    'outer: loop {
        let mut mu: Vec<Option<usize>> = vec![None; h.order()];
        mu[h.identity()] = Some(zero);
        let mut queue = VecDeque::from([h.identity()]);
        let mut ok = true;
        'bfs: while let Some(x) = queue.pop_front() {
            for (j, &s) in gens.iter().enumerate() {
                let y = h.mul(x, s);
                let val = add(mu[x].unwrap(), twist[x][choice[j]]);
                match mu[y] {
                    Some(v) if v != val => {
                        ok = false;
                        break 'bfs;
                    }
                    Some(_) => {}
                    None => {
                        mu[y] = Some(val);
                        queue.push_back(y);
                    }
                }
            }
        }
        if ok {
            let full = h1_members.iter().all(|&p| {
                h1_members
                    .iter()
                    .all(|&q| mu[h.mul(p, q)].unwrap() == add(mu[p].unwrap(), twist[p][mu[q].unwrap()]))
            });
            if full {
                let table: Vec<usize> = h1_members.iter().map(|&s| mu[s].unwrap()).collect();
                cocycles.push(Cocycle {
                    coboundary: coboundaries.binary_search(&table).is_ok(),
                    values: h1_members.iter().copied().zip(table).collect(),
                });
            }
        }
        for j in 0..gens.len() {
            choice[j] += 1;
            if choice[j] < k {
                continue 'outer;
            }
            choice[j] = 0;
        }
        break;
    }
    cocycles.sort_by(|a, b| a.values.cmp(&b.values));

    let acts_trivially = h1_members.iter().all(|&s| (0..k).all(|i| twist[s][i] == i));
    let irreducible = if k <= 1 {
        false
    } else {
        let mult: Vec<u32> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| add(i, j) as u32).collect();
        // relabel so that the trivial character is element 0
        let mut perm: Vec<usize> = (0..k).collect();
        perm.swap(0, zero);
        let mut inv = vec![0; k];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let table: Vec<u32> = (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .map(|(i, j)| inv[mult[perm[i] * k + perm[j]] as usize] as u32)
            .collect();
        let dual = Group::from_table(k, table, &Caps::default())?;
        let subs = all_subgroups(&dual, &Caps::default())?;
        subs.iter()
            .filter(|s| s.order() > 1 && s.order() < k)
            .all(|s| !h1_members.iter().all(|&t| s.iter().all(|x| s.contains(inv[twist[t][perm[x]]]))))
    };

    Ok(CocycleSet {
        modulus: e,
        characters: chars,
        cocycles,
        acts_trivially,
        irreducible,
    })
}

/// Characters of `N₂` trivial on `N₁` against the number of `(N₁, N₁)`
/// double cosets inside `N₂`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterCountReport {
    pub characters: usize,
    pub double_cosets: usize,
    pub holds: bool,
}

pub fn character_count_bound_check(g: &Group, n1: &Subgroup, n2: &Subgroup) -> Result<CharacterCountReport> {
    if !n1.is_subgroup_of(n2) {
        return Err(Error::domain("N1 must lie in N2"));
    }
    let e = subgroup_exponent(g, n2);
    let characters = characters(g, n2, e)
        .into_iter()
        .filter(|c| n1.iter().all(|x| c[x] == 0))
        .count();
    let double_cosets = double_cosets(g, n1, n1)
        .parts
        .iter()
        .filter(|p| n2.contains(p[0]))
        .count();
    Ok(CharacterCountReport {
        characters,
        double_cosets,
        holds: characters <= double_cosets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{named, subgroup_closure};
    use crate::kac::{enumerate_coideals, samples, KacAlgebra};

    #[test]
    fn inversion_on_c3() {
        let sys = samples::c3_c2_trivial();
        let (n, h) = (sys.n_group(), sys.h_group());
        let set = cocycle_set(n, h, sys.action(), &n.whole(), &h.whole()).unwrap();
        assert_eq!(set.characters.len(), 3);
        assert_eq!(set.count(), 3);
        assert_eq!(set.coboundary_count(), 3);
        assert!(set.irreducible && !set.acts_trivially);
        let one = cocycle_set(n, h, sys.action(), &n.whole(), &h.trivial_subgroup()).unwrap();
        assert_eq!(one.count(), 1);
    }

    #[test]
    fn irreducible_solvable_bound() {
        let sys = samples::a4_trivial();
        let (n, h) = (sys.n_group(), sys.h_group());
        let set = cocycle_set(n, h, sys.action(), &n.whole(), &h.whole()).unwrap();
        assert!(set.irreducible && !set.acts_trivially);
        assert_eq!(set.count(), 4);
        assert_eq!(set.coboundary_count(), 4);
        assert!(set.count() <= (n.order() - 1) * h.order());
    }

    #[test]
    fn subgroup_not_normalized_by_all_of_h() {
        // C3 permutes the involutions of C2², so an order-2 N₁ is only
        // normalized by the trivial H₁
        let sys = samples::a4_trivial();
        let (n, h) = (sys.n_group(), sys.h_group());
        let n1 = subgroup_closure(n, &[1]);
        let set = cocycle_set(n, h, sys.action(), &n1, &h.trivial_subgroup()).unwrap();
        assert_eq!(set.count(), 1);
        assert!(cocycle_set(n, h, sys.action(), &n1, &h.whole()).is_err());
    }

    #[test]
    fn trivial_action_counts_homomorphisms() {
        let sys = samples::bilinear_xi();
        let (n, h) = (sys.n_group(), sys.h_group());
        let set = cocycle_set(n, h, sys.action(), &n.whole(), &h.whole()).unwrap();
        // Hom(C2 × C2, C2)
        assert_eq!(set.count(), 4);
        assert_eq!(set.coboundary_count(), 1);
        assert!(set.acts_trivially && set.irreducible);
    }

    #[test]
    fn count_matches_coideals_per_pair() {
        let caps = Caps::default();
        for (name, sys) in samples::all() {
            let a = KacAlgebra::new(sys.clone()).unwrap();
            let lat = enumerate_coideals(&a, &caps).unwrap();
            let mut pairs: Vec<(Subgroup, Subgroup)> = lat.nodes.iter().map(|t| (t.n1.clone(), t.h1.clone())).collect();
            pairs.dedup();
            for (n1, h1) in pairs {
                let count = lat.nodes.iter().filter(|t| t.n1 == n1 && t.h1 == h1).count();
                let set = cocycle_set(sys.n_group(), sys.h_group(), sys.action(), &n1, &h1).unwrap();
                assert_eq!(count, set.count(), "{name}");
            }
        }
    }

    #[test]
    fn character_counts() {
        let c4 = named::cyclic(4);
        let r = character_count_bound_check(&c4, &c4.trivial_subgroup(), &c4.whole()).unwrap();
        assert_eq!((r.characters, r.double_cosets, r.holds), (4, 4, true));
        let c2 = subgroup_closure(&c4, &[c4.mul(1, 1)]);
        let r = character_count_bound_check(&c4, &c2, &c4.whole()).unwrap();
        assert_eq!((r.characters, r.double_cosets, r.holds), (2, 2, true));
        let s3 = named::symmetric(3);
        let a3 = all_subgroups(&s3, &Caps::default()).unwrap().into_iter().find(|k| k.order() == 3).unwrap();
        let r = character_count_bound_check(&s3, &a3, &s3.whole()).unwrap();
        assert_eq!((r.characters, r.double_cosets, r.holds), (2, 2, true));
        assert!(character_count_bound_check(&s3, &s3.whole(), &a3).is_err());
    }
}
