//! Maximal subgroups through a minimal normal subgroup.
//!
//! For a minimal normal subgroup `N` of `G`, a maximal subgroup either
//! contains `N` (and is the preimage of a maximal subgroup of `G/N`) or, when
//! `N` is abelian, is a complement of `N`. Every complement of an abelian
//! minimal normal subgroup is maximal. Nonabelian `N` falls back to interval
//! enumeration.

use std::collections::HashSet;

use crate::config::Caps;
use crate::error::Result;
use crate::group::lattice::{all_subgroups, conjugacy_classes, maximal_in_interval, normal_closure};
use crate::group::{subgroup_closure, Group, Subgroup};

/// Complement candidates examined before falling back to interval
/// enumeration.
const COMPLEMENT_CANDIDATES: usize = 1 << 20;

/// `G/N` for a normal subgroup `N`, with the coset of every element of `G`
/// and one representative per coset (the identity's coset is 0).
pub(crate) struct Quotient {
    pub group: Group,
    pub coset_of: Vec<usize>,
    pub reps: Vec<usize>,
}

pub(crate) fn quotient(g: &Group, n: &Subgroup) -> Quotient {
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        for m in n.iter() {
            coset_of[g.mul(x, m)] = reps.len();
        }
        reps.push(x);
    }
    let k = reps.len();
    let mut mult = vec![0u32; k * k];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            mult[i * k + j] = coset_of[g.mul(a, b)] as u32;
        }
    }
    let inv = (0..k).map(|i| coset_of[g.inv(reps[i])] as u32).collect();
    Quotient {
        group: Group {
            order: k,
            mult,
            inv,
            labels: None,
        },
        coset_of,
        reps,
    }
}

/// A minimal normal subgroup of a nontrivial group: the smallest normal
/// closure of an element of prime order.
fn minimal_normal(g: &Group) -> Subgroup {
    let mut best: Option<Subgroup> = None;
    for class in conjugacy_classes(g) {
        let x = class[0];
        let order = g.element_order(x);
        if order == 1 || (2..order).any(|d| order.is_multiple_of(d)) {
            continue;
        }
        let n = normal_closure(g, &[x]);
        if best.as_ref().is_none_or(|b| n.order() < b.order()) {
            best = Some(n);
        }
    }
    best.expect("a nontrivial group has an element of prime order")
}

fn is_abelian_subgroup(g: &Group, n: &Subgroup) -> bool {
    let gens = n.generators();
    gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

/// Complements of the normal subgroup `n`, or `None` when there are too
/// many candidates to try.
fn complements(g: &Group, n: &Subgroup, q: &Quotient) -> Option<Vec<Subgroup>> {
    // lifts of a generating set of G/N
    let mut lifts = Vec::new();
    let mut reached = subgroup_closure(&q.group, &[]);
    for x in 0..g.order() {
        let c = q.coset_of[x];
        if !reached.contains(c) {
            reached = reached.extended(&q.group, c);
            lifts.push(x);
        }
    }
    let members = n.to_vec();
    let candidates = members.len().checked_pow(lifts.len() as u32)?;
    if candidates > COMPLEMENT_CANDIDATES {
        return None;
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut choice = vec![0usize; lifts.len()];
    loop {
        let seed: Vec<usize> = lifts.iter().zip(&choice).map(|(&x, &i)| g.mul(x, members[i])).collect();
        let k = subgroup_closure(g, &seed);
        // K maps onto G/N, so |K| = |G/N| forces K ∩ N = 1
        if k.order() == q.group.order() && seen.insert(k.members().clone()) {
            out.push(k);
        }
        let Some(pos) = choice.iter().position(|&i| i + 1 < members.len()) else {
            break;
        };
        choice[pos] += 1;
        choice[..pos].fill(0);
    }
    Some(out)
}

fn by_interval(g: &Group, caps: &Caps) -> Result<Vec<Subgroup>> {
    Ok(maximal_in_interval(&all_subgroups(g, caps)?, &g.whole()))
}

/// Maximal subgroups of `g`, in no particular order.
pub(crate) fn maximal_subgroups_unsorted(g: &Group, caps: &Caps) -> Result<Vec<Subgroup>> {
    if g.order() == 1 {
        return Ok(Vec::new());
    }
    let n = minimal_normal(g);
    if !is_abelian_subgroup(g, &n) {
        return by_interval(g, caps);
    }
    let q = quotient(g, &n);
    let Some(mut out) = complements(g, &n, &q) else {
        return by_interval(g, caps);
    };
    for m in maximal_subgroups_unsorted(&q.group, caps)? {
        let mut seed: Vec<usize> = m.generators().iter().map(|&c| q.reps[c]).collect();
        seed.extend_from_slice(n.generators());
        out.push(subgroup_closure(g, &seed));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitset::BitSet;
    use crate::group::named;

    #[test]
    fn quotient_of_s4_by_klein_four() {
        let s4 = named::symmetric(4);
        let v4 = subgroup_closure(&s4, &[s4.find_label("(1 2)(3 4)").unwrap(), s4.find_label("(1 3)(2 4)").unwrap()]);
        let q = quotient(&s4, &v4);
        assert_eq!(q.group.order(), 6);
        assert!(!q.group.is_abelian());
        assert_eq!(q.coset_of[0], 0);
        for a in 0..24 {
            for b in 0..24 {
                assert_eq!(q.group.mul(q.coset_of[a], q.coset_of[b]), q.coset_of[s4.mul(a, b)]);
            }
        }
    }

    #[test]
    fn minimal_normal_examples() {
        assert_eq!(minimal_normal(&named::symmetric(4)).order(), 4);
        assert_eq!(minimal_normal(&named::alternating(5)).order(), 60);
        assert!([2, 3].contains(&minimal_normal(&named::cyclic(12)).order()));
    }

    #[test]
    fn agrees_with_interval_enumeration() {
        let caps = Caps::default();
        let s3 = named::symmetric(3);
        let groups = [
            named::symmetric(3),
            named::symmetric(4),
            named::alternating(4),
            named::alternating(5),
            named::dihedral(6),
            named::dihedral(9),
            named::cyclic(30),
            named::elementary_abelian(2, 4),
            named::elementary_abelian(3, 2),
            Group::direct_product(&s3, &s3, &caps).unwrap(),
            Group::direct_product(&named::alternating(4), &named::cyclic(2), &caps).unwrap(),
            Group::direct_product(&named::dihedral(4), &named::cyclic(4), &caps).unwrap(),
        ];
        for g in groups {
            let mut fast: Vec<BitSet> = maximal_subgroups_unsorted(&g, &caps).unwrap().iter().map(|k| k.members().clone()).collect();
            let mut slow: Vec<BitSet> = by_interval(&g, &caps).unwrap().iter().map(|k| k.members().clone()).collect();
            fast.sort_by(|a, b| a.lex_cmp(b));
            slow.sort_by(|a, b| a.lex_cmp(b));
            assert_eq!(fast, slow, "order {}", g.order());
        }
    }
}
