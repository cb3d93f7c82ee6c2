//! Interval sublattices, extremal overgroups and double cosets.

use std::collections::HashSet;

use crate::bitset::BitSet;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{subgroup_closure, Group, Subgroup};

/// Marks the double coset `K x K` (found by closing under multiplication by
/// `K`'s generators on both sides) in `marked`.
fn mark_double_coset(g: &Group, left: &Subgroup, right: &Subgroup, x: usize, marked: &mut BitSet) -> Vec<usize> {
    let mut part = Vec::new();
    if marked.insert(x) {
        part.push(x);
    }
    let mut i = 0;
    while i < part.len() {
        let y = part[i];
        for &s in left.generators() {
            let z = g.mul(s, y);
            if marked.insert(z) {
                part.push(z);
            }
        }
        for &s in right.generators() {
            let z = g.mul(y, s);
            if marked.insert(z) {
                part.push(z);
            }
        }
        i += 1;
    }
    part
}

/// All subgroups `K` with `h ⊆ K ⊆ g`, in canonical order.
///
/// Breadth-first over one-element extensions `⟨K, x⟩`, with one `x` per
/// `(K, K)` double coset and memoization on member bitsets.
pub fn interval_subgroups(g: &Group, h: &Subgroup, caps: &Caps) -> Result<Vec<Subgroup>> {
    if g.order() > caps.interval_order {
        return Err(Error::capacity("group order for interval enumeration", g.order(), caps.interval_order));
    }
    let mut seen: HashSet<BitSet> = HashSet::from([h.members().clone()]);
    let mut list = vec![h.clone()];
    let mut next = 0;
    while next < list.len() {
        let k = list[next].clone();
        next += 1;
        let mut marked = k.members().clone();
        for x in 0..g.order() {
            if marked.contains(x) {
                continue;
            }
            mark_double_coset(g, &k, &k, x, &mut marked);
            let l = k.extended(g, x);
            if seen.insert(l.members().clone()) {
                list.push(l);
                if list.len() > caps.interval_size {
                    return Err(Error::capacity("interval size", list.len(), caps.interval_size));
                }
            }
        }
    }
    list.sort();
    Ok(list)
}

/// All subgroups of `g`.
pub fn all_subgroups(g: &Group, caps: &Caps) -> Result<Vec<Subgroup>> {
    interval_subgroups(g, &g.trivial_subgroup(), caps)
}

/// Elements of a canonically sorted interval that are maximal below its top.
pub fn maximal_in_interval(interval: &[Subgroup], top: &Subgroup) -> Vec<Subgroup> {
    let mut out = Vec::new();
    for (i, k) in interval.iter().enumerate() {
        if k == top {
            continue;
        }
        let covered = interval[i + 1..]
            .iter()
            .any(|l| l != top && l.order() > k.order() && k.is_subgroup_of(l));
        if !covered {
            out.push(k.clone());
        }
    }
    out
}

/// Elements of a canonically sorted interval that are minimal above its bottom.
pub fn minimal_in_interval(interval: &[Subgroup], bottom: &Subgroup) -> Vec<Subgroup> {
    let mut out = Vec::new();
    for (i, k) in interval.iter().enumerate() {
        if k == bottom {
            continue;
        }
        let covers = interval[..i]
            .iter()
            .any(|l| l != bottom && l.order() < k.order() && l.is_subgroup_of(k));
        if !covers {
            out.push(k.clone());
        }
    }
    out
}

/// `k` is a proper subgroup and `⟨k, x⟩ = g` for every `x ∉ k`.
pub fn is_maximal(g: &Group, k: &Subgroup) -> bool {
    if k.order() == g.order() {
        return false;
    }
    let mut marked = k.members().clone();
    for x in 0..g.order() {
        if marked.contains(x) {
            continue;
        }
        mark_double_coset(g, k, k, x, &mut marked);
        if k.extended(g, x).order() != g.order() {
            return false;
        }
    }
    true
}

/// The element set `A·B` equals the whole group.
pub fn product_is_whole(g: &Group, a: &Subgroup, b: &Subgroup) -> bool {
    let mut set = BitSet::new(g.order());
    for x in a.iter() {
        for y in b.iter() {
            set.insert(g.mul(x, y));
        }
    }
    set.count() == g.order()
}

/// Maximal subgroups of `g` containing `h`, in canonical order.
///
/// These are the maximal subgroups of `g` that contain `h`; they come from
/// a recursion through minimal normal subgroups and quotients, so the
/// interval below them is never enumerated.
pub fn maximal_overgroups(g: &Group, h: &Subgroup, caps: &Caps) -> Result<Vec<Subgroup>> {
    if h.order() == g.order() {
        return Err(Error::domain("maximal overgroups need a proper subgroup"));
    }
    let mut out: Vec<Subgroup> = super::maximal::maximal_subgroups_unsorted(g, caps)?
        .into_iter()
        .filter(|k| h.is_subgroup_of(k))
        .collect();
    out.sort();
    Ok(out)
}

pub fn maximal_subgroups(g: &Group, caps: &Caps) -> Result<Vec<Subgroup>> {
    maximal_overgroups(g, &g.trivial_subgroup(), caps)
}

/// Minimal subgroups strictly containing `h`, in canonical order.
///
/// Taken as the minimal members among the closures `⟨h, x⟩`, `x ∉ h`; every
/// minimal overgroup is such a closure.
pub fn minimal_overgroups(g: &Group, h: &Subgroup) -> Result<Vec<Subgroup>> {
    if h.order() == g.order() {
        return Err(Error::domain("minimal overgroups need a proper subgroup"));
    }
    let mut seen = HashSet::new();
    let mut candidates = Vec::new();
    let mut marked = h.members().clone();
    for x in 0..g.order() {
        if marked.contains(x) {
            continue;
        }
        mark_double_coset(g, h, h, x, &mut marked);
        let l = h.extended(g, x);
        if seen.insert(l.members().clone()) {
            candidates.push(l);
        }
    }
    candidates.sort();
    let minimal = candidates
        .iter()
        .filter(|k| !candidates.iter().any(|l| l.is_proper_subgroup_of(k)))
        .cloned()
        .collect();
    Ok(minimal)
}

/// Partition of `g` into double cosets `A x B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCosets {
    /// Each part sorted ascending; parts ordered by their smallest element.
    pub parts: Vec<Vec<usize>>,
}

impl DoubleCosets {
    pub fn count(&self) -> usize {
        self.parts.len()
    }
}

pub fn double_cosets(g: &Group, a: &Subgroup, b: &Subgroup) -> DoubleCosets {
    let mut marked = BitSet::new(g.order());
    let mut parts = Vec::new();
    for x in 0..g.order() {
        if marked.contains(x) {
            continue;
        }
        let mut part = mark_double_coset(g, a, b, x, &mut marked);
        part.sort_unstable();
        parts.push(part);
    }
    DoubleCosets { parts }
}

pub fn double_coset_count(g: &Group, a: &Subgroup, b: &Subgroup) -> usize {
    double_cosets(g, a, b).count()
}

/// Conjugacy classes, ordered by smallest element.
pub fn conjugacy_classes(g: &Group) -> Vec<Vec<usize>> {
    let mut marked = BitSet::new(g.order());
    let mut classes = Vec::new();
    for x in 0..g.order() {
        if marked.contains(x) {
            continue;
        }
        let mut class: Vec<usize> = Vec::new();
        for y in 0..g.order() {
            let c = g.conjugate(y, x);
            if marked.insert(c) {
                class.push(c);
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

/// Normal subgroups, as the closed unions of conjugacy classes reachable by
/// normal closure.
pub fn normal_subgroups(g: &Group, caps: &Caps) -> Result<Vec<Subgroup>> {
    let classes = conjugacy_classes(g);
    let normal_join = |k: &Subgroup, class: &[usize]| {
        let mut seed = k.generators().to_vec();
        seed.extend_from_slice(class);
        normal_closure(g, &seed)
    };
    let start = g.trivial_subgroup();
    let mut seen: HashSet<BitSet> = HashSet::from([start.members().clone()]);
    let mut list = vec![start];
    let mut next = 0;
    while next < list.len() {
        let k = list[next].clone();
        next += 1;
        for class in &classes {
            if k.contains(class[0]) {
                continue;
            }
            let l = normal_join(&k, class);
            if seen.insert(l.members().clone()) {
                list.push(l);
                if list.len() > caps.interval_size {
                    return Err(Error::capacity("normal subgroup count", list.len(), caps.interval_size));
                }
            }
        }
    }
    list.sort();
    Ok(list)
}

/// Smallest normal subgroup containing `seed`.
pub fn normal_closure(g: &Group, seed: &[usize]) -> Subgroup {
    let mut k = subgroup_closure(g, seed);
    loop {
        let before = k.order();
        let gens = k.generators().to_vec();
        for x in 0..g.order() {
            for &s in &gens {
                k = k.extended(g, g.conjugate(x, s));
            }
        }
        if k.order() == before {
            return k;
        }
    }
}

/// Minimal nontrivial normal subgroups.
pub fn minimal_normal_subgroups(g: &Group, caps: &Caps) -> Result<Vec<Subgroup>> {
    let normals = normal_subgroups(g, caps)?;
    Ok(minimal_in_interval(&normals, &g.trivial_subgroup()))
}
