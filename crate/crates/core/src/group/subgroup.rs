use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::Group;

/// A subgroup of some [`Group`], stored as a bitset over the parent's ids
/// together with a (small, greedily chosen) generating set.
///
/// Equality, hashing and ordering look only at the member set. The canonical
/// order is by subgroup order, then lexicographically by member list.
#[derive(Clone)]
pub struct Subgroup {
    members: BitSet,
    gens: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.members.lex_cmp(&other.members))
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order {}, {:?})", self.order(), self.members)
    }
}

impl Subgroup {
    pub fn trivial(g: &Group) -> Subgroup {
        Subgroup {
            members: BitSet::from_iter(g.order(), [0]),
            gens: Vec::new(),
        }
    }

    pub fn whole(g: &Group) -> Subgroup {
        // the closure picks a generating set for us
        let all: Vec<usize> = (0..g.order()).collect();
        subgroup_closure(g, &all)
    }

    /// Validates closure, inverses, and Lagrange before accepting a member set.
    pub fn from_members(g: &Group, members: impl IntoIterator<Item = usize>) -> Result<Subgroup> {
        let set = BitSet::from_iter(g.order(), members);
        if !set.contains(0) {
            return Err(Error::validation("subgroup must contain the identity"));
        }
        let list = set.to_vec();
        for &a in &list {
            if !set.contains(g.inv(a)) {
                return Err(Error::validation(format!("not closed under inverse at {a}")));
            }
            for &b in &list {
                if !set.contains(g.mul(a, b)) {
                    return Err(Error::validation(format!("not closed at ({a}, {b})")));
                }
            }
        }
        let s = subgroup_closure(g, &list);
        assert_eq!(g.order() % s.order(), 0, "Lagrange");
        Ok(s)
    }

    /// Caller guarantees `members` is a subgroup.
    pub(crate) fn from_members_unchecked(g: &Group, members: impl IntoIterator<Item = usize>) -> Subgroup {
        let list: Vec<usize> = members.into_iter().collect();
        subgroup_closure(g, &list)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.members.count()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_proper_subgroup_of(&self, other: &Subgroup) -> bool {
        self.is_subgroup_of(other) && self.order() < other.order()
    }

    pub fn index_in(&self, g: &Group) -> usize {
        g.order() / self.order()
    }

    pub fn intersection(&self, g: &Group, other: &Subgroup) -> Subgroup {
        let members = self.members.intersection(&other.members);
        subgroup_closure(g, &members.to_vec())
    }

    /// `⟨self, other⟩`.
    pub fn join(&self, g: &Group, other: &Subgroup) -> Subgroup {
        let mut s = self.clone();
        for &x in &other.gens {
            s = s.extended(g, x);
        }
        s
    }

    /// `⟨self, x⟩`, reusing the current members as the starting point.
    pub fn extended(&self, g: &Group, x: usize) -> Subgroup {
        if self.contains(x) {
            return self.clone();
        }
        let mut members = self.members.clone();
        let mut list = members.to_vec();
        let mut gens = self.gens.clone();
        gens.push(x);
        close(g, &mut members, &mut list, &gens);
        Subgroup { members, gens }
    }

    /// `x K x⁻¹`.
    pub fn conjugate(&self, g: &Group, x: usize) -> Subgroup {
        let members = BitSet::from_iter(g.order(), self.iter().map(|k| g.conjugate(x, k)));
        Subgroup {
            members,
            gens: self.gens.iter().map(|&k| g.conjugate(x, k)).collect(),
        }
    }

    pub fn is_normal_in(&self, g: &Group) -> bool {
        // conjugating the generators by generators of G is enough
        let whole_gens = subgroup_closure(g, &(0..g.order()).collect::<Vec<_>>()).gens;
        whole_gens
            .iter()
            .all(|&x| self.gens.iter().all(|&k| self.contains(g.conjugate(x, k))))
    }

    /// `{x : x K x⁻¹ = K}`.
    pub fn normalizer(&self, g: &Group) -> Subgroup {
        let normalizing: Vec<usize> = (0..g.order())
            .filter(|&x| self.gens.iter().all(|&k| self.contains(g.conjugate(x, k))))
            .collect();
        subgroup_closure(g, &normalizing)
    }

    /// Largest normal subgroup of `g` inside `self`: the intersection of all
    /// conjugates.
    pub fn core(&self, g: &Group) -> Subgroup {
        let mut members = self.members.clone();
        for x in 0..g.order() {
            if members.count() == 1 {
                break;
            }
            let conj = BitSet::from_iter(g.order(), self.iter().map(|k| g.conjugate(x, k)));
            members = members.intersection(&conj);
        }
        subgroup_closure(g, &members.to_vec())
    }
}

/// Closes `list` (mirrored in `members`) under right multiplication by `gens`.
fn close(g: &Group, members: &mut BitSet, list: &mut Vec<usize>, gens: &[usize]) {
    let mut i = 0;
    while i < list.len() {
        let e = list[i];
        for &s in gens {
            let y = g.mul(e, s);
            if members.insert(y) {
                list.push(y);
            }
        }
        i += 1;
    }
}

/// Smallest subgroup of `g` containing `seed`.
///
/// Seed elements already in the running closure are skipped, so the stored
/// generating set is an irredundant prefix-greedy subset of `seed`.
pub fn subgroup_closure(g: &Group, seed: &[usize]) -> Subgroup {
    let mut members = BitSet::from_iter(g.order(), [0]);
    let mut list = vec![0];
    let mut gens = Vec::new();
    for &x in seed {
        if members.contains(x) {
            continue;
        }
        gens.push(x);
        close(g, &mut members, &mut list, &gens);
    }
    Subgroup { members, gens }
}

/// Free-function form of [`Subgroup::core`].
pub fn core_of(g: &Group, k: &Subgroup) -> Subgroup {
    k.core(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named;

    #[test]
    fn closures_in_s3() {
        let s3 = named::symmetric(3);
        let t12 = s3.find_label("(1 2)").unwrap();
        let t13 = s3.find_label("(1 3)").unwrap();
        assert_eq!(subgroup_closure(&s3, &[t12]).order(), 2);
        assert_eq!(subgroup_closure(&s3, &[t12, t13]).order(), 6);
        assert_eq!(subgroup_closure(&s3, &[]).order(), 1);
    }

    #[test]
    fn cores_in_s3() {
        let s3 = named::symmetric(3);
        let t12 = s3.find_label("(1 2)").unwrap();
        let c3 = s3.find_label("(1 2 3)").unwrap();
        let k = subgroup_closure(&s3, &[t12]);
        assert_eq!(core_of(&s3, &k).order(), 1);
        assert_eq!(core_of(&s3, &s3.whole()), s3.whole());
        let a3 = subgroup_closure(&s3, &[c3]);
        assert_eq!(core_of(&s3, &a3), a3);
        assert!(a3.is_normal_in(&s3));
        assert!(!k.is_normal_in(&s3));
        assert_eq!(k.normalizer(&s3), k);
    }

    #[test]
    fn from_members_validates() {
        let s3 = named::symmetric(3);
        let t12 = s3.find_label("(1 2)").unwrap();
        let t13 = s3.find_label("(1 3)").unwrap();
        assert!(Subgroup::from_members(&s3, [0, t12]).is_ok());
        assert!(Subgroup::from_members(&s3, [0, t12, t13]).is_err());
        assert!(Subgroup::from_members(&s3, [t12]).is_err());
    }

    #[test]
    fn join_and_intersection() {
        let s4 = named::symmetric(4);
        let a = subgroup_closure(&s4, &[s4.find_label("(1 2)").unwrap()]);
        let b = subgroup_closure(&s4, &[s4.find_label("(3 4)").unwrap()]);
        let j = a.join(&s4, &b);
        assert_eq!(j.order(), 4);
        assert_eq!(a.intersection(&s4, &b).order(), 1);
        assert!(a.is_proper_subgroup_of(&j));
    }
}
