//! Finite groups materialized as Cayley tables.
//!
//! Every group keeps the identity at id 0. Subgroups are dense bitsets over
//! element ids (see [`Subgroup`]); the lattice routines in [`lattice`] work
//! purely on those bitsets.

mod action;
pub mod lattice;
mod maximal;
pub mod named;
mod subgroup;

use std::collections::{HashMap, VecDeque};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub use action::GroupAction;
pub use subgroup::{core_of, subgroup_closure, Subgroup};

/// A finite group given by its multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    order: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Group").field("order", &self.order).finish()
    }
}

impl Group {
    pub fn trivial() -> Group {
        Group {
            order: 1,
            mult: vec![0],
            inv: vec![0],
            labels: Some(vec!["()".to_string()]),
        }
    }

    /// Builds a group from a full row-major multiplication table.
    ///
    /// The table must be a Latin square with element 0 as identity.
    /// Associativity is checked on every triple when the order is at most
    /// `caps.assoc_exhaustive`, otherwise on `caps.assoc_samples` seeded random
    /// triples.
    pub fn from_table(order: usize, mult: Vec<u32>, caps: &Caps) -> Result<Group> {
        if order == 0 {
            return Err(Error::validation("group order must be positive"));
        }
        if order > caps.order {
            return Err(Error::capacity("group order", order, caps.order));
        }
        if mult.len() != order * order {
            return Err(Error::validation(format!(
                "table has {} entries, expected {}",
                mult.len(),
                order * order
            )));
        }
        let mut seen = vec![0u32; order];
        let mut stamp = 0u32;
        for a in 0..order {
            stamp += 1;
            for b in 0..order {
                let c = mult[a * order + b] as usize;
                if c >= order || seen[c] == stamp {
                    return Err(Error::validation(format!("row {a} is not a permutation")));
                }
                seen[c] = stamp;
            }
        }
        for b in 0..order {
            stamp += 1;
            for a in 0..order {
                let c = mult[a * order + b] as usize;
                if seen[c] == stamp {
                    return Err(Error::validation(format!(
                        "column {b} is not a permutation"
                    )));
                }
                seen[c] = stamp;
            }
        }
        for g in 0..order {
            if mult[g] as usize != g || mult[g * order] as usize != g {
                return Err(Error::validation("element 0 is not the identity"));
            }
        }
        let mut inv = vec![0u32; order];
        for (g, slot) in inv.iter_mut().enumerate() {
            let row = &mult[g * order..(g + 1) * order];
            *slot = row.iter().position(|&c| c == 0).expect("latin row") as u32;
        }
        let group = Group {
            order,
            mult,
            inv,
            labels: None,
        };
        group.check_associative(caps)?;
        Ok(group)
    }

    fn check_associative(&self, caps: &Caps) -> Result<()> {
        let n = self.order;
        let bad = |a: usize, b: usize, c: usize| {
            Error::validation(format!("associativity fails on ({a}, {b}, {c})"))
        };
        if n <= caps.assoc_exhaustive {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(bad(a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(caps.seed);
            for _ in 0..caps.assoc_samples {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(bad(a, b, c));
                }
            }
        }
        Ok(())
    }

    /// Closure of `gens` under composition.
    ///
    /// Elements are numbered breadth-first: id 0 is the identity, and each
    /// dequeued element is multiplied on the right by the generators in input
    /// order. Labels are the cycle notation of each element.
    pub fn from_generators(degree: usize, gens: &[Permutation], caps: &Caps) -> Result<Group> {
        Ok(Self::from_generators_with_perms(degree, gens, caps)?.0)
    }

    /// As [`Group::from_generators`], also returning the permutation of each id.
    pub fn from_generators_with_perms(
        degree: usize,
        gens: &[Permutation],
        caps: &Caps,
    ) -> Result<(Group, Vec<Permutation>)> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::validation(format!(
                "generator {g} has degree {}, expected {degree}",
                g.degree()
            )));
        }
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index: HashMap<Permutation, u32> = HashMap::from([(id, 0)]);
        // parent[x] = (p, k) with x = p * gens[k]
        let mut parent: Vec<(u32, u32)> = vec![(0, 0)];
        let mut right: Vec<u32> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (k, g) in gens.iter().enumerate() {
                let y = elements[x].then(g);
                let next = index.len() as u32;
                let yid = *index.entry(y.clone()).or_insert_with(|| {
                    elements.push(y);
                    parent.push((x as u32, k as u32));
                    queue.push_back(next as usize);
                    next
                });
                right.push(yid);
                if elements.len() > caps.order {
                    return Err(Error::capacity("group order", elements.len(), caps.order));
                }
            }
        }
        let order = elements.len();
        let k = gens.len();
        let mut mult = vec![0u32; order * order];
        for a in 0..order {
            mult[a * order] = a as u32;
            for b in 1..order {
                let (p, gi) = parent[b];
                let ap = mult[a * order + p as usize] as usize;
                mult[a * order + b] = right[ap * k + gi as usize];
            }
        }
        let mut inv = vec![0u32; order];
        for (g, slot) in inv.iter_mut().enumerate() {
            let row = &mult[g * order..(g + 1) * order];
            *slot = row.iter().position(|&c| c == 0).expect("group row") as u32;
        }
        let labels = elements.iter().map(|p| p.to_string()).collect();
        Ok((
            Group {
                order,
                mult,
                inv,
                labels: Some(labels),
            },
            elements,
        ))
    }

    /// `N ⋊ H` on pairs `(a, x)` with `(a, x)(b, y) = (a·act[x](b), xy)`.
    ///
    /// Pair `(a, x)` gets id `a·|H| + x`, so ids follow lexicographic order.
    pub fn semidirect_product(n: &Group, h: &Group, act: &GroupAction, caps: &Caps) -> Result<Group> {
        act.validate(n, h)?;
        let (no, ho) = (n.order(), h.order());
        let order = no * ho;
        if order > caps.order {
            return Err(Error::capacity("group order", order, caps.order));
        }
        let mut mult = vec![0u32; order * order];
        for a in 0..no {
            for x in 0..ho {
                let row = (a * ho + x) * order;
                for b in 0..no {
                    let ab = n.mul(a, act.apply(x, b));
                    for y in 0..ho {
                        mult[row + b * ho + y] = (ab * ho + h.mul(x, y)) as u32;
                    }
                }
            }
        }
        let mut g = Group::from_table(order, mult, caps)?;
        if let (Some(nl), Some(hl)) = (&n.labels, &h.labels) {
            let mut labels = Vec::with_capacity(order);
            for a in nl {
                for x in hl {
                    labels.push(format!("[{a} ; {x}]"));
                }
            }
            g.labels = Some(labels);
        }
        Ok(g)
    }

    pub fn direct_product(n: &Group, h: &Group, caps: &Caps) -> Result<Group> {
        Self::semidirect_product(n, h, &GroupAction::trivial(n, h), caps)
    }

    /// Embeddings of the two factors of a product built by
    /// [`Group::semidirect_product`], as subgroups of the product.
    pub fn product_factors(n: &Group, h: &Group, product: &Group) -> (Subgroup, Subgroup) {
        let ho = h.order();
        let left = Subgroup::from_members_unchecked(product, (0..n.order()).map(|a| a * ho));
        let right = Subgroup::from_members_unchecked(product, 0..ho);
        (left, right)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g x g⁻¹`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |acc, g| num_integer::lcm(acc, self.element_order(g)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Every nonidentity element has order 2.
    pub fn is_elementary_abelian_2(&self) -> bool {
        self.order > 1 && (1..self.order).all(|g| self.mul(g, g) == 0)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) => l[g].clone(),
            None => format!("#{g}"),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Group> {
        if labels.len() != self.order {
            return Err(Error::validation("label count differs from group order"));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[u32] {
        &self.mult
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::whole(self)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::trivial(self)
    }

    /// True iff the derived series reaches the trivial subgroup.
    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().map(|s| s.order() == 1).unwrap_or(true)
    }

    /// `G = D0 ⊇ D1 ⊇ ...`, stopping when a term repeats or becomes trivial.
    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let cur = series.last().unwrap();
            if cur.order() == 1 {
                break;
            }
            let next = self.commutator_subgroup(cur);
            if next.order() == cur.order() {
                break;
            }
            series.push(next);
        }
        series
    }

    /// `[K, K]` for a subgroup `K`.
    pub fn commutator_subgroup(&self, k: &Subgroup) -> Subgroup {
        let members = k.to_vec();
        let mut seed = Vec::new();
        let mut seen = crate::bitset::BitSet::new(self.order);
        for &a in &members {
            for &b in &members {
                let c = self.commutator(a, b);
                if seen.insert(c) {
                    seed.push(c);
                }
            }
        }
        subgroup_closure(self, &seed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named;

    fn perm(degree: usize, cycles: &[&[usize]]) -> Permutation {
        let c: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(degree, &c).unwrap()
    }

    #[test]
    fn closure_orders() {
        let caps = Caps::default();
        let s3 = Group::from_generators(3, &[perm(3, &[&[1, 2]]), perm(3, &[&[1, 2, 3]])], &caps)
            .unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(Group::from_generators(1, &[], &caps).unwrap().order(), 1);
        let c4 = Group::from_generators(4, &[perm(4, &[&[1, 2, 3, 4]])], &caps).unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!(s3.label(0), "()");
    }

    #[test]
    fn closure_table_is_a_group() {
        let caps = Caps::default();
        let s4 = named::symmetric(4);
        // re-validating the generated table exercises the Latin and associativity checks
        let again = Group::from_table(24, s4.table().to_vec(), &caps).unwrap();
        assert_eq!(again.order(), 24);
        for g in 0..24 {
            assert_eq!(s4.mul(g, s4.inv(g)), 0);
        }
    }

    #[test]
    fn closure_respects_order_cap() {
        let caps = Caps {
            order: 100,
            ..Caps::default()
        };
        let err = Group::from_generators(5, &[perm(5, &[&[1, 2]]), perm(5, &[&[1, 2, 3, 4, 5]])], &caps)
            .unwrap_err();
        assert!(matches!(err, Error::Capacity { .. }));
    }

    #[test]
    fn from_table_rejects_non_latin_and_non_associative() {
        let caps = Caps::default();
        assert!(Group::from_table(2, vec![0, 1, 1, 1], &caps).is_err());
        // Latin square with identity 0 that is not associative (order 5 loop)
        let loop5: Vec<u32> = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        let err = Group::from_table(5, loop5, &caps).unwrap_err();
        assert!(err.to_string().contains("associativity"), "{err}");
    }

    #[test]
    fn semidirect_c3_by_c2_inversion_has_three_involutions() {
        let caps = Caps::default();
        let c3 = named::cyclic(3);
        let c2 = named::cyclic(2);
        let inv: Vec<u32> = (0..3).map(|a| c3.inv(a) as u32).collect();
        let act = GroupAction::from_generator_images(&c3, &c2, &[1], &[inv]).unwrap();
        let g = Group::semidirect_product(&c3, &c2, &act, &caps).unwrap();
        assert_eq!(g.order(), 6);
        let census = |g: &Group| {
            let mut c = vec![0; g.order() + 1];
            for x in 0..g.order() {
                c[g.element_order(x)] += 1;
            }
            c
        };
        assert_eq!(census(&g), census(&named::symmetric(3)));
        assert_eq!(census(&g)[2], 3);
        assert!(!g.is_abelian());
    }

    #[test]
    fn trivial_action_gives_direct_product() {
        let caps = Caps::default();
        let c3 = named::cyclic(3);
        let c4 = named::cyclic(4);
        let g = Group::direct_product(&c3, &c4, &caps).unwrap();
        assert_eq!(g.order(), 12);
        assert!(g.is_abelian());
        let c2 = named::cyclic(2);
        let t = Group::trivial();
        let g = Group::direct_product(&c2, &t, &caps).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.table(), c2.table());
    }

    #[test]
    fn solvability() {
        assert!(named::symmetric(4).is_solvable());
        assert!(!named::alternating(5).is_solvable());
        assert!(named::cyclic(12).is_solvable());
        assert!(Group::trivial().is_solvable());
        let orders: Vec<usize> = named::symmetric(4)
            .derived_series()
            .iter()
            .map(|s| s.order())
            .collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
    }

    #[test]
    fn exponents() {
        assert_eq!(named::symmetric(3).exponent(), 6);
        assert_eq!(named::elementary_abelian(2, 3).exponent(), 2);
        assert!(named::elementary_abelian(2, 3).is_elementary_abelian_2());
        assert!(!named::cyclic(4).is_elementary_abelian_2());
    }
}
