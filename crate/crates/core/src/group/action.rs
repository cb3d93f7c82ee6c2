use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::group::Group;

/// An action of `H` on `N` by automorphisms, stored as one permutation of
/// `N`'s ids per element of `H`.
///
/// `apply(h, n)` is the left action `h n h⁻¹` inside `N ⋊ H`, so
/// `apply(h1·h2, n) = apply(h1, apply(h2, n))`. The right conjugation
/// `n^h = h⁻¹ n h` is [`GroupAction::conj`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    maps: Vec<Vec<u32>>,
}

impl GroupAction {
    pub fn trivial(n: &Group, h: &Group) -> Self {
        let id: Vec<u32> = (0..n.order() as u32).collect();
        GroupAction {
            maps: vec![id; h.order()],
        }
    }

    /// Full table, one automorphism per element of `h`; validated.
    pub fn from_maps(n: &Group, h: &Group, maps: Vec<Vec<u32>>) -> Result<Self> {
        let act = GroupAction { maps };
        act.validate(n, h)?;
        Ok(act)
    }

    /// Extends automorphisms given on generators of `h` to all of `h`.
    ///
    /// `images[k]` is the automorphism (as a permutation of `n`'s ids)
    /// attached to the element `gens[k]` of `h`.
    pub fn from_generator_images(n: &Group, h: &Group, gens: &[usize], images: &[Vec<u32>]) -> Result<Self> {
        if gens.len() != images.len() {
            return Err(Error::validation("one automorphism is needed per generator"));
        }
        for img in images {
            if img.len() != n.order() || img.iter().any(|&x| x as usize >= n.order()) {
                return Err(Error::validation("automorphism table has the wrong size"));
            }
        }
        let mut maps: Vec<Option<Vec<u32>>> = vec![None; h.order()];
        maps[0] = Some((0..n.order() as u32).collect());
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let mx = maps[x].clone().unwrap();
            for (&g, img) in gens.iter().zip(images) {
                let y = h.mul(x, g);
                let my: Vec<u32> = img.iter().map(|&b| mx[b as usize]).collect();
                match &maps[y] {
                    Some(existing) if *existing != my => {
                        return Err(Error::validation(format!(
                            "generator images do not define a homomorphism (conflict at element {y} of H)"
                        )))
                    }
                    Some(_) => {}
                    None => {
                        maps[y] = Some(my);
                        queue.push_back(y);
                    }
                }
            }
        }
        if maps.iter().any(|m| m.is_none()) {
            return Err(Error::validation("the given generators do not generate H"));
        }
        Self::from_maps(n, h, maps.into_iter().map(Option::unwrap).collect())
    }

    /// Checks that every map is an automorphism and that `h ↦ map[h]` is a
    /// homomorphism.
    pub fn validate(&self, n: &Group, h: &Group) -> Result<()> {
        if self.maps.len() != h.order() {
            return Err(Error::validation(format!(
                "action has {} maps, acting group has order {}",
                self.maps.len(),
                h.order()
            )));
        }
        let no = n.order();
        for (x, m) in self.maps.iter().enumerate() {
            if m.len() != no {
                return Err(Error::validation(format!("map of element {x} has the wrong size")));
            }
            let mut seen = vec![false; no];
            for &v in m {
                if v as usize >= no || std::mem::replace(&mut seen[v as usize], true) {
                    return Err(Error::validation(format!("map of element {x} is not a bijection")));
                }
            }
            for a in 0..no {
                for b in 0..no {
                    if m[n.mul(a, b)] as usize != n.mul(m[a] as usize, m[b] as usize) {
                        return Err(Error::validation(format!(
                            "map of element {x} is not a homomorphism at ({a}, {b})"
                        )));
                    }
                }
            }
        }
        if self.maps[0].iter().enumerate().any(|(i, &v)| i != v as usize) {
            return Err(Error::validation("identity of H must act trivially"));
        }
        for x in 0..h.order() {
            for y in 0..h.order() {
                let xy = h.mul(x, y);
                if (0..no).any(|a| self.apply(xy, a) != self.apply(x, self.apply(y, a))) {
                    return Err(Error::validation(format!(
                        "action is not a homomorphism at ({x}, {y})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `h n h⁻¹`.
    #[inline]
    pub fn apply(&self, h: usize, n: usize) -> usize {
        self.maps[h][n] as usize
    }

    /// `n^h = h⁻¹ n h`.
    #[inline]
    pub fn conj(&self, h_group: &Group, n: usize, h: usize) -> usize {
        self.apply(h_group.inv(h), n)
    }

    pub fn maps(&self) -> &[Vec<u32>] {
        &self.maps
    }

    pub fn is_trivial(&self) -> bool {
        self.maps
            .iter()
            .all(|m| m.iter().enumerate().all(|(i, &v)| i == v as usize))
    }
}
