use serde::{Deserialize, Serialize};

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::lattice::maximal_subgroups;
use crate::group::Group;

/// Maximal subgroups of `X×Y` containing neither factor, against
/// `(|X|−1)(|Y|−1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorReport {
    pub x_order: usize,
    pub y_order: usize,
    pub count: usize,
    pub bound: usize,
    pub within_bound: bool,
    pub equality: bool,
    pub both_elementary_abelian_2: bool,
    /// Maximal subgroups of `X×Y` in total.
    pub product_maximal_count: usize,
}

pub fn check_tensor_lemma(x: &Group, y: &Group, caps: &Caps) -> Result<TensorReport> {
    if x.order() < 2 || y.order() < 2 {
        return Err(Error::domain("both factors must be nontrivial"));
    }
    let g = Group::direct_product(x, y, caps)?;
    let (fx, fy) = Group::product_factors(x, y, &g);
    let maximal = maximal_subgroups(&g, caps)?;
    let count = maximal
        .iter()
        .filter(|k| !fx.is_subgroup_of(k) && !fy.is_subgroup_of(k))
        .count();
    let bound = (x.order() - 1) * (y.order() - 1);
    Ok(TensorReport {
        x_order: x.order(),
        y_order: y.order(),
        count,
        bound,
        within_bound: count <= bound,
        equality: count == bound,
        both_elementary_abelian_2: x.is_elementary_abelian_2() && y.is_elementary_abelian_2(),
        product_maximal_count: maximal.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named;

    #[test]
    fn examples() {
        let caps = Caps::default();
        let c2 = named::cyclic(2);
        let r = check_tensor_lemma(&c2, &c2, &caps).unwrap();
        assert_eq!((r.count, r.bound, r.equality), (1, 1, true));
        let v4 = named::elementary_abelian(2, 2);
        let r = check_tensor_lemma(&v4, &v4, &caps).unwrap();
        assert_eq!((r.count, r.bound, r.equality), (9, 9, true));
        let s3 = named::symmetric(3);
        let r = check_tensor_lemma(&s3, &s3, &caps).unwrap();
        assert_eq!((r.count, r.bound, r.equality), (1, 25, false));
        assert!(!r.both_elementary_abelian_2);
    }

    #[test]
    fn equality_exactly_for_elementary_abelian_2() {
        let caps = Caps::default();
        let groups = [
            named::cyclic(2),
            named::cyclic(3),
            named::cyclic(4),
            named::elementary_abelian(2, 2),
            named::symmetric(3),
            named::elementary_abelian(2, 3),
        ];
        for x in &groups {
            for y in &groups {
                let r = check_tensor_lemma(x, y, &caps).unwrap();
                assert!(r.within_bound);
                assert_eq!(r.equality, r.both_elementary_abelian_2, "{} x {}", x.order(), y.order());
            }
        }
    }
}
