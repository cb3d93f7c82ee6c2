//! Small cocycle systems used as examples and test fixtures.
//!
//! Abelian groups here are built from addition tables, so elements have
//! fixed coordinates: in `Z_2 × Z_2` the pair `(a, b)` is element `a + 2b`,
//! in `Z_k` the residue `r` is element `r`.

use crate::config::Caps;
use crate::group::{Group, GroupAction};

use super::system::CocycleSystem;

/// `Z_{k₁} × … × Z_{k_r}` with mixed-radix element ids.
pub fn abelian(moduli: &[usize]) -> Group {
    let order: usize = moduli.iter().product();
    let digits = |mut x: usize| {
        moduli
            .iter()
            .map(|&k| {
                let d = x % k;
                x /= k;
                d
            })
            .collect::<Vec<_>>()
    };
    let encode = |d: &[usize]| d.iter().zip(moduli).rev().fold(0, |acc, (&x, &k)| acc * k + x);
    let mut mult = Vec::with_capacity(order * order);
    for a in 0..order {
        let da = digits(a);
        for b in 0..order {
            let db = digits(b);
            let sum: Vec<usize> = da.iter().zip(&db).zip(moduli).map(|((x, y), k)| (x + y) % k).collect();
            mult.push(encode(&sum) as u32);
        }
    }
    Group::from_table(order, mult, &Caps::default()).expect("abelian table")
}

fn bits(x: usize) -> (i64, i64) {
    ((x & 1) as i64, ((x >> 1) & 1) as i64)
}

/// `L(Z_3) ⋊ Z_2` with `Z_2` acting by inversion and all phases trivial.
pub fn c3_c2_trivial() -> CocycleSystem {
    let n = abelian(&[3]);
    let h = abelian(&[2]);
    let act = GroupAction::from_generator_images(&n, &h, &[1], &[vec![0, 2, 1]]).unwrap();
    CocycleSystem::trivial(n, h, act, 1).unwrap()
}

/// `L(Z_2²) ⋊ Z_3` with `Z_3` permuting the three involutions; trivial phases.
pub fn a4_trivial() -> CocycleSystem {
    let n = abelian(&[2, 2]);
    let h = abelian(&[3]);
    // (a, b) ↦ (b, a + b)
    let img: Vec<u32> = (0..4)
        .map(|x| {
            let (a, b) = bits(x);
            (b + 2 * ((a + b) % 2)) as u32
        })
        .collect();
    let act = GroupAction::from_generator_images(&n, &h, &[1], &[img]).unwrap();
    CocycleSystem::trivial(n, h, act, 1).unwrap()
}

/// Group algebra of `h`: `N` trivial.
pub fn group_algebra(h: Group) -> CocycleSystem {
    let n = Group::trivial();
    let act = GroupAction::trivial(&n, &h);
    CocycleSystem::trivial(n, h, act, 1).unwrap()
}

/// Function algebra of `n`: `H` trivial.
pub fn function_algebra(n: Group) -> CocycleSystem {
    let h = Group::trivial();
    let act = GroupAction::trivial(&n, &h);
    CocycleSystem::trivial(n, h, act, 1).unwrap()
}

/// `N = Z_2²`, `H = Z_2` acting trivially, `η_s(n, m) = n₁m₂`, `ξ = 0`.
pub fn bilinear_eta() -> CocycleSystem {
    let n = abelian(&[2, 2]);
    let h = abelian(&[2]);
    let act = GroupAction::trivial(&n, &h);
    let mut sys = CocycleSystem::trivial(n, h, act, 2).unwrap();
    for a in 0..4 {
        for b in 0..4 {
            sys.set_eta(1, a, b, bits(a).0 * bits(b).1);
        }
    }
    sys
}

/// `N = Z_2`, `H = Z_2²` acting trivially, `η = 0`, `ξ_n(h, k) = n·h₁k₂`.
pub fn bilinear_xi() -> CocycleSystem {
    let n = abelian(&[2]);
    let h = abelian(&[2, 2]);
    let act = GroupAction::trivial(&n, &h);
    let mut sys = CocycleSystem::trivial(n, h, act, 2).unwrap();
    for a in 0..4 {
        for b in 0..4 {
            sys.set_xi(1, a, b, bits(a).0 * bits(b).1);
        }
    }
    sys
}

/// `N = Z_2²`, `H = Z_2` swapping the coordinates, `η_s(n, m) = n₁m₂`,
/// `ξ_n(s, s) = n₁n₂`.
pub fn swap_quadratic() -> CocycleSystem {
    let n = abelian(&[2, 2]);
    let h = abelian(&[2]);
    let act = GroupAction::from_generator_images(&n, &h, &[1], &[vec![0, 2, 1, 3]]).unwrap();
    let mut sys = CocycleSystem::trivial(n, h, act, 2).unwrap();
    for a in 0..4 {
        for b in 0..4 {
            sys.set_eta(1, a, b, bits(a).0 * bits(b).1);
        }
        sys.set_xi(a, 1, 1, bits(a).0 * bits(a).1);
    }
    sys
}

/// Every sample together with a short name.
pub fn all() -> Vec<(&'static str, CocycleSystem)> {
    use crate::group::named;
    vec![
        ("c3c2_trivial", c3_c2_trivial()),
        ("a4_trivial", a4_trivial()),
        ("s3_group_algebra", group_algebra(named::symmetric(3))),
        ("c4_function_algebra", function_algebra(named::cyclic(4))),
        ("bilinear_eta", bilinear_eta()),
        ("bilinear_xi", bilinear_xi()),
        ("swap_quadratic", swap_quadratic()),
    ]
}
