//! Small standard groups built from permutation generators.

use crate::config::Caps;
use crate::group::Group;
use crate::perm::Permutation;

fn cyc(degree: usize, points: &[usize]) -> Permutation {
    Permutation::from_cycles(degree, &[points.to_vec()]).expect("valid cycle")
}

fn build(degree: usize, gens: &[Permutation]) -> Group {
    Group::from_generators(degree, gens, &Caps::default()).expect("small standard group")
}

pub fn cyclic(n: usize) -> Group {
    if n == 1 {
        return Group::trivial();
    }
    build(n, &[cyc(n, &(1..=n).collect::<Vec<_>>())])
}

/// Dihedral group of order `2n`.
pub fn dihedral(n: usize) -> Group {
    match n {
        1 => cyclic(2),
        2 => elementary_abelian(2, 2),
        _ => {
            let rot = cyc(n, &(1..=n).collect::<Vec<_>>());
            let refl: Vec<Vec<usize>> = (1..=n / 2).map(|i| vec![i, n + 1 - i]).collect();
            build(n, &[rot, Permutation::from_cycles(n, &refl).unwrap()])
        }
    }
}

pub fn symmetric(n: usize) -> Group {
    match n {
        0 | 1 => Group::trivial(),
        2 => cyclic(2),
        _ => build(n, &[cyc(n, &[1, 2]), cyc(n, &(1..=n).collect::<Vec<_>>())]),
    }
}

pub fn alternating(n: usize) -> Group {
    if n < 3 {
        return Group::trivial();
    }
    let gens: Vec<Permutation> = (3..=n).map(|i| cyc(n, &[1, 2, i])).collect();
    build(n, &gens)
}

/// `(C_p)^k` acting on `p·k` points.
pub fn elementary_abelian(p: usize, k: usize) -> Group {
    let degree = p * k;
    let gens: Vec<Permutation> = (0..k)
        .map(|b| cyc(degree, &((b * p + 1)..=(b * p + p)).collect::<Vec<_>>()))
        .collect();
    if gens.is_empty() {
        return Group::trivial();
    }
    build(degree, &gens)
}
