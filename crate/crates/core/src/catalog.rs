//! Fixture groups, cocycle systems and character tables shipped with the
//! crate, so every check can run offline.

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::fusion::CharacterTable;
use crate::io::{self, BuiltGroup, CocycleFile};
use crate::kac::CocycleSystem;

/// Group specifications by name.
pub const GROUPS: &[(&str, &str)] = &[
    ("a4", include_str!("../fixtures/groups/a4.grp")),
    ("a4xc2", include_str!("../fixtures/groups/a4xc2.grp")),
    ("a5", include_str!("../fixtures/groups/a5.grp")),
    ("c10", include_str!("../fixtures/groups/c10.grp")),
    ("c12", include_str!("../fixtures/groups/c12.grp")),
    ("c2", include_str!("../fixtures/groups/c2.grp")),
    ("c2x2", include_str!("../fixtures/groups/c2x2.grp")),
    ("c2x2x2", include_str!("../fixtures/groups/c2x2x2.grp")),
    ("c2x2x2_c7", include_str!("../fixtures/groups/c2x2x2_c7.grp")),
    ("c2x2x2x2", include_str!("../fixtures/groups/c2x2x2x2.grp")),
    ("c2x4", include_str!("../fixtures/groups/c2x4.grp")),
    ("c3", include_str!("../fixtures/groups/c3.grp")),
    ("c3x3", include_str!("../fixtures/groups/c3x3.grp")),
    ("c3x3_c2", include_str!("../fixtures/groups/c3x3_c2.grp")),
    ("c3xs3", include_str!("../fixtures/groups/c3xs3.grp")),
    ("c4", include_str!("../fixtures/groups/c4.grp")),
    ("c4x4", include_str!("../fixtures/groups/c4x4.grp")),
    ("c5", include_str!("../fixtures/groups/c5.grp")),
    ("c5x5", include_str!("../fixtures/groups/c5x5.grp")),
    ("c6", include_str!("../fixtures/groups/c6.grp")),
    ("c7", include_str!("../fixtures/groups/c7.grp")),
    ("c8", include_str!("../fixtures/groups/c8.grp")),
    ("c9", include_str!("../fixtures/groups/c9.grp")),
    ("d10", include_str!("../fixtures/groups/d10.grp")),
    ("d12", include_str!("../fixtures/groups/d12.grp")),
    ("d16", include_str!("../fixtures/groups/d16.grp")),
    ("d20", include_str!("../fixtures/groups/d20.grp")),
    ("d200", include_str!("../fixtures/groups/d200.grp")),
    ("d50", include_str!("../fixtures/groups/d50.grp")),
    ("d8", include_str!("../fixtures/groups/d8.grp")),
    ("dic12", include_str!("../fixtures/groups/dic12.grp")),
    ("f20", include_str!("../fixtures/groups/f20.grp")),
    ("f21", include_str!("../fixtures/groups/f21.grp")),
    ("psl27", include_str!("../fixtures/groups/psl27.grp")),
    ("q8", include_str!("../fixtures/groups/q8.grp")),
    ("s3", include_str!("../fixtures/groups/s3.grp")),
    ("s3xs3", include_str!("../fixtures/groups/s3xs3.grp")),
    ("s4", include_str!("../fixtures/groups/s4.grp")),
    ("s4xc2", include_str!("../fixtures/groups/s4xc2.grp")),
    ("s5", include_str!("../fixtures/groups/s5.grp")),
];

/// Cocycle files by name.
pub const COCYCLES: &[(&str, &str)] = &[
    ("a4_trivial", include_str!("../fixtures/kac/a4_trivial.kac")),
    ("bilinear_eta", include_str!("../fixtures/kac/bilinear_eta.kac")),
    ("bilinear_xi", include_str!("../fixtures/kac/bilinear_xi.kac")),
    ("c3c2_trivial", include_str!("../fixtures/kac/c3c2_trivial.kac")),
    ("c4_function_algebra", include_str!("../fixtures/kac/c4_function_algebra.kac")),
    ("s3_group_algebra", include_str!("../fixtures/kac/s3_group_algebra.kac")),
    ("swap_quadratic", include_str!("../fixtures/kac/swap_quadratic.kac")),
];

/// Character tables by name (the name of the catalog group they belong to).
pub const CHARACTER_TABLES: &[(&str, &str)] = &[
    ("a4", include_str!("../fixtures/chartables/a4.json")),
    ("a5", include_str!("../fixtures/chartables/a5.json")),
    ("c2", include_str!("../fixtures/chartables/c2.json")),
    ("c2x2", include_str!("../fixtures/chartables/c2x2.json")),
    ("c3", include_str!("../fixtures/chartables/c3.json")),
    ("c4", include_str!("../fixtures/chartables/c4.json")),
    ("c6", include_str!("../fixtures/chartables/c6.json")),
    ("d10", include_str!("../fixtures/chartables/d10.json")),
    ("d8", include_str!("../fixtures/chartables/d8.json")),
    ("q8", include_str!("../fixtures/chartables/q8.json")),
    ("s3", include_str!("../fixtures/chartables/s3.json")),
    ("s4", include_str!("../fixtures/chartables/s4.json")),
];

fn lookup<'a>(list: &'a [(&str, &str)], name: &str) -> Result<&'a str> {
    list.iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
        .ok_or_else(|| Error::domain(format!("no catalog entry named {name}")))
}

pub fn group(name: &str, caps: &Caps) -> Result<BuiltGroup> {
    io::parse_group_spec(lookup(GROUPS, name)?)?.build(caps)
}

/// Every catalog group, ordered by order and then name.
pub fn groups(caps: &Caps) -> Result<Vec<BuiltGroup>> {
    let mut out = GROUPS
        .iter()
        .map(|(name, _)| group(name, caps))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| (a.group.order(), &a.name).cmp(&(b.group.order(), &b.name)));
    Ok(out)
}

pub fn cocycle_file(name: &str) -> Result<CocycleFile> {
    Ok(CocycleFile::parse(lookup(COCYCLES, name)?)?)
}

pub fn cocycle_system(name: &str, caps: &Caps) -> Result<CocycleSystem> {
    cocycle_file(name)?.to_system(caps)
}

pub fn character_table(name: &str) -> Result<CharacterTable> {
    io::parse_character_table(lookup(CHARACTER_TABLES, name)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::lattice::{maximal_subgroups, minimal_normal_subgroups};
    use crate::kac::samples;

    #[test]
    fn groups_have_expected_orders() {
        let caps = Caps::default();
        let expected = [
            ("c2", 2), ("c12", 12), ("c2x2x2x2", 16), ("c5x5", 25), ("s3", 6), ("d8", 8), ("d200", 200),
            ("q8", 8), ("a4", 12), ("s4", 24), ("a5", 60), ("s5", 120), ("dic12", 12), ("f20", 20),
            ("f21", 21), ("c3x3_c2", 18), ("c2x2x2_c7", 56), ("s3xs3", 36), ("s4xc2", 48), ("psl27", 168),
        ];
        for (name, order) in expected {
            assert_eq!(group(name, &caps).unwrap().group.order(), order, "{name}");
        }
        let all = groups(&caps).unwrap();
        assert!(all.len() >= 25);
        assert!(all.iter().all(|g| g.group.order() <= 200));
        // Q8 has a unique involution, D8 has five
        let involutions = |name| {
            let g = group(name, &caps).unwrap().group;
            (1..g.order()).filter(|&x| g.mul(x, x) == 0).count()
        };
        assert_eq!((involutions("q8"), involutions("d8")), (1, 5));
        assert!(!group("dic12", &caps).unwrap().group.is_abelian());
        assert!(!group("psl27", &caps).unwrap().group.is_solvable());
        let s3xs3 = group("s3xs3", &caps).unwrap();
        assert_eq!(s3xs3.subgroup("diag").unwrap().order(), 6);
        assert_eq!(maximal_subgroups(&group("s4", &caps).unwrap().group, &caps).unwrap().len(), 8);
    }

    #[test]
    fn cocycle_fixtures_match_samples() {
        let caps = Caps::default();
        for (name, sample) in samples::all() {
            let sys = cocycle_system(name, &caps).unwrap();
            assert_eq!(sys.n_group().table(), sample.n_group().table(), "{name}");
            assert_eq!(sys.h_group().table(), sample.h_group().table(), "{name}");
            assert_eq!(sys.action(), sample.action(), "{name}");
            assert_eq!(sys.modulus(), sample.modulus(), "{name}");
            assert_eq!(sys.eta_entries(), sample.eta_entries(), "{name}");
            assert_eq!(sys.xi_entries(), sample.xi_entries(), "{name}");
        }
        assert_eq!(COCYCLES.len(), samples::all().len());
    }

    #[test]
    fn character_tables_count_minimal_normal_subgroups() {
        let caps = Caps::default();
        for (name, _) in CHARACTER_TABLES {
            let table = character_table(name).unwrap();
            let g = group(table.group.as_deref().unwrap(), &caps).unwrap().group;
            assert_eq!(table.group_order(), g.order() as u64, "{name}");
            let ring = table.fusion_ring().unwrap();
            let report = crate::fusion::maximal_fusion_subalgebras(&ring, &caps).unwrap();
            assert_eq!(report.count, minimal_normal_subgroups(&g, &caps).unwrap().len(), "{name}");
            assert!(report.holds);
        }
    }
}
