//! Acceptance suite: runs criteria 1 to 10 and prints one PASS/FAIL line per
//! criterion. Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use walllat::catalog;
use walllat::fusion::{maximal_fusion_subalgebras, FusionRing};
use walllat::group::lattice::{all_subgroups, maximal_subgroups, normal_subgroups, product_is_whole};
use walllat::group::{Group, Subgroup};
use walllat::io::BuiltGroup;
use walllat::kac::{
    check_all_operator_relations, check_kac_wall, check_relative_kac_wall, cocycle_set, enumerate_coideals,
    jb_lower_bound_check, lambdas_for_pair, normalizes, second_commutant_dim, validate_triple_closure,
    CocycleSystem, CoidealSide, CoidealTriple, KacAlgebra,
};
use walllat::wall::{check_mod2, check_relative_wall, check_tensor_lemma, check_wall, projector_identity_check};
use walllat::Caps;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalog_groups(caps: &Caps) -> Vec<BuiltGroup> {
    catalog::groups(caps).expect("catalog builds")
}

/// Cocycle fixtures plus trivial-phase systems on the catalog's semidirect
/// products.
fn cocycle_instances(caps: &Caps) -> Vec<(String, CocycleSystem)> {
    let mut out: Vec<(String, CocycleSystem)> = catalog::COCYCLES
        .iter()
        .map(|(name, _)| (name.to_string(), catalog::cocycle_system(name, caps).unwrap()))
        .collect();
    for (name, text) in catalog::GROUPS {
        let spec = walllat::io::parse_group_spec(text).unwrap();
        if let Some((n, h, act)) = spec.semidirect_parts(caps).unwrap() {
            out.push((format!("{name} (trivial phases)"), CocycleSystem::trivial(n, h, act, 1).unwrap()));
        }
    }
    out
}

fn criterion_1(caps: &Caps) -> Outcome {
    let groups = catalog_groups(caps);
    ensure(groups.len() >= 25, || format!("only {} catalog groups", groups.len()))?;
    for g in &groups {
        let r = check_wall(&g.group, caps).map_err(|e| format!("{}: {e}", g.name))?;
        ensure(r.holds && r.bound == g.group.order(), || {
            format!("{}: {} maximal subgroups, order {}", g.name, r.maximal_count, r.bound)
        })?;
    }
    for (name, expected) in [("s3", 4), ("s4", 8), ("c2x2", 3)] {
        let g = catalog::group(name, caps).unwrap();
        let count = check_wall(&g.group, caps).unwrap().maximal_count;
        ensure(count == expected, || format!("{name}: {count} maximal subgroups, expected {expected}"))?;
    }
    Ok(format!("{} groups of order <= 200; S3 4, S4 8, C2xC2 3", groups.len()))
}

fn criterion_2(caps: &Caps) -> Outcome {
    let mut checked = 0;
    let mut groups = 0;
    for g in catalog_groups(caps) {
        if !g.group.is_solvable() || g.group.order() > 100 {
            continue;
        }
        groups += 1;
        for h in all_subgroups(&g.group, caps).unwrap() {
            if h.order() == g.group.order() {
                continue;
            }
            let r = check_relative_wall(&g.group, &h, caps).map_err(|e| format!("{}: {e}", g.name))?;
            ensure(r.holds, || {
                format!("{} over a subgroup of order {}: {} >= {}", g.name, h.order(), r.maximal_count, r.bound)
            })?;
            checked += 1;
        }
    }
    let g = catalog::group("s3xs3", caps).unwrap();
    let r = check_relative_wall(&g.group, g.subgroup("diag").unwrap(), caps).unwrap();
    ensure((r.maximal_count, r.bound, r.holds) == (1, 3, true), || {
        format!("S3xS3 over the diagonal: {} maximal, bound {}", r.maximal_count, r.bound)
    })?;
    Ok(format!("{checked} (group, subgroup) pairs over {groups} solvable groups; diagonal 1 < 3"))
}

fn criterion_3(caps: &Caps) -> Outcome {
    let mut families = 0usize;
    let mut groups = 0;
    for g in catalog_groups(caps) {
        if !g.group.is_solvable() {
            continue;
        }
        groups += 1;
        let maximal = maximal_subgroups(&g.group, caps).unwrap();
        ensure(maximal.len() <= caps.rado, || format!("{}: {} maximal subgroups", g.name, maximal.len()))?;
        for mask in 1u64..(1 << maximal.len()) {
            let ks: Vec<Subgroup> = (0..maximal.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| maximal[i].clone())
                .collect();
            let r = check_mod2(&g.group, &ks, caps).map_err(|e| format!("{}: {e}", g.name))?;
            ensure(r.holds && r.verified && r.witnesses.len() == ks.len(), || {
                format!("{}: family {mask:#b} fails (subset {:?})", g.name, r.failed_subset)
            })?;
            families += 1;
        }
    }
    Ok(format!("{families} families of maximal subgroups over {groups} solvable groups, all witnesses verified"))
}

fn criterion_4(caps: &Caps) -> Outcome {
    let (mut positive, mut negative) = (0, 0);
    for g in catalog_groups(caps) {
        if g.group.order() > 24 {
            continue;
        }
        let subgroups = all_subgroups(&g.group, caps).unwrap();
        let trivial = g.group.trivial_subgroup();
        for n in normal_subgroups(&g.group, caps).unwrap() {
            for k in &subgroups {
                for h in [&trivial, k] {
                    let identity = projector_identity_check(&g.group, &n, k, h).unwrap();
                    let whole = product_is_whole(&g.group, &n, k);
                    ensure(identity == whole, || {
                        format!("{}: |N| = {}, |K| = {}, NK = G is {whole}", g.name, n.order(), k.order())
                    })?;
                    if whole {
                        positive += 1;
                    } else {
                        negative += 1;
                    }
                }
            }
        }
    }
    ensure(positive >= 50 && negative >= 10, || format!("{positive} positive, {negative} control instances"))?;
    Ok(format!("{positive} instances with NK = G, {negative} controls with NK != G"))
}

/// Every phase table at the algebra's modulus, filtered only by the
/// materialized closure check.
fn brute_force_coideals(a: &KacAlgebra, caps: &Caps) -> BTreeSet<(Vec<usize>, Vec<usize>, Vec<u32>)> {
    let sys = a.system();
    let (ng, hg) = (sys.n_group(), sys.h_group());
    let m = a.modulus() as usize;
    let mut out = BTreeSet::new();
    for n1 in all_subgroups(ng, caps).unwrap() {
        for h1 in all_subgroups(hg, caps).unwrap() {
            let free: Vec<(usize, usize)> = n1
                .iter()
                .filter(|&n| n != 0)
                .flat_map(|n| h1.iter().filter(|&h| h != 0).map(move |h| (n, h)))
                .collect();
            for code in 0..m.pow(free.len() as u32) {
                let mut lambda = vec![0u32; a.dim()];
                let mut c = code;
                for &(n, h) in &free {
                    lambda[n * hg.order() + h] = (c % m) as u32;
                    c /= m;
                }
                let t = CoidealTriple {
                    n1: n1.clone(),
                    h1: h1.clone(),
                    lambda,
                };
                if validate_triple_closure(a, &t, CoidealSide::Right) {
                    out.insert((t.n1.to_vec(), t.h1.to_vec(), t.lambda));
                }
            }
        }
    }
    out
}

fn criterion_5(caps: &Caps) -> Outcome {
    let mut notes = Vec::new();
    let mut failures = Vec::new();
    let a = KacAlgebra::new(catalog::cocycle_system("c3c2_trivial", caps).unwrap()).unwrap();
    let lat = enumerate_coideals(&a, caps).unwrap();
    if lat.len() != 4 {
        failures.push(format!("C3 x| C2 trivial phases: {} coideals, expected exactly 4", lat.len()));
    }
    let dims: BTreeSet<usize> = lat.dims.iter().copied().collect();
    if dims != BTreeSet::from([1, 2, 3, 6]) {
        failures.push(format!("dimension set {dims:?}, expected {{1, 2, 3, 6}}"));
    }
    if !lat.nodes.iter().all(|t| validate_triple_closure(&a, t, CoidealSide::Right)) {
        failures.push("a coideal fails the closure check".into());
    }
    notes.push(format!("C3 x| C2: {} nodes, dims {:?}", lat.len(), lat.dims));
    let mut compared = 0;
    for (name, sys) in cocycle_instances(caps) {
        if sys.n_group().order() * sys.h_group().order() > 12 {
            continue;
        }
        let a = KacAlgebra::new(sys).unwrap();
        let enumerated: BTreeSet<_> = enumerate_coideals(&a, caps)
            .unwrap()
            .nodes
            .into_iter()
            .map(|t| (t.n1.to_vec(), t.h1.to_vec(), t.lambda))
            .collect();
        if enumerated != brute_force_coideals(&a, caps) {
            failures.push(format!("{name}: enumeration differs from brute force"));
        }
        compared += 1;
    }
    notes.push(format!("brute force agrees on {compared} instances"));
    if failures.is_empty() {
        Ok(notes.join("; "))
    } else {
        Err(format!("{} ({})", failures.join("; "), notes.join("; ")))
    }
}

fn criterion_6(caps: &Caps) -> Outcome {
    let mut nontrivial = 0;
    let mut pairs = 0;
    for (name, sys) in cocycle_instances(caps) {
        let r = check_all_operator_relations(&sys);
        ensure(r.holds(), || format!("{name}: {r:?}"))?;
        pairs += r.pairs;
        if sys.modulus() == 2 && (!sys.eta_entries().is_empty() || !sys.xi_entries().is_empty()) {
            nontrivial += 1;
        }
    }
    ensure(nontrivial >= 2, || format!("only {nontrivial} nontrivial systems at m = 2"))?;
    Ok(format!("{pairs} operator pairs, {nontrivial} nontrivial systems at m = 2"))
}

fn criterion_7(caps: &Caps) -> Outcome {
    let (mut pairs, mut bounded) = (0, 0);
    for (name, sys) in cocycle_instances(caps) {
        let a = KacAlgebra::new(sys.clone()).unwrap();
        let (ng, hg) = (sys.n_group(), sys.h_group());
        for n1 in all_subgroups(ng, caps).unwrap() {
            for h1 in all_subgroups(hg, caps).unwrap() {
                if !normalizes(&a, &h1, &n1) {
                    continue;
                }
                let lambdas = lambdas_for_pair(&a, &n1, &h1).len();
                let set = cocycle_set(ng, hg, sys.action(), &n1, &h1).unwrap();
                if lambdas > 0 {
                    ensure(lambdas == set.count(), || {
                        format!("{name}: |N1| = {}, |H1| = {}: {lambdas} coideals, {} cocycles", n1.order(), h1.order(), set.count())
                    })?;
                    pairs += 1;
                }
                let h1_group_solvable = subgroup_is_solvable(hg, &h1);
                if set.irreducible && !set.acts_trivially && h1_group_solvable {
                    let bound = (n1.order() - 1) * h1.order();
                    ensure(set.count() <= bound, || {
                        format!("{name}: {} cocycles exceed (|N1| - 1)|H1| = {bound}", set.count())
                    })?;
                    bounded += 1;
                }
            }
        }
    }
    let sys = catalog::cocycle_system("c3c2_trivial", caps).unwrap();
    let (ng, hg) = (sys.n_group(), sys.h_group());
    let set = cocycle_set(ng, hg, sys.action(), &ng.whole(), &hg.whole()).unwrap();
    ensure(set.count() == 3 && set.coboundary_count() == 3, || {
        format!("C2 on dual C3: {} cocycles, {} coboundaries", set.count(), set.coboundary_count())
    })?;
    Ok(format!("{pairs} pairs with matching counts, {bounded} irreducible instances within bound; C2 on dual C3: 3 coboundaries"))
}

fn subgroup_is_solvable(g: &Group, h: &Subgroup) -> bool {
    let mut current = h.clone();
    loop {
        let next = g.commutator_subgroup(&current);
        if next.order() == 1 {
            return true;
        }
        if next.order() == current.order() {
            return false;
        }
        current = next;
    }
}

fn criterion_8(caps: &Caps) -> Outcome {
    let mut nodes = 0;
    let mut systems = 0;
    for (name, sys) in cocycle_instances(caps) {
        let a = KacAlgebra::new(sys.clone()).unwrap();
        let lat = enumerate_coideals(&a, caps).unwrap();
        let solvable = sys.n_group().is_solvable() && sys.h_group().is_solvable();
        let r = check_kac_wall(&a, caps).unwrap();
        ensure(!solvable || (r.holds_max && r.holds_min), || format!("{name}: {r:?}"))?;
        let top = second_commutant_dim(&a, &CoidealTriple::top(&a));
        let bottom = second_commutant_dim(&a, &CoidealTriple::bottom(&a));
        ensure(top == a.dim() && bottom == 1, || format!("{name}: commutant dims {top} and {bottom}"))?;
        for node in 0..lat.len() {
            let rel = check_relative_kac_wall(&a, &lat, node).unwrap();
            ensure(!solvable || (rel.holds_max && rel.holds_min), || format!("{name}: {rel:?}"))?;
            let jb = jb_lower_bound_check(&a, &lat, node).unwrap();
            ensure(jb.holds(), || format!("{name}: {:?}", jb.violations))?;
            nodes += 1;
        }
        systems += 1;
    }
    Ok(format!("{systems} systems, {nodes} coideals checked"))
}

fn criterion_9(caps: &Caps) -> Outcome {
    let groups: Vec<BuiltGroup> = catalog_groups(caps).into_iter().filter(|g| g.group.order() >= 2).collect();
    let mut pairs = 0;
    for (i, x) in groups.iter().enumerate() {
        for y in &groups[i..] {
            if x.group.order() * y.group.order() > 600 {
                continue;
            }
            let r = check_tensor_lemma(&x.group, &y.group, caps).map_err(|e| e.to_string())?;
            ensure(r.within_bound, || format!("{} x {}: {} > {}", x.name, y.name, r.count, r.bound))?;
            ensure(r.equality == r.both_elementary_abelian_2, || {
                format!("{} x {}: equality {} but elementary abelian 2 is {}", x.name, y.name, r.equality, r.both_elementary_abelian_2)
            })?;
            let product = Group::direct_product(&x.group, &y.group, caps).unwrap();
            let wall = check_wall(&product, caps).unwrap();
            ensure(wall.holds, || format!("{} x {} fails the maximal subgroup bound", x.name, y.name))?;
            pairs += 1;
        }
    }
    let named = |a: &str, b: &str| {
        let (x, y) = (catalog::group(a, caps).unwrap().group, catalog::group(b, caps).unwrap().group);
        let r = check_tensor_lemma(&x, &y, caps).unwrap();
        (r.count, r.bound)
    };
    ensure(named("c2", "c2") == (1, 1), || "C2 x C2".into())?;
    ensure(named("c2x2", "c2x2") == (9, 9), || "C2^2 x C2^2".into())?;
    ensure(named("s3", "s3").0 == 1, || "S3 x S3".into())?;
    Ok(format!("{pairs} catalog pairs with |X||Y| <= 600; C2: 1 = 1, C2^2: 9 = 9, S3: 1"))
}

fn criterion_10(caps: &Caps) -> Outcome {
    let mut groups = 0;
    for g in catalog_groups(caps) {
        if g.group.order() > caps.fusion_objects {
            continue;
        }
        let r = maximal_fusion_subalgebras(&FusionRing::from_group(&g.group), caps).unwrap();
        let maximal = maximal_subgroups(&g.group, caps).unwrap().len();
        ensure(r.count == maximal && r.holds, || format!("{}: {} subalgebras, {maximal} maximal subgroups", g.name, r.count))?;
        groups += 1;
    }
    let ring = catalog::character_table("s3").unwrap().fusion_ring().unwrap();
    let r = maximal_fusion_subalgebras(&ring, caps).unwrap();
    ensure(r.count == 1 && r.holds && r.objects == 3, || format!("S3 representation ring: {r:?}"))?;
    Ok(format!("{groups} group rings match maximal subgroups; S3 representation ring: 1 < 3"))
}

fn main() {
    let caps = Caps::default();
    let criteria: [(&str, fn(&Caps) -> Outcome, Option<u64>); 10] = [
        ("maximal subgroup count below the group order", criterion_1, Some(10)),
        ("maximal overgroups below double cosets", criterion_2, Some(60)),
        ("independent invariant vectors for maximal subgroup families", criterion_3, Some(120)),
        ("averaging projector identity", criterion_4, None),
        ("coideal lattice of C3 x| C2 and brute-force completeness", criterion_5, Some(60)),
        ("left and right operator relations", criterion_6, None),
        ("cocycles match coideals; cocycle count bound", criterion_7, None),
        ("coideal counts and second commutant bounds", criterion_8, None),
        ("maximal subgroups of products avoiding both factors", criterion_9, None),
        ("maximal fusion subalgebras", criterion_10, None),
    ];
    let mut failed = Vec::new();
    for (i, (title, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run(&caps);
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(secs)) if elapsed > Duration::from_secs(*secs) => {
                Err(format!("took {:.1}s, limit {secs}s", elapsed.as_secs_f64()))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {title} [{:.2}s] {detail}", i + 1, elapsed.as_secs_f64()),
            Err(detail) => {
                println!("criterion {}: FAIL {title} [{:.2}s] {detail}", i + 1, elapsed.as_secs_f64());
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
