use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};
use walllat::fusion::{maximal_fusion_subalgebras, CharacterTable, FusionReport, FusionRing};
use walllat::group::lattice::maximal_subgroups;
use walllat::io::{self, BuiltGroup};
use walllat::kac::{
    check_kac_wall, check_relative_kac_wall, enumerate_coideals, validate_triple_closure, CocycleSystem,
    CoidealSide, KacAlgebra, PentagonForm, ValidationOptions, XiCocycleForm,
};
use walllat::wall::{check_mod2, check_relative_wall, check_tensor_lemma, check_wall, SubgroupDesc};
use walllat::{catalog, Caps, Subgroup};

use crate::{CapArgs, CatalogCommand, Cli, Command, Family, FusionCommand, KacCommand, KacInput, Pentagon, Source, XiForm};

/// Version of the JSON report layout, emitted as `schema_version`.
pub const SCHEMA_VERSION: u32 = 1;

pub struct Output {
    pub text: String,
    pub holds: bool,
}

fn caps(args: &CapArgs) -> Caps {
    let mut caps = Caps::default();
    if let Some(v) = args.order_cap {
        caps.order = v as usize;
        caps.interval_order = caps.interval_order.min(caps.order);
    }
    if let Some(v) = args.interval_cap {
        caps.interval_size = v as usize;
    }
    if let Some(v) = args.rado_cap {
        caps.rado = v as usize;
    }
    if let Some(v) = args.seed {
        caps.seed = v;
    }
    caps
}

fn read(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_group(source: &str, caps: &Caps) -> Result<BuiltGroup> {
    match Source::parse(source) {
        Source::Catalog(name) => Ok(catalog::group(&name, caps)?),
        Source::File(path) => {
            let text = read(&path)?;
            let spec = io::parse_group_spec(&text).map_err(|e| anyhow!("{}: {e}", path.display()))?;
            spec.build(caps).map_err(|e| anyhow!("{}: {e}", path.display()))
        }
    }
}

fn load_cocycles(source: &str, caps: &Caps) -> Result<(String, CocycleSystem)> {
    match Source::parse(source) {
        Source::Catalog(name) => Ok((name.clone(), catalog::cocycle_system(&name, caps)?)),
        Source::File(path) => {
            let text = read(&path)?;
            let file = io::CocycleFile::parse(&text).map_err(|e| anyhow!("{}: {e}", path.display()))?;
            let sys = file.to_system(caps).map_err(|e| anyhow!("{}: {e}", path.display()))?;
            Ok((file.name.unwrap_or_else(|| path.display().to_string()), sys))
        }
    }
}

fn load_algebra(input: &KacInput, caps: &Caps) -> Result<(String, KacAlgebra)> {
    let (name, sys) = load_cocycles(input.source(), caps)?;
    let a = KacAlgebra::new(sys).with_context(|| format!("{name} is not a valid cocycle system"))?;
    Ok((name, a))
}

fn load_table(source: &str) -> Result<CharacterTable> {
    match Source::parse(source) {
        Source::Catalog(name) => Ok(catalog::character_table(&name)?),
        Source::File(path) => io::parse_character_table(&read(&path)?).map_err(|e| anyhow!("{}: {e}", path.display())),
    }
}

fn side(input: &KacInput) -> CoidealSide {
    if input.left {
        CoidealSide::Left
    } else {
        CoidealSide::Right
    }
}

fn verdict(holds: bool) -> &'static str {
    if holds {
        "holds"
    } else {
        "FAILS"
    }
}

/// Builds the output: a JSON object with `schema_version`, `command` and
/// `holds` added, or the given text.
fn finish(cli: &Cli, command: &str, mut value: Value, holds: bool, text: String) -> Output {
    if cli.json {
        if let Value::Object(map) = &mut value {
            map.insert("schema_version".into(), json!(SCHEMA_VERSION));
            map.insert("command".into(), json!(command));
            map.insert("holds".into(), json!(holds));
        }
        Output {
            text: io::write_report(&value),
            holds,
        }
    } else {
        Output { text, holds }
    }
}

fn named_subgroup<'a>(g: &'a BuiltGroup, name: &str) -> Result<&'a Subgroup> {
    g.subgroup(name).ok_or_else(|| {
        let known: Vec<&str> = g.subgroups.iter().map(|(n, _)| n.as_str()).collect();
        anyhow!("{} has no subgroup named {name:?} (known: {})", g.name, known.join(", "))
    })
}

pub fn run(cli: &Cli) -> Result<Output> {
    let caps = caps(&cli.caps);
    match &cli.command {
        Command::Wall { group } => {
            let g = load_group(group, &caps)?;
            let r = check_wall(&g.group, &caps)?.with_name(&g.name);
            let text = format!(
                "{} (order {}): {} maximal subgroups, bound {}: {}\n",
                g.name,
                g.group.order(),
                r.maximal_count,
                r.bound,
                verdict(r.holds)
            );
            Ok(finish(cli, "wall", serde_json::to_value(&r)?, r.holds, text))
        }
        Command::RelativeWall { group, subgroup } => {
            let g = load_group(group, &caps)?;
            let h = named_subgroup(&g, subgroup)?;
            let r = check_relative_wall(&g.group, h, &caps)?.with_name(&g.name);
            let text = format!(
                "{} over {subgroup} (order {}): {} maximal overgroups, {} double cosets: {}\n",
                g.name,
                h.order(),
                r.maximal_count,
                r.bound,
                verdict(r.holds)
            );
            Ok(finish(cli, "relative-wall", serde_json::to_value(&r)?, r.holds, text))
        }
        Command::Mod2 { group, subgroups } => {
            let g = load_group(group, &caps)?;
            let (ks, names): (Vec<Subgroup>, Vec<String>) = if subgroups == "all-maximal" {
                let ks = maximal_subgroups(&g.group, &caps)?;
                let names = (0..ks.len()).map(|i| format!("M{i}")).collect();
                (ks, names)
            } else {
                let mut ks = Vec::new();
                let mut names = Vec::new();
                for name in subgroups.split(',').map(str::trim) {
                    ks.push(named_subgroup(&g, name)?.clone());
                    names.push(name.to_string());
                }
                (ks, names)
            };
            let r = check_mod2(&g.group, &ks, &caps)?;
            let mut text = format!(
                "{}: {} maximal subgroups, weight-zero module of dimension {}, fixed dimensions {:?}: {}\n",
                g.name,
                ks.len(),
                r.module_dim,
                r.fixed_dims,
                r.conclusion
            );
            if let Some(s) = &r.failed_subset {
                let members: Vec<&str> = s.iter().map(|&i| names[i].as_str()).collect();
                let _ = writeln!(text, "subfamily without independent vectors: {}", members.join(", "));
            }
            let mut value = serde_json::to_value(&r)?;
            value["group"] = json!({"name": g.name, "order": g.group.order()});
            value["subgroups"] = json!(names
                .iter()
                .zip(&ks)
                .map(|(n, k)| json!({"name": n, "subgroup": SubgroupDesc::of(&g.group, k)}))
                .collect::<Vec<_>>());
            Ok(finish(cli, "mod2", value, r.holds, text))
        }
        Command::Tensor { x, y } => {
            let (gx, gy) = (load_group(x, &caps)?, load_group(y, &caps)?);
            let r = check_tensor_lemma(&gx.group, &gy.group, &caps)?;
            let text = format!(
                "{} x {}: {} maximal subgroups contain neither factor, bound {}{}: {}\n",
                gx.name,
                gy.name,
                r.count,
                r.bound,
                if r.equality { " (equality)" } else { "" },
                verdict(r.within_bound)
            );
            let mut value = serde_json::to_value(&r)?;
            value["x"] = json!(gx.name);
            value["y"] = json!(gy.name);
            Ok(finish(cli, "tensor", value, r.within_bound, text))
        }
        Command::Kac { command } => run_kac(cli, command, &caps),
        Command::Fusion { command } => {
            let (name, ring) = match command {
                FusionCommand::Group { group } => {
                    let g = load_group(group, &caps)?;
                    (g.name.clone(), FusionRing::from_group(&g.group))
                }
                FusionCommand::Chartable { path } => {
                    let table = load_table(path)?;
                    (table.name.clone(), table.fusion_ring()?)
                }
            };
            let r = maximal_fusion_subalgebras(&ring, &caps)?;
            Ok(fusion_output(cli, &name, &ring, &r))
        }
        Command::Catalog { command } => match command {
            CatalogCommand::List => {
                let mut text = String::new();
                let mut entries = Vec::new();
                for g in catalog::groups(&caps)? {
                    let _ = writeln!(text, "{:<12} order {:>4}{}", g.name, g.group.order(), if g.group.is_solvable() { "" } else { "  non-solvable" });
                    entries.push(json!({"name": g.name, "order": g.group.order(), "solvable": g.group.is_solvable()}));
                }
                for (name, _) in catalog::COCYCLES {
                    let _ = writeln!(text, "cocycles     {name}");
                }
                for (name, _) in catalog::CHARACTER_TABLES {
                    let _ = writeln!(text, "characters   {name}");
                }
                let value = json!({
                    "groups": entries,
                    "cocycles": catalog::COCYCLES.iter().map(|(n, _)| *n).collect::<Vec<_>>(),
                    "character_tables": catalog::CHARACTER_TABLES.iter().map(|(n, _)| *n).collect::<Vec<_>>(),
                });
                Ok(finish(cli, "catalog list", value, true, text))
            }
            CatalogCommand::Sweep { family } => sweep(cli, *family, &caps),
        },
    }
}

fn run_kac(cli: &Cli, command: &KacCommand, caps: &Caps) -> Result<Output> {
    match command {
        KacCommand::Validate { input, pentagon, xi_cocycle } => {
            let (name, sys) = load_cocycles(input.source(), caps)?;
            let options = ValidationOptions {
                pentagon: match pentagon {
                    Pentagon::Closure => PentagonForm::Closure,
                    Pentagon::ProofDisplay => PentagonForm::ProofDisplay,
                    Pentagon::PrintedDisplay => PentagonForm::PrintedDisplay,
                },
                xi_cocycle: match xi_cocycle {
                    XiForm::Twisted => XiCocycleForm::Twisted,
                    XiForm::Printed => XiCocycleForm::Printed,
                },
            };
            let r = sys.validate(&options);
            let mut text = format!(
                "{name}: {} identities checked, {} violations: {}\n",
                r.checked,
                r.violation_count,
                if r.valid { "valid" } else { "INVALID" }
            );
            for v in r.violations.iter().take(10) {
                let _ = writeln!(text, "  {} at {:?}: {} != {}", v.kind, v.instance, v.lhs, v.rhs);
            }
            for c in &r.conventions {
                let _ = writeln!(text, "  {c}");
            }
            Ok(finish(cli, "kac validate", serde_json::to_value(&r)?, r.valid, text))
        }
        KacCommand::Coideals { input } => {
            let (name, a) = load_algebra(input, caps)?;
            let lat = enumerate_coideals(&a, caps)?;
            let sys = a.system();
            let (ng, hg) = (sys.n_group(), sys.h_group());
            let maximal = lat.maximal();
            let minimal = lat.minimal();
            let mut text = format!("{name}: {} coideals, phase modulus {}\n", lat.len(), a.modulus());
            let mut nodes = Vec::new();
            let mut holds = true;
            for (i, t) in lat.nodes.iter().enumerate() {
                let closure = validate_triple_closure(&a, t, side(input));
                holds &= closure;
                let lambda: Vec<Value> = t
                    .n1
                    .iter()
                    .flat_map(|n| t.h1.iter().map(move |h| (n, h)))
                    .filter(|&(n, h)| t.lambda(&a, n, h) != 0)
                    .map(|(n, h)| json!([ng.label(n), hg.label(h), t.lambda(&a, n, h)]))
                    .collect();
                let mut marks = Vec::new();
                if i == lat.top {
                    marks.push("top");
                }
                if i == lat.bottom {
                    marks.push("bottom");
                }
                if maximal.contains(&i) {
                    marks.push("maximal");
                }
                if minimal.contains(&i) {
                    marks.push("minimal");
                }
                let _ = writeln!(
                    text,
                    "  [{i}] |N1| = {}, |H1| = {}, dim {}, {} nonzero phases{}{}",
                    t.n1.order(),
                    t.h1.order(),
                    lat.dims[i],
                    lambda.len(),
                    if marks.is_empty() { String::new() } else { format!(" ({})", marks.join(", ")) },
                    if closure { "" } else { " CLOSURE FAILS" }
                );
                nodes.push(json!({
                    "index": i,
                    "n1": SubgroupDesc::of(ng, &t.n1),
                    "h1": SubgroupDesc::of(hg, &t.h1),
                    "lambda": lambda,
                    "dim": lat.dims[i],
                    "maximal": maximal.contains(&i),
                    "minimal": minimal.contains(&i),
                    "closure": closure,
                }));
            }
            let value = json!({
                "name": name,
                "side": if input.left { "left" } else { "right" },
                "modulus": a.modulus(),
                "node_count": lat.len(),
                "nodes": nodes,
                "edges": lat.covers.iter().map(|&(l, u)| json!([l, u])).collect::<Vec<_>>(),
                "top": lat.top,
                "bottom": lat.bottom,
            });
            Ok(finish(cli, "kac coideals", value, holds, text))
        }
        KacCommand::Wall { input } => {
            let (name, a) = load_algebra(input, caps)?;
            let r = check_kac_wall(&a, caps)?;
            let holds = r.holds_max && r.holds_min;
            let text = format!(
                "{name}: dimension {}, {} coideals; {} maximal ({}), {} minimal ({})\n",
                r.dim,
                r.node_count,
                r.max_count,
                verdict(r.holds_max),
                r.min_count,
                verdict(r.holds_min)
            );
            Ok(finish(cli, "kac wall", serde_json::to_value(&r)?, holds, text))
        }
        KacCommand::Relative { input, triple } => {
            let (name, a) = load_algebra(input, caps)?;
            let lat = enumerate_coideals(&a, caps)?;
            let node = triple.unwrap_or(lat.top);
            if node >= lat.len() {
                bail!("{name} has {} coideals; --triple must be below {}", lat.len(), lat.len());
            }
            let r = check_relative_kac_wall(&a, &lat, node)?;
            let holds = r.holds_max && r.holds_min;
            let text = format!(
                "{name}, coideal [{node}]: second commutant dimension {}; {} maximal ({}), {} minimal ({})\n",
                r.bound,
                r.max_count,
                verdict(r.holds_max),
                r.min_count,
                verdict(r.holds_min)
            );
            Ok(finish(cli, "kac relative", serde_json::to_value(&r)?, holds, text))
        }
    }
}

fn fusion_output(cli: &Cli, name: &str, ring: &FusionRing, r: &FusionReport) -> Output {
    let labels = ring.labels();
    let subsets: Vec<Vec<&str>> = r
        .subsets
        .iter()
        .map(|s| s.iter().map(|&i| labels[i].as_str()).collect())
        .collect();
    let mut text = format!(
        "{name}: {} simple objects, {} maximal fusion subalgebras: {}\n",
        r.objects,
        r.count,
        verdict(r.holds)
    );
    for s in &subsets {
        let _ = writeln!(text, "  {{{}}}", s.join(", "));
    }
    let mut value = serde_json::to_value(r).expect("report serializes");
    value["name"] = json!(name);
    value["subset_labels"] = json!(subsets);
    finish(cli, "fusion", value, r.holds, text)
}

fn sweep(cli: &Cli, family: Family, caps: &Caps) -> Result<Output> {
    let mut entries = Vec::new();
    let mut text = String::new();
    let mut holds = true;
    for g in catalog::groups(caps)? {
        let solvable = g.group.is_solvable();
        if family == Family::Solvable && !solvable {
            continue;
        }
        let wall = check_wall(&g.group, caps)?;
        let maximal = maximal_subgroups(&g.group, caps)?;
        let mod2 = if maximal.len() <= caps.rado {
            Some(check_mod2(&g.group, &maximal, caps)?)
        } else {
            None
        };
        // a non-solvable failure of the vector check is not a bound violation
        let mod2_ok = mod2.as_ref().is_none_or(|r| r.holds || !solvable);
        holds &= wall.holds && mod2_ok;
        let _ = writeln!(
            text,
            "{:<12} order {:>4}  maximal {:>3}  {}  vectors: {}",
            g.name,
            g.group.order(),
            wall.maximal_count,
            verdict(wall.holds),
            mod2.as_ref().map_or("skipped (family above cap)", |r| r.conclusion.as_str())
        );
        entries.push(json!({
            "name": g.name,
            "order": g.group.order(),
            "solvable": solvable,
            "maximal_count": wall.maximal_count,
            "wall_holds": wall.holds,
            "mod2": mod2.as_ref().map(|r| json!({"holds": r.holds, "conclusion": r.conclusion, "verified": r.verified})),
        }));
    }
    let family = match family {
        Family::Solvable => "solvable",
        Family::All => "all",
    };
    Ok(finish(cli, "catalog sweep", json!({"family": family, "groups": entries}), holds, text))
}
