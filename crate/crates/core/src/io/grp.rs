//! Sectioned text format for group specifications.
//!
//! ```text
//! [group]
//! name = S3
//! degree = 3
//! generators = (1 2), (1 2 3)
//!
//! [subgroup a3]
//! generators = (1 2 3)
//! ```
//!
//! A semidirect product `N ⋊ H` sets `kind = semidirect` and gives `N` and
//! `H` in `[normal]` and `[acting]` sections. Each line of `[action]` maps an
//! acting generator `h` to the images `h n h⁻¹` of the normal generators, in
//! order. Elements of a semidirect product are written `[n ; h]`.
//! Blank lines and lines starting with `#` are ignored.

use std::collections::HashMap;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{subgroup_closure, Group, GroupAction, Subgroup};
use crate::perm::Permutation;

use super::{parse_permutation, ParseError};

/// A permutation group given by generators on `{1..degree}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGroupSpec {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl PermutationGroupSpec {
    /// The generated group, with the permutation of each element id.
    pub fn build(&self, caps: &Caps) -> Result<(Group, Vec<Permutation>)> {
        Group::from_generators_with_perms(self.degree, &self.generators, caps)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupBody {
    Permutation(PermutationGroupSpec),
    Semidirect {
        normal: PermutationGroupSpec,
        acting: PermutationGroupSpec,
        /// One entry per acting generator, in order: the images of the
        /// normal generators.
        action: Vec<Vec<Permutation>>,
    },
}

/// An element named in a subgroup block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementSpec {
    Permutation(Permutation),
    /// `[n ; h]` in a semidirect product.
    Pair(Permutation, Permutation),
}

impl std::fmt::Display for ElementSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ElementSpec::Permutation(p) => write!(f, "{p}"),
            ElementSpec::Pair(n, h) => write!(f, "[{n} ; {h}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub body: GroupBody,
    /// Named subgroups, each given by generators.
    pub subgroups: Vec<(String, Vec<ElementSpec>)>,
}

/// A constructed group with its named subgroups.
#[derive(Debug, Clone)]
pub struct BuiltGroup {
    pub name: String,
    pub group: Group,
    pub subgroups: Vec<(String, Subgroup)>,
}

impl BuiltGroup {
    pub fn subgroup(&self, name: &str) -> Option<&Subgroup> {
        self.subgroups.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }
}

impl GroupSpec {
    /// For a semidirect product `N ⋊ H`: the groups `N`, `H` and the action.
    pub fn semidirect_parts(&self, caps: &Caps) -> Result<Option<(Group, Group, GroupAction)>> {
        match &self.body {
            GroupBody::Permutation(_) => Ok(None),
            GroupBody::Semidirect { normal, acting, action } => {
                Ok(Some(semidirect_parts(normal, acting, action, caps)?))
            }
        }
    }

    pub fn build(&self, caps: &Caps) -> Result<BuiltGroup> {
        let group = match &self.body {
            GroupBody::Permutation(spec) => spec.build(caps)?.0,
            GroupBody::Semidirect { normal, acting, action } => build_semidirect(normal, acting, action, caps)?,
        };
        let mut subgroups = Vec::with_capacity(self.subgroups.len());
        for (name, gens) in &self.subgroups {
            let mut ids = Vec::with_capacity(gens.len());
            for g in gens {
                let found = match (&self.body, g) {
                    (GroupBody::Permutation(_), ElementSpec::Permutation(_))
                    | (GroupBody::Semidirect { .. }, ElementSpec::Pair(..)) => group.find_label(&g.to_string()),
                    _ => None,
                };
                ids.push(found.ok_or_else(|| {
                    Error::domain(format!("generator {g} of subgroup {name} is not an element of {}", self.name))
                })?);
            }
            subgroups.push((name.clone(), subgroup_closure(&group, &ids)));
        }
        Ok(BuiltGroup {
            name: self.name.clone(),
            group,
            subgroups,
        })
    }
}

fn build_semidirect(
    normal: &PermutationGroupSpec,
    acting: &PermutationGroupSpec,
    action: &[Vec<Permutation>],
    caps: &Caps,
) -> Result<Group> {
    let (n, h, act) = semidirect_parts(normal, acting, action, caps)?;
    Group::semidirect_product(&n, &h, &act, caps)
}

fn semidirect_parts(
    normal: &PermutationGroupSpec,
    acting: &PermutationGroupSpec,
    action: &[Vec<Permutation>],
    caps: &Caps,
) -> Result<(Group, Group, GroupAction)> {
    let (n, nperms) = normal.build(caps)?;
    let (h, hperms) = acting.build(caps)?;
    let nindex: HashMap<&Permutation, usize> = nperms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let hindex: HashMap<&Permutation, usize> = hperms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    if action.len() != acting.generators.len() {
        return Err(Error::validation("one action line is needed per acting generator"));
    }
    let ngens: Vec<usize> = normal.generators.iter().map(|g| nindex[g]).collect();
    let mut hgens = Vec::new();
    let mut maps = Vec::new();
    for (hg, images) in acting.generators.iter().zip(action) {
        if images.len() != ngens.len() {
            return Err(Error::validation(format!(
                "action of {hg} must list one image per normal generator"
            )));
        }
        let img_ids = images
            .iter()
            .map(|p| nindex.get(p).copied().ok_or_else(|| Error::domain(format!("image {p} is not in the normal subgroup"))))
            .collect::<Result<Vec<_>>>()?;
        maps.push(extend_homomorphism(&n, &ngens, &img_ids).ok_or_else(|| {
            Error::validation(format!("images under {hg} do not define an automorphism"))
        })?);
        hgens.push(hindex[hg]);
    }
    let act = GroupAction::from_generator_images(&n, &h, &hgens, &maps)?;
    Ok((n, h, act))
}

/// The endomorphism of `g` sending `gens[i]` to `images[i]`, if it is a
/// well-defined bijection.
fn extend_homomorphism(g: &Group, gens: &[usize], images: &[usize]) -> Option<Vec<u32>> {
    let mut map: Vec<Option<usize>> = vec![None; g.order()];
    map[0] = Some(0);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x]?;
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = g.mul(fx, t);
            match map[y] {
                Some(v) if v != fy => return None,
                Some(_) => {}
                None => {
                    map[y] = Some(fy);
                    queue.push_back(y);
                }
            }
        }
    }
    let map: Vec<u32> = map.into_iter().map(|v| v.map(|x| x as u32)).collect::<Option<_>>()?;
    let mut seen = vec![false; g.order()];
    for &v in &map {
        if std::mem::replace(&mut seen[v as usize], true) {
            return None;
        }
    }
    Some(map)
}

struct Entry<'a> {
    key: &'a str,
    key_offset: usize,
    value: &'a str,
    value_offset: usize,
}

struct Section<'a> {
    header: &'a str,
    offset: usize,
    entries: Vec<Entry<'a>>,
}

impl<'a> Section<'a> {
    fn take(&self, text: &str, allowed: &[&str]) -> Result<HashMap<&'a str, &Entry<'a>>, ParseError> {
        let mut out = HashMap::new();
        for e in &self.entries {
            if !allowed.contains(&e.key) {
                return Err(ParseError::at(
                    text,
                    e.key_offset,
                    format!("unknown key {:?} in [{}]", e.key, self.header),
                ));
            }
            if out.insert(e.key, e).is_some() {
                return Err(ParseError::at(text, e.key_offset, format!("duplicate key {:?}", e.key)));
            }
        }
        Ok(out)
    }

    fn required<'m>(
        &self,
        text: &str,
        map: &'m HashMap<&'a str, &Entry<'a>>,
        key: &str,
    ) -> Result<&'m Entry<'a>, ParseError> {
        map.get(key)
            .copied()
            .ok_or_else(|| ParseError::at(text, self.offset, format!("[{}] is missing {key:?}", self.header)))
    }
}

fn split_sections(text: &str) -> Result<Vec<Section<'_>>, ParseError> {
    let mut sections: Vec<Section> = Vec::new();
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let line_offset = offset;
        offset += raw.len();
        let line = raw.trim_end_matches(['\n', '\r']);
        let lead = line.len() - line.trim_start().len();
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let start = line_offset + lead;
        if let Some(inner) = body.strip_prefix('[') {
            let header = inner
                .strip_suffix(']')
                .ok_or_else(|| ParseError::at(text, start + body.len(), "section header is missing ']'"))?
                .trim();
            sections.push(Section {
                header,
                offset: start,
                entries: Vec::new(),
            });
            continue;
        }
        let section = sections
            .last_mut()
            .ok_or_else(|| ParseError::at(text, start, "expected a section header such as [group]"))?;
        let eq = body
            .find('=')
            .ok_or_else(|| ParseError::at(text, start, "expected 'key = value'"))?;
        let key = body[..eq].trim();
        if key.is_empty() {
            return Err(ParseError::at(text, start, "empty key"));
        }
        let after = &body[eq + 1..];
        let value_lead = after.len() - after.trim_start().len();
        section.entries.push(Entry {
            key,
            key_offset: start,
            value: after.trim(),
            value_offset: start + eq + 1 + value_lead,
        });
    }
    Ok(sections)
}

fn parse_degree(text: &str, e: &Entry) -> Result<usize, ParseError> {
    match e.value.parse::<usize>() {
        Ok(d) if d > 0 => Ok(d),
        _ => Err(ParseError::at(text, e.value_offset, "degree must be a positive integer")),
    }
}

/// Splits a comma-separated list, returning each trimmed item and its offset.
fn list_items(value: &str, base: usize) -> Vec<(&str, usize)> {
    if value.trim().is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut start = 0;
    for piece in value.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        out.push((piece.trim(), base + start + lead));
        start += piece.len() + 1;
    }
    out
}

fn parse_perm_at(text: &str, item: &str, offset: usize, degree: usize) -> Result<Permutation, ParseError> {
    parse_permutation(item, degree).map_err(|e| e.shifted(text, offset))
}

fn parse_perm_list(text: &str, value: &str, base: usize, degree: usize) -> Result<Vec<Permutation>, ParseError> {
    list_items(value, base)
        .into_iter()
        .map(|(item, off)| parse_perm_at(text, item, off, degree))
        .collect()
}

fn parse_perm_section(text: &str, s: &Section) -> Result<PermutationGroupSpec, ParseError> {
    let map = s.take(text, &["degree", "generators"])?;
    let degree = parse_degree(text, s.required(text, &map, "degree")?)?;
    let gens = s.required(text, &map, "generators")?;
    Ok(PermutationGroupSpec {
        degree,
        generators: parse_perm_list(text, gens.value, gens.value_offset, degree)?,
    })
}

/// Parses a group specification. Construction of the group itself is
/// [`GroupSpec::build`].
pub fn parse_group_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let sections = split_sections(text)?;
    let find = |name: &str| sections.iter().filter(|s| s.header == name).collect::<Vec<_>>();
    for s in &sections {
        let known = matches!(s.header, "group" | "normal" | "acting" | "action") || s.header.starts_with("subgroup ");
        if !known {
            return Err(ParseError::at(text, s.offset, format!("unknown section [{}]", s.header)));
        }
        let singleton = !s.header.starts_with("subgroup ");
        if singleton && find(s.header).len() > 1 {
            return Err(ParseError::at(text, s.offset, format!("section [{}] appears twice", s.header)));
        }
    }
    let group = *find("group")
        .first()
        .ok_or_else(|| ParseError::at(text, 0, "missing [group] section"))?;
    let map = group.take(text, &["name", "degree", "generators", "kind"])?;
    let name_entry = group.required(text, &map, "name")?;
    if name_entry.value.is_empty() {
        return Err(ParseError::at(text, name_entry.value_offset, "name must not be empty"));
    }
    let kind = map.get("kind").map_or("permutation", |e| e.value);
    let body = match kind {
        "permutation" => {
            for extra in ["normal", "acting", "action"] {
                if let Some(s) = find(extra).first() {
                    return Err(ParseError::at(
                        text,
                        s.offset,
                        format!("[{extra}] is only allowed with kind = semidirect"),
                    ));
                }
            }
            let degree = parse_degree(text, group.required(text, &map, "degree")?)?;
            let gens = group.required(text, &map, "generators")?;
            GroupBody::Permutation(PermutationGroupSpec {
                degree,
                generators: parse_perm_list(text, gens.value, gens.value_offset, degree)?,
            })
        }
        "semidirect" => {
            for key in ["degree", "generators"] {
                if let Some(e) = map.get(key) {
                    return Err(ParseError::at(
                        text,
                        e.key_offset,
                        format!("{key:?} belongs in [normal] and [acting] for a semidirect product"),
                    ));
                }
            }
            let section = |name: &str| {
                find(name)
                    .first()
                    .copied()
                    .ok_or_else(|| ParseError::at(text, group.offset, format!("semidirect product needs a [{name}] section")))
            };
            let normal = parse_perm_section(text, section("normal")?)?;
            let acting = parse_perm_section(text, section("acting")?)?;
            let action_section = section("action")?;
            let mut action: Vec<Option<Vec<Permutation>>> = vec![None; acting.generators.len()];
            for e in &action_section.entries {
                let h = parse_perm_at(text, e.key, e.key_offset, acting.degree)?;
                let k = acting
                    .generators
                    .iter()
                    .position(|g| *g == h)
                    .ok_or_else(|| ParseError::at(text, e.key_offset, format!("{h} is not an acting generator")))?;
                if action[k].is_some() {
                    return Err(ParseError::at(text, e.key_offset, format!("action of {h} is given twice")));
                }
                let images = parse_perm_list(text, e.value, e.value_offset, normal.degree)?;
                if images.len() != normal.generators.len() {
                    return Err(ParseError::at(
                        text,
                        e.value_offset,
                        format!("expected {} images, one per normal generator", normal.generators.len()),
                    ));
                }
                action[k] = Some(images);
            }
            let action = action
                .into_iter()
                .zip(&acting.generators)
                .map(|(a, g)| {
                    a.ok_or_else(|| ParseError::at(text, action_section.offset, format!("action of {g} is missing")))
                })
                .collect::<Result<_, _>>()?;
            GroupBody::Semidirect { normal, acting, action }
        }
        other => {
            let e = map["kind"];
            return Err(ParseError::at(
                text,
                e.value_offset,
                format!("unknown kind {other:?}, expected permutation or semidirect"),
            ));
        }
    };
    let mut subgroups = Vec::new();
    for s in sections.iter().filter(|s| s.header.starts_with("subgroup ")) {
        let name = s.header["subgroup ".len()..].trim();
        if name.is_empty() || name.contains(char::is_whitespace) {
            return Err(ParseError::at(text, s.offset, "subgroup name must be a single nonempty word"));
        }
        if subgroups.iter().any(|(n, _)| n == name) {
            return Err(ParseError::at(text, s.offset, format!("subgroup {name} is defined twice")));
        }
        let map = s.take(text, &["generators"])?;
        let gens = s.required(text, &map, "generators")?;
        let elements = list_items(gens.value, gens.value_offset)
            .into_iter()
            .map(|(item, off)| parse_element(text, item, off, &body))
            .collect::<Result<_, _>>()?;
        subgroups.push((name.to_string(), elements));
    }
    Ok(GroupSpec {
        name: name_entry.value.to_string(),
        body,
        subgroups,
    })
}

fn parse_element(text: &str, item: &str, offset: usize, body: &GroupBody) -> Result<ElementSpec, ParseError> {
    match body {
        GroupBody::Permutation(p) => Ok(ElementSpec::Permutation(parse_perm_at(text, item, offset, p.degree)?)),
        GroupBody::Semidirect { normal, acting, .. } => {
            let inner = item
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| ParseError::at(text, offset, "expected an element of the form [n ; h]"))?;
            let semi = inner
                .find(';')
                .ok_or_else(|| ParseError::at(text, offset, "expected ';' between the two components"))?;
            let (a, b) = (&inner[..semi], &inner[semi + 1..]);
            let a_off = offset + 1 + (a.len() - a.trim_start().len());
            let b_off = offset + 2 + semi + (b.len() - b.trim_start().len());
            Ok(ElementSpec::Pair(
                parse_perm_at(text, a.trim(), a_off, normal.degree)?,
                parse_perm_at(text, b.trim(), b_off, acting.degree)?,
            ))
        }
    }
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn line(out: &mut String, key: &str, value: &str) {
    out.push_str(format!("{key} = {value}").trim_end());
    out.push('\n');
}

/// Canonical text for a group specification.
pub fn write_group_spec(spec: &GroupSpec) -> String {
    let mut out = String::from("[group]\n");
    line(&mut out, "name", &spec.name);
    match &spec.body {
        GroupBody::Permutation(p) => {
            line(&mut out, "degree", &p.degree.to_string());
            line(&mut out, "generators", &join(&p.generators));
        }
        GroupBody::Semidirect { normal, acting, action } => {
            line(&mut out, "kind", "semidirect");
            for (name, p) in [("normal", normal), ("acting", acting)] {
                out.push_str(&format!("\n[{name}]\n"));
                line(&mut out, "degree", &p.degree.to_string());
                line(&mut out, "generators", &join(&p.generators));
            }
            out.push_str("\n[action]\n");
            for (g, images) in acting.generators.iter().zip(action) {
                line(&mut out, &g.to_string(), &join(images));
            }
        }
    }
    for (name, gens) in &spec.subgroups {
        out.push_str(&format!("\n[subgroup {name}]\n"));
        line(&mut out, "generators", &join(gens));
    }
    out
}
