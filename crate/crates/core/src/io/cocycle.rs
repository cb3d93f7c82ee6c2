//! JSON format for cocycle systems.
//!
//! ```json
//! {
//!   "name": "c3c2_trivial",
//!   "modulus": 1,
//!   "N": {"degree": 3, "generators": ["(1 2 3)"]},
//!   "H": {"degree": 2, "generators": ["(1 2)"]},
//!   "action": [["(1 3 2)"]],
//!   "eta": [],
//!   "xi": []
//! }
//! ```
//!
//! A group is either a permutation group (`degree` and `generators`) or an
//! abelian group `{"abelian": [k1, k2, ...]}` whose element ids are mixed-radix
//! coordinates and whose generators are the unit vectors. `action[i][j]` is
//! the image of normal generator `j` under acting generator `i`; omitting
//! `action` means the trivial action. Elements are given by id or, in
//! permutation groups, by cycle notation. `eta` lists `[h, n1, n2, exponent]`
//! and `xi` lists `[n, h1, h2, exponent]`; missing entries are zero. The keys
//! `normal` and `acting` are accepted for `N` and `H`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::{Group, GroupAction};
use crate::kac::{samples, CocycleSystem};
use crate::perm::Permutation;

use super::{from_json, parse_permutation, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDescription {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub abelian: Option<Vec<usize>>,
}

/// A group built from a [`GroupDescription`], with its generator ids.
struct Described {
    group: Group,
    generators: Vec<usize>,
    degree: Option<usize>,
}

impl GroupDescription {
    fn build(&self, what: &str, caps: &Caps) -> Result<Described> {
        match (self.degree, &self.generators, &self.abelian) {
            (Some(degree), Some(gens), None) => {
                let perms = gens
                    .iter()
                    .map(|g| parse_permutation(g, degree).map_err(|e| Error::domain(format!("{what}.generators: {e}"))))
                    .collect::<Result<Vec<Permutation>>>()?;
                let (group, elements) = Group::from_generators_with_perms(degree, &perms, caps)?;
                let generators = perms
                    .iter()
                    .map(|p| elements.iter().position(|e| e == p).expect("generator is an element"))
                    .collect();
                Ok(Described {
                    group,
                    generators,
                    degree: Some(degree),
                })
            }
            (None, None, Some(moduli)) => {
                if moduli.contains(&0) {
                    return Err(Error::domain(format!("{what}.abelian: moduli must be positive")));
                }
                let order: usize = moduli.iter().product();
                if order > caps.order {
                    return Err(Error::capacity("group order", order, caps.order));
                }
                let mut generators = Vec::new();
                let mut stride = 1;
                for &k in moduli {
                    generators.push(if k == 1 { 0 } else { stride });
                    stride *= k;
                }
                Ok(Described {
                    group: samples::abelian(moduli),
                    generators,
                    degree: None,
                })
            }
            _ => Err(Error::domain(format!(
                "{what}: give either \"degree\" and \"generators\" or \"abelian\""
            ))),
        }
    }
}

/// An element given by id or by cycle notation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRef {
    Id(usize),
    Label(String),
}

impl Described {
    fn resolve(&self, r: &ElementRef, path: &str) -> Result<usize> {
        match r {
            ElementRef::Id(i) if *i < self.group.order() => Ok(*i),
            ElementRef::Id(i) => Err(Error::domain(format!("{path}: element id {i} is out of range"))),
            ElementRef::Label(s) => {
                let degree = self
                    .degree
                    .ok_or_else(|| Error::domain(format!("{path}: elements of an abelian group are given by id")))?;
                let p = parse_permutation(s, degree).map_err(|e| Error::domain(format!("{path}: {e}")))?;
                self.group
                    .find_label(&p.to_string())
                    .ok_or_else(|| Error::domain(format!("{path}: {p} is not an element of the group")))
            }
        }
    }

    fn reference(&self, id: usize) -> ElementRef {
        match self.degree {
            Some(_) => ElementRef::Label(self.group.label(id)),
            None => ElementRef::Id(id),
        }
    }
}

/// `[h, n1, n2, exponent]` for `η_h(n1, n2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaEntry(pub ElementRef, pub ElementRef, pub ElementRef, pub i64);

/// `[n, h1, h2, exponent]` for `ξ_n(h1, h2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiEntry(pub ElementRef, pub ElementRef, pub ElementRef, pub i64);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub modulus: u32,
    #[serde(rename = "N", alias = "normal")]
    pub normal: GroupDescription,
    #[serde(rename = "H", alias = "acting")]
    pub acting: GroupDescription,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<ElementRef>>>,
    #[serde(default)]
    pub eta: Vec<EtaEntry>,
    #[serde(default)]
    pub xi: Vec<XiEntry>,
}

impl CocycleFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        from_json(text)
    }

    /// Builds the system. Phase tables are not validated here; see
    /// [`CocycleSystem::validate`].
    pub fn to_system(&self, caps: &Caps) -> Result<CocycleSystem> {
        let n = self.normal.build("normal", caps)?;
        let h = self.acting.build("acting", caps)?;
        let action = match &self.action {
            None => GroupAction::trivial(&n.group, &h.group),
            Some(rows) => {
                if rows.len() != h.generators.len() {
                    return Err(Error::domain("action: one row is needed per acting generator"));
                }
                let mut maps = Vec::with_capacity(rows.len());
                for (i, row) in rows.iter().enumerate() {
                    if row.len() != n.generators.len() {
                        return Err(Error::domain(format!("action[{i}]: one image is needed per normal generator")));
                    }
                    let images = row
                        .iter()
                        .enumerate()
                        .map(|(j, r)| n.resolve(r, &format!("action[{i}][{j}]")))
                        .collect::<Result<Vec<_>>>()?;
                    maps.push(extend(&n, &images).ok_or_else(|| {
                        Error::domain(format!("action[{i}]: images do not define an automorphism"))
                    })?);
                }
                GroupAction::from_generator_images(&n.group, &h.group, &h.generators, &maps)?
            }
        };
        let mut sys = CocycleSystem::trivial(n.group.clone(), h.group.clone(), action, self.modulus)?;
        let mut seen = HashSet::new();
        for (i, e) in self.eta.iter().enumerate() {
            let p = format!("eta[{i}]");
            let key = (
                h.resolve(&e.0, &format!("{p}[0]"))?,
                n.resolve(&e.1, &format!("{p}[1]"))?,
                n.resolve(&e.2, &format!("{p}[2]"))?,
            );
            if !seen.insert(key) {
                return Err(Error::domain(format!("{p}: entry is given twice")));
            }
            sys.set_eta(key.0, key.1, key.2, e.3);
        }
        let mut seen = HashSet::new();
        for (i, e) in self.xi.iter().enumerate() {
            let p = format!("xi[{i}]");
            let key = (
                n.resolve(&e.0, &format!("{p}[0]"))?,
                h.resolve(&e.1, &format!("{p}[1]"))?,
                h.resolve(&e.2, &format!("{p}[2]"))?,
            );
            if !seen.insert(key) {
                return Err(Error::domain(format!("{p}: entry is given twice")));
            }
            sys.set_xi(key.0, key.1, key.2, e.3);
        }
        Ok(sys)
    }

    /// Canonical file for `sys`, whose groups must be the ones `normal` and
    /// `acting` describe.
    pub fn from_system(
        name: Option<String>,
        normal: GroupDescription,
        acting: GroupDescription,
        sys: &CocycleSystem,
        caps: &Caps,
    ) -> Result<Self> {
        let n = normal.build("normal", caps)?;
        let h = acting.build("acting", caps)?;
        if n.group.table() != sys.n_group().table() || h.group.table() != sys.h_group().table() {
            return Err(Error::domain("descriptions do not match the groups of the system"));
        }
        let action = (!sys.action().is_trivial()).then(|| {
            h.generators
                .iter()
                .map(|&x| n.generators.iter().map(|&g| n.reference(sys.action().apply(x, g))).collect())
                .collect()
        });
        Ok(CocycleFile {
            name,
            modulus: sys.modulus(),
            action,
            eta: sys
                .eta_entries()
                .into_iter()
                .map(|[x, a, b, v]| EtaEntry(h.reference(x), n.reference(a), n.reference(b), v as i64))
                .collect(),
            xi: sys
                .xi_entries()
                .into_iter()
                .map(|[a, x, y, v]| XiEntry(n.reference(a), h.reference(x), h.reference(y), v as i64))
                .collect(),
            normal,
            acting,
        })
    }
}

fn extend(n: &Described, images: &[usize]) -> Option<Vec<u32>> {
    let g = &n.group;
    let mut map: Vec<Option<usize>> = vec![None; g.order()];
    map[0] = Some(0);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x]?;
        for (&s, &t) in n.generators.iter().zip(images) {
            let (y, fy) = (g.mul(x, s), g.mul(fx, t));
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
    let distinct: HashSet<u32> = map.iter().copied().collect();
    (distinct.len() == map.len()).then_some(map)
}

/// Parses a cocycle file and builds its system with default caps.
pub fn parse_cocycle_file(text: &str) -> Result<CocycleSystem> {
    CocycleFile::parse(text)?.to_system(&Caps::default())
}

pub fn write_cocycle_file(file: &CocycleFile) -> String {
    super::write_report(file)
}
