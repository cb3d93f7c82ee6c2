//! Maximal-subgroup counting bounds for finite groups.
//!
//! * [`check_wall`]: maximal subgroups of `G` against `|G|`.
//! * [`check_relative_wall`]: maximal overgroups of `H` against the number of
//!   `(H, H)` double cosets.
//! * [`check_mod2`]: independent `K_i`-fixed weight-zero vectors in the
//!   permutation module on `G/H`, `H = ∩ K_i`.
//! * [`projector_identity_check`] and [`check_tensor_lemma`].

mod module;
mod mod2;
mod projector;
mod tensor;

use serde::{Deserialize, Serialize};

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::group::lattice::{double_coset_count, maximal_overgroups};
use crate::group::{Group, Subgroup};

pub use module::{averaging_projector, fixed_space_basis, PermModule};
pub use mod2::{check_mod2, independent_transversal, rado_violation, Mod2Report};
pub use projector::projector_identity_check;
pub use tensor::{check_tensor_lemma, TensorReport};

/// Printable description of a subgroup: its order and generator labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupDesc {
    pub order: usize,
    pub generators: Vec<String>,
}

impl SubgroupDesc {
    pub fn of(g: &Group, k: &Subgroup) -> Self {
        SubgroupDesc {
            order: k.order(),
            generators: k.generators().iter().map(|&x| g.label(x)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDesc {
    pub name: Option<String>,
    pub order: usize,
}

impl GroupDesc {
    pub fn of(g: &Group) -> Self {
        GroupDesc {
            name: None,
            order: g.order(),
        }
    }
}

/// Outcome of an absolute or relative maximal-subgroup count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallReport {
    pub group: GroupDesc,
    /// `None` for the absolute check.
    pub subgroup: Option<SubgroupDesc>,
    pub maximal_count: usize,
    /// `|G|` for the absolute check, the double-coset count for the relative one.
    pub bound: usize,
    pub holds: bool,
    /// Solvable groups are covered by the known theorems; for other groups a
    /// failure would be a counterexample, a success is just evidence.
    pub solvable: bool,
    pub witnesses: Option<Vec<SubgroupDesc>>,
}

impl WallReport {
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.group.name = Some(name.into());
        self
    }
}

/// Counts maximal subgroups of `g` against `|g|`.
pub fn check_wall(g: &Group, caps: &Caps) -> Result<WallReport> {
    if g.order() < 2 {
        return Err(Error::domain("the trivial group has no maximal subgroups"));
    }
    let maximal = maximal_overgroups(g, &g.trivial_subgroup(), caps)?;
    let count = maximal.len();
    Ok(WallReport {
        group: GroupDesc::of(g),
        subgroup: None,
        maximal_count: count,
        bound: g.order(),
        holds: count < g.order(),
        solvable: g.is_solvable(),
        witnesses: Some(maximal.iter().map(|k| SubgroupDesc::of(g, k)).collect()),
    })
}

/// Counts maximal subgroups of `g` containing `h` against `|H\G/H|`.
pub fn check_relative_wall(g: &Group, h: &Subgroup, caps: &Caps) -> Result<WallReport> {
    if h.order() == g.order() {
        return Err(Error::domain("the relative check needs a proper subgroup"));
    }
    let maximal = maximal_overgroups(g, h, caps)?;
    let bound = double_coset_count(g, h, h);
    Ok(WallReport {
        group: GroupDesc::of(g),
        subgroup: Some(SubgroupDesc::of(g, h)),
        maximal_count: maximal.len(),
        bound,
        holds: maximal.len() < bound,
        solvable: g.is_solvable(),
        witnesses: Some(maximal.iter().map(|k| SubgroupDesc::of(g, k)).collect()),
    })
}
