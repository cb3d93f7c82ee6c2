use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};

use super::module::{averaging_projector, PermModule};

/// Whether `e_N e_K = e_G` as operators on `ℓ(G/H)`.
///
/// With `N` normal and `H ⊆ K` the product is `e_{NK}`, so the identity
/// should hold exactly when `NK = G`.
pub fn projector_identity_check(g: &Group, n: &Subgroup, k: &Subgroup, h: &Subgroup) -> Result<bool> {
    if !h.is_subgroup_of(k) {
        return Err(Error::domain("the point stabilizer must lie in K"));
    }
    if !n.is_normal_in(g) {
        return Err(Error::domain("N must be normal"));
    }
    let module = PermModule::new(g, h);
    let e_n = averaging_projector(&module, n);
    let e_k = averaging_projector(&module, k);
    let e_g = averaging_projector(&module, &g.whole());
    Ok(e_n.mul(&e_k).equals(&e_g))
}
