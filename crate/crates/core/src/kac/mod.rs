//! Kac algebras `L(N) ⋊_ξ H` built from cocycle data on a semidirect
//! product, their right coideals `(N₁, H₁, λ)`, and counting bounds on the
//! coideal lattice.

mod algebra;
mod cocycles;
mod coideal;
mod operators;
mod phase;
pub mod samples;
mod system;
mod wall;

pub use algebra::KacAlgebra;
pub use cocycles::{character_count_bound_check, characters, cocycle_set, CharacterCountReport, Cocycle, CocycleSet};
pub use coideal::{
    closure_report, constraint_basis, enumerate_coideals, lambdas_for_pair, materialize, normalizes, triple_leq,
    validate_triple_closure, ClosureReport, CoidealLattice, CoidealSide, CoidealTriple, PhaseFunction,
};
pub use operators::{
    check_all_operator_relations, check_operator_relations, left_right_operators, OperatorRelationReport,
    PhaseOperator,
};
pub use phase::Phase;
pub use system::{CocycleSystem, PentagonForm, ValidationOptions, ValidationReport, Violation, XiCocycleForm};
pub use wall::{
    check_kac_wall, check_relative_kac_wall, jb_lower_bound_check, second_commutant_dim, JbBoundReport,
    KacWallReport, RelativeKacReport,
};
