//! Exact checks of counting bounds on maximal intermediate structures:
//! maximal subgroups of finite groups (absolute and relative to a subgroup),
//! independent fixed vectors in permutation modules, coideal lattices of
//! Izumi–Kosaki Kac algebras, and fusion subrings.

pub mod bitset;
pub mod catalog;
pub mod config;
pub mod error;
pub mod fusion;
pub mod group;
pub mod io;
pub mod kac;
pub mod linalg;
pub mod perm;
pub mod wall;

pub use config::Caps;
pub use error::{Error, Result};
pub use group::{Group, GroupAction, Subgroup};
pub use perm::Permutation;
