//! Exact computation on numerical semigroups: generalized Apéry sets,
//! divisor sets, gluings and free/telescopic towers, Feng-Rao distances and
//! numbers, and minimum-distance bound tables for one-point AG codes.

pub mod apery;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod families;
pub mod fengrao;
pub mod gluing;
pub mod oracle;
pub mod semigroup;

pub use apery::{apery, apery_size, divisors, divisors_union, AperySet, DivisorSet};
pub use bounds::{bounds_row, bounds_table, BoundsRow};
pub use error::{Error, Result};
pub use families::{hermitian, suzuki, suzuki_gamma1, FamilyKind, FamilySpec};
pub use fengrao::{
    feng_rao_distance, feng_rao_number, generalized_feng_rao_distance, is_free, is_telescopic,
    second_feng_rao_number, telescopic_up_to_genus,
};
pub use gluing::{cocycle, make_gluing, CocycleTable, Gluing, UniqueForm};
pub use semigroup::{make_semigroup, NumericalSemigroup};
