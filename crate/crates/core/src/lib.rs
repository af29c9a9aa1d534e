//! Cardinalities of monoids of G-equivariant transformations of finite
//! G-sets.
//!
//! Given a finite permutation group `G` and a finite `G`-set `X`, this crate
//! computes `|End_G(X)|`, `|Aut_G(X)|`, the number of fixing elementary
//! collapsings and the number of their types from the box decomposition of
//! `X` (orbits grouped by the conjugacy class of their stabilizers). The
//! [`oracle`] module recomputes the same quantities by direct enumeration.
//!
//! ```
//! use equimon::{counting, fixtures};
//!
//! let x = fixtures::worked_example();
//! let boxes = x.box_decomposition(64).unwrap();
//! assert_eq!(counting::count_endomorphisms(&boxes), 144u32.into());
//! assert_eq!(counting::count_automorphisms(&boxes), 16u32.into());
//! ```

pub mod counting;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod gset;
pub mod oracle;
pub mod perm;
pub mod subgroup;

pub use counting::CardinalityReport;
pub use error::{Error, Result};
pub use group::GroupTable;
pub use gset::{BoxDecomposition, GSet, MapKind, Orbit};
pub use oracle::{CollapsingType, EquivariantMap};
pub use perm::Perm;
pub use subgroup::{NClass, Subgroup, SubgroupClass, SubgroupLattice};
