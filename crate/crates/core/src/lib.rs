//! Maps and hypermaps as transitive actions of three involutions on flags.
//!
//! The crate builds flag systems, computes their surface invariants and
//! automorphism groups, forms canonical orientable double covers and
//! quotients, and decides whether every automorphism of the cover is a lift
//! of one of the base. Large regular maps given by a permutation group are
//! handled symbolically in [`group_level`].
//!
//! Permutations act on the right: `p.then(q)` applies `p` first.

pub mod canonical;
pub mod census;
pub mod cover;
pub mod diagram;
pub mod error;
pub mod families;
pub mod flags;
pub mod group_level;
pub mod invariants;
pub mod io;
pub mod ops;
pub mod perm;
pub mod symmetry;
pub mod verify;

pub use canonical::{canonical_form, canonical_relabel, is_isomorphic, CanonicalForm};
pub use cover::{
    lift_automorphism, orientable_double_cover, orientation_action, quotient_by,
    quotient_by_involution, DoubleCover, Orientation,
};
pub use error::{Error, Result};
pub use flags::{validate, FlagSystem, Kind, ValidationReport, Violation};
pub use invariants::{surface_invariants, Genus, SurfaceInvariants};
pub use perm::{CycleType, Permutation};
pub use symmetry::{
    automorphism_group, stability_report, symmetry_class, AutGroup, InstabilityIndex,
    StabilityReport, StabilitySummary, SymmetryClass,
};
