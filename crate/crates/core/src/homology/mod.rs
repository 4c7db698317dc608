//! Graded free modules, syzygies, minimal resolutions and Koszul complexes.

pub mod free;
pub mod hilbert;
pub mod koszul;
pub mod local_cohomology;
pub mod resolution;
pub mod syzygy;

pub use free::{GradedFreeModule, ModuleMap};
pub use hilbert::StandardMonomials;
pub use koszul::{koszul_depth, koszul_grade, koszul_group, KoszulGroup, Variance};
pub use local_cohomology::{a_invariants, koszul_homology_ends, regularity_from_koszul, LocalCohomologyData};
pub use resolution::{depth_module, free_resolution, BettiTable, FreeResolution};
pub use syzygy::{minimal_generators, preimage, syzygy};
