//! Blow-up algebras of graded ideals over prime fields.
//!
//! The crate is layered: [`algebra`] supplies exact arithmetic, [`groebner`]
//! the ideal operations, [`homology`] resolutions and Koszul complexes,
//! [`blowup`] the Rees algebra and its quotients, [`invariants`] the numbers
//! attached to a pair `(R, I)`, and [`theorems`] the depth bounds checked
//! against them.

pub mod algebra;
pub mod blowup;
pub mod error;
pub mod groebner;
pub mod homology;
pub mod invariants;
pub mod theorems;

pub use error::{Error, Result};
