//! Gröbner bases and the ideal operations built on them.

pub mod engine;
pub mod ideal;
pub mod quotient;

pub use engine::{groebner, reduce, GbOutput};
pub use ideal::{Ideal, SATURATION_CAP};
pub use quotient::{Powers, QuotientRing};
