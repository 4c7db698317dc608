//! Exact arithmetic over `F_p` and sparse multivariate polynomials.

pub mod field;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod ring;
pub mod vector;

pub use field::{Coeff, PrimeField, DEFAULT_PRIME};
pub use monomial::{monomials_of_degree, Exp, Monomial};
pub use order::{BlockKind, MonomialOrder, OrderBlock};
pub use poly::{ArithOp, Polynomial, WeightedDegree};
pub use ring::PolyRing;
pub use vector::{cmp_pos, VTerm, Vector};
pub(crate) use ring::same_ring;
