//! Session language and runner for the blowup toolkit.
//!
//! A session declares rings and ideals and asks for invariants or theorem
//! checks:
//!
//! ```text
//! ring S = poly(p=32003, vars=[x, y, t1, t2]);
//! R = S / ideal(x^3*y);
//! I = ideal(x*y, t1);
//! check all(R, I, J=ideal(t1));
//! ```

pub mod ast;
pub mod bind;
pub mod corpus;
pub mod error;
pub mod lexer;
pub mod parser;
pub mod report;
pub mod runner;

pub use error::{FrontendError, SyntaxError};
pub use parser::parse_session;
pub use report::RunReport;
pub use runner::{run_source, RunOptions};
