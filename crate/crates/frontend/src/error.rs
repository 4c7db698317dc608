use crate::lexer::Loc;
use std::fmt;

/// A lexical, syntactic or binding error at a source location.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub loc: Loc,
    pub message: String,
    pub hint: String,
}

impl SyntaxError {
    pub fn new(loc: Loc, message: impl Into<String>, hint: impl Into<String>) -> Self {
        SyntaxError { loc, message: message.into(), hint: hint.into() }
    }
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.loc.line, self.loc.col, self.message)?;
        if !self.hint.is_empty() {
            write!(f, "\n  hint: {}", self.hint)?;
        }
        Ok(())
    }
}

impl std::error::Error for SyntaxError {}

#[derive(Debug, thiserror::Error)]
pub enum FrontendError {
    #[error("{0}")]
    Syntax(#[from] SyntaxError),
    #[error("{0}")]
    Kernel(#[from] blowup_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}
