//! Syntax tree of a session file.

use crate::lexer::Loc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Session {
    pub stmts: Vec<Stmt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stmt {
    pub kind: StmtKind,
    pub loc: Loc,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StmtKind {
    /// `ring S = poly(p=.., vars=[..], weights=[..], order=..);`
    Ring { name: String, args: Vec<Arg> },
    /// `R = S / ideal(..);`
    Quotient { name: String, base: Ident, relations: IdealExpr },
    /// `I = ideal(..);`
    Ideal { name: String, ideal: IdealExpr },
    /// `check all(..);` or `check thm-1.5, rem-1.2 (..);`. An empty list means all.
    Check { ids: Vec<String>, args: Vec<Arg> },
    /// `invariants(R, I);`
    Invariants { args: Vec<Arg> },
    /// `corpus monomial(vars=.., maxdeg=.., count=.., seed=..);`
    Corpus { family: String, args: Vec<Arg> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ident {
    pub name: String,
    pub loc: Loc,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealExpr {
    Named(Ident),
    Gens { gens: Vec<PolyExpr>, loc: Loc },
}

impl IdealExpr {
    pub fn loc(&self) -> Loc {
        match self {
            IdealExpr::Named(id) => id.loc,
            IdealExpr::Gens { loc, .. } => *loc,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arg {
    pub name: Option<Ident>,
    pub value: Expr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Poly(PolyExpr),
    Ideal(IdealExpr),
    List { items: Vec<Expr>, loc: Loc },
}

impl Expr {
    pub fn loc(&self) -> Loc {
        match self {
            Expr::Poly(p) => p.loc(),
            Expr::Ideal(i) => i.loc(),
            Expr::List { loc, .. } => *loc,
        }
    }

    /// The identifier, when the expression is a bare name.
    pub fn as_ident(&self) -> Option<&Ident> {
        match self {
            Expr::Poly(PolyExpr::Var(id)) => Some(id),
            _ => None,
        }
    }

    pub fn as_int(&self) -> Option<u64> {
        match self {
            Expr::Poly(PolyExpr::Num { value, .. }) => value.parse().ok(),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyExpr {
    /// Decimal literal, kept as text so it can be reduced mod `p` later.
    Num { value: String, loc: Loc },
    Var(Ident),
    Neg(Box<PolyExpr>, Loc),
    /// `t_0 ± t_1 ± …`; the flag is true for subtraction.
    Sum { terms: Vec<(bool, PolyExpr)>, loc: Loc },
    Product { factors: Vec<PolyExpr>, loc: Loc },
    Pow { base: Box<PolyExpr>, exp: u32, loc: Loc },
}

impl PolyExpr {
    pub fn loc(&self) -> Loc {
        match self {
            PolyExpr::Num { loc, .. }
            | PolyExpr::Neg(_, loc)
            | PolyExpr::Sum { loc, .. }
            | PolyExpr::Product { loc, .. }
            | PolyExpr::Pow { loc, .. } => *loc,
            PolyExpr::Var(id) => id.loc,
        }
    }

    pub fn visit_vars<'a>(&'a self, f: &mut impl FnMut(&'a Ident)) {
        match self {
            PolyExpr::Num { .. } => {}
            PolyExpr::Var(id) => f(id),
            PolyExpr::Neg(e, _) => e.visit_vars(f),
            PolyExpr::Sum { terms, .. } => terms.iter().for_each(|(_, t)| t.visit_vars(f)),
            PolyExpr::Product { factors, .. } => factors.iter().for_each(|t| t.visit_vars(f)),
            PolyExpr::Pow { base, .. } => base.visit_vars(f),
        }
    }
}
