use crate::ast::*;
use crate::error::SyntaxError;
use crate::lexer::{tokenize, Loc, Tok, Token};

/// Lexes, parses and binds a session. Binding checks that every name is
/// defined before use and every variable belongs to its ring.
pub fn parse_session(src: &str) -> Result<Session, SyntaxError> {
    let session = parse_only(src)?;
    crate::bind::bind(&session, &crate::bind::BindOptions::default())?;
    Ok(session)
}

/// Lexes and parses without binding.
pub fn parse_only(src: &str) -> Result<Session, SyntaxError> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, pos: 0, depth: 0 };
    let mut stmts = Vec::new();
    while !p.at_eof() {
        stmts.push(p.stmt()?);
    }
    Ok(Session { stmts })
}

const MAX_NESTING: usize = 200;

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    depth: usize,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(s) => format!("number {s}"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::Eof => "end of input".into(),
    }
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn at_eof(&self) -> bool {
        self.peek().tok == Tok::Eof
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn is_kw(&self, kw: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == kw)
    }

    fn err<T>(&self, msg: impl Into<String>, hint: impl Into<String>) -> Result<T, SyntaxError> {
        Err(SyntaxError::new(self.peek().loc, msg, hint))
    }

    fn expect(&mut self, c: char, hint: &str) -> Result<Loc, SyntaxError> {
        if self.is_sym(c) {
            Ok(self.bump().loc)
        } else {
            self.err(format!("expected `{c}`, found {}", describe(&self.peek().tok)), hint)
        }
    }

    fn ident(&mut self, what: &str) -> Result<Ident, SyntaxError> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let name = s.clone();
                let loc = self.bump().loc;
                Ok(Ident { name, loc })
            }
            t => self.err(format!("expected {what}, found {}", describe(t)), "names start with a letter"),
        }
    }

    fn end(&mut self) -> Result<(), SyntaxError> {
        self.expect(';', "statements end with `;`").map(|_| ())
    }

    fn stmt(&mut self) -> Result<Stmt, SyntaxError> {
        let loc = self.peek().loc;
        let kind = if self.is_kw("ring") {
            self.bump();
            let name = self.ident("a ring name")?.name;
            self.expect('=', "write `ring S = poly(vars=[x, y]);`")?;
            if !self.is_kw("poly") {
                return self.err(format!("expected `poly`, found {}", describe(&self.peek().tok)), "write `ring S = poly(vars=[x, y]);`");
            }
            self.bump();
            let args = self.args()?;
            StmtKind::Ring { name, args }
        } else if self.is_kw("check") {
            self.bump();
            let ids = self.check_ids()?;
            let args = self.args()?;
            StmtKind::Check { ids, args }
        } else if self.is_kw("invariants") && self.peek_at(1) == &Tok::Sym('(') {
            self.bump();
            StmtKind::Invariants { args: self.args()? }
        } else if self.is_kw("corpus") {
            self.bump();
            let family = self.ident("a corpus family")?.name;
            StmtKind::Corpus { family, args: self.args()? }
        } else {
            let name = self.ident("a statement")?;
            if !self.is_sym('=') {
                return self.err(
                    format!("expected `=` after `{}`, found {}", name.name, describe(&self.peek().tok)),
                    "statements are `ring`, `check`, `invariants`, `corpus` or assignments",
                );
            }
            self.bump();
            if self.is_kw("ideal") {
                StmtKind::Ideal { name: name.name, ideal: self.ideal_expr()? }
            } else {
                let base = self.ident("a ring name or `ideal(...)`")?;
                self.expect('/', "a quotient is written `R = S / ideal(...)`")?;
                let relations = self.ideal_expr()?;
                StmtKind::Quotient { name: name.name, base, relations }
            }
        };
        self.end()?;
        Ok(Stmt { kind, loc })
    }

    /// `all` or a comma separated list of statement ids. An id is the source
    /// text of adjacent tokens, so `thm-1.1a` lexes as several tokens.
    fn check_ids(&mut self) -> Result<Vec<String>, SyntaxError> {
        if self.is_kw("all") {
            self.bump();
            return Ok(Vec::new());
        }
        let mut ids = Vec::new();
        loop {
            let first = self.peek().clone();
            if !matches!(first.tok, Tok::Ident(_)) {
                return self.err(format!("expected a statement id, found {}", describe(&first.tok)), "use `all` or ids such as `thm-1.5`");
            }
            let mut text = String::new();
            let mut next_off = first.loc.offset;
            loop {
                let t = self.peek();
                if t.loc.offset != next_off || matches!(t.tok, Tok::Eof | Tok::Sym('(') | Tok::Sym(',')) {
                    break;
                }
                let t = self.bump();
                next_off = t.loc.offset + t.len;
                match t.tok {
                    Tok::Ident(s) | Tok::Int(s) => text.push_str(&s),
                    Tok::Sym(c) => text.push(c),
                    Tok::Eof => unreachable!(),
                }
            }
            ids.push((text, first.loc));
            if self.is_sym(',') {
                self.bump();
            } else {
                break;
            }
        }
        for (id, loc) in &ids {
            if !blowup_core::theorems::STATEMENT_IDS.contains(&id.as_str()) {
                return Err(SyntaxError::new(
                    *loc,
                    format!("unknown statement id `{id}`"),
                    format!("known ids: {}", blowup_core::theorems::STATEMENT_IDS.join(", ")),
                ));
            }
        }
        Ok(ids.into_iter().map(|(s, _)| s).collect())
    }

    fn args(&mut self) -> Result<Vec<Arg>, SyntaxError> {
        self.expect('(', "arguments are written in parentheses")?;
        let mut out = Vec::new();
        if self.is_sym(')') {
            self.bump();
            return Ok(out);
        }
        loop {
            let name = if matches!(self.peek().tok, Tok::Ident(_)) && self.peek_at(1) == &Tok::Sym('=') {
                let id = self.ident("an argument name")?;
                self.bump();
                Some(id)
            } else {
                None
            };
            let value = self.expr()?;
            out.push(Arg { name, value });
            if self.is_sym(',') {
                self.bump();
                continue;
            }
            self.expect(')', "separate arguments with `,` and close with `)`")?;
            return Ok(out);
        }
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        if self.is_kw("ideal") && self.peek_at(1) == &Tok::Sym('(') {
            return Ok(Expr::Ideal(self.ideal_expr()?));
        }
        if self.is_sym('[') {
            if self.depth >= MAX_NESTING {
                return self.err("lists nested too deeply", format!("at most {MAX_NESTING} levels are allowed"));
            }
            self.depth += 1;
            let loc = self.bump().loc;
            let mut items = Vec::new();
            if !self.is_sym(']') {
                loop {
                    items.push(self.expr()?);
                    if self.is_sym(',') {
                        self.bump();
                    } else {
                        break;
                    }
                }
            }
            self.expect(']', "close the list with `]`")?;
            self.depth -= 1;
            return Ok(Expr::List { items, loc });
        }
        Ok(Expr::Poly(self.poly()?))
    }

    fn ideal_expr(&mut self) -> Result<IdealExpr, SyntaxError> {
        if !self.is_kw("ideal") {
            return Ok(IdealExpr::Named(self.ident("an ideal")?));
        }
        let loc = self.bump().loc;
        self.expect('(', "write `ideal(f1, f2, ...)`")?;
        let mut gens = Vec::new();
        if !self.is_sym(')') {
            loop {
                gens.push(self.poly()?);
                if self.is_sym(',') {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(')', "separate generators with `,` and close with `)`")?;
        Ok(IdealExpr::Gens { gens, loc })
    }

    fn poly(&mut self) -> Result<PolyExpr, SyntaxError> {
        let loc = self.peek().loc;
        let mut terms = vec![(false, self.term()?)];
        while self.is_sym('+') || self.is_sym('-') {
            let minus = self.bump().tok == Tok::Sym('-');
            terms.push((minus, self.term()?));
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap().1 } else { PolyExpr::Sum { terms, loc } })
    }

    fn term(&mut self) -> Result<PolyExpr, SyntaxError> {
        let loc = self.peek().loc;
        let mut factors = vec![self.unary()?];
        loop {
            if self.is_sym('*') {
                self.bump();
                factors.push(self.unary()?);
            } else if matches!(self.peek().tok, Tok::Ident(_) | Tok::Int(_)) || self.is_sym('(') {
                return self.err(format!("unexpected {}", describe(&self.peek().tok)), "write products with `*`, as in `2*x*y`");
            } else {
                return Ok(if factors.len() == 1 { factors.pop().unwrap() } else { PolyExpr::Product { factors, loc } });
            }
        }
    }

    fn unary(&mut self) -> Result<PolyExpr, SyntaxError> {
        if self.is_sym('-') {
            if self.depth >= MAX_NESTING {
                return self.err("too many signs in a row", "");
            }
            let loc = self.bump().loc;
            self.depth += 1;
            let inner = self.unary();
            self.depth -= 1;
            return Ok(PolyExpr::Neg(Box::new(inner?), loc));
        }
        let base = self.atom()?;
        if self.is_sym('^') {
            let loc = self.bump().loc;
            let t = self.peek().clone();
            let exp = match &t.tok {
                Tok::Int(s) => s.parse::<u32>().ok().filter(|&e| e <= u16::MAX as u32),
                _ => None,
            };
            let Some(exp) = exp else {
                return self.err(format!("expected an exponent, found {}", describe(&t.tok)), "exponents are nonnegative integers below 65536");
            };
            self.bump();
            return Ok(PolyExpr::Pow { base: Box::new(base), exp, loc });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<PolyExpr, SyntaxError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Int(value) => {
                self.bump();
                Ok(PolyExpr::Num { value, loc: t.loc })
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(PolyExpr::Var(Ident { name, loc: t.loc }))
            }
            Tok::Sym('(') => {
                if self.depth >= MAX_NESTING {
                    return self.err("parentheses nested too deeply", format!("at most {MAX_NESTING} levels are allowed"));
                }
                self.bump();
                self.depth += 1;
                let e = self.poly();
                self.depth -= 1;
                let e = e?;
                self.expect(')', "unbalanced parenthesis")?;
                Ok(e)
            }
            other => self.err(format!("expected a polynomial, found {}", describe(&other)), "polynomials use + - * ^, integers and variable names"),
        }
    }
}
