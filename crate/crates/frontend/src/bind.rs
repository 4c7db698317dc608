//! Name resolution and construction of kernel objects from a parsed session.

use crate::ast::*;
use crate::error::SyntaxError;
use crate::lexer::Loc;
use blowup_core::algebra::{MonomialOrder, PolyRing, Polynomial, PrimeField, DEFAULT_PRIME};
use blowup_core::groebner::QuotientRing;
use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

pub const MAX_CORPUS_VARS: u64 = 8;
pub const MAX_CORPUS_DEGREE: u64 = 6;
pub const MAX_CORPUS_COUNT: u64 = 10_000;

#[derive(Clone, Debug, Default)]
pub struct BindOptions {
    /// Replaces the characteristic of every declared ring.
    pub prime: Option<u32>,
}

/// One `check` or `invariants` statement, resolved.
#[derive(Clone, Debug)]
pub struct Instance {
    pub line: usize,
    pub quotient: Arc<QuotientRing>,
    pub gens: Vec<Polynomial>,
    pub reduction: Option<Vec<Polynomial>>,
    /// `None` for `invariants`; an empty set means every statement.
    pub ids: Option<BTreeSet<String>>,
    pub localization: Option<bool>,
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub line: usize,
    pub vars: usize,
    pub maxdeg: u32,
    pub count: usize,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub enum Item {
    Instance(Instance),
    Corpus(CorpusSpec),
}

#[derive(Clone, Debug)]
pub struct Program {
    pub items: Vec<Item>,
    /// Characteristic of the first declared ring, or the override.
    pub prime: u32,
}

struct Env {
    rings: HashMap<String, Arc<PolyRing>>,
    quotients: HashMap<String, Arc<QuotientRing>>,
    ideals: HashMap<String, (Arc<PolyRing>, Vec<Polynomial>)>,
    current: Option<Arc<PolyRing>>,
}

fn err<T>(loc: Loc, msg: impl Into<String>, hint: impl Into<String>) -> Result<T, SyntaxError> {
    Err(SyntaxError::new(loc, msg, hint))
}

pub fn bind(session: &Session, opts: &BindOptions) -> Result<Program, SyntaxError> {
    let mut env = Env { rings: HashMap::new(), quotients: HashMap::new(), ideals: HashMap::new(), current: None };
    let mut items = Vec::new();
    let mut prime = opts.prime;
    for stmt in &session.stmts {
        match &stmt.kind {
            StmtKind::Ring { name, args } => {
                let ring = ring_decl(args, stmt.loc, opts)?;
                prime.get_or_insert(ring.field().characteristic());
                env.quotients.insert(name.clone(), QuotientRing::polynomial_ring(&ring));
                env.rings.insert(name.clone(), ring.clone());
                env.ideals.remove(name);
                env.current = Some(ring);
            }
            StmtKind::Quotient { name, base, relations } => {
                let Some(ring) = env.rings.get(&base.name).cloned() else {
                    return err(base.loc, format!("`{}` is not a polynomial ring", base.name), "declare it first with `ring NAME = poly(...)`");
                };
                let rels = ideal_value(&env, &ring, relations)?;
                if let Some(f) = rels.iter().find(|f| !f.is_homogeneous()) {
                    return err(relations.loc(), format!("relation {f} is not homogeneous"), "only graded quotients are supported");
                }
                let q = QuotientRing::new(&ring, rels).map_err(|e| SyntaxError::new(relations.loc(), e.to_string(), ""))?;
                env.rings.remove(name);
                env.ideals.remove(name);
                env.quotients.insert(name.clone(), q);
            }
            StmtKind::Ideal { name, ideal } => {
                let Some(ring) = env.current.clone() else {
                    return err(stmt.loc, "ideal declared before any ring", "declare a ring first");
                };
                let gens = ideal_value(&env, &ring, ideal)?;
                env.rings.remove(name);
                env.quotients.remove(name);
                env.ideals.insert(name.clone(), (ring, gens));
            }
            StmtKind::Check { ids, args } => {
                let inst = instance(&env, args, stmt.loc, true)?;
                items.push(Item::Instance(Instance { ids: Some(ids.iter().cloned().collect()), ..inst }));
            }
            StmtKind::Invariants { args } => items.push(Item::Instance(instance(&env, args, stmt.loc, false)?)),
            StmtKind::Corpus { family, args } => {
                if family != "monomial" {
                    return err(stmt.loc, format!("unknown corpus family `{family}`"), "the available family is `monomial`");
                }
                let mut spec = CorpusSpec { line: stmt.loc.line, vars: 3, maxdeg: 3, count: 20, seed: 0 };
                for a in args {
                    let Some(n) = &a.name else {
                        return err(a.value.loc(), "corpus arguments are named", "write `vars=3, maxdeg=3, count=20, seed=7`");
                    };
                    let limit = match n.name.as_str() {
                        "vars" => MAX_CORPUS_VARS,
                        "maxdeg" => MAX_CORPUS_DEGREE,
                        "count" => MAX_CORPUS_COUNT,
                        "seed" => u64::MAX,
                        other => return err(n.loc, format!("unknown corpus argument `{other}`"), "use vars, maxdeg, count, seed"),
                    };
                    let Some(v) = a.value.as_int().filter(|&v| v <= limit && (v > 0 || n.name == "seed")) else {
                        return err(a.value.loc(), format!("`{}` needs an integer in 1..={limit}", n.name), "");
                    };
                    match n.name.as_str() {
                        "vars" => spec.vars = v as usize,
                        "maxdeg" => spec.maxdeg = v as u32,
                        "count" => spec.count = v as usize,
                        _ => spec.seed = v,
                    }
                }
                items.push(Item::Corpus(spec));
            }
        }
    }
    Ok(Program { items, prime: prime.unwrap_or(DEFAULT_PRIME) })
}

fn ring_decl(args: &[Arg], loc: Loc, opts: &BindOptions) -> Result<Arc<PolyRing>, SyntaxError> {
    let mut p = DEFAULT_PRIME;
    let mut vars: Option<Vec<String>> = None;
    let mut weights = None;
    let mut order = MonomialOrder::Grevlex;
    for a in args {
        let Some(n) = &a.name else {
            return err(a.value.loc(), "ring arguments are named", "write `poly(p=32003, vars=[x, y])`");
        };
        match n.name.as_str() {
            "p" => {
                let Some(v) = a.value.as_int().and_then(|v| u32::try_from(v).ok()) else {
                    return err(a.value.loc(), "`p` needs an integer", "");
                };
                p = v;
            }
            "vars" => {
                let Expr::List { items, .. } = &a.value else {
                    return err(a.value.loc(), "`vars` needs a list of names", "write `vars=[x, y, z]`");
                };
                let mut vs = Vec::new();
                for it in items {
                    let Some(id) = it.as_ident() else {
                        return err(it.loc(), "variable names must be identifiers", "");
                    };
                    if vs.contains(&id.name) {
                        return err(id.loc, format!("duplicate variable `{}`", id.name), "");
                    }
                    vs.push(id.name.clone());
                }
                vars = Some(vs);
            }
            "weights" => {
                let Expr::List { items, .. } = &a.value else {
                    return err(a.value.loc(), "`weights` needs a list of positive integers", "");
                };
                let mut ws = Vec::new();
                for it in items {
                    match it.as_int().and_then(|w| u32::try_from(w).ok()).filter(|&w| w > 0) {
                        Some(w) => ws.push(w),
                        None => return err(it.loc(), "weights are positive integers", ""),
                    }
                }
                weights = Some((ws, a.value.loc()));
            }
            "order" => {
                order = match a.value.as_ident().map(|i| i.name.as_str()) {
                    Some("grevlex") => MonomialOrder::Grevlex,
                    Some("lex") => MonomialOrder::Lex,
                    _ => return err(a.value.loc(), "unknown monomial order", "use `grevlex` or `lex`"),
                }
            }
            other => return err(n.loc, format!("unknown ring argument `{other}`"), "use p, vars, weights, order"),
        }
    }
    let Some(vars) = vars else {
        return err(loc, "ring without variables", "add `vars=[x, y, ...]`");
    };
    if vars.is_empty() || vars.len() > 16 {
        return err(loc, format!("a ring needs 1 to 16 variables, got {}", vars.len()), "");
    }
    if let Some((ws, wloc)) = &weights {
        if ws.len() != vars.len() {
            return err(*wloc, format!("{} weights for {} variables", ws.len(), vars.len()), "");
        }
    }
    let field = PrimeField::new(opts.prime.unwrap_or(p))
        .map_err(|e| SyntaxError::new(loc, e.to_string(), "use a prime such as 32003"))?;
    PolyRing::new(field, vars, weights.map(|w| w.0), order).map_err(|e| SyntaxError::new(loc, e.to_string(), ""))
}

fn ideal_value(env: &Env, ring: &Arc<PolyRing>, e: &IdealExpr) -> Result<Vec<Polynomial>, SyntaxError> {
    match e {
        IdealExpr::Named(id) => match env.ideals.get(&id.name) {
            Some((r, gens)) if **r == **ring => Ok(gens.clone()),
            Some(_) => err(id.loc, format!("ideal `{}` lives in a different ring", id.name), ""),
            None => err(id.loc, format!("undefined ideal `{}`", id.name), "declare it with `NAME = ideal(...)`"),
        },
        IdealExpr::Gens { gens, .. } => gens.iter().map(|g| poly_value(ring, g)).collect(),
    }
}

/// Largest exponent accepted in any monomial.
pub const MAX_EXPONENT: u64 = 4096;

fn max_exp(p: &Polynomial) -> u64 {
    p.terms().iter().flat_map(|(m, _)| m.exponents().iter().map(|&e| e as u64)).max().unwrap_or(0)
}

fn degree_error<T>(loc: Loc) -> Result<T, SyntaxError> {
    err(loc, "exponent too large", format!("exponents above {MAX_EXPONENT} are not supported"))
}

pub fn poly_value(ring: &Arc<PolyRing>, e: &PolyExpr) -> Result<Polynomial, SyntaxError> {
    Ok(match e {
        PolyExpr::Num { value, .. } => {
            let p = ring.field().characteristic() as u64;
            let v = value.bytes().fold(0u64, |acc, b| (acc * 10 + (b - b'0') as u64) % p);
            ring.constant(v as _)
        }
        PolyExpr::Var(id) => match ring.var_index(&id.name) {
            Some(i) => ring.var(i),
            None => {
                return err(id.loc, format!("unknown variable `{}`", id.name), format!("the ring has variables {}", ring.vars().join(", ")))
            }
        },
        PolyExpr::Neg(x, _) => -&poly_value(ring, x)?,
        PolyExpr::Sum { terms, .. } => {
            let mut acc = ring.zero();
            for (minus, t) in terms {
                let v = poly_value(ring, t)?;
                acc = if *minus { &acc - &v } else { &acc + &v };
            }
            acc
        }
        PolyExpr::Product { factors, loc } => {
            let mut acc = ring.one();
            for t in factors {
                let v = poly_value(ring, t)?;
                if max_exp(&acc) + max_exp(&v) > MAX_EXPONENT {
                    return degree_error(*loc);
                }
                acc = &acc * &v;
            }
            acc
        }
        PolyExpr::Pow { base, exp, loc } => {
            let b = poly_value(ring, base)?;
            if *exp > 64 && b.len() > 1 {
                return err(*loc, "exponent too large for a non-monomial base", "expand the power by hand or lower it");
            }
            if max_exp(&b) * *exp as u64 > MAX_EXPONENT {
                return degree_error(*loc);
            }
            b.pow(*exp)
        }
    })
}

fn bool_value(e: &Expr) -> Option<bool> {
    match e.as_ident()?.name.as_str() {
        "true" => Some(true),
        "false" => Some(false),
        _ => None,
    }
}

fn instance(env: &Env, args: &[Arg], loc: Loc, is_check: bool) -> Result<Instance, SyntaxError> {
    let positional: Vec<&Expr> = args.iter().filter(|a| a.name.is_none()).map(|a| &a.value).collect();
    let usage = if is_check { "write `check all(R, I)`" } else { "write `invariants(R, I)`" };
    if positional.len() != 2 {
        return err(loc, format!("expected a ring and an ideal, got {} positional arguments", positional.len()), usage);
    }
    let Some(rname) = positional[0].as_ident() else {
        return err(positional[0].loc(), "expected a ring name", usage);
    };
    let Some(quotient) = env.quotients.get(&rname.name).cloned() else {
        return err(rname.loc, format!("undefined ring `{}`", rname.name), "declare it with `ring` or as a quotient");
    };
    let ring = quotient.ambient().clone();
    let ideal_of = |e: &Expr| -> Result<Vec<Polynomial>, SyntaxError> {
        match e {
            Expr::Ideal(ie) => ideal_value(env, &ring, ie),
            Expr::Poly(PolyExpr::Var(id)) => ideal_value(env, &ring, &IdealExpr::Named(id.clone())),
            other => err(other.loc(), "expected an ideal", "use a name or `ideal(...)`"),
        }
    };
    let gens = ideal_of(positional[1])?;
    if gens.iter().all(|g| quotient.reduce(g).is_ok_and(|r| r.is_zero())) {
        return err(positional[1].loc(), "the ideal is zero in the ring", "");
    }
    if let Some(g) = gens.iter().find(|g| !g.is_zero() && !g.is_homogeneous()) {
        return err(positional[1].loc(), format!("generator {g} is not homogeneous"), "the blowup algebra is built for graded ideals");
    }
    let mut inst = Instance { line: loc.line, quotient, gens, reduction: None, ids: None, localization: None, seed: None };
    for a in args {
        let Some(n) = &a.name else { continue };
        match n.name.as_str() {
            "J" => inst.reduction = Some(ideal_of(&a.value)?),
            "localization" if is_check => match bool_value(&a.value) {
                Some(b) => inst.localization = Some(b),
                None => return err(a.value.loc(), "`localization` needs `true` or `false`", ""),
            },
            "seed" => match a.value.as_int() {
                Some(s) => inst.seed = Some(s),
                None => return err(a.value.loc(), "`seed` needs a nonnegative integer", ""),
            },
            other => {
                let known = if is_check { "J, localization, seed" } else { "J, seed" };
                return err(n.loc, format!("unknown argument `{other}`"), format!("use {known}"));
            }
        }
    }
    Ok(inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_only;

    fn bind_src(src: &str) -> Result<Program, SyntaxError> {
        bind(&parse_only(src).unwrap(), &BindOptions::default())
    }

    #[test]
    fn resolves_names() {
        let p = bind_src(
            "ring S = poly(p=101, vars=[x,y]);\nR = S / ideal(x^2);\nI = ideal(x, y);\ncheck all(R, I, J=ideal(y), localization=false);",
        )
        .unwrap();
        assert_eq!(p.prime, 101);
        let Item::Instance(i) = &p.items[0] else { panic!() };
        assert_eq!(i.gens.len(), 2);
        assert_eq!(i.reduction.as_ref().unwrap().len(), 1);
        assert_eq!(i.localization, Some(false));
        assert!(i.ids.as_ref().unwrap().is_empty());
    }

    #[test]
    fn binding_errors() {
        let e = bind_src("ring S = poly(vars=[x]);\nI = ideal(x + z);").unwrap_err();
        assert_eq!((e.loc.line, e.loc.col), (2, 15));
        let e = bind_src("ring S = poly(vars=[x]);\ncheck all(R, ideal(x));").unwrap_err();
        assert!(e.message.contains("undefined ring"));
        let e = bind_src("ring S = poly(p=100, vars=[x]);").unwrap_err();
        assert!(e.hint.contains("prime"));
        let e = bind_src("ring S = poly(vars=[x,y]);\ninvariants(S, ideal(x + y^2));").unwrap_err();
        assert!(e.message.contains("homogeneous"));
        let e = bind_src("ring S = poly(vars=[x]);\ncheck all(S, ideal(x), localization=1);").unwrap_err();
        assert!(e.message.contains("localization"));
    }

    #[test]
    fn exponent_limits() {
        assert!(bind_src("ring S = poly(vars=[x]);\nI = ideal(x^4000*x^4000);").is_err());
        assert!(bind_src("ring S = poly(vars=[x]);\nI = ideal((x^100)^100);").is_err());
        assert!(bind_src("ring S = poly(vars=[x]);\nI = ideal(x^4096);").is_ok());
    }

    #[test]
    fn prime_override_and_large_literals() {
        let s = parse_only("ring S = poly(p=7, vars=[x]);\ninvariants(S, ideal(123456789012345678901234567890*x));").unwrap();
        let p = bind(&s, &BindOptions { prime: Some(32003) }).unwrap();
        assert_eq!(p.prime, 32003);
        let Item::Instance(i) = &p.items[0] else { panic!() };
        assert_eq!(i.quotient.ambient().field().characteristic(), 32003);
        let c = i.gens[0].leading_coeff().unwrap();
        let expect = "123456789012345678901234567890".bytes().fold(0u64, |a, b| (a * 10 + (b - b'0') as u64) % 32003);
        assert_eq!(c as u64, expect);
    }
}
