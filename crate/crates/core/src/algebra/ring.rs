use super::field::{Coeff, PrimeField};
use super::monomial::Monomial;
use super::order::{BlockKind, MonomialOrder};
use super::poly::Polynomial;
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::sync::Arc;

/// Polynomial ring `F_p[x_1..x_n]` with a positive grading and a monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: PrimeField,
    vars: Vec<String>,
    weights: Vec<u32>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: PrimeField, vars: Vec<String>, weights: Option<Vec<u32>>, order: MonomialOrder) -> Result<Arc<Self>> {
        let weights = weights.unwrap_or_else(|| vec![1; vars.len()]);
        if weights.len() != vars.len() || weights.contains(&0) {
            return Err(Error::InvalidWeights);
        }
        if !order.validate(vars.len()) {
            return Err(Error::InvalidOrder(order.name()));
        }
        if vars.len() > 16 {
            return Err(Error::TooManyVariables(vars.len()));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, weights, order }))
    }

    /// Standard-graded grevlex ring.
    pub fn standard(field: PrimeField, vars: &[&str]) -> Arc<Self> {
        Self::new(field, vars.iter().map(|s| s.to_string()).collect(), None, MonomialOrder::Grevlex)
            .expect("standard ring")
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    #[inline]
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b, &self.weights)
    }

    #[inline]
    pub fn degree(&self, m: &Monomial) -> u32 {
        m.weighted_degree(&self.weights)
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial {
        Polynomial::zero(self.clone())
    }

    pub fn one(self: &Arc<Self>) -> Polynomial {
        self.constant(1)
    }

    pub fn constant(self: &Arc<Self>, c: Coeff) -> Polynomial {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Polynomial {
        self.term(Monomial::var(self.nvars(), i, 1), 1)
    }

    pub fn term(self: &Arc<Self>, m: Monomial, c: Coeff) -> Polynomial {
        Polynomial::from_terms(self.clone(), vec![(m, c)])
    }

    /// Same variables and weights, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Self>> {
        Self::new(self.field, self.vars.clone(), Some(self.weights.clone()), order)
    }

    /// Ring with extra variables prepended that dominate in a block order.
    /// Returns the new ring; old variable `i` becomes `i + names.len()`.
    pub fn with_leading_block(&self, names: &[String], weights: &[u32], kind: BlockKind) -> Result<Arc<Self>> {
        let mut vars: Vec<String> = names.to_vec();
        vars.extend(self.vars.iter().cloned());
        let mut w = weights.to_vec();
        w.extend(self.weights.iter().copied());
        let order = MonomialOrder::eliminating(names.len(), kind, self.nvars(), &self.order);
        Self::new(self.field, vars, Some(w), order)
    }

    /// A fresh variable name not clashing with this ring.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        let mut k = 0;
        while self.vars.contains(&name) {
            k += 1;
            name = format!("{base}{k}");
        }
        name
    }

    pub fn describe(&self) -> String {
        let mut s = format!("F_{}[{}]", self.field.characteristic(), self.vars.join(","));
        if self.weights.iter().any(|&w| w != 1) {
            let ws: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
            s.push_str(&format!(" weights=({})", ws.join(",")));
        }
        s
    }
}

#[inline]
pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
