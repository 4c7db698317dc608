use super::field::Coeff;
use super::monomial::Monomial;
use super::ring::{same_ring, PolyRing};
use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Weighted degree of a nonzero polynomial. For non-homogeneous input `value`
/// is the maximum over the terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightedDegree {
    pub value: u32,
    pub homogeneous: bool,
}

/// Sparse polynomial; terms are strictly descending in the ring order and carry
/// nonzero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: Arc<PolyRing>) -> Self {
        Polynomial { ring, terms: Vec::new() }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and
    /// drops zeros.
    pub fn from_terms(ring: Arc<PolyRing>, mut terms: Vec<(Monomial, Coeff)>) -> Self {
        let f = *ring.field();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % f.characteristic();
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = f.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial { ring, terms: out }
    }

    /// Trusted constructor: terms already sorted and nonzero.
    pub(crate) fn from_sorted(ring: Arc<PolyRing>, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Polynomial { ring, terms }
    }

    #[inline]
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<Coeff> {
        self.terms.first().map(|t| t.1)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn arith(&self, other: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(match op {
            ArithOp::Add => self.merge(other, false),
            ArithOp::Sub => self.merge(other, true),
            ArithOp::Mul => self.mul_unchecked(other),
        })
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let f = *self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let adj = |c: Coeff| if negate { f.neg(c) } else { c };
        while i < a.len() && j < b.len() {
            match self.ring.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), adj(b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { f.sub(a[i].1, b[j].1) } else { f.add(a[i].1, b[j].1) };
                    if c != 0 {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| (t.0.clone(), adj(t.1))));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.ring.clone());
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Polynomial::zero(self.ring.clone());
        for (m, c) in &small.terms {
            acc = acc.merge(&big.mul_term(m, *c), false);
        }
        acc
    }

    /// Multiplies by `c * m`; order is preserved so no sorting is needed.
    pub fn mul_term(&self, m: &Monomial, c: Coeff) -> Polynomial {
        let f = *self.ring.field();
        if c.is_multiple_of(f.characteristic()) {
            return Polynomial::zero(self.ring.clone());
        }
        let terms = self.terms.iter().map(|(tm, tc)| (tm.mul(m), f.mul(*tc, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: Coeff) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.ring.field().neg(1))
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.field().inv(c)),
        }
    }

    pub fn weighted_degree(&self) -> Option<WeightedDegree> {
        let mut degs = self.terms.iter().map(|t| self.ring.degree(&t.0));
        let first = degs.next()?;
        let (mut max, mut homogeneous) = (first, true);
        for d in degs {
            if d != first {
                homogeneous = false;
            }
            max = max.max(d);
        }
        Some(WeightedDegree { value: max, homogeneous })
    }

    /// Zero counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.weighted_degree().is_none_or(|d| d.homogeneous)
    }

    /// Homogeneous with respect to an arbitrary weight vector.
    pub fn is_homogeneous_for(&self, weights: &[u32]) -> bool {
        let mut it = self.terms.iter().map(|t| t.0.weighted_degree(weights));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Re-embeds into `target`, sending variable `i` to variable `var_map[i]`.
    pub fn map_vars(&self, target: &Arc<PolyRing>, var_map: &[usize]) -> Polynomial {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = Monomial::one(n);
                for (i, &x) in m.exponents().iter().enumerate() {
                    if x > 0 {
                        e.exps_mut()[var_map[i]] += x;
                    }
                }
                (e, *c)
            })
            .collect();
        Polynomial::from_terms(target.clone(), terms)
    }

    /// Ring homomorphism sending variable `i` to `images[i]` (all in `target`).
    pub fn substitute(&self, target: &Arc<PolyRing>, images: &[Polynomial]) -> Polynomial {
        let mut acc = target.zero();
        let mut pow_cache: Vec<Vec<Polynomial>> = vec![Vec::new(); images.len()];
        for (m, c) in &self.terms {
            let mut t = target.constant(*c);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut pow_cache[i];
                if cache.is_empty() {
                    cache.push(target.one());
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul_unchecked(&images[i]);
                    cache.push(next);
                }
                t = t.mul_unchecked(&cache[e as usize]);
            }
            acc = acc.merge(&t, false);
        }
        acc
    }

    /// Exact quotient `self / divisor`; `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (dm, dc) = divisor.leading_term()?.clone();
        let f = *self.ring.field();
        let inv = f.inv(dc);
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.ring.clone());
        while let Some((m, c)) = rem.leading_term().cloned() {
            let q = m.div(&dm)?;
            let qc = f.mul(c, inv);
            quot = quot.merge(&self.ring.term(q.clone(), qc), false);
            rem = rem.merge(&divisor.mul_term(&q, qc), true);
        }
        Some(quot)
    }

    /// Formats with the ring's variable names.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = self.ring.field();
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let sc = f.signed(*c);
            if k == 0 {
                if sc < 0 {
                    s.push('-');
                }
            } else if sc < 0 {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let a = sc.unsigned_abs();
            let mut factors: Vec<String> = Vec::new();
            if a != 1 || m.is_one() {
                factors.push(a.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            s.push_str(&factors.join("*"));
        }
        s
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(self.ring.vars()))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

macro_rules! impl_op {
    ($tr:ident, $m:ident, $op:expr) => {
        impl std::ops::$tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                self.arith(rhs, $op).expect("polynomials from different rings")
            }
        }
        impl std::ops::$tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}

impl_op!(Add, add, ArithOp::Add);
impl_op!(Sub, sub, ArithOp::Sub);
impl_op!(Mul, mul, ArithOp::Mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::PrimeField;

    fn ring(p: u32, vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::standard(PrimeField::new(p).unwrap(), vars)
    }

    #[test]
    fn additive_identity() {
        let r = ring(32003, &["x", "y"]);
        let f = &r.var(0) * &r.var(1) + r.constant(3);
        assert_eq!(&f + &r.zero(), f);
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(32003, &["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let lhs = &(&x + &y) * &(&x - &y);
        let rhs = &x.pow(2) - &y.pow(2);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "x^2 - y^2");
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r1 = ring(32003, &["x", "y"]);
        let r2 = ring(32003, &["x", "z"]);
        assert!(matches!(r1.var(0).arith(&r2.var(0), ArithOp::Add), Err(Error::RingMismatch)));
    }

    #[test]
    fn degrees() {
        let r = ring(32003, &["x", "y"]);
        let f = r.term(Monomial::from_exponents(&[3, 1]), 1);
        assert_eq!(f.weighted_degree(), Some(WeightedDegree { value: 4, homogeneous: true }));
        assert_eq!(r.zero().weighted_degree(), None);
        let g = &f + &r.var(0);
        assert_eq!(g.weighted_degree(), Some(WeightedDegree { value: 4, homogeneous: false }));
    }

    #[test]
    fn exact_division() {
        let r = ring(32003, &["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let f = &(&x + &y) * &(&x.pow(2) - &y);
        assert_eq!(f.exact_div(&(&x + &y)).unwrap(), &x.pow(2) - &y);
        assert!(x.exact_div(&y).is_none());
    }

    #[test]
    fn substitution() {
        let r = ring(32003, &["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let f = &x.pow(2) + &y;
        // x -> y, y -> x*y
        let g = f.substitute(&r, &[y.clone(), &x * &y]);
        assert_eq!(g, &y.pow(2) + &(&x * &y));
    }
}
