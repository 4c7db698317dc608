//! Elements of free modules `S^r`, stored as sparse term lists.
//!
//! Terms are ordered position-over-term: a smaller component index is larger,
//! ties are broken by the ring's monomial order. A polynomial is a vector of
//! rank one, so the Gröbner engine only ever handles vectors.

use super::field::Coeff;
use super::monomial::Monomial;
use super::poly::Polynomial;
use super::ring::PolyRing;
use std::cmp::Ordering;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VTerm {
    pub comp: u32,
    pub mon: Monomial,
    pub coeff: Coeff,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Vector {
    terms: Vec<VTerm>,
}

#[inline]
pub fn cmp_pos(ring: &PolyRing, ca: u32, ma: &Monomial, cb: u32, mb: &Monomial) -> Ordering {
    match cb.cmp(&ca) {
        Ordering::Equal => ring.cmp(ma, mb),
        o => o,
    }
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn from_terms(ring: &PolyRing, mut terms: Vec<VTerm>) -> Self {
        let f = *ring.field();
        terms.sort_by(|a, b| cmp_pos(ring, b.comp, &b.mon, a.comp, &a.mon));
        let mut out: Vec<VTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.comp == t.comp && last.mon == t.mon => last.coeff = f.add(last.coeff, t.coeff),
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coeff != 0);
        Vector { terms: out }
    }

    pub(crate) fn from_sorted(terms: Vec<VTerm>) -> Self {
        Vector { terms }
    }

    pub fn from_poly(p: &Polynomial, comp: u32) -> Self {
        Vector {
            terms: p.terms().iter().map(|(m, c)| VTerm { comp, mon: m.clone(), coeff: *c }).collect(),
        }
    }

    pub fn from_components(comps: &[Polynomial]) -> Self {
        let mut terms = Vec::new();
        for (i, p) in comps.iter().enumerate() {
            terms.extend(p.terms().iter().map(|(m, c)| VTerm { comp: i as u32, mon: m.clone(), coeff: *c }));
        }
        Vector { terms }
    }

    pub fn unit(ring: &PolyRing, comp: u32) -> Self {
        Vector { terms: vec![VTerm { comp, mon: Monomial::one(ring.nvars()), coeff: 1 }] }
    }

    #[inline]
    pub fn terms(&self) -> &[VTerm] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<VTerm> {
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

    #[inline]
    pub fn lead(&self) -> Option<&VTerm> {
        self.terms.first()
    }

    pub fn component(&self, ring: &Arc<PolyRing>, comp: u32) -> Polynomial {
        let terms = self.terms.iter().filter(|t| t.comp == comp).map(|t| (t.mon.clone(), t.coeff)).collect();
        Polynomial::from_sorted(ring.clone(), terms)
    }

    pub fn components(&self, ring: &Arc<PolyRing>, rank: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.comp as usize].push((t.mon.clone(), t.coeff));
        }
        buckets.into_iter().map(|b| Polynomial::from_sorted(ring.clone(), b)).collect()
    }

    /// Indices of nonzero components.
    pub fn support(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.terms.iter().map(|t| t.comp).collect();
        v.dedup();
        v
    }

    /// Weighted degree of the leading term plus the twist of its component.
    pub fn degree(&self, ring: &PolyRing, twists: &[i64]) -> Option<i64> {
        self.lead().map(|t| ring.degree(&t.mon) as i64 + twists[t.comp as usize])
    }

    pub fn is_homogeneous(&self, ring: &PolyRing, twists: &[i64]) -> bool {
        let mut it = self.terms.iter().map(|t| ring.degree(&t.mon) as i64 + twists[t.comp as usize]);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// `self + c * m * other`.
    pub fn add_scaled(&self, ring: &PolyRing, other: &Vector, c: Coeff, m: &Monomial) -> Vector {
        let f = *ring.field();
        if c == 0 {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut ai = self.terms.iter().peekable();
        let mut bi = other
            .terms
            .iter()
            .map(|t| VTerm { comp: t.comp, mon: t.mon.mul(m), coeff: f.mul(t.coeff, c) })
            .peekable();
        loop {
            match (ai.peek(), bi.peek()) {
                (Some(x), Some(y)) => match cmp_pos(ring, x.comp, &x.mon, y.comp, &y.mon) {
                    Ordering::Greater => out.push(ai.next().unwrap().clone()),
                    Ordering::Less => out.push(bi.next().unwrap()),
                    Ordering::Equal => {
                        let s = f.add(x.coeff, y.coeff);
                        let x = ai.next().unwrap();
                        bi.next();
                        if s != 0 {
                            out.push(VTerm { comp: x.comp, mon: x.mon.clone(), coeff: s });
                        }
                    }
                },
                (Some(_), None) => {
                    out.extend(ai.cloned());
                    break;
                }
                (None, Some(_)) => {
                    out.extend(bi);
                    break;
                }
                (None, None) => break,
            }
        }
        Vector { terms: out }
    }

    pub fn add(&self, ring: &PolyRing, other: &Vector) -> Vector {
        self.add_scaled(ring, other, 1, &Monomial::one(ring.nvars()))
    }

    pub fn sub(&self, ring: &PolyRing, other: &Vector) -> Vector {
        self.add_scaled(ring, other, ring.field().neg(1), &Monomial::one(ring.nvars()))
    }

    pub fn mul_term(&self, ring: &PolyRing, m: &Monomial, c: Coeff) -> Vector {
        let f = *ring.field();
        if c == 0 {
            return Vector::zero();
        }
        Vector {
            terms: self.terms.iter().map(|t| VTerm { comp: t.comp, mon: t.mon.mul(m), coeff: f.mul(t.coeff, c) }).collect(),
        }
    }

    pub fn mul_poly(&self, ring: &PolyRing, p: &Polynomial) -> Vector {
        let mut acc = Vector::zero();
        for (m, c) in p.terms() {
            acc = acc.add_scaled(ring, self, *c, m);
        }
        acc
    }

    pub fn scale(&self, ring: &PolyRing, c: Coeff) -> Vector {
        self.mul_term(ring, &Monomial::one(ring.nvars()), c)
    }

    pub fn monic(&self, ring: &PolyRing) -> Vector {
        match self.lead() {
            None => Vector::zero(),
            Some(t) if t.coeff == 1 => self.clone(),
            Some(t) => self.scale(ring, ring.field().inv(t.coeff)),
        }
    }

    /// Adds `offset` to every component index (order is preserved).
    pub fn shift(&self, offset: u32) -> Vector {
        Vector {
            terms: self.terms.iter().map(|t| VTerm { comp: t.comp + offset, ..t.clone() }).collect(),
        }
    }

    /// Keeps components in `[lo, hi)` and renumbers them from zero.
    pub fn project(&self, lo: u32, hi: u32) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|t| t.comp >= lo && t.comp < hi)
                .map(|t| VTerm { comp: t.comp - lo, ..t.clone() })
                .collect(),
        }
    }

    /// Renumbers components through `map`; components mapped to `None` are dropped.
    pub fn remap(&self, ring: &PolyRing, map: &[Option<u32>]) -> Vector {
        let terms = self
            .terms
            .iter()
            .filter_map(|t| map[t.comp as usize].map(|c| VTerm { comp: c, mon: t.mon.clone(), coeff: t.coeff }))
            .collect();
        Vector::from_terms(ring, terms)
    }

    /// Re-embeds into another ring via a variable map.
    pub fn map_vars(&self, target: &PolyRing, var_map: &[usize]) -> Vector {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut e = Monomial::one(n);
                for (i, &x) in t.mon.exponents().iter().enumerate() {
                    if x > 0 {
                        e.exps_mut()[var_map[i]] += x;
                    }
                }
                VTerm { comp: t.comp, mon: e, coeff: t.coeff }
            })
            .collect();
        Vector::from_terms(target, terms)
    }

    /// Splits into pieces homogeneous for the grading given by `var_weights`
    /// and `twists`, keyed by degree.
    pub fn split_by_grading(&self, ring: &PolyRing, var_weights: &[u32], twists: &[i64]) -> Vec<(i64, Vector)> {
        let mut parts: Vec<(i64, Vec<VTerm>)> = Vec::new();
        for t in &self.terms {
            let d = t.mon.weighted_degree(var_weights) as i64 + twists[t.comp as usize];
            match parts.iter_mut().find(|p| p.0 == d) {
                Some(p) => p.1.push(t.clone()),
                None => parts.push((d, vec![t.clone()])),
            }
        }
        parts.sort_by_key(|p| p.0);
        parts.into_iter().map(|(d, ts)| (d, Vector::from_terms(ring, ts))).collect()
    }
}
