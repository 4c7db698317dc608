//! Buchberger's algorithm for submodules of graded free modules.
//!
//! Pairs are selected by sugar degree (the normal strategy on homogeneous
//! input) and pruned with the Gebauer–Möller criteria. Input generators are
//! queued alongside S-pairs; on homogeneous input a generator that reduces to
//! zero lies in the span of the earlier ones, so the survivors form a minimal
//! generating set.

use crate::algebra::{cmp_pos, Coeff, Monomial, PolyRing, VTerm, Vector};
use std::cmp::Ordering;

#[derive(Clone, Debug)]
struct Elem {
    v: Vector,
    comp: u32,
    lead: Monomial,
    mask: u32,
    sugar: i64,
    active: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Spair(usize, usize),
    Input(usize),
}

#[derive(Clone, Debug)]
struct Pair {
    kind: Kind,
    comp: u32,
    lcm: Monomial,
    sugar: i64,
}

/// Result of a Gröbner computation: the reduced basis (monic, ascending by
/// leading term) and the indices of input generators that were not redundant.
#[derive(Clone, Debug)]
pub struct GbOutput {
    pub basis: Vec<Vector>,
    pub kept: Vec<usize>,
}

#[inline]
fn mask_of(m: &Monomial) -> u32 {
    let mut k = 0u32;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e > 0 {
            k |= 1 << (i % 32);
        }
    }
    k
}

/// Largest twisted degree among the terms of `v`.
pub fn sugar_of(ring: &PolyRing, twists: &[i64], v: &Vector) -> i64 {
    v.terms().iter().map(|t| ring.degree(&t.mon) as i64 + twists[t.comp as usize]).max().unwrap_or(i64::MIN)
}

struct Engine<'a> {
    ring: &'a PolyRing,
    basis: Vec<Elem>,
    pairs: Vec<Pair>,
    rank_one: bool,
}

impl<'a> Engine<'a> {
    fn find_divisor(&self, comp: u32, m: &Monomial) -> Option<usize> {
        let mm = mask_of(m);
        let mut fallback = None;
        for (i, g) in self.basis.iter().enumerate() {
            if g.comp == comp && g.mask & !mm == 0 && g.lead.divides(m) {
                if g.active {
                    return Some(i);
                }
                fallback.get_or_insert(i);
            }
        }
        fallback
    }

    fn top_reduce(&self, mut v: Vector, mut sugar: i64) -> (Vector, i64) {
        let f = *self.ring.field();
        while let Some(t) = v.lead() {
            let Some(k) = self.find_divisor(t.comp, &t.mon) else { break };
            let g = &self.basis[k];
            let q = t.mon.div(&g.lead).expect("divisor");
            let c = f.neg(f.div(t.coeff, g.v.lead().unwrap().coeff));
            sugar = sugar.max(g.sugar + self.ring.degree(&q) as i64);
            v = v.add_scaled(self.ring, &g.v, c, &q);
        }
        (v, sugar)
    }

    fn spoly(&self, i: usize, j: usize, lcm: &Monomial) -> Vector {
        let f = *self.ring.field();
        let (a, b) = (&self.basis[i], &self.basis[j]);
        let qa = lcm.div(&a.lead).unwrap();
        let qb = lcm.div(&b.lead).unwrap();
        let ca = a.v.lead().unwrap().coeff;
        let cb = b.v.lead().unwrap().coeff;
        let left = a.v.mul_term(self.ring, &qa, f.inv(ca));
        left.add_scaled(self.ring, &b.v, f.neg(f.inv(cb)), &qb)
    }

    fn pair_order(&self, p: &Pair, q: &Pair) -> Ordering {
        p.sugar
            .cmp(&q.sugar)
            .then_with(|| matches!(p.kind, Kind::Input(_)).cmp(&matches!(q.kind, Kind::Input(_))))
            .then_with(|| cmp_pos(self.ring, p.comp, &p.lcm, q.comp, &q.lcm))
            .then_with(|| match (p.kind, q.kind) {
                (Kind::Spair(a, b), Kind::Spair(c, d)) => (b, a).cmp(&(d, c)),
                (Kind::Input(a), Kind::Input(b)) => a.cmp(&b),
                _ => Ordering::Equal,
            })
    }

    fn pop(&mut self) -> Option<Pair> {
        let mut best: Option<usize> = None;
        for k in 0..self.pairs.len() {
            best = match best {
                Some(b) if self.pair_order(&self.pairs[k], &self.pairs[b]) != Ordering::Less => Some(b),
                _ => Some(k),
            };
        }
        best.map(|b| self.pairs.swap_remove(b))
    }

    fn insert(&mut self, v: Vector, sugar: i64) {
        let t = v.lead().expect("nonzero").clone();
        let n = self.basis.len();
        let (c, mh) = (t.comp, t.mon.clone());

        // criterion B on the old pairs
        let basis = &self.basis;
        self.pairs.retain(|p| match p.kind {
            Kind::Spair(i, j) if p.comp == c && mh.divides(&p.lcm) => {
                basis[i].lead.lcm(&mh) == p.lcm || basis[j].lead.lcm(&mh) == p.lcm
            }
            _ => true,
        });

        let mut cands: Vec<(usize, Monomial, bool)> = Vec::new();
        for (i, g) in self.basis.iter().enumerate() {
            if g.active && g.comp == c {
                cands.push((i, g.lead.lcm(&mh), self.rank_one && g.lead.is_coprime(&mh)));
            }
        }
        // criterion M
        let keep: Vec<bool> = cands
            .iter()
            .map(|(_, l, _)| !cands.iter().any(|(_, l2, _)| l2 != l && l2.divides(l)))
            .collect();
        let cands: Vec<_> = cands.into_iter().zip(keep).filter(|(_, k)| *k).map(|(c, _)| c).collect();
        // criterion F together with the product criterion
        let mut done = vec![false; cands.len()];
        for a in 0..cands.len() {
            if done[a] {
                continue;
            }
            let group: Vec<usize> = (a..cands.len()).filter(|&b| !done[b] && cands[b].1 == cands[a].1).collect();
            let coprime = group.iter().any(|&b| cands[b].2);
            for &b in &group {
                done[b] = true;
            }
            if !coprime {
                let (i, lcm, _) = &cands[a];
                let s = (self.basis[*i].sugar + self.ring.degree(&lcm.div(&self.basis[*i].lead).unwrap()) as i64)
                    .max(sugar + self.ring.degree(&lcm.div(&mh).unwrap()) as i64);
                self.pairs.push(Pair { kind: Kind::Spair(*i, n), comp: c, lcm: lcm.clone(), sugar: s });
            }
        }

        for g in self.basis.iter_mut() {
            if g.active && g.comp == c && mh.divides(&g.lead) {
                g.active = false;
            }
        }
        self.basis.push(Elem { mask: mask_of(&mh), lead: mh, comp: c, v, sugar, active: true });
    }
}

/// Full normal form of `v` modulo `basis` (every term irreducible).
pub fn reduce(ring: &PolyRing, v: &Vector, basis: &[Vector]) -> Vector {
    let f = *ring.field();
    let leads: Vec<(u32, &Monomial, u32, Coeff)> = basis
        .iter()
        .filter_map(|b| b.lead().map(|t| (t.comp, &t.mon, mask_of(&t.mon), t.coeff)))
        .collect();
    let live: Vec<&Vector> = basis.iter().filter(|b| !b.is_zero()).collect();
    let mut done: Vec<VTerm> = Vec::new();
    let mut rest = v.clone();
    while let Some(t) = rest.lead().cloned() {
        let mm = mask_of(&t.mon);
        let hit = leads.iter().position(|(c, m, k, _)| *c == t.comp && k & !mm == 0 && m.divides(&t.mon));
        match hit {
            Some(k) => {
                let q = t.mon.div(leads[k].1).unwrap();
                let c = f.neg(f.div(t.coeff, leads[k].3));
                rest = rest.add_scaled(ring, live[k], c, &q);
            }
            None => {
                done.push(t);
                let mut terms = rest.into_terms();
                terms.remove(0);
                rest = Vector::from_sorted(terms);
            }
        }
    }
    Vector::from_sorted(done)
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
///
/// `twists` gives the degree of each basis vector of the ambient free module;
/// it only steers pair selection, so any values are correct, but on
/// homogeneous input the kept generators are minimal only for consistent ones.
pub fn groebner(ring: &PolyRing, twists: &[i64], gens: &[Vector]) -> GbOutput {
    let rank_one = twists.len() == 1;
    let mut eng = Engine { ring, basis: Vec::new(), pairs: Vec::new(), rank_one };
    for (k, g) in gens.iter().enumerate() {
        if let Some(t) = g.lead() {
            eng.pairs.push(Pair { kind: Kind::Input(k), comp: t.comp, lcm: t.mon.clone(), sugar: sugar_of(ring, twists, g) });
        }
    }
    let mut kept = Vec::new();
    while let Some(p) = eng.pop() {
        let (h, s) = match p.kind {
            Kind::Spair(i, j) => (eng.spoly(i, j, &p.lcm), p.sugar),
            Kind::Input(k) => (gens[k].clone(), p.sugar),
        };
        let (h, s) = eng.top_reduce(h, s);
        if h.is_zero() {
            continue;
        }
        if let Kind::Input(k) = p.kind {
            kept.push(k);
        }
        let h = h.monic(ring);
        eng.insert(h, s);
    }
    kept.sort_unstable();
    GbOutput { basis: interreduce(ring, eng.basis.into_iter().filter(|e| e.active).map(|e| e.v).collect()), kept }
}

/// Turns a Gröbner basis with pairwise non-dividing leads into the reduced one.
fn interreduce(ring: &PolyRing, mut gb: Vec<Vector>) -> Vec<Vector> {
    gb.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        cmp_pos(ring, x.comp, &x.mon, y.comp, &y.mon)
    });
    // drop elements whose lead is divisible by another lead
    let mut minimal: Vec<Vector> = Vec::new();
    for g in gb {
        let t = g.lead().unwrap();
        let redundant = minimal.iter().any(|h| {
            let s = h.lead().unwrap();
            s.comp == t.comp && s.mon.divides(&t.mon)
        });
        if !redundant {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let lead = minimal[k].lead().unwrap().clone();
        let tail = Vector::from_sorted(minimal[k].terms()[1..].to_vec());
        let others: Vec<Vector> =
            minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, v)| v.clone()).collect();
        let mut terms = vec![lead];
        terms.extend(reduce(ring, &tail, &others).into_terms());
        out.push(Vector::from_sorted(terms).monic(ring));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PolyRing, PrimeField};

    #[test]
    fn reduced_basis_of_a_small_ideal() {
        let r = PolyRing::standard(PrimeField::default(), &["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let gens = [&x.pow(2) + &y.pow(2), &x * &y];
        let vs: Vec<Vector> = gens.iter().map(|g| Vector::from_poly(g, 0)).collect();
        let out = groebner(&r, &[0], &vs);
        let leads: Vec<Vec<u16>> = out.basis.iter().map(|v| v.lead().unwrap().mon.exponents().to_vec()).collect();
        assert_eq!(leads, vec![vec![1, 1], vec![2, 0], vec![0, 3]]);
        assert_eq!(out.kept, vec![0, 1]);
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let r = PolyRing::standard(PrimeField::default(), &["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let gens = [&x * &y, x.clone(), y.clone()];
        let vs: Vec<Vector> = gens.iter().map(|g| Vector::from_poly(g, 0)).collect();
        let out = groebner(&r, &[0], &vs);
        assert_eq!(out.kept, vec![1, 2]);
        assert_eq!(out.basis.len(), 2);
    }

    #[test]
    fn module_syzygy_by_elimination() {
        // kernel of (x, y): the Koszul relation
        let r = PolyRing::standard(PrimeField::default(), &["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let g0 = Vector::from_components(&[x.clone(), r.one(), r.zero()]);
        let g1 = Vector::from_components(&[y.clone(), r.zero(), r.one()]);
        let out = groebner(&r, &[0, 1, 1], &[g0, g1]);
        let syz: Vec<Vector> = out.basis.iter().filter(|v| v.lead().unwrap().comp >= 1).map(|v| v.project(1, 3)).collect();
        assert_eq!(syz.len(), 1);
        let c = syz[0].components(&r, 2);
        assert!((&(&c[0] * &x) + &(&c[1] * &y)).is_zero());
    }
}
