//! Koszul homology `H_i(f; M)` and cohomology `H^i(f; M)` of a module given
//! by a presentation. Every group is computed as `Z/B` inside the free cover
//! of the relevant term of the complex, so vanishing is decided exactly.

use super::free::ModuleMap;
use super::hilbert::StandardMonomials;
use super::syzygy::preimage;
use crate::algebra::{PolyRing, Polynomial, Vector};
use crate::groebner::{groebner, reduce};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variance {
    /// `K(f) ⊗ M`, differential lowering the index.
    Homology,
    /// `Hom(K(f), M)`, differential raising the index.
    Cohomology,
}

fn subsets(k: usize, i: usize) -> Vec<u32> {
    let mut out: Vec<u32> = (0u32..(1u32 << k)).filter(|m| m.count_ones() as usize == i).collect();
    out.sort_by_key(|m| {
        let mut bits: Vec<u32> = (0..k as u32).filter(|b| m >> b & 1 == 1).collect();
        bits.resize(k, u32::MAX);
        bits
    });
    out
}

fn sign_below(mask: u32, j: usize) -> bool {
    (mask & ((1u32 << j) - 1)).count_ones() % 2 == 1
}

/// One term of the Koszul complex on `elems` with coefficients in `M`.
struct Level {
    labels: Vec<(usize, u32)>,
    index: BTreeMap<u32, usize>,
    b0: usize,
}

impl Level {
    fn new(k: usize, i: usize, b0: usize) -> Level {
        let subs = if i <= k { subsets(k, i) } else { Vec::new() };
        let mut labels = Vec::with_capacity(subs.len() * b0);
        let mut index = BTreeMap::new();
        for (q, &s) in subs.iter().enumerate() {
            index.insert(s, q);
            for b in 0..b0 {
                labels.push((b, s));
            }
        }
        Level { labels, index, b0 }
    }

    fn pos(&self, b: usize, s: u32) -> u32 {
        (self.index[&s] * self.b0 + b) as u32
    }

    fn twists(&self, base: &[i64], degs: &[i64], variance: Variance) -> Vec<i64> {
        self.labels
            .iter()
            .map(|&(b, s)| {
                let d: i64 = (0..degs.len()).filter(|j| s >> j & 1 == 1).map(|j| degs[j]).sum();
                match variance {
                    Variance::Homology => base[b] + d,
                    Variance::Cohomology => base[b] - d,
                }
            })
            .collect()
    }

    fn relation_blocks(&self, relations: &[Vector]) -> Vec<Vector> {
        let mut out = Vec::new();
        for q in 0..self.index.len() {
            for r in relations {
                out.push(r.shift((q * self.b0) as u32));
            }
        }
        out
    }
}

/// Columns of the differential leaving `from`, landing in `to`.
fn differential(ring: &Arc<PolyRing>, elems: &[Polynomial], from: &Level, to: &Level, variance: Variance) -> Vec<Vector> {
    let k = elems.len();
    from.labels
        .iter()
        .map(|&(b, s)| {
            let mut acc = Vector::zero();
            for (j, f) in elems.iter().enumerate() {
                let inside = s >> j & 1 == 1;
                let target = match variance {
                    Variance::Homology if inside => s & !(1 << j),
                    Variance::Cohomology if !inside && j < k => s | (1 << j),
                    _ => continue,
                };
                let p = if sign_below(s, j) { f.neg() } else { f.clone() };
                acc = acc.add(ring, &Vector::from_poly(&p, to.pos(b, target)));
            }
            acc
        })
        .collect()
}

const MAX_WALK: usize = 512;

fn push_new(set: &mut Vec<(i64, Vector)>, d: i64, v: Vector) {
    if !set.iter().any(|(e, w)| *e == d && *w == v) {
        set.push((d, v));
    }
}

/// `H` at one spot of the complex, with the data needed to query it.
#[derive(Clone, Debug)]
pub struct KoszulGroup {
    pub index: usize,
    pub variance: Variance,
    labels: Vec<(usize, u32)>,
    twists: Vec<i64>,
    cycles: Vec<Vector>,
    boundaries: Vec<Vector>,
    survivors: Vec<Vector>,
}

impl KoszulGroup {
    pub fn vanishes(&self) -> bool {
        self.survivors.is_empty()
    }

    /// Generators of the cycle module that are not boundaries.
    pub fn survivors(&self) -> &[Vector] {
        &self.survivors
    }

    /// Twists of the free cover for another grading: `base` gives the degree
    /// of each generator of `M`, `elem_degs` the degree of each element.
    pub fn twists_for(&self, base: &[i64], elem_degs: &[i64]) -> Vec<i64> {
        let lvl = Level { labels: self.labels.clone(), index: BTreeMap::new(), b0: base.len() };
        lvl.twists(base, elem_degs, self.variance)
    }

    /// Top degree of the group in the grading given by variable weights
    /// `var_weights` and generator twists `twists`; `None` when it vanishes.
    /// Walks up from the cycle generators by multiplying with the variables of
    /// positive weight, which terminates because Koszul groups are killed by
    /// a power of each element.
    pub fn end_degree(&self, ring: &PolyRing, var_weights: &[u32], twists: &[i64]) -> Option<i64> {
        let mult: Vec<usize> = (0..ring.nvars()).filter(|&v| var_weights[v] > 0).collect();
        let mut frontier: Vec<(i64, Vector)> = Vec::new();
        for z in &self.cycles {
            for (d, piece) in z.split_by_grading(ring, var_weights, twists) {
                let r = reduce(ring, &piece, &self.boundaries);
                if !r.is_zero() {
                    push_new(&mut frontier, d, r.monic(ring));
                }
            }
        }
        let mut best = frontier.iter().map(|p| p.0).max();
        for _ in 0..MAX_WALK {
            let mut next: Vec<(i64, Vector)> = Vec::new();
            for (d, v) in &frontier {
                for &j in &mult {
                    let m = crate::algebra::Monomial::var(ring.nvars(), j, 1);
                    let w = reduce(ring, &v.mul_term(ring, &m, 1), &self.boundaries);
                    if !w.is_zero() {
                        push_new(&mut next, d + var_weights[j] as i64, w.monic(ring));
                    }
                }
            }
            if next.is_empty() {
                return best;
            }
            best = best.max(next.iter().map(|p| p.0).max());
            frontier = next;
        }
        best
    }

    /// `dim_k H_d` for each `d` in the window.
    pub fn dims(&self, ring: &PolyRing, lo: i64, hi: i64) -> BTreeMap<i64, usize> {
        let b = StandardMonomials::from_basis(&self.twists, &self.boundaries);
        let z = if self.cycles.is_empty() { Vec::new() } else { groebner(ring, &self.twists, &self.cycles).basis };
        let zsm = StandardMonomials::from_basis(&self.twists, &z);
        let mut out = BTreeMap::new();
        for d in lo..=hi {
            // dim Z_d − dim B_d = dim (C/B)_d − dim (C/Z)_d
            let h = b.dim(ring, d) - zsm.dim(ring, d);
            if h > 0 {
                out.insert(d, h);
            }
        }
        out
    }
}

/// The `i`-th Koszul (co)homology group of `elems` on `coker(presentation)`.
/// All data must be homogeneous.
pub fn koszul_group(elems: &[Polynomial], presentation: &ModuleMap, i: usize, variance: Variance) -> KoszulGroup {
    let ring = presentation.ring();
    let k = elems.len();
    let tw0 = &presentation.target().twists;
    let b0 = tw0.len();
    let degs: Vec<i64> = elems.iter().map(|f| f.weighted_degree().map_or(0, |d| d.value as i64)).collect();
    let here = Level::new(k, i, b0);
    let (next_i, prev_i) = match variance {
        Variance::Homology => (i.checked_sub(1), Some(i + 1)),
        Variance::Cohomology => (Some(i + 1), i.checked_sub(1)),
    };
    let twists = here.twists(tw0, &degs, variance);
    let rel = presentation.columns();

    let cycles = match next_i.filter(|&j| j <= k) {
        Some(j) => {
            let next = Level::new(k, j, b0);
            let cols = differential(ring, elems, &here, &next, variance);
            let ntw = next.twists(tw0, &degs, variance);
            preimage(ring, &ntw, &twists, &cols, &next.relation_blocks(rel), true)
        }
        None => (0..here.labels.len()).map(|p| Vector::unit(ring, p as u32)).collect(),
    };
    let mut bgens = here.relation_blocks(rel);
    if let Some(j) = prev_i.filter(|&j| j <= k) {
        let prev = Level::new(k, j, b0);
        bgens.extend(differential(ring, elems, &prev, &here, variance));
    }
    let boundaries = if here.labels.is_empty() { Vec::new() } else { groebner(ring, &twists, &bgens).basis };
    let survivors = cycles.iter().filter(|z| !reduce(ring, z, &boundaries).is_zero()).cloned().collect();
    KoszulGroup { index: i, variance, labels: here.labels, twists, cycles, boundaries, survivors }
}

/// `grade((elems), M)`: the least `i` with `H^i(elems; M) ≠ 0`, or `None`
/// when every group vanishes (as for `M = 0`).
pub fn koszul_grade(elems: &[Polynomial], presentation: &ModuleMap) -> Option<usize> {
    (0..=elems.len()).find(|&i| !koszul_group(elems, presentation, i, Variance::Cohomology).vanishes())
}

/// Depth of `coker(presentation)` as the grade of the maximal graded ideal.
pub fn koszul_depth(presentation: &ModuleMap) -> Option<usize> {
    let ring = presentation.ring();
    let vars: Vec<Polynomial> = (0..ring.nvars()).map(|i| ring.var(i)).collect();
    koszul_grade(&vars, presentation)
}
