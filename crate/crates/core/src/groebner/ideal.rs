use super::engine::{groebner, reduce};
use crate::algebra::{same_ring, BlockKind, Monomial, MonomialOrder, PolyRing, Polynomial, Vector};
use crate::error::{Error, Result};
use std::fmt;
use std::sync::{Arc, OnceLock};

/// Cap on colon steps in [`Ideal::saturate`].
pub const SATURATION_CAP: usize = 50;

#[derive(Clone, Debug)]
struct Basis {
    polys: Vec<Polynomial>,
    vecs: Vec<Vector>,
}

/// An ideal of a polynomial ring with a lazily computed reduced Gröbner basis.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    gb: OnceLock<Basis>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({})", self)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn basis_from_vectors(ring: &Arc<PolyRing>, vecs: Vec<Vector>) -> Basis {
    let polys = vecs.iter().map(|v| v.component(ring, 0)).collect();
    Basis { polys, vecs }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Ideal> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal { ring: ring.clone(), gens: gens.into_iter().filter(|g| !g.is_zero()).collect(), gb: OnceLock::new() })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal { ring: ring.clone(), gens: Vec::new(), gb: OnceLock::new() }
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Ideal {
        Ideal { ring: ring.clone(), gens: vec![ring.one()], gb: OnceLock::new() }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    fn basis(&self) -> &Basis {
        self.gb.get_or_init(|| {
            let vs: Vec<Vector> = self.gens.iter().map(|g| Vector::from_poly(g, 0)).collect();
            basis_from_vectors(&self.ring, groebner(&self.ring, &[0], &vs).basis)
        })
    }

    /// Reduced Gröbner basis, ascending by leading monomial.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        &self.basis().polys
    }

    pub(crate) fn gb_vectors(&self) -> &[Vector] {
        &self.basis().vecs
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.groebner_basis().iter().map(|g| g.leading_monomial().unwrap().clone()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(reduce(&self.ring, &Vector::from_poly(f, 0), self.gb_vectors()).component(&self.ring, 0))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality of ideals, decided by comparing reduced Gröbner bases.
    pub fn same_as(&self, other: &Ideal) -> bool {
        same_ring(&self.ring, &other.ring) && self.groebner_basis() == other.groebner_basis()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().first().is_some_and(|g| g.is_constant())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// A minimal homogeneous generating set; the Gröbner basis found on the way
    /// is cached in the result. Non-homogeneous ideals are returned unchanged.
    pub fn minimalized(&self) -> Ideal {
        if !self.is_homogeneous() {
            return self.clone();
        }
        let vs: Vec<Vector> = self.gens.iter().map(|g| Vector::from_poly(g, 0)).collect();
        let out = groebner(&self.ring, &[0], &vs);
        let gens = out.kept.iter().map(|&k| self.gens[k].clone()).collect();
        let gb = OnceLock::new();
        let _ = gb.set(basis_from_vectors(&self.ring, out.basis));
        Ideal { ring: self.ring.clone(), gens, gb }
    }

    /// Indices (into the current generators) of a minimal generating set.
    pub(crate) fn minimalized_indices(&self) -> Vec<(usize, Polynomial)> {
        let vs: Vec<Vector> = self.gens.iter().map(|g| Vector::from_poly(g, 0)).collect();
        let out = groebner(&self.ring, &[0], &vs);
        out.kept.into_iter().map(|k| (k, self.gens[k].clone())).collect()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        dedup(&mut gens);
        Ideal::new(&self.ring, gens)
    }

    /// `power(0)` is the unit ideal. Intermediate powers are minimalized when
    /// the ideal is homogeneous.
    pub fn power(&self, j: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..j {
            acc = acc.product(self).expect("same ring").minimalized();
        }
        acc
    }

    /// `I ∩ J`, eliminating a tag variable `t` from `t·I + (1−t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let n = self.ring.nvars();
        let tag = self.ring.fresh_name("t");
        let big = self.ring.with_leading_block(&[tag], &[1], BlockKind::Grevlex)?;
        let up: Vec<usize> = (1..=n).collect();
        let t = big.var(0);
        let one_minus_t = &big.one() - &t;
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(&t * &f.map_vars(&big, &up));
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &g.map_vars(&big, &up));
        }
        let elim = Ideal::new(&big, gens)?;
        let mut down = vec![0usize];
        down.extend(0..n);
        let kept = elim
            .groebner_basis()
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exp(0) == 0))
            .map(|g| g.map_vars(&self.ring, &down))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// `I : f = (I ∩ (f)) / f`.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<Ideal> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() || self.contains(f) {
            return Ok(Ideal::unit(&self.ring));
        }
        let inter = self.intersect(&Ideal::new(&self.ring, vec![f.clone()])?)?;
        let gens = inter.gens.iter().map(|g| g.exact_div(f).expect("element of (f) is divisible by f")).collect();
        Ok(Ideal::new(&self.ring, gens)?.minimalized())
    }

    /// `I : J`, the intersection of `I : g` over the generators of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut acc = Ideal::unit(&self.ring);
        for g in &other.gens {
            let c = self.colon_poly(g)?;
            acc = if acc.is_unit() { c } else { acc.intersect(&c)?.minimalized() };
        }
        Ok(acc)
    }

    /// `I : f^∞` by iterated colons until two consecutive steps agree.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal> {
        let mut cur = self.clone();
        for _ in 0..SATURATION_CAP {
            let next = cur.colon_poly(f)?;
            if next.same_as(&cur) {
                return Ok(cur);
            }
            cur = next;
        }
        Err(Error::SaturationCap(SATURATION_CAP))
    }

    /// Krull dimension of `S/I`: the largest set of variables containing the
    /// support of no leading monomial. The unit ideal has dimension −1.
    pub fn krull_dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        let supports: Vec<u32> = self
            .leading_monomials()
            .iter()
            .map(|m| m.support().fold(0u32, |acc, i| acc | (1 << i)))
            .collect();
        let n = self.ring.nvars();
        let mut best = 0;
        for u in 0u32..(1u32 << n) {
            let size = u.count_ones() as i64;
            if size > best && supports.iter().all(|s| s & !u != 0) {
                best = size;
            }
        }
        best
    }

    /// The same ideal in the same variables under another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ideal> {
        let ring = self.ring.with_order(order)?;
        let idx: Vec<usize> = (0..ring.nvars()).collect();
        Ideal::new(&ring, self.gens.iter().map(|g| g.map_vars(&ring, &idx)).collect())
    }

    /// Dimension of the degree-`d` piece of `S/I` (weighted grading).
    pub fn hilbert_function(&self, d: u32) -> usize {
        let leads = self.leading_monomials();
        crate::algebra::monomials_of_degree(self.ring.weights(), d)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .count()
    }

    /// Cofactors `h` with `f = Σ h_k g_k` over the current generators, or
    /// `None` when `f` is not in the ideal.
    pub fn lift(&self, f: &Polynomial) -> Option<Vec<Polynomial>> {
        let m = self.gens.len();
        let mut twists = vec![0i64];
        let mut vs = Vec::with_capacity(m);
        for (k, g) in self.gens.iter().enumerate() {
            let mut comps = vec![self.ring.zero(); m + 1];
            comps[0] = g.clone();
            comps[k + 1] = self.ring.one();
            vs.push(Vector::from_components(&comps));
            twists.push(g.weighted_degree().map_or(0, |d| d.value as i64));
        }
        let gb = groebner(&self.ring, &twists, &vs).basis;
        let r = reduce(&self.ring, &Vector::from_poly(f, 0), &gb);
        if r.lead().is_some_and(|t| t.comp == 0) {
            return None;
        }
        let comps = r.components(&self.ring, m + 1);
        Some(comps[1..].iter().map(|p| p.neg()).collect())
    }
}

pub(crate) fn dedup(gens: &mut Vec<Polynomial>) {
    let mut out: Vec<Polynomial> = Vec::with_capacity(gens.len());
    for g in gens.drain(..) {
        let g = g.monic();
        if !g.is_zero() && !out.contains(&g) {
            out.push(g);
        }
    }
    *gens = out;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;

    fn xy() -> (Arc<PolyRing>, Polynomial, Polynomial) {
        let r = PolyRing::standard(PrimeField::default(), &["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        (r, x, y)
    }

    #[test]
    fn principal_basis() {
        let (r, x, _) = xy();
        let i = Ideal::new(&r, vec![x.clone()]).unwrap();
        assert_eq!(i.groebner_basis(), &[x]);
    }

    #[test]
    fn intersection_and_colon_of_monomials() {
        let (r, x, y) = xy();
        let ix = Ideal::new(&r, vec![x.clone()]).unwrap();
        let iy = Ideal::new(&r, vec![y.clone()]).unwrap();
        let xy = Ideal::new(&r, vec![&x * &y]).unwrap();
        assert!(ix.intersect(&iy).unwrap().same_as(&xy));
        assert!(xy.colon_poly(&x).unwrap().same_as(&iy));
        assert!(xy.colon_poly(&r.one()).unwrap().same_as(&xy));
    }

    #[test]
    fn saturation_strips_a_variable() {
        let (r, x, y) = xy();
        let i = Ideal::new(&r, vec![x.pow(3) * y.clone(), x.pow(2) * y.pow(2)]).unwrap();
        let s = i.saturate(&x).unwrap();
        assert!(s.same_as(&Ideal::new(&r, vec![y.clone()]).unwrap()));
    }

    #[test]
    fn dimensions() {
        let (r, x, y) = xy();
        assert_eq!(Ideal::zero(&r).krull_dimension(), 2);
        assert_eq!(Ideal::new(&r, vec![&x * &y]).unwrap().krull_dimension(), 1);
        assert_eq!(Ideal::new(&r, vec![x.clone(), y.clone()]).unwrap().krull_dimension(), 0);
        assert_eq!(Ideal::unit(&r).krull_dimension(), -1);
    }

    #[test]
    fn lift_recovers_cofactors() {
        let (r, x, y) = xy();
        let i = Ideal::new(&r, vec![x.clone(), y.clone()]).unwrap();
        let f = &x.pow(2) + &(&x * &y) + y.pow(3);
        let h = i.lift(&f).unwrap();
        assert_eq!(&(&h[0] * &x) + &(&h[1] * &y), f);
        assert!(i.lift(&r.one()).is_none());
    }

    #[test]
    fn power_zero_is_unit() {
        let (r, x, _) = xy();
        assert!(Ideal::new(&r, vec![x]).unwrap().power(0).is_unit());
    }
}
