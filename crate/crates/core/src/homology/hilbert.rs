use crate::algebra::{monomials_of_degree, Monomial, PolyRing, Vector};
use crate::groebner::groebner;

/// Leading terms of a submodule `U ⊆ F`, grouped by component, for counting
/// standard monomials of `F/U`.
#[derive(Clone, Debug)]
pub struct StandardMonomials {
    twists: Vec<i64>,
    leads: Vec<Vec<Monomial>>,
}

impl StandardMonomials {
    /// From an arbitrary generating set (a Gröbner basis is computed).
    pub fn new(ring: &PolyRing, twists: &[i64], gens: &[Vector]) -> Self {
        let gb = groebner(ring, twists, gens).basis;
        Self::from_basis(twists, &gb)
    }

    pub fn from_basis(twists: &[i64], gb: &[Vector]) -> Self {
        let mut leads = vec![Vec::new(); twists.len()];
        for g in gb {
            let t = g.lead().unwrap();
            leads[t.comp as usize].push(t.mon.clone());
        }
        StandardMonomials { twists: twists.to_vec(), leads }
    }

    /// `dim_k (F/U)_d` where `F = ⊕ S(−twists)`.
    pub fn dim(&self, ring: &PolyRing, d: i64) -> usize {
        self.dim_filtered(ring, d, |_, _| true)
    }

    /// As [`dim`](Self::dim), counting only monomials accepted by `keep`
    /// (called with the component and the monomial).
    pub fn dim_filtered(&self, ring: &PolyRing, d: i64, keep: impl Fn(usize, &Monomial) -> bool) -> usize {
        let mut n = 0;
        for (b, &tw) in self.twists.iter().enumerate() {
            let e = d - tw;
            if e < 0 {
                continue;
            }
            n += monomials_of_degree(ring.weights(), e as u32)
                .iter()
                .filter(|m| keep(b, m) && !self.leads[b].iter().any(|l| l.divides(m)))
                .count();
        }
        n
    }
}
