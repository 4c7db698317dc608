//! Presentations of the Rees algebra `R[It]`, the associated graded ring
//! `G = gr_I(R)` and the fiber cone `G ⊗ k` over `A = S[y_1..y_n]`, where
//! `R = S/K`, `I = (f_1..f_n)` and `y_i ↦ f_i t`.

use crate::algebra::{monomials_of_degree, BlockKind, Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::{Ideal, Powers, QuotientRing};
use crate::homology::ModuleMap;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct BlowupPresentation {
    base: Arc<QuotientRing>,
    gens: Vec<Polynomial>,
    ring: Arc<PolyRing>,
    rees: Ideal,
    g_ideal: Ideal,
    fiber_ideal: Ideal,
}

/// One row of the Hilbert-function comparison between `G_j` and `I^j/I^{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertCheck {
    pub j: usize,
    pub degrees: (u32, u32),
    pub mismatches: Vec<(u32, usize, usize)>,
}

impl HilbertCheck {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl BlowupPresentation {
    /// `gens` must be homogeneous and nonzero modulo `K`.
    pub fn new(base: &Arc<QuotientRing>, gens: &[Polynomial]) -> Result<BlowupPresentation> {
        let s = base.ambient();
        if gens.is_empty() {
            return Err(Error::InvalidIdeal("no generators".into()));
        }
        let mut fs = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.is_homogeneous() {
                return Err(Error::NonHomogeneous(format!("ideal generator {g}")));
            }
            let r = base.reduce(g)?;
            if r.is_zero() {
                return Err(Error::InvalidIdeal(format!("generator {g} vanishes in the ring")));
            }
            fs.push(r);
        }
        let ns = s.nvars();
        let n = fs.len();
        let degs: Vec<u32> = fs.iter().map(|f| f.weighted_degree().unwrap().value).collect();

        let mut names = s.vars().to_vec();
        let mut weights = s.weights().to_vec();
        for (i, &d) in degs.iter().enumerate() {
            let name = fresh(&names, &format!("Y{}", i + 1));
            names.push(name);
            weights.push(d);
        }
        let ring = PolyRing::new(*s.field(), names.clone(), Some(weights), MonomialOrder::Grevlex)?;
        // eliminate t from (Y_i − f_i t) + K, with deg Y_i = deg f_i + 1 so the
        // input is homogeneous
        let mut shifted: Vec<u32> = s.weights().to_vec();
        shifted.extend(degs.iter().map(|d| d + 1));
        let mid = PolyRing::new(*s.field(), names.clone(), Some(shifted), MonomialOrder::Grevlex)?;
        let tag = fresh(&names, "t");
        let elim = mid.with_leading_block(&[tag], &[1], BlockKind::Grevlex)?;
        let to_elim: Vec<usize> = (1..=ns).collect();
        let t = elim.var(0);
        let mut egens = Vec::new();
        for (i, f) in fs.iter().enumerate() {
            egens.push(&elim.var(1 + ns + i) - &(&f.map_vars(&elim, &to_elim) * &t));
        }
        for k in base.defining().gens() {
            egens.push(k.map_vars(&elim, &to_elim));
        }
        let big = Ideal::new(&elim, egens)?;
        let mut down = vec![0usize];
        down.extend(0..ns + n);
        let lgens: Vec<Polynomial> = big
            .groebner_basis()
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exp(0) == 0))
            .map(|g| g.map_vars(&ring, &down))
            .collect();
        let rees = Ideal::new(&ring, lgens)?.minimalized();

        let up: Vec<usize> = (0..ns).collect();
        let mut gg = rees.gens().to_vec();
        gg.extend(fs.iter().map(|f| f.map_vars(&ring, &up)));
        let g_ideal = Ideal::new(&ring, gg)?.minimalized();
        let mut fg = rees.gens().to_vec();
        fg.extend((0..ns).map(|i| ring.var(i)));
        let fiber_ideal = Ideal::new(&ring, fg)?.minimalized();

        Ok(BlowupPresentation { base: base.clone(), gens: fs, ring, rees, g_ideal, fiber_ideal })
    }

    pub fn base(&self) -> &Arc<QuotientRing> {
        &self.base
    }

    /// Generators of `I`, reduced modulo `K`.
    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// The ring `A = S[y_1..y_n]`.
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn ambient_nvars(&self) -> usize {
        self.base.ambient().nvars()
    }

    pub fn y_vars(&self) -> Vec<usize> {
        let ns = self.ambient_nvars();
        (ns..ns + self.gens.len()).collect()
    }

    /// Variable weights of the y-grading.
    pub fn y_grading(&self) -> Vec<u32> {
        let ns = self.ambient_nvars();
        (0..self.ring.nvars()).map(|v| (v >= ns) as u32).collect()
    }

    pub fn y_degree(&self, m: &Monomial) -> u32 {
        m.exponents()[self.ambient_nvars()..].iter().map(|&e| e as u32).sum()
    }

    /// `S → A`.
    pub fn embed(&self, f: &Polynomial) -> Polynomial {
        let up: Vec<usize> = (0..self.ambient_nvars()).collect();
        f.map_vars(&self.ring, &up)
    }

    /// Kernel of `A → R[t]`, `y_i ↦ f_i t` (it contains `K·A`).
    pub fn rees_ideal(&self) -> &Ideal {
        &self.rees
    }

    /// Defining ideal of `R[It]` as a quotient of `A`; equal to the Rees
    /// ideal since the kernel already contains `K·A`.
    pub fn rees_full(&self) -> &Ideal {
        &self.rees
    }

    /// `L + I·A + K·A`, presenting `G`.
    pub fn g_ideal(&self) -> &Ideal {
        &self.g_ideal
    }

    /// `L + m·A + K·A`, presenting the fiber cone.
    pub fn fiber_ideal(&self) -> &Ideal {
        &self.fiber_ideal
    }

    pub fn g_presentation(&self) -> ModuleMap {
        ModuleMap::quotient_presentation(&self.g_ideal)
    }

    /// `y_i ↦ f_i t` sends every Rees generator into `K·S[t]`.
    pub fn substitution_check(&self) -> bool {
        let s = self.base.ambient();
        let ns = s.nvars();
        let mut names = s.vars().to_vec();
        names.push(fresh(&names, "t"));
        let mut w = s.weights().to_vec();
        w.push(1);
        let st = PolyRing::new(*s.field(), names, Some(w), MonomialOrder::Grevlex).expect("valid ring");
        let up: Vec<usize> = (0..ns).collect();
        let t = st.var(ns);
        let mut images: Vec<Polynomial> = (0..ns).map(|i| st.var(i)).collect();
        images.extend(self.gens.iter().map(|f| &f.map_vars(&st, &up) * &t));
        let k = Ideal::new(&st, self.base.defining().gens().iter().map(|g| g.map_vars(&st, &up)).collect()).expect("same ring");
        self.rees.gens().iter().all(|g| k.contains(&g.substitute(&st, &images)))
    }

    /// Every Rees generator is homogeneous for the total and the y-grading.
    pub fn is_bihomogeneous(&self) -> bool {
        let yw = self.y_grading();
        self.rees.gens().iter().all(|g| g.is_homogeneous() && g.is_homogeneous_for(&yw))
    }

    /// `dim_k` of the piece of `A/J` in y-degree `j` and total degree `d`,
    /// for an ideal `J` of `A`.
    pub fn bigraded_dim(&self, ideal: &Ideal, j: u32, d: u32) -> usize {
        let ns = self.ambient_nvars();
        let leads = ideal.leading_monomials();
        let yw = vec![1u32; self.gens.len()];
        let sw = &self.base.ambient().weights().to_vec();
        let wy: Vec<u32> = self.ring.weights()[ns..].to_vec();
        let mut count = 0;
        for mu in monomials_of_degree(&yw, j) {
            let wmu = mu.weighted_degree(&wy);
            if wmu > d {
                continue;
            }
            for m in monomials_of_degree(sw, d - wmu) {
                let mut e = m.exponents().to_vec();
                e.extend_from_slice(mu.exponents());
                let full = Monomial::from_exponents(&e);
                if !leads.iter().any(|l| l.divides(&full)) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Compares `dim (G_j)_d` with `dim (R/I^{j+1})_d − dim (R/I^j)_d` for
    /// `j ≤ j_max` and `d` up to `(j+1)·max deg f + 2`.
    pub fn hilbert_check(&self, powers: &mut Powers, j_max: usize) -> Vec<HilbertCheck> {
        let dmax = self.gens.iter().map(|f| f.weighted_degree().unwrap().value).max().unwrap_or(1);
        let mut out = Vec::new();
        for j in 0..=j_max {
            let hi = (j as u32 + 1) * dmax + 2;
            let mut mismatches = Vec::new();
            for d in 0..=hi {
                let lhs = self.bigraded_dim(&self.g_ideal, j as u32, d);
                let upper = powers.lifted(j + 1).hilbert_function(d);
                let lower = if j == 0 { 0 } else { powers.lifted(j).hilbert_function(d) };
                let rhs = upper - lower;
                if lhs != rhs {
                    mismatches.push((d, lhs, rhs));
                }
            }
            out.push(HilbertCheck { j, degrees: (0, hi), mismatches });
        }
        out
    }

    /// The linear form `Σ c_k y_k` of `A`.
    pub fn linear_form(&self, coeffs: &[Polynomial]) -> Polynomial {
        let ns = self.ambient_nvars();
        let mut acc = self.ring.zero();
        for (k, c) in coeffs.iter().enumerate() {
            acc = &acc + &(&self.embed(c) * &self.ring.var(ns + k));
        }
        acc
    }
}

fn fresh(names: &[String], base: &str) -> String {
    let mut name = base.to_string();
    let mut k = 0;
    while names.contains(&name) {
        k += 1;
        name = format!("{base}_{k}");
    }
    name
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;

    #[test]
    fn blowup_of_the_plane_at_the_origin() {
        let s = PolyRing::standard(PrimeField::default(), &["x", "y"]);
        let r = QuotientRing::polynomial_ring(&s);
        let b = BlowupPresentation::new(&r, &[s.var(0), s.var(1)]).unwrap();
        let a = b.ring();
        let expected = &(&a.var(0) * &a.var(3)) - &(&a.var(1) * &a.var(2));
        assert!(b.rees_ideal().same_as(&Ideal::new(a, vec![expected]).unwrap()));
        assert!(b.substitution_check() && b.is_bihomogeneous());
        assert_eq!(b.fiber_ideal().krull_dimension(), 2);
    }

    #[test]
    fn principal_nonzerodivisor_has_trivial_rees_ideal() {
        let s = PolyRing::standard(PrimeField::default(), &["x", "y"]);
        let r = QuotientRing::polynomial_ring(&s);
        let b = BlowupPresentation::new(&r, &[s.var(0)]).unwrap();
        assert!(b.rees_ideal().is_zero() || b.rees_ideal().groebner_basis().is_empty());
    }

    #[test]
    fn hilbert_functions_of_graded_pieces() {
        let s = PolyRing::standard(PrimeField::default(), &["x", "y"]);
        let r = QuotientRing::polynomial_ring(&s);
        let gens = [s.var(0), s.var(1)];
        let b = BlowupPresentation::new(&r, &gens).unwrap();
        let mut p = Powers::new(&r, &gens).unwrap();
        assert!(b.hilbert_check(&mut p, 3).iter().all(|c| c.agrees()));
    }
}
