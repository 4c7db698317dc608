use super::ideal::{dedup, Ideal};
use crate::algebra::{same_ring, PolyRing, Polynomial};
use crate::error::{Error, Result};
use std::sync::Arc;

/// `R = S/K` for a homogeneous ideal `K`. Ideals of `R` are represented by
/// ideals of `S` containing `K`.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    ambient: Arc<PolyRing>,
    defining: Ideal,
}

impl QuotientRing {
    pub fn new(ambient: &Arc<PolyRing>, relations: Vec<Polynomial>) -> Result<Arc<QuotientRing>> {
        let defining = Ideal::new(ambient, relations)?;
        if let Some(g) = defining.gens().iter().find(|g| !g.is_homogeneous()) {
            return Err(Error::NonHomogeneous(format!("defining relation {g}")));
        }
        let defining = defining.minimalized();
        Ok(Arc::new(QuotientRing { ambient: ambient.clone(), defining }))
    }

    pub fn polynomial_ring(ambient: &Arc<PolyRing>) -> Arc<QuotientRing> {
        Arc::new(QuotientRing { ambient: ambient.clone(), defining: Ideal::zero(ambient) })
    }

    pub fn ambient(&self) -> &Arc<PolyRing> {
        &self.ambient
    }

    pub fn defining(&self) -> &Ideal {
        &self.defining
    }

    pub fn dim(&self) -> i64 {
        self.defining.krull_dimension()
    }

    /// Normal form modulo the defining ideal.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        self.defining.normal_form(f)
    }

    /// Lift of the ideal of `R` generated by `gens`: `(gens) + K`.
    pub fn lift(&self, gens: &[Polynomial]) -> Result<Ideal> {
        if gens.iter().any(|g| !same_ring(g.ring(), &self.ambient)) {
            return Err(Error::RingMismatch);
        }
        let mut all = self.defining.gens().to_vec();
        all.extend(gens.iter().cloned());
        Ideal::new(&self.ambient, all)
    }

    /// Generators (modulo `K`, without `K`) of the product of two ideals of `R`.
    pub fn product_gens(&self, a: &[Polynomial], b: &[Polynomial]) -> Result<Vec<Polynomial>> {
        let mut out = Vec::with_capacity(a.len() * b.len());
        for f in a {
            for g in b {
                out.push(self.reduce(&(f * g))?);
            }
        }
        dedup(&mut out);
        Ok(self.trim(out))
    }

    /// Drops generators redundant modulo `K` (homogeneous input only).
    pub fn trim(&self, gens: Vec<Polynomial>) -> Vec<Polynomial> {
        if !gens.iter().all(|g| g.is_homogeneous()) {
            return gens;
        }
        let k = self.defining.gens().len();
        let mut all = self.defining.gens().to_vec();
        all.extend(gens);
        let m = Ideal::new(&self.ambient, all).expect("same ring").minimalized_indices();
        m.into_iter().filter(|&(i, _)| i >= k).map(|(_, g)| g).collect()
    }
}

/// Successive powers `I, I², …` of an ideal of `R`, computed on demand.
#[derive(Clone, Debug)]
pub struct Powers {
    quotient: Arc<QuotientRing>,
    gens: Vec<Vec<Polynomial>>,
    lifted: Vec<Option<Ideal>>,
}

impl Powers {
    pub fn new(quotient: &Arc<QuotientRing>, base: &[Polynomial]) -> Result<Powers> {
        let base = quotient.trim(base.iter().map(|g| quotient.reduce(g)).collect::<Result<Vec<_>>>()?);
        Ok(Powers { quotient: quotient.clone(), gens: vec![vec![quotient.ambient.one()], base], lifted: Vec::new() })
    }

    pub fn quotient(&self) -> &Arc<QuotientRing> {
        &self.quotient
    }

    /// Generators of `I^j` modulo `K`.
    pub fn gens(&mut self, j: usize) -> &[Polynomial] {
        while self.gens.len() <= j {
            let next = self
                .quotient
                .product_gens(self.gens.last().unwrap(), &self.gens[1])
                .expect("powers live in one ring");
            self.gens.push(next);
        }
        &self.gens[j]
    }

    /// `I^j + K` as an ideal of the ambient ring.
    pub fn lifted(&mut self, j: usize) -> &Ideal {
        self.gens(j);
        if self.lifted.len() <= j {
            self.lifted.resize(j + 1, None);
        }
        if self.lifted[j].is_none() {
            self.lifted[j] = Some(self.quotient.lift(&self.gens[j]).expect("same ring"));
        }
        self.lifted[j].as_ref().unwrap()
    }
}
