use crate::algebra::{PolyRing, Polynomial, Vector};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use std::sync::Arc;

/// `⊕ S(−twists[i])`: basis vector `i` has degree `twists[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedFreeModule {
    pub twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i64>) -> Self {
        GradedFreeModule { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }
}

/// A graded map of free modules, stored by columns: column `j` is the image
/// of the `j`-th basis vector of the source.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    ring: Arc<PolyRing>,
    source: GradedFreeModule,
    target: GradedFreeModule,
    columns: Vec<Vector>,
}

impl ModuleMap {
    pub fn new(ring: &Arc<PolyRing>, target: GradedFreeModule, columns: Vec<Vector>, source: GradedFreeModule) -> Self {
        debug_assert_eq!(columns.len(), source.rank());
        ModuleMap { ring: ring.clone(), source, target, columns }
    }

    /// Columns with source twists read off their degrees; zero columns get
    /// twist 0.
    pub fn from_columns(ring: &Arc<PolyRing>, target: GradedFreeModule, columns: Vec<Vector>) -> Self {
        let source = GradedFreeModule::new(columns.iter().map(|c| c.degree(ring, &target.twists).unwrap_or(0)).collect());
        ModuleMap::new(ring, target, columns, source)
    }

    /// Presentation `S^m → S` of `S/(gens)`.
    pub fn ideal_presentation(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Self {
        let cols = gens.iter().filter(|g| !g.is_zero()).map(|g| Vector::from_poly(g, 0)).collect();
        Self::from_columns(ring, GradedFreeModule::new(vec![0]), cols)
    }

    pub fn quotient_presentation(ideal: &Ideal) -> Self {
        Self::ideal_presentation(ideal.ring(), ideal.gens())
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }

    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }

    pub fn columns(&self) -> &[Vector] {
        &self.columns
    }

    pub fn entry(&self, row: usize, col: usize) -> Polynomial {
        self.columns[col].component(&self.ring, row as u32)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    /// Every column is homogeneous of the degree of its source basis vector.
    pub fn is_homogeneous(&self) -> bool {
        self.columns.iter().zip(&self.source.twists).all(|(c, &d)| {
            c.is_zero() || (c.is_homogeneous(&self.ring, &self.target.twists) && c.degree(&self.ring, &self.target.twists) == Some(d))
        })
    }

    pub fn check_homogeneous(&self) -> Result<()> {
        if self.is_homogeneous() {
            Ok(())
        } else {
            Err(Error::NonHomogeneous("module map".into()))
        }
    }

    /// Image of a source vector.
    pub fn apply(&self, v: &Vector) -> Vector {
        let mut acc = Vector::zero();
        for t in v.terms() {
            acc = acc.add_scaled(&self.ring, &self.columns[t.comp as usize], t.coeff, &t.mon);
        }
        acc
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> ModuleMap {
        let cols = other.columns.iter().map(|c| self.apply(c)).collect();
        ModuleMap::new(&self.ring, self.target.clone(), cols, other.source.clone())
    }

    /// Position of some entry that is a nonzero constant.
    pub fn unit_entry(&self) -> Option<(usize, usize)> {
        for (j, c) in self.columns.iter().enumerate() {
            for t in c.terms().iter().filter(|t| t.mon.is_one()) {
                if c.component(&self.ring, t.comp).is_constant() {
                    return Some((t.comp as usize, j));
                }
            }
        }
        None
    }
}
