use super::free::{GradedFreeModule, ModuleMap};
use super::syzygy::{echelon, minimal_generators, preimage};
use crate::algebra::{PolyRing, Vector};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Graded Betti numbers: `rows[i][d]` is the number of degree-`d` generators
/// of the `i`-th free module.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct BettiTable {
    pub rows: Vec<BTreeMap<i64, usize>>,
}

impl BettiTable {
    pub fn total(&self, i: usize) -> usize {
        self.rows.get(i).map_or(0, |r| r.values().sum())
    }

    pub fn totals(&self) -> Vec<usize> {
        (0..self.rows.len()).map(|i| self.total(i)).collect()
    }
}

/// A graded free resolution `F_0 ← F_1 ← … ← F_L` of `coker(d_1)`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    ring: Arc<PolyRing>,
    modules: Vec<GradedFreeModule>,
    maps: Vec<ModuleMap>,
}

impl FreeResolution {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// `F_0, …, F_L`.
    pub fn modules(&self) -> &[GradedFreeModule] {
        &self.modules
    }

    /// `d_1, …, d_L` with `d_i : F_i → F_{i−1}`.
    pub fn maps(&self) -> &[ModuleMap] {
        &self.maps
    }

    pub fn is_zero_module(&self) -> bool {
        self.modules[0].rank() == 0
    }

    /// Length of the resolution; for a minimal one this is the projective
    /// dimension.
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn betti(&self) -> BettiTable {
        let rows = self
            .modules
            .iter()
            .map(|m| {
                let mut row = BTreeMap::new();
                for &t in &m.twists {
                    *row.entry(t).or_insert(0) += 1;
                }
                row
            })
            .collect();
        BettiTable { rows }
    }

    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| m.unit_entry().is_none())
    }

    /// `d_i ∘ d_{i+1} = 0` for every `i`.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| w[0].compose(&w[1]).is_zero())
    }
}

/// Minimal graded free resolution of the cokernel of a homogeneous map.
pub fn free_resolution(presentation: &ModuleMap) -> Result<FreeResolution> {
    presentation.check_homogeneous()?;
    let ring = presentation.ring().clone();
    let f0 = presentation.target().clone();
    let cols = echelon(&ring, &f0.twists, minimal_generators(&ring, &f0.twists, presentation.columns()));
    let d1 = ModuleMap::from_columns(&ring, f0.clone(), cols);
    let mut modules = vec![f0, d1.source().clone()];
    let mut maps = vec![d1];
    // Hilbert's syzygy theorem bounds the length; the extra slack only guards
    // against a kernel bug looping forever.
    for _ in 0..ring.nvars() + 2 {
        let last = maps.last().unwrap();
        if last.source().rank() == 0 {
            break;
        }
        let ker = preimage(&ring, &last.target().twists, &last.source().twists, last.columns(), &[], true);
        let ker = echelon(&ring, &last.source().twists, ker);
        let next = ModuleMap::from_columns(&ring, last.source().clone(), ker);
        modules.push(next.source().clone());
        maps.push(next);
    }
    prune(&ring, &mut modules, &mut maps);
    while maps.last().is_some_and(|m| m.source().rank() == 0) {
        maps.pop();
        modules.pop();
    }
    Ok(FreeResolution { ring, modules, maps })
}

/// Removes unit entries by change of basis until the resolution is minimal.
fn prune(ring: &Arc<PolyRing>, modules: &mut [GradedFreeModule], maps: &mut [ModuleMap]) {
    let f = *ring.field();
    loop {
        let Some((i, (r, c))) = maps.iter().enumerate().find_map(|(i, m)| m.unit_entry().map(|p| (i, p))) else {
            return;
        };
        let pivot = maps[i].columns()[c].clone();
        let u = maps[i].entry(r, c).leading_coeff().unwrap();
        let uinv = f.inv(u);
        let tgt_rank = modules[i].rank();
        let drop_row = |n: usize, row: usize| -> Vec<Option<u32>> {
            (0..n).map(|k| if k == row { None } else { Some((k - (k > row) as usize) as u32) }).collect()
        };
        let row_map = drop_row(tgt_rank, r);
        let mut cols = Vec::new();
        for (j, col) in maps[i].columns().iter().enumerate() {
            if j == c {
                continue;
            }
            let a = col.component(ring, r as u32);
            let cleared = if a.is_zero() { col.clone() } else { col.sub(ring, &pivot.mul_poly(ring, &a.scale(uinv))) };
            cols.push(cleared.remap(ring, &row_map));
        }
        let mut tw_t = modules[i].twists.clone();
        tw_t.remove(r);
        let mut tw_s = modules[i + 1].twists.clone();
        tw_s.remove(c);
        modules[i] = GradedFreeModule::new(tw_t.clone());
        modules[i + 1] = GradedFreeModule::new(tw_s.clone());
        maps[i] = ModuleMap::new(ring, modules[i].clone(), cols, modules[i + 1].clone());
        if i > 0 {
            let prev = &maps[i - 1];
            let pcols: Vec<Vector> = prev.columns().iter().enumerate().filter(|(k, _)| *k != r).map(|(_, v)| v.clone()).collect();
            maps[i - 1] = ModuleMap::new(ring, prev.target().clone(), pcols, modules[i].clone());
        }
        if i + 1 < maps.len() {
            let next = &maps[i + 1];
            let col_map = drop_row(next.target().rank(), c);
            let ncols: Vec<Vector> = next.columns().iter().map(|v| v.remap(ring, &col_map)).collect();
            maps[i + 1] = ModuleMap::new(ring, modules[i + 1].clone(), ncols, next.source().clone());
        }
    }
}

/// Depth with respect to the maximal graded ideal, by Auslander–Buchsbaum.
pub fn depth_module(presentation: &ModuleMap) -> Result<i64> {
    let res = free_resolution(presentation)?;
    if res.is_zero_module() {
        return Err(Error::ZeroModule);
    }
    Ok(presentation.ring().nvars() as i64 - res.length() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PrimeField;

    #[test]
    fn residue_field_of_the_plane() {
        let r = PolyRing::standard(PrimeField::default(), &["x", "y"]);
        let pres = ModuleMap::ideal_presentation(&r, &[r.var(0), r.var(1)]);
        let res = free_resolution(&pres).unwrap();
        assert_eq!(res.betti().totals(), vec![1, 2, 1]);
        assert!(res.is_complex() && res.is_minimal());
        assert_eq!(depth_module(&pres).unwrap(), 0);
    }

    #[test]
    fn unit_entries_are_pruned() {
        // coker of (1, x) : S^2 -> S^2 ... presented redundantly
        let r = PolyRing::standard(PrimeField::default(), &["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let col0 = Vector::from_components(&[r.one(), x.clone()]);
        let col1 = Vector::from_components(&[r.zero(), &x * &y]);
        let pres = ModuleMap::new(&r, GradedFreeModule::new(vec![0, -1]), vec![col0, col1], GradedFreeModule::new(vec![0, 1]));
        let res = free_resolution(&pres).unwrap();
        assert!(res.is_minimal());
        // the module is S(1)/(xy): rank one, one relation
        assert_eq!(res.betti().totals(), vec![1, 1]);
    }

    #[test]
    fn zero_module_is_an_error() {
        let r = PolyRing::standard(PrimeField::default(), &["x"]);
        let pres = ModuleMap::ideal_presentation(&r, &[r.one()]);
        assert_eq!(depth_module(&pres), Err(Error::ZeroModule));
    }
}
