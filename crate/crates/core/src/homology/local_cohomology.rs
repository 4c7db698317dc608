//! a-invariants of local cohomology with supports in the ideal generated by a
//! set of variables, and Castelnuovo–Mumford regularity for that grading.

use super::free::ModuleMap;
use super::koszul::{koszul_group, Variance};
use crate::algebra::Polynomial;
use serde::{Deserialize, Serialize};

/// Consecutive equal candidates required before a colimit is declared stable.
pub const STABLE_RUN: usize = 3;
/// Largest power of the variables tried by [`a_invariants`].
pub const MAX_POWER: u32 = 12;

/// Outcome of the Koszul colimit `H^i_{(y)}(M) = lim H^i(y^t; M)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalCohomologyData {
    /// Indices of the variables generating the support ideal.
    pub y_vars: Vec<usize>,
    /// `a_i` for `0 ≤ i ≤ #y`; `None` is −∞. Empty unless stable.
    pub a_invariants: Vec<Option<i64>>,
    /// Candidate `a_i` per power: `stabilization_trace[t−1][i]`.
    pub stabilization_trace: Vec<Vec<Option<i64>>>,
    /// Power at which the stable candidates first appeared.
    pub stable_from: Option<u32>,
}

impl LocalCohomologyData {
    pub fn is_stable(&self) -> bool {
        self.stable_from.is_some()
    }

    /// `max(a_i + i)`, or `None` when not stable or everything vanishes.
    pub fn regularity(&self) -> Option<i64> {
        if !self.is_stable() {
            return None;
        }
        self.a_invariants.iter().enumerate().filter_map(|(i, a)| a.map(|a| a + i as i64)).max()
    }
}

/// The grading by y-degree: weight 1 on the y variables.
pub fn y_weights(nvars: usize, y_vars: &[usize]) -> Vec<u32> {
    (0..nvars).map(|v| y_vars.contains(&v) as u32).collect()
}

/// Colimit of Koszul cohomology on `y^t` for `t = 1, …, t_max`. `y_twists`
/// are the y-degrees of the generators of `M`. A candidate vector is accepted
/// once it has repeated [`STABLE_RUN`] times and, when `window` is given, its
/// regularity lies in it.
pub fn a_invariants(
    presentation: &ModuleMap,
    y_vars: &[usize],
    y_twists: &[i64],
    t_max: u32,
    window: Option<(i64, i64)>,
) -> LocalCohomologyData {
    let ring = presentation.ring();
    let yw = y_weights(ring.nvars(), y_vars);
    let n = y_vars.len();
    let mut trace: Vec<Vec<Option<i64>>> = Vec::new();
    let mut out = LocalCohomologyData { y_vars: y_vars.to_vec(), a_invariants: Vec::new(), stabilization_trace: Vec::new(), stable_from: None };
    for t in 1..=t_max {
        let elems: Vec<Polynomial> = y_vars.iter().map(|&v| ring.var(v).pow(t)).collect();
        let degs = vec![t as i64; n];
        let cand: Vec<Option<i64>> = (0..=n)
            .map(|i| {
                let h = koszul_group(&elems, presentation, i, Variance::Cohomology);
                let tw = h.twists_for(y_twists, &degs);
                h.end_degree(ring, &yw, &tw)
            })
            .collect();
        trace.push(cand);
        let len = trace.len();
        if len >= STABLE_RUN && trace[len - STABLE_RUN..].windows(2).all(|w| w[0] == w[1]) {
            let last = trace[len - 1].clone();
            let reg = last.iter().enumerate().filter_map(|(i, a)| a.map(|a| a + i as i64)).max();
            let in_window = match (window, reg) {
                (Some((lo, hi)), Some(r)) => lo <= r && r <= hi,
                _ => true,
            };
            if in_window {
                let first = (0..len).rev().take_while(|&k| trace[k] == last).last().unwrap();
                out.a_invariants = last;
                out.stable_from = Some(first as u32 + 1);
                break;
            }
        }
    }
    out.stabilization_trace = trace;
    out
}

/// End degrees of Koszul homology `H_i(y; M)` in the y-grading, `None` for a
/// vanishing group.
pub fn koszul_homology_ends(presentation: &ModuleMap, y_vars: &[usize], y_twists: &[i64]) -> Vec<Option<i64>> {
    let ring = presentation.ring();
    let yw = y_weights(ring.nvars(), y_vars);
    let elems: Vec<Polynomial> = y_vars.iter().map(|&v| ring.var(v)).collect();
    let degs = vec![1i64; y_vars.len()];
    (0..=y_vars.len())
        .map(|i| {
            let h = koszul_group(&elems, presentation, i, Variance::Homology);
            let tw = h.twists_for(y_twists, &degs);
            h.end_degree(ring, &yw, &tw)
        })
        .collect()
}

/// Regularity in the y-grading as `max_i (end H_i(y; M) − i)`; `None` for
/// the zero module.
pub fn regularity_from_koszul(presentation: &ModuleMap, y_vars: &[usize], y_twists: &[i64]) -> Option<i64> {
    koszul_homology_ends(presentation, y_vars, y_twists)
        .into_iter()
        .enumerate()
        .filter_map(|(i, e)| e.map(|e| e - i as i64))
        .max()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PolyRing, PrimeField};

    #[test]
    fn polynomial_ring_has_regularity_zero() {
        let r = PolyRing::standard(PrimeField::default(), &["y1", "y2"]);
        let pres = ModuleMap::ideal_presentation(&r, &[]);
        let lc = a_invariants(&pres, &[0, 1], &[0], 6, None);
        assert_eq!(lc.a_invariants, vec![None, None, Some(-2)]);
        assert_eq!(lc.stable_from, Some(1));
        assert_eq!(lc.regularity(), Some(0));
        assert_eq!(regularity_from_koszul(&pres, &[0, 1], &[0]), Some(0));
    }

    #[test]
    fn nilpotent_ring() {
        // k[y]/(y^2): H^0 is everything, top degree 1
        let r = PolyRing::standard(PrimeField::default(), &["y"]);
        let pres = ModuleMap::ideal_presentation(&r, &[r.var(0).pow(2)]);
        assert_eq!(regularity_from_koszul(&pres, &[0], &[0]), Some(1));
        // the colimit sees H^1(y^t) = M(t) ≠ 0 with drifting top degree
        let lc = a_invariants(&pres, &[0], &[0], 5, None);
        assert!(!lc.is_stable());
    }
}
