use crate::blowup::BlowupPresentation;
use crate::homology::{a_invariants, koszul_homology_ends, FreeResolution, LocalCohomologyData, ModuleMap};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegularityStatus {
    Exact,
    LowerBoundOnly,
    Unresolved,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RegularityMethod {
    /// `max_i (end H_i(y; G) − i)` from Koszul homology on the y variables.
    #[default]
    Koszul,
    /// Colimit of Koszul cohomology on `y^t` only.
    Colimit,
}

/// `reg G` in the y-grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regularity {
    pub value: Option<i64>,
    pub status: RegularityStatus,
    /// `[r_J, max_i (max y-twist of F_i − i)]` over a resolution `F` of `G`.
    pub window: (i64, i64),
    pub koszul_ends: Vec<Option<i64>>,
    pub colimit: Option<LocalCohomologyData>,
    pub notes: Vec<String>,
}

impl Regularity {
    /// The value, only when it is exact.
    pub fn exact(&self) -> Option<i64> {
        (self.status == RegularityStatus::Exact).then_some(self.value).flatten()
    }
}

/// y-degrees of the basis of every module in `res`, read off the columns.
pub fn resolution_y_twists(b: &BlowupPresentation, res: &FreeResolution) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0i64; res.modules()[0].rank()]];
    for map in res.maps() {
        let prev = out.last().unwrap();
        let tw = map
            .columns()
            .iter()
            .map(|c| c.terms().iter().map(|t| b.y_degree(&t.mon) as i64 + prev[t.comp as usize]).max().unwrap_or(0))
            .collect();
        out.push(tw);
    }
    out
}

/// Upper end of the sanity window.
pub fn resolution_bound(b: &BlowupPresentation, res: &FreeResolution) -> i64 {
    resolution_y_twists(b, res)
        .iter()
        .enumerate()
        .flat_map(|(i, tw)| tw.iter().map(move |&d| d - i as i64))
        .max()
        .unwrap_or(0)
}

/// `reg G` for the presentation `pres` of `G`, checked against the window
/// `[r_J, resolution bound]`. With `colimit_power` the colimit protocol is
/// also run as a cross-check, or as the only method.
pub fn regularity(
    b: &BlowupPresentation,
    pres: &ModuleMap,
    res: &FreeResolution,
    r_j: u32,
    method: RegularityMethod,
    colimit_power: Option<u32>,
) -> Regularity {
    let ys = b.y_vars();
    let window = (r_j as i64, resolution_bound(b, res).max(r_j as i64));
    let inside = |v: i64| window.0 <= v && v <= window.1;
    let mut notes = Vec::new();
    let colimit = match (method, colimit_power) {
        (RegularityMethod::Colimit, t) => Some(a_invariants(pres, &ys, &[0], t.unwrap_or(crate::homology::local_cohomology::MAX_POWER), Some(window))),
        (RegularityMethod::Koszul, Some(t)) => Some(a_invariants(pres, &ys, &[0], t, Some(window))),
        (RegularityMethod::Koszul, None) => None,
    };
    match method {
        RegularityMethod::Koszul => {
            let ends = koszul_homology_ends(pres, &ys, &[0]);
            let value = ends.iter().enumerate().filter_map(|(i, e)| e.map(|e| e - i as i64)).max();
            let status = match value {
                Some(v) if inside(v) => RegularityStatus::Exact,
                Some(v) => {
                    notes.push(format!("Koszul regularity {v} outside window [{}, {}]", window.0, window.1));
                    RegularityStatus::Unresolved
                }
                None => RegularityStatus::Unresolved,
            };
            if let Some(lc) = &colimit {
                match lc.regularity() {
                    Some(c) if Some(c) != value => notes.push(format!("colimit stabilized at {c}, Koszul gives {value:?}")),
                    None => notes.push("colimit did not stabilize".into()),
                    _ => {}
                }
            }
            Regularity { value, status, window, koszul_ends: ends, colimit, notes }
        }
        RegularityMethod::Colimit => {
            let lc = colimit.expect("colimit computed");
            let (value, status) = match lc.regularity() {
                Some(v) => (Some(v), RegularityStatus::Exact),
                None => {
                    notes.push("colimit did not stabilize; r_J used as lower bound".into());
                    (Some(r_j as i64), RegularityStatus::LowerBoundOnly)
                }
            };
            Regularity { value, status, window, koszul_ends: Vec::new(), colimit: Some(lc), notes }
        }
    }
}
