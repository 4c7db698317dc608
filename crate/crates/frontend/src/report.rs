//! Serializable run reports and their text rendering.

use blowup_core::invariants::{InvariantReport, RegularityStatus};
use blowup_core::theorems::{TheoremReport, Verdict};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const CAVEATS: [&str; 2] = [
    "local rings are modelled by graded quotients of polynomial rings localized at the irrelevant ideal; all invariants are computed in the graded setting",
    "the residue field is the finite field F_p; random reductions and generic choices are generic only with high probability",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub version: String,
    pub prime: u32,
    pub seed: u64,
    pub caveats: Vec<String>,
    pub instances: Vec<InstanceReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Source {
    pub line: usize,
    /// `check`, `invariants` or `corpus`.
    pub statement: String,
    /// Position inside a corpus statement.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub source: Source,
    pub ring: String,
    pub ideal: String,
    pub invariants: Option<InvariantSummary>,
    pub theorems: Vec<TheoremReport>,
    #[serde(default)]
    pub notes: Vec<String>,
    #[serde(default)]
    pub error: Option<String>,
    pub timing_ms: Option<u64>,
}

#[allow(non_snake_case)]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantSummary {
    pub dim: i64,
    pub depth_R: i64,
    pub cohen_macaulay: bool,
    pub g: Option<i64>,
    pub l: i64,
    pub deviation: Option<i64>,
    pub reduction: ReductionSummary,
    pub r_J: u32,
    pub s: usize,
    pub depths: BTreeMap<usize, i64>,
    pub depth_G: i64,
    pub grade_Gplus: i64,
    pub regularity: RegularitySummary,
    pub hilbert_consistent: bool,
    pub filter_regular: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionSummary {
    pub gens: Vec<String>,
    pub user_supplied: bool,
    pub trials: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularitySummary {
    pub value: Option<i64>,
    pub status: RegularityStatus,
    pub window: (i64, i64),
}

impl InvariantSummary {
    pub fn from_report(r: &InvariantReport) -> Self {
        InvariantSummary {
            dim: r.dim_r,
            depth_R: r.depth_r,
            cohen_macaulay: r.is_cm_r,
            g: r.g,
            l: r.l,
            deviation: r.deviation,
            reduction: ReductionSummary {
                gens: r.reduction.j_gens.iter().map(|g| g.to_string()).collect(),
                user_supplied: r.reduction.user_supplied,
                trials: r.reduction.trials,
            },
            r_J: r.r_j(),
            s: r.s(),
            depths: r.depths.clone(),
            depth_G: r.depth_g,
            grade_Gplus: r.grade_gplus,
            regularity: RegularitySummary { value: r.regularity.value, status: r.regularity.status, window: r.regularity.window },
            hilbert_consistent: r.hilbert.iter().all(|h| h.agrees()),
            filter_regular: r.filter_regular.as_ref().map(|f| f.passed),
        }
    }
}

impl RunReport {
    pub fn has_violation(&self) -> bool {
        self.instances.iter().any(|i| i.theorems.iter().any(|t| t.verdict == Verdict::Violation))
    }

    pub fn has_error(&self) -> bool {
        self.instances.iter().any(|i| i.error.is_some())
    }

    /// 2 on any violation, 1 on a kernel error, 0 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.has_violation() {
            2
        } else if self.has_error() {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "blowup {}  p = {}  seed = {}", self.version, self.prime, self.seed);
        for c in &self.caveats {
            let _ = writeln!(out, "caveat: {c}");
        }
        for (k, inst) in self.instances.iter().enumerate() {
            out.push('\n');
            inst.write_text(&mut out, k + 1);
        }
        out
    }
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or("-".into(), |v| v.to_string())
}

impl InstanceReport {
    fn write_text(&self, out: &mut String, k: usize) {
        let idx = self.source.index.map_or(String::new(), |i| format!(" #{i}"));
        let _ = writeln!(out, "[{k}] {} (line {}{idx})", self.source.statement, self.source.line);
        let _ = writeln!(out, "  R = {}", self.ring);
        let _ = writeln!(out, "  I = {}", self.ideal);
        if let Some(t) = self.timing_ms {
            let _ = writeln!(out, "  time {t} ms");
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "  error: {e}");
        }
        if let Some(inv) = &self.invariants {
            let _ = writeln!(
                out,
                "  dim R {}  depth R {}{}  ht I {}  l {}  deviation {}",
                inv.dim,
                inv.depth_R,
                if inv.cohen_macaulay { " (CM)" } else { "" },
                opt(&inv.g),
                inv.l,
                opt(&inv.deviation)
            );
            let _ = writeln!(
                out,
                "  J = ({})  s {}  r_J {}{}",
                inv.reduction.gens.join(", "),
                inv.s,
                inv.r_J,
                if inv.reduction.user_supplied { "  (given)" } else { "" }
            );
            let ds: Vec<String> = inv.depths.iter().map(|(j, d)| format!("{j}:{d}")).collect();
            let _ = writeln!(out, "  depth R/I^j  {}", ds.join(" "));
            let status = serde_json::to_value(inv.regularity.status).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
            let _ = writeln!(
                out,
                "  depth G {}  grade G+ {}  reg G {} ({status}, window {}..{})",
                inv.depth_G,
                inv.grade_Gplus,
                opt(&inv.regularity.value),
                inv.regularity.window.0,
                inv.regularity.window.1
            );
            if !inv.hilbert_consistent {
                let _ = writeln!(out, "  Hilbert check FAILED");
            }
        }
        if !self.theorems.is_empty() {
            let _ = writeln!(out, "  {:<9} {:>5} {:>6} {:>7}  verdict", "statement", "t", "bound", "actual");
            for t in &self.theorems {
                let _ = writeln!(out, "  {:<9} {:>5} {:>6} {:>7}  {}", t.id, opt(&t.t), opt(&t.bound), opt(&t.actual), t.verdict);
                for (name, h) in t.hypotheses.iter().filter(|(_, h)| !h.holds) {
                    let _ = writeln!(out, "      fails {name}: {}", h.evidence);
                }
                for n in &t.notes {
                    let _ = writeln!(out, "      note: {n}");
                }
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
    }
}
