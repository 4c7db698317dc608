//! Checkers for the depth bounds on `G`: each verifies its hypotheses on the
//! computed invariants, evaluates the bound and compares it with the actual
//! depth.

use crate::error::Result;
use crate::invariants::{Analysis, DepthBoundRow, InvariantReport};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub const STATEMENT_IDS: [&str; 10] =
    ["thm-1.1a", "thm-1.1b", "rem-1.2", "cor-1.3", "thm-1.5", "prop-1.8", "rem-1.9", "thm-2.5", "lem-2.2", "lem-2.3"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    HypothesesNotMet,
    BoundHolds,
    Equality,
    Violation,
    SkippedUnresolved,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::HypothesesNotMet => "HYPOTHESES_NOT_MET",
            Verdict::BoundHolds => "BOUND_HOLDS",
            Verdict::Equality => "EQUALITY",
            Verdict::Violation => "VIOLATION",
            Verdict::SkippedUnresolved => "SKIPPED_UNRESOLVED",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Infinity {
    #[serde(rename = "+inf")]
    Positive,
}

/// `t = min {depth R/I^j − r + j | 1 ≤ j ≤ r}`, `+∞` for `r = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TValue {
    Finite(i64),
    Infinite(Infinity),
}

impl TValue {
    pub const INFINITY: TValue = TValue::Infinite(Infinity::Positive);

    /// `max {floor, t}`.
    pub fn max_with(self, floor: i64) -> i64 {
        match self {
            TValue::Finite(t) => t.max(floor),
            TValue::Infinite(_) => floor,
        }
    }
}

impl fmt::Display for TValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TValue::Finite(t) => write!(f, "{t}"),
            TValue::Infinite(_) => f.write_str("+inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub holds: bool,
    pub evidence: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub id: String,
    pub hypotheses: BTreeMap<String, Hypothesis>,
    pub t: Option<TValue>,
    pub bound: Option<i64>,
    pub actual: Option<i64>,
    pub verdict: Verdict,
    #[serde(default)]
    pub notes: Vec<String>,
}

impl TheoremReport {
    fn new(id: &str) -> Self {
        TheoremReport { id: id.into(), hypotheses: BTreeMap::new(), t: None, bound: None, actual: None, verdict: Verdict::HypothesesNotMet, notes: Vec::new() }
    }

    fn hyp(&mut self, name: &str, holds: bool, evidence: impl Into<String>) -> &mut Self {
        self.hypotheses.insert(name.into(), Hypothesis { holds, evidence: evidence.into() });
        self
    }

    pub fn hypotheses_met(&self) -> bool {
        self.hypotheses.values().all(|h| h.holds)
    }

    /// Lower bound `actual ≥ bound`.
    fn judge_lower(&mut self) {
        self.verdict = if !self.hypotheses_met() {
            Verdict::HypothesesNotMet
        } else {
            match (self.actual, self.bound) {
                (Some(a), Some(b)) if a < b => Verdict::Violation,
                (Some(a), Some(b)) if a == b => Verdict::Equality,
                (Some(_), Some(_)) => Verdict::BoundHolds,
                _ => Verdict::SkippedUnresolved,
            }
        };
    }
}

/// `t` from the depths of powers; `None` if a needed depth is missing.
pub fn t_value(depths: &BTreeMap<usize, i64>, r: u32) -> Option<TValue> {
    if r == 0 {
        return Some(TValue::INFINITY);
    }
    let mut t = i64::MAX;
    for j in 1..=r as usize {
        t = t.min(depths.get(&j)? - r as i64 + j as i64);
    }
    Some(TValue::Finite(t))
}

fn cm_hyp(rep: &mut TheoremReport, inv: &InvariantReport) {
    rep.hyp("r_cohen_macaulay", inv.is_cm_r, format!("depth R = {}, dim R = {}", inv.depth_r, inv.dim_r));
}

fn g_text(inv: &InvariantReport) -> String {
    inv.g.map_or("unavailable".into(), |g| g.to_string())
}

fn deviation_hyp(rep: &mut TheoremReport, inv: &InvariantReport, dev: i64) {
    let holds = inv.g.is_some_and(|g| inv.l == g + dev);
    let name = if dev == 0 { "equimultiple" } else { "analytic_deviation_one" };
    rep.hyp(name, holds, format!("ℓ = {}, g = {}", inv.l, g_text(inv)));
}

fn grade_hyp(rep: &mut TheoremReport, inv: &InvariantReport, name: &str, offset: i64) {
    let holds = inv.g.is_some_and(|g| inv.grade_gplus == g + offset);
    rep.hyp(name, holds, format!("grade G₊ = {}, g = {}", inv.grade_gplus, g_text(inv)));
}

fn reduction_note(rep: &mut TheoremReport, inv: &InvariantReport) {
    rep.notes.push(format!("r = r_J = {} for a verified reduction with {} generators; r(I) ≤ r_J", inv.r_j(), inv.s()));
}

/// Equimultiple ideals: part `a` assumes `grade G₊ = g` and bounds by
/// `g + max{0, t}`, part `b` assumes `grade G₊ = g − 1` and bounds by
/// `g + max{−1, t}`.
pub fn check_equimultiple(inv: &InvariantReport, part_b: bool) -> TheoremReport {
    let mut rep = TheoremReport::new(if part_b { "thm-1.1b" } else { "thm-1.1a" });
    cm_hyp(&mut rep, inv);
    deviation_hyp(&mut rep, inv, 0);
    if part_b {
        grade_hyp(&mut rep, inv, "grade_gplus_eq_g_minus_1", -1);
    } else {
        grade_hyp(&mut rep, inv, "grade_gplus_eq_g", 0);
    }
    reduction_note(&mut rep, inv);
    rep.t = t_value(&inv.depths, inv.r_j());
    if inv.r_j() == 0 {
        rep.notes.push("r = 0: t = +inf".into());
    }
    rep.actual = Some(inv.depth_g);
    if let (Some(g), Some(t)) = (inv.g, rep.t) {
        rep.bound = Some(g + t.max_with(if part_b { -1 } else { 0 }));
    }
    rep.judge_lower();
    rep
}

/// `depth G ≤ min {depth R/I^j} + ℓ`, the minimum truncated at `r̂ + s`.
pub fn check_upper_bound(inv: &InvariantReport) -> TheoremReport {
    let mut rep = TheoremReport::new("rem-1.2");
    let cut = inv.regularity.value.unwrap_or(inv.r_j() as i64).max(inv.r_j() as i64) as usize + inv.s();
    let truncated = inv.depths.range(1..=cut.max(1)).map(|(_, &d)| d).min();
    let widened = inv.depths.values().copied().min();
    rep.notes.push(format!("infimum over 1 ≤ j ≤ {}", cut.max(1)));
    rep.actual = Some(inv.depth_g);
    rep.bound = truncated.map(|m| m + inv.l);
    let verdict_for = |b: Option<i64>| match b {
        Some(b) if inv.depth_g > b => Verdict::Violation,
        Some(_) => Verdict::BoundHolds,
        None => Verdict::SkippedUnresolved,
    };
    rep.verdict = verdict_for(rep.bound);
    if verdict_for(widened.map(|m| m + inv.l)) != rep.verdict {
        rep.notes.push("verdict changes when the window is widened".into());
    }
    if rep.bound == rep.actual {
        rep.notes.push("tight".into());
    }
    rep
}

/// Equimultiple, `r = 2`, `depth R/I² < depth R/I`: `depth G = g + depth R/I²`.
pub fn check_cor_r2(inv: &InvariantReport) -> TheoremReport {
    let mut rep = TheoremReport::new("cor-1.3");
    cm_hyp(&mut rep, inv);
    deviation_hyp(&mut rep, inv, 0);
    rep.hyp("reduction_number_two", inv.r_j() == 2, format!("r_J = {}", inv.r_j()));
    let (d1, d2) = (inv.depth(1), inv.depth(2));
    rep.hyp("depth_drops", matches!((d1, d2), (Some(a), Some(b)) if b < a), format!("depth R/I = {d1:?}, depth R/I² = {d2:?}"));
    let holds = inv.g.is_some_and(|g| inv.grade_gplus == g || inv.grade_gplus == g - 1);
    rep.hyp("grade_gplus_g_or_g_minus_1", holds, format!("grade G₊ = {}, g = {}", inv.grade_gplus, g_text(inv)));
    reduction_note(&mut rep, inv);
    rep.t = t_value(&inv.depths, inv.r_j());
    rep.actual = Some(inv.depth_g);
    rep.bound = inv.g.zip(d2).map(|(g, d)| g + d);
    rep.verdict = if !rep.hypotheses_met() {
        Verdict::HypothesesNotMet
    } else if rep.bound == rep.actual {
        Verdict::Equality
    } else {
        Verdict::Violation
    };
    rep
}

/// Analytic deviation one: `depth G ≥ g + 1 + max{−1, t}`. The localization
/// hypothesis `r(I_℘) < r` is taken from the caller; `None` means absent.
pub fn check_dev_one(inv: &InvariantReport, localization: Option<bool>) -> TheoremReport {
    let mut rep = TheoremReport::new("thm-1.5");
    cm_hyp(&mut rep, inv);
    deviation_hyp(&mut rep, inv, 1);
    grade_hyp(&mut rep, inv, "grade_gplus_eq_g", 0);
    let evidence = match localization {
        Some(true) => "asserted by the user",
        Some(false) => "denied by the user",
        None => "not asserted; the condition is not computed",
    };
    rep.hyp("localization_reduction_numbers", localization == Some(true), evidence);
    rep.notes.push(
        "the hypothesis r(I_p) < r for primes p ⊇ I of height g is user-asserted; it is also stated as \"generically a complete intersection\", which is not assumed equivalent"
            .into(),
    );
    reduction_note(&mut rep, inv);
    rep.t = t_value(&inv.depths, inv.r_j());
    rep.actual = Some(inv.depth_g);
    if let (Some(g), Some(t)) = (inv.g, rep.t) {
        rep.bound = Some(g + 1 + t.max_with(-1));
    }
    rep.judge_lower();
    rep
}

/// `min({depth R/I^j | 1 ≤ j ≤ r−1} ∪ {depth R/I^r − 1, depth R/I^{r+1}})`.
fn two_generator_bound(inv: &InvariantReport) -> Option<i64> {
    let r = inv.r_j() as usize;
    let mut vals: Vec<i64> = (1..r).map(|j| inv.depth(j)).collect::<Option<_>>()?;
    if r >= 1 {
        vals.push(inv.depth(r)? - 1);
    }
    vals.push(inv.depth(r + 1)?);
    vals.into_iter().min()
}

/// Shared conclusions of the two-generator statements.
fn two_generator_conclusions(rep: &mut TheoremReport, inv: &InvariantReport) {
    let r = inv.r_j() as usize;
    rep.actual = Some(inv.depth_g);
    rep.bound = two_generator_bound(inv);
    rep.judge_lower();
    if rep.verdict == Verdict::HypothesesNotMet || r == 0 {
        return;
    }
    let Some(floor) = inv.depth(r).zip(inv.depth(r + 1)).map(|(a, b)| (a - 1).min(b)) else { return };
    for j in r + 1..=r + 3 {
        match inv.depth(j) {
            Some(d) if d < floor => {
                rep.notes.push(format!("depth R/I^{j} = {d} < {floor}"));
                rep.verdict = Verdict::Violation;
            }
            Some(_) => {}
            None => rep.notes.push(format!("depth R/I^{j} not computed")),
        }
    }
}

fn two_generators(rep: &mut TheoremReport, a: &Analysis) -> Result<Option<(crate::algebra::Polynomial, crate::algebra::Polynomial)>> {
    let inv = &a.report;
    let ok = inv.s() == 2;
    rep.hyp("two_generated_reduction", ok, format!("s = {}", inv.s()));
    Ok(ok.then(|| (inv.reduction.j_gens[0].clone(), inv.reduction.j_gens[1].clone())))
}

fn colon_equality(rep: &mut TheoremReport, a: &mut Analysis, a1: &crate::algebra::Polynomial, a2: &crate::algebra::Polynomial) -> Result<()> {
    let r = a.report.r_j() as usize;
    let ir = a.powers.lifted(r).clone();
    let holds = ir.colon_poly(a1)?.same_as(&ir.colon_poly(a2)?);
    rep.hyp("colon_equality", holds, format!("I^{r} : a1 vs I^{r} : a2"));
    Ok(())
}

/// Height-two equimultiple ideal with `J = (a_1, a_2)` and
/// `I^r : a_1 = I^r : a_2`.
pub fn check_prop_equi2(a: &mut Analysis) -> Result<TheoremReport> {
    let mut rep = TheoremReport::new("prop-1.8");
    let inv = a.report.clone();
    deviation_hyp(&mut rep, &inv, 0);
    rep.hyp("height_two", inv.g == Some(2), format!("g = {}", g_text(&inv)));
    if let Some((a1, a2)) = two_generators(&mut rep, a)? {
        colon_equality(&mut rep, a, &a1, &a2)?;
    }
    reduction_note(&mut rep, &inv);
    two_generator_conclusions(&mut rep, &inv);
    Ok(rep)
}

/// Height one, deviation one, `(a_1 : a_2^∞) ∩ I^r ⊆ (a_1)` and the colon
/// equality.
pub fn check_rem_equi2(a: &mut Analysis) -> Result<TheoremReport> {
    let mut rep = TheoremReport::new("rem-1.9");
    let inv = a.report.clone();
    deviation_hyp(&mut rep, &inv, 1);
    rep.hyp("height_one", inv.g == Some(1), format!("g = {}", g_text(&inv)));
    if let Some((a1, a2)) = two_generators(&mut rep, a)? {
        colon_equality(&mut rep, a, &a1, &a2)?;
        let q = a.quotient.clone();
        let a1k = q.lift(std::slice::from_ref(&a1))?;
        let sat = a1k.saturate(&a2)?;
        let r = inv.r_j() as usize;
        let inter = sat.intersect(a.powers.lifted(r))?;
        rep.hyp("saturation_contained", a1k.contains_ideal(&inter), "(a1 : a2^∞) ∩ I^r ⊆ (a1)");
    }
    reduction_note(&mut rep, &inv);
    two_generator_conclusions(&mut rep, &inv);
    Ok(rep)
}

/// `depth G ≥ min({depth R/I^j | 1 ≤ j ≤ r̂+1} ∪ {depth R/I^j + j − r̂ | 2+r̂ ≤ j ≤ s+r̂})`.
pub fn check_thm_reg(inv: &InvariantReport) -> TheoremReport {
    let mut rep = TheoremReport::new("thm-2.5");
    cm_hyp(&mut rep, inv);
    rep.actual = Some(inv.depth_g);
    let Some(r_hat) = inv.r_hat() else {
        rep.verdict = Verdict::SkippedUnresolved;
        rep.notes.push(format!("reg G not exact ({:?}); r_J = {} is only a lower bound", inv.regularity.status, inv.r_j()));
        return rep;
    };
    rep.notes.push(format!("reg G = {r_hat}, s = {}", inv.s()));
    let r = r_hat.max(0) as usize;
    let first: Option<Vec<i64>> = (1..=r + 1).map(|j| inv.depth(j)).collect();
    let second: Option<Vec<i64>> = (r + 2..=r + inv.s()).map(|j| inv.depth(j).map(|d| d + j as i64 - r_hat)).collect();
    match (first, second) {
        (Some(a), Some(b)) => {
            rep.bound = a.into_iter().chain(b).min();
            rep.judge_lower();
        }
        _ => {
            rep.verdict = Verdict::SkippedUnresolved;
            rep.notes.push("depths of the needed powers were not computed".into());
        }
    }
    rep
}

fn lemma_rows(id: &str, inv: &InvariantReport, rows: &[DepthBoundRow], condition: &str) -> TheoremReport {
    let mut rep = TheoremReport::new(id);
    cm_hyp(&mut rep, inv);
    let exact = inv.r_hat().is_some();
    rep.hyp("regularity_exact", exact, format!("{:?}", inv.regularity.status));
    let (found, evidence) = match &inv.filter_regular {
        Some(fr) if fr.passed => (true, format!("ordering {:?} after {} tries", fr.ordering, fr.orderings_tried)),
        Some(fr) => (false, format!("no ordering passed among {}", fr.orderings_tried)),
        None => (false, "not checked (inhomogeneous reduction or inexact regularity)".into()),
    };
    rep.hyp(condition, found, evidence);
    if !rep.hypotheses_met() {
        rep.verdict = Verdict::HypothesesNotMet;
        return rep;
    }
    let finite: Vec<&DepthBoundRow> = rows.iter().filter(|r| r.actual.is_some() && r.bound.is_some()).collect();
    let tightest = finite.iter().min_by_key(|r| (r.actual.unwrap() - r.bound.unwrap(), r.i, r.j));
    if let Some(row) = tightest {
        rep.actual = row.actual;
        rep.bound = row.bound;
        rep.notes.push(format!("tightest at i = {}, j = {}", row.i, row.j));
    }
    rep.notes.push(format!("{} instances checked", rows.len()));
    rep.verdict = if rows.iter().any(|r| !r.holds()) {
        for r in rows.iter().filter(|r| !r.holds()) {
            rep.notes.push(format!("fails at i = {}, j = {}: {:?} < {:?}", r.i, r.j, r.actual, r.bound));
        }
        Verdict::Violation
    } else if tightest.is_some_and(|r| r.actual == r.bound) {
        Verdict::Equality
    } else {
        Verdict::BoundHolds
    };
    rep
}

/// `depth R/𝔞_i I^j` bounds for a basis satisfying the first
/// filter-regularity condition.
pub fn check_lemma_22(inv: &InvariantReport) -> TheoremReport {
    lemma_rows("lem-2.2", inv, &inv.lemma22, "filter_regular_basis")
}

/// Depth bounds on the graded pieces of `G/(a*_1..a*_i)`.
pub fn check_lemma_23(inv: &InvariantReport) -> TheoremReport {
    lemma_rows("lem-2.3", inv, &inv.lemma23, "filter_regular_basis")
}

/// Runs the checkers named in `ids` (all when empty), in the order of
/// [`STATEMENT_IDS`].
pub fn check_selected(a: &mut Analysis, ids: &BTreeSet<String>, localization: Option<bool>) -> Result<Vec<TheoremReport>> {
    let mut out = Vec::new();
    for id in STATEMENT_IDS {
        if !ids.is_empty() && !ids.contains(id) {
            continue;
        }
        let inv = &a.report;
        let rep = match id {
            "thm-1.1a" => check_equimultiple(inv, false),
            "thm-1.1b" => check_equimultiple(inv, true),
            "rem-1.2" => check_upper_bound(inv),
            "cor-1.3" => check_cor_r2(inv),
            "thm-1.5" => check_dev_one(inv, localization),
            "prop-1.8" => check_prop_equi2(a)?,
            "rem-1.9" => check_rem_equi2(a)?,
            "thm-2.5" => check_thm_reg(inv),
            "lem-2.2" => check_lemma_22(inv),
            "lem-2.3" => check_lemma_23(inv),
            _ => unreachable!(),
        };
        out.push(rep);
    }
    Ok(out)
}

pub fn check_all(a: &mut Analysis, localization: Option<bool>) -> Result<Vec<TheoremReport>> {
    check_selected(a, &BTreeSet::new(), localization)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PolyRing, PrimeField};
    use crate::groebner::QuotientRing;
    use crate::invariants::{analyze, AnalysisOptions};

    #[test]
    fn t_values() {
        let depths = BTreeMap::from([(1, 2), (2, 1)]);
        assert_eq!(t_value(&depths, 2), Some(TValue::Finite(1)));
        assert_eq!(t_value(&depths, 0), Some(TValue::INFINITY));
        assert_eq!(t_value(&depths, 3), None);
        assert_eq!(TValue::INFINITY.max_with(-1), -1);
        assert_eq!(serde_json::to_string(&TValue::INFINITY).unwrap(), "\"+inf\"");
        let back: TValue = serde_json::from_str("\"+inf\"").unwrap();
        assert_eq!(back, TValue::INFINITY);
    }

    #[test]
    fn maximal_ideal_of_the_plane() {
        let s = PolyRing::standard(PrimeField::default(), &["x", "y"]);
        let r = QuotientRing::polynomial_ring(&s);
        let mut a = analyze(&r, &[s.var(0), s.var(1)], &AnalysisOptions::default()).unwrap();
        let reps = check_all(&mut a, None).unwrap();
        let get = |id: &str| reps.iter().find(|r| r.id == id).unwrap();
        let t11 = get("thm-1.1a");
        assert_eq!((t11.bound, t11.actual, t11.verdict), (Some(2), Some(2), Verdict::Equality));
        assert_eq!(t11.t, Some(TValue::INFINITY));
        assert_eq!(get("rem-1.2").verdict, Verdict::BoundHolds);
        let t25 = get("thm-2.5");
        assert_eq!((t25.bound, t25.verdict), (Some(0), Verdict::BoundHolds));
        assert_eq!(get("thm-1.5").verdict, Verdict::HypothesesNotMet);
        assert!(reps.iter().all(|r| r.verdict != Verdict::Violation));
    }
}
