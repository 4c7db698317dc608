//! One line per acceptance criterion. Run with
//! `cargo test -p blowup-frontend --test acceptance -- --nocapture`.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use blowup_core::algebra::{MonomialOrder, PolyRing, Polynomial, PrimeField};
use blowup_core::groebner::{Ideal, Powers, QuotientRing};
use blowup_core::homology::{depth_module, koszul_depth, ModuleMap};
use blowup_core::invariants::{analyze, AnalysisOptions, RegularityStatus};
use blowup_core::theorems::{check_all, Verdict};
use blowup_frontend::corpus::monomial_ideals;
use blowup_frontend::report::{InstanceReport, RunReport};
use blowup_frontend::{run_source, RunOptions};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

const LIMIT_EX14_N2: Duration = Duration::from_secs(60);
const LIMIT_EX14_N3: Duration = Duration::from_secs(300);
const LIMIT_EX17: Duration = Duration::from_secs(600);
const LIMIT_MAXIMAL: Duration = Duration::from_secs(10);
const CORPUS_SIZE: usize = 50;
const MEMBERSHIP_PAIRS: usize = 500;
const HILBERT_CORPUS: usize = 20;

type Case = (Arc<QuotientRing>, Vec<Polynomial>, Option<Vec<Polynomial>>);

struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn record(&mut self, n: u32, ok: bool, detail: String) {
        println!("criterion {n}: {} | {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failures.push(format!("criterion {n}: {detail}"));
        }
    }
}

fn sessions(name: &str) -> String {
    std::fs::read_to_string(format!("{}/../../sessions/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn run_timed(name: &str) -> (InstanceReport, Duration) {
    let t = Instant::now();
    let rep = run_source(&sessions(name), &RunOptions::default()).unwrap();
    (rep.instances.into_iter().next().unwrap(), t.elapsed())
}

fn verdict(inst: &InstanceReport, id: &str) -> Option<Verdict> {
    inst.theorems.iter().find(|t| t.id == id).map(|t| t.verdict)
}

fn criterion_1(out: &mut Outcome) {
    let mut ok = true;
    let mut detail = Vec::new();
    for (file, n, limit) in [("example14.bld", 2i64, LIMIT_EX14_N2), ("example14_n3.bld", 3, LIMIT_EX14_N3)] {
        let (inst, time) = run_timed(file);
        let Some(inv) = &inst.invariants else {
            ok = false;
            detail.push(format!("n={n}: {}", inst.error.unwrap_or_default()));
            continue;
        };
        let good = inv.g == Some(n - 1)
            && inv.r_J == 2
            && inv.reduction.user_supplied
            && inv.depths.get(&1) == Some(&2)
            && inv.depths.get(&2) == Some(&1)
            && inv.grade_Gplus == n - 1
            && inv.depth_G == n
            && verdict(&inst, "cor-1.3") == Some(Verdict::Equality)
            && time < limit;
        ok &= good;
        detail.push(format!("n={n}: ht {:?} r_J {} depth G {} cor-1.3 {:?} in {time:.2?}", inv.g, inv.r_J, inv.depth_G, verdict(&inst, "cor-1.3")));
    }
    out.record(1, ok, detail.join("; "));
}

fn criterion_2(out: &mut Outcome) {
    let (inst, time) = run_timed("example17.bld");
    let Some(inv) = &inst.invariants else {
        return out.record(2, false, inst.error.unwrap_or_default());
    };
    let rem = inst.theorems.iter().find(|t| t.id == "rem-1.2").unwrap();
    let ok = inv.g == Some(1)
        && inv.l == 2
        && inv.r_J == 3
        && [(1, 3), (2, 2), (3, 1)].iter().all(|(j, d)| inv.depths.get(j) == Some(d))
        && inv.grade_Gplus == 1
        && inv.depth_G == 3
        && verdict(&inst, "thm-1.5") == Some(Verdict::Equality)
        && rem.bound == rem.actual
        && time < LIMIT_EX17;
    out.record(
        2,
        ok,
        format!("ht {:?} l {} r_J {} depth G {} thm-1.5 {:?} rem-1.2 {:?}/{:?} in {time:.2?}", inv.g, inv.l, inv.r_J, inv.depth_G, verdict(&inst, "thm-1.5"), rem.bound, rem.actual),
    );
}

fn criterion_3(out: &mut Outcome) {
    let mut ok = true;
    let mut detail = Vec::new();
    for d in 1..=4usize {
        let t = Instant::now();
        let names: Vec<String> = (1..=d).map(|i| format!("x{i}")).collect();
        let s = PolyRing::new(PrimeField::default(), names, None, MonomialOrder::Grevlex).unwrap();
        let q = QuotientRing::polynomial_ring(&s);
        let gens: Vec<Polynomial> = (0..d).map(|i| s.var(i)).collect();
        let opts = AnalysisOptions { colimit_power: Some(4), ..Default::default() };
        let a = analyze(&q, &gens, &opts).unwrap();
        let rep = &a.report;
        let b = &a.blowup;
        let xs: Vec<Polynomial> = (0..d).map(|k| b.ring().var(k)).collect();
        let polynomial_g = b.g_ideal().same_as(&Ideal::new(b.ring(), xs).unwrap());
        let stable = rep.regularity.colimit.as_ref().and_then(|c| c.stable_from);
        let time = t.elapsed();
        let good = polynomial_g
            && rep.depth_g == d as i64
            && rep.r_j() == 0
            && rep.l == d as i64
            && rep.r_hat() == Some(0)
            && rep.regularity.status == RegularityStatus::Exact
            && stable == Some(1)
            && time < LIMIT_MAXIMAL;
        ok &= good;
        detail.push(format!("d={d}: depth G {} r_hat {:?} colimit from t={stable:?} in {time:.2?}", rep.depth_g, rep.r_hat()));
    }
    out.record(3, ok, detail.join("; "));
}

/// Monomial ideals in 2 to 4 variables with generators of degree at most 3.
fn corpus() -> Vec<(Arc<QuotientRing>, Vec<Polynomial>)> {
    (0..CORPUS_SIZE).map(|k| monomial_ideals(32003, 2 + k % 3, 3, 1, 1000 + k as u64).pop().unwrap()).collect()
}

fn criterion_4(out: &mut Outcome) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for (q, gens) in corpus() {
        let mut powers = Powers::new(&q, &gens).unwrap();
        for j in 1..=3 {
            let pres = ModuleMap::quotient_presentation(powers.lifted(j));
            let ab = depth_module(&pres).ok();
            let kz = koszul_depth(&pres).map(|d| d as i64);
            checked += 1;
            if ab != kz {
                bad.push(format!("{gens:?}^{j}: {ab:?} vs {kz:?}"));
            }
        }
    }
    out.record(4, bad.is_empty(), format!("{checked} quotients R/I^j from {CORPUS_SIZE} ideals, {} disagreements {bad:?}", bad.len()));
}

fn criterion_5(out: &mut Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let r = common::ring(&["x", "y", "z", "w"]);
    let (mut agree, mut inside) = (0, 0);
    for _ in 0..MEMBERSHIP_PAIRS {
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let d = rng.gen_range(1..=2);
                common::random_form(&r, &mut rng, d, 3)
            })
            .collect();
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        let f = if rng.gen_bool(0.5) {
            gens.iter().fold(r.zero(), |acc, g| {
                let dg = g.weighted_degree().map_or(0, |w| w.value);
                &acc + &(g * &common::random_form(&r, &mut rng, 3 - dg, 2))
            })
        } else {
            common::random_form(&r, &mut rng, 3, 5)
        };
        let got = ideal.contains(&f);
        inside += got as usize;
        agree += (got == common::member_oracle(4, &gens, &f)) as usize;
    }
    out.record(5, agree == MEMBERSHIP_PAIRS, format!("{agree}/{MEMBERSHIP_PAIRS} pairs agree ({inside} members)"));
}

fn criterion_6(out: &mut Outcome) {
    let mut violations = Vec::new();
    let mut errors = 0;
    let mut exact = 0;
    for (q, gens) in corpus() {
        let Ok(mut a) = analyze(&q, &gens, &AnalysisOptions::default()) else {
            errors += 1;
            continue;
        };
        if let Some(r_hat) = a.report.r_hat() {
            exact += 1;
            if r_hat < a.report.r_j() as i64 {
                violations.push(format!("{gens:?}: r_hat {r_hat} < r_J {}", a.report.r_j()));
            }
        }
        for t in check_all(&mut a, None).unwrap() {
            if ["rem-1.2", "thm-1.1a", "thm-1.1b", "thm-2.5"].contains(&t.id.as_str()) && t.verdict == Verdict::Violation {
                violations.push(format!("{gens:?}: {}", t.id));
            }
        }
    }
    out.record(
        6,
        violations.is_empty() && errors == 0,
        format!("{CORPUS_SIZE} instances, {exact} with exact r_hat, {errors} kernel errors, violations {violations:?}"),
    );
}

fn criterion_7(out: &mut Outcome) {
    let mut cases: Vec<Case> = Vec::new();
    let s = common::ring(&["x", "y", "t1", "t2"]);
    cases.push((QuotientRing::new(&s, common::polys(&s, &["x^3*y"])).unwrap(), common::polys(&s, &["x*y", "t1"]), Some(common::polys(&s, &["t1"]))));
    let s = common::ring(&["x", "y", "z", "w", "t1", "t2"]);
    cases.push((
        QuotientRing::new(&s, common::polys(&s, &["x^4*y", "z*w"])).unwrap(),
        common::polys(&s, &["x*y", "z", "t1"]),
        Some(common::polys(&s, &["z", "t1"])),
    ));
    cases.extend(corpus().into_iter().take(HILBERT_CORPUS).map(|(q, g)| (q, g, None)));
    let (mut ok, mut pieces) = (true, 0);
    for (q, gens, j) in &cases {
        let opts = AnalysisOptions { reduction: j.clone(), hilbert_check: false, ..Default::default() };
        let mut a = analyze(q, gens, &opts).unwrap();
        let top = (a.report.regularity.value.unwrap_or(0).max(a.report.r_j() as i64) as usize) + a.report.s() + 1;
        let checks = a.blowup.hilbert_check(&mut a.powers, top);
        pieces += checks.len();
        ok &= checks.len() == top + 1 && checks.iter().all(|c| c.agrees());
    }
    out.record(7, ok, format!("{} instances, {pieces} graded pieces G_j compared with I^j/I^(j+1)", cases.len()));
}

fn criterion_8(out: &mut Outcome) {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_blowup"))
            .args(["check", "sessions/example14.bld", "--json", "--seed", "42"])
            .current_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/../.."))
            .output()
            .unwrap()
    };
    let (a, b) = (run(), run());
    let parsed = RunReport::from_json(&String::from_utf8_lossy(&a.stdout)).is_ok();
    let ok = a.status.success() && parsed && !a.stdout.is_empty() && a.stdout == b.stdout;
    out.record(8, ok, format!("{} bytes, identical: {}", a.stdout.len(), a.stdout == b.stdout));
}

#[test]
fn acceptance() {
    let mut out = Outcome { failures: Vec::new() };
    criterion_1(&mut out);
    criterion_2(&mut out);
    criterion_3(&mut out);
    criterion_4(&mut out);
    criterion_5(&mut out);
    criterion_6(&mut out);
    criterion_7(&mut out);
    criterion_8(&mut out);
    assert!(out.failures.is_empty(), "{:#?}", out.failures);
}
