mod common;

use blowup_core::algebra::Polynomial;
use blowup_core::groebner::{Ideal, QuotientRing};
use blowup_core::invariants::{analyze, Analysis, AnalysisOptions, RegularityStatus};
use blowup_core::theorems::{check_all, TheoremReport, Verdict};
use common::*;
use std::collections::BTreeMap;

fn run(vars: &[&str], k: &[&str], i: &[&str], j: Option<&[&str]>) -> (Analysis, Vec<TheoremReport>) {
    let s = ring(vars);
    let r = QuotientRing::new(&s, polys(&s, k)).unwrap();
    let opts = AnalysisOptions { reduction: j.map(|j| polys(&s, j)), extra_seeds: 1, ..Default::default() };
    let mut a = analyze(&r, &polys(&s, i), &opts).unwrap();
    let t = check_all(&mut a, Some(true)).unwrap();
    (a, t)
}

fn verdict(ts: &[TheoremReport], id: &str) -> Verdict {
    ts.iter().find(|t| t.id == id).unwrap().verdict
}

fn no_violations(ts: &[TheoremReport]) {
    for t in ts {
        assert_ne!(t.verdict, Verdict::Violation, "{t:?}");
    }
}

#[test]
fn equimultiple_reduction_number_two() {
    for n in [2usize, 3] {
        let mut vars = vec!["x", "y"];
        let ts: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
        vars.extend(ts.iter().map(|s| s.as_str()));
        let mut i = vec!["x*y"];
        i.extend(ts[..n - 1].iter().map(|s| s.as_str()));
        let j: Vec<&str> = ts[..n - 1].iter().map(|s| s.as_str()).collect();
        for given in [Some(&j[..]), None] {
            let (a, t) = run(&vars, &["x^3*y"], &i, given);
            let rep = &a.report;
            let n = n as i64;
            assert_eq!(rep.dim_r, n + 1);
            assert_eq!(rep.g, Some(n - 1));
            assert_eq!(rep.l, n - 1);
            assert_eq!(rep.r_j(), 2);
            assert_eq!(rep.depth(1), Some(2));
            assert_eq!(rep.depth(2), Some(1));
            assert_eq!(rep.grade_gplus, n - 1);
            assert_eq!(rep.depth_g, n);
            assert_eq!(rep.regularity.status, RegularityStatus::Exact);
            assert_eq!(verdict(&t, "cor-1.3"), Verdict::Equality);
            assert_eq!(verdict(&t, "thm-1.1a"), Verdict::Equality);
            no_violations(&t);
        }
    }
}

#[test]
fn analytic_deviation_one() {
    let vars = ["x", "y", "z", "w", "t1", "t2"];
    let (a, t) = run(&vars, &["x^4*y", "z*w"], &["x*y", "z", "t1"], Some(&["z", "t1"]));
    let rep = &a.report;
    assert_eq!((rep.dim_r, rep.g, rep.l, rep.r_j()), (4, Some(1), 2, 3));
    let first: BTreeMap<usize, i64> = rep.depths.range(1..=3).map(|(k, v)| (*k, *v)).collect();
    assert_eq!(first, BTreeMap::from([(1, 3), (2, 2), (3, 1)]));
    assert_eq!((rep.grade_gplus, rep.depth_g), (1, 3));
    let thm = t.iter().find(|t| t.id == "thm-1.5").unwrap();
    assert_eq!((thm.verdict, thm.bound, thm.actual), (Verdict::Equality, Some(3), Some(3)));
    let rem = t.iter().find(|t| t.id == "rem-1.2").unwrap();
    assert_eq!(rem.bound, rem.actual);
    no_violations(&t);
}

#[test]
fn maximal_ideal_of_a_polynomial_ring() {
    for d in 1..=3 {
        let names: Vec<String> = (0..d).map(|i| format!("x{i}")).collect();
        let vars: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let (a, t) = run(&vars, &[], &vars, None);
        let rep = &a.report;
        assert_eq!((rep.l, rep.r_j(), rep.depth_g, rep.r_hat()), (d as i64, 0, d as i64, Some(0)));
        // G is k[Y]: the presentation ideal is generated by the x's
        let b = &a.blowup;
        let xs: Vec<Polynomial> = (0..d).map(|k| b.ring().var(k)).collect();
        assert!(b.g_ideal().same_as(&Ideal::new(b.ring(), xs).unwrap()));
        assert_eq!(verdict(&t, "thm-1.1a"), Verdict::Equality);
        no_violations(&t);
    }
}

#[test]
fn graded_pieces_match_linear_algebra() {
    // dim (I^j/I^{j+1})_d from Macaulay matrices against the bigraded count in G
    let s = ring(&["x", "y", "t1", "t2"]);
    let r = QuotientRing::new(&s, polys(&s, &["x^3*y"])).unwrap();
    let gens = polys(&s, &["x*y", "t1"]);
    let a = analyze(&r, &gens, &AnalysisOptions::default()).unwrap();
    let b = &a.blowup;
    let k = polys(&s, &["x^3*y"]);
    let power = |j: u32| -> Vec<Polynomial> {
        let mut acc = vec![s.one()];
        for _ in 0..j {
            acc = acc.iter().flat_map(|p| gens.iter().map(move |g| p * g)).collect();
        }
        acc.extend(k.iter().cloned());
        acc
    };
    for j in 0..3u32 {
        for d in 0..7 {
            let expect = hilbert_oracle(4, &power(j + 1), d) - if j == 0 { 0 } else { hilbert_oracle(4, &power(j), d) };
            assert_eq!(b.bigraded_dim(b.g_ideal(), j, d), expect, "j {j} d {d}");
        }
    }
}
