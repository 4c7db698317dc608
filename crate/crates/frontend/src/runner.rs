//! Runs bound programs: analysis of every instance, fanned out with rayon
//! and merged in source order.

use crate::bind::{bind, BindOptions, Item, Program};
use crate::corpus::monomial_ideals;
use crate::error::SyntaxError;
use crate::parser::parse_only;
use crate::report::{InstanceReport, InvariantSummary, RunReport, Source, CAVEATS, VERSION};
use blowup_core::algebra::Polynomial;
use blowup_core::groebner::QuotientRing;
use blowup_core::invariants::{analyze, AnalysisOptions};
use blowup_core::invariants::reduction::R_MAX;
use blowup_core::theorems::check_selected;
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub seed: u64,
    pub prime: Option<u32>,
    pub max_power: usize,
    pub r_max: u32,
    /// Record wall-clock time per instance. Off by default so that output is
    /// reproducible.
    pub timing: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { seed: 0, prime: None, max_power: AnalysisOptions::default().max_power, r_max: R_MAX, timing: false }
    }
}

struct Job {
    source: Source,
    quotient: Arc<QuotientRing>,
    gens: Vec<Polynomial>,
    reduction: Option<Vec<Polynomial>>,
    ids: Option<BTreeSet<String>>,
    localization: Option<bool>,
    seed: u64,
}

pub fn run_source(src: &str, opts: &RunOptions) -> Result<RunReport, SyntaxError> {
    let session = parse_only(src)?;
    let program = bind(&session, &BindOptions { prime: opts.prime })?;
    Ok(run_program(&program, opts))
}

pub fn run_program(program: &Program, opts: &RunOptions) -> RunReport {
    let mut jobs = Vec::new();
    for item in &program.items {
        match item {
            Item::Instance(inst) => jobs.push(Job {
                source: Source {
                    line: inst.line,
                    statement: if inst.ids.is_some() { "check" } else { "invariants" }.into(),
                    index: None,
                },
                quotient: inst.quotient.clone(),
                gens: inst.gens.clone(),
                reduction: inst.reduction.clone(),
                ids: inst.ids.clone(),
                localization: inst.localization,
                seed: inst.seed.unwrap_or(opts.seed),
            }),
            Item::Corpus(c) => {
                let prime = opts.prime.unwrap_or(program.prime);
                for (k, (q, gens)) in monomial_ideals(prime, c.vars, c.maxdeg, c.count, c.seed).into_iter().enumerate() {
                    jobs.push(Job {
                        source: Source { line: c.line, statement: "corpus".into(), index: Some(k) },
                        quotient: q,
                        gens,
                        reduction: None,
                        ids: Some(BTreeSet::new()),
                        localization: None,
                        seed: opts.seed,
                    });
                }
            }
        }
    }
    let instances = jobs.par_iter().map(|j| run_job(j, opts)).collect();
    RunReport {
        version: VERSION.into(),
        prime: opts.prime.unwrap_or(program.prime),
        seed: opts.seed,
        caveats: CAVEATS.iter().map(|s| s.to_string()).collect(),
        instances,
    }
}

pub fn describe_ring(q: &QuotientRing) -> String {
    let rels = q.defining().gens();
    if rels.is_empty() {
        q.ambient().describe()
    } else {
        let rs: Vec<String> = rels.iter().map(|g| g.to_string()).collect();
        format!("{}/({})", q.ambient().describe(), rs.join(", "))
    }
}

fn run_job(job: &Job, opts: &RunOptions) -> InstanceReport {
    let start = Instant::now();
    let gens: Vec<String> = job.gens.iter().map(|g| g.to_string()).collect();
    let mut rep = InstanceReport {
        source: job.source.clone(),
        ring: describe_ring(&job.quotient),
        ideal: format!("({})", gens.join(", ")),
        invariants: None,
        theorems: Vec::new(),
        notes: Vec::new(),
        error: None,
        timing_ms: None,
    };
    let aopts = AnalysisOptions {
        seed: job.seed,
        r_max: opts.r_max,
        max_power: opts.max_power,
        reduction: job.reduction.clone(),
        ..AnalysisOptions::default()
    };
    match analyze(&job.quotient, &job.gens, &aopts) {
        Ok(mut a) => {
            rep.invariants = Some(InvariantSummary::from_report(&a.report));
            rep.notes.extend(a.report.notes.iter().cloned());
            rep.notes.extend(a.report.regularity.notes.iter().cloned());
            if let Err(e) = a.report.check() {
                rep.error = Some(format!("consistency check failed: {e}"));
            }
            if let Some(ids) = &job.ids {
                match check_selected(&mut a, ids, job.localization) {
                    Ok(t) => rep.theorems = t,
                    Err(e) => rep.error = Some(e.to_string()),
                }
            }
        }
        Err(e) => rep.error = Some(e.to_string()),
    }
    if opts.timing {
        rep.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    rep
}
