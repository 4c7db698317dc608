#![allow(dead_code)]

use blowup_core::algebra::{Monomial, PolyRing, Polynomial, PrimeField};
use rand::Rng;
use std::collections::HashMap;
use std::sync::Arc;

pub const P: u64 = 32003;

pub fn ring(vars: &[&str]) -> Arc<PolyRing> {
    PolyRing::standard(PrimeField::default(), vars)
}

/// Parses sums of terms like `3*x^2*y - t1`.
pub fn poly(r: &Arc<PolyRing>, s: &str) -> Polynomial {
    let s = s.replace(' ', "").replace('-', "+-");
    let mut acc = r.zero();
    for term in s.split('+').filter(|t| !t.is_empty()) {
        let (neg, term) = term.strip_prefix('-').map_or((false, term), |t| (true, t));
        let mut t = r.one();
        for f in term.split('*') {
            if let Ok(c) = f.parse::<u64>() {
                t = t.scale((c % P) as u32);
                continue;
            }
            let (v, e) = f.split_once('^').map_or((f, 1), |(v, e)| (v, e.parse().unwrap()));
            t = &t * &r.var(r.var_index(v).unwrap_or_else(|| panic!("no variable {v}"))).pow(e);
        }
        acc = if neg { &acc - &t } else { &acc + &t };
    }
    acc
}

pub fn polys(r: &Arc<PolyRing>, ss: &[&str]) -> Vec<Polynomial> {
    ss.iter().map(|s| poly(r, s)).collect()
}

/// Exponent vectors of total degree `d` in `n` variables.
pub fn exponents_of_degree(n: usize, d: u32) -> Vec<Vec<u16>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for mut rest in exponents_of_degree(n - 1, d - a) {
            rest.insert(0, a as u16);
            out.push(rest);
        }
    }
    out
}

fn inv(a: u64) -> u64 {
    let (mut r, mut b, mut e) = (1u64, a % P, P - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Rank over `F_p` by plain Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<u64>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rk = 0;
    for c in 0..ncols {
        let Some(p) = (rk..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(rk, p);
        let iv = inv(rows[rk][c]);
        let pivot: Vec<u64> = rows[rk].iter().map(|x| x * iv % P).collect();
        for row in rows.iter_mut().skip(rk + 1) {
            let k = row[c];
            if k != 0 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + P - k * y % P) % P;
                }
            }
        }
        rows[rk] = pivot;
        rk += 1;
    }
    rk
}

fn total_degree(e: &[u16]) -> u32 {
    e.iter().map(|&x| x as u32).sum()
}

/// Rows `m·g` spanning the degree-`d` part of the ideal generated by
/// homogeneous `gens` (standard grading), as coefficient vectors.
fn macaulay_rows(n: usize, gens: &[Polynomial], d: u32, index: &HashMap<Vec<u16>, usize>) -> Vec<Vec<u64>> {
    let mut rows = Vec::new();
    for g in gens {
        let Some((m0, _)) = g.terms().first() else { continue };
        let dg = total_degree(m0.exponents());
        if dg > d {
            continue;
        }
        for m in exponents_of_degree(n, d - dg) {
            let mut row = vec![0u64; index.len()];
            for (mon, c) in g.terms() {
                let e: Vec<u16> = mon.exponents().iter().zip(&m).map(|(a, b)| a + b).collect();
                row[index[&e]] = *c as u64;
            }
            rows.push(row);
        }
    }
    rows
}

/// `dim_k (S/(gens))_d` for homogeneous generators in the standard grading.
pub fn hilbert_oracle(n: usize, gens: &[Polynomial], d: u32) -> usize {
    let basis = exponents_of_degree(n, d);
    let index: HashMap<Vec<u16>, usize> = basis.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    basis.len() - rank(macaulay_rows(n, gens, d, &index))
}

/// Membership of a homogeneous `f` in the ideal of homogeneous `gens`, by
/// linear algebra in the degree of `f`.
pub fn member_oracle(n: usize, gens: &[Polynomial], f: &Polynomial) -> bool {
    let Some((m0, _)) = f.terms().first() else { return true };
    let d = total_degree(m0.exponents());
    let basis = exponents_of_degree(n, d);
    let index: HashMap<Vec<u16>, usize> = basis.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let mut rows = macaulay_rows(n, gens, d, &index);
    let r0 = rank(rows.clone());
    let mut frow = vec![0u64; index.len()];
    for (mon, c) in f.terms() {
        frow[index[&mon.exponents().to_vec()]] = *c as u64;
    }
    rows.push(frow);
    rank(rows) == r0
}

/// A random homogeneous polynomial of degree `d` with up to `terms` terms.
pub fn random_form(r: &Arc<PolyRing>, rng: &mut impl Rng, d: u32, terms: usize) -> Polynomial {
    let mons = exponents_of_degree(r.nvars(), d);
    let ts = (0..terms)
        .map(|_| (Monomial::from_exponents(&mons[rng.gen_range(0..mons.len())]), rng.gen_range(1..P) as u32))
        .collect();
    Polynomial::from_terms(r.clone(), ts)
}

/// A random monomial ideal: up to `vars + 1` monomials of degree `1..=maxdeg`.
pub fn random_monomial_ideal(r: &Arc<PolyRing>, rng: &mut impl Rng, maxdeg: u32) -> Vec<Polynomial> {
    let n = r.nvars();
    let k = rng.gen_range(1..=n + 1);
    (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=maxdeg);
            let mut e = vec![0u16; n];
            for _ in 0..d {
                e[rng.gen_range(0..n)] += 1;
            }
            r.term(Monomial::from_exponents(&e), 1)
        })
        .collect()
}
