use crate::algebra::{monomials_of_degree, Exp, Monomial, Polynomial, VTerm, Vector};
use crate::blowup::BlowupPresentation;
use crate::error::{Error, Result};
use crate::groebner::{Ideal, Powers};
use crate::homology::{depth_module, GradedFreeModule, ModuleMap};
use std::collections::BTreeMap;

/// Orderings of a reduction basis tried before giving up.
pub const MAX_ORDERINGS: usize = 24;

/// `I^j ∩ J = J·I^{j−1}` for `1 ≤ j ≤ j_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VvData {
    /// For a single element: whether it is a nonzerodivisor on `R`.
    pub regular_on_r: Option<bool>,
    pub rows: Vec<(usize, bool)>,
}

impl VvData {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.1)
    }
}

pub fn vv_condition(powers: &mut Powers, elems: &[Polynomial], j_max: usize) -> Result<VvData> {
    let q = powers.quotient().clone();
    let jk = q.lift(elems)?;
    let regular_on_r = match elems {
        [x] => Some(q.defining().colon_poly(x)?.same_as(q.defining())),
        _ => None,
    };
    let mut rows = Vec::new();
    for j in 1..=j_max {
        let lhs = powers.lifted(j).intersect(&jk)?;
        let prod = q.product_gens(elems, powers.gens(j - 1))?;
        rows.push((j, lhs.same_as(&q.lift(&prod)?)));
    }
    Ok(VvData { regular_on_r, rows })
}

/// Image of `a ∈ I` in `G_1`, as a form of y-degree one in `A`; `None` when
/// `a` is not homogeneous or not in `I`.
pub fn initial_form(b: &BlowupPresentation, a: &Polynomial) -> Option<Polynomial> {
    let d = a.weighted_degree()?;
    if !d.homogeneous {
        return None;
    }
    let s = b.base().ambient();
    let n = b.gens().len();
    let mut gens = b.gens().to_vec();
    gens.extend(b.base().defining().gens().iter().cloned());
    let h = Ideal::new(s, gens).ok()?.lift(a)?;
    let ys = b.y_vars();
    let mut out = b.ring().zero();
    for k in 0..n {
        let e = d.value as i64 - b.gens()[k].weighted_degree()?.value as i64;
        if e < 0 {
            continue;
        }
        let part: Vec<_> = h[k].terms().iter().filter(|(m, _)| s.degree(m) as i64 == e).cloned().collect();
        let hk = Polynomial::from_terms(s.clone(), part);
        out = &out + &(&b.embed(&hk) * &b.ring().var(ys[k]));
    }
    Some(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterRow {
    pub i: usize,
    pub j: usize,
    /// `[(a_1..a_i) : a_{i+1}] ∩ I^j = (a_1..a_i) I^{j−1}` in `R`.
    pub condition1: bool,
    /// `[(a_1*..a_i*) : a_{i+1}*]_j = (a_1*..a_i*)_j` in `G`.
    pub condition2: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterRegularData {
    /// Permutation of the reduction basis the rows refer to.
    pub ordering: Vec<usize>,
    pub rows: Vec<FilterRow>,
    pub passed: bool,
    pub orderings_tried: usize,
}

impl FilterRegularData {
    pub fn ordered<'a>(&self, basis: &'a [Polynomial]) -> Vec<&'a Polynomial> {
        self.ordering.iter().map(|&k| &basis[k]).collect()
    }
}

fn permutations(s: usize, cap: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>, cap: usize) {
        if out.len() >= cap {
            return;
        }
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                cur.push(k);
                rec(cur, used, out, cap);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; s], &mut out, cap);
    out
}

/// `(a*_1..a*_i)` added to the presentation of `G`.
pub fn g_quotient(b: &BlowupPresentation, stars: &[Polynomial]) -> Result<Ideal> {
    let mut gens = b.g_ideal().gens().to_vec();
    gens.extend(stars.iter().cloned());
    Ideal::new(b.ring(), gens)
}

/// Whether `P : f` and `P` agree in y-degree `j`; `colon` is `P : f`.
fn agree_in_y_degree(b: &BlowupPresentation, p: &Ideal, colon: &Ideal, j: usize) -> bool {
    let a = b.ring();
    let ys = b.y_vars();
    let ones = vec![1u32; ys.len()];
    for g in colon.groebner_basis() {
        let Some(lead) = g.leading_monomial() else { continue };
        let dy = b.y_degree(lead) as usize;
        if dy > j {
            continue;
        }
        for mu in monomials_of_degree(&ones, (j - dy) as u32) {
            let mut e = vec![0; a.nvars()];
            for (k, &v) in ys.iter().enumerate() {
                e[v] = mu.exponents()[k];
            }
            if !p.contains(&g.mul_term(&Monomial::from_exponents(&e), 1)) {
                return false;
            }
        }
    }
    true
}

fn check_ordering(
    powers: &mut Powers,
    b: &BlowupPresentation,
    basis: &[Polynomial],
    stars: &[Polynomial],
    ordering: &[usize],
    js: std::ops::RangeInclusive<usize>,
) -> Result<Vec<FilterRow>> {
    let q = powers.quotient().clone();
    let a: Vec<Polynomial> = ordering.iter().map(|&k| basis[k].clone()).collect();
    let st: Vec<Polynomial> = ordering.iter().map(|&k| stars[k].clone()).collect();
    let mut rows = Vec::new();
    for i in 0..a.len() {
        let ai = q.lift(&a[..i])?;
        let col = ai.colon_poly(&a[i])?;
        let p = g_quotient(b, &st[..i])?;
        let pcol = p.colon_poly(&st[i])?;
        for j in js.clone() {
            let lhs = col.intersect(powers.lifted(j))?;
            let prod = q.product_gens(&a[..i], powers.gens(j - 1))?;
            let condition1 = lhs.same_as(&q.lift(&prod)?);
            let condition2 = agree_in_y_degree(b, &p, &pcol, j);
            rows.push(FilterRow { i, j, condition1, condition2 });
        }
    }
    Ok(rows)
}

/// Both filter-regularity conditions for `r̂+1 ≤ j ≤ r̂+s+2` over orderings
/// of the basis, stopping at the first ordering that passes. `None` when
/// some basis element is inhomogeneous.
pub fn filter_regular_check(powers: &mut Powers, b: &BlowupPresentation, basis: &[Polynomial], r_hat: i64) -> Result<Option<FilterRegularData>> {
    let stars: Option<Vec<Polynomial>> = basis.iter().map(|a| initial_form(b, a)).collect();
    let Some(stars) = stars else { return Ok(None) };
    let s = basis.len();
    let lo = (r_hat + 1).max(1) as usize;
    let js = lo..=(r_hat + s as i64 + 2).max(lo as i64) as usize;
    let mut first: Option<FilterRegularData> = None;
    let perms = permutations(s, MAX_ORDERINGS);
    for (tried, ordering) in perms.iter().enumerate() {
        let rows = check_ordering(powers, b, basis, &stars, ordering, js.clone())?;
        let passed = rows.iter().all(|r| r.condition1 && r.condition2);
        let data = FilterRegularData { ordering: ordering.clone(), rows, passed, orderings_tried: tried + 1 };
        if passed {
            return Ok(Some(data));
        }
        first.get_or_insert(data);
    }
    Ok(first.map(|mut d| {
        d.orderings_tried = perms.len();
        d
    }))
}

/// One instance of a depth inequality: `actual ≥ bound`, with `None` for
/// `+∞` on either side (zero modules, empty minima).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthBoundRow {
    pub i: usize,
    pub j: usize,
    pub actual: Option<i64>,
    pub bound: Option<i64>,
}

impl DepthBoundRow {
    pub fn holds(&self) -> bool {
        match (self.actual, self.bound) {
            (None, _) | (_, None) => true,
            (Some(a), Some(b)) => a >= b,
        }
    }
}

fn depth_or_infinity(pres: &ModuleMap) -> Result<Option<i64>> {
    match depth_module(pres) {
        Ok(d) => Ok(Some(d)),
        Err(Error::ZeroModule) => Ok(None),
        Err(e) => Err(e),
    }
}

fn min_opt(it: impl Iterator<Item = i64>) -> Option<i64> {
    it.min()
}

/// `depth R/𝔞_i I^j` against `min({d − i} ∪ {depth R/I^{j−n} − n})` for
/// `1 ≤ i ≤ s`, `r̂ + i ≤ j ≤ j_max`.
pub fn lemma22_rows(
    powers: &mut Powers,
    ordered: &[Polynomial],
    r_hat: i64,
    d: i64,
    depths: &BTreeMap<usize, i64>,
    j_max: usize,
) -> Result<Vec<DepthBoundRow>> {
    let q = powers.quotient().clone();
    let mut out = Vec::new();
    for i in 1..=ordered.len() {
        let lo = (r_hat + i as i64).max(1) as usize;
        for j in lo..=j_max {
            let prod = q.product_gens(&ordered[..i], powers.gens(j))?;
            let actual = depth_or_infinity(&ModuleMap::quotient_presentation(&q.lift(&prod)?))?;
            let terms = (0..i).filter(|&n| n < j).filter_map(|n| depths.get(&(j - n)).map(|&dp| dp - n as i64));
            let bound = min_opt(std::iter::once(d - i as i64).chain(terms));
            out.push(DepthBoundRow { i, j, actual, bound });
        }
    }
    Ok(out)
}

/// Presentation over `S` of the y-degree-`j` piece of `A/P`, for a
/// bihomogeneous ideal `P ⊇ I·A`.
pub fn graded_piece(b: &BlowupPresentation, p: &Ideal, j: usize) -> ModuleMap {
    let s = b.base().ambient();
    let ns = b.ambient_nvars();
    let a = b.ring();
    let ys = b.y_vars();
    let ones = vec![1u32; ys.len()];
    let ymons = monomials_of_degree(&ones, j as u32);
    let index: BTreeMap<Vec<Exp>, usize> = ymons.iter().enumerate().map(|(k, m)| (m.exponents().to_vec(), k)).collect();
    let wy: Vec<u32> = a.weights()[ns..].to_vec();
    let twists: Vec<i64> = ymons.iter().map(|m| m.weighted_degree(&wy) as i64).collect();
    let mut cols = Vec::new();
    for g in p.gens() {
        let Some(lead) = g.leading_monomial() else { continue };
        let dy = b.y_degree(lead) as usize;
        if dy > j {
            continue;
        }
        for mu in monomials_of_degree(&ones, (j - dy) as u32) {
            let mut e = vec![0; a.nvars()];
            for (k, &v) in ys.iter().enumerate() {
                e[v] = mu.exponents()[k];
            }
            let prod = g.mul_term(&Monomial::from_exponents(&e), 1);
            let terms: Vec<VTerm> = prod
                .terms()
                .iter()
                .map(|(m, c)| {
                    let ex = m.exponents();
                    let key = ex[ns..].to_vec();
                    VTerm { comp: index[&key] as u32, mon: Monomial::from_exponents(&ex[..ns]), coeff: *c }
                })
                .collect();
            let v = Vector::from_terms(s, terms);
            if !v.is_zero() {
                cols.push(v);
            }
        }
    }
    ModuleMap::from_columns(s, GradedFreeModule::new(twists), cols)
}

/// `depth [G/(a*_1..a*_i)]_j` against
/// `min({depth R/I^n + n − j − 1 | j−i+1 ≤ n ≤ j+1} ∪ {depth R/I^{j−i} − i + 1})`
/// for `0 ≤ i ≤ s`, `r̂ + i + 1 ≤ j ≤ j_max`.
pub fn lemma23_rows(
    b: &BlowupPresentation,
    stars: &[Polynomial],
    r_hat: i64,
    depths: &BTreeMap<usize, i64>,
    j_max: usize,
) -> Result<Vec<DepthBoundRow>> {
    let mut out = Vec::new();
    for i in 0..=stars.len() {
        let p = g_quotient(b, &stars[..i])?;
        let lo = (r_hat + i as i64 + 1).max(0) as usize;
        for j in lo..=j_max {
            let actual = depth_or_infinity(&graded_piece(b, &p, j))?;
            let first = (j + 1).saturating_sub(i).max(1)..=j + 1;
            let mut terms: Vec<i64> = first.filter_map(|n| depths.get(&n).map(|&dp| dp + n as i64 - j as i64 - 1)).collect();
            if j > i {
                if let Some(&dp) = depths.get(&(j - i)) {
                    terms.push(dp - i as i64 + 1);
                }
            }
            out.push(DepthBoundRow { i, j, actual, bound: terms.into_iter().min() });
        }
    }
    Ok(out)
}
