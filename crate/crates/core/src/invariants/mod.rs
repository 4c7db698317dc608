//! Numerical invariants of a pair `(R, I)`: height, analytic spread,
//! reductions and reduction numbers, depths of powers, depth and grade of
//! `G`, and `reg G`.

pub mod filter;
pub mod reduction;
pub mod regularity;

pub use filter::{filter_regular_check, initial_form, vv_condition, DepthBoundRow, FilterRegularData, FilterRow, VvData};
pub use reduction::{find_reduction, reduction_number, verify_reduction, ReductionData, MAX_DRAWS, R_MAX};
pub use regularity::{regularity, Regularity, RegularityMethod, RegularityStatus};

use crate::algebra::Polynomial;
use crate::blowup::{BlowupPresentation, HilbertCheck};
use crate::error::{Error, Result};
use crate::groebner::{Powers, QuotientRing};
use crate::homology::{depth_module, free_resolution, koszul_grade, ModuleMap};
use std::collections::BTreeMap;
use std::sync::Arc;

pub fn depth_ring(r: &QuotientRing) -> Result<i64> {
    depth_module(&ModuleMap::quotient_presentation(r.defining()))
}

pub fn is_cohen_macaulay(r: &QuotientRing) -> Result<bool> {
    Ok(depth_ring(r)? == r.dim())
}

fn check_proper(powers: &mut Powers) -> Result<()> {
    if powers.gens(1).is_empty() {
        return Err(Error::InvalidIdeal("the zero ideal".into()));
    }
    if powers.lifted(1).is_unit() {
        return Err(Error::InvalidIdeal("the unit ideal".into()));
    }
    Ok(())
}

/// `ht I = dim R − dim R/I`; refuses when `R` is not Cohen–Macaulay.
pub fn height(powers: &mut Powers) -> Result<i64> {
    check_proper(powers)?;
    let q = powers.quotient().clone();
    let (depth, dim) = (depth_ring(&q)?, q.dim());
    if depth != dim {
        return Err(Error::NotCohenMacaulay { depth, dim });
    }
    Ok(dim - powers.lifted(1).krull_dimension())
}

/// `ℓ(I) = dim` of the fiber cone.
pub fn analytic_spread(b: &BlowupPresentation) -> i64 {
    b.fiber_ideal().krull_dimension()
}

/// `depth R/I^j` for `1 ≤ j ≤ j_max`.
pub fn depth_powers(powers: &mut Powers, j_max: usize) -> Result<BTreeMap<usize, i64>> {
    check_proper(powers)?;
    let mut out = BTreeMap::new();
    for j in 1..=j_max {
        out.insert(j, depth_module(&ModuleMap::quotient_presentation(powers.lifted(j)))?);
    }
    Ok(out)
}

pub fn depth_g(b: &BlowupPresentation) -> Result<i64> {
    depth_module(&b.g_presentation())
}

/// Least `i` with `H^i(y; G) ≠ 0`.
pub fn grade_gplus(b: &BlowupPresentation) -> Result<i64> {
    let ys: Vec<Polynomial> = b.y_vars().iter().map(|&v| b.ring().var(v)).collect();
    koszul_grade(&ys, &b.g_presentation()).map(|g| g as i64).ok_or(Error::ZeroModule)
}

#[derive(Clone, Debug)]
pub struct AnalysisOptions {
    pub seed: u64,
    pub r_max: u32,
    /// Largest power of `I` whose depth is computed.
    pub max_power: usize,
    /// Generators of `J`; a random reduction with `ℓ` generators otherwise.
    pub reduction: Option<Vec<Polynomial>>,
    pub regularity_method: RegularityMethod,
    /// Run the colimit protocol up to this power as a cross-check.
    pub colimit_power: Option<u32>,
    pub lemma_checks: bool,
    pub hilbert_check: bool,
    /// Extra seeds for the agreement check of generic reduction numbers.
    pub extra_seeds: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            seed: 0,
            r_max: R_MAX,
            max_power: 12,
            reduction: None,
            regularity_method: RegularityMethod::Koszul,
            colimit_power: None,
            lemma_checks: true,
            hilbert_check: true,
            extra_seeds: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub dim_r: i64,
    pub depth_r: i64,
    pub is_cm_r: bool,
    /// `None` when `R` is not Cohen–Macaulay.
    pub g: Option<i64>,
    pub l: i64,
    pub deviation: Option<i64>,
    pub is_equimultiple: bool,
    pub reduction: ReductionData,
    pub depths: BTreeMap<usize, i64>,
    pub depth_g: i64,
    pub grade_gplus: i64,
    pub regularity: Regularity,
    pub vv: Option<VvData>,
    pub filter_regular: Option<FilterRegularData>,
    pub lemma22: Vec<DepthBoundRow>,
    pub lemma23: Vec<DepthBoundRow>,
    pub hilbert: Vec<HilbertCheck>,
    /// `r_J` for random reductions drawn with further seeds.
    pub generic_reduction_numbers: Vec<Option<u32>>,
    pub notes: Vec<String>,
}

impl InvariantReport {
    pub fn s(&self) -> usize {
        self.reduction.s()
    }

    pub fn r_j(&self) -> u32 {
        self.reduction.r_j
    }

    pub fn r_hat(&self) -> Option<i64> {
        self.regularity.exact()
    }

    pub fn depth(&self, j: usize) -> Option<i64> {
        self.depths.get(&j).copied()
    }

    /// `g ≤ ℓ ≤ dim R`, `r̂ ≥ r_J` when exact, `grade G₊ ≤ depth G ≤ dim R`.
    pub fn check(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::Invalid(format!("invariant violated: {what}")));
        if let Some(g) = self.g {
            if g > self.l {
                return fail("g ≤ ℓ");
            }
        }
        if self.l > self.dim_r {
            return fail("ℓ ≤ dim R");
        }
        if let Some(r) = self.r_hat() {
            if r < self.r_j() as i64 {
                return fail("r̂ ≥ r_J");
            }
        }
        if self.grade_gplus > self.depth_g || self.depth_g > self.dim_r {
            return fail("grade G₊ ≤ depth G ≤ dim R");
        }
        Ok(())
    }
}

/// Everything computed for one pair `(R, I)`, kept for the theorem checkers.
#[derive(Debug)]
pub struct Analysis {
    pub quotient: Arc<QuotientRing>,
    pub powers: Powers,
    pub blowup: BlowupPresentation,
    pub report: InvariantReport,
}

pub fn analyze(quotient: &Arc<QuotientRing>, gens: &[Polynomial], opts: &AnalysisOptions) -> Result<Analysis> {
    let mut powers = Powers::new(quotient, gens)?;
    check_proper(&mut powers)?;
    let mut notes = Vec::new();

    let dim_r = quotient.dim();
    let depth_r = depth_ring(quotient)?;
    let is_cm_r = depth_r == dim_r;
    let g = if is_cm_r {
        Some(height(&mut powers)?)
    } else {
        notes.push(format!("R is not Cohen–Macaulay (depth {depth_r} < dim {dim_r}); height not computed"));
        None
    };

    let b = BlowupPresentation::new(quotient, powers.gens(1))?;
    if !b.is_bihomogeneous() || !b.substitution_check() {
        return Err(Error::Invalid("Rees ideal failed the bihomogeneity or substitution check".into()));
    }
    let l = analytic_spread(&b);

    let reduction = match &opts.reduction {
        Some(j) => verify_reduction(&mut powers, j, opts.r_max)?,
        None => find_reduction(&mut powers, &b, l.max(0) as usize, opts.seed, opts.r_max)?,
    };
    let s = reduction.s();

    let pres = b.g_presentation();
    let res = free_resolution(&pres)?;
    if res.is_zero_module() {
        return Err(Error::ZeroModule);
    }
    let depth_g = b.ring().nvars() as i64 - res.length() as i64;
    let grade_gplus = grade_gplus(&b)?;
    let reg = regularity(&b, &pres, &res, reduction.r_j, opts.regularity_method, opts.colimit_power);
    let r_for_range = reg.value.unwrap_or(reduction.r_j as i64).max(reduction.r_j as i64) as usize;

    let wanted = (r_for_range + s + 2).max(reduction.r_j as usize + 3);
    let j_max = wanted.min(opts.max_power).max(1);
    if j_max < wanted {
        notes.push(format!("powers truncated at {j_max} (wanted {wanted})"));
    }
    let depths = depth_powers(&mut powers, j_max)?;

    let vv = Some(vv_condition(&mut powers, &reduction.j_gens, (r_for_range + 2).min(j_max))?);

    let hilbert = if opts.hilbert_check {
        let h = b.hilbert_check(&mut powers, (r_for_range + s + 1).min(j_max.saturating_sub(1)));
        if h.iter().any(|c| !c.agrees()) {
            return Err(Error::Invalid("Hilbert function of G disagrees with I^j/I^{j+1}".into()));
        }
        h
    } else {
        Vec::new()
    };

    let (mut filter_regular, mut lemma22, mut lemma23) = (None, Vec::new(), Vec::new());
    match reg.exact() {
        Some(r_hat) if opts.lemma_checks && reduction.is_homogeneous() => {
            filter_regular = filter_regular_check(&mut powers, &b, &reduction.j_gens, r_hat)?;
            match &filter_regular {
                Some(fr) if fr.passed && is_cm_r => {
                    let ordered: Vec<Polynomial> = fr.ordered(&reduction.j_gens).into_iter().cloned().collect();
                    let top = (r_hat as usize + s + 1).min(j_max.saturating_sub(1));
                    lemma22 = filter::lemma22_rows(&mut powers, &ordered, r_hat, dim_r, &depths, top)?;
                    let stars: Vec<Polynomial> = ordered.iter().map(|a| initial_form(&b, a).expect("homogeneous element of I")).collect();
                    lemma23 = filter::lemma23_rows(&b, &stars, r_hat, &depths, top)?;
                }
                Some(fr) if !fr.passed => notes.push(format!("no filter-regular ordering among {} tried", fr.orderings_tried)),
                _ => {}
            }
        }
        Some(_) if opts.lemma_checks => notes.push("reduction is inhomogeneous; filter-regularity checks skipped".into()),
        _ => {}
    }

    let mut generic_reduction_numbers = Vec::new();
    if !reduction.user_supplied && opts.extra_seeds > 0 {
        for k in 1..=opts.extra_seeds as u64 {
            let r = find_reduction(&mut powers, &b, s, opts.seed.wrapping_add(k), opts.r_max).ok().map(|d| d.r_j);
            generic_reduction_numbers.push(r);
        }
        if generic_reduction_numbers.iter().any(|r| *r != Some(reduction.r_j)) {
            notes.push(format!("generic reduction numbers disagree: {} vs {:?}", reduction.r_j, generic_reduction_numbers));
        }
    }

    notes.extend(reg.notes.iter().cloned());
    let report = InvariantReport {
        dim_r,
        depth_r,
        is_cm_r,
        g,
        l,
        deviation: g.map(|g| l - g),
        is_equimultiple: g == Some(l),
        reduction,
        depths,
        depth_g,
        grade_gplus,
        regularity: reg,
        vv,
        filter_regular,
        lemma22,
        lemma23,
        hilbert,
        generic_reduction_numbers,
        notes,
    };
    report.check()?;
    Ok(Analysis { quotient: quotient.clone(), powers, blowup: b, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PolyRing, PrimeField};

    #[test]
    fn maximal_ideal_of_the_plane() {
        let s = PolyRing::standard(PrimeField::default(), &["x", "y"]);
        let r = QuotientRing::polynomial_ring(&s);
        let a = analyze(&r, &[s.var(0), s.var(1)], &AnalysisOptions::default()).unwrap();
        let rep = &a.report;
        assert_eq!((rep.g, rep.l, rep.r_j(), rep.r_hat()), (Some(2), 2, 0, Some(0)));
        assert_eq!((rep.depth_g, rep.grade_gplus), (2, 2));
        assert!(rep.depths.values().all(|&d| d == 0));
        assert!(rep.filter_regular.as_ref().unwrap().passed);
        assert!(rep.lemma22.iter().chain(&rep.lemma23).all(|r| r.holds()));
    }

    #[test]
    fn height_needs_cohen_macaulay() {
        // k[x,y,z]/(xy, xz): a plane and a line meeting at a point
        let s = PolyRing::standard(PrimeField::default(), &["x", "y", "z"]);
        let (x, y, z) = (s.var(0), s.var(1), s.var(2));
        let r = QuotientRing::new(&s, vec![&x * &y, &x * &z]).unwrap();
        let mut p = Powers::new(&r, std::slice::from_ref(&y)).unwrap();
        assert!(matches!(height(&mut p), Err(Error::NotCohenMacaulay { .. })));
        let mut p = Powers::new(&r, &[r.ambient().zero()]).unwrap();
        assert!(matches!(height(&mut p), Err(Error::InvalidIdeal(_))));
    }
}
