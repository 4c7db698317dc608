use crate::algebra::{Coeff, Polynomial};
use crate::blowup::BlowupPresentation;
use crate::error::{Error, Result};
use crate::groebner::{Ideal, Powers};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Default cap on the reduction-number search.
pub const R_MAX: u32 = 30;
/// Random draws tried before giving up on a generic reduction.
pub const MAX_DRAWS: u32 = 10;

/// A reduction `J ⊆ I` and its reduction number `r_J(I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionData {
    /// Generators `a_1..a_s` of `J`, reduced modulo `K`.
    pub j_gens: Vec<Polynomial>,
    /// `s × n` coefficients over the generators of `I`; empty when `J` was
    /// supplied by the caller.
    pub coeff_matrix: Vec<Vec<Coeff>>,
    pub r_j: u32,
    pub is_verified_reduction: bool,
    pub trials: u32,
    pub user_supplied: bool,
}

impl ReductionData {
    pub fn s(&self) -> usize {
        self.j_gens.len()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.j_gens.iter().all(|g| g.is_homogeneous())
    }
}

/// `b ⊆ a` after localizing at the irrelevant ideal, i.e. `(a : b) ⊄ m`.
fn locally_contains(a: &Ideal, b: &Ideal) -> Result<bool> {
    if a.contains_ideal(b) {
        return Ok(true);
    }
    let colon = a.colon(b)?;
    Ok(colon.gens().iter().any(|g| g.terms().iter().any(|(m, c)| m.is_one() && *c != 0)))
}

/// Least `r ≤ r_max` with `I^{r+1} = J·I^r` in `R`. Inhomogeneous `J` is
/// tested in the localization at the irrelevant ideal.
pub fn reduction_number(powers: &mut Powers, j_gens: &[Polynomial], r_max: u32) -> Result<u32> {
    let q = powers.quotient().clone();
    let homogeneous = j_gens.iter().all(|g| g.is_homogeneous());
    for r in 0..=r_max {
        let prod = q.product_gens(j_gens, powers.gens(r as usize))?;
        let lhs = q.lift(&prod)?;
        let next = powers.lifted(r as usize + 1);
        let ok = if homogeneous { lhs.contains_ideal(next) } else { locally_contains(&lhs, next)? };
        if ok {
            return Ok(r);
        }
    }
    Err(Error::ReductionNotConfirmed(r_max))
}

/// Checks a caller-supplied `J` and computes `r_J`.
pub fn verify_reduction(powers: &mut Powers, j_gens: &[Polynomial], r_max: u32) -> Result<ReductionData> {
    let q = powers.quotient().clone();
    let reduced: Vec<Polynomial> = j_gens.iter().map(|g| q.reduce(g)).collect::<Result<_>>()?;
    if reduced.iter().any(|g| g.is_zero()) {
        return Err(Error::InvalidIdeal("a reduction generator vanishes in the ring".into()));
    }
    let i1 = powers.lifted(1);
    if let Some(g) = reduced.iter().find(|g| !i1.contains(g)) {
        return Err(Error::InvalidIdeal(format!("{g} is not in I")));
    }
    let r_j = reduction_number(powers, &reduced, r_max)?;
    Ok(ReductionData { j_gens: reduced, coeff_matrix: Vec::new(), r_j, is_verified_reduction: true, trials: 0, user_supplied: true })
}

/// `J` generated by linear forms of the fiber cone with finite colength:
/// the Northcott–Rees test that `J` is a reduction.
fn spans_reduction(b: &BlowupPresentation, matrix: &[Vec<Coeff>]) -> bool {
    let a = b.ring();
    let ys = b.y_vars();
    let mut gens = b.fiber_ideal().gens().to_vec();
    for row in matrix {
        let mut f = a.zero();
        for (k, &c) in row.iter().enumerate() {
            f = &f + &a.var(ys[k]).scale(c);
        }
        gens.push(f);
    }
    Ideal::new(a, gens).is_ok_and(|i| i.krull_dimension() <= 0)
}

/// `s` random `F_p`-combinations of the generators of `I` forming a
/// reduction, with up to [`MAX_DRAWS`] draws from a seeded generator.
/// `b` must be built from `powers.gens(1)`.
pub fn find_reduction(powers: &mut Powers, b: &BlowupPresentation, s: usize, seed: u64, r_max: u32) -> Result<ReductionData> {
    let q = powers.quotient().clone();
    let gens = powers.gens(1).to_vec();
    let p = q.ambient().field().characteristic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 1..=MAX_DRAWS {
        let matrix: Vec<Vec<Coeff>> = (0..s).map(|_| (0..gens.len()).map(|_| rng.gen_range(0..p)).collect()).collect();
        if !spans_reduction(b, &matrix) {
            continue;
        }
        let mut j_gens = Vec::with_capacity(s);
        for row in &matrix {
            let mut f = q.ambient().zero();
            for (c, g) in row.iter().zip(&gens) {
                f = &f + &g.scale(*c);
            }
            j_gens.push(q.reduce(&f)?);
        }
        if j_gens.iter().any(|g| g.is_zero()) {
            continue;
        }
        match reduction_number(powers, &j_gens, r_max) {
            Ok(r_j) => {
                return Ok(ReductionData { j_gens, coeff_matrix: matrix, r_j, is_verified_reduction: true, trials: trial, user_supplied: false })
            }
            Err(Error::ReductionNotConfirmed(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenericityFailure { s, draws: MAX_DRAWS as usize })
}
