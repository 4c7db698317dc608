//! Random monomial ideals for fuzzing the checkers.

use blowup_core::algebra::{Monomial, MonomialOrder, PolyRing, Polynomial, PrimeField};
use blowup_core::groebner::QuotientRing;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// `count` ideals of `F_p[x1..x{vars}]`, each generated by 1 to `vars + 1`
/// distinct monomials of degree `1..=maxdeg`.
pub fn monomial_ideals(prime: u32, vars: usize, maxdeg: u32, count: usize, seed: u64) -> Vec<(Arc<QuotientRing>, Vec<Polynomial>)> {
    let field = PrimeField::new(prime).expect("prime checked by the caller");
    let names: Vec<String> = (1..=vars).map(|i| format!("x{i}")).collect();
    let ring = PolyRing::new(field, names, None, MonomialOrder::Grevlex).expect("valid ring");
    let quotient = QuotientRing::polynomial_ring(&ring);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(1..=vars + 1);
            let mut gens: Vec<Polynomial> = Vec::new();
            for _ in 0..k {
                let d = rng.gen_range(1..=maxdeg);
                let mut e = vec![0u16; vars];
                for _ in 0..d {
                    e[rng.gen_range(0..vars)] += 1;
                }
                let g = ring.term(Monomial::from_exponents(&e), 1);
                if !gens.contains(&g) {
                    gens.push(g);
                }
            }
            (quotient.clone(), gens)
        })
        .collect()
}
