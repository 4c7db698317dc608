mod common;

use blowup_core::groebner::Ideal;
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn membership_agrees_with_macaulay_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let r = ring(&["x", "y", "z"]);
    let mut members = 0;
    for _ in 0..500 {
        let k = rng.gen_range(1..=3);
        let gens: Vec<_> = (0..k).map(|_| {
            let d = rng.gen_range(1..=2);
            random_form(&r, &mut rng, d, 3)
        }).filter(|g| !g.is_zero()).collect();
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        // half the candidates are built inside the ideal
        let f = if rng.gen_bool(0.5) {
            let d = 3;
            let mut acc = r.zero();
            for g in &gens {
                let dg = g.weighted_degree().unwrap().value;
                if dg <= d {
                    acc = &acc + &(g * &random_form(&r, &mut rng, d - dg, 2));
                }
            }
            acc
        } else {
            random_form(&r, &mut rng, 3, 4)
        };
        let got = ideal.contains(&f);
        assert_eq!(got, member_oracle(3, &gens, &f), "{f} in {gens:?}");
        members += got as usize;
    }
    assert!(members > 100);
}
