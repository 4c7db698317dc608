use blowup_frontend::parse_session;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ALPHABET: &[u8] = b"ringcheckpolyidealxyzt12 ()[],;=+-*^/.#\n\t";

fn assert_located(src: &str) {
    if let Err(e) = parse_session(src) {
        let lines = src.split('\n').count();
        assert!(e.loc.line >= 1 && e.loc.line <= lines, "{e} in {src:?}");
        assert!(e.loc.col >= 1);
        assert!(!e.message.is_empty());
    }
}

#[test]
fn random_bytes_never_panic() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for k in 0..10_000 {
        let len = rng.gen_range(0..80);
        let bytes: Vec<u8> = if k % 2 == 0 {
            (0..len).map(|_| rng.gen()).collect()
        } else {
            (0..len).map(|_| ALPHABET[rng.gen_range(0..ALPHABET.len())]).collect()
        };
        assert_located(&String::from_utf8_lossy(&bytes));
    }
}

#[test]
fn mutations_of_a_valid_session_never_panic() {
    let base = include_str!("../../../sessions/example14.bld").as_bytes().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..2_000 {
        let mut s = base.clone();
        for _ in 0..rng.gen_range(1..4) {
            let at = rng.gen_range(0..s.len());
            match rng.gen_range(0..3) {
                0 => {
                    s.remove(at);
                }
                1 => s.insert(at, ALPHABET[rng.gen_range(0..ALPHABET.len())]),
                _ => s[at] = ALPHABET[rng.gen_range(0..ALPHABET.len())],
            }
        }
        assert_located(&String::from_utf8_lossy(&s));
    }
}

fn var() -> impl Strategy<Value = String> {
    prop::sample::select(vec!["x", "y", "z"]).prop_map(String::from)
}

fn poly_src() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![var(), (1u32..1000).prop_map(|n| n.to_string())];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} + {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a}) - ({b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})*({b})")),
            (inner.clone(), 0u32..4).prop_map(|(a, e)| format!("({a})^{e}")),
            inner.prop_map(|a| format!("-({a})")),
        ]
    })
}

proptest! {
    #[test]
    fn generated_ideals_parse(gens in prop::collection::vec(poly_src(), 1..4)) {
        let src = format!("ring S = poly(vars=[x, y, z]);\nI = ideal({});\n", gens.join(", "));
        prop_assert!(parse_session(&src).is_ok(), "{}", src);
    }
}
