mod common;

use blowup_core::algebra::{Monomial, MonomialOrder, PolyRing, Polynomial, PrimeField};
use blowup_core::groebner::Ideal;
use common::*;
use proptest::prelude::*;
use std::cmp::Ordering;
use std::sync::Arc;

fn field() -> PrimeField {
    PrimeField::default()
}

fn exps(n: usize) -> impl Strategy<Value = Vec<u16>> {
    prop::collection::vec(0u16..4, n)
}

fn ring_with(order: MonomialOrder) -> Arc<PolyRing> {
    PolyRing::new(field(), ["x", "y", "z"].iter().map(|s| s.to_string()).collect(), None, order).unwrap()
}

fn poly_from(r: &Arc<PolyRing>, terms: &[(Vec<u16>, u32)]) -> Polynomial {
    Polynomial::from_terms(r.clone(), terms.iter().map(|(e, c)| (Monomial::from_exponents(e), *c)).collect())
}

fn terms3() -> impl Strategy<Value = Vec<(Vec<u16>, u32)>> {
    prop::collection::vec((exps(3), 1u32..32003), 1..4)
}

/// A homogeneous polynomial of degree `d` in 3 variables.
fn form(d: u16) -> impl Strategy<Value = Vec<(Vec<u16>, u32)>> {
    prop::collection::vec(((0..=d), (0..=d), 1u32..32003), 1..4)
        .prop_map(move |v| v.into_iter().filter(|(a, b, _)| a + b <= d).map(|(a, b, c)| (vec![a, b, d - a - b], c)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in 0u32..32003, b in 0u32..32003, c in 0u32..32003) {
        let f = field();
        prop_assert_eq!(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a)), 1);
            prop_assert_eq!(f.div(b, a), f.mul(b, f.inv(a)));
        }
        prop_assert_eq!(f.pow(a, 32002), if a == 0 { 0 } else { 1 });
    }

    #[test]
    fn orders_are_monomial_orders(a in exps(3), b in exps(3), c in exps(3), lex in any::<bool>()) {
        let r = ring_with(if lex { MonomialOrder::Lex } else { MonomialOrder::Grevlex });
        let (ma, mb, mc) = (Monomial::from_exponents(&a), Monomial::from_exponents(&b), Monomial::from_exponents(&c));
        let one = Monomial::one(3);
        prop_assert_eq!(r.cmp(&ma, &mb), r.cmp(&mb, &ma).reverse());
        prop_assert_eq!(r.cmp(&ma, &mb) == Ordering::Equal, a == b);
        prop_assert_ne!(r.cmp(&ma, &one), Ordering::Less);
        let mul = |x: &[u16]| Monomial::from_exponents(&x.iter().zip(&c).map(|(p, q)| p + q).collect::<Vec<_>>());
        prop_assert_eq!(r.cmp(&ma, &mb), r.cmp(&mul(&a), &mul(&b)));
        if r.cmp(&ma, &mb) == Ordering::Less && r.cmp(&mb, &mc) == Ordering::Less {
            prop_assert_eq!(r.cmp(&ma, &mc), Ordering::Less);
        }
    }

    #[test]
    fn ring_axioms_for_polynomials(p in terms3(), q in terms3(), s in terms3()) {
        let r = ring_with(MonomialOrder::Grevlex);
        let (f, g, h) = (poly_from(&r, &p), poly_from(&r, &q), poly_from(&r, &s));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn degree_is_additive(p in form(2), q in form(3)) {
        let r = ring_with(MonomialOrder::Grevlex);
        let (f, g) = (poly_from(&r, &p), poly_from(&r, &q));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let fg = &f * &g;
        prop_assert!(fg.is_homogeneous());
        prop_assert_eq!(fg.weighted_degree().unwrap().value, 5);
    }

    #[test]
    fn groebner_basis_is_idempotent(a in form(2), b in form(2), c in form(3)) {
        let r = ring_with(MonomialOrder::Grevlex);
        let gens = vec![poly_from(&r, &a), poly_from(&r, &b), poly_from(&r, &c)];
        let i = Ideal::new(&r, gens.clone()).unwrap();
        let gb = i.groebner_basis().to_vec();
        let again = Ideal::new(&r, gb.clone()).unwrap();
        prop_assert_eq!(again.groebner_basis(), &gb[..]);
        for g in &gens {
            prop_assert!(i.contains(g));
        }
    }

    #[test]
    fn dimension_does_not_depend_on_the_order(a in form(2), b in form(1), c in form(2)) {
        let r = ring_with(MonomialOrder::Grevlex);
        let i = Ideal::new(&r, vec![poly_from(&r, &a), poly_from(&r, &b), poly_from(&r, &c)]).unwrap();
        let l = i.with_order(MonomialOrder::Lex).unwrap();
        prop_assert_eq!(i.krull_dimension(), l.krull_dimension());
        for d in 0..5 {
            prop_assert_eq!(i.hilbert_function(d), l.hilbert_function(d));
        }
    }

    #[test]
    fn colon_and_intersection(a in form(2), b in form(2), c in form(1)) {
        // f·(I : f) = I ∩ (f)
        let r = ring_with(MonomialOrder::Grevlex);
        let i = Ideal::new(&r, vec![poly_from(&r, &a), poly_from(&r, &b)]).unwrap();
        let f = poly_from(&r, &c);
        prop_assume!(!f.is_zero());
        let colon = i.colon_poly(&f).unwrap();
        let fi = Ideal::new(&r, colon.gens().iter().map(|g| g * &f).collect()).unwrap();
        let cap = i.intersect(&Ideal::new(&r, vec![f.clone()]).unwrap()).unwrap();
        prop_assert!(fi.same_as(&cap));
        prop_assert!(colon.contains_ideal(&i));
    }
}

#[test]
fn hilbert_function_matches_linear_algebra() {
    let r = ring(&["x", "y", "z"]);
    let gens = polys(&r, &["x^2 - y*z", "x*y + 3*z^2", "y^3"]);
    let i = Ideal::new(&r, gens.clone()).unwrap();
    for d in 0..7 {
        assert_eq!(i.hilbert_function(d), hilbert_oracle(3, &gens, d), "degree {d}");
    }
}
