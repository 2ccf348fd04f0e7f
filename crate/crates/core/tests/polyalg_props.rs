use proptest::prelude::*;

use borel_forge::combinat::{exponents_of_degree, Exponent, TermOrder};
use borel_forge::polyalg::text::{default_names, format_polynomial, parse_polynomial};
use borel_forge::polyalg::{groebner, int, is_groebner, normal_form, Ideal, Polynomial};
use borel_forge::sample::random_homogeneous_ideal;
use borel_forge::Config;

const ORDERS: [TermOrder; 2] = [TermOrder::Hlex, TermOrder::Rlex];

fn ideal() -> impl Strategy<Value = Ideal> {
    (0u64..10_000).prop_map(|seed| random_homogeneous_ideal(3, 3, 3, seed))
}

fn polynomial(n: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u32..=3, n), -20i64..=20, 1i64..=4), 0..5).prop_map(move |terms| {
        Polynomial::from_terms(
            n,
            TermOrder::Rlex,
            terms.into_iter().map(|(e, p, q)| (Exponent::new(e), num_rational::BigRational::new(p.into(), q.into()))),
        )
    })
}

fn is_reduced(basis: &[Polynomial]) -> bool {
    basis.iter().enumerate().all(|(k, f)| {
        f.leading_coeff().is_some_and(|c| *c == int(1))
            && basis.iter().enumerate().all(|(l, g)| {
                k == l || f.terms().iter().all(|(e, _)| !g.leading_exponent().unwrap().divides(e))
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduced_basis_is_reduced_and_groebner(i in ideal()) {
        let cfg = Config::default();
        for order in ORDERS {
            let gb = i.groebner(order, &cfg).unwrap();
            prop_assert!(is_groebner(&gb));
            prop_assert!(is_reduced(&gb));
            for g in i.generators() {
                prop_assert!(normal_form(&g.with_order(order), &gb).is_zero());
            }
        }
    }

    #[test]
    fn reduced_basis_ignores_the_presentation(i in ideal(), a in -3i64..=3, b in 1i64..=3) {
        let cfg = Config::default();
        let mut gens: Vec<Polynomial> = i.generators().to_vec();
        gens.reverse();
        if gens.len() >= 2 && gens[0].degree() == gens[1].degree() {
            gens[0] = gens[0].scale(&int(b)).add(&gens[1].scale(&int(a)));
        }
        prop_assume!(!gens[0].is_zero());
        let j = Ideal::new(3, gens);
        for order in ORDERS {
            let left = i.groebner(order, &cfg).unwrap();
            let right = j.groebner(order, &cfg).unwrap();
            prop_assert_eq!(&*left, &*right);
        }
    }

    #[test]
    fn initial_ideal_shares_the_hilbert_function(i in ideal()) {
        let cfg = Config::default();
        let h = i.hilbert_function(7, &cfg).unwrap();
        for order in ORDERS {
            let hi = i.initial_ideal(order, &cfg).unwrap().hilbert_function(7);
            prop_assert_eq!(hi.values(), h.values());
        }
    }

    #[test]
    fn normal_form_is_canonical(i in ideal(), f in polynomial(3)) {
        let cfg = Config::default();
        let r = i.reduce(&f, &cfg).unwrap();
        prop_assert!(i.contains(&f.sub(&r), &cfg).unwrap());
        prop_assert_eq!(i.reduce(&r, &cfg).unwrap(), r.clone());
        // adding an ideal element does not change the remainder
        let shifted = f.add(&i.generators()[0].mul(&f));
        prop_assert_eq!(i.reduce(&shifted, &cfg).unwrap(), r);
    }

    #[test]
    fn colon_by_a_variable(i in ideal(), j in 0usize..3) {
        let cfg = Config::default();
        let c = i.colon_var(j, &cfg).unwrap();
        prop_assert!(c.contains_ideal(&i, &cfg).unwrap());
        let x = Polynomial::var(3, j, TermOrder::Rlex);
        for g in c.generators() {
            prop_assert!(i.contains(&g.mul(&x), &cfg).unwrap());
        }
    }

    #[test]
    fn intersection_lies_between_product_and_factors(i in ideal(), j in ideal()) {
        let cfg = Config::default();
        let m = i.intersection(&j, &cfg).unwrap();
        prop_assert!(i.contains_ideal(&m, &cfg).unwrap() && j.contains_ideal(&m, &cfg).unwrap());
        for f in i.generators() {
            for g in j.generators() {
                prop_assert!(m.contains(&f.mul(g), &cfg).unwrap());
            }
        }
    }

    #[test]
    fn text_round_trip(f in polynomial(4)) {
        let names = default_names(4);
        let shown = format_polynomial(&f, &names);
        prop_assert_eq!(parse_polynomial(&shown, &names, TermOrder::Rlex).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn saturation_is_idempotent(i in ideal()) {
        let cfg = Config::default();
        let s = i.saturate(&cfg).unwrap();
        prop_assert!(s.contains_ideal(&i, &cfg).unwrap());
        prop_assert!(s.is_saturated(&cfg).unwrap());
        prop_assert!(s.saturate(&cfg).unwrap().same_ideal(&s, &cfg).unwrap());
        // I and I^sat agree in high degree
        let top = i.max_degree().max(s.max_degree()) + 4;
        let hi = i.hilbert_function(top, &cfg).unwrap();
        let hs = s.hilbert_function(top, &cfg).unwrap();
        prop_assert_eq!(hi.get(top), hs.get(top));
    }
}

#[test]
fn groebner_of_every_degree_two_pair_in_two_variables() {
    let monos = exponents_of_degree(2, 2);
    for a in &monos {
        for b in &monos {
            if a == b {
                continue;
            }
            let f = Polynomial::binomial(a.clone(), b.clone(), TermOrder::Rlex);
            let g = Polynomial::var(2, 0, TermOrder::Rlex).pow(2).add(&Polynomial::var(2, 1, TermOrder::Rlex).pow(2));
            let gb = groebner(&[f, g], TermOrder::Rlex, 10_000).unwrap();
            assert!(is_groebner(&gb) && is_reduced(&gb));
        }
    }
}
