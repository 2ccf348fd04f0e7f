use proptest::prelude::*;

use borel_forge::binomial::{
    check_filtration, check_gb_formulas, filtration, gb_formulas, ideal_of, is_good, random_system, validate_system,
    Annotation, Relation,
};
use borel_forge::combinat::TermOrder;
use borel_forge::generic::{apply_change, gin, UnipotentChange};
use borel_forge::polyalg::{is_groebner, Ideal};
use borel_forge::Config;

fn system(require_good: bool) -> impl Strategy<Value = borel_forge::binomial::BinomialSystem> {
    (3usize..=4, 2u32..=3, 0u64..10_000).prop_map(move |(n, d, seed)| random_system(n, d, seed, require_good).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_systems_validate(sys in system(false)) {
        let report = validate_system(sys.width(), sys.degree(), sys.a(), sys.c(), sys.rho());
        prop_assert!(report.is_valid(), "{:?}", report.failures());
        prop_assert!(sys.is_oriented());
        prop_assert!(sys.a().is_disjoint(sys.c()));
    }

    #[test]
    fn closed_forms_match_the_engine(sys in system(false)) {
        for claim in check_gb_formulas(&sys, &Config::default()).unwrap() {
            prop_assert!(claim.passed, "{}", claim);
        }
    }

    #[test]
    fn closed_form_basis_is_the_reduced_basis(sys in system(false)) {
        let cfg = Config::default();
        let f = gb_formulas(&sys).unwrap();
        prop_assert!(is_groebner(&f.gb_rlex));
        prop_assert!(is_groebner(&f.gb_sat));
        let engine = ideal_of(&sys).groebner(TermOrder::Rlex, &cfg).unwrap();
        let closed = Ideal::new(sys.width(), f.gb_rlex.clone()).groebner(TermOrder::Rlex, &cfg).unwrap();
        prop_assert_eq!(&*engine, &*closed);
    }

    #[test]
    fn flipping_keeps_the_ideal(sys in system(false)) {
        let cfg = Config::default();
        let flipped = sys.flipped();
        prop_assert!(!flipped.is_oriented());
        prop_assert_eq!(flipped.flipped(), sys.clone());
        prop_assert_eq!(flipped.oriented(), (sys.clone(), true));
        prop_assert!(ideal_of(&flipped).same_ideal(&ideal_of(&sys), &cfg).unwrap());
    }

    #[test]
    fn filtration_claims_hold(sys in system(false)) {
        let report = check_filtration(&sys, &Config::default()).unwrap();
        let failures: Vec<String> = report.failures().iter().map(|c| c.to_string()).collect();
        prop_assert!(report.passed(), "{:?}", failures);
        let steps = filtration(&sys).unwrap();
        prop_assert_eq!(steps.steps().len(), sys.width() + 1);
        let cfg = Config::default();
        for i in 0..sys.width() {
            prop_assert!(steps.get(i + 1).contains_ideal(steps.get(i), &cfg).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn good_systems_are_fixed_by_unipotents(sys in system(true), seed in any::<u64>()) {
        prop_assert!(is_good(&sys));
        let cfg = Config::default();
        let f = ideal_of(&sys);
        let g = UnipotentChange::random(sys.width(), seed, 0, 1_000);
        prop_assert!(apply_change(&g, &f).same_ideal(&f, &cfg).unwrap());
        prop_assert_eq!(gin(&f, TermOrder::Rlex, &cfg).unwrap(), f.initial_ideal(TermOrder::Rlex, &cfg).unwrap());
    }
}

#[test]
fn relation_names() {
    for (name, rel) in [
        ("init_rlex", Relation::InitRlex),
        ("init_hlex", Relation::InitHlex),
        ("gin_rlex", Relation::GinRlex),
        ("sat_init_hlex", Relation::SatInitHlex),
        ("sat∘init_hlex", Relation::SatInitHlex),
    ] {
        assert_eq!(name.parse::<Relation>().unwrap(), rel);
    }
    assert!("init_lex".parse::<Relation>().is_err());
    assert_eq!("<=".parse::<Annotation>().unwrap(), Annotation::AtMost);
    assert_eq!("≤".parse::<Annotation>().unwrap(), Annotation::AtMost);
}
