use std::cmp::Ordering;
use std::collections::BTreeSet;

use proptest::prelude::*;

use borel_forge::combinat::{
    borel_closure, borel_ge, borel_witness, compare, enumerate_u, is_borel_set, Exponent, SignedExponent, TermOrder,
};

const ORDERS: [TermOrder; 4] = [TermOrder::Hlex, TermOrder::Rlex, TermOrder::Elimination(1), TermOrder::Elimination(2)];

fn exponent(n: usize, max: u32) -> impl Strategy<Value = Exponent> {
    prop::collection::vec(0..=max, n).prop_map(Exponent::new)
}

/// Two exponents of width `n` and equal degree.
fn same_degree(n: usize) -> impl Strategy<Value = (Exponent, Exponent)> {
    (exponent(n, 3), prop::collection::vec(any::<prop::sample::Index>(), 12)).prop_map(
        move |(a, picks)| {
            // scatter the degree of `a` over random slots
            let mut b = vec![0u32; n];
            let d = a.degree() as usize;
            for k in 0..d {
                b[picks[k % picks.len()].index(n).wrapping_add(k / picks.len()) % n] += 1;
            }
            (a, Exponent::new(b))
        },
    )
}

fn naive_borel_ge(a: &Exponent, b: &Exponent) -> bool {
    let (mut sa, mut sb) = (0u32, 0u32);
    a.degree() == b.degree()
        && (0..a.width()).all(|i| {
            sa += a.get(i);
            sb += b.get(i);
            sa >= sb
        })
}

proptest! {
    #[test]
    fn orders_are_total_and_antisymmetric(u in exponent(4, 3), v in exponent(4, 3)) {
        for order in ORDERS {
            let uv = order.cmp(&u, &v);
            prop_assert_eq!(uv, order.cmp(&v, &u).reverse());
            prop_assert_eq!(uv == Ordering::Equal, u == v);
        }
    }

    #[test]
    fn orders_are_transitive(u in exponent(3, 3), v in exponent(3, 3), w in exponent(3, 3)) {
        for order in ORDERS {
            if order.cmp(&u, &v) != Ordering::Less && order.cmp(&v, &w) != Ordering::Less {
                prop_assert_ne!(order.cmp(&u, &w), Ordering::Less);
            }
        }
    }

    #[test]
    fn orders_are_translation_invariant(u in exponent(4, 3), v in exponent(4, 3), w in exponent(4, 3)) {
        for order in ORDERS {
            prop_assert_eq!(order.cmp(&u.mul(&w), &v.mul(&w)), order.cmp(&u, &v));
        }
    }

    #[test]
    fn orders_put_one_at_the_bottom(u in exponent(4, 3)) {
        let one = Exponent::zero(4);
        for order in ORDERS {
            prop_assert_ne!(order.cmp(&u, &one), Ordering::Less);
        }
    }

    #[test]
    fn compare_rejects_mismatched_widths(u in exponent(3, 2), v in exponent(4, 2)) {
        prop_assert!(compare(TermOrder::Rlex, &u, &v).is_err());
    }

    #[test]
    fn borel_order_matches_prefix_sums((a, b) in same_degree(4)) {
        prop_assert_eq!(borel_ge(&a, &b).unwrap(), naive_borel_ge(&a, &b));
    }

    #[test]
    fn borel_order_refines_into_term_orders((a, b) in same_degree(4)) {
        if borel_ge(&a, &b).unwrap() {
            for order in [TermOrder::Hlex, TermOrder::Rlex] {
                prop_assert_ne!(order.cmp(&a, &b), Ordering::Less);
            }
        }
    }

    #[test]
    fn witness_has_the_right_margins((a, b) in same_degree(4)) {
        match borel_witness(&a, &b) {
            Ok(m) => {
                prop_assert!(m.is_in_u(&a, &b));
                prop_assert_eq!(m.row_sums(), a.entries().to_vec());
                prop_assert_eq!(m.col_sums(), b.entries().to_vec());
            }
            Err(_) => prop_assert!(!borel_ge(&a, &b).unwrap()),
        }
    }

    #[test]
    fn enumerated_matrices_are_distinct_and_valid((a, b) in same_degree(3)) {
        let all = enumerate_u(&a, &b, 1_000_000).unwrap();
        let distinct: BTreeSet<_> = all.iter().map(|m| format!("{m:?}")).collect();
        prop_assert_eq!(distinct.len(), all.len());
        prop_assert!(all.iter().all(|m| m.is_in_u(&a, &b)));
        prop_assert_eq!(all.is_empty(), !borel_ge(&a, &b).unwrap());
    }

    #[test]
    fn closure_is_the_smallest_borel_superset(seeds in prop::collection::vec(exponent(3, 3), 1..4)) {
        let d = seeds[0].degree();
        let set: BTreeSet<Exponent> = seeds.into_iter().filter(|e| e.degree() == d).collect();
        let closure = borel_closure(&set).unwrap();
        prop_assert!(is_borel_set(&closure).unwrap());
        prop_assert!(set.is_subset(&closure));
        for a in &closure {
            prop_assert!(set.iter().any(|b| borel_ge(a, b).unwrap()));
        }
        prop_assert_eq!(borel_closure(&closure).unwrap(), closure);
    }

    #[test]
    fn star_drops_the_last_variable(a in exponent(4, 3)) {
        let s = a.star();
        prop_assert_eq!(s.width(), 4);
        prop_assert_eq!(s.get(3), 0);
        prop_assert_eq!(&s.entries()[..3], &a.entries()[..3]);
    }

    #[test]
    fn shift_is_undone_by_the_negated_shift(a in exponent(4, 3), r in prop::collection::vec(-2i64..=2, 4)) {
        let rho = SignedExponent::new(r);
        if let Some(b) = a.shift(&rho) {
            prop_assert_eq!(b.shift(&rho.neg()), Some(a.clone()));
            prop_assert_eq!(SignedExponent::difference(&b, &a), rho);
        }
    }
}
