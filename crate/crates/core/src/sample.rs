//! Seeded random ideals for property checks.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinat::{borel_closure, exponents_of_degree, Exponent, TermOrder};
use crate::monomial::MonomialIdeal;
use crate::polyalg::{int, Ideal, Polynomial};

/// Homogeneous ideal with `min(2, max_gens)..=max_gens` generators of degree `2..=max_degree`,
/// each with one to three terms and nonzero coefficients in `-5..=5`.
pub fn random_homogeneous_ideal(n: usize, max_gens: usize, max_degree: u32, seed: u64) -> Ideal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(max_gens.min(2)..=max_gens);
    let gens = (0..count).map(|_| {
        let d = rng.gen_range(2..=max_degree.max(2));
        let monos = exponents_of_degree(n, d);
        let k = rng.gen_range(1..=3usize).min(monos.len());
        let terms: Vec<(Exponent, _)> = monos
            .choose_multiple(&mut rng, k)
            .map(|e| {
                let c = *[-5i64, -4, -3, -2, -1, 1, 2, 3, 4, 5].choose(&mut rng).unwrap();
                (e.clone(), int(c))
            })
            .collect();
        Polynomial::from_terms(n, TermOrder::Rlex, terms)
    });
    Ideal::new(n, gens.collect::<Vec<_>>())
}

/// Monomial ideal with `1..=max_gens` generators of degree `1..=max_degree`.
pub fn random_monomial_ideal(n: usize, max_gens: usize, max_degree: u32, seed: u64) -> MonomialIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(1..=max_gens);
    let gens: Vec<Exponent> = (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=max_degree.max(1));
            exponents_of_degree(n, d).choose(&mut rng).unwrap().clone()
        })
        .collect();
    MonomialIdeal::new(n, gens)
}

/// Borel ideal generated by the Borel closures of one to three random monomials
/// of degree `2..=max_degree`.
pub fn random_borel_ideal(n: usize, max_degree: u32, seed: u64) -> MonomialIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(1..=3usize);
    let mut gens: Vec<Exponent> = Vec::new();
    for _ in 0..count {
        let d = rng.gen_range(2..=max_degree.max(2));
        let e = exponents_of_degree(n, d).choose(&mut rng).unwrap().clone();
        let closure = borel_closure(&BTreeSet::from([e])).expect("single degree");
        gens.extend(closure);
    }
    MonomialIdeal::new(n, gens)
}
