use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinat::{borel_closure, exponents_of_degree, Exponent, SignedExponent};
use crate::error::{Error, Result};

use super::system::{is_good, BinomialSystem};

const ATTEMPTS: usize = 20_000;

/// A seeded random oriented binomial system of degree `d` in `n` variables
/// with nonempty `C`.
///
/// `ρ` has zero sum and support of size two or three; `C` has one or two
/// elements with `C+ρ` in range; `A` is the Borel closure of `C ∪ (C+ρ)`
/// minus `C ∪ (C+ρ)`. Draws failing validation (or goodness, when
/// `require_good`) are discarded.
pub fn random_system(n: usize, d: u32, seed: u64, require_good: bool) -> Result<BinomialSystem> {
    assert!(n >= 2, "a nonzero shift needs two variables");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all = exponents_of_degree(n, d);
    for _ in 0..ATTEMPTS {
        let rho = random_shift(&mut rng, n);
        let candidates: Vec<&Exponent> = all.iter().filter(|c| c.shift(&rho).is_some()).collect();
        if candidates.is_empty() {
            continue;
        }
        let size = rng.gen_range(1..=2usize).min(candidates.len());
        let c: BTreeSet<Exponent> = candidates.choose_multiple(&mut rng, size).map(|e| (*e).clone()).collect();
        let shifted: BTreeSet<Exponent> = c.iter().map(|e| e.shift(&rho).unwrap()).collect();
        let d_set: BTreeSet<Exponent> = c.union(&shifted).cloned().collect();
        let closure = borel_closure(&d_set)?;
        let a: BTreeSet<Exponent> = closure.difference(&d_set).cloned().collect();
        let Ok(sys) = BinomialSystem::new(n, d, a, c, rho) else { continue };
        if require_good && !is_good(&sys) {
            continue;
        }
        return Ok(sys);
    }
    Err(Error::InvalidSystem(format!("no system found in {ATTEMPTS} draws")))
}

fn random_shift(rng: &mut ChaCha8Rng, n: usize) -> SignedExponent {
    loop {
        let k = rng.gen_range(2..=3usize).min(n);
        let mut positions: Vec<usize> = (0..n).collect();
        positions.shuffle(rng);
        positions.truncate(k);
        let mut v = vec![0i64; n];
        let mut sum = 0;
        for &p in &positions[..k - 1] {
            let x = *[-2i64, -1, 1, 2].choose(rng).unwrap();
            v[p] = x;
            sum += x;
        }
        let last = positions[k - 1];
        v[last] = -sum;
        if sum == 0 || sum.abs() > 3 {
            continue;
        }
        let rho = SignedExponent::new(v);
        return if rho.get(rho.m() - 1) < 0 { rho.neg() } else { rho };
    }
}
