//! Monomial ideals, Borel and lex ideals, Hilbert functions and polynomials.

mod hilbert;
mod lex;

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::combinat::{Exponent, TermOrder};

pub use hilbert::{fits_polynomial_of_degree, interpolate, HilbertData, HilbertPolynomial, VERIFICATION_WINDOW};
pub use lex::{is_lex_segment, lex_ideal_from_hilbert};

/// A monomial ideal of `K[X_1..X_n]`, stored by its minimal generators sorted
/// descending in rlex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Exponent>,
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: impl IntoIterator<Item = Exponent>) -> MonomialIdeal {
        let gens: Vec<Exponent> = gens.into_iter().collect();
        assert!(gens.iter().all(|g| g.width() == n), "generator width differs from ring width");
        MonomialIdeal { n, gens: minimalize(gens) }
    }

    pub fn zero(n: usize) -> MonomialIdeal {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> MonomialIdeal {
        MonomialIdeal { n, gens: vec![Exponent::zero(n)] }
    }

    pub fn width(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_zero())
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn contains(&self, a: &Exponent) -> bool {
        self.gens.iter().any(|g| g.divides(a))
    }

    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(self.n, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.n, out)
    }

    /// `(I : X_j^infinity)` for a 0-based variable index: strip `X_j` from every generator.
    pub fn colon_var_power(&self, j: usize) -> MonomialIdeal {
        MonomialIdeal::new(self.n, self.gens.iter().map(|g| g.strip_var(j)))
    }

    /// `I : m^infinity`, the intersection of the colons by all variable powers.
    pub fn saturate(&self) -> MonomialIdeal {
        if self.is_zero() {
            return self.clone();
        }
        (1..self.n).fold(self.colon_var_power(0), |acc, j| acc.intersection(&self.colon_var_power(j)))
    }

    /// The Borel-ideal shortcut: generators `a*` (last variable stripped).
    pub fn saturate_borel(&self) -> MonomialIdeal {
        self.colon_var_power(self.n - 1)
    }

    pub fn is_saturated(&self) -> bool {
        self.saturate() == *self
    }

    /// Every graded piece is a Borel set. Checked on generators: for each
    /// generator `X^a` with `a_j > 0` and `i < j`, `X^(a - e_j + e_i)` lies in the ideal.
    pub fn is_borel_ideal(&self) -> bool {
        self.gens.iter().all(|g| {
            (1..self.n).filter(|&j| g.get(j) > 0).all(|j| {
                (0..j).all(|i| {
                    let mut v = g.entries().to_vec();
                    v[j] -= 1;
                    v[i] += 1;
                    self.contains(&Exponent::new(v))
                })
            })
        })
    }

    /// Monomials of degree `d` in the ideal.
    pub fn component(&self, d: u32) -> BTreeSet<Exponent> {
        crate::combinat::exponents_of_degree(self.n, d).into_iter().filter(|a| self.contains(a)).collect()
    }

    /// `h(d) = #{a in N^n_d : X^a in I}` for `d <= up_to`.
    pub fn hilbert_function(&self, up_to: u32) -> HilbertData {
        HilbertData::new(self.n, (0..=up_to).map(|d| self.count_in_degree(d)).collect())
    }

    pub(crate) fn count_in_degree(&self, d: u32) -> u64 {
        if self.is_zero() {
            return 0;
        }
        crate::combinat::count_of_degree(self.n, d) - standard_count(&self.gens, self.n, d)
    }

    /// Hilbert polynomial found by interpolating and extending; see [`HilbertPolynomial`].
    pub fn hilbert_polynomial(&self) -> crate::Result<HilbertPolynomial> {
        hilbert::stabilize(self.n, self.max_degree() + self.n as u32 + 3, |d| self.count_in_degree(d))
    }

    /// Embeds into `K[X_1..X_m]`, `m >= n`.
    pub fn extend(&self, m: usize) -> MonomialIdeal {
        MonomialIdeal::new(m, self.gens.iter().map(|g| g.extend(m)))
    }

    /// Generators involving only the first `i` variables, as an ideal of `K[X_1..X_i]`.
    /// Equals `I ∩ K[X_1..X_i]`.
    pub fn restrict(&self, i: usize) -> MonomialIdeal {
        MonomialIdeal::new(i, self.gens.iter().filter(|g| g.lies_in_first(i)).map(|g| g.truncate(i)))
    }
}

impl std::fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.gens.iter()).finish()
    }
}

/// Drops generators divisible by others and sorts descending in rlex.
pub fn minimalize(mut gens: Vec<Exponent>) -> Vec<Exponent> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Exponent> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| TermOrder::Rlex.cmp(b, a));
    kept
}

/// Number of degree-`d` monomials outside the ideal generated by `gens`.
///
/// Recurses on the last variable: a monomial `u X_n^k` avoids the ideal iff `u`
/// avoids the ideal of generators with `X_n`-power at most `k`, stripped of `X_n`.
fn standard_count(gens: &[Exponent], n: usize, d: u32) -> u64 {
    if gens.iter().any(|g| g.is_zero()) {
        return 0;
    }
    if gens.is_empty() {
        return crate::combinat::count_of_degree(n, d);
    }
    if n == 1 {
        let least = gens.iter().map(|g| g.get(0)).min().unwrap();
        return u64::from(d < least);
    }
    let last = n - 1;
    let mut total = 0;
    for k in 0..=d {
        let reduced: Vec<Exponent> =
            gens.iter().filter(|g| g.get(last) <= k).map(|g| g.truncate(last)).collect();
        total += standard_count(&minimalize_fast(reduced), last, d - k);
    }
    total
}

fn minimalize_fast(mut gens: Vec<Exponent>) -> Vec<Exponent> {
    gens.sort_by_key(|g| g.degree());
    let mut kept: Vec<Exponent> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// Pointwise comparison of two functions on `0..=bound`: `Less` means `f < g`
/// (`<=` everywhere, `<` somewhere), `None` means incomparable.
pub fn compare_functions(f: &[u64], g: &[u64]) -> Option<Ordering> {
    let le = f.iter().zip(g).all(|(a, b)| a <= b);
    let ge = f.iter().zip(g).all(|(a, b)| a >= b);
    match (le, ge) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    }
}
