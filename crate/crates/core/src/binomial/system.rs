use std::collections::BTreeSet;
use std::fmt;

use num_traits::One;

use crate::combinat::{is_borel_set, Exponent, SignedExponent, TermOrder};
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::polyalg::{sort_descending, Coeff, Ideal, Polynomial};

/// A triple `(A, C, ρ)` of degree `d` in `n` variables.
///
/// Invariants: `C+ρ ⊂ ℕⁿ_d`; `A`, `C`, `C+ρ` pairwise disjoint; `A∪C` and
/// `A∪(C+ρ)` Borel sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinomialSystem {
    n: usize,
    d: u32,
    a: BTreeSet<Exponent>,
    c: BTreeSet<Exponent>,
    rho: SignedExponent,
}

/// Per-condition outcome of [`validate_system`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// Widths and degrees agree with `(n, d)`.
    pub shape: bool,
    /// `C + ρ ⊂ ℕⁿ_d`.
    pub shift_in_range: bool,
    /// `A∩C = A∩(C+ρ) = C∩(C+ρ) = ∅`.
    pub disjoint: bool,
    /// `A∪C` and `A∪(C+ρ)` are Borel sets.
    pub borel: bool,
    /// `ρ_{m(ρ)} < 0` with `C` nonempty: `(A, C+ρ, −ρ)` is the oriented form.
    pub flip_suggested: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.shape && self.shift_in_range && self.disjoint && self.borel
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.shape {
            out.push("shape");
        }
        if !self.shift_in_range {
            out.push("(i) C+rho inside N^n_d");
        }
        if !self.disjoint {
            out.push("(ii) disjointness");
        }
        if !self.borel {
            out.push("(iii) Borel unions");
        }
        out
    }
}

pub fn validate_system(
    n: usize,
    d: u32,
    a: &BTreeSet<Exponent>,
    c: &BTreeSet<Exponent>,
    rho: &SignedExponent,
) -> ValidationReport {
    let shape = rho.width() == n
        && a.iter().chain(c).all(|e| e.width() == n && e.degree() == d)
        && (c.is_empty() || rho.sum() == 0);
    if !shape {
        return ValidationReport { shape, shift_in_range: false, disjoint: false, borel: false, flip_suggested: false };
    }
    let shifted: Option<BTreeSet<Exponent>> = c.iter().map(|e| e.shift(rho)).collect();
    let shift_in_range = shifted.is_some();
    let shifted = shifted.unwrap_or_default();
    let disjoint = a.is_disjoint(c) && a.is_disjoint(&shifted) && c.is_disjoint(&shifted);
    let borel = shift_in_range && {
        let ac: BTreeSet<Exponent> = a.union(c).cloned().collect();
        let ar: BTreeSet<Exponent> = a.union(&shifted).cloned().collect();
        is_borel_set(&ac).unwrap_or(false) && is_borel_set(&ar).unwrap_or(false)
    };
    let flip_suggested = !c.is_empty() && rho.get(rho.m() - 1) < 0;
    ValidationReport { shape, shift_in_range, disjoint, borel, flip_suggested }
}

impl BinomialSystem {
    /// Validates and builds; `InvalidSystem` lists the failing conditions.
    pub fn new(
        n: usize,
        d: u32,
        a: impl IntoIterator<Item = Exponent>,
        c: impl IntoIterator<Item = Exponent>,
        rho: SignedExponent,
    ) -> Result<BinomialSystem> {
        let a: BTreeSet<Exponent> = a.into_iter().collect();
        let c: BTreeSet<Exponent> = c.into_iter().collect();
        let report = validate_system(n, d, &a, &c, &rho);
        if !report.is_valid() {
            return Err(Error::InvalidSystem(report.failures().join(", ")));
        }
        Ok(BinomialSystem { n, d, a, c, rho })
    }

    pub fn width(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn a(&self) -> &BTreeSet<Exponent> {
        &self.a
    }

    pub fn c(&self) -> &BTreeSet<Exponent> {
        &self.c
    }

    pub fn rho(&self) -> &SignedExponent {
        &self.rho
    }

    /// `C + ρ`.
    pub fn shifted_c(&self) -> BTreeSet<Exponent> {
        self.c.iter().map(|e| e.shift(&self.rho).expect("validated")).collect()
    }

    /// `m(ρ)`, 1-based.
    pub fn m(&self) -> usize {
        self.rho.m()
    }

    /// `C` is empty or `ρ_{m(ρ)} > 0`.
    pub fn is_oriented(&self) -> bool {
        self.c.is_empty() || self.rho.get(self.m() - 1) > 0
    }

    /// `(A, C+ρ, −ρ)`, again a binomial system.
    pub fn flipped(&self) -> BinomialSystem {
        BinomialSystem { n: self.n, d: self.d, a: self.a.clone(), c: self.shifted_c(), rho: self.rho.neg() }
    }

    /// The oriented form and whether a flip was applied.
    pub fn oriented(&self) -> (BinomialSystem, bool) {
        if self.is_oriented() {
            (self.clone(), false)
        } else {
            (self.flipped(), true)
        }
    }

    pub(crate) fn require_oriented(&self) -> Result<()> {
        if self.is_oriented() {
            Ok(())
        } else {
            Err(Error::OrientationRequired)
        }
    }

    /// `A ∪ C`.
    pub fn a_union_c(&self) -> BTreeSet<Exponent> {
        self.a.union(&self.c).cloned().collect()
    }
}

impl fmt::Debug for BinomialSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BinomialSystem")
            .field("n", &self.n)
            .field("d", &self.d)
            .field("A", &self.a)
            .field("C", &self.c)
            .field("rho", &self.rho)
            .finish()
    }
}

/// All pairs of `C` agree on the coordinates below `m(ρ)`.
pub fn is_good(sys: &BinomialSystem) -> bool {
    let m = sys.m();
    let mut it = sys.c.iter();
    match it.next() {
        None => true,
        Some(first) => it.all(|c| (0..m - 1).all(|i| c.get(i) == first.get(i))),
    }
}

pub(crate) fn monomials(n: usize, set: impl IntoIterator<Item = Exponent>) -> Vec<Polynomial> {
    let mut gens: Vec<Exponent> = set.into_iter().collect();
    gens.sort_by(|x, y| TermOrder::Hlex.cmp(y, x));
    gens.dedup();
    gens.into_iter()
        .map(|e| {
            debug_assert_eq!(e.width(), n);
            Polynomial::monomial(e, Coeff::one(), TermOrder::Rlex)
        })
        .collect()
}

/// `X^c − X^{c+ρ}` for `c` in `set`, in descending hlex of `c`.
pub(crate) fn binomials(set: impl IntoIterator<Item = Exponent>, rho: &SignedExponent) -> Vec<Polynomial> {
    let mut cs: Vec<Exponent> = set.into_iter().collect();
    cs.sort_by(|x, y| TermOrder::Hlex.cmp(y, x));
    cs.into_iter()
        .map(|c| {
            let shifted = c.shift(rho).expect("shift stays in range");
            Polynomial::binomial(c, shifted, TermOrder::Rlex)
        })
        .collect()
}

/// `F(A,C,ρ) = (X^A ∪ Bin(C,ρ))`: monomials in descending hlex, then binomials.
pub fn ideal_of(sys: &BinomialSystem) -> Ideal {
    let mut gens = monomials(sys.n, sys.a.iter().cloned());
    gens.extend(binomials(sys.c.iter().cloned(), &sys.rho));
    Ideal::new(sys.n, gens)
}

/// Closed-form Gröbner data of an oriented system.
#[derive(Clone, Debug)]
pub struct GbFormulas {
    /// `X^A ∪ Bin(C,ρ)`, a rlex Gröbner basis of `F`.
    pub gb_rlex: Vec<Polynomial>,
    /// `(X^{A∪C})`.
    pub init_rlex: MonomialIdeal,
    /// `X^{A*} ∪ Bin(C*,ρ)`, a rlex Gröbner basis of `F^sat`.
    pub gb_sat: Vec<Polynomial>,
    /// `F^sat`, generated by `gb_sat`.
    pub sat: Ideal,
}

pub fn gb_formulas(sys: &BinomialSystem) -> Result<GbFormulas> {
    sys.require_oriented()?;
    let n = sys.n;
    let mut gb_rlex = monomials(n, sys.a.iter().cloned());
    gb_rlex.extend(binomials(sys.c.iter().cloned(), &sys.rho));
    let mut gb_sat = monomials(n, sys.a.iter().map(Exponent::star));
    gb_sat.extend(binomials(sys.c.iter().map(Exponent::star), &sys.rho));
    sort_descending(&mut gb_sat, TermOrder::Rlex);
    Ok(GbFormulas {
        init_rlex: MonomialIdeal::new(n, sys.a_union_c()),
        sat: Ideal::new(n, gb_sat.clone()),
        gb_rlex,
        gb_sat,
    })
}

/// `A_i`: elements supported on the first `i` coordinates, truncated.
pub fn section_set(set: &BTreeSet<Exponent>, i: usize) -> BTreeSet<Exponent> {
    set.iter().filter(|e| e.lies_in_first(i)).map(|e| e.truncate(i)).collect()
}

/// `(F ∩ S_(i))^sat` for `m(ρ) <= i`, and `(init_rlex F ∩ S_(i))^sat` below,
/// as an ideal of `K[X_1..X_i]`.
pub fn section_ideal(sys: &BinomialSystem, i: usize) -> Result<Ideal> {
    sys.require_oriented()?;
    assert!((1..=sys.n).contains(&i), "section index out of range");
    if i >= sys.m() {
        let a = section_set(&sys.a, i);
        let c = section_set(&sys.c, i);
        let rho = sys.rho.truncate(i);
        let mut gens = monomials(i, a.iter().map(Exponent::star));
        gens.extend(binomials(c.iter().map(Exponent::star), &rho));
        Ok(Ideal::new(i, gens))
    } else {
        let ac = section_set(&sys.a_union_c(), i);
        Ok(Ideal::new(i, monomials(i, ac.iter().map(Exponent::star))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u32]) -> Exponent {
        Exponent::new(v.iter().copied())
    }

    pub(crate) fn example2() -> BinomialSystem {
        let a = [
            [3, 0, 0, 0],
            [2, 1, 0, 0],
            [2, 0, 1, 0],
            [2, 0, 0, 1],
            [1, 2, 0, 0],
            [1, 1, 1, 0],
            [1, 1, 0, 1],
            [1, 0, 2, 0],
            [0, 3, 0, 0],
            [0, 2, 1, 0],
        ];
        BinomialSystem::new(4, 3, a.iter().map(|v| e(v)), [e(&[0, 2, 0, 1])], SignedExponent::new([1, -2, 1, 0]))
            .unwrap()
    }

    #[test]
    fn example2_is_valid_good_and_oriented() {
        let s = example2();
        assert!(is_good(&s));
        assert!(s.is_oriented());
        assert_eq!(s.m(), 3);
        assert_eq!(ideal_of(&s).generators().len(), 11);
    }

    #[test]
    fn flip_round_trip() {
        let s = example2();
        let f = s.flipped();
        assert!(!f.is_oriented());
        let r = validate_system(4, 3, f.a(), f.c(), f.rho());
        assert!(r.is_valid() && r.flip_suggested);
        assert_eq!(f.oriented().0, s);
        assert_eq!(gb_formulas(&f).unwrap_err(), Error::OrientationRequired);
    }

    #[test]
    fn invalid_systems_are_rejected() {
        // C overlapping A
        let err = BinomialSystem::new(
            2,
            1,
            [e(&[1, 0]), e(&[0, 1])],
            [e(&[0, 1])],
            SignedExponent::new([1, -1]),
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidSystem(_)));
        let ok = BinomialSystem::new(2, 1, [e(&[1, 0]), e(&[0, 1])], [], SignedExponent::new([3, 0])).unwrap();
        assert!(is_good(&ok));
    }
}
