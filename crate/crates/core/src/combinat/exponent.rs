use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Entries = SmallVec<[u32; 8]>;

/// A vector `a` in `N^n`, standing for the monomial `X^a`.
///
/// Variables are 1-based in the mathematical sense but stored 0-based:
/// `entries()[0]` is the exponent of `X_1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent {
    entries: Entries,
    degree: u32,
}

impl Exponent {
    pub fn new(entries: impl IntoIterator<Item = u32>) -> Exponent {
        let entries: Entries = entries.into_iter().collect();
        assert!(!entries.is_empty(), "exponent vectors need width at least 1");
        let degree = entries.iter().sum();
        Exponent { entries, degree }
    }

    pub(crate) fn from_entries(entries: Entries) -> Exponent {
        let degree = entries.iter().sum();
        Exponent { entries, degree }
    }

    pub fn zero(n: usize) -> Exponent {
        Exponent::new(std::iter::repeat_n(0, n))
    }

    /// The standard vector `e_i` (0-based index).
    pub fn unit(n: usize, i: usize) -> Exponent {
        let mut e = Exponent::zero(n);
        e.entries[i] = 1;
        e.degree = 1;
        e
    }

    pub fn width(&self) -> usize {
        self.entries.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> u32 {
        self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.degree == 0
    }

    pub fn divides(&self, other: &Exponent) -> bool {
        debug_assert_eq!(self.width(), other.width());
        self.degree <= other.degree && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Product of monomials.
    pub fn mul(&self, other: &Exponent) -> Exponent {
        Exponent {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    /// Quotient `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Exponent) -> Option<Exponent> {
        let entries: Option<Entries> =
            self.entries.iter().zip(&other.entries).map(|(a, b)| a.checked_sub(*b)).collect();
        entries.map(|entries| Exponent { entries, degree: self.degree - other.degree })
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent::from_entries(self.entries.iter().zip(&other.entries).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Exponent) -> bool {
        self.entries.iter().zip(&other.entries).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `m(a)`: the largest 1-based index with a nonzero entry, or 1 for the zero vector.
    pub fn m(&self) -> usize {
        last_nonzero(self.entries.iter().map(|&e| e != 0))
    }

    /// `a* = a - a_n e_n`: the exponent with the last variable stripped.
    pub fn star(&self) -> Exponent {
        let mut e = self.clone();
        let last = e.entries.len() - 1;
        e.degree -= e.entries[last];
        e.entries[last] = 0;
        e
    }

    /// Exponent with variable `i` (0-based) removed entirely.
    pub fn strip_var(&self, i: usize) -> Exponent {
        let mut e = self.clone();
        e.degree -= e.entries[i];
        e.entries[i] = 0;
        e
    }

    /// Adds `rho`, returning `None` when an entry would become negative.
    pub fn shift(&self, rho: &SignedExponent) -> Option<Exponent> {
        assert_eq!(self.width(), rho.width());
        let entries: Option<Entries> = self
            .entries
            .iter()
            .zip(rho.entries())
            .map(|(&a, &r)| u32::try_from(a as i64 + r).ok())
            .collect();
        entries.map(Exponent::from_entries)
    }

    pub fn to_signed(&self) -> SignedExponent {
        SignedExponent::new(self.entries.iter().map(|&a| a as i64))
    }

    /// The first `i` entries, as an exponent of `K[X_1..X_i]`.
    pub fn truncate(&self, i: usize) -> Exponent {
        Exponent::new(self.entries[..i].iter().copied())
    }

    /// Zero-padded to width `n`.
    pub fn extend(&self, n: usize) -> Exponent {
        assert!(n >= self.width());
        let mut entries = self.entries.clone();
        entries.resize(n, 0);
        Exponent { entries, degree: self.degree }
    }

    /// True when only the first `i` variables occur.
    pub fn lies_in_first(&self, i: usize) -> bool {
        self.entries[i.min(self.width())..].iter().all(|&e| e == 0)
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Exponent) -> Exponent {
        Exponent::from_entries(self.entries.iter().chain(other.entries.iter()).copied().collect())
    }

    pub fn split_at(&self, k: usize) -> (Exponent, Exponent) {
        (
            Exponent::from_entries(self.entries[..k].iter().copied().collect()),
            Exponent::from_entries(self.entries[k..].iter().copied().collect()),
        )
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(self.entries.iter()))
    }
}

/// Textual form `0,2,0,1`.
impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(self.entries.iter()))
    }
}

impl std::str::FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Exponent> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut entries = Entries::new();
        let mut column = 1;
        for part in s.split(',') {
            let v = part.trim().parse::<u32>().map_err(|_| Error::Parse {
                line: 1,
                column,
                message: format!("'{}' is not a nonnegative integer", part.trim()),
            })?;
            entries.push(v);
            column += part.len() + 1;
        }
        Ok(Exponent::from_entries(entries))
    }
}

/// A vector in `Z^n`; the shift `rho` of a binomial system.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedExponent {
    entries: SmallVec<[i64; 8]>,
}

impl SignedExponent {
    pub fn new(entries: impl IntoIterator<Item = i64>) -> SignedExponent {
        let entries: SmallVec<[i64; 8]> = entries.into_iter().collect();
        assert!(!entries.is_empty(), "exponent vectors need width at least 1");
        SignedExponent { entries }
    }

    pub fn zero(n: usize) -> SignedExponent {
        SignedExponent::new(std::iter::repeat_n(0, n))
    }

    pub fn width(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> i64 {
        self.entries[i]
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn m(&self) -> usize {
        last_nonzero(self.entries.iter().map(|&e| e != 0))
    }

    pub fn plus(&self) -> Exponent {
        Exponent::new(self.entries.iter().map(|&e| e.max(0) as u32))
    }

    pub fn minus(&self) -> Exponent {
        Exponent::new(self.entries.iter().map(|&e| (-e).max(0) as u32))
    }

    pub fn neg(&self) -> SignedExponent {
        SignedExponent::new(self.entries.iter().map(|&e| -e))
    }

    pub fn star(&self) -> SignedExponent {
        let mut e = self.clone();
        let last = e.entries.len() - 1;
        e.entries[last] = 0;
        e
    }

    pub fn truncate(&self, i: usize) -> SignedExponent {
        SignedExponent::new(self.entries[..i].iter().copied())
    }

    /// Componentwise difference `a - b` of two exponents.
    pub fn difference(a: &Exponent, b: &Exponent) -> SignedExponent {
        SignedExponent::new(a.entries().iter().zip(b.entries()).map(|(&x, &y)| x as i64 - y as i64))
    }
}

impl fmt::Debug for SignedExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(self.entries.iter()))
    }
}

impl fmt::Display for SignedExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(self.entries.iter()))
    }
}

impl std::str::FromStr for SignedExponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<SignedExponent> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut entries = Vec::new();
        let mut column = 1;
        for part in s.split(',') {
            let v = part.trim().parse::<i64>().map_err(|_| Error::Parse {
                line: 1,
                column,
                message: format!("'{}' is not an integer", part.trim()),
            })?;
            entries.push(v);
            column += part.len() + 1;
        }
        Ok(SignedExponent::new(entries))
    }
}

/// Record of the elementary transforms of a vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transforms {
    pub m: usize,
    pub star: SignedExponent,
    pub plus: Exponent,
    pub minus: Exponent,
}

/// `m(a)`, `a*`, `a+` and `a-` of a (possibly signed) vector.
pub fn exponent_transforms(a: &SignedExponent) -> Transforms {
    Transforms { m: a.m(), star: a.star(), plus: a.plus(), minus: a.minus() }
}

/// All of `N^n_d`, in descending lexicographic order.
pub fn exponents_of_degree(n: usize, d: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    let mut current = Entries::from_elem(0, n);
    fill(&mut current, 0, d, &mut out);
    out
}

fn fill(current: &mut Entries, pos: usize, remaining: u32, out: &mut Vec<Exponent>) {
    let n = current.len();
    if pos == n - 1 {
        current[pos] = remaining;
        out.push(Exponent::from_entries(current.clone()));
        return;
    }
    for v in (0..=remaining).rev() {
        current[pos] = v;
        fill(current, pos + 1, remaining - v, out);
    }
    current[pos] = 0;
}

/// `#N^n_d = C(d + n - 1, n - 1)`.
pub fn count_of_degree(n: usize, d: u32) -> u64 {
    let k = (n - 1) as u64;
    let mut acc: u64 = 1;
    for i in 1..=k {
        acc = acc * (d as u64 + i) / i;
    }
    acc
}

fn last_nonzero(flags: impl Iterator<Item = bool>) -> usize {
    flags.enumerate().filter(|(_, nz)| *nz).map(|(i, _)| i + 1).last().unwrap_or(1)
}

fn join<T: fmt::Display>(items: impl Iterator<Item = T>) -> String {
    items.map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}
