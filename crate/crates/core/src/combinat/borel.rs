use std::collections::BTreeSet;
use std::fmt;

use super::{exponents_of_degree, Exponent, SignedExponent};
use crate::error::{Error, Result};

/// An `n x n` nonnegative integer matrix with `M_ij = 0` for `j < i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpperTriangularMatrix {
    n: usize,
    // row-major n*n
    entries: Vec<u32>,
}

impl UpperTriangularMatrix {
    pub fn zero(n: usize) -> Self {
        UpperTriangularMatrix { n, entries: vec![0; n * n] }
    }

    pub fn diagonal(a: &Exponent) -> Self {
        let mut m = Self::zero(a.width());
        for i in 0..a.width() {
            m.set(i, i, a.get(i));
        }
        m
    }

    /// Builds a matrix from rows; fails if an entry below the diagonal is nonzero.
    pub fn from_rows(rows: &[Vec<u32>]) -> Option<Self> {
        let n = rows.len();
        let mut m = Self::zero(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return None;
            }
            for (j, &v) in row.iter().enumerate() {
                if j < i && v != 0 {
                    return None;
                }
                m.set(i, j, v);
            }
        }
        Some(m)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry `M_ij`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(j >= i || v == 0);
        self.entries[i * self.n + j] = v;
    }

    pub fn row_sums(&self) -> Vec<u32> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u32> {
        (0..self.n).map(|j| (0..self.n).map(|i| self.get(i, j)).sum()).collect()
    }

    /// Membership in `U(a, b)`: row sums `a`, column sums `b`.
    pub fn is_in_u(&self, a: &Exponent, b: &Exponent) -> bool {
        self.n == a.width()
            && self.n == b.width()
            && self.row_sums() == a.entries()
            && self.col_sums() == b.entries()
    }

    /// `M + rho`: adds `rho_i` to the diagonal entry `M_ii`; `None` if one turns negative.
    pub fn add_rho(&self, rho: &SignedExponent) -> Option<Self> {
        let mut out = self.clone();
        for i in 0..self.n {
            let v = self.get(i, i) as i64 + rho.get(i);
            out.set(i, i, u32::try_from(v).ok()?);
        }
        Some(out)
    }

    /// Entries `(i, j, M_ij)` on or above the diagonal.
    pub fn upper_entries(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        (0..self.n).flat_map(move |i| (i..self.n).map(move |j| (i, j, self.get(i, j))))
    }
}

impl fmt::Debug for UpperTriangularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Rows separated by `;`, e.g. `[0,0;0,2]`.
impl fmt::Display for UpperTriangularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", rows.join(";"))
    }
}

fn check_same_shape(a: &Exponent, b: &Exponent) -> Result<()> {
    if a.width() != b.width() {
        return Err(Error::WidthMismatch { left: a.width(), right: b.width() });
    }
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch { left: a.degree(), right: b.degree() });
    }
    Ok(())
}

/// Prefix sums `alpha_k = sum_{i<=k} (a_i - b_i)` for `k = 1..n-1`.
fn prefix_sums(a: &Exponent, b: &Exponent) -> Vec<i64> {
    let mut acc = 0i64;
    a.entries()[..a.width() - 1]
        .iter()
        .zip(b.entries())
        .map(|(&x, &y)| {
            acc += x as i64 - y as i64;
            acc
        })
        .collect()
}

/// `a >=_Bor b`: `a - b` is a nonnegative combination of the moves `e_j - e_{j+1}`.
pub fn borel_ge(a: &Exponent, b: &Exponent) -> Result<bool> {
    check_same_shape(a, b)?;
    Ok(borel_ge_unchecked(a, b))
}

pub(crate) fn borel_ge_unchecked(a: &Exponent, b: &Exponent) -> bool {
    let mut acc = 0i64;
    for (&x, &y) in a.entries().iter().zip(b.entries()) {
        acc += x as i64 - y as i64;
        if acc < 0 {
            return false;
        }
    }
    true
}

/// A matrix in `U(a, b)`, built by repairing the negative diagonal entries of the
/// bidiagonal matrix read off the Borel moves.
pub fn borel_witness(a: &Exponent, b: &Exponent) -> Result<UpperTriangularMatrix> {
    check_same_shape(a, b)?;
    if !borel_ge_unchecked(a, b) {
        return Err(Error::NotBorelComparable { a: a.to_string(), b: b.to_string() });
    }
    let n = a.width();
    let mut alpha = vec![0i64; n + 1];
    for (k, s) in prefix_sums(a, b).into_iter().enumerate() {
        alpha[k + 1] = s;
    }
    // M(0): superdiagonal alpha_i, diagonal b_i - alpha_{i-1}
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        m[i][i] = b.get(i) as i64 - alpha[i];
        if i + 1 < n {
            m[i][i + 1] = alpha[i + 1];
        }
    }
    while let Some(l) = (0..n).find(|&j| m[j][j] < 0) {
        let p = (0..l).find(|&p| m[p][l] > 0).expect("column sum forces a positive entry above");
        let q = (l + 1..n).find(|&q| m[l][q] > 0).expect("row sum forces a positive entry right");
        m[l][l] += 1;
        m[p][q] += 1;
        m[p][l] -= 1;
        m[l][q] -= 1;
    }
    let mut out = UpperTriangularMatrix::zero(n);
    for i in 0..n {
        for j in i..n {
            out.set(i, j, m[i][j] as u32);
        }
    }
    debug_assert!(out.is_in_u(a, b));
    Ok(out)
}

/// Every matrix of `U(a, b)`, by exhaustive search over columns.
///
/// Fails once more than `budget` complete candidates have been visited.
pub fn enumerate_u(a: &Exponent, b: &Exponent, budget: usize) -> Result<Vec<UpperTriangularMatrix>> {
    check_same_shape(a, b)?;
    let n = a.width();
    let mut search = USearch {
        n,
        b: b.entries().to_vec(),
        row_left: a.entries().to_vec(),
        current: UpperTriangularMatrix::zero(n),
        found: Vec::new(),
        visited: 0,
        budget,
    };
    search.column(0)?;
    Ok(search.found)
}

struct USearch {
    n: usize,
    b: Vec<u32>,
    row_left: Vec<u32>,
    current: UpperTriangularMatrix,
    found: Vec<UpperTriangularMatrix>,
    visited: usize,
    budget: usize,
}

impl USearch {
    fn column(&mut self, j: usize) -> Result<()> {
        if j == self.n {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(Error::BudgetExceeded { what: "matrix enumeration", limit: self.budget });
            }
            if self.row_left.iter().all(|&r| r == 0) {
                self.found.push(self.current.clone());
            }
            return Ok(());
        }
        let target = self.b[j];
        self.cell(j, 0, target)
    }

    // distribute `left` over rows i..=j of column j
    fn cell(&mut self, j: usize, i: usize, left: u32) -> Result<()> {
        if i == j {
            if left > self.row_left[i] {
                return Ok(());
            }
            self.row_left[i] -= left;
            self.current.set(i, j, left);
            let r = self.column(j + 1);
            self.current.set(i, j, 0);
            self.row_left[i] += left;
            return r;
        }
        let cap = left.min(self.row_left[i]);
        for v in 0..=cap {
            self.row_left[i] -= v;
            self.current.set(i, j, v);
            let r = self.cell(j, i + 1, left - v);
            self.current.set(i, j, 0);
            self.row_left[i] += v;
            r?;
        }
        Ok(())
    }
}

fn common_degree<'a>(set: impl IntoIterator<Item = &'a Exponent>) -> Result<Option<(usize, u32)>> {
    let mut shape: Option<(usize, u32)> = None;
    for e in set {
        match shape {
            None => shape = Some((e.width(), e.degree())),
            Some((n, d)) => {
                if e.width() != n {
                    return Err(Error::WidthMismatch { left: n, right: e.width() });
                }
                if e.degree() != d {
                    return Err(Error::MixedDegrees(d, e.degree()));
                }
            }
        }
    }
    Ok(shape)
}

/// The smallest Borel set containing `d`: everything Borel-above some element.
pub fn borel_closure(d: &BTreeSet<Exponent>) -> Result<BTreeSet<Exponent>> {
    let Some((n, deg)) = common_degree(d)? else {
        return Ok(BTreeSet::new());
    };
    Ok(exponents_of_degree(n, deg)
        .into_iter()
        .filter(|a| d.iter().any(|b| borel_ge_unchecked(a, b)))
        .collect())
}

/// Upward closure under `>=_Bor`, checked through the elementary moves `e_j - e_{j+1}`.
pub fn is_borel_set(set: &BTreeSet<Exponent>) -> Result<bool> {
    common_degree(set)?;
    Ok(set.iter().all(|a| elementary_raises(a).all(|up| set.contains(&up))))
}

/// The exponents `a + e_j - e_{j+1}` reachable by one Borel move.
pub(crate) fn elementary_raises(a: &Exponent) -> impl Iterator<Item = Exponent> + '_ {
    (0..a.width() - 1).filter(move |&j| a.get(j + 1) > 0).map(move |j| {
        let mut v = a.entries().to_vec();
        v[j] += 1;
        v[j + 1] -= 1;
        Exponent::new(v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u32]) -> Exponent {
        Exponent::new(v.iter().copied())
    }

    // brute force over all alpha_j <= bound
    fn borel_by_moves(a: &Exponent, b: &Exponent, bound: i64) -> bool {
        let n = a.width();
        let mut alphas = vec![0i64; n - 1];
        loop {
            let mut v: Vec<i64> = b.entries().iter().map(|&x| x as i64).collect();
            for (j, &al) in alphas.iter().enumerate() {
                v[j] += al;
                v[j + 1] -= al;
            }
            if v.iter().zip(a.entries()).all(|(x, y)| *x == *y as i64) {
                return true;
            }
            let mut k = 0;
            loop {
                if k == n - 1 {
                    return false;
                }
                alphas[k] += 1;
                if alphas[k] <= bound {
                    break;
                }
                alphas[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn single_step_and_reflexive() {
        assert!(borel_ge(&e(&[2, 0, 0]), &e(&[1, 1, 0])).unwrap());
        assert!(borel_ge(&e(&[1, 1, 0]), &e(&[1, 1, 0])).unwrap());
    }

    #[test]
    fn incomparable_pair() {
        let a = e(&[1, 0, 1, 1]);
        let b = e(&[0, 2, 0, 1]);
        assert!(!borel_ge(&a, &b).unwrap());
        assert!(!borel_by_moves(&a, &b, 3));
        assert!(matches!(borel_witness(&a, &b), Err(Error::NotBorelComparable { .. })));
    }

    #[test]
    fn degree_mismatch() {
        assert!(matches!(borel_ge(&e(&[1, 0]), &e(&[0, 2])), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn unique_witness_of_counterexample_pair() {
        let b = e(&[0, 2, 0, 3, 0]);
        let c = e(&[0, 2, 0, 2, 1]);
        let all = enumerate_u(&b, &c, 1_000_000).unwrap();
        assert_eq!(all.len(), 1);
        let mut rows = vec![vec![0u32; 5]; 5];
        rows[1][1] = 2;
        rows[3][3] = 2;
        rows[3][4] = 1;
        let expected = UpperTriangularMatrix::from_rows(&rows).unwrap();
        assert_eq!(all[0], expected);
        assert_eq!(borel_witness(&b, &c).unwrap(), expected);
    }

    #[test]
    fn identity_witness() {
        let a = e(&[1, 0, 2, 1]);
        assert_eq!(borel_witness(&a, &a).unwrap(), UpperTriangularMatrix::diagonal(&a));
    }

    #[test]
    fn witness_moving_two_units() {
        let a = e(&[2, 0, 0]);
        let b = e(&[0, 2, 0]);
        let m = borel_witness(&a, &b).unwrap();
        assert_eq!(m.get(0, 1), 2);
        assert_eq!(m.row_sums(), vec![2, 0, 0]);
        assert_eq!(m.col_sums(), vec![0, 2, 0]);
        assert!(enumerate_u(&a, &b, 100).unwrap().contains(&m));
    }

    #[test]
    fn witness_needs_repair() {
        // b_2 - alpha_1 < 0 forces the repair loop
        let a = e(&[3, 0, 0, 0]);
        let b = e(&[0, 0, 0, 3]);
        let m = borel_witness(&a, &b).unwrap();
        assert!(m.is_in_u(&a, &b));
    }

    #[test]
    fn enumerate_small_cases() {
        let a = e(&[1, 1]);
        let all = enumerate_u(&a, &a, 100).unwrap();
        assert_eq!(all, vec![UpperTriangularMatrix::diagonal(&a)]);
        assert!(enumerate_u(&e(&[0, 2]), &e(&[1, 1]), 100).unwrap().is_empty());
    }

    #[test]
    fn enumeration_budget() {
        let a = e(&[6, 0, 0, 0]);
        let b = e(&[0, 2, 2, 2]);
        assert!(matches!(enumerate_u(&a, &b, 0), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn closures() {
        let bottom: BTreeSet<_> = [e(&[0, 0, 3])].into();
        assert_eq!(borel_closure(&bottom).unwrap().len(), 10);
        let top: BTreeSet<_> = [e(&[3, 0, 0])].into();
        assert_eq!(borel_closure(&top).unwrap(), top);
        let mixed: BTreeSet<_> = [e(&[3, 0, 0]), e(&[0, 1, 0])].into();
        assert!(matches!(borel_closure(&mixed), Err(Error::MixedDegrees(..))));
    }

    #[test]
    fn borel_set_checks() {
        assert!(is_borel_set(&BTreeSet::new()).unwrap());
        let full: BTreeSet<_> = exponents_of_degree(4, 3).into_iter().collect();
        assert!(is_borel_set(&full).unwrap());
        let lonely: BTreeSet<_> = [e(&[0, 2, 0, 1])].into();
        assert!(!is_borel_set(&lonely).unwrap());
        assert!(borel_ge(&e(&[1, 1, 0, 1]), &e(&[0, 2, 0, 1])).unwrap());
    }

    #[test]
    fn prefix_sum_decision_matches_move_search() {
        for a in exponents_of_degree(4, 3) {
            for b in exponents_of_degree(4, 3) {
                assert_eq!(borel_ge(&a, &b).unwrap(), borel_by_moves(&a, &b, 3), "{a} vs {b}");
            }
        }
    }
}
