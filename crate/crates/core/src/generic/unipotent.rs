use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinat::TermOrder;
use crate::polyalg::{Coeff, Ideal, Polynomial};

/// An upper unitriangular matrix `g`, acting by `X_j -> Σ_i g_ij X_i`.
///
/// Acting by `g` and then by `h` is acting by the product `hg`.
#[derive(Clone, PartialEq, Eq)]
pub struct UnipotentChange {
    n: usize,
    rows: Vec<Vec<Coeff>>,
    provenance: Option<(u64, u64)>,
}

impl UnipotentChange {
    pub fn identity(n: usize) -> UnipotentChange {
        let rows = (0..n).map(|i| (0..n).map(|j| if i == j { Coeff::one() } else { Coeff::zero() }).collect()).collect();
        UnipotentChange { n, rows, provenance: None }
    }

    /// Ones on and above the diagonal.
    pub fn all_ones(n: usize) -> UnipotentChange {
        let rows = (0..n).map(|i| (0..n).map(|j| if i <= j { Coeff::one() } else { Coeff::zero() }).collect()).collect();
        UnipotentChange { n, rows, provenance: None }
    }

    /// `None` unless the rows form a square upper unitriangular matrix.
    pub fn from_rows(rows: Vec<Vec<Coeff>>) -> Option<UnipotentChange> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return None;
            }
            for (j, v) in row.iter().enumerate() {
                let ok = match i.cmp(&j) {
                    std::cmp::Ordering::Equal => v.is_one(),
                    std::cmp::Ordering::Greater => v.is_zero(),
                    std::cmp::Ordering::Less => true,
                };
                if !ok {
                    return None;
                }
            }
        }
        Some(UnipotentChange { n, rows, provenance: None })
    }

    /// Entries above the diagonal drawn uniformly from `1..=bound`.
    ///
    /// The draw is a function of `(seed, draw)` only: ChaCha8 seeded with
    /// `seed`, on stream `draw`, filling rows top to bottom.
    pub fn random(n: usize, seed: u64, draw: u64, bound: u64) -> UnipotentChange {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(draw);
        let mut g = UnipotentChange::identity(n);
        for i in 0..n {
            for j in i + 1..n {
                let v: u64 = rng.gen_range(1..=bound.max(1));
                g.rows[i][j] = Coeff::from_integer(v.into());
            }
        }
        g.provenance = Some((seed, draw));
        g
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Coeff {
        &self.rows[i][j]
    }

    /// The `(seed, draw)` pair of a random change.
    pub fn provenance(&self) -> Option<(u64, u64)> {
        self.provenance
    }

    pub fn is_identity(&self) -> bool {
        *self == UnipotentChange::identity(self.n)
    }

    pub fn inverse(&self) -> UnipotentChange {
        let n = self.n;
        let mut inv = UnipotentChange::identity(n);
        for j in 0..n {
            for i in (0..j).rev() {
                let mut s = Coeff::zero();
                for k in i + 1..=j {
                    s += &self.rows[i][k] * &inv.rows[k][j];
                }
                inv.rows[i][j] = -s;
            }
        }
        inv
    }

    /// The matrix product `self · other`.
    pub fn product(&self, other: &UnipotentChange) -> UnipotentChange {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = UnipotentChange::identity(n);
        for i in 0..n {
            for j in i + 1..n {
                let mut s = Coeff::zero();
                for k in i..=j {
                    s += &self.rows[i][k] * &other.rows[k][j];
                }
                out.rows[i][j] = s;
            }
        }
        out
    }

    /// Images of the variables under the substitution.
    pub fn images(&self, order: TermOrder) -> Vec<Polynomial> {
        let n = self.n;
        (0..n)
            .map(|j| {
                let terms = (0..=j).map(|i| (crate::combinat::Exponent::unit(n, i), self.rows[i][j].clone()));
                Polynomial::from_terms(n, order, terms)
            })
            .collect()
    }

    pub fn apply_polynomial(&self, f: &Polynomial) -> Polynomial {
        assert_eq!(f.width(), self.n, "width mismatch");
        if self.is_identity() {
            return f.clone();
        }
        f.substitute(&self.images(f.order()))
    }
}

/// The ideal generated by the transformed generators.
pub fn apply_change(g: &UnipotentChange, ideal: &Ideal) -> Ideal {
    assert_eq!(g.size(), ideal.width(), "width mismatch");
    Ideal::new(ideal.width(), ideal.generators().iter().map(|f| g.apply_polynomial(f)))
}

impl fmt::Debug for UnipotentChange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for UnipotentChange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::int;

    #[test]
    fn draws_are_reproducible_and_unipotent() {
        let g = UnipotentChange::random(4, 42, 0, 1_000_000);
        assert_eq!(g, UnipotentChange::random(4, 42, 0, 1_000_000));
        assert_ne!(g, UnipotentChange::random(4, 42, 1, 1_000_000));
        assert!(UnipotentChange::from_rows(g.rows.clone()).is_some());
        for i in 0..4 {
            for j in i + 1..4 {
                assert!(*g.get(i, j) >= int(1) && *g.get(i, j) <= int(1_000_000));
            }
        }
    }

    #[test]
    fn inverse_and_composition() {
        let g = UnipotentChange::random(4, 7, 3, 50);
        let h = UnipotentChange::random(4, 8, 0, 50);
        assert!(g.product(&g.inverse()).is_identity());
        assert!(g.inverse().product(&g).is_identity());
        let f = Polynomial::from_terms(
            4,
            TermOrder::Rlex,
            [(crate::combinat::Exponent::new([0, 2, 0, 1]), int(1)), (crate::combinat::Exponent::new([1, 0, 1, 1]), int(-1))],
        );
        let twice = h.apply_polynomial(&g.apply_polynomial(&f));
        assert_eq!(twice, h.product(&g).apply_polynomial(&f));
        assert_eq!(g.inverse().apply_polynomial(&g.apply_polynomial(&f)), f);
    }

    #[test]
    fn rejects_non_unipotent_rows() {
        assert!(UnipotentChange::from_rows(vec![vec![int(1), int(3)], vec![int(1), int(1)]]).is_none());
        assert!(UnipotentChange::from_rows(vec![vec![int(2), int(0)], vec![int(0), int(1)]]).is_none());
    }
}
