use std::cmp::Ordering;
use std::fmt;

use super::Exponent;
use crate::error::{Error, Result};

/// Term orders on monomials of one ring, all with `X_1 > ... > X_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TermOrder {
    /// Degree first, then lexicographic.
    Hlex,
    /// Degree first, then `u > v` iff the last nonzero entry of `u - v` is negative.
    Rlex,
    /// Block order eliminating the first `k` variables: degree in the block first,
    /// then `Rlex`. Not degree-compatible; used internally for elimination.
    Elimination(usize),
}

impl TermOrder {
    /// Orders that refine total degree.
    pub fn is_admissible(self) -> bool {
        !matches!(self, TermOrder::Elimination(_))
    }

    /// Compares exponents of equal width without checking it.
    #[inline]
    pub fn cmp(self, u: &Exponent, v: &Exponent) -> Ordering {
        debug_assert_eq!(u.width(), v.width());
        match self {
            TermOrder::Hlex => u.degree().cmp(&v.degree()).then_with(|| lex(u.entries(), v.entries())),
            TermOrder::Rlex => u.degree().cmp(&v.degree()).then_with(|| revlex(u.entries(), v.entries())),
            TermOrder::Elimination(k) => {
                let bu: u32 = u.entries()[..k].iter().sum();
                let bv: u32 = v.entries()[..k].iter().sum();
                bu.cmp(&bv)
                    .then_with(|| u.degree().cmp(&v.degree()))
                    .then_with(|| revlex(u.entries(), v.entries()))
            }
        }
    }

    pub fn max<'a>(self, u: &'a Exponent, v: &'a Exponent) -> &'a Exponent {
        if self.cmp(u, v) == Ordering::Less {
            v
        } else {
            u
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Hlex => f.write_str("hlex"),
            TermOrder::Rlex => f.write_str("rlex"),
            TermOrder::Elimination(k) => write!(f, "elim{k}"),
        }
    }
}

impl std::str::FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<TermOrder> {
        match s {
            "hlex" => Ok(TermOrder::Hlex),
            "rlex" => Ok(TermOrder::Rlex),
            other => Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("unknown term order '{other}' (expected hlex or rlex)"),
            }),
        }
    }
}

#[inline]
fn lex(u: &[u32], v: &[u32]) -> Ordering {
    for (a, b) in u.iter().zip(v) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

#[inline]
fn revlex(u: &[u32], v: &[u32]) -> Ordering {
    for (a, b) in u.iter().zip(v).rev() {
        match a.cmp(b) {
            Ordering::Equal => continue,
            // smaller power of the trailing variable wins
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// Compares `u` and `v` under `order`, rejecting mismatched widths.
pub fn compare(order: TermOrder, u: &Exponent, v: &Exponent) -> Result<Ordering> {
    if u.width() != v.width() {
        return Err(Error::WidthMismatch { left: u.width(), right: v.width() });
    }
    Ok(order.cmp(u, v))
}
