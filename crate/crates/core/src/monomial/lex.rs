use std::collections::BTreeSet;

use super::{HilbertData, MonomialIdeal};
use crate::combinat::{count_of_degree, exponents_of_degree, Exponent};
use crate::error::{Error, Result};

/// `N^n_d` in descending hlex (which is descending lex within one degree).
fn hlex_descending(n: usize, d: u32) -> Vec<Exponent> {
    exponents_of_degree(n, d)
}

/// Whether an equidegree set is upward closed in hlex within `N^n_d`.
pub fn is_lex_segment(set: &BTreeSet<Exponent>) -> Result<bool> {
    let Some(first) = set.iter().next() else {
        return Ok(true);
    };
    let (n, d) = (first.width(), first.degree());
    if let Some(bad) = set.iter().find(|a| a.degree() != d) {
        return Err(Error::MixedDegrees(d, bad.degree()));
    }
    Ok(hlex_descending(n, d).iter().take(set.len()).all(|a| set.contains(a)))
}

/// The lex ideal whose Hilbert function agrees with `h` on `0..=up_to`: its
/// degree-`d` piece is the initial hlex segment of length `h(d)`.
pub fn lex_ideal_from_hilbert(h: &HilbertData, up_to: u32) -> Result<MonomialIdeal> {
    let n = h.width();
    let up_to = up_to.min(h.bound());
    let mut gens = Vec::new();
    let mut previous: Option<BTreeSet<Exponent>> = None;
    for d in 0..=up_to {
        let size = h.get(d).unwrap_or(0);
        if size > count_of_degree(n, d) {
            return Err(Error::InadmissibleHilbertFunction { degree: d });
        }
        let segment: BTreeSet<Exponent> = hlex_descending(n, d).into_iter().take(size as usize).collect();
        if let Some(prev) = &previous {
            // the previous piece times every variable must land in this one
            for a in prev {
                for i in 0..n {
                    if !segment.contains(&a.mul(&Exponent::unit(n, i))) {
                        return Err(Error::InadmissibleHilbertFunction { degree: d });
                    }
                }
            }
            let generated = MonomialIdeal::new(n, prev.iter().cloned());
            gens.extend(segment.iter().filter(|a| !generated.contains(a)).cloned());
        } else {
            gens.extend(segment.iter().cloned());
        }
        previous = Some(segment);
    }
    Ok(MonomialIdeal::new(n, gens))
}
