use num_traits::Zero;

use super::ideal::Ideal;
use super::poly::{Coeff, Polynomial};
use crate::combinat::{Exponent, TermOrder};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;

/// The one-parameter family `z ↦ I_z` attached to an integral weight `w`
/// that selects the leading terms of the reduced basis of `I`.
///
/// A basis element `Σ c_k X^{a_k}` with leading exponent `a_0` becomes
/// `Σ c_k z^{w·a_0 − w·a_k} X^{a_k}`. The fibre at `z = 0` is the initial
/// ideal; the fibre at `z = u ≠ 0` is `I` with `X_i` rescaled by `u^{-w_i}`.
#[derive(Clone, Debug)]
pub struct DegenerationFamily {
    base: Ideal,
    order: TermOrder,
    weight: Vec<i64>,
    family: Vec<Polynomial>,
    initial: MonomialIdeal,
    samples: Vec<(Coeff, Ideal)>,
}

impl DegenerationFamily {
    pub fn base(&self) -> &Ideal {
        &self.base
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn weight(&self) -> &[i64] {
        &self.weight
    }

    /// Family generators in `n + 1` variables, the parameter `z` last.
    pub fn generators(&self) -> &[Polynomial] {
        &self.family
    }

    pub fn as_ideal(&self) -> Ideal {
        Ideal::new(self.base.width() + 1, self.family.iter().cloned())
    }

    pub fn initial(&self) -> &MonomialIdeal {
        &self.initial
    }

    /// Fibres at the sample points requested at construction.
    pub fn samples(&self) -> &[(Coeff, Ideal)] {
        &self.samples
    }

    pub fn fiber(&self, u: &Coeff) -> Ideal {
        let n = self.base.width();
        let gens = self.family.iter().map(|f| {
            let terms = f.terms().iter().filter_map(|(e, c)| {
                let (x, z) = e.split_at(n);
                let k = z.get(0);
                if u.is_zero() && k > 0 {
                    return None;
                }
                Some((x, c * num_traits::pow(u.clone(), k as usize)))
            });
            Polynomial::from_terms(n, TermOrder::Rlex, terms.collect::<Vec<_>>())
        });
        Ideal::new(n, gens)
    }
}

/// An integral weight `w` with `w·lead > w·a` for every other exponent `a` of
/// every polynomial in `basis`, found by perceptron updates.
///
/// Fails with `WeightNotFound` after `budget` updates. When it keeps all
/// inequalities, `w` is shifted along `(1,…,1)` to have positive entries.
pub fn find_weight(basis: &[Polynomial], budget: usize) -> Result<Vec<i64>> {
    let n = match basis.first() {
        Some(f) => f.width(),
        None => return Ok(Vec::new()),
    };
    let constraints: Vec<Vec<i64>> = basis
        .iter()
        .flat_map(|f| {
            let lead = f.leading_exponent().cloned().unwrap_or_else(|| Exponent::zero(n));
            f.terms()[1..]
                .iter()
                .map(move |(a, _)| (0..n).map(|i| lead.get(i) as i64 - a.get(i) as i64).collect())
                .collect::<Vec<_>>()
        })
        .collect();
    let dot = |w: &[i64], v: &[i64]| w.iter().zip(v).map(|(a, b)| a * b).sum::<i64>();
    let mut w = vec![0i64; n];
    let mut updates = 0usize;
    loop {
        let mut clean = true;
        for v in &constraints {
            if dot(&w, v) <= 0 {
                clean = false;
                updates += 1;
                if updates > budget {
                    return Err(Error::WeightNotFound { budget });
                }
                for (wi, vi) in w.iter_mut().zip(v) {
                    *wi += vi;
                }
            }
        }
        if clean {
            break;
        }
    }
    let low = w.iter().copied().min().unwrap_or(1);
    if low < 1 {
        let shifted: Vec<i64> = w.iter().map(|x| x + 1 - low).collect();
        if constraints.iter().all(|v| dot(&shifted, v) > 0) {
            w = shifted;
        }
    }
    Ok(w)
}

/// The weight family degenerating `I` to `init_order I`, with fibres
/// materialised at each of `samples`.
pub fn weight_degeneration(ideal: &Ideal, order: TermOrder, samples: &[Coeff], cfg: &Config) -> Result<DegenerationFamily> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = ideal.width();
    let gb = ideal.groebner(order, cfg)?;
    let weight = find_weight(&gb, cfg.enum_budget)?;
    let dot = |a: &Exponent| (0..n).map(|i| weight[i] * a.get(i) as i64).sum::<i64>();
    let family: Vec<Polynomial> = gb
        .iter()
        .map(|f| {
            let top = dot(f.leading_exponent().unwrap());
            let terms = f.terms().iter().map(|(a, c)| {
                let k = u32::try_from(top - dot(a)).expect("weight selects the leading term");
                (a.concat(&Exponent::new([k])), c.clone())
            });
            Polynomial::from_terms(n + 1, TermOrder::Rlex, terms.collect::<Vec<_>>())
        })
        .collect();
    let mut out = DegenerationFamily {
        base: ideal.clone(),
        order,
        weight,
        family,
        initial: ideal.initial_ideal(order, cfg)?,
        samples: Vec::new(),
    };
    out.samples = samples.iter().map(|u| (u.clone(), out.fiber(u))).collect();
    Ok(out)
}
