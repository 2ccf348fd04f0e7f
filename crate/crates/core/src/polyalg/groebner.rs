use std::cmp::Ordering;

use num_traits::One;

use super::poly::{Polynomial, Term};
use crate::combinat::{Exponent, TermOrder};
use crate::error::{Error, Result};

/// Remainder of `f` on division by `basis`.
///
/// The highest reducible term is reduced first, by the first basis element (in
/// list order) whose leading term divides it. `basis` must share `f`'s order.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let order = f.order();
    let leads: Vec<(&Exponent, &Polynomial)> =
        basis.iter().filter_map(|g| g.leading_exponent().map(|e| (e, g))).collect();
    debug_assert!(basis.iter().all(|g| g.order() == order));
    let mut rem: Vec<Term> = Vec::new();
    let mut p = f.clone();
    while let Some((e, c)) = p.terms().first() {
        match leads.iter().find(|(l, _)| l.divides(e)) {
            Some((l, g)) => {
                let q = e.checked_div(l).expect("divisor");
                let coef = c / g.leading_coeff().expect("nonzero divisor");
                p = p.sub_mul_term(&coef, &q, g);
            }
            None => {
                let mut terms = p.into_terms();
                rem.push(terms.remove(0));
                p = Polynomial::from_sorted(f.width(), order, terms);
            }
        }
    }
    Polynomial::from_sorted(f.width(), order, rem)
}

/// `lcm/lt(f) * f / lc(f) - lcm/lt(g) * g / lc(g)`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (lf, lg) = match (f.leading_exponent(), g.leading_exponent()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Polynomial::zero(f.width(), f.order()),
    };
    let l = lf.lcm(lg);
    let a = f.mul_term(&f.leading_coeff().unwrap().recip(), &l.checked_div(lf).unwrap());
    a.sub_mul_term(&g.leading_coeff().unwrap().recip(), &l.checked_div(lg).unwrap(), g)
}

/// Buchberger's criterion: every S-pair with non-coprime leading terms reduces to zero.
pub fn is_groebner(basis: &[Polynomial]) -> bool {
    for (i, f) in basis.iter().enumerate() {
        for g in &basis[i + 1..] {
            let (Some(lf), Some(lg)) = (f.leading_exponent(), g.leading_exponent()) else { continue };
            if lf.is_coprime(lg) {
                continue;
            }
            if !normal_form(&s_polynomial(f, g), basis).is_zero() {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Exponent,
}

struct Engine {
    order: TermOrder,
    polys: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

/// Reduced Gröbner basis of the ideal generated by `gens`, sorted descending by leading term.
///
/// Fails with `BudgetExceeded` once more than `budget` S-pairs have been reduced.
pub fn groebner(gens: &[Polynomial], order: TermOrder, budget: usize) -> Result<Vec<Polynomial>> {
    let n = match gens.first() {
        Some(g) => g.width(),
        None => return Ok(Vec::new()),
    };
    let mut pending: Vec<(u32, usize, Polynomial)> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_order(order))
        .enumerate()
        .map(|(k, g)| (g.degree().unwrap_or(0), k, g))
        .collect();
    if pending.iter().any(|(_, _, g)| g.is_constant()) {
        return Ok(vec![Polynomial::one(n, order)]);
    }
    // popped from the back: lowest degree first, input order within a degree
    pending.sort_by_key(|p| std::cmp::Reverse((p.0, p.1)));

    let mut engine = Engine { order, polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    let mut reduced = 0usize;
    loop {
        let next_gen = pending.last().map(|g| g.0);
        let next_pair = engine.pairs.last().map(|p| p.lcm.degree());
        let h = match (next_gen, next_pair) {
            (None, None) => break,
            (Some(dg), Some(dp)) if dg <= dp => {
                let (_, _, g) = pending.pop().unwrap();
                normal_form(&g, &engine.basis())
            }
            (Some(_), None) => {
                let (_, _, g) = pending.pop().unwrap();
                normal_form(&g, &engine.basis())
            }
            _ => {
                reduced += 1;
                if reduced > budget {
                    return Err(Error::BudgetExceeded { what: "S-pair", limit: budget });
                }
                let p = engine.pairs.pop().unwrap();
                let s = s_polynomial(&engine.polys[p.i], &engine.polys[p.j]);
                normal_form(&s, &engine.basis())
            }
        };
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![Polynomial::one(n, order)]);
        }
        engine.insert(h.monic());
    }
    let basis = engine.finish();
    debug_assert!(is_groebner(&basis), "S-pair self-check failed");
    Ok(basis)
}

impl Engine {
    fn basis(&self) -> Vec<Polynomial> {
        self.polys.iter().zip(&self.active).filter(|(_, a)| **a).map(|(p, _)| p.clone()).collect()
    }

    fn lead(&self, k: usize) -> &Exponent {
        self.polys[k].leading_exponent().expect("nonzero basis element")
    }

    // Gebauer–Möller update for a new element
    fn insert(&mut self, h: Polynomial) {
        let k = self.polys.len();
        let lh = h.leading_exponent().unwrap().clone();
        self.polys.push(h);
        self.active.push(true);

        let mut fresh: Vec<(usize, Exponent)> =
            (0..k).filter(|&g| self.active[g]).map(|g| (g, lh.lcm(self.lead(g)))).collect();
        let mut kept: Vec<(usize, Exponent)> = Vec::new();
        while let Some((g, l)) = (!fresh.is_empty()).then(|| fresh.remove(0)) {
            let coprime = lh.is_coprime(self.lead(g));
            let dominated = fresh.iter().chain(kept.iter()).any(|(_, m)| m.divides(&l));
            if coprime || !dominated {
                kept.push((g, l));
            }
        }
        let new_pairs: Vec<(usize, Exponent)> =
            kept.into_iter().filter(|(g, _)| !lh.is_coprime(self.lead(*g))).collect();

        let old = std::mem::take(&mut self.pairs);
        let mut pairs: Vec<Pair> = old
            .into_iter()
            .filter(|p| {
                !lh.divides(&p.lcm) || lh.lcm(self.lead(p.i)) == p.lcm || lh.lcm(self.lead(p.j)) == p.lcm
            })
            .collect();
        pairs.extend(new_pairs.into_iter().map(|(g, lcm)| Pair { i: g, j: k, lcm }));
        // descending key; the next pair is popped from the back
        pairs.sort_by(|a, b| pair_key(b, a));
        self.pairs = pairs;

        for g in 0..k {
            if self.active[g] && lh.divides(self.lead(g)) {
                self.active[g] = false;
            }
        }
    }

    fn finish(self) -> Vec<Polynomial> {
        let order = self.order;
        let basis = self.basis();
        let mut out: Vec<Polynomial> = Vec::with_capacity(basis.len());
        for (k, g) in basis.iter().enumerate() {
            let others: Vec<Polynomial> =
                basis.iter().enumerate().filter(|(m, _)| *m != k).map(|(_, p)| p.clone()).collect();
            let r = normal_form(g, &others);
            debug_assert!(r.leading_coeff().is_some_and(|c| c.is_one()));
            out.push(r);
        }
        sort_descending(&mut out, order);
        out
    }
}

fn pair_key(a: &Pair, b: &Pair) -> Ordering {
    a.lcm
        .degree()
        .cmp(&b.lcm.degree())
        .then_with(|| TermOrder::Rlex.cmp(&a.lcm, &b.lcm))
        .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
}

/// Sorts polynomials descending by leading term in `order`, ties by the full term list.
pub fn sort_descending(polys: &mut [Polynomial], order: TermOrder) {
    polys.sort_by(|f, g| compare_polynomials(order, g, f));
}

pub(crate) fn compare_polynomials(order: TermOrder, f: &Polynomial, g: &Polynomial) -> Ordering {
    for (a, b) in f.terms().iter().zip(g.terms()) {
        let c = order.cmp(&a.0, &b.0).then_with(|| a.1.cmp(&b.1));
        if c != Ordering::Equal {
            return c;
        }
    }
    f.len().cmp(&g.len())
}
