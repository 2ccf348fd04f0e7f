use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::One;

use super::groebner::{groebner, normal_form, sort_descending};
use super::poly::{Coeff, Polynomial};
use crate::combinat::{Exponent, TermOrder};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::monomial::{HilbertData, MonomialIdeal};

/// An ideal of `K[X_1..X_n]` given by generators, with reduced Gröbner bases
/// cached per term order.
pub struct Ideal {
    n: usize,
    generators: Vec<Polynomial>,
    cache: RwLock<HashMap<TermOrder, Arc<Vec<Polynomial>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = self.cache.read().expect("cache lock").clone();
        Ideal { n: self.n, generators: self.generators.clone(), cache: RwLock::new(cache) }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal").field("n", &self.n).field("generators", &self.generators).finish()
    }
}

impl Ideal {
    /// Zero generators are dropped; the rest are kept in the given order.
    pub fn new(n: usize, generators: impl IntoIterator<Item = Polynomial>) -> Ideal {
        let generators: Vec<Polynomial> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        assert!(generators.iter().all(|g| g.width() == n), "generator width differs from ring width");
        Ideal { n, generators, cache: RwLock::new(HashMap::new()) }
    }

    pub fn zero(n: usize) -> Ideal {
        Ideal::new(n, [])
    }

    pub fn unit(n: usize) -> Ideal {
        Ideal::new(n, [Polynomial::one(n, TermOrder::Rlex)])
    }

    pub fn from_monomial(m: &MonomialIdeal) -> Ideal {
        let gens = m.generators().iter().map(|e| Polynomial::monomial(e.clone(), Coeff::one(), TermOrder::Rlex));
        Ideal::new(m.width(), gens)
    }

    /// An ideal whose generators already form the reduced basis for `order`.
    pub(crate) fn from_reduced_basis(n: usize, basis: Vec<Polynomial>, order: TermOrder) -> Ideal {
        let ideal = Ideal::new(n, basis.clone());
        ideal.cache.write().expect("cache lock").insert(order, Arc::new(basis));
        ideal
    }

    pub fn width(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    pub fn max_degree(&self) -> u32 {
        self.generators.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
    }

    /// Reduced Gröbner basis for `order`, computed once and cached.
    pub fn groebner(&self, order: TermOrder, cfg: &Config) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(gb) = self.cache.read().expect("cache lock").get(&order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(groebner(&self.generators, order, cfg.spair_budget)?);
        let mut cache = self.cache.write().expect("cache lock");
        Ok(cache.entry(order).or_insert(gb).clone())
    }

    pub fn initial_ideal(&self, order: TermOrder, cfg: &Config) -> Result<MonomialIdeal> {
        let gb = self.groebner(order, cfg)?;
        Ok(MonomialIdeal::new(self.n, gb.iter().map(|g| g.leading_exponent().unwrap().clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self, cfg: &Config) -> Result<bool> {
        Ok(self.groebner(TermOrder::Rlex, cfg)?.iter().any(Polynomial::is_constant))
    }

    /// Normal form of `f` with respect to the reduced rlex basis.
    pub fn reduce(&self, f: &Polynomial, cfg: &Config) -> Result<Polynomial> {
        let gb = self.groebner(TermOrder::Rlex, cfg)?;
        Ok(normal_form(&f.with_order(TermOrder::Rlex), &gb))
    }

    pub fn contains(&self, f: &Polynomial, cfg: &Config) -> Result<bool> {
        Ok(self.reduce(f, cfg)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal, cfg: &Config) -> Result<bool> {
        check_width(self.n, other.n)?;
        for g in &other.generators {
            if !self.contains(g, cfg)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals, decided by reduced rlex bases.
    pub fn same_ideal(&self, other: &Ideal, cfg: &Config) -> Result<bool> {
        check_width(self.n, other.n)?;
        Ok(self.groebner(TermOrder::Rlex, cfg)? == other.groebner(TermOrder::Rlex, cfg)?)
    }

    /// Hilbert function of the ideal, read off its rlex initial ideal.
    pub fn hilbert_function(&self, up_to: u32, cfg: &Config) -> Result<HilbertData> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        Ok(self.initial_ideal(TermOrder::Rlex, cfg)?.hilbert_function(up_to))
    }

    pub fn extend(&self, m: usize) -> Ideal {
        Ideal::new(m, self.generators.iter().map(|g| g.extend(m)))
    }

    pub fn permute(&self, perm: &[usize]) -> Ideal {
        Ideal::new(self.n, self.generators.iter().map(|g| g.permute(perm)))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        check_width(self.n, other.n)?;
        Ok(Ideal::new(self.n, self.generators.iter().chain(&other.generators).cloned()))
    }

    /// `I ∩ J`, by eliminating `t` from `t·I + (1−t)·J`.
    pub fn intersection(&self, other: &Ideal, cfg: &Config) -> Result<Ideal> {
        check_width(self.n, other.n)?;
        let n = self.n;
        let order = TermOrder::Elimination(1);
        let lift = |g: &Polynomial| g.with_order(order).map_exponents(n + 1, |e| Exponent::zero(1).concat(e));
        let t = Polynomial::var(n + 1, 0, order);
        let one = Polynomial::one(n + 1, order);
        let gens: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|g| lift(g).mul(&t))
            .chain(other.generators.iter().map(|g| lift(g).mul(&one.sub(&t))))
            .collect();
        let kept = eliminate(&gens, 1, order, cfg)?;
        Ok(Ideal::new(n, kept))
    }

    /// `(I : X_j)`, through `I ∩ (X_j)`.
    pub fn colon_var(&self, j: usize, cfg: &Config) -> Result<Ideal> {
        let xj = Ideal::new(self.n, [Polynomial::var(self.n, j, TermOrder::Rlex)]);
        let meet = self.intersection(&xj, cfg)?;
        let gens = meet.groebner(TermOrder::Rlex, cfg)?;
        Ok(Ideal::new(self.n, gens.iter().map(|g| g.divide_by_var_power(j, 1))))
    }

    /// `(I : X_j^∞)`, iterating single colons until the ideal stops growing.
    pub fn colon_var_power(&self, j: usize, cfg: &Config) -> Result<Ideal> {
        let mut current = self.clone();
        loop {
            let next = current.colon_var(j, cfg)?;
            if next.same_ideal(&current, cfg)? {
                return canonical(next, cfg);
            }
            current = next;
        }
    }

    /// `(I : X_n^∞)` for homogeneous `I`: divide the reduced rlex basis by
    /// the largest powers of `X_n`.
    pub fn colon_last_var_power(&self, cfg: &Config) -> Result<Ideal> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let last = self.n - 1;
        let gb = self.groebner(TermOrder::Rlex, cfg)?;
        let gens: Vec<Polynomial> = gb.iter().map(|g| g.divide_by_var_power(last, g.var_power_dividing(last))).collect();
        canonical(Ideal::new(self.n, gens), cfg)
    }

    /// `I ∩ K[X_1..X_j]` as an ideal of `K[X_1..X_j]`, by eliminating the
    /// trailing variables.
    pub fn contract(&self, j: usize, cfg: &Config) -> Result<Ideal> {
        let n = self.n;
        assert!(j <= n, "contraction beyond ring width");
        let k = n - j;
        if k == 0 {
            return Ok(self.clone());
        }
        // trailing variables move to the front
        let perm: Vec<usize> = (0..n).map(|v| if v < j { k + v } else { v - j }).collect();
        let order = TermOrder::Elimination(k);
        let gens: Vec<Polynomial> = self.generators.iter().map(|g| g.permute(&perm).with_order(order)).collect();
        Ok(Ideal::new(j, eliminate(&gens, k, order, cfg)?))
    }

    /// Reduced rlex basis, sorted descending: the canonical presentation.
    pub fn canonical_generators(&self, cfg: &Config) -> Result<Vec<Polynomial>> {
        Ok(self.groebner(TermOrder::Rlex, cfg)?.as_ref().clone())
    }
}

fn canonical(ideal: Ideal, cfg: &Config) -> Result<Ideal> {
    let gb = ideal.canonical_generators(cfg)?;
    Ok(Ideal::from_reduced_basis(ideal.n, gb, TermOrder::Rlex))
}

fn check_width(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::WidthMismatch { left, right })
    }
}

/// Elements of the basis free of the first `k` variables, with those
/// variables dropped and terms re-sorted in rlex.
pub(crate) fn eliminate(gens: &[Polynomial], k: usize, order: TermOrder, cfg: &Config) -> Result<Vec<Polynomial>> {
    let gb = groebner(gens, order, cfg.spair_budget)?;
    let n = gb.first().map_or(k, Polynomial::width) - k;
    let mut kept: Vec<Polynomial> = gb
        .iter()
        .filter(|g| g.terms().iter().all(|(e, _)| e.entries()[..k].iter().all(|&a| a == 0)))
        .map(|g| g.with_order(TermOrder::Rlex).map_exponents(n, |e| e.split_at(k).1))
        .collect();
    sort_descending(&mut kept, TermOrder::Rlex);
    Ok(kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::text::{default_names, parse_polynomial};

    fn ideal(n: usize, gens: &[&str]) -> Ideal {
        let names = default_names(n);
        Ideal::new(n, gens.iter().map(|g| parse_polynomial(g, &names, TermOrder::Rlex).unwrap()))
    }

    fn mono(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| Exponent::new(g.iter().copied())))
    }

    #[test]
    fn initial_ideals_of_example_c() {
        let cfg = Config::default();
        let c = ideal(4, &["y^2 - x*z", "x^2", "x*y", "x*z^2"]);
        let b = mono(4, &[&[2, 0, 0, 0], &[1, 1, 0, 0], &[0, 2, 0, 0], &[1, 0, 2, 0]]);
        let lf = mono(4, &[&[2, 0, 0, 0], &[1, 1, 0, 0], &[1, 0, 1, 0], &[0, 3, 0, 0], &[0, 2, 1, 0]]);
        assert_eq!(c.initial_ideal(TermOrder::Rlex, &cfg).unwrap(), b);
        assert_eq!(c.initial_ideal(TermOrder::Hlex, &cfg).unwrap(), lf);
        assert_eq!(c.hilbert_function(10, &cfg).unwrap().values(), b.hilbert_function(10).values());
    }

    #[test]
    fn intersections() {
        let cfg = Config::default();
        let x = ideal(2, &["x"]);
        let y = ideal(2, &["y"]);
        let xy = x.intersection(&y, &cfg).unwrap();
        assert!(xy.same_ideal(&ideal(2, &["x*y"]), &cfg).unwrap());
        let c = ideal(4, &["y^2 - x*z", "x^2", "x*y", "x*z^2"]);
        assert!(c.intersection(&c, &cfg).unwrap().same_ideal(&c, &cfg).unwrap());

        let a = mono(3, &[&[2, 0, 0], &[0, 1, 1]]);
        let b = mono(3, &[&[1, 1, 0], &[0, 0, 2]]);
        let meet = Ideal::from_monomial(&a).intersection(&Ideal::from_monomial(&b), &cfg).unwrap();
        assert_eq!(meet.initial_ideal(TermOrder::Rlex, &cfg).unwrap(), a.intersection(&b));
    }

    #[test]
    fn colon_matches_monomial_rule_and_fast_path() {
        let cfg = Config::default();
        let m = mono(3, &[&[2, 0, 1], &[0, 1, 3], &[1, 1, 1]]);
        for j in 0..3 {
            let got = Ideal::from_monomial(&m).colon_var_power(j, &cfg).unwrap();
            assert_eq!(got.initial_ideal(TermOrder::Rlex, &cfg).unwrap(), m.colon_var_power(j));
        }
        let f = ideal(4, &["x^3", "x^2*y", "x*y^2", "y^3", "y^2*t - x*z*t", "x^2*t", "x*z*t"]);
        let slow = f.colon_var_power(3, &cfg).unwrap();
        let fast = f.colon_last_var_power(&cfg).unwrap();
        assert!(slow.same_ideal(&fast, &cfg).unwrap());
    }

    #[test]
    fn contraction() {
        let cfg = Config::default();
        let i = ideal(3, &["x - y", "y - z"]);
        let c = i.contract(2, &cfg).unwrap();
        assert!(c.same_ideal(&ideal(2, &["x - y"]), &cfg).unwrap());
        let c1 = i.contract(1, &cfg).unwrap();
        assert!(c1.is_zero() || c1.groebner(TermOrder::Rlex, &cfg).unwrap().is_empty());
    }

    #[test]
    fn membership() {
        let cfg = Config::default();
        let c = ideal(4, &["y^2 - x*z", "x^2", "x*y", "x*z^2"]);
        let names = default_names(4);
        let inside = parse_polynomial("y^3 - x*y*z + x^2*t", &names, TermOrder::Rlex).unwrap();
        let outside = parse_polynomial("x*z*t", &names, TermOrder::Rlex).unwrap();
        assert!(c.contains(&inside, &cfg).unwrap());
        assert!(!c.contains(&outside, &cfg).unwrap());
        assert!(!c.is_unit(&cfg).unwrap());
    }
}
