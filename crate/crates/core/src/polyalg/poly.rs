use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::{Exponent, TermOrder};

pub type Coeff = BigRational;
pub type Term = (Exponent, Coeff);

/// A polynomial over `Q` in `n` variables, terms sorted descending in its term order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    n: usize,
    order: TermOrder,
    terms: Vec<Term>,
}

pub fn int(v: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(v))
}

impl Polynomial {
    pub fn zero(n: usize, order: TermOrder) -> Polynomial {
        Polynomial { n, order, terms: Vec::new() }
    }

    pub fn constant(n: usize, order: TermOrder, c: Coeff) -> Polynomial {
        Polynomial::monomial(Exponent::zero(n), c, order)
    }

    pub fn one(n: usize, order: TermOrder) -> Polynomial {
        Polynomial::constant(n, order, Coeff::one())
    }

    pub fn monomial(exp: Exponent, c: Coeff, order: TermOrder) -> Polynomial {
        let n = exp.width();
        let terms = if c.is_zero() { Vec::new() } else { vec![(exp, c)] };
        Polynomial { n, order, terms }
    }

    /// The variable `X_{i+1}`.
    pub fn var(n: usize, i: usize, order: TermOrder) -> Polynomial {
        Polynomial::monomial(Exponent::unit(n, i), Coeff::one(), order)
    }

    /// `X^a - X^b`.
    pub fn binomial(a: Exponent, b: Exponent, order: TermOrder) -> Polynomial {
        let n = a.width();
        Polynomial::from_terms(n, order, [(a, Coeff::one()), (b, -Coeff::one())])
    }

    /// Collects terms, adding coefficients of equal exponents and dropping zeros.
    pub fn from_terms(n: usize, order: TermOrder, terms: impl IntoIterator<Item = Term>) -> Polynomial {
        let mut acc: HashMap<Exponent, Coeff> = HashMap::new();
        for (e, c) in terms {
            assert_eq!(e.width(), n, "term width differs from ring width");
            *acc.entry(e).or_insert_with(Coeff::zero) += c;
        }
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { n, order, terms }
    }

    pub(crate) fn from_sorted(n: usize, order: TermOrder, terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { n, order, terms }
    }

    pub fn width(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_zero()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_exponent(&self) -> Option<&Exponent> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.1)
    }

    /// Largest total degree of a term.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.iter().map(|t| t.0.degree());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn coefficient(&self, e: &Exponent) -> Coeff {
        self.terms.iter().find(|t| t.0 == *e).map(|t| t.1.clone()).unwrap_or_else(Coeff::zero)
    }

    /// Same polynomial, terms re-sorted for `order`.
    pub fn with_order(&self, order: TermOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { n: self.n, order, terms }
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n, self.order);
        }
        Polynomial { n: self.n, order: self.order, terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect() }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { n: self.n, order: self.order, terms: self.terms.iter().map(|(e, a)| (e.clone(), -a)).collect() }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.combine(other, &Coeff::one(), None)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.combine(other, &-Coeff::one(), None)
    }

    /// `self - c * X^m * g`.
    pub fn sub_mul_term(&self, c: &Coeff, m: &Exponent, g: &Polynomial) -> Polynomial {
        self.combine(g, &-c, Some(m))
    }

    pub fn mul_term(&self, c: &Coeff, m: &Exponent) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n, self.order);
        }
        Polynomial {
            n: self.n,
            order: self.order,
            terms: self.terms.iter().map(|(e, a)| (e.mul(m), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Exponent, Coeff> = HashMap::with_capacity(self.len() * other.len());
        for (e, a) in &self.terms {
            for (f, b) in &other.terms {
                *acc.entry(e.mul(f)).or_insert_with(Coeff::zero) += a * b;
            }
        }
        Polynomial::from_terms(self.n, self.order, acc)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(self.n, self.order);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    // merge self + s * X^m * other (other's order must match)
    fn combine(&self, other: &Polynomial, s: &Coeff, m: Option<&Exponent>) -> Polynomial {
        assert_eq!(self.n, other.n, "width mismatch");
        let order = self.order;
        let other_terms: Vec<Term> = if other.order == order {
            other.terms.clone()
        } else {
            other.with_order(order).terms
        };
        let mut out = Vec::with_capacity(self.terms.len() + other_terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other_terms.into_iter().map(|(e, c)| match m {
            Some(m) => (e.mul(m), c * s),
            None => (e, c * s),
        });
        let mut next_b = b.next();
        loop {
            match (a.peek(), &next_b) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    out.push(next_b.take().unwrap());
                    next_b = b.next();
                }
                (Some(ta), Some(tb)) => match order.cmp(&ta.0, &tb.0) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => {
                        out.push(next_b.take().unwrap());
                        next_b = b.next();
                    }
                    Ordering::Equal => {
                        let (e, c) = a.next().unwrap();
                        let (_, d) = next_b.take().unwrap();
                        let sum = c + d;
                        if !sum.is_zero() {
                            out.push((e.clone(), sum));
                        }
                        next_b = b.next();
                    }
                },
            }
        }
        Polynomial { n: self.n, order, terms: out }
    }

    /// Largest `k` with `X_j^k` dividing every term.
    pub fn var_power_dividing(&self, j: usize) -> u32 {
        self.terms.iter().map(|t| t.0.get(j)).min().unwrap_or(0)
    }

    /// Divides every term by `X_j^k`; the caller guarantees divisibility.
    pub fn divide_by_var_power(&self, j: usize, k: u32) -> Polynomial {
        let mut d = vec![0; self.n];
        d[j] = k;
        let d = Exponent::new(d);
        self.map_exponents(self.n, |e| e.checked_div(&d).expect("term not divisible"))
    }

    /// Applies `f` to every exponent and re-sorts (the map must be injective).
    pub fn map_exponents(&self, n: usize, f: impl Fn(&Exponent) -> Exponent) -> Polynomial {
        let mut terms: Vec<Term> = self.terms.iter().map(|(e, c)| (f(e), c.clone())).collect();
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        Polynomial { n, order: self.order, terms }
    }

    /// Same polynomial viewed in `K[X_1..X_m]`, `m >= n`.
    pub fn extend(&self, m: usize) -> Polynomial {
        self.map_exponents(m, |e| e.extend(m))
    }

    /// Whether only `X_1..X_i` occur.
    pub fn lies_in_first(&self, i: usize) -> bool {
        self.terms.iter().all(|t| t.0.lies_in_first(i))
    }

    /// Restriction to the first `i` variables (all other exponents must vanish).
    pub fn truncate(&self, i: usize) -> Polynomial {
        debug_assert!(self.lies_in_first(i));
        self.map_exponents(i, |e| e.truncate(i))
    }

    /// Renames variables: `X_{k}` becomes `X_{perm[k]}` (0-based).
    pub fn permute(&self, perm: &[usize]) -> Polynomial {
        self.map_exponents(self.n, |e| {
            let mut v = vec![0; self.n];
            for (k, &p) in perm.iter().enumerate() {
                v[p] = e.get(k);
            }
            Exponent::new(v)
        })
    }

    /// Substitutes `X_j -> images[j]` for every variable.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.n);
        let out_n = images.first().map_or(self.n, |p| p.n);
        let max_deg: Vec<u32> =
            (0..self.n).map(|j| self.terms.iter().map(|t| t.0.get(j)).max().unwrap_or(0)).collect();
        let powers: Vec<Vec<Polynomial>> = images
            .iter()
            .zip(&max_deg)
            .map(|(img, &k)| {
                let mut v = vec![Polynomial::one(out_n, self.order)];
                for _ in 0..k {
                    let next = v.last().unwrap().mul(img);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc: HashMap<Exponent, Coeff> = HashMap::new();
        for (e, c) in &self.terms {
            let mut prod = Polynomial::constant(out_n, self.order, c.clone());
            for j in 0..self.n {
                let k = e.get(j) as usize;
                if k > 0 {
                    prod = prod.mul(&powers[j][k]);
                }
            }
            for (f, d) in prod.terms {
                *acc.entry(f).or_insert_with(Coeff::zero) += d;
            }
        }
        Polynomial::from_terms(out_n, self.order, acc)
    }
}
