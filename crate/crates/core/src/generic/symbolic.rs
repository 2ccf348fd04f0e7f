use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::combinat::{enumerate_u, Exponent, SignedExponent, TermOrder, UpperTriangularMatrix};
use crate::error::{Error, Result};
use crate::polyalg::{Coeff, Polynomial};

/// Number of indeterminates `Y_ij`, `1 <= i <= j <= n`.
pub fn y_count(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Position of `Y_{i+1,j+1}` (0-based `i <= j`), row-major.
pub fn y_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < n);
    i * (2 * n + 1 - i) / 2 + (j - i)
}

/// An integer polynomial in the indeterminates `Y_ij`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymbolicPolynomial {
    n: usize,
    poly: Polynomial,
}

impl SymbolicPolynomial {
    pub fn zero(n: usize) -> SymbolicPolynomial {
        SymbolicPolynomial { n, poly: Polynomial::zero(y_count(n), TermOrder::Rlex) }
    }

    pub fn from_polynomial(n: usize, poly: Polynomial) -> SymbolicPolynomial {
        assert_eq!(poly.width(), y_count(n));
        SymbolicPolynomial { n, poly: poly.with_order(TermOrder::Rlex) }
    }

    /// `c · Y^M`.
    pub fn matrix_term(m: &UpperTriangularMatrix, c: Coeff) -> SymbolicPolynomial {
        let n = m.size();
        SymbolicPolynomial { n, poly: Polynomial::monomial(y_exponent(m), c, TermOrder::Rlex) }
    }

    /// `Y^a` placed on the diagonal: `Π Y_ii^{a_i}`.
    pub fn diagonal(a: &Exponent) -> SymbolicPolynomial {
        SymbolicPolynomial::matrix_term(&UpperTriangularMatrix::diagonal(a), Coeff::one())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn add(&self, other: &SymbolicPolynomial) -> SymbolicPolynomial {
        SymbolicPolynomial { n: self.n, poly: self.poly.add(&other.poly) }
    }

    pub fn mul(&self, other: &SymbolicPolynomial) -> SymbolicPolynomial {
        SymbolicPolynomial { n: self.n, poly: self.poly.mul(&other.poly) }
    }

    pub fn scale(&self, c: &Coeff) -> SymbolicPolynomial {
        SymbolicPolynomial { n: self.n, poly: self.poly.scale(c) }
    }

    /// `r` with `self = r · other`, when `other` is nonzero and the two are proportional.
    pub fn ratio_to(&self, other: &SymbolicPolynomial) -> Option<Coeff> {
        let lc = other.poly.leading_coeff()?;
        let r = self.poly.coefficient(other.poly.leading_exponent()?) / lc;
        (other.scale(&r) == *self).then_some(r)
    }
}

fn y_exponent(m: &UpperTriangularMatrix) -> Exponent {
    let n = m.size();
    let mut v = vec![0u32; y_count(n)];
    for (i, j, x) in m.upper_entries() {
        v[y_index(n, i, j)] = x;
    }
    Exponent::new(v)
}

impl fmt::Display for SymbolicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut names = vec![String::new(); y_count(self.n)];
        for i in 0..self.n {
            for j in i..self.n {
                names[y_index(self.n, i, j)] = format!("Y{}{}", i + 1, j + 1);
            }
        }
        f.write_str(&crate::polyalg::text::format_polynomial(&self.poly, &names))
    }
}

impl fmt::Debug for SymbolicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `φ(X^b)` in `T[X]`: the `Y` block first, then `X_1..X_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiExpansion {
    n: usize,
    poly: Polynomial,
}

impl PhiExpansion {
    pub fn polynomial(&self) -> &Polynomial {
        &self.poly
    }

    /// The coefficient of `X^a`, an element of `T`.
    pub fn coefficient(&self, a: &Exponent) -> SymbolicPolynomial {
        let k = y_count(self.n);
        let terms = self
            .poly
            .terms()
            .iter()
            .filter_map(|(e, c)| {
                let (y, x) = e.split_at(k);
                (x == *a).then(|| (y, c.clone()))
            })
            .collect::<Vec<_>>();
        SymbolicPolynomial { n: self.n, poly: Polynomial::from_terms(k, TermOrder::Rlex, terms) }
    }
}

/// Expands `Π_j (Σ_{i<=j} Y_ij X_i)^{b_j}`; fails once an intermediate product
/// has more than `budget` terms.
pub fn phi_expand(b: &Exponent, budget: usize) -> Result<PhiExpansion> {
    let n = b.width();
    let k = y_count(n);
    let width = k + n;
    let mut acc = Polynomial::one(width, TermOrder::Rlex);
    for j in 0..n {
        let image = Polynomial::from_terms(
            width,
            TermOrder::Rlex,
            (0..=j).map(|i| {
                let mut v = vec![0u32; width];
                v[y_index(n, i, j)] = 1;
                v[k + i] = 1;
                (Exponent::new(v), Coeff::one())
            }),
        );
        for _ in 0..b.get(j) {
            acc = acc.mul(&image);
            if acc.len() > budget {
                return Err(Error::BudgetExceeded { what: "expansion term", limit: budget });
            }
        }
    }
    Ok(PhiExpansion { n, poly: acc })
}

/// `μ_M`: the product over columns of the multinomial coefficients.
pub fn mu(m: &UpperTriangularMatrix) -> BigUint {
    let n = m.size();
    let mut out = BigUint::one();
    for j in 0..n {
        let col: Vec<u32> = (0..=j).map(|i| m.get(i, j)).collect();
        out *= multinomial(&col);
    }
    out
}

fn multinomial(parts: &[u32]) -> BigUint {
    let total: u32 = parts.iter().sum();
    let mut out = factorial(total);
    for &p in parts {
        out /= factorial(p);
    }
    out
}

fn factorial(k: u32) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * i)
}

/// `α^b_a = Σ_{M ∈ U(a,b)} μ_M Y^M`, the coefficient of `X^a` in `φ(X^b)`.
pub fn alpha(a: &Exponent, b: &Exponent, budget: usize) -> Result<SymbolicPolynomial> {
    if a.width() != b.width() {
        return Err(Error::WidthMismatch { left: a.width(), right: b.width() });
    }
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch { left: a.degree(), right: b.degree() });
    }
    let n = a.width();
    let mut out = SymbolicPolynomial::zero(n);
    for m in enumerate_u(a, b, budget)? {
        out = out.add(&SymbolicPolynomial::matrix_term(&m, Coeff::from_integer(mu(&m).into())));
    }
    Ok(out)
}

fn shifted(a: &Exponent, rho: &SignedExponent, what: &str) -> Result<Exponent> {
    a.shift(rho).ok_or_else(|| Error::HypothesisViolated(format!("{what}+rho has a negative entry")))
}

/// `p^ρ_{b,c} = Σ_{M ∈ U(b,c)} μ_M Y^{M−ρ⁻}`.
///
/// Requires `b+ρ, c+ρ >= 0` and `b_i = c_i` for `i < m(ρ)`.
pub fn p_rho(b: &Exponent, c: &Exponent, rho: &SignedExponent, budget: usize) -> Result<SymbolicPolynomial> {
    shifted(b, rho, "b")?;
    shifted(c, rho, "c")?;
    let m = rho.m();
    if let Some(i) = (0..m - 1).find(|&i| b.get(i) != c.get(i)) {
        return Err(Error::HypothesisViolated(format!(
            "b and c differ at coordinate {} < m(rho) = {m}",
            i + 1
        )));
    }
    p_rho_forced(b, c, rho, budget)
}

/// `p^ρ_{b,c}` without the prefix condition; only `M_jj >= ρ⁻_j` is required.
pub fn p_rho_forced(b: &Exponent, c: &Exponent, rho: &SignedExponent, budget: usize) -> Result<SymbolicPolynomial> {
    let n = b.width();
    if rho.width() != n {
        return Err(Error::WidthMismatch { left: n, right: rho.width() });
    }
    let neg = rho.minus();
    let mut out = SymbolicPolynomial::zero(n);
    for m in enumerate_u(b, c, budget)? {
        let mut y = y_exponent(&m).entries().to_vec();
        for j in 0..n {
            let slot = &mut y[y_index(n, j, j)];
            *slot = slot.checked_sub(neg.get(j)).ok_or_else(|| {
                Error::HypothesisViolated(format!("M_{0}{0} < rho^-_{0} for M = {m}", j + 1))
            })?;
        }
        let term = Polynomial::monomial(Exponent::new(y), Coeff::from_integer(mu(&m).into()), TermOrder::Rlex);
        out = out.add(&SymbolicPolynomial { n, poly: term });
    }
    Ok(out)
}

/// Both sides of `α^c_b = p·Y^{ρ⁻}` and `α^{c+ρ}_{b+ρ} = p·Y^{ρ⁺}`, computed independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaShiftReport {
    pub lhs_low: SymbolicPolynomial,
    pub rhs_low: SymbolicPolynomial,
    pub lhs_high: SymbolicPolynomial,
    pub rhs_high: SymbolicPolynomial,
    pub equal_low: bool,
    pub equal_high: bool,
}

impl AlphaShiftReport {
    /// `r` with `lhs_high = r · rhs_high`, if proportional.
    pub fn high_ratio(&self) -> Option<Coeff> {
        self.lhs_high.ratio_to(&self.rhs_high)
    }
}

pub fn verify_alpha_shift(b: &Exponent, c: &Exponent, rho: &SignedExponent, budget: usize) -> Result<AlphaShiftReport> {
    let p = p_rho(b, c, rho, budget)?;
    shift_report(b, c, rho, p, budget)
}

/// As [`verify_alpha_shift`], with `p` from [`p_rho_forced`].
pub fn verify_alpha_shift_forced(
    b: &Exponent,
    c: &Exponent,
    rho: &SignedExponent,
    budget: usize,
) -> Result<AlphaShiftReport> {
    let p = p_rho_forced(b, c, rho, budget)?;
    shift_report(b, c, rho, p, budget)
}

fn shift_report(
    b: &Exponent,
    c: &Exponent,
    rho: &SignedExponent,
    p: SymbolicPolynomial,
    budget: usize,
) -> Result<AlphaShiftReport> {
    let lhs_low = alpha(b, c, budget)?;
    let lhs_high = alpha(&shifted(b, rho, "b")?, &shifted(c, rho, "c")?, budget)?;
    let rhs_low = p.mul(&SymbolicPolynomial::diagonal(&rho.minus()));
    let rhs_high = p.mul(&SymbolicPolynomial::diagonal(&rho.plus()));
    Ok(AlphaShiftReport {
        equal_low: lhs_low == rhs_low,
        equal_high: lhs_high == rhs_high,
        lhs_low,
        rhs_low,
        lhs_high,
        rhs_high,
    })
}

/// Whether `M ∈ U(b,c) ⟺ M+ρ ∈ U(b+ρ,c+ρ)` over all of `U(b,c)` and `U(b+ρ,c+ρ)`.
pub fn matrices_shift_bijectively(b: &Exponent, c: &Exponent, rho: &SignedExponent, budget: usize) -> Result<bool> {
    let low = enumerate_u(b, c, budget)?;
    let high = enumerate_u(&shifted(b, rho, "b")?, &shifted(c, rho, "c")?, budget)?;
    let moved: Option<Vec<UpperTriangularMatrix>> = low.iter().map(|m| m.add_rho(rho)).collect();
    let Some(mut moved) = moved else { return Ok(false) };
    let mut high = high;
    moved.sort_by_key(|m| m.to_string());
    high.sort_by_key(|m| m.to_string());
    Ok(moved == high)
}
