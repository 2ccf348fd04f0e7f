use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Number of extra degrees an interpolated polynomial must predict.
pub const VERIFICATION_WINDOW: u32 = 3;
const MAX_RETRIES: usize = 64;

/// Values of an ideal's Hilbert function on `0..=bound`, optionally with the
/// polynomial it agrees with from `onset` on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    n: usize,
    values: Vec<u64>,
    polynomial: Option<(HilbertPolynomial, u32)>,
}

impl HilbertData {
    pub fn new(n: usize, values: Vec<u64>) -> HilbertData {
        HilbertData { n, values, polynomial: None }
    }

    pub fn width(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn bound(&self) -> u32 {
        self.values.len() as u32 - 1
    }

    pub fn get(&self, d: u32) -> Option<u64> {
        self.values.get(d as usize).copied()
    }

    /// Quotient counts `dim (S/I)_d`.
    pub fn quotient_values(&self) -> Vec<u64> {
        self.values
            .iter()
            .enumerate()
            .map(|(d, v)| crate::combinat::count_of_degree(self.n, d as u32) - v)
            .collect()
    }

    pub fn polynomial(&self) -> Option<&HilbertPolynomial> {
        self.polynomial.as_ref().map(|(p, _)| p)
    }

    /// First degree from which the stored values agree with the polynomial.
    pub fn onset(&self) -> Option<u32> {
        self.polynomial.as_ref().map(|(_, o)| *o)
    }

    pub fn with_polynomial(mut self, p: HilbertPolynomial) -> HilbertData {
        let mut onset = self.values.len() as u32;
        while onset > 0 && p.eval_u64(onset - 1) == Some(self.values[onset as usize - 1]) {
            onset -= 1;
        }
        self.polynomial = Some((p, onset));
        self
    }

    /// `d: value` lines followed by an optional `poly:` line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (d, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{d}: {v}\n"));
        }
        if let Some((p, onset)) = &self.polynomial {
            out.push_str(&format!("poly: {p}\n"));
            out.push_str(&format!("onset: {onset}\n"));
        }
        out
    }
}

/// A rational polynomial in `t`, coefficients in ascending powers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HilbertPolynomial {
    coeffs: Vec<BigRational>,
}

impl HilbertPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> HilbertPolynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        HilbertPolynomial { coeffs }
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, t: i64) -> BigRational {
        let t = BigRational::from_integer(BigInt::from(t));
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &t + c)
    }

    fn eval_u64(&self, t: u32) -> Option<u64> {
        let v = self.eval(t as i64);
        if v.is_integer() && !v.is_negative() {
            u64::try_from(v.to_integer()).ok()
        } else {
            None
        }
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if k == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{abs} {var}")?;
            }
        }
        Ok(())
    }
}

/// The polynomial of degree `< points.len()` through the given points (Lagrange form, expanded).
pub fn interpolate(points: &[(i64, BigRational)]) -> HilbertPolynomial {
    let k = points.len();
    let mut result = vec![BigRational::zero(); k.max(1)];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let xj_r = BigRational::from_integer(BigInt::from(*xj));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (p, c) in basis.iter().enumerate() {
                next[p + 1] += c;
                next[p] -= c * &xj_r;
            }
            basis = next;
            denom *= BigRational::from_integer(BigInt::from(xi - xj));
        }
        let scale = yi / denom;
        for (p, c) in basis.iter().enumerate() {
            result[p] += c * &scale;
        }
    }
    HilbertPolynomial::new(result)
}

/// Interpolates `n` consecutive values starting at `start` and checks the fit on
/// the next [`VERIFICATION_WINDOW`] degrees, advancing `start` until it holds.
pub(crate) fn stabilize(n: usize, start: u32, value: impl Fn(u32) -> u64) -> Result<HilbertPolynomial> {
    for d0 in (start..).take(MAX_RETRIES) {
        let points: Vec<(i64, BigRational)> = (d0..d0 + n as u32)
            .map(|d| (d as i64, BigRational::from_integer(BigInt::from(value(d)))))
            .collect();
        let p = interpolate(&points);
        let end = d0 + n as u32;
        if (end..end + VERIFICATION_WINDOW).all(|d| p.eval_u64(d) == Some(value(d))) {
            return Ok(p);
        }
    }
    Err(Error::Unstabilized { retries: MAX_RETRIES })
}

/// Whether `values` on `[from, to]` agree with a polynomial of degree `<= degree`
/// (`None`: the zero polynomial), fitting on the first points and verifying the rest.
pub fn fits_polynomial_of_degree(values: &[u64], degree: Option<usize>) -> bool {
    let needed = degree.map_or(0, |d| d + 1);
    let window = VERIFICATION_WINDOW as usize;
    if values.len() < needed + window {
        return false;
    }
    let tail = &values[values.len() - needed - window..];
    let points: Vec<(i64, BigRational)> = tail[..needed]
        .iter()
        .enumerate()
        .map(|(i, v)| (i as i64, BigRational::from_integer(BigInt::from(*v))))
        .collect();
    let p = if needed == 0 { HilbertPolynomial::new(vec![]) } else { interpolate(&points) };
    tail.iter().enumerate().skip(needed).all(|(i, v)| p.eval(i as i64) == BigRational::from_integer(BigInt::from(*v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn interpolation_recovers_cubic() {
        // 1/6 t^3 + t^2 - 1/6 t - 2
        let f = |t: i64| (t * t * t + 6 * t * t - t - 12) / 6;
        let pts: Vec<_> = (3..7).map(|t| (t, r(f(t)))).collect();
        let p = interpolate(&pts);
        assert_eq!(p.to_string(), "1/6 t^3 + t^2 - 1/6 t - 2");
        for t in 0..20 {
            assert_eq!(p.eval(t), r(f(t)));
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(HilbertPolynomial::new(vec![]).to_string(), "0");
        assert_eq!(HilbertPolynomial::new(vec![r(0), r(-1)]).to_string(), "-t");
        assert_eq!(HilbertPolynomial::new(vec![r(3)]).to_string(), "3");
    }

    #[test]
    fn onset_detection() {
        let values = vec![0, 0, 0, 5, 11, 20];
        let h = HilbertData::new(4, values).with_polynomial(HilbertPolynomial::new(vec![r(-2), r(0), r(0)]));
        assert_eq!(h.onset(), Some(6));
    }

    #[test]
    fn polynomial_fit_windows() {
        assert!(fits_polynomial_of_degree(&[3, 1, 0, 0, 0], None));
        assert!(!fits_polynomial_of_degree(&[0, 0, 1, 0], None));
        assert!(fits_polynomial_of_degree(&[1, 2, 2, 2, 2], Some(0)));
        assert!(fits_polynomial_of_degree(&[0, 1, 3, 5, 7, 9], Some(1)));
        assert!(!fits_polynomial_of_degree(&[0, 1, 4, 9, 16, 25], Some(1)));
    }

    #[test]
    fn unstabilized_error() {
        let err = stabilize(1, 0, |d| (d as u64) * (d as u64)).unwrap_err();
        assert!(matches!(err, Error::Unstabilized { .. }));
    }
}
