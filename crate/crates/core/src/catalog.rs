//! Fixed data sets: two ideals in `K[x,y,z,t]` with their initial
//! ideals, a good binomial system whose saturation is one of them, and a
//! system in `K[x,y,z,t,u]` that is not good.

use std::collections::BTreeSet;

use crate::binomial::BinomialSystem;
use crate::combinat::{borel_closure, Exponent, SignedExponent, TermOrder};
use crate::monomial::MonomialIdeal;
use crate::polyalg::text::{default_names, parse_monomial, parse_polynomial};
use crate::polyalg::Ideal;

/// Ideal of `K[x,y,z,t,...]` from generator strings over the default names.
pub fn ideal(n: usize, gens: &[&str]) -> Ideal {
    let names = default_names(n);
    Ideal::new(n, gens.iter().map(|g| parse_polynomial(g, &names, TermOrder::Rlex).expect("catalog polynomial")))
}

/// Monomial ideal from a comma-separated monomial list such as `"x^2, x*y"`.
pub fn monomial_ideal(n: usize, list: &str) -> MonomialIdeal {
    let names = default_names(n);
    MonomialIdeal::new(n, monomial_list(list).map(|m| parse_monomial(&m, &names).expect("catalog monomial")))
}

// "x^2yz" style (juxtaposition) to "x^2*y*z"
fn monomial_list(list: &str) -> impl Iterator<Item = String> + '_ {
    list.split(',').map(str::trim).filter(|s| !s.is_empty()).map(|s| {
        let mut out = String::new();
        for ch in s.chars() {
            if ch.is_ascii_alphabetic() && !out.is_empty() {
                out.push('*');
            }
            out.push(ch);
        }
        out
    })
}

/// The ideals of the four-variable picture.
#[derive(Clone, Debug)]
pub struct FourVariablePicture {
    /// `(y²−xz, x², xy, xz²)`.
    pub c: Ideal,
    /// `(y²z−xt², x², xy, xz, y³)`.
    pub d: Ideal,
    /// `(x², xy, y², xz²)`.
    pub b: MonomialIdeal,
    /// `(x², xy, xz, y³, y²z)`.
    pub l_f: MonomialIdeal,
    /// `(x, y³, y²z²)`, the saturated lex ideal.
    pub l_q: MonomialIdeal,
}

pub fn example1() -> FourVariablePicture {
    FourVariablePicture {
        c: ideal(4, &["y^2 - x*z", "x^2", "x*y", "x*z^2"]),
        d: ideal(4, &["y^2*z - x*t^2", "x^2", "x*y", "x*z", "y^3"]),
        b: monomial_ideal(4, "x^2, xy, y^2, xz^2"),
        l_f: monomial_ideal(4, "x^2, xy, xz, y^3, y^2z"),
        l_q: monomial_ideal(4, "x, y^3, y^2z^2"),
    }
}

/// Coefficients of `t³/6 + t² − t/6 − 2`, ascending.
pub const HILBERT_POLYNOMIAL_Q: [(i64, i64); 4] = [(-2, 1), (-1, 6), (1, 1), (1, 6)];

/// A good system of degree 3 in 4 variables whose saturation is `c`.
pub fn example2() -> BinomialSystem {
    let a = [
        [3, 0, 0, 0],
        [2, 1, 0, 0],
        [2, 0, 1, 0],
        [2, 0, 0, 1],
        [1, 2, 0, 0],
        [1, 1, 1, 0],
        [1, 1, 0, 1],
        [1, 0, 2, 0],
        [0, 3, 0, 0],
        [0, 2, 1, 0],
    ];
    BinomialSystem::new(
        4,
        3,
        a.iter().map(|v| Exponent::new(v.iter().copied())),
        [Exponent::new([0, 2, 0, 1])],
        SignedExponent::new([1, -2, 1, 0]),
    )
    .expect("valid system")
}

/// The generators of `F(A,C,ρ)` for [`example2`], as printed.
pub const EXAMPLE2_GENERATORS: [&str; 11] = [
    "x^3", "x^2*y", "x^2*z", "x^2*t", "x*y^2", "x*y*z", "x*y*t", "x*z^2", "y^3", "y^2*z", "y^2*t - x*z*t",
];

/// Shift, `b` and `c` of the system that is not good.
pub fn counterexample_data() -> (SignedExponent, Exponent, Exponent) {
    (SignedExponent::new([1, -2, 2, -2, 1]), Exponent::new([0, 2, 0, 3, 0]), Exponent::new([0, 2, 0, 2, 1]))
}

/// `C = {b, c}`, `A` = Borel closure of `C ∪ (C+ρ)` minus `C ∪ (C+ρ)`.
pub fn counterexample() -> BinomialSystem {
    let (rho, b, c) = counterexample_data();
    let cs: BTreeSet<Exponent> = [b, c].into_iter().collect();
    let d: BTreeSet<Exponent> = cs.iter().cloned().chain(cs.iter().map(|e| e.shift(&rho).unwrap())).collect();
    let closure = borel_closure(&d).expect("single degree");
    let a: Vec<Exponent> = closure.difference(&d).cloned().collect();
    BinomialSystem::new(5, 5, a, cs, rho).expect("valid system")
}

/// `Gin_rlex F(A,C,ρ)` of [`counterexample`], as printed.
pub const COUNTEREXAMPLE_GIN: &str = "x^5, x^4y, x^3y^2, x^2y^3, xy^4, y^5, x^4z, x^3yz, x^2y^2z, xy^3z, y^4z, x^3z^2, \
x^2yz^2, xy^2z^2, y^3z^2, x^2z^3, xyz^3, y^2z^3, xz^4, x^4t, x^3yt, x^2y^2t, \
xy^3t, y^4t, x^3zt, x^2yzt, xy^2zt, y^3zt, x^2z^2t, xyz^2t, y^2z^2t, xz^3t, \
x^3t^2, x^2yt^2, xy^2t^2, y^3t^2, x^2zt^2, xyzt^2, y^2zt^2, xz^2t^2, x^2t^3, xyt^3, y^2t^3, \
x^4u, x^3yu, x^2y^2u, xy^3u, y^4u, x^3zu, x^2yzu, xy^2zu, y^3zu, x^2z^2u, \
xyz^2u, y^2z^2u, xz^3u, x^3tu, x^2ytu, xy^2tu, y^3tu, x^2ztu, xyztu, \
y^2ztu, xz^2tu, x^2t^2u, xyt^2u, x^3u^2, x^2yu^2, xy^2u^2, x^2zu^2, xyzu^2";

/// `init_rlex F(A,C,ρ)` of [`counterexample`], as printed.
pub const COUNTEREXAMPLE_INIT: &str = "x^5, x^4y, x^3y^2, x^2y^3, xy^4, y^5, x^4z, x^3yz, x^2y^2z, xy^3z, y^4z, x^3z^2, \
x^2yz^2, xy^2z^2, y^3z^2, x^2z^3, xyz^3, y^2z^3, xz^4, x^4t, x^3yt, x^2y^2t, \
xy^3t, y^4t, x^3zt, x^2yzt, xy^2zt, y^3zt, x^2z^2t, xyz^2t, y^2z^2t, xz^3t, \
x^3t^2, x^2yt^2, xy^2t^2, y^3t^2, x^2zt^2, xyzt^2, y^2zt^2, xz^2t^2, x^2t^3, xyt^3, y^2t^3, \
x^4u, x^3yu, x^2y^2u, xy^3u, y^4u, x^3zu, x^2yzu, xy^2zu, y^3zu, x^2z^2u, \
xyz^2u, y^2z^2u, xz^3u, x^3tu, x^2ytu, xy^2tu, y^3tu, x^2ztu, xyztu, \
y^2ztu, x^2t^2u, xyt^2u, y^2t^2u, x^3u^2, x^2yu^2, xy^2u^2, x^2zu^2, xyzu^2";

/// Number of monomials in each printed list.
pub fn printed_count(list: &str) -> usize {
    monomial_list(list).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_lists_are_minimal_and_equisized() {
        assert_eq!(printed_count(COUNTEREXAMPLE_GIN), 71);
        assert_eq!(printed_count(COUNTEREXAMPLE_INIT), 71);
        assert_eq!(monomial_ideal(5, COUNTEREXAMPLE_GIN).generators().len(), 71);
        assert_eq!(monomial_ideal(5, COUNTEREXAMPLE_INIT).generators().len(), 71);
    }

    #[test]
    fn juxtaposed_monomials() {
        let m = monomial_ideal(5, "xz^2tu");
        assert_eq!(m.generators()[0].entries(), &[1, 0, 2, 1, 1]);
    }
}
