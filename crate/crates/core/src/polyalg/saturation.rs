use crate::combinat::TermOrder;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::generic::{apply_change, certify};

use super::ideal::Ideal;

/// `I^sat = (I : S_+^∞)` for homogeneous `I`.
///
/// When `init_rlex I` is Borel, `I^sat = (I : X_n^∞)`. Otherwise
/// `I^sat = g⁻¹((g I) : X_n^∞)` for generic unipotent `g`, certified by two
/// agreeing draws.
pub fn saturate(ideal: &Ideal, cfg: &Config) -> Result<Ideal> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if ideal.is_zero() {
        return Ok(ideal.clone());
    }
    if ideal.initial_ideal(TermOrder::Rlex, cfg)?.is_borel_ideal() {
        return ideal.colon_last_var_power(cfg);
    }
    let n = ideal.width();
    let result = certify(
        n,
        cfg,
        |gens| format!("{gens:?}"),
        |g| {
            let moved = apply_change(g, ideal).colon_last_var_power(cfg)?;
            let back = apply_change(&g.inverse(), &moved);
            Ok(Some(back.canonical_generators(cfg)?))
        },
    )?;
    Ok(Ideal::from_reduced_basis(n, result.value, TermOrder::Rlex))
}

impl Ideal {
    pub fn saturate(&self, cfg: &Config) -> Result<Ideal> {
        saturate(self, cfg)
    }

    pub fn is_saturated(&self, cfg: &Config) -> Result<bool> {
        self.saturate(cfg)?.same_ideal(self, cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::Exponent;
    use crate::monomial::MonomialIdeal;
    use crate::polyalg::text::{default_names, parse_polynomial};

    fn ideal(n: usize, gens: &[&str]) -> Ideal {
        let names = default_names(n);
        Ideal::new(n, gens.iter().map(|g| parse_polynomial(g, &names, TermOrder::Rlex).unwrap()))
    }

    #[test]
    fn saturation_of_hlex_initial_of_d() {
        let cfg = Config::default();
        let d = ideal(4, &["y^2*z - x*t^2", "x^2", "x*y", "x*z", "y^3"]);
        let init = Ideal::from_monomial(&d.initial_ideal(TermOrder::Hlex, &cfg).unwrap());
        let sat = init.saturate(&cfg).unwrap();
        let lq = MonomialIdeal::new(4, [Exponent::new([1, 0, 0, 0]), Exponent::new([0, 3, 0, 0]), Exponent::new([0, 2, 2, 0])]);
        assert_eq!(sat.initial_ideal(TermOrder::Rlex, &cfg).unwrap(), lq);
        assert!(sat.is_saturated(&cfg).unwrap());
    }

    #[test]
    fn generic_path_matches_monomial_saturation() {
        let cfg = Config::default();
        // not Borel: (y^2, y*z) in K[x,y,z] saturates to (y)
        let i = ideal(3, &["y^2", "y*z", "x^2*y"]);
        assert!(!i.initial_ideal(TermOrder::Rlex, &cfg).unwrap().is_borel_ideal());
        let sat = i.saturate(&cfg).unwrap();
        assert!(sat.same_ideal(&ideal(3, &["y"]), &cfg).unwrap());
        let m = i.initial_ideal(TermOrder::Rlex, &cfg).unwrap();
        assert_eq!(sat.initial_ideal(TermOrder::Rlex, &cfg).unwrap(), m.saturate());
    }

    #[test]
    fn non_homogeneous_is_rejected() {
        let i = ideal(2, &["x - 1"]);
        assert_eq!(i.saturate(&Config::default()).unwrap_err(), Error::NotHomogeneous);
    }
}
