use crate::combinat::TermOrder;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::polyalg::Ideal;

use super::unipotent::{apply_change, UnipotentChange};

/// Outcome of a certified generic computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certified<T> {
    pub value: T,
    /// Number of draws made, including rejected ones.
    pub draws: u64,
    /// The two draw indices that produced `value`.
    pub agreeing: (u64, u64),
    /// Draws whose candidate failed the acceptance test.
    pub rejected: Vec<u64>,
}

/// Draws `g` for indices `0, 1, ...` until two accepted candidates agree.
///
/// `attempt` returns `None` for a rejected candidate. At most `2 + retries`
/// draws are made; the candidates are reported when none agree.
pub(crate) fn certify<T: PartialEq + Clone>(
    n: usize,
    cfg: &Config,
    render: impl Fn(&T) -> String,
    mut attempt: impl FnMut(&UnipotentChange) -> Result<Option<T>>,
) -> Result<Certified<T>> {
    let total = 2 + cfg.retries as u64;
    let mut seen: Vec<(u64, T)> = Vec::new();
    let mut rejected = Vec::new();
    for draw in 0..total {
        let g = UnipotentChange::random(n, cfg.seed, draw, cfg.entropy_bound);
        match attempt(&g)? {
            None => rejected.push(draw),
            Some(value) => {
                if let Some((first, _)) = seen.iter().find(|(_, v)| *v == value) {
                    return Ok(Certified { value, draws: draw + 1, agreeing: (*first, draw), rejected });
                }
                seen.push((draw, value));
            }
        }
    }
    Err(Error::CertificateMismatch { draws: total as usize, candidates: seen.iter().map(|(_, v)| render(v)).collect() })
}

/// `Gin_order(I)`: the initial ideal after a generic unipotent change, certified
/// by being Borel and by agreement of two independent draws.
pub fn gin(ideal: &Ideal, order: TermOrder, cfg: &Config) -> Result<MonomialIdeal> {
    Ok(gin_certified(ideal, order, cfg)?.value)
}

pub fn gin_certified(ideal: &Ideal, order: TermOrder, cfg: &Config) -> Result<Certified<MonomialIdeal>> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    assert!(order.is_admissible(), "generic initial ideals need an admissible order");
    certify(
        ideal.width(),
        cfg,
        |m| format!("{m:?}"),
        |g| {
            let init = apply_change(g, ideal).initial_ideal(order, cfg)?;
            Ok(init.is_borel_ideal().then_some(init))
        },
    )
}
