use std::fmt;

use crate::combinat::{Exponent, TermOrder};
use crate::config::Config;
use crate::error::Result;
use crate::monomial::{compare_functions, fits_polynomial_of_degree, MonomialIdeal};
use crate::polyalg::{is_groebner, Ideal, Polynomial};

use super::system::{gb_formulas, ideal_of, section_ideal, section_set, BinomialSystem};

/// Which description produced a filtration step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `F_0 = F(A,C,ρ)`.
    Base,
    /// `(F ∩ S_(j))^sat S`.
    Binomial,
    /// `((init_rlex F) ∩ S_(j))^sat S`.
    Monomial,
}

#[derive(Clone, Debug)]
pub struct FiltrationStep {
    pub index: usize,
    /// Width `j = n − i + 1` of the section ring; `n` for `F_0`.
    pub section: usize,
    pub branch: Branch,
    pub ideal: Ideal,
}

/// `F_0 ⊂ F_1 ⊂ … ⊂ F_n`, each step an ideal of the full ring.
#[derive(Clone, Debug)]
pub struct Filtration {
    n: usize,
    steps: Vec<FiltrationStep>,
}

impl Filtration {
    pub fn width(&self) -> usize {
        self.n
    }

    pub fn steps(&self) -> &[FiltrationStep] {
        &self.steps
    }

    pub fn get(&self, i: usize) -> &Ideal {
        &self.steps[i].ideal
    }
}

/// The filtration of an oriented system: binomial branch for `1 <= i <= n − m + 1`,
/// monomial branch above.
pub fn filtration(sys: &BinomialSystem) -> Result<Filtration> {
    sys.require_oriented()?;
    let n = sys.width();
    let m = sys.m();
    let mut steps = vec![FiltrationStep { index: 0, section: n, branch: Branch::Base, ideal: ideal_of(sys) }];
    for i in 1..=n {
        let j = n - i + 1;
        let branch = if i <= n - m + 1 { Branch::Binomial } else { Branch::Monomial };
        steps.push(FiltrationStep { index: i, section: j, branch, ideal: section_ideal(sys, j)?.extend(n) });
    }
    Ok(Filtration { n, steps })
}

/// One verified statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

impl Claim {
    fn new(id: impl Into<String>, passed: bool, detail: impl Into<String>) -> Claim {
        Claim { id: id.into(), passed, detail: detail.into() }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "ok" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.id, self.detail)
    }
}

#[derive(Clone, Debug)]
pub struct FiltrationReport {
    pub claims: Vec<Claim>,
    /// The exponent witnessing `X_i^r · 𝔞 ⊂ 𝔟` in the radical claim.
    pub r: Option<u32>,
    pub bound: u32,
}

impl FiltrationReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Claim> {
        self.claims.iter().filter(|c| !c.passed).collect()
    }
}

/// Checks the closed-form bases against the engine: `X^A ∪ Bin(C,ρ)` and
/// `X^{A*} ∪ Bin(C*,ρ)` pass the S-pair test, the leading terms match, and
/// the closed-form saturation equals the computed one.
pub fn check_gb_formulas(sys: &BinomialSystem, cfg: &Config) -> Result<Vec<Claim>> {
    let f = gb_formulas(sys)?;
    let n = sys.width();
    let mut out = vec![
        Claim::new("gb", is_groebner(&f.gb_rlex), "X^A and Bin(C,rho) form a rlex Groebner basis"),
        Claim::new("gb-sat", is_groebner(&f.gb_sat), "X^A* and Bin(C*,rho) form a rlex Groebner basis"),
    ];
    let engine_init = ideal_of(sys).initial_ideal(TermOrder::Rlex, cfg)?;
    out.push(Claim::new("init", engine_init == f.init_rlex, "init_rlex F = (X^(A u C))"));
    let leads = MonomialIdeal::new(n, f.gb_rlex.iter().map(|g| g.leading_exponent().unwrap().clone()));
    out.push(Claim::new("init-leads", leads == f.init_rlex, "leading terms of the closed-form basis"));
    let engine_sat = ideal_of(sys).saturate(cfg)?;
    out.push(Claim::new("sat", engine_sat.same_ideal(&f.sat, cfg)?, "F^sat = (X^A* u Bin(C*,rho))"));
    let colon = ideal_of(sys).colon_last_var_power(cfg)?;
    out.push(Claim::new("sat-colon", colon.same_ideal(&f.sat, cfg)?, "F^sat = (F : X_n^inf)"));
    Ok(out)
}

/// Verifies the structural claims about the filtration up to degree `bound`.
pub fn check_filtration(sys: &BinomialSystem, cfg: &Config) -> Result<FiltrationReport> {
    let filt = filtration(sys)?;
    let n = sys.width();
    let m = sys.m();
    let seam = n + 1 - m;
    let bound = cfg.bound_for(n, sys.degree());
    let mut claims = Vec::new();

    // sections: closed forms against elimination and saturation
    let f = ideal_of(sys);
    let init = f.initial_ideal(TermOrder::Rlex, cfg)?;
    for j in 1..=n {
        let engine = if j >= m {
            f.contract(j, cfg)?.saturate(cfg)?
        } else {
            Ideal::from_monomial(&init.restrict(j)).saturate(cfg)?
        };
        let ok = engine.same_ideal(&section_ideal(sys, j)?, cfg)?;
        claims.push(Claim::new(format!("section[{j}]"), ok, "closed form equals computed section saturation"));
    }

    // a: F_i generated in S_(n-i)
    for i in (0..=n).filter(|&i| i != seam) {
        let gb = filt.get(i).groebner(TermOrder::Rlex, cfg)?;
        let ok = gb.iter().all(|g| g.lies_in_first(n - i));
        claims.push(Claim::new(format!("a[{i}]"), ok, format!("F_{i} generated in K[X_1..X_{}]", n - i)));
    }

    // b: F_{i+1} = (F_i ∩ S_(n-i))^sat S
    for i in (0..n).filter(|&i| i != seam) {
        let rebuilt = filt.get(i).contract(n - i, cfg)?.saturate(cfg)?.extend(n);
        let ok = rebuilt.same_ideal(filt.get(i + 1), cfg)?;
        claims.push(Claim::new(format!("b[{i}]"), ok, format!("F_{} = (F_{i} meet S_{})^sat S", i + 1, n - i)));
    }

    let upper = section_ideal(sys, m)?;
    let mut r = None;
    if m >= 2 {
        // c: the seam inclusion
        let lower = section_ideal(sys, m - 1)?.extend(m);
        claims.push(Claim::new("c", lower.contains_ideal(&upper, cfg)?, "(F meet S_m)^sat inside (init meet S_(m-1))^sat S_m"));

        // e: X_i^r kills the quotient for i < m
        let ac = section_set(&sys.a_union_c(), m - 1);
        match ac.iter().map(|a| a.get(m - 2)).max() {
            None => claims.push(Claim::new("e", true, "(A u C)_(m-1) empty; nothing to check")),
            Some(top) => {
                let exp = top as i64 + sys.rho().get(m - 1);
                let rr = u32::try_from(exp).unwrap_or(0);
                r = Some(rr);
                let gens: Vec<Exponent> = ac.iter().map(|a| a.star().extend(m)).collect();
                let mut ok = true;
                'outer: for i in 0..m - 1 {
                    for b in &gens {
                        let mut v = b.entries().to_vec();
                        v[i] += rr;
                        let mono = Polynomial::monomial(Exponent::new(v), num_traits::One::one(), TermOrder::Rlex);
                        if !upper.contains(&mono, cfg)? {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
                claims.push(Claim::new("e", ok, format!("X_i^{rr} (init meet S_(m-1))^sat S_m inside (F meet S_m)^sat for i < m")));
            }
        }
    }

    // d: inclusions
    for i in 0..n {
        let ok = filt.get(i + 1).contains_ideal(filt.get(i), cfg)?;
        claims.push(Claim::new(format!("d[{i}]"), ok, format!("F_{i} inside F_{}", i + 1)));
    }

    // f: X_m is a non-zerodivisor modulo init_rlex of the top section
    let top_init = upper.initial_ideal(TermOrder::Rlex, cfg)?;
    let ok = top_init.generators().iter().all(|g| g.get(m - 1) == 0);
    claims.push(Claim::new("f", ok, format!("no generator of init_rlex (F meet S_{m})^sat involves X_{m}")));

    // dimension ladder: h_{F_{i+1}} − h_{F_i} has degree <= i − 1
    let hs: Vec<Vec<u64>> = filt
        .steps()
        .iter()
        .map(|s| s.ideal.hilbert_function(bound, cfg).map(|h| h.values().to_vec()))
        .collect::<Result<_>>()?;
    for i in 0..n {
        let ordered = compare_functions(&hs[i], &hs[i + 1]).is_some_and(|o| o.is_le());
        let delta: Vec<u64> = hs[i + 1].iter().zip(&hs[i]).map(|(a, b)| a.saturating_sub(*b)).collect();
        let degree = i.checked_sub(1);
        let ok = ordered && fits_polynomial_of_degree(&delta, degree);
        let what = match degree {
            None => "eventually zero".to_string(),
            Some(k) => format!("eventually of degree <= {k}"),
        };
        claims.push(Claim::new(format!("dim[{i}]"), ok, format!("h(F_{}) - h(F_{i}) {what}", i + 1)));
    }

    Ok(FiltrationReport { claims, r, bound })
}
