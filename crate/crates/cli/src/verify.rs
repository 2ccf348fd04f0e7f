//! Bundled verification suites. Each check records what was expected and
//! what was computed; a suite passes when every check does.

use std::collections::BTreeSet;
use std::fmt::Display;

use borel_forge::binomial::{
    check_filtration, check_gb_formulas, ideal_of, is_good, random_system, verify_chain, Annotation, ChainEdge, Relation,
};
use borel_forge::catalog::{self, COUNTEREXAMPLE_GIN, COUNTEREXAMPLE_INIT, EXAMPLE2_GENERATORS, HILBERT_POLYNOMIAL_Q};
use borel_forge::combinat::{
    borel_closure, borel_ge, borel_witness, enumerate_u, exponents_of_degree, is_borel_set, Exponent, TermOrder,
};
use borel_forge::generic::{alpha, apply_change, gin, gin_certified, mu, phi_expand, UnipotentChange};
use borel_forge::monomial::{compare_functions, HilbertPolynomial, MonomialIdeal};
use borel_forge::polyalg::text::{default_names, format_monomial, parse_polynomial};
use borel_forge::polyalg::{is_groebner, Coeff, Ideal};
use borel_forge::sample::{random_borel_ideal, random_homogeneous_ideal};
use borel_forge::{Config, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    fn new(suite: &str) -> VerificationReport {
        VerificationReport { suite: suite.to_string(), checks: Vec::new() }
    }

    fn check(&mut self, id: impl Into<String>, expected: impl Display, actual: impl Display, passed: bool) {
        self.checks.push(Check { id: id.into(), passed, expected: expected.to_string(), actual: actual.to_string() });
    }

    fn equal<T: PartialEq + Display>(&mut self, id: impl Into<String>, expected: T, actual: T) {
        let passed = expected == actual;
        self.check(id, expected, actual, passed);
    }

    fn holds(&mut self, id: impl Into<String>, actual: bool) {
        self.check(id, true, actual, actual);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// 0 when every check passed, 1 otherwise.
    pub fn exit_status(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    /// `PASS id` lines; failures also show both sides. Ends with a count line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            if c.passed {
                out.push_str(&format!("PASS {}\n", c.id));
            } else {
                out.push_str(&format!("FAIL {}\n  expected: {}\n  actual:   {}\n", c.id, c.expected, c.actual));
            }
        }
        let good = self.checks.iter().filter(|c| c.passed).count();
        out.push_str(&format!("{}: {good}/{} checks passed\n", self.suite, self.checks.len()));
        out
    }
}

struct Shown<'a>(&'a MonomialIdeal);

impl Display for Shown<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names = default_names(self.0.width());
        let gens: Vec<String> = self.0.generators().iter().map(|g| format_monomial(g, &names)).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl PartialEq for Shown<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

fn monomials(n: usize, set: &[Exponent]) -> String {
    let names = default_names(n);
    let list: Vec<String> = set.iter().map(|e| format_monomial(e, &names)).collect();
    format!("{{{}}}", list.join(", "))
}

pub fn example1(cfg: &Config) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("example1");
    let ex = catalog::example1();
    r.equal("init_rlex c = b", Shown(&ex.b), Shown(&ex.c.initial_ideal(TermOrder::Rlex, cfg)?));
    r.equal("init_hlex c = l^f", Shown(&ex.l_f), Shown(&ex.c.initial_ideal(TermOrder::Hlex, cfg)?));
    let g = gin_certified(&ex.c, TermOrder::Rlex, cfg)?;
    r.equal("Gin_rlex c = init_rlex c", Shown(&ex.b), Shown(&g.value));
    r.equal("init_rlex d = l^f", Shown(&ex.l_f), Shown(&ex.d.initial_ideal(TermOrder::Rlex, cfg)?));
    let sat = ex.d.initial_ideal(TermOrder::Hlex, cfg)?.saturate();
    r.equal("(init_hlex d)^sat = l^q", Shown(&ex.l_q), Shown(&sat));

    let q = HilbertPolynomial::new(HILBERT_POLYNOMIAL_Q.iter().map(|&(p, d)| Coeff::new(p.into(), d.into())).collect());
    r.equal("Hilbert polynomial of l^q", q.clone(), ex.l_q.hilbert_polynomial()?);
    r.equal("Hilbert polynomial of l^f", q, ex.l_f.hilbert_polynomial()?);
    let bound = cfg.bound;
    let cmp = compare_functions(ex.l_f.hilbert_function(bound).values(), ex.l_q.hilbert_function(bound).values());
    r.check(format!("h_(l^f) < h_(l^q) up to degree {bound}"), "<", fmt_cmp(cmp), cmp == Some(std::cmp::Ordering::Less));

    let edge = |label: &str, relation, source: &Ideal, target: &MonomialIdeal, a| ChainEdge {
        label: label.into(),
        relation,
        source: source.clone(),
        target: Ideal::from_monomial(target),
        annotation: Some(a),
    };
    let edges = [
        edge("c -> b", Relation::InitRlex, &ex.c, &ex.b, Annotation::Equal),
        edge("c -> l^f", Relation::InitHlex, &ex.c, &ex.l_f, Annotation::Equal),
        edge("c ~> b", Relation::GinRlex, &ex.c, &ex.b, Annotation::Equal),
        edge("d -> l^f", Relation::InitRlex, &ex.d, &ex.l_f, Annotation::Equal),
        edge("d -> l^q", Relation::SatInitHlex, &ex.d, &ex.l_q, Annotation::AtMost),
        edge("d -> l^q", Relation::SatInitHlex, &ex.d, &ex.l_q, Annotation::Less),
    ];
    for e in verify_chain(&edges, cfg)?.edges {
        let id = format!("chain {} {} {}", e.relation, e.label, e.annotation);
        r.check(id, format!("ideal matches, h {}", e.annotation), format!("ideal {}, h {}", if e.ideal_matches { "matches" } else { "differs" }, e.observed()), e.passed());
    }
    Ok(r)
}

fn fmt_cmp(c: Option<std::cmp::Ordering>) -> &'static str {
    match c {
        Some(std::cmp::Ordering::Less) => "<",
        Some(std::cmp::Ordering::Equal) => "=",
        Some(std::cmp::Ordering::Greater) => ">",
        None => "incomparable",
    }
}

pub fn example2(cfg: &Config) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("example2");
    let sys = catalog::example2();
    let f = ideal_of(&sys);
    let names = default_names(4);
    let printed = EXAMPLE2_GENERATORS
        .iter()
        .map(|g| parse_polynomial(g, &names, TermOrder::Rlex))
        .collect::<Result<Vec<_>>>()?;
    let show = |gens: &[borel_forge::polyalg::Polynomial]| {
        gens.iter().map(|g| borel_forge::polyalg::text::format_polynomial(g, &names)).collect::<Vec<_>>().join(", ")
    };
    r.equal("generators of F", show(&printed), show(f.generators()));
    let sat = f.saturate(cfg)?;
    let c = catalog::example1().c;
    r.check("F^sat = (y^2 - x*z, x^2, x*y, x*z^2)", show(&c.canonical_generators(cfg)?), show(&sat.canonical_generators(cfg)?), sat.same_ideal(&c, cfg)?);
    r.holds("printed generators form a rlex Groebner basis", is_groebner(&printed));
    r.holds("system is good", is_good(&sys));
    for claim in check_gb_formulas(&sys, cfg)? {
        r.check(format!("closed form {}", claim.id), "holds", &claim.detail, claim.passed);
    }
    let report = check_filtration(&sys, cfg)?;
    for claim in report.claims {
        r.check(format!("filtration {}", claim.id), "holds", &claim.detail, claim.passed);
    }
    Ok(r)
}

/// Printed lists, symmetric difference, the single Borel matrix and its weights.
pub fn counterexample(cfg: &Config, diag: &mut dyn std::io::Write) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("counterexample");
    let (rho, b, c) = catalog::counterexample_data();
    let sys = catalog::counterexample();
    let d: BTreeSet<Exponent> =
        [b.clone(), c.clone(), b.shift(&rho).expect("b+rho"), c.shift(&rho).expect("c+rho")].into_iter().collect();
    let rebuilt: BTreeSet<Exponent> = borel_closure(&d)?.difference(&d).cloned().collect();
    r.equal("|A|", sys.a().len(), rebuilt.len());
    r.holds("A = closure(D) minus D", rebuilt == *sys.a());

    let printed_init = catalog::monomial_ideal(5, COUNTEREXAMPLE_INIT);
    let printed_gin = catalog::monomial_ideal(5, COUNTEREXAMPLE_GIN);
    let f = ideal_of(&sys);
    let init = f.initial_ideal(TermOrder::Rlex, cfg)?;
    r.equal("init_rlex F", Shown(&printed_init), Shown(&init));
    r.equal("number of generators of init_rlex F", 71, init.generators().len());
    let cert = gin_certified(&f, TermOrder::Rlex, cfg)?;
    let _ = writeln!(
        diag,
        "gin_rlex F: seed {}, draws {}, agreeing {:?}, rejected {:?}",
        cfg.seed, cert.draws, cert.agreeing, cert.rejected
    );
    let g = cert.value;
    r.equal("Gin_rlex F", Shown(&printed_gin), Shown(&g));
    r.equal("number of generators of Gin_rlex F", 71, g.generators().len());
    let y2t2u = catalog::monomial_ideal(5, "y^2t^2u").generators()[0].clone();
    let xz2tu = catalog::monomial_ideal(5, "xz^2tu").generators()[0].clone();
    r.holds("y^2*t^2*u in init, not in Gin", init.contains(&y2t2u) && !g.contains(&y2t2u));
    r.holds("x*z^2*t*u in Gin, not in init", g.contains(&xz2tu) && !init.contains(&xz2tu));
    let only_init: Vec<Exponent> = init.generators().iter().filter(|e| !g.generators().contains(e)).cloned().collect();
    let only_gin: Vec<Exponent> = g.generators().iter().filter(|e| !init.generators().contains(e)).cloned().collect();
    r.equal("generators only in init", monomials(5, &[y2t2u]), monomials(5, &only_init));
    r.equal("generators only in Gin", monomials(5, &[xz2tu]), monomials(5, &only_gin));

    let u = enumerate_u(&b, &c, cfg.enum_budget)?;
    r.equal("|U(b,c)|", 1, u.len());
    if let Some(m) = u.first() {
        r.equal("mu_M", "1".to_string(), mu(m).to_string());
        let shifted = m.add_rho(&rho).map(|s| mu(&s).to_string()).unwrap_or_else(|| "undefined".into());
        r.equal("mu_(M+rho)", "2".to_string(), shifted);
    }
    r.equal("is_good", false, is_good(&sys));
    Ok(r)
}

/// Randomized checks; every instance is derived from `cfg.seed`.
pub fn properties(cfg: &Config) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("properties");
    let seed = cfg.seed;
    let sub = |k: u64| seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(k);

    // Borel order: prefix sums against the matrix search and the witness
    let all = exponents_of_degree(4, 3);
    let mut agree = true;
    for (k, a) in all.iter().enumerate() {
        let b = &all[(k * 7 + sub(0) as usize) % all.len()];
        let ge = borel_ge(a, b)?;
        let nonempty = !enumerate_u(a, b, cfg.enum_budget)?.is_empty();
        let witness = borel_witness(a, b).map(|m| m.is_in_u(a, b)).unwrap_or(false);
        agree &= ge == nonempty && ge == witness;
    }
    r.holds("Borel order: prefix sums, U(a,b) and witness agree", agree);

    let d: BTreeSet<Exponent> = all.iter().skip(sub(1) as usize % all.len()).step_by(9).cloned().collect();
    r.holds("Borel closure is Borel", is_borel_set(&borel_closure(&d)?)?);

    let mut ok = true;
    for (k, b) in exponents_of_degree(3, 3).iter().enumerate().filter(|(k, _)| (*k as u64 + sub(2)).is_multiple_of(3)) {
        let phi = phi_expand(b, cfg.enum_budget)?;
        let a = &exponents_of_degree(3, 3)[k % 10];
        ok &= alpha(a, b, cfg.enum_budget)? == phi.coefficient(a);
    }
    r.holds("alpha equals the coefficient of phi", ok);

    for k in 0..3 {
        let i = random_homogeneous_ideal(3, 3, 3, sub(10 + k));
        let bound = cfg.bound_for(3, i.max_degree());
        let gi = gin(&i, TermOrder::Rlex, cfg)?;
        r.holds(format!("ideal {k}: Gin is Borel"), gi.is_borel_ideal());
        let hi = i.hilbert_function(bound, cfg)?;
        r.holds(format!("ideal {k}: h_Gin = h_I"), gi.hilbert_function(bound).values() == hi.values());
        let gs = gin(&i.saturate(cfg)?, TermOrder::Rlex, cfg)?;
        r.equal(format!("ideal {k}: Gin(I^sat) = Gin(I)^sat"), Shown(&gi.saturate()), Shown(&gs));
        let borel = random_borel_ideal(3, 3, sub(20 + k));
        r.equal(format!("Borel ideal {k}: Gin fixes it"), Shown(&borel), Shown(&gin(&Ideal::from_monomial(&borel), TermOrder::Rlex, cfg)?));
    }

    for k in 0..2 {
        let sys = random_system(4, 3, sub(30 + k), true)?;
        let f = ideal_of(&sys);
        let g = UnipotentChange::random(4, sub(40 + k), 0, cfg.entropy_bound);
        r.holds(format!("good system {k}: fixed by a unipotent"), apply_change(&g, &f).same_ideal(&f, cfg)?);
        r.equal(format!("good system {k}: Gin = init"), Shown(&f.initial_ideal(TermOrder::Rlex, cfg)?), Shown(&gin(&f, TermOrder::Rlex, cfg)?));
    }

    for k in 0..2 {
        let sys = random_system(4, 3, sub(50 + k), false)?;
        let report = check_filtration(&sys, cfg)?;
        let failed: Vec<String> = report.failures().iter().map(|c| c.id.clone()).collect();
        r.check(format!("system {k}: filtration claims"), "all hold", format!("failed {failed:?}"), report.passed());
    }
    Ok(r)
}
