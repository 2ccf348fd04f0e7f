//! Acceptance criteria: one PASS/FAIL line per criterion, all comparisons exact.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use borel_forge::binomial::{
    check_filtration, ideal_of, is_good, random_system, verify_chain, Annotation, ChainEdge, Relation,
};
use borel_forge::catalog::{self, COUNTEREXAMPLE_GIN, COUNTEREXAMPLE_INIT, EXAMPLE2_GENERATORS, HILBERT_POLYNOMIAL_Q};
use borel_forge::combinat::{
    borel_closure, borel_ge, borel_witness, enumerate_u, exponents_of_degree, Exponent, SignedExponent, TermOrder,
};
use borel_forge::generic::{alpha, apply_change, gin, mu, phi_expand, verify_alpha_shift, UnipotentChange};
use borel_forge::monomial::{compare_functions, HilbertPolynomial, MonomialIdeal};
use borel_forge::polyalg::text::{default_names, parse_polynomial};
use borel_forge::polyalg::{is_groebner, weight_degeneration, Ideal};
use borel_forge::{sample, Config};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Config) -> Outcome);

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn ok<T, E: std::fmt::Debug>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| format!("{e:?}"))
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, format!("took {elapsed:?}, limit {limit:?}"))
}

fn mono(n: usize, s: &str) -> Exponent {
    catalog::monomial_ideal(n, s).generators()[0].clone()
}

fn criterion_1(cfg: &Config) -> Outcome {
    let start = Instant::now();
    let ex = catalog::example1();
    ensure(ok(ex.c.initial_ideal(TermOrder::Rlex, cfg))? == ex.b, "init_rlex c != b")?;
    ensure(ok(ex.c.initial_ideal(TermOrder::Hlex, cfg))? == ex.l_f, "init_hlex c != l^f")?;
    ensure(ok(gin(&ex.c, TermOrder::Rlex, cfg))? == ex.b, "Gin_rlex c != init_rlex c")?;
    ensure(ok(ex.d.initial_ideal(TermOrder::Rlex, cfg))? == ex.l_f, "init_rlex d != l^f")?;
    let init_d = Ideal::from_monomial(&ok(ex.d.initial_ideal(TermOrder::Hlex, cfg))?);
    let sat = ok(init_d.saturate(cfg))?;
    ensure(ok(sat.initial_ideal(TermOrder::Rlex, cfg))? == ex.l_q, "(init_hlex d)^sat != l^q")?;

    let edge = |label: &str, relation, source: &Ideal, target: &MonomialIdeal, annotation| ChainEdge {
        label: label.to_string(),
        relation,
        source: source.clone(),
        target: Ideal::from_monomial(target),
        annotation: Some(annotation),
    };
    let edges = vec![
        edge("c -> b", Relation::InitRlex, &ex.c, &ex.b, Annotation::Equal),
        edge("c -> l^f", Relation::InitHlex, &ex.c, &ex.l_f, Annotation::Equal),
        edge("c ~> b", Relation::GinRlex, &ex.c, &ex.b, Annotation::Equal),
        edge("d -> l^f", Relation::InitRlex, &ex.d, &ex.l_f, Annotation::Equal),
        edge("d -> l^q", Relation::SatInitHlex, &ex.d, &ex.l_q, Annotation::AtMost),
        edge("d -> l^q", Relation::SatInitHlex, &ex.d, &ex.l_q, Annotation::Less),
    ];
    let report = ok(verify_chain(&edges, cfg))?;
    for e in &report.edges {
        ensure(e.passed(), format!("edge {} {} failed (observed {})", e.label, e.relation, e.observed()))?;
    }
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok(format!("5 equalities, 6 chain edges (= = = = ≤ <), {:?}", start.elapsed()))
}

fn criterion_2(cfg: &Config) -> Outcome {
    let ex = catalog::example1();
    let q = HilbertPolynomial::new(
        HILBERT_POLYNOMIAL_Q.iter().map(|&(p, d)| BigRational::new(p.into(), d.into())).collect(),
    );
    let pq = ok(ex.l_q.hilbert_polynomial())?;
    let pf = ok(ex.l_f.hilbert_polynomial())?;
    ensure(pq == q, format!("hilbert polynomial of l^q is {pq}"))?;
    ensure(pf == q, format!("hilbert polynomial of l^f is {pf}"))?;
    let hf = ex.l_f.hilbert_function(10);
    let hq = ex.l_q.hilbert_function(10);
    ensure(compare_functions(hf.values(), hq.values()) == Some(Ordering::Less), "h_{l^f} < h_{l^q} fails")?;
    let _ = cfg;
    Ok(format!("q(t) = {q}; h_(l^f) < h_(l^q) on 0..=10"))
}

fn criterion_3(cfg: &Config) -> Outcome {
    let start = Instant::now();
    let sys = catalog::example2();
    let f = ideal_of(&sys);
    let names = default_names(4);
    let printed: Vec<_> =
        EXAMPLE2_GENERATORS.iter().map(|g| parse_polynomial(g, &names, TermOrder::Rlex).unwrap()).collect();
    ensure(f.generators() == printed.as_slice(), "generators differ from the printed list")?;
    let sat = ok(f.saturate(cfg))?;
    ensure(ok(sat.same_ideal(&catalog::example1().c, cfg))?, "saturation differs from c")?;
    ensure(is_groebner(&printed), "printed generators fail the S-pair test")?;
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok(format!("11 generators, F^sat = c, S-pairs reduce to 0, {:?}", start.elapsed()))
}

fn criterion_4(cfg: &Config) -> Outcome {
    let start = Instant::now();
    let (rho, b, c) = catalog::counterexample_data();
    let sys = catalog::counterexample();
    let ac: BTreeSet<Exponent> = sys.a_union_c();
    let printed_init = catalog::monomial_ideal(5, COUNTEREXAMPLE_INIT);
    let printed_gin = catalog::monomial_ideal(5, COUNTEREXAMPLE_GIN);
    ensure(MonomialIdeal::new(5, ac.iter().cloned()) == printed_init, "X^(A u C) differs from printed init")?;
    ensure(ac.len() == 71, format!("|A u C| = {}", ac.len()))?;
    let d: BTreeSet<Exponent> = [b.clone(), c.clone(), b.shift(&rho).unwrap(), c.shift(&rho).unwrap()].into();
    ensure(ok(borel_closure(&d))?.difference(&d).cloned().collect::<BTreeSet<_>>() == *sys.a(), "A mismatch")?;

    let f = ideal_of(&sys);
    let init = ok(f.initial_ideal(TermOrder::Rlex, cfg))?;
    ensure(init == printed_init, "init_rlex differs from printed list")?;
    let g = ok(gin(&f, TermOrder::Rlex, cfg))?;
    ensure(g == printed_gin, "Gin_rlex differs from printed list")?;
    let y2t2u = mono(5, "y^2t^2u");
    let xz2tu = mono(5, "xz^2tu");
    ensure(init.contains(&y2t2u) && !init.contains(&xz2tu), "init membership")?;
    ensure(g.contains(&xz2tu) && !g.contains(&y2t2u), "gin membership")?;
    let only_init: Vec<_> = init.generators().iter().filter(|e| !g.generators().contains(e)).cloned().collect();
    let only_gin: Vec<_> = g.generators().iter().filter(|e| !init.generators().contains(e)).cloned().collect();
    ensure(only_init == vec![y2t2u] && only_gin == vec![xz2tu], "symmetric difference")?;

    let u = ok(enumerate_u(&b, &c, cfg.enum_budget))?;
    ensure(u.len() == 1, format!("|U(b,c)| = {}", u.len()))?;
    ensure(mu(&u[0]) == BigUint::one(), "mu_M != 1")?;
    let shifted = u[0].add_rho(&rho).ok_or("M+rho has a negative entry")?;
    ensure(mu(&shifted) == BigUint::from(2u32), "mu_(M+rho) != 2")?;
    ensure(!is_good(&sys), "system reported good")?;
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("71 generators each, symmetric difference {{xz^2tu}}/{{y^2t^2u}}, mu = 1, 2, {:?}", start.elapsed()))
}

fn criterion_5(cfg: &Config) -> Outcome {
    let all = exponents_of_degree(4, 4);
    ensure(all.len() == 35, "|N^4_4| != 35")?;
    let mut comparable = 0;
    for a in &all {
        for b in &all {
            let decided = ok(borel_ge(a, b))?;
            let nonempty = !ok(enumerate_u(a, b, cfg.enum_budget))?.is_empty();
            let witness = borel_witness(a, b);
            ensure(decided == nonempty, format!("prefix sums vs U({a},{b})"))?;
            ensure(decided == witness.is_ok(), format!("witness construction for ({a},{b})"))?;
            if let Ok(m) = witness {
                ensure(m.is_in_u(a, b), format!("witness for ({a},{b}) has wrong sums"))?;
                comparable += 1;
            }
        }
    }
    Ok(format!("1225 ordered pairs, {comparable} comparable"))
}

fn criterion_6(cfg: &Config) -> Outcome {
    let mut pairs = 0;
    for (n, d) in [(3, 3), (4, 2)] {
        let all = exponents_of_degree(n, d);
        for b in &all {
            let phi = ok(phi_expand(b, cfg.enum_budget))?;
            for a in &all {
                let al = ok(alpha(a, b, cfg.enum_budget))?;
                ensure(al == phi.coefficient(a), format!("alpha({a},{b}) != coefficient in phi"))?;
                ensure(!al.is_zero() == ok(borel_ge(a, b))?, format!("alpha({a},{b}) nonzero vs Borel order"))?;
                pairs += 1;
            }
        }
    }
    let all = exponents_of_degree(3, 3);
    let mut triples = 0;
    for r1 in -3i64..=3 {
        for r2 in -3i64..=3 {
            let r3 = -r1 - r2;
            if r3.abs() > 3 {
                continue;
            }
            let rho = SignedExponent::new([r1, r2, r3]);
            for b in &all {
                for c in &all {
                    let m = rho.m();
                    let hyp = b.shift(&rho).is_some()
                        && c.shift(&rho).is_some()
                        && (0..m - 1).all(|i| b.get(i) == c.get(i));
                    if !hyp {
                        continue;
                    }
                    let rep = ok(verify_alpha_shift(b, c, &rho, cfg.enum_budget))?;
                    ensure(rep.equal_low && rep.equal_high, format!("shift identities fail at b={b} c={c} rho={rho}"))?;
                    triples += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} (a,b) pairs, {triples} valid (b,c,rho) triples"))
}

fn criterion_7(cfg: &Config) -> Outcome {
    for seed in 0..10u64 {
        let i = sample::random_homogeneous_ideal(4, 4, 3, seed);
        let gi = ok(gin(&i, TermOrder::Rlex, cfg))?;
        let sat = ok(i.saturate(cfg))?;
        let gs = ok(gin(&sat, TermOrder::Rlex, cfg))?;
        ensure(gs == gi.saturate(), format!("seed {seed}: Gin(I^sat) != Gin(I)^sat"))?;
        let hi = ok(i.hilbert_function(10, cfg))?;
        ensure(gi.hilbert_function(10).values() == hi.values(), format!("seed {seed}: h_Gin != h_I"))?;
        let borel = sample::random_borel_ideal(4, 3, seed);
        ensure(ok(gin(&Ideal::from_monomial(&borel), TermOrder::Rlex, cfg))? == borel, format!("seed {seed}: Gin of Borel"))?;
    }
    Ok("10 seeded ideals: Gin commutes with sat, h preserved, Borel ideals fixed".to_string())
}

fn criterion_8(cfg: &Config) -> Outcome {
    for seed in 0..5u64 {
        let sys = ok(random_system(4, 3, seed, true))?;
        let f = ideal_of(&sys);
        for draw in 0..3u64 {
            let g = UnipotentChange::random(4, seed * 1000 + 17, draw, cfg.entropy_bound);
            ensure(ok(apply_change(&g, &f).same_ideal(&f, cfg))?, format!("seed {seed} draw {draw}: g(F) != F"))?;
        }
        for order in [TermOrder::Hlex, TermOrder::Rlex] {
            let got = ok(gin(&f, order, cfg))?;
            ensure(got == ok(f.initial_ideal(order, cfg))?, format!("seed {seed}: Gin_{order} != init_{order}"))?;
        }
    }
    Ok("5 good systems x 3 unipotents fixed; Gin = init for hlex and rlex".to_string())
}

fn criterion_9(cfg: &Config) -> Outcome {
    let mut systems = vec![("example2".to_string(), catalog::example2())];
    for seed in 0..5u64 {
        systems.push((format!("seed {seed}"), ok(random_system(4, 3, seed, false))?));
    }
    let mut rs = Vec::new();
    for (label, sys) in &systems {
        let rep = ok(check_filtration(sys, cfg))?;
        if let Some(bad) = rep.failures().first() {
            return Err(format!("{label}: {bad}"));
        }
        for id in ["a[", "c", "d[", "e", "f", "dim["] {
            ensure(rep.claims.iter().any(|c| c.id.starts_with(id)) || sys.m() < 2, format!("{label}: claim {id} missing"))?;
        }
        rs.push(rep.r.map_or("-".to_string(), |r| r.to_string()));
    }
    Ok(format!("6 systems, all claims pass, r = [{}]", rs.join(", ")))
}

fn criterion_10(cfg: &Config) -> Outcome {
    let ex = catalog::example1();
    let fam = ok(weight_degeneration(&ex.c, TermOrder::Rlex, &[BigRational::zero(), BigRational::one()], cfg))?;
    let h0 = ok(fam.samples()[0].1.hilbert_function(10, cfg))?;
    let h1 = ok(fam.samples()[1].1.hilbert_function(10, cfg))?;
    ensure(h0.values() == ex.b.hilbert_function(10).values(), "fibre at 0 differs from h_b")?;
    ensure(h1.values() == ok(ex.c.hilbert_function(10, cfg))?.values(), "fibre at 1 differs from h_c")?;
    ensure(ok(fam.samples()[0].1.initial_ideal(TermOrder::Rlex, cfg))? == ex.b, "fibre at 0 is not b")?;
    Ok(format!("weight {:?}", fam.weight()))
}

// written to the process stdout directly so the lines survive test output capture
fn report(line: String) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}

#[test]
fn acceptance() {
    let cfg = Config::default();
    let criteria: [Criterion; 10] = [
        ("example1 reproduction", criterion_1),
        ("Hilbert polynomial of l^q and l^f", criterion_2),
        ("example2 reproduction", criterion_3),
        ("non-good counterexample", criterion_4),
        ("Borel order equivalences on N^4_4", criterion_5),
        ("alpha calculus", criterion_6),
        ("Gin properties", criterion_7),
        ("good systems", criterion_8),
        ("filtration", criterion_9),
        ("weight degeneration", criterion_10),
    ];
    let total = Instant::now();
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| run(&cfg))).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match outcome {
            Ok(detail) => report(format!("criterion {:>2}: PASS  {name}: {detail} [{:?}]", k + 1, start.elapsed())),
            Err(why) => {
                report(format!("criterion {:>2}: FAIL  {name}: {why} [{:?}]", k + 1, start.elapsed()));
                failed.push(k + 1);
            }
        }
    }
    report(format!("total {:?}", total.elapsed()));
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
