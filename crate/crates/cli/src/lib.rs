//! Command line front end: argument handling, dispatch and canonical output.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use borel_forge::binomial::{check_filtration, gb_formulas, ideal_of, is_good, validate_system, verify_chain};
use borel_forge::combinat::{borel_closure, borel_ge, borel_witness, enumerate_u, TermOrder};
use borel_forge::generic::{alpha, gin_certified, mu, phi_expand, verify_alpha_shift, verify_alpha_shift_forced};
use borel_forge::polyalg::text::{default_names, format_monomial};
use borel_forge::Config;

mod failure;
pub mod files;
pub mod settings;
pub mod verify;

pub use failure::{CliError, CliResult};
use files::*;
use settings::Overrides;

#[derive(Parser, Debug)]
#[command(name = "borel-forge", version, about = "Exact computations with Borel-fixed, binomial and generic initial ideals")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Seed for the generic coordinate changes.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Random matrix entries are drawn from 1..=N.
    #[arg(long, global = true, value_name = "N")]
    entropy_bound: Option<u64>,
    /// Extra draws before a certificate gives up.
    #[arg(long, global = true, value_name = "N")]
    retries: Option<usize>,
    /// Degree bound for Hilbert functions.
    #[arg(long, global = true, value_name = "D")]
    bound: Option<u32>,
    /// key = value configuration file (default: ./borel-forge.toml if present).
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Order {
    Rlex,
    Hlex,
}

impl From<Order> for TermOrder {
    fn from(o: Order) -> TermOrder {
        match o {
            Order::Rlex => TermOrder::Rlex,
            Order::Hlex => TermOrder::Hlex,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Groebner basis.
    Gb {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "rlex")]
        order: Order,
    },
    /// Minimal generators of the initial ideal.
    Init {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "rlex")]
        order: Order,
    },
    /// Generic initial ideal, certified by two agreeing draws.
    Gin {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "rlex")]
        order: Order,
    },
    /// Saturation by the maximal ideal.
    Sat { file: PathBuf },
    /// Hilbert function of the ideal and its Hilbert polynomial.
    Hilbert { file: PathBuf },
    /// Borel order on exponent vectors such as 0,2,1 or [0,2,1].
    #[command(subcommand)]
    Borel(BorelCommand),
    /// Binomial systems.
    #[command(subcommand)]
    Bsys(BsysCommand),
    /// Coefficients of the upper unitriangular action.
    #[command(subcommand)]
    Alpha(AlphaCommand),
    /// Recompute every edge of a chain file.
    Chain { file: PathBuf },
    /// Bundled verification suites.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

#[derive(Subcommand, Debug)]
enum BorelCommand {
    /// Whether a is Borel-greater than or equal to b.
    Ge { a: String, b: String },
    /// A matrix of U(a, b).
    Witness { a: String, b: String },
    /// Every matrix of U(a, b) with its weight.
    Enumerate { a: String, b: String },
    /// The Borel closure of a set of exponents of one degree.
    Closure {
        #[arg(required = true)]
        set: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum BsysCommand {
    /// Validation report.
    Validate { file: PathBuf },
    /// Canonical form of the system file.
    Show { file: PathBuf },
    /// Generators X^A followed by the binomials.
    Ideal { file: PathBuf },
    /// Closed-form Groebner bases of F and its saturation.
    Gb { file: PathBuf },
    /// Whether C agrees below m(rho).
    Good { file: PathBuf },
    /// Check the filtration claims.
    Filtration { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum AlphaCommand {
    /// alpha(a, b): the coefficient of X^a in phi(X^b).
    Coeff { a: String, b: String },
    /// The full expansion of phi(X^b), grouped by monomial.
    Phi { b: String },
    /// Compare both sides of the shift identities for (b, c, rho).
    Shift {
        b: String,
        c: String,
        rho: String,
        /// Skip the prefix hypothesis.
        #[arg(long)]
        forced: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Example1,
    Example2,
    Counterexample,
    Properties,
    /// All four, run in parallel and reported in the order above.
    All,
}

/// Runs one invocation. Results go to `out`, diagnostics to `diag`; the
/// return value is the exit code. Reads `BFORGE_SEED` from the environment.
pub fn run<I, T>(argv: I, out: &mut dyn Write, diag: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env_seed = std::env::var(settings::SEED_VAR).ok();
    run_with(argv, env_seed.as_deref(), out, diag)
}

/// As [`run`], with the environment seed passed explicitly.
pub fn run_with<I, T>(argv: I, env_seed: Option<&str>, out: &mut dyn Write, diag: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { diag.write_all(text.as_bytes()) };
            return code;
        }
    };
    let over = Overrides {
        config: cli.global.config.clone(),
        seed: cli.global.seed,
        entropy_bound: cli.global.entropy_bound,
        retries: cli.global.retries,
        bound: cli.global.bound,
    };
    let cwd = std::env::current_dir().unwrap_or_else(|_| PathBuf::from("."));
    let result = settings::resolve(&over, env_seed, &cwd).and_then(|cfg| dispatch(&cli.command, &cfg, over.bound, out, diag));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(diag, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: &Command, cfg: &Config, bound: Option<u32>, out: &mut dyn Write, diag: &mut dyn Write) -> CliResult<i32> {
    let text = match cmd {
        Command::Gb { file, order } => {
            let f = parse_ideal_file(file)?;
            emit_generators(&f.names, &f.ideal.groebner((*order).into(), cfg)?)
        }
        Command::Init { file, order } => {
            let f = parse_ideal_file(file)?;
            emit_monomial_ideal(&f.names, &f.ideal.initial_ideal((*order).into(), cfg)?)
        }
        Command::Gin { file, order } => {
            let f = parse_ideal_file(file)?;
            let cert = gin_certified(&f.ideal, (*order).into(), cfg)?;
            let _ = writeln!(
                diag,
                "certificate: seed {}, entropy bound {}, draws {}, agreeing {:?}, rejected {:?}",
                cfg.seed, cfg.entropy_bound, cert.draws, cert.agreeing, cert.rejected
            );
            emit_monomial_ideal(&f.names, &cert.value)
        }
        Command::Sat { file } => {
            let f = parse_ideal_file(file)?;
            emit_generators(&f.names, &f.ideal.saturate(cfg)?.canonical_generators(cfg)?)
        }
        Command::Hilbert { file } => {
            let f = parse_ideal_file(file)?;
            let up_to = bound.unwrap_or_else(|| cfg.bound_for(f.width(), f.ideal.max_degree()));
            if !f.ideal.is_homogeneous() {
                return Err(borel_forge::Error::NotHomogeneous.into());
            }
            let init = f.ideal.initial_ideal(TermOrder::Rlex, cfg)?;
            init.hilbert_function(up_to).with_polynomial(init.hilbert_polynomial()?).render()
        }
        Command::Borel(b) => borel(b, cfg)?,
        Command::Bsys(b) => return bsys(b, cfg, out, diag),
        Command::Alpha(a) => alpha_command(a, cfg)?,
        Command::Chain { file } => {
            let edges = parse_chain_file(file)?;
            let report = verify_chain(&edges, cfg)?;
            let mut text = String::new();
            for e in &report.edges {
                let status = if e.passed() { "PASS" } else { "FAIL" };
                let ideal = if e.ideal_matches { "matches" } else { "differs" };
                text.push_str(&format!(
                    "{status} {} {}: ideal {ideal}, h {} (expected {})\n",
                    e.relation,
                    e.label,
                    e.observed(),
                    e.annotation
                ));
            }
            out.write_all(text.as_bytes()).map_err(io)?;
            return Ok(if report.passed() { 0 } else { 1 });
        }
        Command::Verify { suite } => return run_suites(*suite, cfg, out, diag),
    };
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(0)
}

fn io(e: std::io::Error) -> CliError {
    CliError::Io { path: "<output>".into(), message: e.to_string() }
}

fn borel(cmd: &BorelCommand, cfg: &Config) -> CliResult<String> {
    Ok(match cmd {
        BorelCommand::Ge { a, b } => format!("{}\n", borel_ge(&parse_exponent(a)?, &parse_exponent(b)?)?),
        BorelCommand::Witness { a, b } => format!("{}\n", borel_witness(&parse_exponent(a)?, &parse_exponent(b)?)?),
        BorelCommand::Enumerate { a, b } => {
            let list = enumerate_u(&parse_exponent(a)?, &parse_exponent(b)?, cfg.enum_budget)?;
            let mut lines: Vec<String> = list.iter().map(|m| format!("{m} mu={}", mu(m))).collect();
            lines.sort();
            lines.iter().map(|l| format!("{l}\n")).collect::<String>() + &format!("count: {}\n", list.len())
        }
        BorelCommand::Closure { set } => emit_exponent_set(&borel_closure(&parse_exponent_set(set)?)?),
    })
}

fn bsys(cmd: &BsysCommand, cfg: &Config, out: &mut dyn Write, diag: &mut dyn Write) -> CliResult<i32> {
    let (text, code) = match cmd {
        BsysCommand::Validate { file } => {
            // validation failures are the answer here, not an input error
            let sys = match parse_system_file(file) {
                Err(CliError::Core(borel_forge::Error::InvalidSystem(why))) => {
                    out.write_all(format!("invalid: {why}\n").as_bytes()).map_err(io)?;
                    return Ok(1);
                }
                other => other?,
            };
            let r = validate_system(sys.width(), sys.degree(), sys.a(), sys.c(), sys.rho());
            let text = format!(
                "shape: {}\nshift in range: {}\ndisjoint: {}\nborel: {}\noriented: {}\ngood: {}\n",
                r.shape,
                r.shift_in_range,
                r.disjoint,
                r.borel,
                sys.is_oriented(),
                is_good(&sys)
            );
            (text, 0)
        }
        BsysCommand::Show { file } => (emit_system(&parse_system_file(file)?), 0),
        BsysCommand::Ideal { file } => {
            let sys = parse_system_file(file)?;
            (emit_generators(&default_names(sys.width()), ideal_of(&sys).generators()), 0)
        }
        BsysCommand::Gb { file } => {
            let (sys, _) = oriented(file, diag)?;
            let names = default_names(sys.width());
            let f = gb_formulas(&sys)?;
            let mut text = String::from("# rlex Groebner basis of F\n");
            text.push_str(&emit_generators(&names, &f.gb_rlex));
            text.push_str("# rlex Groebner basis of F^sat\n");
            text.push_str(&emit_generators(&names, &f.gb_sat));
            (text, 0)
        }
        BsysCommand::Good { file } => {
            let sys = parse_system_file(file)?;
            let good = is_good(&sys);
            (format!("{good}\n"), 0)
        }
        BsysCommand::Filtration { file } => {
            let (sys, _) = oriented(file, diag)?;
            let report = check_filtration(&sys, cfg)?;
            let mut text: String = report.claims.iter().map(|c| format!("{c}\n")).collect();
            if let Some(r) = report.r {
                text.push_str(&format!("r: {r}\n"));
            }
            text.push_str(&format!("bound: {}\n", report.bound));
            let code = if report.passed() { 0 } else { 1 };
            (text, code)
        }
    };
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(code)
}

fn oriented(file: &std::path::Path, diag: &mut dyn Write) -> CliResult<(borel_forge::binomial::BinomialSystem, bool)> {
    let (sys, flipped) = parse_system_file(file)?.oriented();
    if flipped {
        let _ = writeln!(diag, "note: rho_m(rho) < 0, using (A, C+rho, -rho)");
    }
    Ok((sys, flipped))
}

fn alpha_command(cmd: &AlphaCommand, cfg: &Config) -> CliResult<String> {
    Ok(match cmd {
        AlphaCommand::Coeff { a, b } => format!("{}\n", alpha(&parse_exponent(a)?, &parse_exponent(b)?, cfg.enum_budget)?),
        AlphaCommand::Phi { b } => {
            let b = parse_exponent(b)?;
            let n = b.width();
            let names = default_names(n);
            let phi = phi_expand(&b, cfg.enum_budget)?;
            let mut monos = borel_forge::combinat::exponents_of_degree(n, b.degree());
            monos.sort_by(|x, y| TermOrder::Rlex.cmp(y, x));
            let mut text = String::new();
            for a in monos {
                let coeff = phi.coefficient(&a);
                if !coeff.is_zero() {
                    text.push_str(&format!("{}: {coeff}\n", format_monomial(&a, &names)));
                }
            }
            text
        }
        AlphaCommand::Shift { b, c, rho, forced } => {
            let (b, c, rho) = (parse_exponent(b)?, parse_exponent(c)?, parse_signed(rho)?);
            let rep = if *forced {
                verify_alpha_shift_forced(&b, &c, &rho, cfg.enum_budget)?
            } else {
                verify_alpha_shift(&b, &c, &rho, cfg.enum_budget)?
            };
            let mut text = format!(
                "alpha^c_b: {}\np*Y^(rho-): {}\nequal: {}\nalpha^(c+rho)_(b+rho): {}\np*Y^(rho+): {}\nequal: {}\n",
                rep.lhs_low, rep.rhs_low, rep.equal_low, rep.lhs_high, rep.rhs_high, rep.equal_high
            );
            if let Some(q) = rep.high_ratio().filter(|_| !rep.equal_high) {
                text.push_str(&format!("ratio: {q}\n"));
            }
            text
        }
    })
}

fn run_suites(suite: Suite, cfg: &Config, out: &mut dyn Write, diag: &mut dyn Write) -> CliResult<i32> {
    let chosen: Vec<Suite> = match suite {
        Suite::All => vec![Suite::Example1, Suite::Example2, Suite::Counterexample, Suite::Properties],
        one => vec![one],
    };
    type Outcome = (CliResult<verify::VerificationReport>, Vec<u8>);
    let run_one = |s: Suite| -> Outcome {
        let mut notes = Vec::new();
        let report = match s {
            Suite::Example1 => verify::example1(cfg),
            Suite::Example2 => verify::example2(cfg),
            Suite::Counterexample => verify::counterexample(cfg, &mut notes),
            Suite::Properties => verify::properties(cfg),
            Suite::All => unreachable!("expanded above"),
        };
        (report.map_err(CliError::from), notes)
    };
    // suites are independent; output keeps the fixed order
    let outcomes: Vec<Outcome> = std::thread::scope(|scope| {
        let handles: Vec<_> = chosen.iter().map(|&s| scope.spawn(move || run_one(s))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    let mut code = 0;
    for (report, notes) in outcomes {
        diag.write_all(&notes).map_err(io)?;
        let report = report?;
        out.write_all(report.render().as_bytes()).map_err(io)?;
        code = code.max(report.exit_status());
    }
    Ok(code)
}
