//! Text formats read and written by the command line.
//!
//! Ideal files: one `ring N [names…]` line, then `gen <polynomial>` lines.
//! System files: `nvars N`, `degree D`, `rho r1 … rN`, then repeated
//! `A a1 … aN` and `C c1 … cN`. Chain files: `ideal <path>` and
//! `edge <relation> <source> <target> [annotation]`. In all three, `#`
//! starts a comment and blank lines are ignored.

use std::collections::{BTreeSet, HashMap};
use std::path::{Path, PathBuf};

use borel_forge::binomial::{validate_system, Annotation, BinomialSystem, ChainEdge, Relation};
use borel_forge::combinat::{Exponent, SignedExponent, TermOrder};
use borel_forge::monomial::MonomialIdeal;
use borel_forge::polyalg::text::{default_names, format_monomial, format_polynomial, parse_polynomial};
use borel_forge::polyalg::{sort_descending, Ideal, Polynomial};
use borel_forge::Error;

use crate::failure::{CliError, CliResult};

/// An ideal together with the names its file used.
#[derive(Clone, Debug)]
pub struct IdealFile {
    pub names: Vec<String>,
    pub ideal: Ideal,
}

impl IdealFile {
    pub fn width(&self) -> usize {
        self.names.len()
    }
}

/// Reads a file, mapping a missing or unreadable path to an input error.
pub fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })
}

/// Non-comment lines as `(line number, text, tokens with 1-based columns)`.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str, Vec<(usize, &str)>)> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<(usize, &str)> = body
            .split_whitespace()
            .map(|t| (t.as_ptr() as usize - body.as_ptr() as usize + 1, t))
            .collect();
        (!tokens.is_empty()).then_some((k + 1, body, tokens))
    })
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_alphabetic()) && chars.all(|c| c.is_alphanumeric() || c == '_')
}

pub fn parse_ideal(text: &str, source: &str) -> CliResult<IdealFile> {
    let mut names: Option<Vec<String>> = None;
    let mut gens = Vec::new();
    for (line, body, tokens) in lines(text) {
        let (col, keyword) = tokens[0];
        match keyword {
            "ring" => {
                if names.is_some() {
                    return Err(CliError::parse(source, line, col, "second ring line"));
                }
                let Some(&(ncol, count)) = tokens.get(1) else {
                    return Err(CliError::parse(source, line, col + 4, "ring needs a variable count"));
                };
                let n: usize = match count.parse() {
                    Ok(n) if n > 0 => n,
                    _ => return Err(CliError::parse(source, line, ncol, format!("bad variable count '{count}'"))),
                };
                let given: Vec<(usize, &str)> = tokens[2..].to_vec();
                let list = if given.is_empty() {
                    default_names(n)
                } else {
                    if given.len() != n {
                        let at = given.first().map_or(ncol, |t| t.0);
                        return Err(CliError::parse(source, line, at, format!("{n} variables but {} names", given.len())));
                    }
                    let mut seen = BTreeSet::new();
                    for &(c, name) in &given {
                        if !is_name(name) || !seen.insert(name) {
                            return Err(CliError::parse(source, line, c, format!("bad or repeated name '{name}'")));
                        }
                    }
                    given.iter().map(|t| t.1.to_string()).collect()
                };
                names = Some(list);
            }
            "gen" => {
                let Some(list) = &names else {
                    return Err(CliError::parse(source, line, col, "gen before ring"));
                };
                let start = col + 3;
                let rest = &body[start - 1..];
                let lead = rest.len() - rest.trim_start().len();
                let poly = parse_polynomial(rest.trim(), list, TermOrder::Rlex).map_err(|e| match e {
                    Error::Parse { column, message, .. } => CliError::parse(source, line, start + lead + column - 1, message),
                    other => CliError::parse(source, line, start + lead, other.to_string()),
                })?;
                gens.push(poly);
            }
            other => return Err(CliError::parse(source, line, col, format!("expected 'ring' or 'gen', found '{other}'"))),
        }
    }
    let names = names.ok_or_else(|| CliError::parse(source, 1, 1, "missing ring line"))?;
    let n = names.len();
    Ok(IdealFile { names, ideal: Ideal::new(n, gens) })
}

pub fn parse_ideal_file(path: &Path) -> CliResult<IdealFile> {
    parse_ideal(&read(path)?, &path.display().to_string())
}

fn ring_line(names: &[String]) -> String {
    format!("ring {} {}\n", names.len(), names.join(" "))
}

/// Generators as given: one `gen` line each, in list order.
pub fn emit_generators(names: &[String], gens: &[Polynomial]) -> String {
    let mut out = ring_line(names);
    for g in gens {
        out.push_str(&format!("gen {}\n", format_polynomial(g, names)));
    }
    out
}

/// Canonical form of a generator list: monic, zeros and duplicates dropped,
/// sorted descending by rlex leading term, ties by the full term list.
pub fn emit_ideal(names: &[String], gens: &[Polynomial]) -> String {
    let mut list: Vec<Polynomial> =
        gens.iter().filter(|g| !g.is_zero()).map(|g| g.with_order(TermOrder::Rlex).monic()).collect();
    sort_descending(&mut list, TermOrder::Rlex);
    list.dedup();
    emit_generators(names, &list)
}

/// Minimal generators, descending rlex.
pub fn emit_monomial_ideal(names: &[String], ideal: &MonomialIdeal) -> String {
    let mut out = ring_line(names);
    for g in ideal.generators() {
        out.push_str(&format!("gen {}\n", format_monomial(g, names)));
    }
    out
}

fn integers<T: std::str::FromStr>(source: &str, line: usize, tokens: &[(usize, &str)]) -> CliResult<Vec<T>> {
    let mut out = Vec::new();
    for &(col, tok) in tokens {
        let mut offset = 0;
        for part in tok.split(',') {
            if !part.is_empty() {
                let v = part
                    .parse::<T>()
                    .map_err(|_| CliError::parse(source, line, col + offset, format!("bad integer '{part}'")))?;
                out.push(v);
            }
            offset += part.len() + 1;
        }
    }
    Ok(out)
}

pub fn parse_system(text: &str, source: &str) -> CliResult<BinomialSystem> {
    let mut n: Option<usize> = None;
    let mut d: Option<u32> = None;
    let mut rho: Option<SignedExponent> = None;
    let (mut a, mut c) = (BTreeSet::new(), BTreeSet::new());
    let mut last_line = 1;
    for (line, _, tokens) in lines(text) {
        last_line = line;
        let (col, keyword) = tokens[0];
        let args = &tokens[1..];
        let single = |what: &str| -> CliResult<u64> {
            match args {
                [(c, t)] => t.parse().map_err(|_| CliError::parse(source, line, *c, format!("bad {what} '{t}'"))),
                _ => Err(CliError::parse(source, line, col, format!("{keyword} takes one value"))),
            }
        };
        let width = |got: usize| -> CliResult<()> {
            match n {
                None => Err(CliError::parse(source, line, col, "nvars must come first")),
                Some(n) if n != got => Err(CliError::parse(source, line, col, format!("expected {n} entries, found {got}"))),
                _ => Ok(()),
            }
        };
        match keyword {
            "nvars" => n = Some(single("variable count")? as usize),
            "degree" => d = Some(single("degree")? as u32),
            "rho" => {
                let v: Vec<i64> = integers(source, line, args)?;
                width(v.len())?;
                rho = Some(SignedExponent::new(v));
            }
            "A" | "C" => {
                let v: Vec<u32> = integers(source, line, args)?;
                width(v.len())?;
                let e = Exponent::new(v);
                if keyword == "A" { a.insert(e) } else { c.insert(e) };
            }
            other => {
                return Err(CliError::parse(source, line, col, format!("expected nvars, degree, rho, A or C, found '{other}'")))
            }
        }
    }
    let missing = |what: &str| CliError::parse(source, last_line, 1, format!("missing {what} line"));
    let n = n.ok_or_else(|| missing("nvars"))?;
    let d = d.ok_or_else(|| missing("degree"))?;
    let rho = rho.ok_or_else(|| missing("rho"))?;
    let report = validate_system(n, d, &a, &c, &rho);
    if !report.is_valid() {
        return Err(CliError::Core(Error::InvalidSystem(report.failures().join(", "))));
    }
    Ok(BinomialSystem::new(n, d, a, c, rho)?)
}

pub fn parse_system_file(path: &Path) -> CliResult<BinomialSystem> {
    parse_system(&read(path)?, &path.display().to_string())
}

fn spaced(e: &impl ToString) -> String {
    e.to_string().replace(',', " ")
}

/// `A` and `C` lines in descending hlex order.
pub fn emit_system(sys: &BinomialSystem) -> String {
    let mut out = format!("nvars {}\ndegree {}\nrho {}\n", sys.width(), sys.degree(), spaced(sys.rho()));
    for (tag, set) in [("A", sys.a()), ("C", sys.c())] {
        let mut list: Vec<&Exponent> = set.iter().collect();
        list.sort_by(|x, y| TermOrder::Hlex.cmp(y, x));
        for e in list {
            out.push_str(&format!("{tag} {}\n", spaced(e)));
        }
    }
    out
}

/// Chain edges; paths are relative to `base`. Each ideal file is parsed once.
pub fn parse_chain(text: &str, source: &str, base: &Path) -> CliResult<Vec<ChainEdge>> {
    let mut cache: HashMap<PathBuf, Ideal> = HashMap::new();
    let mut load = |rel: &str, line: usize, col: usize| -> CliResult<Ideal> {
        let path = base.join(rel);
        if let Some(i) = cache.get(&path) {
            return Ok(i.clone());
        }
        let ideal = match parse_ideal_file(&path) {
            Err(CliError::Io { message, .. }) => return Err(CliError::parse(source, line, col, format!("{rel}: {message}"))),
            other => other?.ideal,
        };
        cache.insert(path, ideal.clone());
        Ok(ideal)
    };
    let mut edges = Vec::new();
    for (line, _, tokens) in lines(text) {
        let (col, keyword) = tokens[0];
        match (keyword, &tokens[1..]) {
            ("ideal", [(c, path)]) => {
                load(path, line, *c)?;
            }
            ("edge", [(rc, rel), (sc, src), (tc, tgt), rest @ ..]) if rest.len() <= 1 => {
                let relation: Relation = rel.parse().map_err(|e: Error| CliError::parse(source, line, *rc, e.to_string()))?;
                let annotation = match rest {
                    [(ac, a)] => Some(a.parse::<Annotation>().map_err(|e| CliError::parse(source, line, *ac, e.to_string()))?),
                    _ => None,
                };
                edges.push(ChainEdge {
                    label: format!("{src} -> {tgt}"),
                    relation,
                    source: load(src, line, *sc)?,
                    target: load(tgt, line, *tc)?,
                    annotation,
                });
            }
            ("ideal", _) => return Err(CliError::parse(source, line, col, "usage: ideal <path>")),
            ("edge", _) => {
                return Err(CliError::parse(source, line, col, "usage: edge <relation> <source> <target> [annotation]"))
            }
            (other, _) => return Err(CliError::parse(source, line, col, format!("expected 'ideal' or 'edge', found '{other}'"))),
        }
    }
    Ok(edges)
}

pub fn parse_chain_file(path: &Path) -> CliResult<Vec<ChainEdge>> {
    let base = path.parent().unwrap_or(Path::new("."));
    parse_chain(&read(path)?, &path.display().to_string(), base)
}

/// A bracketed exponent `[0,2,1]` or a bare `0,2,1`.
pub fn parse_exponent(src: &str) -> CliResult<Exponent> {
    let inner = src.trim().trim_start_matches('[').trim_end_matches(']');
    inner.parse().map_err(|e| locate_arg(src, e))
}

pub fn parse_signed(src: &str) -> CliResult<SignedExponent> {
    let inner = src.trim().trim_start_matches('[').trim_end_matches(']');
    inner.parse().map_err(|e| locate_arg(src, e))
}

fn locate_arg(src: &str, e: Error) -> CliError {
    match e {
        Error::Parse { column, message, .. } => CliError::parse("argument", 1, column, format!("{message} in '{src}'")),
        other => CliError::Usage(other.to_string()),
    }
}

/// Whitespace-separated bracketed vectors, possibly spread over several arguments.
pub fn parse_exponent_set(args: &[String]) -> CliResult<BTreeSet<Exponent>> {
    let joined = args.join(" ");
    let mut out = BTreeSet::new();
    for part in joined.split(']').map(str::trim).filter(|s| !s.is_empty()) {
        out.insert(parse_exponent(part)?);
    }
    Ok(out)
}

/// `[a]` lines, descending hlex.
pub fn emit_exponent_set(set: &BTreeSet<Exponent>) -> String {
    let mut list: Vec<&Exponent> = set.iter().collect();
    list.sort_by(|x, y| TermOrder::Hlex.cmp(y, x));
    list.iter().map(|e| format!("[{e}]\n")).collect()
}
