//! Workspace configuration: defaults, then a `key = value` file, then
//! `BFORGE_SEED`, then command line flags.

use std::path::{Path, PathBuf};

use borel_forge::Config;

use crate::failure::{CliError, CliResult};

/// Read from the working directory when `--config` is absent.
pub const DEFAULT_FILE: &str = "borel-forge.toml";

pub const SEED_VAR: &str = "BFORGE_SEED";

const KEYS: [&str; 6] = ["bound", "seed", "entropy_bound", "retries", "spair_budget", "enum_budget"];

/// Command line overrides; `None` keeps the lower layer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Overrides {
    pub config: Option<PathBuf>,
    pub seed: Option<u64>,
    pub entropy_bound: Option<u64>,
    pub retries: Option<usize>,
    pub bound: Option<u32>,
}

/// Parses `key = value` lines; `#` starts a comment. Values may be quoted.
pub fn parse_config(text: &str, source: &str) -> CliResult<Config> {
    let mut cfg = Config::default();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() || line.trim_start().starts_with('[') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::parse(source, k + 1, 1, "expected key = value"));
        };
        let column = raw.find('=').map_or(1, |p| p + 2);
        let key = key.trim();
        let value = value.trim().trim_matches('"');
        let bad = |what: &str| CliError::parse(source, k + 1, column, format!("{key}: {what}"));
        let positive = |v: &str| -> CliResult<u64> {
            match v.replace('_', "").parse::<u64>() {
                Ok(0) => Err(bad("must be positive")),
                Ok(x) => Ok(x),
                Err(_) => Err(bad("not a nonnegative integer")),
            }
        };
        match key {
            "bound" => cfg.bound = u32::try_from(positive(value)?).map_err(|_| bad("too large"))?,
            "seed" => cfg.seed = value.replace('_', "").parse().map_err(|_| bad("not a u64"))?,
            "entropy_bound" => cfg.entropy_bound = positive(value)?,
            "retries" => cfg.retries = value.parse().map_err(|_| bad("not a nonnegative integer"))?,
            "spair_budget" => cfg.spair_budget = positive(value)? as usize,
            "enum_budget" => cfg.enum_budget = positive(value)? as usize,
            _ => {
                let col = raw.find(key).map_or(1, |p| p + 1);
                return Err(CliError::parse(source, k + 1, col, format!("unknown key '{key}', expected one of {KEYS:?}")));
            }
        }
    }
    Ok(cfg)
}

/// Every key, one per line, in a form [`parse_config`] reads back unchanged.
pub fn render_config(cfg: &Config) -> String {
    format!(
        "bound = {}\nseed = {}\nentropy_bound = {}\nretries = {}\nspair_budget = {}\nenum_budget = {}\n",
        cfg.bound, cfg.seed, cfg.entropy_bound, cfg.retries, cfg.spair_budget, cfg.enum_budget
    )
}

/// Layers the configuration sources. `env_seed` is the value of [`SEED_VAR`], if set.
pub fn resolve(over: &Overrides, env_seed: Option<&str>, cwd: &Path) -> CliResult<Config> {
    let file = match &over.config {
        Some(p) => Some(p.clone()),
        None => Some(cwd.join(DEFAULT_FILE)).filter(|p| p.is_file()),
    };
    let mut cfg = match file {
        Some(p) => {
            let shown = p.display().to_string();
            let text = std::fs::read_to_string(&p).map_err(|e| CliError::Io { path: shown.clone(), message: e.to_string() })?;
            parse_config(&text, &shown)?
        }
        None => Config::default(),
    };
    if let Some(s) = env_seed {
        cfg.seed = s.trim().parse().map_err(|_| CliError::Usage(format!("{SEED_VAR}={s} is not a u64")))?;
    }
    if let Some(s) = over.seed {
        cfg.seed = s;
    }
    if let Some(e) = over.entropy_bound {
        if e == 0 {
            return Err(CliError::Usage("--entropy-bound must be positive".into()));
        }
        cfg.entropy_bound = e;
    }
    if let Some(r) = over.retries {
        cfg.retries = r;
    }
    if let Some(b) = over.bound {
        if b == 0 {
            return Err(CliError::Usage("--bound must be positive".into()));
        }
        cfg.bound = b;
    }
    Ok(cfg)
}
