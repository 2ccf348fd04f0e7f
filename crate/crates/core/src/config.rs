/// Knobs shared by the randomized and budgeted kernels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Default degree bound for Hilbert function comparisons.
    pub bound: u32,
    /// Seed for unipotent draws.
    pub seed: u64,
    /// Entries of random unipotent matrices are drawn from `1..=entropy_bound`.
    pub entropy_bound: u64,
    /// Number of additional generic draws before a certificate fails.
    pub retries: usize,
    /// Maximum number of S-pairs reduced by one Buchberger run.
    pub spair_budget: usize,
    /// Maximum number of matrices or terms produced by an enumeration.
    pub enum_budget: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            bound: 10,
            seed: 42,
            entropy_bound: 1_000_000,
            retries: 3,
            spair_budget: 200_000,
            enum_budget: 1_000_000,
        }
    }
}

impl Config {
    pub fn with_seed(&self, seed: u64) -> Config {
        Config { seed, ..self.clone() }
    }

    /// Default degree bound for an ideal in `n` variables generated up to `max_degree`.
    pub fn bound_for(&self, n: usize, max_degree: u32) -> u32 {
        self.bound.max(max_degree + n as u32 + 6)
    }
}
