//! Default bounds shared by the library and the command line.

/// Window bound `N`.
pub const DEFAULT_WINDOW: u64 = 20;
/// Prime powers `k <= K_MAX` are used for resultant obstructions.
pub const DEFAULT_K_MAX: u64 = 64;
pub const MAHLER_TOL: f64 = 1e-9;
pub const MAHLER_MAX_ITERATIONS: usize = 500;
/// Memo entries allowed in a certificate search.
pub const DEFAULT_MAX_STATES: usize = 10_000_000;
pub const MAX_STATES_ENV: &str = "GT_MAX_STATES";
/// Largest `k` tried when looking for `Δ | t^k - 1`.
pub const CYCLIC_K_CAP: u64 = 10_000;
pub const GROUP_ORDER_CAP: usize = 20_000;
pub const KRONECKER_DIM_CAP: usize = 4096;
/// Elementary ideals are only computed for at most this many generators.
pub const MINOR_GENERATOR_CAP: usize = 12;
pub const FACTOR_MAX_DEGREE: usize = 64;

/// `4 deg(h) + 16`.
pub fn default_deg_bound(deg: usize) -> usize {
    4 * deg + 16
}

/// State cap, honouring the `GT_MAX_STATES` environment variable.
pub fn max_states() -> usize {
    std::env::var(MAX_STATES_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&v: &usize| v > 0)
        .unwrap_or(DEFAULT_MAX_STATES)
}

/// Branched covers of prime-power order up to this bound feed the cover-homology screen.
pub const DEFAULT_COVER_MAX: u64 = 16;
/// Groups up to this order get a full multiplication table; larger
/// permutation groups multiply permutations directly.
pub const TABLE_ORDER_CAP: usize = 4096;
