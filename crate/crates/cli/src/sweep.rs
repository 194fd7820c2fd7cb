//! Exhaustive property sweep over grids of pattern bundles.
//!
//! A sweep enumerates every split quadric bundle with rank up to `n_max`,
//! per-summand degrees bounded by `deg_bound`, twist degree up to `dl_max`,
//! and every symmetric support pattern, then drives six property suites
//! against each bundle whose parameter window is nonempty:
//!
//! 1. `chamber_constancy`: the classification is constant at three interior
//!    sample points of every chamber (the tail is sampled inside the
//!    admissible window, where verdicts are chamber-wise constant).
//! 2. `semistable_slope_bound`: semistable samples satisfy
//!    `n alpha <= d <= rk(gamma) dL/2 + (n - rk(gamma)) alpha`.
//! 3. `top_chamber_underlying`: semistability in the chamber directly below
//!    `d/n` forces slope-semistability of the underlying bundle.
//! 4. `maximal_degree_rank`: at `d = n dL/2`, top-chamber semistability
//!    forces a generically nondegenerate symmetric map.
//! 5. `wall_locality`: a verdict change between adjacent chambers is
//!    witnessed by a zero-slack subobject at the separating wall.
//! 6. `alpha_independent_never_stable`: degenerate configurations are never
//!    classified stable at any sampled parameter.
//!
//! Enumeration order is fixed, all arithmetic is exact, and the randomized
//! rank probe is seeded, so a sweep is deterministic end to end.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use quadrics_core::model::Approach;
use quadrics_core::{
    PatternEntry, PatternQuadricBundle, RankOptions, Rational, StabilityClass,
};

/// Hard cap on the number of grid points a sweep may enumerate.
pub const GRID_LIMIT: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SweepError {
    #[error("grid holds {0} candidate bundles, over the limit of {GRID_LIMIT}")]
    GridTooLarge(u128),
    #[error("sweep bounds must be positive (n_max {n_max}, dl_max {dl_max})")]
    EmptyGrid { n_max: i64, dl_max: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub n_max: i64,
    pub deg_bound: i64,
    pub dl_max: i64,
    pub genus: i64,
    pub seed: u64,
}

/// Outcome of one property suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: u64,
    pub violations: u64,
    /// Up to five counterexample descriptions.
    pub examples: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport { name, checks: 0, violations: 0, examples: Vec::new() }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations += 1;
            if self.examples.len() < 5 {
                self.examples.push(describe());
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepOutcome {
    /// Bundles with a valid pattern and a nonempty parameter window.
    pub bundles_checked: u64,
    /// Valid bundles skipped because `2d > n dL` leaves no admissible alpha.
    pub infeasible_skipped: u64,
    pub suites: Vec<SuiteReport>,
}

impl SweepOutcome {
    pub fn total_violations(&self) -> u64 {
        self.suites.iter().map(|s| s.violations).sum()
    }
}

/// Number of grid points (degree tuple, twist, pattern) the config spans,
/// before any validity filtering.
pub fn grid_size(config: &SweepConfig) -> u128 {
    let degrees_per_summand = (2 * config.deg_bound + 1).max(0) as u128;
    let mut total = 0u128;
    for n in 1..=config.n_max.max(0) as u32 {
        let tuples = degrees_per_summand.pow(n);
        let patterns = 1u128 << (n * (n + 1) / 2);
        total += tuples * config.dl_max.max(0) as u128 * patterns;
    }
    total
}

/// Invokes `f` on every constructible bundle of the grid, in a fixed order:
/// rank, then twist degree, then degree tuple, then pattern bits.
pub fn enumerate_bundles(
    config: &SweepConfig,
    mut f: impl FnMut(&PatternQuadricBundle),
) -> Result<(), SweepError> {
    if config.n_max < 1 || config.dl_max < 1 {
        return Err(SweepError::EmptyGrid { n_max: config.n_max, dl_max: config.dl_max });
    }
    let size = grid_size(config);
    if size > GRID_LIMIT {
        return Err(SweepError::GridTooLarge(size));
    }
    for n in 1..=config.n_max as usize {
        let cells = n * (n + 1) / 2;
        for twist in 1..=config.dl_max {
            let mut degrees = vec![-config.deg_bound; n];
            loop {
                for bits in 0..1u64 << cells {
                    if let Ok(bundle) =
                        PatternQuadricBundle::new(config.genus, twist, degrees.clone(), pattern_from_bits(n, bits))
                    {
                        f(&bundle);
                    }
                }
                if !increment(&mut degrees, config.deg_bound) {
                    break;
                }
            }
        }
    }
    Ok(())
}

/// Upper-triangle bit assignment to a symmetric pattern, row-major over
/// `i <= j`.
pub fn pattern_from_bits(n: usize, bits: u64) -> Vec<Vec<PatternEntry>> {
    let mut grid = vec![vec![PatternEntry::Zero; n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i..n {
            if bits >> k & 1 == 1 {
                grid[i][j] = PatternEntry::Generic;
                grid[j][i] = PatternEntry::Generic;
            }
            k += 1;
        }
    }
    grid
}

fn increment(degrees: &mut [i64], bound: i64) -> bool {
    for d in degrees.iter_mut().rev() {
        if *d < bound {
            *d += 1;
            return true;
        }
        *d = -bound;
    }
    false
}

/// Deterministic random sample of constructible, feasible grid bundles.
pub fn random_bundles(config: &SweepConfig, count: usize) -> Vec<PatternQuadricBundle> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..=config.n_max) as usize;
        let degrees: Vec<i64> =
            (0..n).map(|_| rng.gen_range(-config.deg_bound..=config.deg_bound)).collect();
        let twist = rng.gen_range(1..=config.dl_max);
        let bits = rng.gen_range(0..1u64 << (n * (n + 1) / 2));
        if let Ok(bundle) =
            PatternQuadricBundle::new(config.genus, twist, degrees, pattern_from_bits(n, bits))
        {
            if bundle.params().feasible() {
                out.push(bundle);
            }
        }
    }
    out
}

/// Runs all six property suites over the whole grid.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepOutcome, SweepError> {
    let mut suites = Suites::new();
    let mut bundles_checked = 0;
    let mut infeasible_skipped = 0;
    enumerate_bundles(config, |bundle| {
        if bundle.params().feasible() {
            bundles_checked += 1;
            check_bundle(bundle, config.seed, &mut suites);
        } else {
            infeasible_skipped += 1;
        }
    })?;
    Ok(SweepOutcome { bundles_checked, infeasible_skipped, suites: suites.into_vec() })
}

pub struct Suites {
    pub chamber_constancy: SuiteReport,
    pub semistable_slope_bound: SuiteReport,
    pub top_chamber_underlying: SuiteReport,
    pub maximal_degree_rank: SuiteReport,
    pub wall_locality: SuiteReport,
    pub alpha_independent_never_stable: SuiteReport,
}

impl Suites {
    pub fn new() -> Self {
        Suites {
            chamber_constancy: SuiteReport::new("chamber_constancy"),
            semistable_slope_bound: SuiteReport::new("semistable_slope_bound"),
            top_chamber_underlying: SuiteReport::new("top_chamber_underlying"),
            maximal_degree_rank: SuiteReport::new("maximal_degree_rank"),
            wall_locality: SuiteReport::new("wall_locality"),
            alpha_independent_never_stable: SuiteReport::new("alpha_independent_never_stable"),
        }
    }

    pub fn into_vec(self) -> Vec<SuiteReport> {
        vec![
            self.chamber_constancy,
            self.semistable_slope_bound,
            self.top_chamber_underlying,
            self.maximal_degree_rank,
            self.wall_locality,
            self.alpha_independent_never_stable,
        ]
    }
}

impl Default for Suites {
    fn default() -> Self {
        Self::new()
    }
}

pub fn describe_bundle(bundle: &PatternQuadricBundle) -> String {
    let n = bundle.rank() as usize;
    let rows: Vec<String> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match bundle.entry(i, j) {
                    PatternEntry::Generic => '*',
                    PatternEntry::Zero => '0',
                })
                .collect()
        })
        .collect();
    format!(
        "n={} dL={} degrees={:?} pattern={}",
        bundle.rank(),
        bundle.twist_degree(),
        bundle.degrees(),
        rows.join("/")
    )
}

/// Interior sample points of one chamber. Bounded chambers use their three
/// quarter points. The tail is sampled at the quarter points of its overlap
/// with the admissible window `[alpha_min, first wall)`; below the window the
/// combinatorial verdict is not chamber-wise constant, so those points say
/// nothing about chambers.
fn chamber_samples(
    chamber: &quadrics_core::Chamber,
    alpha_min: Rational,
) -> Vec<Rational> {
    match chamber.interior_quarters() {
        Some(quarters) => quarters.to_vec(),
        None => {
            let upper = chamber.upper();
            if alpha_min < upper {
                let width = upper - alpha_min;
                [1, 2, 3]
                    .iter()
                    .map(|&q| alpha_min + width * Rational::new(q, 4))
                    .collect()
            } else {
                Vec::new()
            }
        }
    }
}

/// Runs every suite against one feasible bundle.
pub fn check_bundle(bundle: &PatternQuadricBundle, seed: u64, suites: &mut Suites) {
    let params = bundle.params();
    let n = bundle.rank();
    let d = bundle.degree();
    let twist = bundle.twist_degree();
    let (alpha_min, alpha_max) = params.alpha_extremes();
    let walls = params.critical_values().expect("feasible params have walls");
    let chambers = params.chambers().expect("feasible params have chambers");
    let clauses = bundle.clauses();

    let mut rank_cache: Option<i64> = None;
    let gamma_rank = |cache: &mut Option<i64>| {
        *cache.get_or_insert_with(|| {
            bundle
                .generic_rank_with(&RankOptions { seed, ..RankOptions::default() })
                .expect("default-shaped rank options are valid")
        })
    };

    // Classification at every chamber sample, retaining one class per
    // sampled chamber for the adjacency checks.
    let mut chamber_classes: Vec<Option<StabilityClass>> = Vec::with_capacity(chambers.len());
    let mut samples_by_chamber: Vec<Vec<Rational>> = Vec::with_capacity(chambers.len());
    for chamber in &chambers {
        let samples = chamber_samples(chamber, alpha_min);
        let classes: Vec<StabilityClass> =
            samples.iter().map(|&a| clauses.class(a, Approach::Exact)).collect();
        if !classes.is_empty() {
            suites.chamber_constancy.check(classes.windows(2).all(|w| w[0] == w[1]), || {
                format!(
                    "{} chamber {} classes {:?}",
                    describe_bundle(bundle),
                    chamber,
                    classes
                )
            });
        }
        chamber_classes.push(classes.first().copied());
        samples_by_chamber.push(samples);
    }

    // Slope-bound suite over every sampled parameter plus the walls.
    let wall_values: Vec<Rational> = walls.iter().map(|w| w.value).collect();
    let all_alphas = samples_by_chamber.iter().flatten().copied().chain(wall_values.iter().copied());
    for alpha in all_alphas.clone() {
        if clauses.class(alpha, Approach::Exact).is_semistable() {
            let rk = gamma_rank(&mut rank_cache);
            let lower_ok = Rational::integer(n) * alpha <= Rational::integer(d);
            let upper_ok = Rational::integer(d)
                <= Rational::new(rk * twist, 2) + Rational::integer(n - rk) * alpha;
            suites.semistable_slope_bound.check(lower_ok && upper_ok, || {
                format!(
                    "{} alpha={} rk={} fails n*alpha <= d <= rk*dL/2 + (n-rk)*alpha",
                    describe_bundle(bundle),
                    alpha,
                    rk
                )
            });
        }
    }

    // Top-chamber suites use the exact limit directly below d/n.
    let top_class = clauses.class(alpha_max, Approach::JustBelow);
    if top_class.is_semistable() {
        suites.top_chamber_underlying.check(bundle.underlying_bundle_semistable(), || {
            format!(
                "{} semistable below {} but the underlying bundle is unstable",
                describe_bundle(bundle),
                alpha_max
            )
        });
        if 2 * d == n * twist {
            let rk = gamma_rank(&mut rank_cache);
            suites.maximal_degree_rank.check(rk == n, || {
                format!(
                    "{} maximal degree, semistable below {}, generic rank {} < {}",
                    describe_bundle(bundle),
                    alpha_max,
                    rk,
                    n
                )
            });
        }
    }

    // Wall locality: compare adjacent sampled chambers across their wall.
    for (i, pair) in chamber_classes.windows(2).enumerate() {
        let (Some(left), Some(right)) = (pair[0], pair[1]) else { continue };
        let wall = chambers[i].upper();
        if left != right {
            let at_wall = clauses.classify(wall, Approach::Exact);
            let witnessed = at_wall.class.is_semistable()
                && !at_wall.witnesses.is_empty()
                && at_wall.witnesses.iter().all(|w| w.slack.is_zero());
            suites.wall_locality.check(witnessed, || {
                format!(
                    "{} change {:?} -> {:?} at wall {} lacks a zero-slack witness",
                    describe_bundle(bundle),
                    left,
                    right,
                    wall
                )
            });
        } else {
            suites.wall_locality.check(true, || unreachable!());
        }
    }

    // Degenerate configurations must never be stable at any sampled alpha.
    if clauses.alpha_independent() {
        let never_stable =
            all_alphas.clone().all(|a| clauses.class(a, Approach::Exact) != StabilityClass::Stable);
        suites.alpha_independent_never_stable.check(never_stable, || {
            format!("{} is parameter-independent yet classified stable somewhere", describe_bundle(bundle))
        });
    }
}
