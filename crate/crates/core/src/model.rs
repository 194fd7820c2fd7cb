//! Combinatorial model of split quadric bundles and the full stability test.
//!
//! The model fixes `V = L_1 ⊕ ... ⊕ L_n` (line bundles of known degrees) and
//! records of the symmetric map `gamma` only its support pattern: which
//! entries `gamma_ij` are identically zero and which are sections in general
//! position. A `Generic` entry is only allowed when a nonzero section can
//! exist at all, i.e. when `dL - deg L_i - deg L_j >= 0`.
//!
//! Stability at parameter `alpha` is tested literally over every coordinate
//! subbundle `V' = ⊕_{i∈I} L_i` and every coordinate two-step filtration
//! `V' ⊂ V''`. How `gamma` meets a subbundle picks the inequality:
//!
//! * not isotropic (the `I×I` block has a generic entry):
//!   `deg V' <= d + alpha (rk V' - n)`;
//! * isotropic (the `I×I` block vanishes but some row of `I` does not):
//!   `deg V' <= d/2 + alpha (rk V' - n/2)`;
//! * annihilated (`gamma(V') = 0`, all rows of `I` vanish):
//!   `deg V' <= alpha rk V'`;
//! * filtration (`gamma(V')` kills `V''` and `gamma(V'')` does not):
//!   `deg V' + deg V'' <= d + alpha (rk V' + rk V'' - n)`;
//!
//! plus the overall gate `alpha <= d/n`. Every slack is an affine function of
//! `alpha` with half-integer coefficients, so verdicts are computed exactly,
//! including the one-sided limit verdicts "just below" and "just above" a
//! given parameter value that chamber reports rely on.
//!
//! The verdict is for the coordinate model: a sound necessary condition for
//! stability of the generic split bundle. Non-coordinate subsheaves are out
//! of scope, and below the lower window bound of `params` the per-bundle
//! verdict may change off the wall set; chamber-level reports sample
//! accordingly.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::params::ModuliParams;
use crate::rational::Rational;

/// Upper bound on the number of summands. Subset enumeration is exponential
/// in the rank, so the model is only meant for small ranks; 16 keeps every
/// subset in a `u32` and classification affordable.
pub const MAX_RANK: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("genus must be at least 2 (got {0})")]
    GenusOutOfRange(i64),
    #[error("bundle needs at least one summand")]
    EmptyBundle,
    #[error("rank {0} exceeds the supported maximum {MAX_RANK}")]
    RankTooLarge(usize),
    #[error("pattern row {row} has {got} entries, expected {expected}")]
    RaggedPattern { row: usize, got: usize, expected: usize },
    #[error("pattern is not symmetric at entry ({0}, {1})")]
    AsymmetricPattern(usize, usize),
    #[error(
        "generic entry ({i}, {j}) impossible: twist degree {twist} < {di} + {dj} = deg L_{i} + deg L_{j}"
    )]
    InfeasibleEntry { i: usize, j: usize, twist: i64, di: i64, dj: i64 },
    #[error("pattern has no generic entry (the symmetric map would be zero)")]
    ZeroPattern,
    #[error("subset must be nonempty and proper")]
    InvalidSubset,
    #[error("rank probe needs a sample set of size >= 2^30 (got modulus {0})")]
    FieldTooSmall(u64),
    #[error("rank probe needs at least one trial")]
    NoTrials,
}

/// One entry of the support pattern of the symmetric map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternEntry {
    Zero,
    Generic,
}

/// A set of summand indices, i.e. a coordinate subbundle `⊕_{i∈I} L_i`.
///
/// Stored as a bitmask over 0-based indices; displayed and serialized with
/// the 1-based numbering used everywhere in output (`{1,3}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SummandSet(u32);

impl SummandSet {
    pub fn from_mask(mask: u32) -> Self {
        SummandSet(mask)
    }

    /// Builds from 0-based indices.
    pub fn from_indices(indices: &[usize]) -> Self {
        let mut mask = 0u32;
        for &i in indices {
            assert!(i < MAX_RANK, "summand index {i} out of range");
            mask |= 1 << i;
        }
        SummandSet(mask)
    }

    pub fn mask(&self) -> u32 {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0 >> index & 1 == 1
    }

    pub fn is_subset_of(&self, other: SummandSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// 0-based member indices, ascending.
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_RANK).filter(move |&i| self.contains(i))
    }
}

impl fmt::Display for SummandSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.members().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

impl Serialize for SummandSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for i in self.members() {
            seq.serialize_element(&(i + 1))?;
        }
        seq.end()
    }
}

/// A coordinate subbundle, or a coordinate filtration when `extension` is
/// present (`summands ⊊ extension`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CoordinateSubobject {
    pub summands: SummandSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extension: Option<SummandSet>,
}

impl fmt::Display for CoordinateSubobject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.extension {
            None => write!(f, "{}", self.summands),
            Some(ext) => write!(f, "{} in {}", self.summands, ext),
        }
    }
}

/// Which stability inequality applies to a subobject.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    /// `gamma(V')` is not contained in the annihilator of `V'`.
    NonIsotropic,
    /// `gamma(V')` lands in the annihilator of `V'` (isotropic subbundle).
    Isotropic,
    /// `gamma(V') = 0`.
    Annihilated,
    /// Two-step filtration clause.
    Filtration,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Clause::NonIsotropic => "non-isotropic",
            Clause::Isotropic => "isotropic",
            Clause::Annihilated => "annihilated",
            Clause::Filtration => "filtration",
        };
        f.write_str(name)
    }
}

/// Overall classification at one parameter value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StabilityClass {
    Unstable,
    StrictlySemistable,
    Polystable,
    Stable,
}

impl StabilityClass {
    pub fn is_semistable(&self) -> bool {
        !matches!(self, StabilityClass::Unstable)
    }
}

impl fmt::Display for StabilityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            StabilityClass::Unstable => "unstable",
            StabilityClass::StrictlySemistable => "strictly semistable",
            StabilityClass::Polystable => "polystable",
            StabilityClass::Stable => "stable",
        };
        f.write_str(name)
    }
}

/// A subobject together with the clause it triggered and the exact slack
/// (right-hand side minus left-hand side) of that clause at the evaluated
/// parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub subobject: CoordinateSubobject,
    pub clause: Clause,
    pub slack: Rational,
}

/// Result of a stability test. `witnesses` holds every violated clause for
/// `Unstable`, and every zero-slack clause for the two semistable-but-not-
/// stable classes; it is empty for `Stable`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityVerdict {
    pub class: StabilityClass,
    pub witnesses: Vec<Witness>,
    pub alpha_independent: bool,
    /// Set when instability comes from the parameter gate `alpha > d/n`
    /// rather than from a subobject.
    pub alpha_above_slope: bool,
}

/// Where to evaluate: exactly at `alpha`, or as the exact one-sided limit on
/// an infinitesimal interval next to it. The limits are what a chamber's
/// interior looks like next to a wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Approach {
    Exact,
    JustBelow,
    JustAbove,
}

/// A split quadric bundle given by summand degrees and the support pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternQuadricBundle {
    genus: i64,
    twist_degree: i64,
    degrees: Vec<i64>,
    /// Bit `j` of `rows[i]` is set when entry `(i, j)` is generic.
    rows: Vec<u32>,
}

impl PatternQuadricBundle {
    pub fn new(
        genus: i64,
        twist_degree: i64,
        degrees: Vec<i64>,
        pattern: Vec<Vec<PatternEntry>>,
    ) -> Result<Self, ModelError> {
        if genus < 2 {
            return Err(ModelError::GenusOutOfRange(genus));
        }
        let n = degrees.len();
        if n == 0 {
            return Err(ModelError::EmptyBundle);
        }
        if n > MAX_RANK {
            return Err(ModelError::RankTooLarge(n));
        }
        if pattern.len() != n {
            return Err(ModelError::RaggedPattern { row: 0, got: pattern.len(), expected: n });
        }
        for (i, row) in pattern.iter().enumerate() {
            if row.len() != n {
                return Err(ModelError::RaggedPattern { row: i + 1, got: row.len(), expected: n });
            }
        }
        let mut rows = vec![0u32; n];
        for i in 0..n {
            for j in 0..n {
                if pattern[i][j] != pattern[j][i] {
                    return Err(ModelError::AsymmetricPattern(i + 1, j + 1));
                }
                if pattern[i][j] == PatternEntry::Generic {
                    if twist_degree - degrees[i] - degrees[j] < 0 {
                        return Err(ModelError::InfeasibleEntry {
                            i: i + 1,
                            j: j + 1,
                            twist: twist_degree,
                            di: degrees[i],
                            dj: degrees[j],
                        });
                    }
                    rows[i] |= 1 << j;
                }
            }
        }
        if rows.iter().all(|&r| r == 0) {
            return Err(ModelError::ZeroPattern);
        }
        Ok(PatternQuadricBundle { genus, twist_degree, degrees, rows })
    }

    pub fn rank(&self) -> i64 {
        self.degrees.len() as i64
    }

    pub fn degree(&self) -> i64 {
        self.degrees.iter().sum()
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn twist_degree(&self) -> i64 {
        self.twist_degree
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn entry(&self, i: usize, j: usize) -> PatternEntry {
        if self.rows[i] >> j & 1 == 1 {
            PatternEntry::Generic
        } else {
            PatternEntry::Zero
        }
    }

    pub fn params(&self) -> ModuliParams {
        ModuliParams::new(self.genus, self.rank(), self.degree(), self.twist_degree)
            .expect("bundle invariants imply valid params")
    }

    fn full_mask(&self) -> u32 {
        (1u32 << self.degrees.len()) - 1
    }

    fn subset_degree(&self, mask: u32) -> i64 {
        let mut sum = 0;
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            sum += self.degrees[i];
            bits &= bits - 1;
        }
        sum
    }

    /// True when the `a × b` block of the pattern is entirely zero.
    fn block_is_zero(&self, a: u32, b: u32) -> bool {
        let mut bits = a;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            if self.rows[i] & b != 0 {
                return false;
            }
            bits &= bits - 1;
        }
        true
    }

    fn class_of_mask(&self, mask: u32) -> Clause {
        if !self.block_is_zero(mask, mask) {
            Clause::NonIsotropic
        } else if self.block_is_zero(mask, self.full_mask()) {
            Clause::Annihilated
        } else {
            Clause::Isotropic
        }
    }

    /// How `gamma` meets the coordinate subbundle `I`: the clause that
    /// governs it in the stability test.
    pub fn subobject_class(&self, subset: SummandSet) -> Result<Clause, ModelError> {
        let mask = subset.mask();
        if mask == 0 || mask & !self.full_mask() != 0 || mask == self.full_mask() {
            return Err(ModelError::InvalidSubset);
        }
        Ok(self.class_of_mask(mask))
    }

    /// Precomputes every clause of the stability test as an affine function
    /// of the parameter. Build once per bundle when classifying at many
    /// parameter values.
    pub fn clauses(&self) -> ClauseSet {
        let n = self.rank();
        let d = self.degree();
        let full = self.full_mask();
        let mut records = Vec::new();

        for mask in 1..full {
            let set = SummandSet::from_mask(mask);
            let k = set.len() as i64;
            let deg = self.subset_degree(mask);
            let clause = self.class_of_mask(mask);
            let complement = full & !mask;
            // Slack as (c0 + c1*alpha) / 2.
            let (c0, c1, decomposes) = match clause {
                Clause::NonIsotropic => (
                    2 * (d - deg),
                    2 * (k - n),
                    self.block_is_zero(mask, complement)
                        && self.block_is_zero(complement, complement),
                ),
                Clause::Isotropic => {
                    (d - 2 * deg, 2 * k - n, self.block_is_zero(complement, complement))
                }
                Clause::Annihilated => (-2 * deg, 2 * k, true),
                Clause::Filtration => unreachable!("subsets never carry the filtration clause"),
            };
            records.push(ClauseRecord {
                subobject: CoordinateSubobject { summands: set, extension: None },
                clause,
                c0,
                c1,
                decomposes,
            });
        }

        for big in 1..full {
            if self.block_is_zero(big, big) {
                continue;
            }
            // Rows inside `big` that annihilate all of `big`; any nonempty
            // subset of these is a valid first filtration step.
            let mut pool = 0u32;
            let mut bits = big;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                if self.rows[i] & big == 0 {
                    pool |= 1 << i;
                }
                bits &= bits - 1;
            }
            let outside = full & !big;
            let mut sub = pool;
            while sub != 0 {
                let sub_set = SummandSet::from_mask(sub);
                let big_set = SummandSet::from_mask(big);
                let k_sum = sub_set.len() as i64 + big_set.len() as i64;
                let deg_sum = self.subset_degree(sub) + self.subset_degree(big);
                // Equality decomposes when the middle step detaches from the
                // outside and the outside is itself annihilated.
                let decomposes = self.block_is_zero(big & !sub, outside)
                    && self.block_is_zero(outside, outside);
                records.push(ClauseRecord {
                    subobject: CoordinateSubobject {
                        summands: sub_set,
                        extension: Some(big_set),
                    },
                    clause: Clause::Filtration,
                    c0: 2 * (d - deg_sum),
                    c1: 2 * (k_sum - n),
                    decomposes,
                });
                sub = (sub - 1) & pool;
            }
        }

        records.sort_by_key(|r| (r.subobject.summands, r.subobject.extension, r.clause));

        let alpha_independent = self.alpha_independent_scan(&records);
        ClauseSet { rank: n, degree: d, alpha_independent, records }
    }

    fn alpha_independent_scan(&self, records: &[ClauseRecord]) -> bool {
        let n = self.rank();
        let d = self.degree();
        if n % 2 == 0 && d % 2 == 0 {
            let full = self.full_mask();
            for mask in 1..full {
                if 2 * (mask.count_ones() as i64) == n
                    && 2 * self.subset_degree(mask) == d
                    && self.block_is_zero(mask, mask)
                {
                    return true;
                }
            }
        }
        // Filtration configurations with rank sum n and degree sum d are
        // exactly the filtration clauses whose slack vanishes identically.
        records
            .iter()
            .any(|r| r.clause == Clause::Filtration && r.c0 == 0 && r.c1 == 0)
    }

    /// True when the configuration forces strict semistability at every
    /// parameter value.
    pub fn is_alpha_independent(&self) -> bool {
        self.clauses().alpha_independent
    }

    /// Full stability test at `alpha`.
    pub fn classify(&self, alpha: Rational) -> StabilityVerdict {
        self.clauses().classify(alpha, Approach::Exact)
    }

    /// Exact verdict on an infinitesimal interval `(alpha - eps, alpha)`.
    pub fn classify_just_below(&self, alpha: Rational) -> StabilityVerdict {
        self.clauses().classify(alpha, Approach::JustBelow)
    }

    /// Exact verdict on an infinitesimal interval `(alpha, alpha + eps)`.
    pub fn classify_just_above(&self, alpha: Rational) -> StabilityVerdict {
        self.clauses().classify(alpha, Approach::JustAbove)
    }

    /// Slope inequalities for the underlying vector bundle alone. For split
    /// bundles the Harder-Narasimhan filtration is by coordinate subbundles,
    /// so it suffices to compare each top-k degree sum against k·d/n.
    pub fn underlying_bundle_semistable(&self) -> bool {
        let n = self.rank();
        let d = self.degree();
        let mut sorted = self.degrees.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut prefix = 0;
        for k in 1..n {
            prefix += sorted[(k - 1) as usize];
            if n * prefix > k * d {
                return false;
            }
        }
        true
    }

    /// Rank of a symmetric matrix supported on the pattern with entries in
    /// general position, by randomized instantiation with the default probe.
    pub fn generic_rank(&self) -> i64 {
        self.generic_rank_with(&RankOptions::default())
            .expect("default rank options are valid")
    }

    /// As [`generic_rank`](Self::generic_rank) with explicit seed, trial
    /// count, and field size. The per-call stream is derived from the seed
    /// and the bundle data, so results are reproducible and independent of
    /// call order.
    pub fn generic_rank_with(&self, options: &RankOptions) -> Result<i64, ModelError> {
        if options.modulus < 1 << 30 {
            return Err(ModelError::FieldTooSmall(options.modulus));
        }
        if options.trials == 0 {
            return Err(ModelError::NoTrials);
        }
        let n = self.degrees.len();
        let p = options.modulus;

        let mut h = options.seed;
        let mut absorb = |w: u64| h = splitmix64(h ^ w);
        absorb(n as u64);
        absorb(self.twist_degree as u64);
        absorb(self.genus as u64);
        for &a in &self.degrees {
            absorb(a as u64);
        }
        for &r in &self.rows {
            absorb(r as u64);
        }
        drop(absorb);
        let mut rng = ChaCha8Rng::seed_from_u64(h);

        let mut best = 0;
        for _ in 0..options.trials {
            let mut m = vec![0u64; n * n];
            for i in 0..n {
                for j in i..n {
                    if self.rows[i] >> j & 1 == 1 {
                        let v = rng.gen_range(1..p);
                        m[i * n + j] = v;
                        m[j * n + i] = v;
                    }
                }
            }
            best = best.max(rank_mod_p(&mut m, n, p));
        }
        Ok(best as i64)
    }
}

/// Configuration of the randomized rank probe. `modulus` must be a prime of
/// at least `2^30`; the default is the prime `2^31 - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankOptions {
    pub seed: u64,
    pub trials: u32,
    pub modulus: u64,
}

impl Default for RankOptions {
    fn default() -> Self {
        RankOptions { seed: 0, trials: 8, modulus: (1 << 31) - 1 }
    }
}

#[derive(Debug, Clone, Copy)]
struct ClauseRecord {
    subobject: CoordinateSubobject,
    clause: Clause,
    /// Slack = (c0 + c1 * alpha) / 2, exactly.
    c0: i64,
    c1: i64,
    /// Whether equality in this clause admits the block decomposition that
    /// polystability requires (a parameter-free pattern property).
    decomposes: bool,
}

/// Every clause of the stability test for one bundle, with slacks as affine
/// functions of the parameter. Reusable across many parameter values.
#[derive(Debug, Clone)]
pub struct ClauseSet {
    rank: i64,
    degree: i64,
    alpha_independent: bool,
    records: Vec<ClauseRecord>,
}

impl ClauseSet {
    pub fn classify(&self, alpha: Rational, approach: Approach) -> StabilityVerdict {
        let p = alpha.numer() as i128;
        let q = alpha.denom() as i128;

        // Gate alpha <= d/n, with the limit reading: just above d/n is
        // already outside.
        let gate = (self.degree as i128) * q - (self.rank as i128) * p;
        let gate_ok = match approach {
            Approach::Exact | Approach::JustBelow => gate >= 0,
            Approach::JustAbove => gate > 0,
        };
        if !gate_ok {
            return StabilityVerdict {
                class: StabilityClass::Unstable,
                witnesses: Vec::new(),
                alpha_independent: self.alpha_independent,
                alpha_above_slope: true,
            };
        }

        let mut violations = Vec::new();
        let mut ties = Vec::new();
        let mut all_ties_decompose = true;
        for record in &self.records {
            let value = record.c0 as i128 * q + record.c1 as i128 * p;
            let sign = match approach {
                Approach::Exact => value.signum(),
                // Just below alpha the slack moves by -slope * eps.
                Approach::JustBelow => {
                    if value != 0 {
                        value.signum()
                    } else {
                        -(record.c1.signum() as i128)
                    }
                }
                Approach::JustAbove => {
                    if value != 0 {
                        value.signum()
                    } else {
                        record.c1.signum() as i128
                    }
                }
            };
            match sign.cmp(&0) {
                std::cmp::Ordering::Less => violations.push(record.witness(p, q)),
                std::cmp::Ordering::Equal => {
                    all_ties_decompose &= record.decomposes;
                    ties.push(record.witness(p, q));
                }
                std::cmp::Ordering::Greater => {}
            }
        }

        if !violations.is_empty() {
            return StabilityVerdict {
                class: StabilityClass::Unstable,
                witnesses: violations,
                alpha_independent: self.alpha_independent,
                alpha_above_slope: false,
            };
        }
        if ties.is_empty() {
            return StabilityVerdict {
                class: StabilityClass::Stable,
                witnesses: Vec::new(),
                alpha_independent: self.alpha_independent,
                alpha_above_slope: false,
            };
        }
        StabilityVerdict {
            class: if all_ties_decompose {
                StabilityClass::Polystable
            } else {
                StabilityClass::StrictlySemistable
            },
            witnesses: ties,
            alpha_independent: self.alpha_independent,
            alpha_above_slope: false,
        }
    }

    /// Class only, skipping witness construction. Same decision procedure as
    /// [`classify`](Self::classify).
    pub fn class(&self, alpha: Rational, approach: Approach) -> StabilityClass {
        let p = alpha.numer() as i128;
        let q = alpha.denom() as i128;
        let gate = (self.degree as i128) * q - (self.rank as i128) * p;
        let gate_ok = match approach {
            Approach::Exact | Approach::JustBelow => gate >= 0,
            Approach::JustAbove => gate > 0,
        };
        if !gate_ok {
            return StabilityClass::Unstable;
        }
        let mut tie = false;
        let mut all_ties_decompose = true;
        for record in &self.records {
            let value = record.c0 as i128 * q + record.c1 as i128 * p;
            let sign = match approach {
                Approach::Exact => value.signum(),
                Approach::JustBelow => {
                    if value != 0 {
                        value.signum()
                    } else {
                        -(record.c1.signum() as i128)
                    }
                }
                Approach::JustAbove => {
                    if value != 0 {
                        value.signum()
                    } else {
                        record.c1.signum() as i128
                    }
                }
            };
            if sign < 0 {
                return StabilityClass::Unstable;
            }
            if sign == 0 {
                tie = true;
                all_ties_decompose &= record.decomposes;
            }
        }
        if !tie {
            StabilityClass::Stable
        } else if all_ties_decompose {
            StabilityClass::Polystable
        } else {
            StabilityClass::StrictlySemistable
        }
    }

    pub fn alpha_independent(&self) -> bool {
        self.alpha_independent
    }
}

impl ClauseRecord {
    fn witness(&self, p: i128, q: i128) -> Witness {
        let num = self.c0 as i128 * q + self.c1 as i128 * p;
        let den = 2 * q;
        debug_assert!(i64::try_from(num).is_ok() && i64::try_from(den).is_ok());
        Witness {
            subobject: self.subobject,
            clause: self.clause,
            slack: Rational::new(num as i64, den as i64),
        }
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Gaussian elimination over the prime field F_p.
fn rank_mod_p(m: &mut [u64], n: usize, p: u64) -> usize {
    let mut rank = 0;
    for col in 0..n {
        let pivot = (rank..n).find(|&r| m[r * n + col] % p != 0);
        let Some(pivot) = pivot else { continue };
        for j in 0..n {
            m.swap(pivot * n + j, rank * n + j);
        }
        let inv = pow_mod(m[rank * n + col], p - 2, p);
        for j in col..n {
            m[rank * n + j] = mul_mod(m[rank * n + j], inv, p);
        }
        for r in (rank + 1)..n {
            let factor = m[r * n + col] % p;
            if factor == 0 {
                continue;
            }
            for j in col..n {
                let sub = mul_mod(factor, m[rank * n + j], p);
                m[r * n + j] = (m[r * n + j] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == n {
            break;
        }
    }
    rank
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}
