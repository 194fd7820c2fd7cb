//! Parameter space of the stability condition: feasibility bounds, candidate
//! walls, and the chamber decomposition.
//!
//! For fixed `(n, d, dL)` the stability parameter `alpha` ranges over
//! `(-inf, d/n]`, and the stability condition can only change at finitely many
//! rational walls. Each wall candidate arises from a subobject equality of one
//! of four shapes, or from the slope bound `d/n` itself, and every candidate
//! lies in the window `[alpha_min, alpha_max]` with
//!
//! ```text
//! alpha_min = d - (n - 1) * dL / 2,        alpha_max = d / n.
//! ```
//!
//! Walls are enumerated by solving, per witness family, the exact integer
//! degree range whose value lands in that window; everything is exact rational
//! arithmetic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamsError {
    #[error("genus must be at least 2 (got {0})")]
    GenusOutOfRange(i64),
    #[error("bundle rank must be at least 1 (got {0})")]
    InvalidRank(i64),
    #[error("infeasible parameters: {0}")]
    InfeasibleParams(String),
    #[error("gamma rank out of range: {0}")]
    RankOutOfRange(String),
}

/// Numeric invariants of a moduli problem: curve genus, bundle rank `n`,
/// bundle degree `d`, and the degree `dL` of the twisting line bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ModuliParams {
    genus: i64,
    rank: i64,
    degree: i64,
    twist_degree: i64,
}

impl ModuliParams {
    pub fn new(genus: i64, rank: i64, degree: i64, twist_degree: i64) -> Result<Self, ParamsError> {
        if genus < 2 {
            return Err(ParamsError::GenusOutOfRange(genus));
        }
        if rank < 1 {
            return Err(ParamsError::InvalidRank(rank));
        }
        Ok(ModuliParams { genus, rank, degree, twist_degree })
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn twist_degree(&self) -> i64 {
        self.twist_degree
    }

    /// A nonzero symmetric map can only exist when `d <= n * dL / 2`.
    pub fn feasible(&self) -> bool {
        2 * self.degree <= self.rank * self.twist_degree
    }

    fn require_feasible(&self) -> Result<(), ParamsError> {
        if self.feasible() {
            Ok(())
        } else {
            Err(ParamsError::InfeasibleParams(format!(
                "degree {} exceeds rank*twist/2 = {}",
                self.degree,
                Rational::new(self.rank * self.twist_degree, 2)
            )))
        }
    }

    /// The window `[alpha_min, alpha_max]` containing every candidate wall:
    /// `alpha_min = d - (n-1) dL / 2` and `alpha_max = d / n`. The window is
    /// nonempty exactly when the parameters are feasible.
    pub fn alpha_extremes(&self) -> (Rational, Rational) {
        let alpha_min = Rational::new(2 * self.degree - (self.rank - 1) * self.twist_degree, 2);
        let alpha_max = Rational::new(self.degree, self.rank);
        (alpha_min, alpha_max)
    }

    /// Every candidate wall in `[alpha_min, alpha_max]`, sorted increasing,
    /// deduplicated by value with all witnesses retained. The slope bound
    /// `d/n` is always present.
    pub fn critical_values(&self) -> Result<Vec<CriticalValue>, ParamsError> {
        self.require_feasible()?;
        let n = self.rank;
        let d = self.degree;
        let (lo, hi) = self.alpha_extremes();

        let mut found: BTreeMap<Rational, BTreeSet<Provenance>> = BTreeMap::new();
        found
            .entry(Rational::new(d, n))
            .or_default()
            .insert(Provenance::Top);

        for sub_rank in 1..n {
            // deg V' = d' with gamma(V') not contained in the annihilator:
            // value (d - d') / (n - n').
            for sub_degree in integer_solutions(d, n - sub_rank, lo, hi) {
                let value = Rational::new(d - sub_degree, n - sub_rank);
                found
                    .entry(value)
                    .or_default()
                    .insert(Provenance::NonIsotropic { sub_rank, sub_degree });
            }

            // Isotropic V': value (d - 2d') / (n - 2n'), undefined at n = 2n'.
            if n != 2 * sub_rank {
                let (t_lo, t_hi) = solution_interval(d, n - 2 * sub_rank, lo, hi);
                let first = (t_lo / Rational::integer(2)).ceil();
                let last = (t_hi / Rational::integer(2)).floor();
                for sub_degree in first..=last {
                    let value = Rational::new(d - 2 * sub_degree, n - 2 * sub_rank);
                    found
                        .entry(value)
                        .or_default()
                        .insert(Provenance::Isotropic { sub_rank, sub_degree });
                }
            }

            // gamma(V') = 0: value d' / n'.
            let first = (Rational::integer(sub_rank) * lo).ceil();
            let last = (Rational::integer(sub_rank) * hi).floor();
            for sub_degree in first..=last {
                let value = Rational::new(sub_degree, sub_rank);
                found
                    .entry(value)
                    .or_default()
                    .insert(Provenance::Annihilated { sub_rank, sub_degree });
            }
        }

        for sub_rank in 1..n {
            for mid_rank in (sub_rank + 1)..n {
                if sub_rank + mid_rank == n {
                    continue;
                }
                // Two-step filtration: value (d - d' - d'') / (n - n' - n'').
                for degree_sum in integer_solutions(d, n - sub_rank - mid_rank, lo, hi) {
                    let value = Rational::new(d - degree_sum, n - sub_rank - mid_rank);
                    found.entry(value).or_default().insert(Provenance::Filtration {
                        sub_rank,
                        mid_rank,
                        degree_sum,
                    });
                }
            }
        }

        Ok(found
            .into_iter()
            .map(|(value, witnesses)| CriticalValue {
                value,
                witnesses: witnesses.into_iter().collect(),
            })
            .collect())
    }

    /// The chamber decomposition of the parameter line: the unbounded tail
    /// below the first wall, then the open interval between each pair of
    /// consecutive walls, ending at `alpha_max`. Between walls the stability
    /// condition cannot change; below `alpha_min` the moduli spaces are all
    /// identified with one another.
    pub fn chambers(&self) -> Result<Vec<Chamber>, ParamsError> {
        let walls = self.critical_values()?;
        let mut out = Vec::with_capacity(walls.len());
        out.push(Chamber::Tail { upper: walls[0].value });
        for pair in walls.windows(2) {
            out.push(Chamber::Interval { lower: pair[0].value, upper: pair[1].value });
        }
        Ok(out)
    }

    /// Largest `r` such that `r * dL / 2 + (n - r) * alpha <= d`: every point
    /// of the moduli space at `alpha` then has `rank(gamma) >= r`.
    ///
    /// Requires `alpha <= dL / 2` and `n * alpha <= d <= n * dL / 2`.
    pub fn minimum_gamma_rank(&self, alpha: Rational) -> Result<i64, ParamsError> {
        self.require_feasible()?;
        if alpha > Rational::new(self.twist_degree, 2) {
            return Err(ParamsError::InfeasibleParams(format!(
                "alpha {alpha} exceeds twist/2 = {}",
                Rational::new(self.twist_degree, 2)
            )));
        }
        let d = Rational::integer(self.degree);
        if Rational::integer(self.rank) * alpha > d {
            return Err(ParamsError::InfeasibleParams(format!(
                "rank*alpha = {} exceeds degree {}",
                Rational::integer(self.rank) * alpha,
                self.degree
            )));
        }
        for r in (0..=self.rank).rev() {
            let threshold =
                Rational::new(r * self.twist_degree, 2) + Rational::integer(self.rank - r) * alpha;
            if threshold <= d {
                return Ok(r);
            }
        }
        unreachable!("r = 0 threshold is n*alpha <= d, checked above");
    }
}

/// Closed degree interval `[n*alpha, r*dL/2 + (n-r)*alpha]` that the bundle
/// degree must lie in when `gamma` has rank `r` at parameter `alpha`. May be
/// empty, meaning no such bundle is stable for any flavor of the condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeWindow {
    pub lower: Rational,
    pub upper: Rational,
}

impl DegreeWindow {
    pub fn is_empty(&self) -> bool {
        self.lower > self.upper
    }
}

/// Degree bounds forced by `rank(gamma) = gamma_rank` at parameter `alpha`.
pub fn degree_window(
    rank: i64,
    twist_degree: i64,
    alpha: Rational,
    gamma_rank: i64,
) -> Result<DegreeWindow, ParamsError> {
    if rank < 1 {
        return Err(ParamsError::RankOutOfRange(format!(
            "bundle rank {rank} must be at least 1"
        )));
    }
    if gamma_rank < 0 || gamma_rank > rank {
        return Err(ParamsError::RankOutOfRange(format!(
            "gamma rank {gamma_rank} not in 0..={rank}"
        )));
    }
    Ok(DegreeWindow {
        lower: Rational::integer(rank) * alpha,
        upper: Rational::new(gamma_rank * twist_degree, 2)
            + Rational::integer(rank - gamma_rank) * alpha,
    })
}

/// Witness explaining why a value is a candidate wall. `sub_rank`/`sub_degree`
/// are the rank and degree of the destabilizing subbundle; the filtration form
/// only constrains the sum of the two subbundle degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    /// The slope bound `alpha = d/n`.
    Top,
    /// `gamma(V')` not contained in the annihilator of `V'`:
    /// `alpha = (d - d') / (n - n')`.
    NonIsotropic { sub_rank: i64, sub_degree: i64 },
    /// `gamma(V')` contained in the annihilator of `V'`:
    /// `alpha = (d - 2d') / (n - 2n')`.
    Isotropic { sub_rank: i64, sub_degree: i64 },
    /// `gamma(V') = 0`: `alpha = d' / n'`.
    Annihilated { sub_rank: i64, sub_degree: i64 },
    /// Two-step filtration `V' ⊂ V''`:
    /// `alpha = (d - d' - d'') / (n - n' - n'')`.
    Filtration { sub_rank: i64, mid_rank: i64, degree_sum: i64 },
}

/// A candidate wall: the exact parameter value and every witness producing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalValue {
    pub value: Rational,
    pub witnesses: Vec<Provenance>,
}

/// One chamber of the parameter line. Stability is constant on the interior
/// of each bounded chamber; the tail is additionally cut at `alpha_min`, below
/// which all moduli spaces are identified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Chamber {
    /// `(-inf, upper)` below the first wall.
    Tail { upper: Rational },
    /// Open interval `(lower, upper)` between consecutive walls.
    Interval { lower: Rational, upper: Rational },
}

impl Chamber {
    pub fn lower(&self) -> Option<Rational> {
        match self {
            Chamber::Tail { .. } => None,
            Chamber::Interval { lower, .. } => Some(*lower),
        }
    }

    pub fn upper(&self) -> Rational {
        match self {
            Chamber::Tail { upper } | Chamber::Interval { upper, .. } => *upper,
        }
    }

    /// Interior points at 1/4, 1/2, 3/4 of a bounded chamber; `None` for the
    /// tail, whose sampling policy is the caller's.
    pub fn interior_quarters(&self) -> Option<[Rational; 3]> {
        match self {
            Chamber::Tail { .. } => None,
            Chamber::Interval { lower, upper } => {
                let width = *upper - *lower;
                Some([
                    *lower + width * Rational::new(1, 4),
                    *lower + width * Rational::new(1, 2),
                    *lower + width * Rational::new(3, 4),
                ])
            }
        }
    }
}

impl fmt::Display for Chamber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chamber::Tail { upper } => write!(f, "(-inf, {upper})"),
            Chamber::Interval { lower, upper } => write!(f, "({lower}, {upper})"),
        }
    }
}

/// Closed rational interval for `t` such that `(d - t) / m` lies in
/// `[lo, hi]`, for `m != 0`.
fn solution_interval(d: i64, m: i64, lo: Rational, hi: Rational) -> (Rational, Rational) {
    debug_assert!(m != 0);
    let d = Rational::integer(d);
    let m = Rational::integer(m);
    if m > Rational::zero() {
        (d - m * hi, d - m * lo)
    } else {
        (d - m * lo, d - m * hi)
    }
}

/// Integer values of `t` with `(d - t) / m` in `[lo, hi]`.
fn integer_solutions(d: i64, m: i64, lo: Rational, hi: Rational) -> std::ops::RangeInclusive<i64> {
    let (t_lo, t_hi) = solution_interval(d, m, lo, hi);
    t_lo.ceil()..=t_hi.floor()
}
