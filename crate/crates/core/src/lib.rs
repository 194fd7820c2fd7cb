//! Exact-arithmetic engine for parameter-dependent stability of twisted
//! quadric bundles on a smooth projective curve.
//!
//! A quadric bundle here is a pair `(V, gamma)`: a rank-`n` vector bundle `V`
//! of degree `d` together with a nonzero symmetric map `gamma: V -> V* ⊗ L`
//! into the dual twisted by a fixed line bundle `L` of degree `dL`. Stability
//! depends on a rational parameter `alpha`, and the parameter line splits into
//! finitely many chambers separated by walls where the stability condition can
//! change.
//!
//! The crate has three layers:
//!
//! * [`params`]: the parameter space itself. Enumerates every candidate wall
//!   exactly, assembles the chamber decomposition, and evaluates the numeric
//!   feasibility bounds that constrain `(n, d, dL, alpha)`.
//! * [`model`]: a finite combinatorial model of split quadric bundles. `V` is
//!   a direct sum of line bundles and `gamma` is a symmetric pattern of zero
//!   and generically-nonvanishing entries; the full stability test over
//!   coordinate subbundles and coordinate filtrations runs exactly.
//! * [`reports`]: closed-form numeric invariants, specialized to rank two
//!   where the strongest statements hold: wall lists, moduli dimensions,
//!   connectedness facts, surface-group representation counts, fiber
//!   dimensions, and cohomology facts.
//!
//! All arithmetic is exact over [`Rational`]; no floats appear anywhere.

pub mod model;
pub mod params;
pub mod rational;
pub mod reports;

pub use model::{
    Approach, Clause, ClauseSet, CoordinateSubobject, ModelError, PatternEntry,
    PatternQuadricBundle, RankOptions, StabilityClass, StabilityVerdict, SummandSet, Witness,
};
pub use params::{Chamber, CriticalValue, ModuliParams, ParamsError, Provenance};
pub use rational::Rational;
pub use reports::{
    Connectedness, HiggsGroup, HiggsReport, MaxDegreeKind, MaxDegreeReport, Rank2Report,
    ReportError,
};
