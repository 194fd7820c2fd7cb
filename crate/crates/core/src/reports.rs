//! Closed-form numeric facts about the moduli spaces, strongest in rank two.
//!
//! Everything here is a direct formula in `(g, n, d, dL, alpha)`; no bundle
//! pattern is involved. The rank-two functions assume `n = 2` implicitly,
//! the Higgs-side functions translate surface-group invariants into the
//! twisted-quadric-bundle language, and the remaining reports cover fiber
//! dimensions of the forgetful map to vector-bundle moduli, the maximal
//! allowed degree, and cohomological facts in the small-degree range.

use serde::Serialize;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReportError {
    #[error("genus must be at least 2 (got {0})")]
    GenusOutOfRange(i64),
    #[error("rank must be at least 1 (got {0})")]
    RankOutOfRange(i64),
    #[error("degree {degree} must be below the twist degree {twist_degree}")]
    MaximalDegree { degree: i64, twist_degree: i64 },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error(
        "maximal degree n*dL/2 is not an integer for rank {rank} and twist degree {twist_degree}"
    )]
    NonIntegralDegree { rank: i64, twist_degree: i64 },
    #[error("topological class must be 0 or 1 (got {0})")]
    InvalidTopologicalClass(u8),
    #[error("the group SO0(2,3) fixes the rank at 2 (got {0})")]
    GroupNeedsRankTwo(i64),
}

fn require_genus(genus: i64) -> Result<(), ReportError> {
    if genus < 2 {
        Err(ReportError::GenusOutOfRange(genus))
    } else {
        Ok(())
    }
}

/// Walls of the rank-two parameter line: the slope bound `d/2` together with
/// every integer in the window `[d - dL/2, d/2]`. Requires `d < dL`.
pub fn rank2_walls(degree: i64, twist_degree: i64) -> Result<Vec<Rational>, ReportError> {
    if degree >= twist_degree {
        return Err(ReportError::MaximalDegree { degree, twist_degree });
    }
    let lower = Rational::new(2 * degree - twist_degree, 2);
    let upper = Rational::new(degree, 2);
    let mut walls = std::collections::BTreeSet::new();
    walls.insert(upper);
    for k in lower.ceil()..=upper.floor() {
        walls.insert(Rational::integer(k));
    }
    Ok(walls.into_iter().collect())
}

/// Dimension of the rank-two moduli space in the small-degree range:
/// `3(dL - d) + g - 1`, valid when `d < dL - g + 1`.
pub fn expected_dimension(genus: i64, degree: i64, twist_degree: i64) -> Result<i64, ReportError> {
    require_genus(genus)?;
    if degree >= twist_degree - genus + 1 {
        return Err(ReportError::PreconditionFailed(format!(
            "expected dimension needs degree {degree} < dL - g + 1 = {}",
            twist_degree - genus + 1
        )));
    }
    Ok(3 * (twist_degree - degree) + genus - 1)
}

/// Lower bound `g - 1` on the codimension of the loci exchanged when the
/// parameter crosses a wall in rank two.
pub fn flip_codim_bound(genus: i64) -> Result<i64, ReportError> {
    require_genus(genus)?;
    Ok(genus - 1)
}

/// What is known about connectedness of the rank-two moduli space at a given
/// parameter value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Connectedness {
    /// Nonempty and connected: the degree is small (`d < dL - g + 1`) and
    /// the parameter does not exceed the slope bound `d/2`.
    ConnectedNonempty,
    /// Outside the range where the connectedness argument applies.
    Unknown,
}

pub fn connectedness_verdict(
    genus: i64,
    degree: i64,
    twist_degree: i64,
    alpha: Rational,
) -> Result<Connectedness, ReportError> {
    require_genus(genus)?;
    let small_degree = degree < twist_degree - genus + 1;
    let below_slope_bound = alpha <= Rational::new(degree, 2);
    Ok(if small_degree && below_slope_bound {
        Connectedness::ConnectedNonempty
    } else {
        Connectedness::Unknown
    })
}

/// Combined rank-two facts at one parameter value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rank2Report {
    pub walls: Vec<Rational>,
    /// Absent when the small-degree hypothesis `d < dL - g + 1` fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_dimension: Option<i64>,
    pub flip_codimension_at_least: i64,
    pub connectedness: Connectedness,
}

pub fn rank2_report(
    genus: i64,
    degree: i64,
    twist_degree: i64,
    alpha: Rational,
) -> Result<Rank2Report, ReportError> {
    require_genus(genus)?;
    Ok(Rank2Report {
        walls: rank2_walls(degree, twist_degree)?,
        expected_dimension: expected_dimension(genus, degree, twist_degree).ok(),
        flip_codimension_at_least: flip_codim_bound(genus)?,
        connectedness: connectedness_verdict(genus, degree, twist_degree, alpha)?,
    })
}

/// Real group whose Higgs bundles are twisted quadric bundles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum HiggsGroup {
    /// `Sp(2n, R)`: quadric bundles twisted by the canonical bundle,
    /// `dL = 2g - 2`.
    Sp2n,
    /// `SO0(2, 3)`: rank-two quadric bundles twisted by a degree `2g - 1`
    /// line bundle; `w` is the extra topological class in `Z/2`, carried
    /// through as metadata.
    So023 { w: u8 },
}

/// Surface-group facts translated to the quadric-bundle side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HiggsReport {
    pub group: HiggsGroup,
    pub rank: i64,
    pub genus: i64,
    pub degree: i64,
    /// Degree of the twisting line bundle the correspondence produces.
    pub twist_degree: i64,
    /// The sharp bound `n(g-1)` on `|d|`.
    pub milnor_wood_bound: i64,
    /// Moduli space is empty exactly beyond the bound.
    pub empty: bool,
    /// In the range `0 < d < n(g-1)` the minimal locus of the energy
    /// function is a moduli space of twisted quadric bundles.
    pub minima_are_quadric_bundles: bool,
    /// In the mirror range `n(1-g) < d < 0` the minima have vanishing
    /// symmetric map instead; the dual invariant `-d` is positive there.
    pub minima_have_vanishing_map: bool,
    pub dual_toledo: i64,
    /// Known connectedness of the moduli space, when established.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub connected: Option<bool>,
}

pub fn higgs_report(
    group: HiggsGroup,
    rank: i64,
    genus: i64,
    degree: i64,
) -> Result<HiggsReport, ReportError> {
    require_genus(genus)?;
    if rank < 1 {
        return Err(ReportError::RankOutOfRange(rank));
    }
    let twist_degree = match group {
        HiggsGroup::Sp2n => 2 * genus - 2,
        HiggsGroup::So023 { w } => {
            if rank != 2 {
                return Err(ReportError::GroupNeedsRankTwo(rank));
            }
            if w > 1 {
                return Err(ReportError::InvalidTopologicalClass(w));
            }
            2 * genus - 1
        }
    };
    let bound = rank * (genus - 1);
    let connected = match group {
        HiggsGroup::Sp2n if rank == 2 && degree != 0 && degree.abs() < 2 * genus - 2 => {
            Some(true)
        }
        _ => None,
    };
    Ok(HiggsReport {
        group,
        rank,
        genus,
        degree,
        twist_degree,
        milnor_wood_bound: bound,
        empty: degree.abs() > bound,
        minima_are_quadric_bundles: 0 < degree && degree < bound,
        minima_have_vanishing_map: -bound < degree && degree < 0,
        dual_toledo: -degree,
        connected,
    })
}

/// Fibers of the map sending a quadric bundle to its underlying vector
/// bundle, over the stable locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    /// `N = (-d + (n/2)(dL + 1 - g))(n + 1) - 1`, the projective dimension
    /// of the space of symmetric maps on a fixed stable bundle.
    pub dimension: i64,
    /// Whether every symmetric map value occurs, i.e. the evaluation is
    /// surjective: `d < (n/2)(dL + 1 - g)`.
    pub map_surjective: bool,
}

pub fn fiber_dimension(
    rank: i64,
    genus: i64,
    degree: i64,
    twist_degree: i64,
) -> Result<FiberReport, ReportError> {
    require_genus(genus)?;
    if rank < 1 {
        return Err(ReportError::RankOutOfRange(rank));
    }
    let half_rank = Rational::new(rank, 2);
    let d = Rational::integer(degree);
    let vanishing_bound = half_rank * Rational::integer(twist_degree + 2 - 2 * genus);
    if d >= vanishing_bound {
        return Err(ReportError::PreconditionFailed(format!(
            "fiber dimension needs degree {degree} < (n/2)(dL + 2 - 2g) = {vanishing_bound}"
        )));
    }
    let surjectivity_bound = half_rank * Rational::integer(twist_degree + 1 - genus);
    let n = (surjectivity_bound - d) * Rational::integer(rank + 1) - Rational::integer(1);
    debug_assert!(n.is_integer());
    Ok(FiberReport { dimension: n.numer(), map_surjective: d < surjectivity_bound })
}

/// What the moduli space is at the maximal allowed degree `d = n dL / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MaxDegreeKind {
    /// `dL` even: the symmetric map is an everywhere nondegenerate pairing
    /// after untwisting, so the space is a moduli of orthogonal bundles.
    Orthogonal {
        /// For `n >= 3`, at least `2^(2g+1)` connected components.
        #[serde(skip_serializing_if = "Option::is_none")]
        component_count_at_least: Option<i64>,
    },
    /// `dL` odd (forcing `n` even): an orthogonal bundle twisted by the odd
    /// line bundle itself, which admits no untwisting.
    LTwistedOrthogonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MaxDegreeReport {
    pub maximal_degree: i64,
    #[serde(flatten)]
    pub kind: MaxDegreeKind,
}

pub fn max_degree_report(
    rank: i64,
    twist_degree: i64,
    genus: i64,
) -> Result<MaxDegreeReport, ReportError> {
    require_genus(genus)?;
    if rank < 1 {
        return Err(ReportError::RankOutOfRange(rank));
    }
    if (rank * twist_degree) % 2 != 0 {
        return Err(ReportError::NonIntegralDegree { rank, twist_degree });
    }
    let maximal_degree = rank * twist_degree / 2;
    let kind = if twist_degree % 2 == 0 {
        let component_count_at_least = if rank >= 3 {
            Some(1i64.checked_shl((2 * genus + 1) as u32).ok_or_else(|| {
                ReportError::PreconditionFailed(format!(
                    "component count 2^(2g+1) overflows for genus {genus}"
                ))
            })?)
        } else {
            None
        };
        MaxDegreeKind::Orthogonal { component_count_at_least }
    } else {
        MaxDegreeKind::LTwistedOrthogonal
    };
    Ok(MaxDegreeReport { maximal_degree, kind })
}

/// First Betti numbers of the rank-two moduli space, in the range where they
/// are known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BettiNumbers {
    pub b1: i64,
    pub b2: i64,
    pub b3: i64,
}

/// Topological facts about the rank-two moduli space for `d < dL + 2 - 2g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    /// `(b1, b2, b3) = (0, 2, 2g)`; known for `g >= 4` in the small range.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiNumbers>,
    /// Picard rank 2, under the same hypotheses as the Betti numbers.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub picard_rank: Option<i64>,
    pub irreducible: bool,
    pub simply_connected: bool,
    /// Whether the moduli space determines the curve.
    pub torelli: bool,
}

pub fn cohomology_report(
    genus: i64,
    degree: i64,
    twist_degree: i64,
) -> Result<CohomologyReport, ReportError> {
    require_genus(genus)?;
    let small = degree < twist_degree + 2 - 2 * genus;
    let betti_known = small && genus >= 4;
    Ok(CohomologyReport {
        betti: betti_known.then_some(BettiNumbers { b1: 0, b2: 2, b3: 2 * genus }),
        picard_rank: betti_known.then_some(2),
        irreducible: small,
        simply_connected: small && (genus >= 3 || degree % 2 != 0),
        torelli: small && genus >= 5,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rats(values: &[(i64, i64)]) -> Vec<Rational> {
        values.iter().map(|&(n, d)| Rational::new(n, d)).collect()
    }

    #[test]
    fn rank2_walls_worked_examples() {
        assert_eq!(rank2_walls(2, 6).unwrap(), rats(&[(-1, 1), (0, 1), (1, 1)]));
        assert_eq!(rank2_walls(1, 3).unwrap(), rats(&[(0, 1), (1, 2)]));
        assert_eq!(rank2_walls(0, 1).unwrap(), rats(&[(0, 1)]));
        assert!(matches!(
            rank2_walls(6, 6),
            Err(ReportError::MaximalDegree { degree: 6, twist_degree: 6 })
        ));
    }

    #[test]
    fn rank2_walls_lie_in_the_window() {
        for twist in 1..=8 {
            for degree in -8..twist {
                let walls = rank2_walls(degree, twist).unwrap();
                let lower = Rational::new(2 * degree - twist, 2);
                let upper = Rational::new(degree, 2);
                assert!(!walls.is_empty());
                assert_eq!(*walls.last().unwrap(), upper);
                for w in &walls {
                    assert!(*w >= lower && *w <= upper, "wall {w} outside window");
                }
                assert!(walls.windows(2).all(|p| p[0] < p[1]));
            }
        }
    }

    #[test]
    fn expected_dimension_worked_examples() {
        assert_eq!(expected_dimension(2, 0, 3).unwrap(), 10);
        assert_eq!(expected_dimension(3, 1, 6).unwrap(), 17);
        assert!(matches!(
            expected_dimension(2, 2, 3),
            Err(ReportError::PreconditionFailed(_))
        ));
        assert!(matches!(
            expected_dimension(1, 0, 3),
            Err(ReportError::GenusOutOfRange(1))
        ));
    }

    #[test]
    fn flip_codim_bound_worked_examples() {
        assert_eq!(flip_codim_bound(2).unwrap(), 1);
        assert_eq!(flip_codim_bound(5).unwrap(), 4);
        assert!(matches!(flip_codim_bound(1), Err(ReportError::GenusOutOfRange(1))));
    }

    #[test]
    fn connectedness_worked_examples() {
        assert_eq!(
            connectedness_verdict(2, 0, 3, Rational::zero()).unwrap(),
            Connectedness::ConnectedNonempty
        );
        assert_eq!(
            connectedness_verdict(2, 2, 3, Rational::zero()).unwrap(),
            Connectedness::Unknown
        );
        // Degree is small but the parameter exceeds d/2.
        assert_eq!(
            connectedness_verdict(3, 1, 6, Rational::integer(1)).unwrap(),
            Connectedness::Unknown
        );
    }

    #[test]
    fn rank2_report_composes_the_pieces() {
        let report = rank2_report(2, 0, 3, Rational::zero()).unwrap();
        assert_eq!(report.walls, rats(&[(-1, 1), (0, 1)]));
        assert_eq!(report.expected_dimension, Some(10));
        assert_eq!(report.flip_codimension_at_least, 1);
        assert_eq!(report.connectedness, Connectedness::ConnectedNonempty);

        let report = rank2_report(2, 2, 3, Rational::zero()).unwrap();
        assert_eq!(report.expected_dimension, None);
    }

    #[test]
    fn higgs_report_worked_examples() {
        let r = higgs_report(HiggsGroup::Sp2n, 2, 3, 2).unwrap();
        assert_eq!(r.twist_degree, 4);
        assert_eq!(r.milnor_wood_bound, 4);
        assert!(!r.empty);
        assert!(r.minima_are_quadric_bundles);
        assert!(!r.minima_have_vanishing_map);
        assert_eq!(r.connected, Some(true));

        let r = higgs_report(HiggsGroup::Sp2n, 2, 2, 5).unwrap();
        assert!(r.empty);
        assert!(!r.minima_are_quadric_bundles);

        let r = higgs_report(HiggsGroup::Sp2n, 3, 2, -1).unwrap();
        assert!(!r.empty);
        assert!(!r.minima_are_quadric_bundles);
        assert!(r.minima_have_vanishing_map);
        assert_eq!(r.dual_toledo, 1);
        assert_eq!(r.connected, None);
    }

    #[test]
    fn higgs_report_so023_fixes_rank_two() {
        let r = higgs_report(HiggsGroup::So023 { w: 1 }, 2, 3, 1).unwrap();
        assert_eq!(r.twist_degree, 5);
        assert_eq!(r.milnor_wood_bound, 4);
        assert!(matches!(
            higgs_report(HiggsGroup::So023 { w: 0 }, 3, 3, 1),
            Err(ReportError::GroupNeedsRankTwo(3))
        ));
        assert!(matches!(
            higgs_report(HiggsGroup::So023 { w: 2 }, 2, 3, 1),
            Err(ReportError::InvalidTopologicalClass(2))
        ));
    }

    #[test]
    fn higgs_report_is_symmetric_under_degree_negation() {
        for rank in 1..=4 {
            for genus in 2..=6 {
                for degree in -12..=12 {
                    let plus = higgs_report(HiggsGroup::Sp2n, rank, genus, degree).unwrap();
                    let minus = higgs_report(HiggsGroup::Sp2n, rank, genus, -degree).unwrap();
                    assert_eq!(plus.empty, minus.empty);
                    assert_eq!(plus.minima_are_quadric_bundles, minus.minima_have_vanishing_map);
                    assert_eq!(plus.dual_toledo, -minus.dual_toledo);
                    assert_eq!(plus.empty, degree.abs() > rank * (genus - 1));
                }
            }
        }
    }

    #[test]
    fn fiber_dimension_worked_examples() {
        let r = fiber_dimension(2, 2, 0, 6).unwrap();
        assert_eq!(r.dimension, 14);
        assert!(r.map_surjective);

        let r = fiber_dimension(2, 2, 3, 6).unwrap();
        assert_eq!(r.dimension, 5);
        assert!(r.map_surjective);

        let r = fiber_dimension(3, 2, 0, 4).unwrap();
        assert_eq!(r.dimension, 17);
        assert!(r.map_surjective);

        assert!(matches!(
            fiber_dimension(2, 3, 5, 6),
            Err(ReportError::PreconditionFailed(_))
        ));
    }

    #[test]
    fn fiber_dimension_rank_two_identity() {
        for genus in 2..=6 {
            for twist in 1..=12 {
                for degree in -6..twist {
                    match fiber_dimension(2, genus, degree, twist) {
                        Ok(r) => assert_eq!(
                            r.dimension,
                            3 * (twist - degree + 1 - genus) - 1,
                            "g={genus} dL={twist} d={degree}"
                        ),
                        Err(ReportError::PreconditionFailed(_)) => {
                            assert!(degree >= twist + 2 - 2 * genus);
                        }
                        Err(e) => panic!("unexpected error {e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn max_degree_worked_examples() {
        let r = max_degree_report(3, 2, 2).unwrap();
        assert_eq!(r.maximal_degree, 3);
        assert_eq!(
            r.kind,
            MaxDegreeKind::Orthogonal { component_count_at_least: Some(32) }
        );

        let r = max_degree_report(2, 3, 2).unwrap();
        assert_eq!(r.maximal_degree, 3);
        assert_eq!(r.kind, MaxDegreeKind::LTwistedOrthogonal);

        assert!(matches!(
            max_degree_report(3, 3, 2),
            Err(ReportError::NonIntegralDegree { rank: 3, twist_degree: 3 })
        ));

        let r = max_degree_report(2, 2, 2).unwrap();
        assert_eq!(r.kind, MaxDegreeKind::Orthogonal { component_count_at_least: None });
    }

    #[test]
    fn cohomology_worked_examples() {
        let r = cohomology_report(4, 0, 8).unwrap();
        assert_eq!(r.betti, Some(BettiNumbers { b1: 0, b2: 2, b3: 8 }));
        assert_eq!(r.picard_rank, Some(2));
        assert!(r.irreducible);
        assert!(r.simply_connected);
        assert!(!r.torelli);

        let r = cohomology_report(5, 0, 10).unwrap();
        assert!(r.torelli);
        assert_eq!(r.betti, Some(BettiNumbers { b1: 0, b2: 2, b3: 10 }));

        let r = cohomology_report(2, 1, 7).unwrap();
        assert_eq!(r.betti, None);
        assert_eq!(r.picard_rank, None);
        assert!(r.irreducible);
        assert!(r.simply_connected);
        assert!(!r.torelli);

        // Even degree at genus two loses the simple-connectedness argument.
        let r = cohomology_report(2, 0, 7).unwrap();
        assert!(r.irreducible);
        assert!(!r.simply_connected);

        // Outside the small range nothing is claimed.
        let r = cohomology_report(4, 3, 8).unwrap();
        assert_eq!(r.betti, None);
        assert!(!r.irreducible);
        assert!(!r.simply_connected);
        assert!(!r.torelli);
    }
}
