//! Cross-checks the production classifier against a deliberately naive
//! reimplementation of the stability test.
//!
//! The oracle below works with `Vec<usize>` index sets and full rational
//! arithmetic, evaluating each inequality directly from its definition. It
//! shares no slack bookkeeping, no bitmask tricks, and no integer fast path
//! with the library. Agreement is checked exhaustively over a grid of small
//! bundles and parameter values, including one-sided limit verdicts.

use quadrics_core::{
    Clause, PatternEntry, PatternQuadricBundle, Rational, StabilityClass,
};
use quadrics_core::model::Approach;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum OracleItem {
    Subset(Vec<usize>, Clause),
    Filtration(Vec<usize>, Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct OracleVerdict {
    class: StabilityClass,
    witnesses: Vec<(OracleItem, Rational)>,
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for i in 0..n {
        let mut with_i: Vec<Vec<usize>> = out
            .iter()
            .map(|s| {
                let mut t = s.clone();
                t.push(i);
                t
            })
            .collect();
        out.append(&mut with_i);
    }
    out.sort();
    out
}

fn is_generic(b: &PatternQuadricBundle, i: usize, j: usize) -> bool {
    b.entry(i, j) == PatternEntry::Generic
}

fn block_zero(b: &PatternQuadricBundle, rows: &[usize], cols: &[usize]) -> bool {
    rows.iter().all(|&i| cols.iter().all(|&j| !is_generic(b, i, j)))
}

fn rows_zero(b: &PatternQuadricBundle, rows: &[usize]) -> bool {
    let all: Vec<usize> = (0..b.rank() as usize).collect();
    block_zero(b, rows, &all)
}

fn deg_of(b: &PatternQuadricBundle, set: &[usize]) -> Rational {
    Rational::integer(set.iter().map(|&i| b.degrees()[i]).sum())
}

fn complement(n: usize, set: &[usize]) -> Vec<usize> {
    (0..n).filter(|i| !set.contains(i)).collect()
}

fn oracle_subset_clause(b: &PatternQuadricBundle, set: &[usize]) -> Clause {
    if !block_zero(b, set, set) {
        Clause::NonIsotropic
    } else if rows_zero(b, set) {
        Clause::Annihilated
    } else {
        Clause::Isotropic
    }
}

/// Slack of the inequality that governs `item` at `alpha`, straight from the
/// definition and entirely in rational arithmetic.
fn oracle_slack(b: &PatternQuadricBundle, item: &OracleItem, alpha: Rational) -> Rational {
    let n = Rational::integer(b.rank());
    let d = Rational::integer(b.degree());
    let two = Rational::integer(2);
    match item {
        OracleItem::Subset(set, clause) => {
            let k = Rational::integer(set.len() as i64);
            let deg = deg_of(b, set);
            match clause {
                Clause::NonIsotropic => d + alpha * (k - n) - deg,
                Clause::Isotropic => d / two + alpha * (k - n / two) - deg,
                Clause::Annihilated => alpha * k - deg,
                Clause::Filtration => unreachable!("subsets never carry the filtration clause"),
            }
        }
        OracleItem::Filtration(inner, outer) => {
            let k = Rational::integer((inner.len() + outer.len()) as i64);
            d + alpha * (k - n) - deg_of(b, inner) - deg_of(b, outer)
        }
    }
}

fn oracle_decomposes(b: &PatternQuadricBundle, item: &OracleItem) -> bool {
    let n = b.rank() as usize;
    match item {
        OracleItem::Subset(set, clause) => {
            let rest = complement(n, set);
            match clause {
                Clause::NonIsotropic => {
                    block_zero(b, set, &rest) && block_zero(b, &rest, &rest)
                }
                Clause::Isotropic => block_zero(b, &rest, &rest),
                Clause::Annihilated => true,
                Clause::Filtration => unreachable!(),
            }
        }
        OracleItem::Filtration(inner, outer) => {
            let middle: Vec<usize> =
                outer.iter().copied().filter(|i| !inner.contains(i)).collect();
            let rest = complement(n, outer);
            block_zero(b, &middle, &rest) && block_zero(b, &rest, &rest)
        }
    }
}

fn oracle_items(b: &PatternQuadricBundle) -> Vec<OracleItem> {
    let n = b.rank() as usize;
    let all = subsets(n);
    let mut items = Vec::new();
    for set in &all {
        if set.is_empty() || set.len() == n {
            continue;
        }
        items.push(OracleItem::Subset(set.clone(), oracle_subset_clause(b, set)));
    }
    for outer in &all {
        if outer.is_empty() || outer.len() == n || block_zero(b, outer, outer) {
            continue;
        }
        for inner in &all {
            if inner.is_empty()
                || inner.len() >= outer.len()
                || !inner.iter().all(|i| outer.contains(i))
            {
                continue;
            }
            if block_zero(b, inner, outer) {
                items.push(OracleItem::Filtration(inner.clone(), outer.clone()));
            }
        }
    }
    items
}

fn oracle_classify(b: &PatternQuadricBundle, alpha: Rational) -> OracleVerdict {
    let slope_bound = Rational::new(b.degree(), b.rank());
    if alpha > slope_bound {
        return OracleVerdict { class: StabilityClass::Unstable, witnesses: vec![] };
    }
    let items = oracle_items(b);
    let mut negatives = Vec::new();
    let mut zeros = Vec::new();
    for item in items {
        let slack = oracle_slack(b, &item, alpha);
        if slack.is_negative() {
            negatives.push((item, slack));
        } else if slack.is_zero() {
            zeros.push((item, slack));
        }
    }
    if !negatives.is_empty() {
        negatives.sort();
        return OracleVerdict { class: StabilityClass::Unstable, witnesses: negatives };
    }
    if zeros.is_empty() {
        return OracleVerdict { class: StabilityClass::Stable, witnesses: vec![] };
    }
    let class = if zeros.iter().all(|(item, _)| oracle_decomposes(b, item)) {
        StabilityClass::Polystable
    } else {
        StabilityClass::StrictlySemistable
    };
    zeros.sort();
    OracleVerdict { class, witnesses: zeros }
}

fn oracle_alpha_independent(b: &PatternQuadricBundle) -> bool {
    let n = b.rank() as usize;
    let d = b.degree();
    let all = subsets(n);
    if b.rank() % 2 == 0 && d % 2 == 0 {
        for set in &all {
            if 2 * set.len() == n
                && Rational::integer(2) * deg_of(b, set) == Rational::integer(d)
                && block_zero(b, set, set)
            {
                return true;
            }
        }
    }
    for outer in &all {
        if outer.is_empty() || outer.len() == n || block_zero(b, outer, outer) {
            continue;
        }
        for inner in &all {
            if inner.is_empty()
                || inner.len() >= outer.len()
                || !inner.iter().all(|i| outer.contains(i))
                || !block_zero(b, inner, outer)
            {
                continue;
            }
            if inner.len() + outer.len() == n
                && deg_of(b, inner) + deg_of(b, outer) == Rational::integer(d)
            {
                return true;
            }
        }
    }
    false
}

/// Every symmetric pattern on `n` summands, as upper-triangle bit choices.
fn patterns(n: usize) -> Vec<Vec<Vec<PatternEntry>>> {
    let cells: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    (0..1u32 << cells.len())
        .map(|bits| {
            let mut grid = vec![vec![PatternEntry::Zero; n]; n];
            for (b, &(i, j)) in cells.iter().enumerate() {
                if bits >> b & 1 == 1 {
                    grid[i][j] = PatternEntry::Generic;
                    grid[j][i] = PatternEntry::Generic;
                }
            }
            grid
        })
        .collect()
}

fn degree_tuples(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (-bound..=bound).map(move |d| {
                    let mut u = t.clone();
                    u.push(d);
                    u
                })
            })
            .collect();
    }
    out
}

fn witness_signature(v: &quadrics_core::StabilityVerdict) -> Vec<(OracleItem, Rational)> {
    let mut out: Vec<(OracleItem, Rational)> = v
        .witnesses
        .iter()
        .map(|w| {
            let summands: Vec<usize> = w.subobject.summands.members().collect();
            let item = match w.subobject.extension {
                None => OracleItem::Subset(summands, w.clause),
                Some(ext) => OracleItem::Filtration(summands, ext.members().collect()),
            };
            (item, w.slack)
        })
        .collect();
    out.sort();
    out
}

#[test]
fn classifier_matches_naive_oracle_on_exhaustive_grid() {
    let alphas: Vec<Rational> = vec![
        Rational::integer(-3),
        Rational::integer(-2),
        Rational::integer(-1),
        Rational::new(-1, 2),
        Rational::zero(),
        Rational::new(1, 3),
        Rational::new(1, 2),
        Rational::integer(1),
        Rational::integer(2),
    ];
    let eps = Rational::new(1, 1000);

    let mut bundles_checked = 0usize;
    for n in 1..=3usize {
        let all_patterns = patterns(n);
        for degrees in degree_tuples(n, 2) {
            for twist in 1..=3i64 {
                for pattern in &all_patterns {
                    let Ok(bundle) =
                        PatternQuadricBundle::new(2, twist, degrees.clone(), pattern.clone())
                    else {
                        continue;
                    };
                    bundles_checked += 1;
                    let clauses = bundle.clauses();
                    assert_eq!(
                        clauses.alpha_independent(),
                        oracle_alpha_independent(&bundle),
                        "alpha-independence mismatch for degrees {degrees:?} twist {twist}"
                    );
                    for &alpha in &alphas {
                        let expected = oracle_classify(&bundle, alpha);
                        let got = clauses.classify(alpha, Approach::Exact);
                        assert_eq!(
                            got.class, expected.class,
                            "class mismatch at alpha={alpha} degrees {degrees:?} twist {twist}"
                        );
                        assert_eq!(got.class, clauses.class(alpha, Approach::Exact));
                        if !got.alpha_above_slope {
                            assert_eq!(
                                witness_signature(&got),
                                expected.witnesses,
                                "witness mismatch at alpha={alpha} degrees {degrees:?}"
                            );
                        }
                        // On this grid no slack changes sign within 1/1000 of
                        // a sample point, so the one-sided limits must agree
                        // with nearby exact verdicts.
                        assert_eq!(
                            clauses.classify(alpha, Approach::JustBelow).class,
                            oracle_classify(&bundle, alpha - eps).class,
                            "below-limit mismatch at alpha={alpha} degrees {degrees:?}"
                        );
                        assert_eq!(
                            clauses.classify(alpha, Approach::JustAbove).class,
                            oracle_classify(&bundle, alpha + eps).class,
                            "above-limit mismatch at alpha={alpha} degrees {degrees:?}"
                        );
                    }
                }
            }
        }
    }
    assert!(bundles_checked > 5_000, "grid too small: {bundles_checked}");
}

#[test]
fn subobject_clause_matches_oracle_case_analysis() {
    for degrees in degree_tuples(3, 1) {
        for pattern in patterns(3) {
            let Ok(bundle) = PatternQuadricBundle::new(2, 2, degrees.clone(), pattern) else {
                continue;
            };
            for set in subsets(3) {
                if set.is_empty() || set.len() == 3 {
                    continue;
                }
                let lib = bundle
                    .subobject_class(quadrics_core::SummandSet::from_indices(&set))
                    .unwrap();
                assert_eq!(lib, oracle_subset_clause(&bundle, &set));
            }
        }
    }
}

#[test]
fn frozen_examples_agree_with_oracle() {
    let g = |c: u8| if c == b'*' { PatternEntry::Generic } else { PatternEntry::Zero };
    let grid = |rows: &[&str]| -> Vec<Vec<PatternEntry>> {
        rows.iter().map(|r| r.bytes().map(g).collect()).collect()
    };

    let full = PatternQuadricBundle::new(2, 3, vec![1, 0], grid(&["**", "**"])).unwrap();
    assert_eq!(
        oracle_classify(&full, Rational::integer(-1)).class,
        StabilityClass::Stable
    );
    assert_eq!(
        oracle_classify(&full, Rational::zero()).class,
        StabilityClass::StrictlySemistable
    );

    let hyperbolic = PatternQuadricBundle::new(2, 2, vec![1, 1], grid(&["0*", "*0"])).unwrap();
    for alpha in [Rational::integer(-4), Rational::integer(0), Rational::integer(1)] {
        assert_eq!(
            oracle_classify(&hyperbolic, alpha).class,
            StabilityClass::Polystable
        );
    }
    assert!(oracle_alpha_independent(&hyperbolic));
    assert!(!oracle_alpha_independent(&full));
}
