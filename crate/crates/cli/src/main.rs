//! `quadrics`: chambers, classification, sweeps, and reports for twisted
//! quadric bundles on a curve.
//!
//! Exit codes: 0 on success, 1 when a sweep finds a property violation, 2 on
//! any input error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use quadrics_cli::bundlefile;
use quadrics_cli::document::{facts, ReportDocument};
use quadrics_cli::sweep::{run_sweep, SweepConfig, SweepOutcome};
use quadrics_core::model::Approach;
use quadrics_core::{
    reports, Chamber, ModuliParams, PatternEntry, PatternQuadricBundle,
    Provenance, RankOptions, Rational, StabilityClass, StabilityVerdict,
};

#[derive(Parser)]
#[command(
    name = "quadrics",
    version,
    about = "Stability chambers, classification, and numeric reports for twisted quadric bundles"
)]
struct Cli {
    /// Emit the canonical JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Emit the text rendering (the default).
    #[arg(long, global = true, conflicts_with = "json")]
    text: bool,
    /// Master randomness seed for the generic-rank probe; echoed in every
    /// document.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Wall and chamber decomposition of the stability parameter line.
    Chambers(ChambersArgs),
    /// Classify a bundle-spec file at one parameter or across all chambers.
    Check(CheckArgs),
    /// Run the property suites over an exhaustive grid of pattern bundles.
    Sweep(SweepArgs),
    /// Closed-form numeric reports.
    #[command(subcommand)]
    Report(ReportKind),
}

#[derive(Args)]
struct ChambersArgs {
    /// Rank of the bundle.
    #[arg(short = 'n', long = "n")]
    rank: i64,
    /// Total degree of the bundle.
    #[arg(short = 'd', long = "degree", allow_negative_numbers = true)]
    degree: i64,
    /// Degree of the twisting line bundle.
    #[arg(long = "dL")]
    twist_degree: i64,
    /// Curve genus (the decomposition itself does not depend on it).
    #[arg(short = 'g', long = "genus", default_value_t = 2)]
    genus: i64,
}

#[derive(Args)]
struct CheckArgs {
    /// Bundle-spec file: `genus`, `dL`, `degrees` lines, then pattern rows.
    file: PathBuf,
    /// Parameter value as an exact rational, e.g. -1 or 3/4.
    #[arg(
        long,
        allow_hyphen_values = true,
        conflicts_with = "all_chambers",
        required_unless_present = "all_chambers"
    )]
    alpha: Option<Rational>,
    /// One verdict per chamber plus the wall-locality table.
    #[arg(long)]
    all_chambers: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Largest rank to enumerate.
    #[arg(long)]
    n_max: i64,
    /// Per-summand degree bound: degrees range over [-bound, bound].
    #[arg(long)]
    deg_bound: i64,
    /// Largest twist degree to enumerate.
    #[arg(long = "dL-max")]
    dl_max: i64,
    /// Curve genus.
    #[arg(short = 'g', long = "genus", default_value_t = 2)]
    genus: i64,
}

#[derive(Subcommand)]
enum ReportKind {
    /// Rank-two walls, moduli dimension, flip codimension, connectedness.
    Rank2 {
        #[arg(short = 'g', long = "genus")]
        genus: i64,
        #[arg(short = 'd', long = "degree", allow_negative_numbers = true)]
        degree: i64,
        #[arg(long = "dL")]
        twist_degree: i64,
        /// Parameter for the connectedness verdict.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        alpha: Rational,
    },
    /// Surface-group Higgs-bundle facts for Sp(2n,R) or SO0(2,3).
    Higgs {
        #[arg(long, value_enum)]
        group: GroupArg,
        /// Topological class in Z/2 (SO0(2,3) only).
        #[arg(long, default_value_t = 0)]
        w: u8,
        #[arg(short = 'n', long = "n")]
        rank: i64,
        #[arg(short = 'g', long = "genus")]
        genus: i64,
        /// Toledo invariant.
        #[arg(short = 'd', long = "degree", allow_negative_numbers = true)]
        degree: i64,
    },
    /// Fiber dimension over stable bundles plus rank-two topology facts.
    Geometry {
        #[arg(short = 'g', long = "genus")]
        genus: i64,
        #[arg(short = 'd', long = "degree", allow_negative_numbers = true)]
        degree: i64,
        #[arg(long = "dL")]
        twist_degree: i64,
        #[arg(short = 'n', long = "n", default_value_t = 2)]
        rank: i64,
        /// Optional parameter for the rank-two connectedness verdict.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<Rational>,
    },
    /// The moduli space at the maximal degree n dL / 2.
    Maxdeg {
        #[arg(short = 'n', long = "n")]
        rank: i64,
        #[arg(long = "dL")]
        twist_degree: i64,
        #[arg(short = 'g', long = "genus")]
        genus: i64,
    },
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum GroupArg {
    /// Sp(2n, R).
    Sp,
    /// SO0(2, 3).
    So023,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

type CmdResult = Result<ExitCode, Box<dyn std::error::Error>>;

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Chambers(args) => cmd_chambers(cli, args),
        Command::Check(args) => cmd_check(cli, args),
        Command::Sweep(args) => cmd_sweep(cli, args),
        Command::Report(kind) => cmd_report(cli, kind),
    }
}

fn emit(cli: &Cli, doc: &ReportDocument, text: String) {
    if cli.json {
        print!("{}", doc.to_canonical_json());
    } else {
        print!("{text}");
    }
}

fn cmd_chambers(cli: &Cli, args: &ChambersArgs) -> CmdResult {
    let params = ModuliParams::new(args.genus, args.rank, args.degree, args.twist_degree)?;
    let walls = params.critical_values()?;
    let chambers = params.chambers()?;
    let (lower, upper) = params.alpha_extremes();

    let inputs = json!({
        "command": "chambers",
        "n": args.rank,
        "d": args.degree,
        "dL": args.twist_degree,
        "genus": args.genus,
    });
    let results = json!({
        "window": { "lower": lower, "upper": upper },
        "walls": walls,
        "chambers": chambers,
    });
    let doc = ReportDocument::new(
        inputs,
        results,
        &[facts::WINDOW, facts::WALL_FAMILIES, facts::CHAMBER_CONSTANCY],
        cli.seed,
    );

    let mut text = String::new();
    let _ = writeln!(
        text,
        "parameters: n={} d={} dL={}  window [{}, {}]",
        args.rank, args.degree, args.twist_degree, lower, upper
    );
    let _ = writeln!(text, "walls:");
    for wall in &walls {
        let kinds: Vec<String> = wall.witnesses.iter().map(describe_provenance).collect();
        let _ = writeln!(text, "  {:>8}   {}", wall.value.to_string(), kinds.join("; "));
    }
    let _ = writeln!(text, "chambers:");
    for chamber in &chambers {
        let _ = writeln!(text, "  {chamber}");
    }
    emit(cli, &doc, text);
    Ok(ExitCode::SUCCESS)
}

fn describe_provenance(p: &Provenance) -> String {
    match p {
        Provenance::Top => "slope bound d/n".to_string(),
        Provenance::NonIsotropic { sub_rank, sub_degree } => {
            format!("non-isotropic sub-rank {sub_rank} degree {sub_degree}")
        }
        Provenance::Isotropic { sub_rank, sub_degree } => {
            format!("isotropic sub-rank {sub_rank} degree {sub_degree}")
        }
        Provenance::Annihilated { sub_rank, sub_degree } => {
            format!("annihilated sub-rank {sub_rank} degree {sub_degree}")
        }
        Provenance::Filtration { sub_rank, mid_rank, degree_sum } => {
            format!("filtration ranks {sub_rank} in {mid_rank} degree sum {degree_sum}")
        }
    }
}

fn pattern_rows(bundle: &PatternQuadricBundle) -> Vec<String> {
    let n = bundle.rank() as usize;
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match bundle.entry(i, j) {
                    PatternEntry::Generic => '*',
                    PatternEntry::Zero => '0',
                })
                .collect()
        })
        .collect()
}

fn bundle_inputs(bundle: &PatternQuadricBundle, mode: &str, alpha: Option<Rational>) -> Value {
    let mut inputs = json!({
        "command": "check",
        "mode": mode,
        "genus": bundle.genus(),
        "dL": bundle.twist_degree(),
        "degrees": bundle.degrees(),
        "pattern": pattern_rows(bundle),
    });
    if let Some(alpha) = alpha {
        inputs["alpha"] = serde_json::to_value(alpha).expect("rational serializes");
    }
    inputs
}

fn witness_lines(verdict: &StabilityVerdict) -> String {
    let mut text = String::new();
    for w in &verdict.witnesses {
        let _ = writeln!(
            text,
            "    {}  {} clause, slack {}",
            w.subobject, w.clause, w.slack
        );
    }
    text
}

fn cmd_check(cli: &Cli, args: &CheckArgs) -> CmdResult {
    let content = std::fs::read_to_string(&args.file)
        .map_err(|e| format!("cannot read {}: {e}", args.file.display()))?;
    let bundle = bundlefile::parse_bundle(&content)?;
    let rank_options = RankOptions { seed: cli.seed, ..RankOptions::default() };
    let generic_rank = bundle.generic_rank_with(&rank_options)?;

    if let Some(alpha) = args.alpha {
        let verdict = bundle.classify(alpha);
        let results = json!({
            "alpha": alpha,
            "verdict": verdict,
            "generic_rank": generic_rank,
            "underlying_bundle_semistable": bundle.underlying_bundle_semistable(),
        });
        let doc = ReportDocument::new(
            bundle_inputs(&bundle, "single", Some(alpha)),
            results,
            &[facts::CLASSIFY, facts::ALPHA_INDEPENDENT],
            cli.seed,
        );

        let mut text = String::new();
        let _ = writeln!(
            text,
            "bundle: n={} d={} dL={} degrees={:?} pattern={}",
            bundle.rank(),
            bundle.degree(),
            bundle.twist_degree(),
            bundle.degrees(),
            pattern_rows(&bundle).join("/")
        );
        let _ = writeln!(text, "alpha = {alpha}: {}", verdict.class);
        if verdict.alpha_above_slope {
            let _ = writeln!(
                text,
                "  (parameter exceeds the slope bound d/n = {})",
                Rational::new(bundle.degree(), bundle.rank())
            );
        }
        if !verdict.witnesses.is_empty() {
            let _ = writeln!(text, "  witnesses:");
            text.push_str(&witness_lines(&verdict));
        }
        if verdict.alpha_independent {
            let _ =
                writeln!(text, "  configuration is strictly semistable at every parameter");
        }
        let _ = writeln!(text, "generic rank of the symmetric map: {generic_rank}");
        let _ = writeln!(
            text,
            "underlying bundle semistable: {}",
            bundle.underlying_bundle_semistable()
        );
        emit(cli, &doc, text);
        return Ok(ExitCode::SUCCESS);
    }

    // --all-chambers
    let params = bundle.params();
    let walls = params.critical_values()?;
    let chambers = params.chambers()?;
    let (lower, upper) = params.alpha_extremes();
    let clauses = bundle.clauses();

    struct ChamberRow {
        chamber: Chamber,
        representative: Rational,
        class: StabilityClass,
    }
    let chamber_table: Vec<ChamberRow> = chambers
        .iter()
        .map(|chamber| {
            let representative = match chamber.interior_quarters() {
                Some(q) => q[1],
                None => chamber.upper() - Rational::integer(1),
            };
            ChamberRow {
                chamber: *chamber,
                representative,
                class: clauses.class(representative, Approach::Exact),
            }
        })
        .collect();

    struct WallRow {
        value: Rational,
        below: StabilityClass,
        at: StabilityVerdict,
        above: StabilityClass,
    }
    let wall_table: Vec<WallRow> = walls
        .iter()
        .map(|w| WallRow {
            value: w.value,
            below: clauses.class(w.value, Approach::JustBelow),
            at: clauses.classify(w.value, Approach::Exact),
            above: clauses.class(w.value, Approach::JustAbove),
        })
        .collect();

    let results = json!({
        "window": { "lower": lower, "upper": upper },
        "alpha_independent": clauses.alpha_independent(),
        "generic_rank": generic_rank,
        "chambers": chamber_table.iter().map(|row| json!({
            "chamber": row.chamber,
            "representative_alpha": row.representative,
            "class": row.class,
        })).collect::<Vec<Value>>(),
        "walls": wall_table.iter().map(|row| json!({
            "value": row.value,
            "class_below": row.below,
            "class_at": row.at.class,
            "class_above": row.above,
            "verdict_changes": row.below != row.above || row.below != row.at.class,
            "witnesses_at": row.at.witnesses,
        })).collect::<Vec<Value>>(),
    });
    let doc = ReportDocument::new(
        bundle_inputs(&bundle, "all-chambers", None),
        results,
        &[facts::CLASSIFY, facts::CHAMBER_CONSTANCY, facts::WALL_LOCALITY],
        cli.seed,
    );

    let mut text = String::new();
    let _ = writeln!(
        text,
        "bundle: n={} d={} dL={} degrees={:?} pattern={}",
        bundle.rank(),
        bundle.degree(),
        bundle.twist_degree(),
        bundle.degrees(),
        pattern_rows(&bundle).join("/")
    );
    let _ = writeln!(text, "window [{lower}, {upper}]  generic rank {generic_rank}");
    if clauses.alpha_independent() {
        let _ = writeln!(text, "configuration is strictly semistable at every parameter");
    }
    let _ = writeln!(text, "{:<16} {:>14}   class", "chamber", "representative");
    for row in &chamber_table {
        let _ = writeln!(
            text,
            "{:<16} {:>14}   {}",
            row.chamber.to_string(),
            row.representative.to_string(),
            row.class
        );
    }
    let _ = writeln!(
        text,
        "{:<8} {:<20} {:<20} {:<20} change",
        "wall", "below", "at", "above"
    );
    for row in &wall_table {
        let changed = row.below != row.above || row.below != row.at.class;
        let _ = writeln!(
            text,
            "{:<8} {:<20} {:<20} {:<20} {}",
            row.value.to_string(),
            row.below.to_string(),
            row.at.class.to_string(),
            row.above.to_string(),
            if changed { "yes" } else { "no" }
        );
        if changed && !row.at.witnesses.is_empty() {
            text.push_str(&witness_lines(&row.at));
        }
    }
    emit(cli, &doc, text);
    Ok(ExitCode::SUCCESS)
}

fn cmd_sweep(cli: &Cli, args: &SweepArgs) -> CmdResult {
    let config = SweepConfig {
        n_max: args.n_max,
        deg_bound: args.deg_bound,
        dl_max: args.dl_max,
        genus: args.genus,
        seed: cli.seed,
    };
    let outcome = run_sweep(&config)?;

    let inputs = json!({
        "command": "sweep",
        "n_max": args.n_max,
        "deg_bound": args.deg_bound,
        "dL_max": args.dl_max,
        "genus": args.genus,
    });
    let results = serde_json::to_value(&outcome).expect("outcome serializes");
    let doc = ReportDocument::new(
        inputs,
        results,
        &[
            facts::CHAMBER_CONSTANCY,
            facts::SEMISTABLE_SLOPE_BOUND,
            facts::TOP_CHAMBER,
            facts::MAX_DEGREE,
            facts::WALL_LOCALITY,
            facts::ALPHA_INDEPENDENT,
        ],
        cli.seed,
    );

    let text = render_sweep_text(args, &outcome);
    emit(cli, &doc, text);
    if outcome.total_violations() > 0 {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn render_sweep_text(args: &SweepArgs, outcome: &SweepOutcome) -> String {
    let mut text = String::new();
    let _ = writeln!(
        text,
        "sweep: n <= {}, |degree_i| <= {}, dL <= {}, genus {}",
        args.n_max, args.deg_bound, args.dl_max, args.genus
    );
    let _ = writeln!(
        text,
        "bundles checked: {} (skipped {} with an empty parameter window)",
        outcome.bundles_checked, outcome.infeasible_skipped
    );
    for suite in &outcome.suites {
        let _ = writeln!(
            text,
            "  {:<34} checks {:>8}   violations {}",
            suite.name, suite.checks, suite.violations
        );
        for example in &suite.examples {
            let _ = writeln!(text, "      counterexample: {example}");
        }
    }
    if outcome.total_violations() == 0 {
        let _ = writeln!(text, "all properties hold");
    } else {
        let _ = writeln!(text, "PROPERTY VIOLATIONS FOUND: {}", outcome.total_violations());
    }
    text
}

fn cmd_report(cli: &Cli, kind: &ReportKind) -> CmdResult {
    match kind {
        ReportKind::Rank2 { genus, degree, twist_degree, alpha } => {
            let report = reports::rank2_report(*genus, *degree, *twist_degree, *alpha)?;
            let inputs = json!({
                "command": "report rank2",
                "genus": genus, "d": degree, "dL": twist_degree, "alpha": alpha,
            });
            let results = serde_json::to_value(&report)?;
            let doc = ReportDocument::new(
                inputs,
                results,
                &[
                    facts::RANK2_WALLS,
                    facts::EXPECTED_DIMENSION,
                    facts::FLIP_CODIMENSION,
                    facts::CONNECTEDNESS,
                ],
                cli.seed,
            );
            let mut text = String::new();
            let wall_list: Vec<String> = report.walls.iter().map(|w| w.to_string()).collect();
            let _ = writeln!(text, "rank-two report: g={genus} d={degree} dL={twist_degree}");
            let _ = writeln!(text, "walls: {}", wall_list.join(", "));
            match report.expected_dimension {
                Some(dim) => {
                    let _ = writeln!(text, "expected dimension: {dim}");
                }
                None => {
                    let _ = writeln!(
                        text,
                        "expected dimension: not available (needs d < dL - g + 1)"
                    );
                }
            }
            let _ = writeln!(
                text,
                "flip codimension at least: {}",
                report.flip_codimension_at_least
            );
            let _ = writeln!(
                text,
                "connectedness at alpha = {alpha}: {}",
                match report.connectedness {
                    reports::Connectedness::ConnectedNonempty => "connected and nonempty",
                    reports::Connectedness::Unknown => "unknown in this range",
                }
            );
            emit(cli, &doc, text);
            Ok(ExitCode::SUCCESS)
        }
        ReportKind::Higgs { group, w, rank, genus, degree } => {
            let higgs_group = match group {
                GroupArg::Sp => reports::HiggsGroup::Sp2n,
                GroupArg::So023 => reports::HiggsGroup::So023 { w: *w },
            };
            let report = reports::higgs_report(higgs_group, *rank, *genus, *degree)?;
            let inputs = json!({
                "command": "report higgs",
                "group": match group { GroupArg::Sp => "sp", GroupArg::So023 => "so023" },
                "w": if matches!(group, GroupArg::So023) { json!(w) } else { Value::Null },
                "n": rank, "genus": genus, "d": degree,
            });
            let mut citations = vec![facts::MILNOR_WOOD, facts::HIGGS_MINIMA];
            if matches!(group, GroupArg::So023) {
                citations.push(facts::SO023_TWIST);
            }
            if report.connected.is_some() {
                citations.push(facts::HIGGS_CONNECTED);
            }
            let results = serde_json::to_value(&report)?;
            let doc = ReportDocument::new(inputs, results, &citations, cli.seed);

            let mut text = String::new();
            let group_name = match group {
                GroupArg::Sp => format!("Sp({}, R)", 2 * rank),
                GroupArg::So023 => format!("SO0(2,3) with class w = {w}"),
            };
            let _ = writeln!(
                text,
                "{group_name}: genus {genus}, Toledo invariant {degree} (twist degree {})",
                report.twist_degree
            );
            let _ = writeln!(
                text,
                "Milnor-Wood bound n(g-1) = {}: moduli space {}",
                report.milnor_wood_bound,
                if report.empty { "EMPTY" } else { "nonempty" }
            );
            if report.minima_are_quadric_bundles {
                let _ = writeln!(
                    text,
                    "energy minima: a moduli space of twisted quadric bundles"
                );
            }
            if report.minima_have_vanishing_map {
                let _ = writeln!(
                    text,
                    "energy minima: vanishing symmetric map (dual Toledo invariant {})",
                    report.dual_toledo
                );
            }
            if let Some(true) = report.connected {
                let _ = writeln!(text, "moduli space is connected");
            }
            emit(cli, &doc, text);
            Ok(ExitCode::SUCCESS)
        }
        ReportKind::Geometry { genus, degree, twist_degree, rank, alpha } => {
            let mut results = serde_json::Map::new();
            let mut citations = vec![facts::FIBER_DIMENSION];
            let fiber = match reports::fiber_dimension(*rank, *genus, *degree, *twist_degree) {
                Ok(fiber) => {
                    results.insert("fiber".into(), serde_json::to_value(fiber)?);
                    Some(fiber)
                }
                Err(reports::ReportError::PreconditionFailed(_)) => None,
                Err(other) => return Err(other.into()),
            };
            let mut cohomology = None;
            let mut dimension = None;
            let mut connectedness = None;
            if *rank == 2 {
                let report = reports::cohomology_report(*genus, *degree, *twist_degree)?;
                results.insert("cohomology".into(), serde_json::to_value(report)?);
                cohomology = Some(report);
                citations.extend([facts::BETTI, facts::IRREDUCIBLE, facts::TORELLI]);
                if let Ok(dim) = reports::expected_dimension(*genus, *degree, *twist_degree) {
                    results.insert("expected_dimension".into(), json!(dim));
                    dimension = Some(dim);
                    citations.push(facts::EXPECTED_DIMENSION);
                }
                if let Some(alpha) = alpha {
                    let verdict =
                        reports::connectedness_verdict(*genus, *degree, *twist_degree, *alpha)?;
                    results.insert("connectedness".into(), serde_json::to_value(verdict)?);
                    connectedness = Some(verdict);
                    citations.push(facts::CONNECTEDNESS);
                }
            }
            if results.is_empty() {
                return Err(reports::ReportError::PreconditionFailed(format!(
                    "no geometry facts apply: rank {rank} with degree {degree} >= (n/2)(dL + 2 - 2g)"
                ))
                .into());
            }
            let inputs = json!({
                "command": "report geometry",
                "genus": genus, "d": degree, "dL": twist_degree, "n": rank,
                "alpha": alpha,
            });
            let doc =
                ReportDocument::new(inputs, Value::Object(results), &citations, cli.seed);

            let mut text = String::new();
            let _ = writeln!(
                text,
                "geometry report: g={genus} d={degree} dL={twist_degree} n={rank}"
            );
            match fiber {
                Some(f) => {
                    let _ = writeln!(
                        text,
                        "fiber over a stable bundle: projective space of dimension {}{}",
                        f.dimension,
                        if f.map_surjective { " (every symmetric map occurs)" } else { "" }
                    );
                }
                None => {
                    let _ = writeln!(
                        text,
                        "fiber dimension: not available (needs d < (n/2)(dL + 2 - 2g))"
                    );
                }
            }
            if let Some(dim) = dimension {
                let _ = writeln!(text, "expected dimension of the moduli space: {dim}");
            }
            if let Some(c) = cohomology {
                if let Some(betti) = c.betti {
                    let _ = writeln!(
                        text,
                        "betti numbers (b1, b2, b3) = ({}, {}, {}), picard rank {}",
                        betti.b1,
                        betti.b2,
                        betti.b3,
                        c.picard_rank.unwrap_or_default()
                    );
                }
                let _ = writeln!(
                    text,
                    "irreducible: {}; simply connected: {}; determines the curve: {}",
                    c.irreducible, c.simply_connected, c.torelli
                );
            }
            if let Some(v) = connectedness {
                let _ = writeln!(
                    text,
                    "connectedness: {}",
                    match v {
                        reports::Connectedness::ConnectedNonempty => "connected and nonempty",
                        reports::Connectedness::Unknown => "unknown in this range",
                    }
                );
            }
            emit(cli, &doc, text);
            Ok(ExitCode::SUCCESS)
        }
        ReportKind::Maxdeg { rank, twist_degree, genus } => {
            let report = reports::max_degree_report(*rank, *twist_degree, *genus)?;
            let inputs = json!({
                "command": "report maxdeg",
                "n": rank, "dL": twist_degree, "genus": genus,
            });
            let results = serde_json::to_value(report)?;
            let doc = ReportDocument::new(
                inputs,
                results,
                &[facts::MAX_DEGREE, facts::MAX_DEGREE_COMPONENTS],
                cli.seed,
            );
            let mut text = String::new();
            let _ = writeln!(
                text,
                "maximal degree for n={rank}, dL={twist_degree}: d = {}",
                report.maximal_degree
            );
            match report.kind {
                reports::MaxDegreeKind::Orthogonal { component_count_at_least } => {
                    let _ = writeln!(text, "moduli space: orthogonal bundles (twist untwists)");
                    if let Some(count) = component_count_at_least {
                        let _ =
                            writeln!(text, "connected components: at least {count} (genus {genus})");
                    }
                }
                reports::MaxDegreeKind::LTwistedOrthogonal => {
                    let _ = writeln!(
                        text,
                        "moduli space: bundles orthogonal with respect to the twisting line bundle"
                    );
                }
            }
            emit(cli, &doc, text);
            Ok(ExitCode::SUCCESS)
        }
    }
}
