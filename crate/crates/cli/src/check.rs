use indroot::bounds::BoundFormulas;
use indroot::indpoly::ratio_to_f64;
use indroot::report::{sig15, CheckReport, Status};
use indroot::survey::{
    asymptotic_trend, check_alpha_stable_vertex, check_conjectures, check_ek, check_lower_bound_families,
    check_moon_moser, check_ratio_bound_forests, check_ratio_bound_graphs, check_sandwich,
    check_unique_max_set_bound, check_wilf, check_xi_deletion_ratio, class_counts, star_gap, well_covered_scan,
    Ceilings, TrendRow, WellCoveredRow,
};
use indroot::{GraphClass, SurveyContext};
use clap::ValueEnum;
use serde_json::json;

use crate::config::{parse_range, set_ceiling, BoundsArgs, CheckArgs, Format, RunConfig, Suite};
use crate::CliError;

/// Orders counted by the small-graph census.
const CENSUS: [usize; 5] = [1, 2, 3, 4, 5];
const CENSUS_TOTAL: usize = 52;
const STAR_LEAVES: usize = 30;
const STAR_MAXMOD: f64 = 2.023777128;

struct Outcome {
    reports: Vec<CheckReport>,
    well_covered: Vec<WellCoveredRow>,
    trend: Vec<TrendRow>,
}

fn suites(s: Suite) -> Vec<Suite> {
    match s {
        Suite::All => vec![
            Suite::LowerBounds,
            Suite::Ratios,
            Suite::Lemmas,
            Suite::Ek,
            Suite::Wellcovered,
            Suite::Conjectures,
        ],
        other => vec![other],
    }
}

fn upto(from: usize, to: usize) -> Vec<usize> {
    (from..=to).collect()
}

fn census(ctx: &mut SurveyContext, max_graphs: usize) -> Result<CheckReport, CliError> {
    let mut rep = CheckReport::new("small-graph census");
    if max_graphs < CENSUS.len() {
        return Ok(rep);
    }
    let counts = class_counts(ctx, GraphClass::Graphs, &CENSUS)?;
    let total: usize = counts.iter().sum();
    let parts: Vec<String> = counts.iter().map(usize::to_string).collect();
    rep.push(
        None,
        if total == CENSUS_TOTAL { Status::Pass } else { Status::Violation },
        format!("graphs on 1..5 vertices: {total} = {}", parts.join(" + ")),
        None,
    );
    Ok(rep)
}

fn star(rep: &mut CheckReport) -> Result<(), CliError> {
    let (outer, m) = star_gap()?;
    let ok = ratio_to_f64(&outer) == STAR_LEAVES as f64 && ((m - STAR_MAXMOD) / STAR_MAXMOD).abs() <= 1e-6;
    rep.push(
        Some(STAR_LEAVES + 1),
        if ok { Status::Pass } else { Status::Violation },
        format!(
            "K_1,{STAR_LEAVES}: annulus outer radius {} vs max modulus {}",
            indroot::indpoly::format_ratio(&outer),
            sig15(m)
        ),
        None,
    );
    Ok(())
}

fn run_suite(s: Suite, c: &Ceilings, kmax: usize, ctx: &mut SurveyContext, out: &mut Outcome) -> Result<(), CliError> {
    let graphs = upto(1, c.graphs);
    let trees = upto(1, c.trees);
    let forests = upto(1, c.forests);
    match s {
        Suite::All => unreachable!("expanded by suites()"),
        Suite::LowerBounds => {
            out.reports.push(check_lower_bound_families(kmax)?);
            out.reports.push(check_sandwich(ctx, GraphClass::Graphs, &graphs)?);
            out.reports.push(check_sandwich(ctx, GraphClass::Forests, &forests)?);
            out.reports.push(check_sandwich(ctx, GraphClass::Trees, &trees)?);
            let (rows, rep) = asymptotic_trend(ctx, &graphs, &trees)?;
            out.trend = rows;
            out.reports.push(rep);
        }
        Suite::Ratios => {
            out.reports.push(census(ctx, c.graphs)?);
            let mut g = CheckReport::new("graph ratio cap");
            for &n in &graphs {
                g.merge(check_ratio_bound_graphs(ctx, n)?);
            }
            out.reports.push(g);
            let mut f = CheckReport::new("forest ratio cap");
            for &n in &forests {
                f.merge(check_ratio_bound_forests(ctx, n)?);
            }
            out.reports.push(f);
            let mut x = CheckReport::new("xi deletion ratio");
            for n in 2..=c.forests {
                x.merge(check_xi_deletion_ratio(ctx, n)?);
            }
            out.reports.push(x);
        }
        Suite::Lemmas => {
            let mut a = CheckReport::new("alpha-stable vertex");
            let mut u = CheckReport::new("unique maximum set bound");
            for &n in &graphs {
                a.merge(check_alpha_stable_vertex(ctx, n)?);
                u.merge(check_unique_max_set_bound(ctx, n)?);
            }
            let mut mm = CheckReport::new("maximal set cap (graphs)");
            for n in 2..=c.graphs {
                mm.merge(check_moon_moser(ctx, n)?);
            }
            let mut w = CheckReport::new("maximum set cap (trees)");
            for n in 2..=c.trees {
                w.merge(check_wilf(ctx, n)?);
            }
            out.reports.extend([a, u, mm, w]);
        }
        Suite::Ek => {
            let mut rep = CheckReport::new("annulus containment");
            for (class, ns) in [
                (GraphClass::Graphs, &graphs),
                (GraphClass::Trees, &trees),
                (GraphClass::Forests, &forests),
            ] {
                rep.merge(check_ek(ctx, class, ns)?);
            }
            star(&mut rep)?;
            out.reports.push(rep);
        }
        Suite::Wellcovered => {
            let (rows, rep) = well_covered_scan(ctx, c.well_covered)?;
            out.well_covered = rows;
            out.reports.push(rep);
        }
        Suite::Conjectures => {
            out.reports.push(check_conjectures(ctx, &upto(3, c.graphs), &upto(3, c.trees))?);
        }
    }
    Ok(())
}

fn verdict(reports: &[CheckReport]) -> &'static str {
    if reports.iter().any(|r| !r.passed()) {
        "VIOLATION"
    } else if reports.iter().any(CheckReport::refuted) {
        "REFUTED"
    } else {
        "OK"
    }
}

pub fn run(args: &CheckArgs, cfg: &RunConfig) -> Result<(String, bool), CliError> {
    let mut c = cfg.ceilings;
    for (class, v) in [
        (GraphClass::Graphs, args.graphs),
        (GraphClass::Trees, args.trees),
        (GraphClass::Forests, args.forests),
        (GraphClass::WellCoveredTrees, args.m),
    ] {
        if let Some(n) = v {
            set_ceiling(&mut c, class, n);
        }
    }
    c.validate().map_err(|e| CliError::usage(format!("ceiling: {e}")))?;
    if args.kmax == 0 {
        return Err(CliError::usage("--kmax must be at least 1"));
    }
    let mut ctx = SurveyContext::new(cfg.options);
    let mut outcome = Outcome { reports: Vec::new(), well_covered: Vec::new(), trend: Vec::new() };
    for s in suites(args.suite) {
        run_suite(s, &c, args.kmax, &mut ctx, &mut outcome)?;
    }
    let verdict = verdict(&outcome.reports);
    let suite = args.suite.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let out = match cfg.format {
        Format::Text => {
            let mut s: String = outcome.reports.iter().map(|r| r.to_text() + "\n").collect();
            let lines: usize = outcome.reports.iter().map(|r| r.lines.len()).sum();
            let count = |st| outcome.reports.iter().map(|r| r.count(st)).sum::<usize>();
            s.push_str(&format!(
                "== verdict: {verdict} ({lines} lines: {} pass, {} supported, {} refuted, {} violation)\n",
                count(Status::Pass),
                count(Status::Supported),
                count(Status::Refuted),
                count(Status::Violation),
            ));
            if verdict == "REFUTED" {
                s.push_str("REFUTED: at least one conjecture fails as stated; see the REFUTED lines and witnesses\n");
            }
            s
        }
        Format::Csv => {
            let mut s = format!("{}\n", CheckReport::CSV_HEADER);
            for r in &outcome.reports {
                for row in r.csv_rows() {
                    s.push_str(&row);
                    s.push('\n');
                }
            }
            s
        }
        Format::Json => {
            let mut v = json!({
                "command": "check",
                "suite": suite,
                "verdict": verdict,
                "reports": outcome.reports,
            });
            if !outcome.well_covered.is_empty() {
                v["well_covered"] = serde_json::to_value(&outcome.well_covered).expect("json");
            }
            if !outcome.trend.is_empty() {
                v["trend"] = serde_json::to_value(&outcome.trend).expect("json");
            }
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
    };
    Ok((out, verdict == "VIOLATION"))
}

pub fn bounds(args: &BoundsArgs, cfg: &RunConfig) -> Result<(String, bool), CliError> {
    let ns = parse_range(&args.range)?;
    if ns.contains(&0) {
        return Err(CliError::usage("orders start at 1"));
    }
    let rows: Vec<BoundFormulas> = ns.iter().map(|&n| BoundFormulas::at(n)).collect();
    let opt = |o: &Option<String>| o.clone().unwrap_or_default();
    let out = match cfg.format {
        Format::Text | Format::Csv => {
            let sep = if cfg.format == Format::Csv { "," } else { "  " };
            let mut s = [
                "n",
                "moon_moser",
                "wilf",
                "graph_ratio_cap",
                "forest_ratio_cap",
                "xi_deletion_cap",
                "graph_lower_bound",
                "tree_lower_bound",
                "conjectured_graph_cap",
                "conjectured_tree_cap",
            ]
            .join(sep);
            s.push('\n');
            for r in &rows {
                let cells = [
                    r.n.to_string(),
                    r.moon_moser.clone(),
                    opt(&r.wilf),
                    sig15(r.graph_ratio_cap),
                    r.forest_ratio_cap.clone(),
                    opt(&r.xi_deletion_cap),
                    r.graph_lower_bound.clone(),
                    r.tree_lower_bound.clone(),
                    opt(&r.conjectured_graph_cap),
                    opt(&r.conjectured_tree_cap),
                ];
                s.push_str(&cells.join(sep));
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let v = json!({ "command": "bounds", "rows": rows });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
    };
    Ok((out, false))
}
