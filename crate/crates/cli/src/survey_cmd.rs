use indroot::report::sig15;
use indroot::survey::{format_tree_table, tree_table, TableRow};
use indroot::{GraphClass, SurveyContext, SurveyRecord};
use serde_json::json;

use crate::config::{parse_range, Format, RunConfig, SurveyArgs};
use crate::CliError;

fn orders(args: &SurveyArgs, class: GraphClass, cfg: &RunConfig) -> Result<Vec<usize>, CliError> {
    let ceiling = cfg.ceilings.for_class(class);
    let step = if class == GraphClass::WellCoveredTrees { 2 } else { 1 };
    let ns = if let Some(r) = &args.odd {
        parse_range(r)?.into_iter().filter(|n| n % 2 == 1).collect()
    } else if let Some(r) = &args.even {
        parse_range(r)?.into_iter().filter(|n| n % 2 == 0).collect()
    } else if let Some(r) = &args.range {
        parse_range(r)?
    } else {
        (step..=ceiling).step_by(step).collect::<Vec<_>>()
    };
    if ns.is_empty() {
        return Err(CliError::usage("the range selects no order"));
    }
    for &n in &ns {
        cfg.ceilings
            .check(class, n)
            .map_err(|e| CliError::usage(format!("{class} n={n}: {e}; raise it with --max-n")))?;
    }
    Ok(ns)
}

fn tables(ctx: &mut SurveyContext, ns: &[usize]) -> Result<Vec<(&'static str, Vec<TableRow>)>, CliError> {
    let odd: Vec<usize> = ns.iter().copied().filter(|n| n % 2 == 1).collect();
    let even: Vec<usize> = ns.iter().copied().filter(|n| n % 2 == 0).collect();
    let mut out = Vec::new();
    if !odd.is_empty() {
        out.push(("odd", tree_table(ctx, &odd)?));
    }
    if !even.is_empty() {
        out.push(("even", tree_table(ctx, &even)?));
    }
    Ok(out)
}

fn violated(r: &SurveyRecord) -> bool {
    !r.within_bounds || !r.ek_violations.is_empty()
}

pub fn run(args: &SurveyArgs, cfg: &RunConfig) -> Result<(String, bool), CliError> {
    let class: GraphClass = args.class.parse().map_err(|e| CliError::usage(format!("{e}")))?;
    if args.reproduce_tables && class != GraphClass::Trees {
        return Err(CliError::usage("--reproduce-tables applies to trees only"));
    }
    let ns = orders(args, class, cfg)?;
    let mut ctx = SurveyContext::new(cfg.options);
    let records = ctx.records(class, &ns)?;
    let tabs = if args.reproduce_tables { tables(&mut ctx, &ns)? } else { Vec::new() };
    let violation = records.iter().any(violated);

    let out = match cfg.format {
        Format::Text => {
            let mut s = String::new();
            if args.reproduce_tables {
                for (parity, rows) in &tabs {
                    s.push_str(&format!("trees, {parity} n\n"));
                    s.push_str(&format_tree_table(rows));
                    s.push('\n');
                }
            } else {
                for r in &records {
                    s.push_str(&r.to_text());
                    s.push('\n');
                }
            }
            s
        }
        Format::Csv => {
            let mut s = String::new();
            if args.reproduce_tables {
                s.push_str("n,lower_bound,maxmodt,upper_bound\n");
                for (_, rows) in &tabs {
                    for r in rows {
                        s.push_str(&format!("{},{},{},{}\n", r.n, r.lower, sig15(r.maxmodt), r.upper));
                    }
                }
            } else {
                s.push_str(SurveyRecord::CSV_HEADER);
                s.push('\n');
                for r in &records {
                    s.push_str(&r.csv_row());
                    s.push('\n');
                }
            }
            s
        }
        Format::Json => {
            let table: Vec<&TableRow> = tabs.iter().flat_map(|(_, rows)| rows).collect();
            let mut v = json!({ "command": "survey", "class": class, "records": records });
            if args.reproduce_tables {
                v["table"] = serde_json::to_value(table).expect("json");
            }
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
    };
    Ok((out, violation))
}
