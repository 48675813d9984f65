//! End-to-end acceptance run: one PASS/FAIL line per criterion.

mod common;

use std::time::Instant;

use indroot::report::{CheckReport, Status};
use indroot::survey::{
    check_alpha_stable_vertex, check_ek, check_lower_bound_families, check_moon_moser, check_ratio_bound_forests,
    check_ratio_bound_graphs, check_unique_max_set_bound, check_wilf, check_xi_deletion_ratio, class_counts,
    star_gap, tree_family_certificate, tree_table, well_covered_scan,
};
use indroot::enumerate::{enumerate_graphs, enumerate_trees};
use indroot::indpoly::ratio_to_f64;
use indroot::{
    independence_polynomial, independence_polynomial_tree, GraphClass, SurveyContext,
};
use num_bigint::BigInt;
use num_rational::BigRational;

const TABLE_ODD: [(usize, f64); 8] = [
    (3, 2.61803398900000),
    (5, 5.04891733952231),
    (7, 9.49699733952714),
    (9, 17.9705962347393),
    (11, 34.4632033453548),
    (13, 66.9662907779610),
    (15, 131.473379027662),
    (17, 259.980782682655),
];

const TABLE_EVEN: [(usize, f64); 8] = [
    (2, 0.5),
    (4, 1.77423195656734),
    (6, 3.732050808),
    (8, 5.78338611675281),
    (10, 10.0833151322046),
    (12, 18.5001015662614),
    (14, 34.9710040067543),
    (16, 67.4665144832128),
];

type Outcome = Result<String, String>;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn table(ctx: &mut SurveyContext, rows: &[(usize, f64)], tol: f64) -> Outcome {
    let ns: Vec<usize> = rows.iter().map(|r| r.0).collect();
    let got = tree_table(ctx, &ns).map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    for ((n, want), row) in rows.iter().zip(&got) {
        let e = rel(row.maxmodt, *want);
        worst = worst.max(e);
        if e > tol {
            return Err(format!("n={n}: got {} want {want} (rel {e:.2e})", row.maxmodt));
        }
    }
    Ok(format!("{} orders, worst relative error {worst:.1e}", rows.len()))
}

fn exact_bounds(ctx: &mut SurveyContext) -> Outcome {
    for n in (3..=17).step_by(2) {
        let k = (n - 1) / 2;
        let (_, bracket, in_range) = tree_family_certificate(k).map_err(|e| e.to_string())?;
        let b = bracket.ok_or(format!("k={k}: no exact bracket"))?;
        let edge = -BigRational::from_integer(BigInt::from(1u64 << k));
        if b.hi > edge || !in_range {
            return Err(format!("k={k}: bracket not left of -2^k within k"));
        }
        let m = ctx.record(GraphClass::Trees, n).map_err(|e| e.to_string())?.max_modulus;
        let lo = (1u64 << k) as f64;
        if m < lo * (1.0 - 1e-12) || m > (lo + k as f64) * (1.0 + 1e-12) {
            return Err(format!("n={n}: maxmodt {m} outside [{lo}, {}]", lo + k as f64));
        }
    }
    Ok("odd n = 3..17 inside [2^k, 2^k + k], lower ends certified by sign changes".into())
}

fn report(r: &CheckReport) -> Outcome {
    if r.passed() {
        Ok(format!("{} lines", r.lines.len()))
    } else {
        let bad: Vec<String> = r
            .lines
            .iter()
            .filter(|l| l.status == Status::Violation)
            .take(3)
            .map(|l| l.detail.clone())
            .collect();
        Err(bad.join("; "))
    }
}

fn lift<T: std::fmt::Display>(r: Result<CheckReport, T>) -> Result<CheckReport, String> {
    r.map_err(|e| e.to_string())
}

fn ratios_graphs(ctx: &mut SurveyContext) -> Outcome {
    let total: usize = class_counts(ctx, GraphClass::Graphs, &[1, 2, 3, 4, 5])
        .map_err(|e| e.to_string())?
        .iter()
        .sum();
    if total != 52 {
        return Err(format!("n <= 5 corpus has {total} graphs"));
    }
    for n in 1..=8 {
        report(&lift(check_ratio_bound_graphs(ctx, n))?).map_err(|e| format!("n={n}: {e}"))?;
    }
    Ok("all graphs n <= 8 within the ratio cap; 52 graphs on n <= 5".into())
}

fn ratios_forests(ctx: &mut SurveyContext) -> Outcome {
    for n in 1..=14 {
        let r = lift(check_ratio_bound_forests(ctx, n))?;
        report(&r).map_err(|e| format!("n={n}: {e}"))?;
        if !r.lines.iter().any(|l| l.detail.contains("attains it: yes")) {
            return Err(format!("n={n}: extremal forest does not attain the cap"));
        }
        if n >= 2 {
            report(&lift(check_xi_deletion_ratio(ctx, n))?).map_err(|e| format!("n={n}: {e}"))?;
        }
    }
    Ok("forest and xi-deletion caps hold for n <= 14, attained by the extremal forests".into())
}

fn oracle() -> Outcome {
    let mut checked = 0;
    for n in 1..=6 {
        for g in enumerate_graphs(n).map_err(|e| e.to_string())? {
            if independence_polynomial(&g) != common::brute_force_poly(&g) {
                return Err(format!("mismatch at n={n}"));
            }
            checked += 1;
        }
    }
    let mut rng = common::rng(7);
    for i in 0..1000 {
        let n = 1 + i % 16;
        let g = common::random_graph(&mut rng, n, 0.1 + 0.8 * (i % 9) as f64 / 8.0);
        if independence_polynomial(&g) != common::brute_force_poly(&g) {
            return Err(format!("random mismatch at n={n}"));
        }
    }
    let mut trees = 0;
    for n in 1..=14 {
        for t in enumerate_trees(n).map_err(|e| e.to_string())? {
            if independence_polynomial_tree(&t).map_err(|e| e.to_string())? != independence_polynomial(&t) {
                return Err(format!("tree DP mismatch at n={n}"));
            }
            trees += 1;
        }
    }
    Ok(format!("{checked} small graphs, 1000 random graphs, {trees} trees"))
}

fn enestrom(ctx: &mut SurveyContext) -> Outcome {
    for (class, max) in [(GraphClass::Graphs, 8), (GraphClass::Trees, 17), (GraphClass::Forests, 14)] {
        let ns: Vec<usize> = (1..=max).collect();
        report(&lift(check_ek(ctx, class, &ns))?).map_err(|e| format!("{class}: {e}"))?;
    }
    let (outer, m) = star_gap().map_err(|e| e.to_string())?;
    if ratio_to_f64(&outer) != 30.0 || rel(m, 2.023777128) > 1e-6 {
        return Err(format!("K_1,30: outer {outer}, max modulus {m}"));
    }
    Ok(format!("every root inside its annulus; K_1,30 outer 30 vs max modulus {m:.10}"))
}

fn well_covered(ctx: &mut SurveyContext) -> Outcome {
    let (rows, _) = well_covered_scan(ctx, 10).map_err(|e| e.to_string())?;
    let worst = rows.iter().map(|r| r.max_modulus).fold(0.0, f64::max);
    if let Some(r) = rows.iter().find(|r| !r.all_well_covered || r.max_modulus > 1.0 + 1e-9) {
        return Err(format!("m={}: max modulus {} (witness {})", r.m, r.max_modulus, r.witness));
    }
    let count: usize = rows.iter().map(|r| r.trees).sum();
    Ok(format!("{count} base trees on m <= 10, largest modulus {worst:.15}"))
}

fn conjectures(ctx: &mut SurveyContext) -> Outcome {
    let graphs: Vec<usize> = (3..=8).collect();
    let trees: Vec<usize> = (3..=17).collect();
    let r = indroot::survey::check_conjectures(ctx, &graphs, &trees).map_err(|e| e.to_string())?;
    let mut refuted = Vec::new();
    for l in &r.lines {
        match l.status {
            Status::Supported => {}
            Status::Refuted => match &l.witness {
                Some(w) if !w.is_empty() => refuted.push(format!("n={} witness {w}", l.n.unwrap_or(0))),
                _ => return Err(format!("refuted line without witness: {}", l.detail)),
            },
            other => return Err(format!("unexpected status {other:?}: {}", l.detail)),
        }
    }
    if refuted.is_empty() {
        Ok(format!("{} lines, all supported", r.lines.len()))
    } else {
        Ok(format!(
            "{} lines; refuted with witnesses: {}",
            r.lines.len(),
            refuted.join(", ")
        ))
    }
}

fn lemmas(ctx: &mut SurveyContext) -> Outcome {
    for n in 1..=7 {
        report(&lift(check_alpha_stable_vertex(ctx, n))?).map_err(|e| format!("stable vertex n={n}: {e}"))?;
        report(&lift(check_unique_max_set_bound(ctx, n))?).map_err(|e| format!("unique set n={n}: {e}"))?;
    }
    for n in 2..=8 {
        let r = lift(check_moon_moser(ctx, n))?;
        report(&r).map_err(|e| format!("maximal sets n={n}: {e}"))?;
        if n % 3 == 0 && !r.lines.iter().any(|l| l.detail.contains("disjoint triangles among them: true")) {
            return Err(format!("n={n}: disjoint triangles do not attain the cap"));
        }
    }
    for n in 2..=14 {
        let r = lift(check_wilf(ctx, n))?;
        report(&r).map_err(|e| format!("maximum sets n={n}: {e}"))?;
        let tight = r.lines.iter().any(|l| l.witness.is_some() && l.detail.contains("attained by"));
        if !tight {
            return Err(format!("n={n}: no tree attains the cap"));
        }
    }
    Ok("stable vertex and unique-set bound n <= 7; maximal-set cap n <= 8; maximum-set cap n <= 14".into())
}

fn main() {
    let start = Instant::now();
    let mut ctx = SurveyContext::default();
    let criteria: Vec<(usize, &str, Box<dyn FnOnce(&mut SurveyContext) -> Outcome>)> = vec![
        (1, "odd tree table", Box::new(|c| table(c, &TABLE_ODD, 1e-9))),
        (2, "even tree table", Box::new(|c| table(c, &TABLE_EVEN, 1e-6))),
        (3, "exact odd-order bounds", Box::new(exact_bounds)),
        (4, "lower-bound family certificates", Box::new(|_| report(&lift(check_lower_bound_families(8))?))),
        (5, "graph ratio cap", Box::new(ratios_graphs)),
        (6, "forest ratio caps", Box::new(ratios_forests)),
        (7, "oracle equivalence", Box::new(|_| oracle())),
        (8, "annulus containment", Box::new(enestrom)),
        (9, "well-covered scan", Box::new(well_covered)),
        (10, "conjecture reporting", Box::new(conjectures)),
        (11, "lemma checks", Box::new(lemmas)),
    ];
    let mut failed = 0;
    for (id, name, run) in criteria {
        let t = Instant::now();
        let outcome = run(&mut ctx);
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS criterion {id} ({name}): {msg} [{secs:.1}s]"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {id} ({name}): {msg} [{secs:.1}s]");
            }
        }
    }
    println!(
        "acceptance: {} of 11 criteria passed in {:.1}s",
        11 - failed,
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
