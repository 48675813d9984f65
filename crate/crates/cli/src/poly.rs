use std::fmt::Write as _;
use std::io::Read as _;

use indroot::report::sig15;
use indroot::{
    certify_real_root_left_of,
    ek_annulus, find_roots_with, from_edge_list, from_graph6, independence_polynomial, mu, to_graph6, Family,
    Graph, IntPoly, RootReport,
};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::config::{Format, PolyArgs, RunConfig};
use crate::CliError;

struct Input {
    label: Option<String>,
    graph: Graph,
}

struct Analysis {
    label: Option<String>,
    graph6: String,
    n: usize,
    edges: usize,
    poly: IntPoly,
    mu: u64,
    inner: String,
    outer: String,
    inner_f: f64,
    outer_f: f64,
    roots: RootReport,
}

fn read_stdin() -> Result<String, CliError> {
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| CliError::operational(format!("reading stdin: {e}")))?;
    Ok(s)
}

fn edge_text(arg: &str) -> Result<String, CliError> {
    if arg == "-" {
        read_stdin()
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| CliError::operational(format!("reading {path}: {e}")))
    } else {
        Ok(arg.replace("\\n", "\n"))
    }
}

fn inputs(args: &PolyArgs) -> Result<Vec<Input>, CliError> {
    let input = &args.input;
    if let Some(s) = &input.g6 {
        return Ok(vec![Input { label: None, graph: from_graph6(s)? }]);
    }
    if let Some(e) = &input.edges {
        return Ok(vec![Input { label: None, graph: from_edge_list(&edge_text(e)?)? }]);
    }
    if let Some(f) = &input.family {
        let fam: Family = match args.k {
            Some(k) => Family::from_tag(f, k)?,
            None => f.parse()?,
        };
        return Ok(vec![Input { label: Some(fam.to_string()), graph: fam.build()? }]);
    }
    // Batch mode: one graph6 string per line.
    read_stdin()?
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| Ok(Input { label: None, graph: from_graph6(l)? }))
        .collect()
}

fn analyse(input: Input, cfg: &RunConfig) -> Result<Analysis, CliError> {
    let g = input.graph;
    let poly = independence_polynomial(&g);
    let annulus = ek_annulus(&poly)?;
    let mut roots = find_roots_with(&poly, &cfg.options.roots)?;
    // A real largest root gets an exact sign bracket next to the float.
    let top = roots.max_root();
    if top.im == 0.0 && top.re < 0.0 {
        if let Some(t) = BigRational::from_float(top.re * (1.0 - 1e-9)) {
            roots.certified_bracket = certify_real_root_left_of(&poly, &t)?.bracket().cloned();
        }
    }
    Ok(Analysis {
        label: input.label,
        graph6: to_graph6(&g),
        n: g.order(),
        edges: g.edge_count(),
        mu: mu(&g),
        inner: indroot::indpoly::format_ratio(&annulus.inner),
        outer: indroot::indpoly::format_ratio(&annulus.outer),
        inner_f: annulus.inner_f64(),
        outer_f: annulus.outer_f64(),
        poly,
        roots,
    })
}

fn root_text(re: f64, im: f64) -> String {
    if im == 0.0 {
        sig15(re)
    } else {
        format!("{} {} {}i", sig15(re), if im < 0.0 { '-' } else { '+' }, sig15(im.abs()))
    }
}

fn text(a: &Analysis) -> String {
    let mut out = String::new();
    let name = a.label.as_deref().map(|l| format!("{l} ")).unwrap_or_default();
    let _ = writeln!(out, "graph: {name}{} (n={}, m={})", a.graph6, a.n, a.edges);
    let _ = writeln!(out, "i(G,x) = {}", a.poly);
    let _ = writeln!(out, "coefficients: [{}]", a.poly.to_decimal_strings().join(", "));
    let _ = writeln!(out, "alpha = {}  xi = {}  mu = {}", a.poly.degree(), a.poly.leading(), a.mu);
    let _ = writeln!(
        out,
        "annulus: {} <= |z| <= {}  ({} .. {})",
        a.inner,
        a.outer,
        sig15(a.inner_f),
        sig15(a.outer_f)
    );
    let _ = writeln!(out, "roots:");
    for r in &a.roots.roots {
        let _ = writeln!(
            out,
            "  {:<40} |z| = {}  residual {:.1e}",
            root_text(r.re, r.im),
            sig15(r.modulus()),
            r.residual
        );
    }
    let _ = writeln!(out, "max modulus: {}", sig15(a.roots.max_modulus));
    if let Some(b) = &a.roots.certified_bracket {
        let _ = writeln!(out, "largest root certified real in [{}, {}]", sig15(b.lo_f64()), sig15(b.hi_f64()));
    }
    out
}

fn json_value(a: &Analysis) -> Value {
    json!({
        "graph6": a.graph6,
        "family": a.label,
        "n": a.n,
        "edges": a.edges,
        "coefficients": a.poly.to_decimal_strings(),
        "alpha": a.poly.degree(),
        "xi": a.poly.leading().to_string(),
        "mu": a.mu,
        "annulus": { "inner": a.inner, "outer": a.outer },
        "roots": a.roots.to_json_value(),
    })
}

pub const CSV_HEADER: &str = "graph6,n,alpha,xi,mu,coefficients,ek_inner,ek_outer,max_modulus,roots";

fn csv_row(a: &Analysis) -> String {
    let roots: Vec<String> = a
        .roots
        .roots
        .iter()
        .map(|r| format!("{}:{}", sig15(r.re), sig15(r.im)))
        .collect();
    format!(
        "{},{},{},{},{},{},{},{},{},{}",
        a.graph6,
        a.n,
        a.poly.degree(),
        a.poly.leading(),
        a.mu,
        a.poly.to_decimal_strings().join(";"),
        a.inner,
        a.outer,
        sig15(a.roots.max_modulus),
        roots.join(";")
    )
}

pub fn run(args: &PolyArgs, cfg: &RunConfig) -> Result<(String, bool), CliError> {
    let analyses = inputs(args)?
        .into_iter()
        .map(|i| analyse(i, cfg))
        .collect::<Result<Vec<_>, _>>()?;
    if analyses.is_empty() {
        return Err(CliError::usage("no input: pass --g6, --edges or --family, or graph6 lines on stdin"));
    }
    // Roots outside the annulus would contradict a theorem.
    let violation = analyses.iter().any(|a| {
        a.roots
            .roots
            .iter()
            .any(|r| !(r.modulus() >= a.inner_f * (1.0 - cfg.options.modulus_tol)
                && r.modulus() <= a.outer_f * (1.0 + cfg.options.modulus_tol)))
    });
    let out = match cfg.format {
        Format::Text => analyses.iter().map(text).collect::<Vec<_>>().join("\n"),
        Format::Csv => {
            let mut s = format!("{CSV_HEADER}\n");
            for a in &analyses {
                s.push_str(&csv_row(a));
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let results: Vec<Value> = analyses.iter().map(json_value).collect();
            let v = json!({ "command": "poly", "results": results });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
    };
    Ok((out, violation))
}

