//! Exhaustive maximum-modulus surveys over graph classes, and the checkers
//! that test bounds, lemmas and conjectures against them.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{
    conjectured_graph_cap, conjectured_graph_family, conjectured_tree_cap, conjectured_tree_family,
    forest_ratio_cap, format_bound, graph_lower_bound, graph_ratio_cap_f64, moon_moser,
    moon_moser_below_cube_root, tree_lower_bound, wilf, within_graph_ratio_cap, xi_deletion_cap,
};
use crate::canon::{canonical_graph, is_isomorphic};
use crate::enumerate::{
    enumerate_forests, enumerate_graphs, enumerate_trees, MAX_FOREST_ORDER, MAX_GRAPH_ORDER,
    MAX_TREE_ORDER,
};
use crate::error::{GraphError, SurveyError};
use crate::families::{build_family, Family};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::indpoly::{
    ek_annulus, format_ratio, independence_polynomial, independence_polynomial_tree,
    max_coeff_ratio, ratio_to_f64,
};
use crate::mis::{count_maximal_independent_sets, is_well_covered};
use crate::poly::IntPoly;
use crate::report::{sig15, CheckReport, Status};
use crate::roots::{certify_real_root_left_of, find_roots_with, Bracket, RealRootCertificate, RootConfig};

/// Members per unit of parallel work.
pub const SHARD_SIZE: usize = 1000;
/// At most this many offenders are listed per check line group.
const MAX_LISTED: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphClass {
    Graphs,
    Trees,
    Forests,
    /// Trees of the form `T*`, indexed by the order of `T*`.
    WellCoveredTrees,
}

impl GraphClass {
    pub const ALL: [GraphClass; 4] = [
        GraphClass::Graphs,
        GraphClass::Trees,
        GraphClass::Forests,
        GraphClass::WellCoveredTrees,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Graphs => "graphs",
            GraphClass::Trees => "trees",
            GraphClass::Forests => "forests",
            GraphClass::WellCoveredTrees => "well-covered-trees",
        }
    }

    /// Largest order the enumerators support.
    pub fn max_order(self) -> usize {
        match self {
            GraphClass::Graphs => MAX_GRAPH_ORDER,
            GraphClass::Trees => MAX_TREE_ORDER,
            GraphClass::Forests => MAX_FOREST_ORDER,
            GraphClass::WellCoveredTrees => 2 * MAX_TREE_ORDER,
        }
    }

    fn acyclic(self) -> bool {
        self != GraphClass::Graphs
    }

    /// One representative per isomorphism class.
    pub fn members(self, n: usize) -> Result<Vec<Graph>, SurveyError> {
        Ok(match self {
            GraphClass::Graphs => enumerate_graphs(n)?,
            GraphClass::Trees => enumerate_trees(n)?,
            GraphClass::Forests => enumerate_forests(n)?,
            GraphClass::WellCoveredTrees => {
                if n % 2 == 1 || n == 0 {
                    return Err(SurveyError::Unsupported(format!(
                        "well-covered trees T* have even order, got {n}"
                    )));
                }
                enumerate_trees(n / 2)?
                    .iter()
                    .map(|t| t.star_operation())
                    .collect::<Result<Vec<_>, _>>()?
            }
        })
    }

    /// Bounds on the largest root modulus over the class at order `n`.
    pub fn modulus_bounds(self, n: usize) -> (f64, f64) {
        match self {
            GraphClass::Graphs => (ratio_to_f64(&graph_lower_bound(n)), graph_ratio_cap_f64(n)),
            GraphClass::Trees | GraphClass::Forests => (
                ratio_to_f64(&tree_lower_bound(n)),
                ratio_to_f64(&forest_ratio_cap(n)),
            ),
            // Roots of a well-covered graph lie in |z| <= alpha, and alpha(T*) = n/2.
            GraphClass::WellCoveredTrees => (0.0, (n / 2) as f64),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = SurveyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "graphs" | "graph" => Ok(GraphClass::Graphs),
            "trees" | "tree" => Ok(GraphClass::Trees),
            "forests" | "forest" => Ok(GraphClass::Forests),
            "well-covered-trees" | "well-covered" | "wellcovered" | "wc" => {
                Ok(GraphClass::WellCoveredTrees)
            }
            _ => Err(SurveyError::Unsupported(format!("unknown class {s:?}"))),
        }
    }
}

/// Enumeration ceilings; the defaults keep a full check run to minutes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Ceilings {
    pub graphs: usize,
    pub trees: usize,
    pub forests: usize,
    /// Order of the base tree `T` in the well-covered scan.
    pub well_covered: usize,
}

impl Default for Ceilings {
    fn default() -> Self {
        Ceilings {
            graphs: 8,
            trees: 17,
            forests: 14,
            well_covered: 10,
        }
    }
}

impl Ceilings {
    pub fn validate(&self) -> Result<(), GraphError> {
        for (n, max) in [
            (self.graphs, MAX_GRAPH_ORDER),
            (self.trees, MAX_TREE_ORDER),
            (self.forests, MAX_FOREST_ORDER),
            (self.well_covered, MAX_TREE_ORDER),
        ] {
            if n == 0 || n > max {
                return Err(GraphError::OrderOutOfRange { n, min: 1, max });
            }
        }
        Ok(())
    }

    /// Ceiling expressed as an order in `class`.
    pub fn for_class(&self, class: GraphClass) -> usize {
        match class {
            GraphClass::Graphs => self.graphs,
            GraphClass::Trees => self.trees,
            GraphClass::Forests => self.forests,
            GraphClass::WellCoveredTrees => 2 * self.well_covered,
        }
    }

    pub fn check(&self, class: GraphClass, n: usize) -> Result<(), SurveyError> {
        let max = self.for_class(class);
        if n == 0 || n > max {
            return Err(GraphError::OrderOutOfRange { n, min: 1, max }.into());
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SurveyOptions {
    pub roots: RootConfig,
    /// Relative slack for comparing root moduli against bounds.
    pub modulus_tol: f64,
    /// Moduli within this (relative to `max(1, M)`) of the maximum `M` tie.
    pub tie_tol: f64,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            roots: RootConfig::default(),
            modulus_tol: 1e-6,
            tie_tol: 1e-9,
        }
    }
}

/// Extremal result for one class at one order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurveyRecord {
    pub n: usize,
    pub class: GraphClass,
    pub max_modulus: f64,
    /// Canonical graph6 of a member attaining `max_modulus`.
    pub witness: String,
    pub witness_root: (f64, f64),
    /// Canonical graph6 of every member within the tie tolerance, sorted.
    pub argmax: Vec<String>,
    /// Largest consecutive coefficient ratio over the class, exact.
    pub max_ratio: String,
    pub max_ratio_witness: String,
    pub class_count: usize,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub within_bounds: bool,
    pub max_residual: f64,
    /// Members with a root outside the inflated Eneström–Kakeya annulus.
    pub ek_violations: Vec<String>,
}

impl SurveyRecord {
    pub const CSV_HEADER: &'static str =
        "class,n,count,max_modulus,witness,max_ratio,lower_bound,upper_bound,within_bounds,argmax";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.class,
            self.n,
            self.class_count,
            sig15(self.max_modulus),
            self.witness,
            self.max_ratio,
            sig15(self.lower_bound),
            sig15(self.upper_bound),
            self.within_bounds,
            self.argmax.join(";"),
        )
    }

    pub fn to_text(&self) -> String {
        format!(
            "{} n={} count={} maxmod={} witness={} ties={} max_ratio={} bounds=[{}, {}]{}",
            self.class,
            self.n,
            self.class_count,
            sig15(self.max_modulus),
            self.witness,
            self.argmax.len(),
            self.max_ratio,
            sig15(self.lower_bound),
            sig15(self.upper_bound),
            if self.within_bounds { "" } else { " OUT-OF-BOUNDS" },
        )
    }
}

struct Evaluated {
    modulus: f64,
    root: (f64, f64),
    ratio: BigRational,
    ek_ok: bool,
    residual: f64,
}

fn polynomial_for(class: GraphClass, g: &Graph) -> IntPoly {
    if class.acyclic() {
        independence_polynomial_tree(g).expect("acyclic classes only hold forests")
    } else {
        independence_polynomial(g)
    }
}

fn evaluate(class: GraphClass, g: &Graph, opts: &SurveyOptions) -> Result<Evaluated, SurveyError> {
    let p = polynomial_for(class, g);
    let report = find_roots_with(&p, &opts.roots).map_err(|source| SurveyError::Roots {
        graph6: to_graph6(g),
        source,
    })?;
    let annulus = ek_annulus(&p)?;
    let ek_ok = report
        .roots
        .iter()
        .all(|r| annulus.contains_modulus(r.modulus(), opts.modulus_tol));
    let top = report.max_root();
    Ok(Evaluated {
        modulus: report.max_modulus,
        root: (top.re, top.im),
        ratio: annulus.outer,
        ek_ok,
        residual: report.max_residual(),
    })
}

/// Associative fold state; on exact ties the earlier member wins.
struct Acc<'a> {
    count: usize,
    best: Option<(f64, (f64, f64), &'a Graph)>,
    ties: Vec<(f64, &'a Graph)>,
    ratio: Option<(BigRational, &'a Graph)>,
    ek_bad: Vec<&'a Graph>,
    residual: f64,
    tie_tol: f64,
}

impl<'a> Acc<'a> {
    fn new(tie_tol: f64) -> Self {
        Acc {
            count: 0,
            best: None,
            ties: Vec::new(),
            ratio: None,
            ek_bad: Vec::new(),
            residual: 0.0,
            tie_tol,
        }
    }

    fn cutoff(&self) -> f64 {
        let m = self.best.map_or(0.0, |b| b.0);
        m - self.tie_tol * m.max(1.0)
    }

    fn absorb(&mut self, g: &'a Graph, e: Evaluated) {
        self.count += 1;
        self.residual = self.residual.max(e.residual);
        if !e.ek_ok {
            self.ek_bad.push(g);
        }
        if self.best.map_or(true, |b| e.modulus > b.0) {
            self.best = Some((e.modulus, e.root, g));
        }
        self.ties.push((e.modulus, g));
        let cut = self.cutoff();
        self.ties.retain(|t| t.0 >= cut);
        if self.ratio.as_ref().map_or(true, |r| e.ratio > r.0) {
            self.ratio = Some((e.ratio, g));
        }
    }

    fn merge(mut self, other: Acc<'a>) -> Self {
        self.count += other.count;
        self.residual = self.residual.max(other.residual);
        self.ek_bad.extend(other.ek_bad);
        if let Some(b) = other.best {
            if self.best.map_or(true, |s| b.0 > s.0) {
                self.best = Some(b);
            }
        }
        self.ties.extend(other.ties);
        let cut = self.cutoff();
        self.ties.retain(|t| t.0 >= cut);
        if let Some(r) = other.ratio {
            if self.ratio.as_ref().map_or(true, |s| r.0 > s.0) {
                self.ratio = Some(r);
            }
        }
        self
    }
}

fn canonical_g6(g: &Graph) -> String {
    to_graph6(&canonical_graph(g))
}

/// Folds a member list into a record, sharding the work across the rayon
/// pool. The result does not depend on scheduling.
pub fn survey_members(
    class: GraphClass,
    n: usize,
    members: &[Graph],
    opts: &SurveyOptions,
) -> Result<SurveyRecord, SurveyError> {
    if members.is_empty() {
        return Err(SurveyError::Unsupported(format!("no {class} on {n} vertices")));
    }
    let shards: Vec<Acc> = members
        .par_chunks(SHARD_SIZE)
        .map(|chunk| {
            let mut acc = Acc::new(opts.tie_tol);
            for g in chunk {
                acc.absorb(g, evaluate(class, g, opts)?);
            }
            Ok(acc)
        })
        .collect::<Result<_, SurveyError>>()?;
    let acc = shards
        .into_iter()
        .reduce(Acc::merge)
        .expect("at least one shard");

    let (max_modulus, witness_root, best) = acc.best.expect("non-empty class");
    let (ratio, ratio_g) = acc.ratio.expect("non-empty class");
    let mut argmax: Vec<String> = acc.ties.iter().map(|t| canonical_g6(t.1)).collect();
    argmax.sort();
    argmax.dedup();
    let (lower_bound, upper_bound) = class.modulus_bounds(n);
    let tol = opts.modulus_tol;
    let within_bounds =
        max_modulus >= lower_bound * (1.0 - tol) && max_modulus <= upper_bound * (1.0 + tol);
    Ok(SurveyRecord {
        n,
        class,
        max_modulus,
        witness: canonical_g6(best),
        witness_root,
        argmax,
        max_ratio: format_ratio(&ratio),
        max_ratio_witness: canonical_g6(ratio_g),
        class_count: acc.count,
        lower_bound,
        upper_bound,
        within_bounds,
        max_residual: acc.residual,
        ek_violations: acc.ek_bad.iter().map(|g| canonical_g6(g)).collect(),
    })
}

/// Largest root modulus over `class` at order `n`, with the witness.
pub fn maxmod_exhaustive(n: usize, class: GraphClass) -> Result<SurveyRecord, SurveyError> {
    SurveyContext::default().record(class, n)
}

/// Caches member lists and survey records so checkers can share them.
#[derive(Default)]
pub struct SurveyContext {
    pub options: SurveyOptions,
    members: HashMap<(GraphClass, usize), Arc<Vec<Graph>>>,
    records: HashMap<(GraphClass, usize), SurveyRecord>,
}

impl SurveyContext {
    pub fn new(options: SurveyOptions) -> Self {
        SurveyContext {
            options,
            ..Default::default()
        }
    }

    pub fn members(&mut self, class: GraphClass, n: usize) -> Result<Arc<Vec<Graph>>, SurveyError> {
        if let Some(m) = self.members.get(&(class, n)) {
            return Ok(m.clone());
        }
        let m = Arc::new(class.members(n)?);
        self.members.insert((class, n), m.clone());
        Ok(m)
    }

    pub fn record(&mut self, class: GraphClass, n: usize) -> Result<SurveyRecord, SurveyError> {
        if let Some(r) = self.records.get(&(class, n)) {
            return Ok(r.clone());
        }
        let members = self.members(class, n)?;
        let r = survey_members(class, n, &members, &self.options)?;
        self.records.insert((class, n), r.clone());
        Ok(r)
    }

    pub fn records(&mut self, class: GraphClass, ns: &[usize]) -> Result<Vec<SurveyRecord>, SurveyError> {
        ns.iter().map(|&n| self.record(class, n)).collect()
    }

    fn cached(&self, class: GraphClass, n: usize) -> Option<&SurveyRecord> {
        self.records.get(&(class, n))
    }
}

fn pow_int(base: u32, e: usize) -> BigInt {
    BigInt::from(base).pow(e as u32)
}

fn rat(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

/// `true` when `p` changes sign (or vanishes) on `[a, b]` with `p(b) != 0`,
/// which proves a root in `[a, b)`.
pub fn sign_change_on(p: &IntPoly, a: &BigRational, b: &BigRational) -> bool {
    let sb = p.sign_at(b);
    let sa = p.sign_at(a);
    sb != 0 && (sa == 0 || sa != sb)
}

fn bracket_text(b: &Bracket) -> String {
    format!("[{}, {}]", sig15(b.lo_f64()), sig15(b.hi_f64()))
}

/// Certifies a root of `i(T_k)` in `[-2^k - k, -2^k)` by exact signs alone.
pub fn tree_family_certificate(k: usize) -> Result<(IntPoly, Option<Bracket>, bool), SurveyError> {
    let t = build_family(Family::Tk(k))?;
    let p = independence_polynomial_tree(&t)?;
    let edge = -rat(pow_int(2, k));
    let cert = certify_real_root_left_of(&p, &edge)?;
    let lo = &edge - rat(BigInt::from(k));
    let in_range = sign_change_on(&p, &lo, &edge);
    Ok((p, cert.bracket().cloned(), in_range))
}

/// For every family and every `k <= k_max`, certifies a real root left of
/// `-3^k` (triangle families) or `-2^k` (tree families).
pub fn check_lower_bound_families(k_max: usize) -> Result<CheckReport, SurveyError> {
    let mut rep = CheckReport::new("lower-bound families");
    if k_max == 0 {
        return Err(SurveyError::Unsupported("k_max must be at least 1".into()));
    }
    for k in 1..=k_max {
        for fam in [Family::G0(k), Family::G1(k), Family::G2(k), Family::Tk(k), Family::TkPrime(k)] {
            let g = build_family(fam)?;
            let n = g.order();
            let tree = matches!(fam, Family::Tk(_) | Family::TkPrime(_));
            let p = if tree {
                independence_polynomial_tree(&g)?
            } else {
                independence_polynomial(&g)
            };
            let base: u32 = if tree { 2 } else { 3 };
            let edge = -rat(pow_int(base, k));
            let witness = Some(canonical_g6(&g));
            let cert = certify_real_root_left_of(&p, &edge)?;
            let Some(b) = cert.bracket() else {
                rep.push(
                    Some(n),
                    Status::Violation,
                    format!("{fam}: no sign change left of -{base}^{k}"),
                    witness,
                );
                continue;
            };
            let mut detail = format!("{fam}: root in {} left of -{base}^{k}", bracket_text(b));
            match fam {
                Family::G2(_) => {
                    // The order 3k+5 alone would suggest the threshold 3^(k+1).
                    let deeper = -rat(pow_int(3, k + 1));
                    let beyond = certify_real_root_left_of(&p, &deeper)?.bracket().is_some();
                    detail.push_str(&format!(
                        "; left of -3^{}: {}",
                        k + 1,
                        if beyond { "yes" } else { "no" }
                    ));
                }
                Family::Tk(_) => {
                    let lo = &edge - rat(BigInt::from(k));
                    if !sign_change_on(&p, &lo, &edge) {
                        rep.push(
                            Some(n),
                            Status::Violation,
                            format!("{fam}: no root in [-2^{k}-{k}, -2^{k})"),
                            witness,
                        );
                        continue;
                    }
                    detail.push_str(&format!("; root in [-2^{k}-{k}, -2^{k})"));
                }
                Family::TkPrime(_) => {
                    let (wide, narrow) = tk_prime_intervals(&p, k);
                    if !wide {
                        rep.push(
                            Some(n),
                            Status::Violation,
                            format!("{fam}: no root in [-2^{}-{}, -2^{k})", k + 1, k + 4),
                            witness,
                        );
                        continue;
                    }
                    detail.push_str(&format!(
                        "; root in [-2^{}-{}, -2^{k}): yes; in [-2^({k}+1/2)-{}, -2^{k}): {}",
                        k + 1,
                        k + 4,
                        k + 3,
                        if narrow { "yes" } else { "not shown" }
                    ));
                }
                _ => {}
            }
            rep.push(Some(n), Status::Pass, detail, witness);
        }
    }
    Ok(rep)
}

/// Whether `i(T_k')` has a root in `[-2^(k+1)-k-4, -2^k)` and in the
/// narrower `[-2^(k+1/2)-k-3, -2^k)`. The irrational endpoint is replaced
/// by a rational point inside the narrow interval, so `true` is a proof.
pub fn tk_prime_intervals(p: &IntPoly, k: usize) -> (bool, bool) {
    let edge = -rat(pow_int(2, k));
    let wide_lo = -rat(pow_int(2, k + 1) + BigInt::from(k + 4));
    let wide = sign_change_on(p, &wide_lo, &edge);
    // s / 2^40 <= sqrt(2) * 2^k
    let bits = 40usize;
    let s = (pow_int(2, 2 * k + 1) << (2 * bits)).sqrt();
    let inner = BigRational::new(s, BigInt::one() << bits) + rat(BigInt::from(k + 3));
    let narrow = sign_change_on(p, &-inner, &edge);
    (wide, narrow)
}

/// Every graph on `n` vertices with an edge has max ratio at most
/// `3^(n/3) + n - 1`, decided by exact cube comparison.
pub fn check_ratio_bound_graphs(ctx: &mut SurveyContext, n: usize) -> Result<CheckReport, SurveyError> {
    let mut rep = CheckReport::new("graph ratio cap");
    let graphs = ctx.members(GraphClass::Graphs, n)?;
    let with_edges: Vec<&Graph> = graphs.iter().filter(|g| g.edge_count() > 0).collect();
    if with_edges.is_empty() {
        rep.push(Some(n), Status::Info, "no graph with an edge; edgeless graph excluded", None);
        return Ok(rep);
    }
    let results: Vec<(BigRational, bool)> = with_edges
        .par_iter()
        .map(|g| {
            let r = max_coeff_ratio(&independence_polynomial(g)).expect("positive coefficients");
            let ok = within_graph_ratio_cap(&r, n);
            (r, ok)
        })
        .collect();
    let mut best = 0;
    for (i, (r, ok)) in results.iter().enumerate() {
        if !ok && rep.lines.len() < MAX_LISTED {
            rep.push(
                Some(n),
                Status::Violation,
                format!("ratio {} exceeds 3^({n}/3)+{}", format_ratio(r), n - 1),
                Some(canonical_g6(with_edges[i])),
            );
        }
        if r > &results[best].0 {
            best = i;
        }
    }
    let bad = results.iter().filter(|r| !r.1).count();
    rep.push(
        Some(n),
        if bad == 0 { Status::Pass } else { Status::Violation },
        format!(
            "{} graphs ({} with an edge), max ratio {} <= {} ({} violations)",
            graphs.len(),
            with_edges.len(),
            format_ratio(&results[best].0),
            sig15(graph_ratio_cap_f64(n)),
            bad
        ),
        Some(canonical_g6(with_edges[best])),
    );
    Ok(rep)
}

/// Forest-specific ratio caps, plus whether the expected forest attains
/// the cap.
pub fn check_ratio_bound_forests(ctx: &mut SurveyContext, n: usize) -> Result<CheckReport, SurveyError> {
    let mut rep = CheckReport::new("forest ratio cap");
    let forests = ctx.members(GraphClass::Forests, n)?;
    let cap = forest_ratio_cap(n);
    let ratios: Vec<BigRational> = forests
        .par_iter()
        .map(|f| max_coeff_ratio(&independence_polynomial_tree(f).expect("forest")).expect("positive"))
        .collect();
    let mut achievers = Vec::new();
    let mut bad = 0;
    for (f, r) in forests.iter().zip(&ratios) {
        if r > &cap {
            bad += 1;
            if bad <= MAX_LISTED {
                rep.push(
                    Some(n),
                    Status::Violation,
                    format!("ratio {} exceeds cap {}", format_ratio(r), format_bound(&cap)),
                    Some(canonical_g6(f)),
                );
            }
        } else if r == &cap {
            achievers.push(canonical_g6(f));
        }
    }
    achievers.sort();
    let expected = if n % 2 == 1 {
        build_family(Family::Tk((n - 1) / 2))?
    } else {
        build_family(Family::Tk((n - 2) / 2))?.disjoint_union(&Graph::empty(1)?)?
    };
    let expected_g6 = canonical_g6(&expected);
    let name = if n % 2 == 1 {
        format!("T_{}", (n - 1) / 2)
    } else {
        format!("T_{} + K1", (n - 2) / 2)
    };
    let status = if bad == 0 { Status::Pass } else { Status::Violation };
    let max = ratios.iter().max().expect("non-empty");
    rep.push(
        Some(n),
        status,
        format!(
            "{} forests, max ratio {} <= cap {} ({} violations)",
            forests.len(),
            format_ratio(max),
            format_bound(&cap),
            bad
        ),
        None,
    );
    let achieved = achievers.contains(&expected_g6);
    rep.push(
        Some(n),
        if achieved { Status::Pass } else { Status::Violation },
        format!(
            "cap attained by {} forest(s); {name} attains it: {}",
            achievers.len(),
            if achieved { "yes" } else { "no" }
        ),
        Some(expected_g6),
    );
    Ok(rep)
}

fn alpha_of(g: &Graph) -> usize {
    independence_polynomial(g).degree()
}

/// Every graph with an edge has a non-isolated vertex `v` with
/// `alpha(G) = alpha(G - v) >= alpha(G - N[v]) + 1`.
pub fn check_alpha_stable_vertex(ctx: &mut SurveyContext, n: usize) -> Result<CheckReport, SurveyError> {
    let mut rep = CheckReport::new("alpha-stable vertex");
    let graphs = ctx.members(GraphClass::Graphs, n)?;
    let failures: Vec<&Graph> = graphs
        .par_iter()
        .filter(|g| g.edge_count() > 0)
        .filter(|g| stable_vertex(g).is_none())
        .collect();
    for g in failures.iter().take(MAX_LISTED) {
        rep.push(Some(n), Status::Violation, "no witnessing vertex", Some(canonical_g6(g)));
    }
    let checked = graphs.iter().filter(|g| g.edge_count() > 0).count();
    rep.push(
        Some(n),
        if failures.is_empty() { Status::Pass } else { Status::Violation },
        format!("witness found for {} of {} graphs with an edge", checked - failures.len(), checked),
        None,
    );
    Ok(rep)
}

/// First vertex satisfying the alpha-stability condition.
pub fn stable_vertex(g: &Graph) -> Option<usize> {
    let a = alpha_of(g);
    g.vertices().find(|&v| {
        g.degree(v) > 0 && {
            let minus = alpha_of(&g.delete_vertex(v).expect("active"));
            let closed = alpha_of(&g.delete_closed_neighborhood(v).expect("active"));
            a == minus && minus > closed
        }
    })
}

/// Graphs with a unique maximum independent set have
/// `i_(alpha-1) <= 3^(n/3) + n - 1`.
pub fn check_unique_max_set_bound(ctx: &mut SurveyContext, n: usize) -> Result<CheckReport, SurveyError> {
    let mut rep = CheckReport::new("unique maximum set bound");
    let graphs = ctx.members(GraphClass::Graphs, n)?;
    let rows: Vec<(usize, BigInt, bool)> = graphs
        .par_iter()
        .enumerate()
        .filter_map(|(i, g)| {
            let p = independence_polynomial(g);
            let a = p.degree();
            if a == 0 || !p.leading().is_one() {
                return None;
            }
            let c = p.coeff(a - 1);
            let ok = within_graph_ratio_cap(&rat(c.clone()), n);
            Some((i, c, ok))
        })
        .collect();
    for (i, c, _) in rows.iter().filter(|r| !r.2).take(MAX_LISTED) {
        rep.push(
            Some(n),
            Status::Violation,
            format!("i_(alpha-1) = {c} exceeds the cap"),
            Some(canonical_g6(&graphs[*i])),
        );
    }
    let bad = rows.iter().filter(|r| !r.2).count();
    let top = rows.iter().max_by(|a, b| a.1.cmp(&b.1));
    rep.push(
        Some(n),
        if bad == 0 { Status::Pass } else { Status::Violation },
        format!(
            "{} of {} graphs have xi = 1; largest i_(alpha-1) = {} <= {} ({} violations)",
            rows.len(),
            graphs.len(),
            top.map(|t| t.1.to_string()).unwrap_or_else(|| "-".into()),
            sig15(graph_ratio_cap_f64(n)),
            bad
        ),
        top.map(|t| canonical_g6(&graphs[t.0])),
    );
    Ok(rep)
}

/// `xi(F) / xi(F - v)` stays below the parity cap for every forest and
/// every vertex.
pub fn check_xi_deletion_ratio(ctx: &mut SurveyContext, n: usize) -> Result<CheckReport, SurveyError> {
    let mut rep = CheckReport::new("xi deletion ratio");
    if n < 2 {
        return Err(GraphError::OrderOutOfRange { n, min: 2, max: MAX_FOREST_ORDER }.into());
    }
    let forests = ctx.members(GraphClass::Forests, n)?;
    let cap = xi_deletion_cap(n);
    let per: Vec<(BigRational, usize)> = forests
        .par_iter()
        .map(|f| {
            let xi = independence_polynomial_tree(f).expect("forest").leading();
            f.vertices()
                .map(|v| {
                    let sub = independence_polynomial_tree(&f.delete_vertex(v).expect("active"))
                        .expect("forest")
                        .leading();
                    (BigRational::new(xi.clone(), sub), v)
                })
                .max_by(|a, b| a.0.cmp(&b.0))
                .expect("n >= 2")
        })
        .collect();
    let mut bad = 0;
    for (f, (r, v)) in forests.iter().zip(&per) {
        if r > &cap {
            bad += 1;
            if bad <= MAX_LISTED {
                rep.push(
                    Some(n),
                    Status::Violation,
                    format!("xi ratio {} at vertex {v} exceeds {}", format_ratio(r), format_bound(&cap)),
                    Some(to_graph6(f)),
                );
            }
        }
    }
    let (i, (r, _)) = per
        .iter()
        .enumerate()
        .max_by(|a, b| a.1 .0.cmp(&b.1 .0).then(b.0.cmp(&a.0)))
        .expect("non-empty");
    rep.push(
        Some(n),
        if bad == 0 { Status::Pass } else { Status::Violation },
        format!(
            "{} forests x {n} vertices, max xi ratio {} <= {} ({} violations)",
            forests.len(),
            format_ratio(r),
            format_bound(&cap),
            bad
        ),
        Some(canonical_g6(&forests[i])),
    );
    Ok(rep)
}

/// `xi <= mu <= g(n)` over all graphs, `g(n) <= 3^(n/3)`, and the
/// graphs attaining `g(n)`.
pub fn check_moon_moser(ctx: &mut SurveyContext, n: usize) -> Result<CheckReport, SurveyError> {
    let mut rep = CheckReport::new("maximal set cap (graphs)");
    if n < 2 {
        return Err(GraphError::OrderOutOfRange { n, min: 2, max: MAX_GRAPH_ORDER }.into());
    }
    let graphs = ctx.members(GraphClass::Graphs, n)?;
    let cap = moon_moser(n);
    let rows: Vec<(BigInt, u64)> = graphs
        .par_iter()
        .map(|g| (independence_polynomial(g).leading(), count_maximal_independent_sets(g)))
        .collect();
    let mut bad = 0;
    for (g, (xi, mu)) in graphs.iter().zip(&rows) {
        let mu_r = rat(BigInt::from(*mu));
        if xi > &BigInt::from(*mu) || mu_r > cap {
            bad += 1;
            if bad <= MAX_LISTED {
                rep.push(
                    Some(n),
                    Status::Violation,
                    format!("xi = {xi}, mu = {mu}, cap {}", format_bound(&cap)),
                    Some(canonical_g6(g)),
                );
            }
        }
    }
    let max_mu = rows.iter().map(|r| r.1).max().expect("non-empty");
    let tight: Vec<&Graph> = graphs
        .iter()
        .zip(&rows)
        .filter(|(_, r)| rat(BigInt::from(r.1)) == cap)
        .map(|(g, _)| g)
        .collect();
    rep.push(
        Some(n),
        if bad == 0 { Status::Pass } else { Status::Violation },
        format!(
            "{} graphs, xi <= mu <= g({n}) = {}, max mu = {max_mu} ({} violations)",
            graphs.len(),
            format_bound(&cap),
            bad
        ),
        None,
    );
    let corollary = moon_moser_below_cube_root(n);
    rep.push(
        Some(n),
        if corollary { Status::Pass } else { Status::Violation },
        format!("g({n}) <= 3^({n}/3): {corollary}"),
        None,
    );
    let triangles = if n % 3 == 0 {
        let mut t = Graph::empty(0)?;
        for _ in 0..n / 3 {
            t = t.disjoint_union(&Graph::complete(3)?)?;
        }
        Some(t)
    } else {
        None
    };
    let detail = match &triangles {
        Some(t) => format!(
            "g({n}) attained by {} graph(s), disjoint triangles among them: {}",
            tight.len(),
            tight.iter().any(|g| is_isomorphic(g, t))
        ),
        None => format!("g({n}) attained by {} graph(s)", tight.len()),
    };
    rep.push(Some(n), Status::Info, detail, tight.first().map(|g| canonical_g6(g)));
    Ok(rep)
}

/// `xi <= t'(n)` over all trees, with the trees attaining `t'(n)`.
pub fn check_wilf(ctx: &mut SurveyContext, n: usize) -> Result<CheckReport, SurveyError> {
    let mut rep = CheckReport::new("maximum set cap (trees)");
    if n < 2 {
        return Err(GraphError::OrderOutOfRange { n, min: 2, max: MAX_TREE_ORDER }.into());
    }
    let trees = ctx.members(GraphClass::Trees, n)?;
    let cap = wilf(n);
    let xis: Vec<BigInt> = trees
        .par_iter()
        .map(|t| independence_polynomial_tree(t).expect("tree").leading())
        .collect();
    let bad: Vec<usize> = (0..trees.len()).filter(|&i| rat(xis[i].clone()) > cap).collect();
    for &i in bad.iter().take(MAX_LISTED) {
        rep.push(
            Some(n),
            Status::Violation,
            format!("xi = {} exceeds t'({n}) = {}", xis[i], format_bound(&cap)),
            Some(canonical_g6(&trees[i])),
        );
    }
    let max = xis.iter().max().expect("non-empty");
    let tight: Vec<String> = (0..trees.len())
        .filter(|&i| rat(xis[i].clone()) == cap)
        .map(|i| canonical_g6(&trees[i]))
        .collect();
    rep.push(
        Some(n),
        if bad.is_empty() { Status::Pass } else { Status::Violation },
        format!(
            "{} trees, max xi = {max} <= t'({n}) = {}; attained by {} tree(s)",
            trees.len(),
            format_bound(&cap),
            tight.len()
        ),
        tight.first().cloned(),
    );
    Ok(rep)
}

/// Per base-tree order `m`: every `T*` is well covered and its largest
/// root modulus, which is expected to stay inside the unit disk.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WellCoveredRow {
    pub m: usize,
    pub trees: usize,
    pub all_well_covered: bool,
    pub max_modulus: f64,
    pub witness: String,
}

pub fn well_covered_scan(
    ctx: &mut SurveyContext,
    m_max: usize,
) -> Result<(Vec<WellCoveredRow>, CheckReport), SurveyError> {
    if m_max == 0 || 2 * m_max > 64 {
        return Err(GraphError::OrderOutOfRange { n: m_max, min: 1, max: 32 }.into());
    }
    let mut rep = CheckReport::new("well-covered trees");
    let mut rows = Vec::new();
    for m in 1..=m_max {
        let stars = ctx.members(GraphClass::WellCoveredTrees, 2 * m)?;
        let all_wc = stars.par_iter().all(is_well_covered);
        let rec = ctx.record(GraphClass::WellCoveredTrees, 2 * m)?;
        if !all_wc {
            rep.push(Some(m), Status::Violation, "some T* is not well covered", None);
        }
        let inside = rec.max_modulus <= 1.0 + 1e-9;
        rep.push(
            Some(m),
            if inside { Status::Supported } else { Status::Refuted },
            format!(
                "{} trees T on {m} vertices; T* well covered: {all_wc}; max modulus {} {} 1",
                stars.len(),
                sig15(rec.max_modulus),
                if inside { "<=" } else { ">" }
            ),
            Some(rec.witness.clone()),
        );
        rows.push(WellCoveredRow {
            m,
            trees: stars.len(),
            all_well_covered: all_wc,
            max_modulus: rec.max_modulus,
            witness: rec.witness,
        });
    }
    Ok((rows, rep))
}

/// Records for every order in `ns`, then one sandwich line per record and
/// the cross-class orderings where both sides are cached. Odd tree orders
/// also get an exact certificate for the lower end.
pub fn check_sandwich(
    ctx: &mut SurveyContext,
    class: GraphClass,
    ns: &[usize],
) -> Result<CheckReport, SurveyError> {
    let mut rep = CheckReport::new(format!("modulus bounds ({class})"));
    for &n in ns {
        let rec = ctx.record(class, n)?;
        rep.push(
            Some(n),
            if rec.within_bounds { Status::Pass } else { Status::Violation },
            format!(
                "{} <= {} <= {} over {} members",
                sig15(rec.lower_bound),
                sig15(rec.max_modulus),
                sig15(rec.upper_bound),
                rec.class_count
            ),
            Some(rec.witness.clone()),
        );
        // At n = 1 the root -1 sits on the threshold itself.
        if class == GraphClass::Trees && n % 2 == 1 && n >= 3 {
            let k = (n - 1) / 2;
            let (_, bracket, in_range) = tree_family_certificate(k)?;
            let ok = bracket.is_some() && in_range;
            let detail = match &bracket {
                Some(b) => format!(
                    "exact: i(T_{k}) has a root in {} and in [-2^{k}-{k}, -2^{k}): {in_range}",
                    bracket_text(b)
                ),
                None => format!("exact: no sign change of i(T_{k}) left of -2^{k}"),
            };
            rep.push(Some(n), if ok { Status::Pass } else { Status::Violation }, detail, None);
        }
        if class == GraphClass::Trees {
            for other in [GraphClass::Forests, GraphClass::Graphs] {
                if let Some(o) = ctx.cached(other, n) {
                    let ok = o.max_modulus >= rec.max_modulus * (1.0 - ctx.options.modulus_tol);
                    rep.push(
                        Some(n),
                        if ok { Status::Pass } else { Status::Violation },
                        format!(
                            "max over {other} {} >= max over trees {}",
                            sig15(o.max_modulus),
                            sig15(rec.max_modulus)
                        ),
                        None,
                    );
                }
            }
        }
    }
    Ok(rep)
}

/// Every root of every surveyed member lies in its inflated annulus.
pub fn check_ek(ctx: &mut SurveyContext, class: GraphClass, ns: &[usize]) -> Result<CheckReport, SurveyError> {
    let mut rep = CheckReport::new(format!("annulus containment ({class})"));
    for &n in ns {
        let rec = ctx.record(class, n)?;
        for w in rec.ek_violations.iter().take(MAX_LISTED) {
            rep.push(Some(n), Status::Violation, "root outside the annulus", Some(w.clone()));
        }
        rep.push(
            Some(n),
            if rec.ek_violations.is_empty() { Status::Pass } else { Status::Violation },
            format!(
                "{} members, {} outside, max residual {:.1e}",
                rec.class_count,
                rec.ek_violations.len(),
                rec.max_residual
            ),
            None,
        );
    }
    Ok(rep)
}

/// The star `K_{1,30}`: outer annulus radius versus actual largest root.
pub fn star_gap() -> Result<(BigRational, f64), SurveyError> {
    let p = independence_polynomial_tree(&Graph::star(30)?)?;
    let outer = ek_annulus(&p)?.outer;
    let m = find_roots_with(&p, &RootConfig::default())
        .map_err(|source| SurveyError::Roots { graph6: "star".into(), source })?
        .max_modulus;
    Ok((outer, m))
}

/// Caps and extremal-family statements for graphs (orders `graph_ns`, from
/// 3) and trees (orders `tree_ns`). Refutations are findings.
pub fn check_conjectures(
    ctx: &mut SurveyContext,
    graph_ns: &[usize],
    tree_ns: &[usize],
) -> Result<CheckReport, SurveyError> {
    let mut rep = CheckReport::new("conjectures");
    let tol = ctx.options.modulus_tol;
    for &n in graph_ns {
        let (Some(cap), Some(fam)) = (conjectured_graph_cap(n), conjectured_graph_family(n)) else {
            continue;
        };
        let rec = ctx.record(GraphClass::Graphs, n)?;
        let cap_f = ratio_to_f64(&cap);
        let ok = rec.max_modulus <= cap_f * (1.0 + tol);
        rep.push(
            Some(n),
            if ok { Status::Supported } else { Status::Refuted },
            format!("graph cap: maxmod {} <= {}", sig15(rec.max_modulus), format_bound(&cap)),
            Some(rec.witness.clone()),
        );
        extremal_line(&mut rep, &rec, fam, "graph")?;
    }
    for &n in tree_ns {
        let rec = ctx.record(GraphClass::Trees, n)?;
        if let Some(cap) = conjectured_tree_cap(n) {
            let ok = rec.max_modulus <= ratio_to_f64(&cap) * (1.0 + tol);
            rep.push(
                Some(n),
                if ok { Status::Supported } else { Status::Refuted },
                format!("tree cap: maxmodt {} <= {}", sig15(rec.max_modulus), format_bound(&cap)),
                Some(rec.witness.clone()),
            );
        }
        if n >= 3 {
            if let Some(fam) = conjectured_tree_family(n) {
                extremal_line(&mut rep, &rec, fam, "tree")?;
            }
        }
    }
    Ok(rep)
}

fn extremal_line(rep: &mut CheckReport, rec: &SurveyRecord, fam: Family, what: &str) -> Result<(), SurveyError> {
    let g = build_family(fam)?;
    let expected = canonical_g6(&g);
    let ok = rec.argmax == [expected.clone()];
    let detail = if ok {
        format!("{what} extremal: unique maximiser is {fam}")
    } else {
        // Ties are flagged as exact when the polynomials coincide.
        let p = independence_polynomial(&g);
        let others: Vec<String> = rec
            .argmax
            .iter()
            .filter(|w| **w != expected)
            .map(|w| {
                let same = crate::graph6::from_graph6(w)
                    .map(|h| independence_polynomial(&h) == p)
                    .unwrap_or(false);
                format!("{w} ({})", if same { "identical polynomial" } else { "numerical tie" })
            })
            .collect();
        format!(
            "{what} extremal: maximisers {{{}}} differ from {{{fam} = {expected}}}; others: {}",
            rec.argmax.join(", "),
            others.join(", ")
        )
    };
    rep.push(
        Some(rec.n),
        if ok { Status::Supported } else { Status::Refuted },
        detail,
        Some(rec.argmax.join(";")),
    );
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrendRow {
    pub class: GraphClass,
    pub n: usize,
    /// `log_b(max modulus) / n`, with base 3 for graphs and 2 for trees.
    pub value: f64,
    pub lower: f64,
    pub upper: f64,
    pub within: bool,
}

/// Normalised logarithms of the largest moduli next to the values implied
/// by the lower and upper bounds.
pub fn asymptotic_trend(
    ctx: &mut SurveyContext,
    graph_ns: &[usize],
    tree_ns: &[usize],
) -> Result<(Vec<TrendRow>, CheckReport), SurveyError> {
    let mut rows = Vec::new();
    let mut rep = CheckReport::new("asymptotic trend");
    for (class, ns, base) in [(GraphClass::Graphs, graph_ns, 3f64), (GraphClass::Trees, tree_ns, 2f64)] {
        for &n in ns {
            let rec = ctx.record(class, n)?;
            let l = |x: f64| x.ln() / base.ln() / n as f64;
            let (value, lower, upper) = (l(rec.max_modulus), l(rec.lower_bound), l(rec.upper_bound));
            let slack = 1e-9;
            let within = value >= lower - slack && value <= upper + slack;
            rep.push(
                Some(n),
                if within { Status::Pass } else { Status::Violation },
                format!(
                    "{class}: log{}(maxmod)/n = {} in [{}, {}]",
                    base as u32,
                    sig15(value),
                    sig15(lower),
                    sig15(upper)
                ),
                None,
            );
            rows.push(TrendRow { class, n, value, lower, upper, within });
        }
    }
    Ok((rows, rep))
}

/// One row of the tree comparison tables: order, lower bound, largest root
/// modulus over trees and the upper bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub lower: String,
    pub maxmodt: f64,
    pub upper: String,
}

pub fn tree_table(ctx: &mut SurveyContext, ns: &[usize]) -> Result<Vec<TableRow>, SurveyError> {
    ns.iter()
        .map(|&n| {
            let rec = ctx.record(GraphClass::Trees, n)?;
            Ok(TableRow {
                n,
                lower: format_bound(&tree_lower_bound(n)),
                maxmodt: rec.max_modulus,
                upper: format_bound(&forest_ratio_cap(n)),
            })
        })
        .collect()
}

pub fn format_tree_table(rows: &[TableRow]) -> String {
    let mut out = String::new();
    let parity_odd = rows.first().is_some_and(|r| r.n % 2 == 1);
    let (lo, hi) = if parity_odd {
        ("2^((n-1)/2)", "2^((n-1)/2)+(n-1)/2")
    } else {
        ("2^((n-6)/2)", "2^((n-2)/2)+n/2")
    };
    out.push_str(&format!("| {:>3} | {:>12} | {:>17} | {:>20} |\n", "n", lo, "maxmodt", hi));
    for r in rows {
        out.push_str(&format!(
            "| {:>3} | {:>12} | {:>17} | {:>20} |\n",
            r.n,
            r.lower,
            sig15(r.maxmodt),
            r.upper
        ));
    }
    out
}

/// Exact check that the root certified by `b` lies in `[lo, hi)`.
pub fn bracket_within(p: &IntPoly, b: &Bracket, lo: &BigRational, hi: &BigRational) -> bool {
    &b.lo >= lo && &b.hi <= hi && (&b.hi < hi || p.sign_at(hi) != 0)
}

/// Number of members per order, for quick summaries.
pub fn class_counts(ctx: &mut SurveyContext, class: GraphClass, ns: &[usize]) -> Result<Vec<usize>, SurveyError> {
    ns.iter().map(|&n| Ok(ctx.members(class, n)?.len())).collect()
}

/// Convenience used by callers that only need `RealRootCertificate` text.
pub fn describe_certificate(c: &RealRootCertificate) -> String {
    match c {
        RealRootCertificate::Bracket(b) => format!("root in {}", bracket_text(b)),
        RealRootCertificate::NoSignChange { outer_radius, proven_absent } => format!(
            "no sign change; outer radius {}{}",
            format_ratio(outer_radius),
            if *proven_absent { ", no root beyond the threshold" } else { "" }
        ),
    }
}
