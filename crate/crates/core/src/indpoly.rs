//! Independence polynomials and the invariants read off them.
//!
//! The general engine splits the active graph into connected components,
//! multiplies their polynomials and expands each component by the vertex
//! recursion `i(G) = i(G - v) + x i(G - N[v])` on a maximum-degree pivot.
//! Component polynomials are memoized: by canonical form for components of
//! at most [`CANONICAL_MEMO_LIMIT`] vertices (shared across calls on the same
//! engine), by raw vertex mask otherwise (local to one call).

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{GraphError, PolyError};
use crate::families::Family;
use crate::graph::{bit, Bits, Graph};
use crate::graph6::to_graph6;
use crate::mis::count_maximal_independent_sets;
use crate::poly::IntPoly;

pub const CANONICAL_MEMO_LIMIT: usize = 9;

/// Memoizing evaluator; one per worker thread.
#[derive(Default)]
pub struct IndependenceEngine {
    by_form: HashMap<CanonicalForm, IntPoly>,
}

impl IndependenceEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn memo_len(&self) -> usize {
        self.by_form.len()
    }

    pub fn polynomial(&mut self, g: &Graph) -> IntPoly {
        let mut local = HashMap::new();
        self.of_mask(g, g.active_mask(), &mut local)
    }

    fn of_mask(&mut self, g: &Graph, mask: u64, local: &mut HashMap<u64, IntPoly>) -> IntPoly {
        let mut acc = IntPoly::one();
        for comp in g.components_of(mask) {
            let p = self.of_component(g, comp, local);
            acc = &acc * &p;
        }
        acc
    }

    fn of_component(&mut self, g: &Graph, comp: u64, local: &mut HashMap<u64, IntPoly>) -> IntPoly {
        let size = comp.count_ones() as usize;
        if size <= 1 {
            return IntPoly::linear(1, size as i64);
        }
        if Bits(comp).all(|v| g.neighbors(v) & comp == comp & !bit(v)) {
            return IntPoly::linear(1, size as i64);
        }
        if size <= CANONICAL_MEMO_LIMIT {
            let form = canonical_form(&g.induced(comp));
            if let Some(p) = self.by_form.get(&form) {
                return p.clone();
            }
            let p = self.expand(g, comp, local);
            self.by_form.insert(form, p.clone());
            p
        } else {
            if let Some(p) = local.get(&comp) {
                return p.clone();
            }
            let p = self.expand(g, comp, local);
            local.insert(comp, p.clone());
            p
        }
    }

    fn expand(&mut self, g: &Graph, comp: u64, local: &mut HashMap<u64, IntPoly>) -> IntPoly {
        let pivot = pivot_vertex(g, comp);
        let without = self.of_mask(g, comp & !bit(pivot), local);
        let closed = bit(pivot) | g.neighbors(pivot);
        let with = self.of_mask(g, comp & !closed, local).shift(1);
        &without + &with
    }
}

/// Maximum degree inside `mask`, ties to the lowest label.
fn pivot_vertex(g: &Graph, mask: u64) -> usize {
    let mut best = (0, usize::MAX);
    for v in Bits(mask) {
        let d = (g.neighbors(v) & mask).count_ones();
        if best.1 == usize::MAX || d > best.0 {
            best = (d, v);
        }
    }
    best.1
}

thread_local! {
    static ENGINE: RefCell<IndependenceEngine> = RefCell::new(IndependenceEngine::new());
}

/// `i(G, x)` using this thread's memo table.
pub fn independence_polynomial(g: &Graph) -> IntPoly {
    ENGINE.with(|e| e.borrow_mut().polynomial(g))
}

/// `i(T, x)` for a forest by the rooted include/exclude recurrence.
pub fn independence_polynomial_tree(t: &Graph) -> Result<IntPoly, GraphError> {
    if !t.is_forest() {
        return Err(GraphError::NotAForest);
    }
    let mut acc = IntPoly::one();
    for comp in t.components() {
        let root = comp.trailing_zeros() as usize;
        let (out, inn) = rooted(t, root, usize::MAX);
        acc = &acc * &(&out + &inn);
    }
    Ok(acc)
}

/// (root excluded, root included) for the subtree at `v`.
fn rooted(t: &Graph, v: usize, parent: usize) -> (IntPoly, IntPoly) {
    let mut out = IntPoly::one();
    let mut inn = IntPoly::linear(0, 1);
    for c in Bits(t.neighbors(v)) {
        if c == parent {
            continue;
        }
        let (c_out, c_in) = rooted(t, c, v);
        out = &out * &(&c_out + &c_in);
        inn = &inn * &c_out;
    }
    (out, inn)
}

/// Expands the closed form for one of the extremal families.
pub fn closed_form(id: Family) -> Result<IntPoly, PolyError> {
    let pw = |a: i64, b: i64, e: usize| IntPoly::linear(a, b).pow(e as u32);
    let x = IntPoly::linear(0, 1);
    let p = match id {
        Family::G0(k) => &(&pw(1, 3, k) * &pw(1, 2, 1)) + &(&x * &pw(1, 1, k + 1)),
        Family::G1(k) => &pw(1, 3, k) + &(&x * &pw(1, 1, k)),
        Family::G2(k) => &(&pw(1, 3, k) * &pw(1, 2, 2)) + &(&x * &pw(1, 1, k + 2)),
        Family::Tk(k) => &pw(1, 2, k) + &(&x * &pw(1, 1, k)),
        Family::TkPrime(k) => {
            let g = IntPoly::from_i64s(&[1, 5, 6, 2]);
            let h = IntPoly::from_i64s(&[1, 4, 4, 1]);
            &(&pw(1, 2, k) * &g) + &(&(&x * &pw(1, 1, k)) * &h)
        }
        other => return Err(PolyError::UnsupportedFamily(other.to_string())),
    };
    Ok(p)
}

/// `α(G)`, the independence number.
pub fn alpha(g: &Graph) -> usize {
    independence_polynomial(g).degree()
}

/// `ξ(G)`, the number of maximum independent sets.
pub fn xi(g: &Graph) -> BigInt {
    independence_polynomial(g).leading()
}

/// `μ(G)`, the number of maximal independent sets.
pub fn mu(g: &Graph) -> u64 {
    count_maximal_independent_sets(g)
}

/// All consecutive ratios `a_i / a_{i+1}`.
pub fn coeff_ratios(p: &IntPoly) -> Result<Vec<BigRational>, PolyError> {
    p.require_positive()?;
    if p.degree() == 0 {
        return Err(PolyError::Constant);
    }
    Ok(p.coeffs()
        .windows(2)
        .map(|w| BigRational::new(w[0].clone(), w[1].clone()))
        .collect())
}

pub fn max_coeff_ratio(p: &IntPoly) -> Result<BigRational, PolyError> {
    Ok(coeff_ratios(p)?.into_iter().max().expect("degree >= 1"))
}

pub fn min_coeff_ratio(p: &IntPoly) -> Result<BigRational, PolyError> {
    Ok(coeff_ratios(p)?.into_iter().min().expect("degree >= 1"))
}

/// Closed annulus `r <= |z| <= R` containing every root of a positive
/// polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annulus {
    pub inner: BigRational,
    pub outer: BigRational,
}

impl Annulus {
    pub fn inner_f64(&self) -> f64 {
        ratio_to_f64(&self.inner)
    }

    pub fn outer_f64(&self) -> f64 {
        ratio_to_f64(&self.outer)
    }

    /// Membership with the radii widened by `rel_tol` relative slack.
    pub fn contains_modulus(&self, modulus: f64, rel_tol: f64) -> bool {
        modulus >= self.inner_f64() * (1.0 - rel_tol) && modulus <= self.outer_f64() * (1.0 + rel_tol)
    }
}

pub fn ek_annulus(p: &IntPoly) -> Result<Annulus, PolyError> {
    let ratios = coeff_ratios(p)?;
    let r = ratios.iter().min().expect("degree >= 1").clone();
    let outer = ratios.iter().max().expect("degree >= 1").clone();
    Ok(Annulus { inner: r, outer })
}

pub fn ratio_to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Ratio formatted as `p/q`, or `p` when integral.
pub fn format_ratio(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// One CSV row of per-graph invariants.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub graph6: String,
    pub alpha: usize,
    pub xi: String,
    pub mu: u64,
    pub max_ratio: Option<String>,
}

impl GraphSummary {
    pub const CSV_HEADER: &'static str = "n,graph6,alpha,xi,mu,maxratio";

    pub fn of(g: &Graph) -> Self {
        let p = independence_polynomial(g);
        GraphSummary {
            n: g.order(),
            graph6: to_graph6(g),
            alpha: p.degree(),
            xi: p.leading().to_string(),
            mu: mu(g),
            max_ratio: max_coeff_ratio(&p).ok().map(|r| format_ratio(&r)),
        }
    }

    /// graph6 never contains commas or quotes, so no escaping is needed.
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.n,
            self.graph6,
            self.alpha,
            self.xi,
            self.mu,
            self.max_ratio.as_deref().unwrap_or("")
        )
    }
}

/// `true` when `q <= 0` or `q^3 <= 3^n`, i.e. `q <= 3^(n/3)` exactly.
pub fn at_most_cube_root_three_pow(q: &BigRational, n: u32) -> bool {
    if q <= &BigRational::zero() {
        return true;
    }
    let cube = q * q * q;
    cube <= BigRational::from_integer(BigInt::from(3u32).pow(n))
}
