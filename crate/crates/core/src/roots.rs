//! Complex roots by Aberth–Ehrlich iteration, exact residual certificates,
//! and exact sign-change brackets for real roots.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::dd::DoubleDouble;
use crate::error::{PolyError, RootError};
use crate::indpoly::{ek_annulus, format_ratio, ratio_to_f64};
use crate::poly::IntPoly;

/// Tunables for [`find_roots_with`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootConfig {
    pub max_iterations: usize,
    /// A root is settled once its Aberth step is below `step_tol * (1 + |z|)`.
    pub step_tol: f64,
    /// Largest accepted `|p(z)| / (max|a_k| max(1,|z|)^d)`.
    pub residual_threshold: f64,
    /// Coefficient spread above which the iteration runs in double-double.
    pub extended_spread: f64,
    /// Roots whose first-order error estimate in f64 exceeds this, relative
    /// to `|z|`, are refined again in double-double.
    pub refine_tol: f64,
}

impl Default for RootConfig {
    fn default() -> Self {
        RootConfig {
            max_iterations: 200,
            step_tol: 1e-14,
            residual_threshold: 1e-6,
            extended_spread: 1e15,
            refine_tol: 1e-10,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Root {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
}

impl Root {
    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }
}

/// An exact interval `[lo, hi]` on which the polynomial changes sign (or
/// vanishes at an endpoint).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Bracket {
    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64().unwrap_or(f64::NAN)
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64().unwrap_or(f64::NAN)
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Re-checks the sign condition with exact arithmetic.
    pub fn verify(&self, p: &IntPoly) -> bool {
        let a = p.sign_at(&self.lo);
        let b = p.sign_at(&self.hi);
        self.lo <= self.hi && (a == 0 || b == 0 || a != b)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootReport {
    pub degree: usize,
    pub roots: Vec<Root>,
    pub max_modulus: f64,
    pub certified_bracket: Option<Bracket>,
    pub iterations: usize,
    pub extended_precision: bool,
}

#[derive(Serialize, Deserialize)]
struct BracketJson {
    lo: String,
    hi: String,
}

#[derive(Serialize, Deserialize)]
struct RootReportJson {
    degree: usize,
    roots: Vec<Root>,
    max_modulus: f64,
    bracket: Option<BracketJson>,
}

impl RootReport {
    /// Root with the largest modulus (the first one on ties).
    pub fn max_root(&self) -> Root {
        let mut best = self.roots[0];
        for r in &self.roots[1..] {
            if r.modulus() > best.modulus() {
                best = *r;
            }
        }
        best
    }

    pub fn max_residual(&self) -> f64 {
        self.roots.iter().map(|r| r.residual).fold(0.0, f64::max)
    }

    /// `{degree, roots:[{re,im,residual}], max_modulus, bracket:{lo,hi}|null}`
    pub fn to_json_value(&self) -> serde_json::Value {
        let j = RootReportJson {
            degree: self.degree,
            roots: self.roots.clone(),
            max_modulus: self.max_modulus,
            bracket: self.certified_bracket.as_ref().map(|b| BracketJson {
                lo: format_ratio(&b.lo),
                hi: format_ratio(&b.hi),
            }),
        };
        serde_json::to_value(j).expect("plain data serializes")
    }
}

trait Scalar:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Unit roundoff.
    const EPS: f64;
    fn of(x: f64) -> Self;
    fn of_bigint(x: &BigInt) -> Self;
    fn f64(self) -> f64;
}

impl Scalar for f64 {
    const EPS: f64 = f64::EPSILON / 2.0;
    fn of(x: f64) -> Self {
        x
    }
    fn of_bigint(x: &BigInt) -> Self {
        x.to_f64().unwrap_or(f64::INFINITY)
    }
    fn f64(self) -> f64 {
        self
    }
}

impl Scalar for DoubleDouble {
    const EPS: f64 = 1.0 / (1u128 << 104) as f64;
    fn of(x: f64) -> Self {
        DoubleDouble::new(x)
    }
    fn of_bigint(x: &BigInt) -> Self {
        DoubleDouble::from_bigint(x)
    }
    fn f64(self) -> f64 {
        self.to_f64()
    }
}

#[derive(Clone, Copy, Debug)]
struct Cx<T> {
    re: T,
    im: T,
}

impl<T: Scalar> Cx<T> {
    fn new(re: T, im: T) -> Self {
        Cx { re, im }
    }

    fn real(re: T) -> Self {
        Cx { re, im: T::of(0.0) }
    }

    fn norm_sqr(self) -> T {
        self.re * self.re + self.im * self.im
    }

    fn abs(self) -> f64 {
        self.re.f64().hypot(self.im.f64())
    }
}

impl<T: Scalar> Add for Cx<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Cx::new(self.re + o.re, self.im + o.im)
    }
}

impl<T: Scalar> Sub for Cx<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Cx::new(self.re - o.re, self.im - o.im)
    }
}

impl<T: Scalar> Mul for Cx<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Cx::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl<T: Scalar> Div for Cx<T> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        // Scale by the larger component of the divisor to avoid overflow.
        let s = T::of(o.re.f64().abs().max(o.im.f64().abs()));
        let (a, b) = (o.re / s, o.im / s);
        let d = a * a + b * b;
        let re = (self.re * a + self.im * b) / d;
        let im = (self.im * a - self.re * b) / d;
        Cx::new(re / s, im / s)
    }
}

/// `p(z)`, `p'(z)` and the rounding-error scale `sum |a_k| |z|^k`.
fn horner<T: Scalar>(coeffs: &[T], abs_coeffs: &[f64], z: Cx<T>) -> (Cx<T>, Cx<T>, f64) {
    let d = coeffs.len() - 1;
    let mut p = Cx::real(coeffs[d]);
    let mut dp = Cx::real(T::of(0.0));
    let r = z.abs();
    let mut bound = abs_coeffs[d];
    for k in (0..d).rev() {
        dp = dp * z + p;
        p = p * z + Cx::real(coeffs[k]);
        bound = bound * r + abs_coeffs[k];
    }
    (p, dp, bound)
}

struct Solved {
    roots: Vec<(f64, f64)>,
    iterations: usize,
}

fn aberth<T: Scalar>(int_coeffs: &[BigInt], cfg: &RootConfig) -> Result<Solved, RootError> {
    let d = int_coeffs.len() - 1;
    let a0 = int_coeffs[0].to_f64().unwrap_or(f64::MAX).abs();
    let ad = int_coeffs[d].to_f64().unwrap_or(f64::MAX).abs();
    let radius = (a0 / ad).powf(1.0 / d as f64);
    let start: Vec<(f64, f64)> = (0..d)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / d as f64 + 0.4;
            (radius * theta.cos(), radius * theta.sin())
        })
        .collect();
    aberth_from::<T>(int_coeffs, &start, vec![false; d], cfg)
}

/// First-order forward error estimate of each root computed in f64,
/// relative to its modulus.
fn f64_error_estimates(int_coeffs: &[BigInt], roots: &[(f64, f64)]) -> Vec<f64> {
    let coeffs: Vec<f64> = int_coeffs.iter().map(f64::of_bigint).collect();
    let abs_coeffs: Vec<f64> = coeffs.iter().map(|c| c.abs()).collect();
    roots
        .iter()
        .map(|&(re, im)| {
            let z = Cx::new(re, im);
            let (_, dp, bound) = horner(&coeffs, &abs_coeffs, z);
            8.0 * f64::EPS * bound / (dp.abs() * z.abs())
        })
        .collect()
}

/// Aberth iteration from the given points; roots marked settled stay put
/// but still repel the others.
fn aberth_from<T: Scalar>(
    int_coeffs: &[BigInt],
    start: &[(f64, f64)],
    mut settled: Vec<bool>,
    cfg: &RootConfig,
) -> Result<Solved, RootError> {
    let coeffs: Vec<T> = int_coeffs.iter().map(T::of_bigint).collect();
    let abs_coeffs: Vec<f64> = coeffs.iter().map(|c| c.f64().abs()).collect();
    let d = coeffs.len() - 1;
    let moving: Vec<bool> = settled.iter().map(|s| !s).collect();
    let mut z: Vec<Cx<T>> = start.iter().map(|&(re, im)| Cx::new(T::of(re), T::of(im))).collect();
    let mut iterations = 0;
    let mut last_step = f64::INFINITY;

    while settled.iter().any(|s| !s) {
        if iterations >= cfg.max_iterations {
            return Err(RootError::NoConvergence {
                iterations,
                max_step: last_step,
            });
        }
        iterations += 1;
        last_step = 0.0;
        for k in 0..d {
            if settled[k] {
                continue;
            }
            let (p, dp, bound) = horner(&coeffs, &abs_coeffs, z[k]);
            // Value indistinguishable from rounding noise.
            if p.abs() <= 8.0 * T::EPS * bound {
                settled[k] = true;
                continue;
            }
            let w = if dp.abs() == 0.0 {
                Cx::real(T::of(1e-8 * (1.0 + z[k].abs())))
            } else {
                p / dp
            };
            let mut s = Cx::real(T::of(0.0));
            for j in 0..d {
                if j != k {
                    let diff = z[k] - z[j];
                    if diff.abs() > 0.0 {
                        s = s + Cx::real(T::of(1.0)) / diff;
                    }
                }
            }
            let denom = Cx::real(T::of(1.0)) - w * s;
            let step = if denom.abs() == 0.0 { w } else { w / denom };
            z[k] = z[k] - step;
            let size = step.abs();
            last_step = last_step.max(size);
            if size < cfg.step_tol * (1.0 + z[k].abs()) {
                settled[k] = true;
            }
        }
    }

    // Newton polish, keeping a step only when it shrinks |p|.
    for zk in z.iter_mut().zip(&moving).filter(|(_, m)| **m).map(|(z, _)| z) {
        for _ in 0..3 {
            let (p, dp, _) = horner(&coeffs, &abs_coeffs, *zk);
            if dp.abs() == 0.0 || p.abs() == 0.0 {
                break;
            }
            let cand = *zk - p / dp;
            let (pc, _, _) = horner(&coeffs, &abs_coeffs, cand);
            if pc.norm_sqr().f64() < p.norm_sqr().f64() {
                *zk = cand;
            } else {
                break;
            }
        }
    }

    Ok(Solved {
        roots: z.iter().map(|c| (c.re.f64(), c.im.f64())).collect(),
        iterations,
    })
}

/// `x = mantissa * 2^exp` exactly.
fn dyadic(x: f64) -> (BigInt, i64) {
    if x == 0.0 {
        return (BigInt::zero(), 0);
    }
    let bits = x.to_bits();
    let sign = if bits >> 63 == 1 { -1 } else { 1 };
    let raw_exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    let (mant, exp) = if raw_exp == 0 {
        (frac, -1074)
    } else {
        (frac | (1u64 << 52), raw_exp - 1075)
    };
    (BigInt::from(mant) * sign, exp)
}

fn log2_abs(x: &BigInt) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    let shift = bits.saturating_sub(60);
    let top = (x.abs() >> shift).to_f64().expect("60-bit value");
    top.log2() + shift as f64
}

/// Exact `|p(z)| / (max|a_k| * max(1,|z|)^d)` at the floating-point point `z`.
pub fn exact_residual(p: &IntPoly, re: f64, im: f64) -> f64 {
    let (mut a, ea) = dyadic(re);
    let (mut b, eb) = dyadic(im);
    let e = match (a.is_zero(), b.is_zero()) {
        (true, true) => 0,
        (true, false) => eb,
        (false, true) => ea,
        _ => ea.min(eb),
    };
    if !a.is_zero() {
        a <<= (ea - e) as usize;
    }
    if !b.is_zero() {
        b <<= (eb - e) as usize;
    }
    // z = (a + bi) 2^e; with s = max(0, -e) the scaled value is an integer.
    let (a, b, s) = if e >= 0 {
        (a << e as usize, b << e as usize, 0usize)
    } else {
        (a, b, (-e) as usize)
    };
    let d = p.degree();
    let c = p.coeffs();
    if b.is_zero() {
        let mut acc = c[d].clone();
        for k in (0..d).rev() {
            acc = acc * &a + (&c[k] << (s * (d - k)));
        }
        return scaled_residual(p, log2_abs(&acc), f64::NEG_INFINITY, s * d, re, im);
    }
    let mut re_acc = c[d].clone();
    let mut im_acc = BigInt::zero();
    for k in (0..d).rev() {
        let nr = &re_acc * &a - &im_acc * &b;
        let ni = &re_acc * &b + &im_acc * &a;
        re_acc = nr + (&c[k] << (s * (d - k)));
        im_acc = ni;
    }
    scaled_residual(p, log2_abs(&re_acc), log2_abs(&im_acc), s * d, re, im)
}

/// Residual from `log2` of the scaled real and imaginary parts of `p(z)`.
fn scaled_residual(p: &IntPoly, lr: f64, li: f64, scale_bits: usize, re: f64, im: f64) -> f64 {
    let d = p.degree();
    let hi = lr.max(li);
    if hi == f64::NEG_INFINITY {
        return 0.0;
    }
    let lo = lr.min(li);
    let log_mag = hi + 0.5 * (1.0 + (2f64).powf(2.0 * (lo - hi))).log2() - scale_bits as f64;
    let modulus = re.hypot(im).max(1.0);
    let log_scale = log2_abs(&p.max_abs_coeff()) + d as f64 * modulus.log2();
    (log_mag - log_scale).exp2()
}

fn coefficient_spread(p: &IntPoly) -> f64 {
    let logs: Vec<f64> = p
        .coeffs()
        .iter()
        .filter(|c| !c.is_zero())
        .map(log2_abs)
        .collect();
    let hi = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let lo = logs.iter().cloned().fold(f64::INFINITY, f64::min);
    (hi - lo).exp2()
}

pub fn find_roots(p: &IntPoly) -> Result<RootReport, RootError> {
    find_roots_with(p, &RootConfig::default())
}

struct SimpleRoots {
    roots: Vec<(f64, f64)>,
    iterations: usize,
    extended: bool,
}

/// Roots of a square-free polynomial with nonzero constant term: f64
/// Aberth, then double-double for badly conditioned roots, or double-double
/// throughout when the coefficients span too many magnitudes.
fn solve_simple(coeffs: &[BigInt], cfg: &RootConfig) -> Result<SimpleRoots, RootError> {
    if coeffs.len() == 2 {
        let r = BigRational::new(-coeffs[0].clone(), coeffs[1].clone());
        return Ok(SimpleRoots { roots: vec![(ratio_to_f64(&r), 0.0)], iterations: 0, extended: false });
    }
    if coefficient_spread(&IntPoly::new(coeffs.to_vec())) > cfg.extended_spread {
        let s = aberth::<DoubleDouble>(coeffs, cfg)?;
        return Ok(SimpleRoots { roots: s.roots, iterations: s.iterations, extended: true });
    }
    let mut s = aberth::<f64>(coeffs, cfg)?;
    let settled: Vec<bool> = f64_error_estimates(coeffs, &s.roots)
        .into_iter()
        .map(|e| e <= cfg.refine_tol)
        .collect();
    let mut extended = false;
    if settled.iter().any(|s| !s) {
        let again = aberth_from::<DoubleDouble>(coeffs, &s.roots, settled, cfg)?;
        s.roots = again.roots;
        s.iterations += again.iterations;
        extended = true;
    }
    Ok(SimpleRoots { roots: s.roots, iterations: s.iterations, extended })
}

/// All complex roots, each with an exact residual. Zero roots are split off
/// before iterating.
pub fn find_roots_with(p: &IntPoly, cfg: &RootConfig) -> Result<RootReport, RootError> {
    if p.is_zero() || p.degree() == 0 {
        return Err(PolyError::Constant.into());
    }
    let zeros = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let reduced_poly = IntPoly::new(p.coeffs()[zeros..].to_vec());

    let mut approx: Vec<(f64, f64)> = vec![(0.0, 0.0); zeros];
    let mut iterations = 0;
    let mut extended = false;
    // Multiple roots are split off exactly, so every iteration below runs
    // on a polynomial with simple roots.
    for (factor, mult) in reduced_poly.squarefree_decomposition() {
        let solved = solve_simple(factor.coeffs(), cfg)?;
        iterations += solved.iterations;
        extended |= solved.extended;
        for r in solved.roots {
            approx.extend(std::iter::repeat(r).take(mult));
        }
    }
    let roots: Vec<Root> = approx
        .into_iter()
        // Real roots come back with rounding-level imaginary parts; the
        // residual below is evaluated at the snapped point, so it still
        // certifies what is reported.
        .map(|(re, im)| if im.abs() <= 1e-13 * re.abs() { (re, 0.0) } else { (re, im) })
        .map(|(re, im)| Root {
            re,
            im,
            residual: exact_residual(p, re, im),
        })
        .collect();
    let worst = roots.iter().map(|r| r.residual).fold(0.0, f64::max);
    if worst > cfg.residual_threshold {
        return Err(RootError::ResidualTooLarge {
            residual: worst,
            threshold: cfg.residual_threshold,
        });
    }
    let max_modulus = roots.iter().map(Root::modulus).fold(0.0, f64::max);
    Ok(RootReport {
        degree: p.degree(),
        roots,
        max_modulus,
        certified_bracket: None,
        iterations,
        extended_precision: extended,
    })
}

/// Largest root modulus and a root attaining it.
pub fn max_modulus_root(p: &IntPoly) -> Result<(f64, Root), RootError> {
    let report = find_roots(p)?;
    let r = report.max_root();
    Ok((r.modulus(), r))
}

/// Outcome of a search for a real root strictly left of a threshold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealRootCertificate {
    /// Exact sign change inside `bracket`, which lies in `(-inf, threshold]`.
    Bracket(Bracket),
    /// No sign change between `threshold` and `-inf`. When `proven_absent`
    /// holds the threshold is at or beyond `-R` (the outer root radius) so no
    /// root at all lies to its left.
    NoSignChange { outer_radius: BigRational, proven_absent: bool },
}

impl RealRootCertificate {
    pub fn bracket(&self) -> Option<&Bracket> {
        match self {
            RealRootCertificate::Bracket(b) => Some(b),
            _ => None,
        }
    }
}

/// Searches `(-inf, threshold]` for an odd sign change of `p` using exact
/// evaluation at rational points: first the threshold against the sign at
/// `-inf`, then a geometric march left, then bisection down to width
/// `2^-20 * max(|threshold|, 1)`.
pub fn certify_real_root_left_of(
    p: &IntPoly,
    threshold: &BigRational,
) -> Result<RealRootCertificate, PolyError> {
    if p.is_zero() || p.degree() == 0 {
        return Err(PolyError::Constant);
    }
    let lead_sign: i8 = if p.leading().is_positive() { 1 } else { -1 };
    let at_neg_inf = if p.degree() % 2 == 0 { lead_sign } else { -lead_sign };
    let s_t = p.sign_at(threshold);
    if s_t == 0 {
        return Ok(RealRootCertificate::Bracket(Bracket {
            lo: threshold.clone(),
            hi: threshold.clone(),
        }));
    }
    if s_t == at_neg_inf {
        let outer_radius = cauchy_like_outer_radius(p);
        let proven_absent = -threshold >= outer_radius;
        return Ok(RealRootCertificate::NoSignChange {
            outer_radius,
            proven_absent,
        });
    }

    let one = BigRational::one();
    let scale = threshold.abs().max(one.clone());
    let mut hi = threshold.clone();
    let mut step = scale.clone();
    let mut lo = &hi - &step;
    loop {
        let s = p.sign_at(&lo);
        if s == 0 {
            return Ok(RealRootCertificate::Bracket(Bracket { lo: lo.clone(), hi: lo }));
        }
        if s != s_t {
            break;
        }
        hi = lo.clone();
        step = &step * BigRational::from_integer(2.into());
        lo = &hi - &step;
    }

    let target = scale / BigRational::from_integer(BigInt::one() << 20usize);
    let two = BigRational::from_integer(2.into());
    let s_hi = p.sign_at(&hi);
    while &hi - &lo > target {
        let mid = (&lo + &hi) / &two;
        let s = p.sign_at(&mid);
        if s == 0 {
            return Ok(RealRootCertificate::Bracket(Bracket { lo: mid.clone(), hi: mid }));
        }
        if s == s_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(RealRootCertificate::Bracket(Bracket { lo, hi }))
}

/// Outer root radius used for refutations: the largest consecutive
/// coefficient ratio when every coefficient is positive, else the Cauchy
/// bound `1 + max|a_k / a_d|`.
fn cauchy_like_outer_radius(p: &IntPoly) -> BigRational {
    if let Ok(a) = ek_annulus(p) {
        return a.outer;
    }
    let lead = p.leading().abs();
    let m = p.coeffs()[..p.degree()]
        .iter()
        .map(|c| BigRational::new(c.abs(), lead.clone()))
        .max()
        .unwrap_or_else(BigRational::zero);
    m + BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn sorted_re(report: &RootReport) -> Vec<f64> {
        let mut v: Vec<f64> = report.roots.iter().map(|r| r.re).collect();
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v
    }

    #[test]
    fn quadratic_roots() {
        let r = find_roots(&p(&[1, 3, 1])).unwrap();
        let s5 = 5f64.sqrt();
        let re = sorted_re(&r);
        assert!((re[0] - (-3.0 - s5) / 2.0).abs() < 1e-14);
        assert!((re[1] - (-3.0 + s5) / 2.0).abs() < 1e-14);
        assert!((r.max_modulus - 2.618033988749895).abs() < 1e-12);
        assert!(r.max_residual() < 1e-12);
    }

    #[test]
    fn repeated_roots_are_reported_twice() {
        // (1+x)^2 (1+4x+x^2): roots -1, -1, -2 +- sqrt(3).
        let q = &p(&[1, 1]).pow(2) * &p(&[1, 4, 1]);
        let r = find_roots(&q).unwrap();
        assert_eq!(r.roots.len(), 4);
        let re = sorted_re(&r);
        let s3 = 3f64.sqrt();
        assert!((re[0] + 2.0 + s3).abs() < 1e-12);
        assert!((re[1] + 1.0).abs() < 1e-7 && (re[2] + 1.0).abs() < 1e-7);
        assert!((re[3] + 2.0 - s3).abs() < 1e-12);
        assert!(r.max_residual() < 1e-12);
    }

    #[test]
    fn complex_roots_and_zero_roots() {
        // x^2 (1 + x^2)
        let r = find_roots(&p(&[0, 0, 1, 0, 1])).unwrap();
        assert_eq!(r.roots.len(), 4);
        assert!((r.max_modulus - 1.0).abs() < 1e-14);
        let imag: Vec<f64> = r.roots.iter().filter(|z| z.im.abs() > 0.5).map(|z| z.im).collect();
        assert_eq!(imag.len(), 2);
        assert!((imag[0] + imag[1]).abs() < 1e-12);
    }

    #[test]
    fn constant_is_rejected() {
        assert_eq!(find_roots(&IntPoly::one()), Err(RootError::Poly(PolyError::Constant)));
        assert_eq!(
            certify_real_root_left_of(&IntPoly::one(), &int(0)),
            Err(PolyError::Constant)
        );
    }

    #[test]
    fn wide_spread_uses_extended_precision() {
        // (1 + 10^9 x)(1 + 2*10^9 x)(1 + x)(1 + 3x): spread 6*10^18.
        let big = 1_000_000_000i64;
        let q = &(&p(&[1, big]) * &p(&[1, 2 * big])) * &(&p(&[1, 1]) * &p(&[1, 3]));
        let r = find_roots(&q).unwrap();
        assert!(r.extended_precision);
        assert!((r.max_modulus - 1.0).abs() < 1e-12);
        let smallest = r.roots.iter().map(Root::modulus).fold(f64::INFINITY, f64::min);
        assert!((smallest - 5e-10).abs() < 1e-20);
        assert!(r.max_residual() < 1e-12);
    }

    #[test]
    fn residual_is_exact() {
        assert_eq!(exact_residual(&p(&[1, 1]), -1.0, 0.0), 0.0);
        // p(x) = 1 + x at 0: |p| = 1, scale = 1.
        assert!((exact_residual(&p(&[1, 1]), 0.0, 0.0) - 1.0).abs() < 1e-15);
        // 1 + x^2 at i is exactly 0.
        assert_eq!(exact_residual(&p(&[1, 0, 1]), 0.0, 1.0), 0.0);
        // 1 + x^2 at 0.5 + 0.5i: 1 + 0.5i, |.| = sqrt(1.25).
        let r = exact_residual(&p(&[1, 0, 1]), 0.5, 0.5);
        assert!((r - 1.25f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn certifies_and_refutes() {
        // 1 + 3x + x^2 has a root at -2.618; threshold -2.
        let q = p(&[1, 3, 1]);
        let c = certify_real_root_left_of(&q, &int(-2)).unwrap();
        let b = c.bracket().unwrap();
        assert!(b.verify(&q));
        assert!(b.lo_f64() <= -2.618033988 && b.hi_f64() >= -2.618033989);
        assert!(b.width() <= BigRational::new(2.into(), (1i64 << 20).into()));

        let sq = p(&[1, 2, 1]);
        match certify_real_root_left_of(&sq, &int(-2)).unwrap() {
            RealRootCertificate::NoSignChange { outer_radius, proven_absent } => {
                assert_eq!(outer_radius, int(2));
                assert!(proven_absent);
            }
            other => panic!("unexpected {other:?}"),
        }
        // Root exactly at the threshold.
        let c = certify_real_root_left_of(&p(&[3, 1]), &int(-3)).unwrap();
        assert_eq!(c.bracket().unwrap().lo, int(-3));
    }

    #[test]
    fn json_shape() {
        let mut r = find_roots(&p(&[1, 2])).unwrap();
        r.certified_bracket = Some(Bracket {
            lo: BigRational::new((-1).into(), 1.into()),
            hi: BigRational::new((-1).into(), 4.into()),
        });
        let v = r.to_json_value();
        assert_eq!(v["degree"], 1);
        assert_eq!(v["roots"].as_array().unwrap().len(), 1);
        assert!((v["max_modulus"].as_f64().unwrap() - 0.5).abs() < 1e-15);
        assert_eq!(v["bracket"]["lo"], "-1");
        assert_eq!(v["bracket"]["hi"], "-1/4");
        r.certified_bracket = None;
        assert!(r.to_json_value()["bracket"].is_null());
    }
}
