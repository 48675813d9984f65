//! Closed-form bounds on root moduli, coefficient ratios and counts of
//! maximum and maximal independent sets, evaluated exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::families::Family;
use crate::indpoly::{format_ratio, ratio_to_f64};

fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `base^e` for a possibly negative exponent.
fn pow_rat(base: u32, e: i64) -> BigRational {
    let p = BigInt::from(base).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// Moon–Moser cap on the number of maximal independent sets, dispatched on
/// `n mod 3`. Stated for `n >= 2`; the formula is still total at `n = 1`.
pub fn moon_moser(n: usize) -> BigRational {
    let n = n as i64;
    match n % 3 {
        0 => pow_rat(3, n / 3),
        1 => int(4) * pow_rat(3, (n - 4) / 3),
        _ => int(2) * pow_rat(3, (n - 2) / 3),
    }
}

/// Wilf's cap on the number of maximum independent sets of a tree (`n >= 2`).
pub fn wilf(n: usize) -> BigRational {
    let n = n as i64;
    if n % 2 == 1 {
        pow_rat(2, (n - 3) / 2)
    } else {
        pow_rat(2, (n - 2) / 2) + int(1)
    }
}

/// Exact test of `q <= 3^(n/3) + shift`, by cubing when the left side is
/// positive.
pub fn at_most_cube_root_cap(q: &BigRational, n: usize, shift: i64) -> bool {
    let rest = q - int(shift);
    if !rest.is_positive() {
        return true;
    }
    let cube = &rest * &rest * &rest;
    cube <= BigRational::from_integer(BigInt::from(3u32).pow(n as u32))
}

/// `3^(n/3) + n - 1`, the ratio cap for all graphs, as a float.
pub fn graph_ratio_cap_f64(n: usize) -> f64 {
    3f64.powf(n as f64 / 3.0) + n as f64 - 1.0
}

/// `true` iff `q <= 3^(n/3) + n - 1`, decided exactly.
pub fn within_graph_ratio_cap(q: &BigRational, n: usize) -> bool {
    at_most_cube_root_cap(q, n, n as i64 - 1)
}

/// Ratio cap for forests: `2^((n-1)/2) + (n-1)/2` for odd `n`,
/// `2^((n-2)/2) + n/2` for even `n`.
pub fn forest_ratio_cap(n: usize) -> BigRational {
    let n = n as i64;
    if n % 2 == 1 {
        pow_rat(2, (n - 1) / 2) + int((n - 1) / 2)
    } else {
        pow_rat(2, (n - 2) / 2) + int(n / 2)
    }
}

/// Cap on `xi(F) / xi(F - v)` for forests on `n >= 2` vertices.
pub fn xi_deletion_cap(n: usize) -> BigRational {
    let n = n as i64;
    if n % 2 == 1 {
        pow_rat(2, (n - 3) / 2) + int(1)
    } else {
        pow_rat(2, (n - 2) / 2) + int(1)
    }
}

/// Lower bound on the largest root modulus over graphs of order `n`.
pub fn graph_lower_bound(n: usize) -> BigRational {
    let n = n as i64;
    match n % 3 {
        0 => pow_rat(3, (n - 3) / 3),
        1 => pow_rat(3, (n - 1) / 3),
        _ => pow_rat(3, (n - 2) / 3),
    }
}

/// Lower bound on the largest root modulus over trees of order `n`.
pub fn tree_lower_bound(n: usize) -> BigRational {
    let n = n as i64;
    if n % 2 == 1 {
        pow_rat(2, (n - 1) / 2)
    } else {
        pow_rat(2, (n - 6) / 2)
    }
}

/// Conjectured cap on the largest root modulus over graphs, for `n >= 3`.
pub fn conjectured_graph_cap(n: usize) -> Option<BigRational> {
    if n < 3 {
        return None;
    }
    let m = n as i64;
    Some(match m % 3 {
        0 => int(2) * pow_rat(3, (m - 3) / 3) + BigRational::new(m.into(), 3.into()),
        1 => pow_rat(3, (m - 1) / 3) + int((m - 1) / 3),
        _ => int(4) * pow_rat(3, (m - 5) / 3) + int((m + 1) / 3),
    })
}

/// Conjectured cap on the largest root modulus over trees, for even `n >= 6`.
pub fn conjectured_tree_cap(n: usize) -> Option<BigRational> {
    if n < 6 || n % 2 == 1 {
        return None;
    }
    let m = n as i64;
    Some(pow_rat(2, (m - 4) / 2) + int((m + 2) / 2))
}

/// Family expected to hold the largest root among graphs of order `n >= 3`.
pub fn conjectured_graph_family(n: usize) -> Option<Family> {
    match (n, n % 3) {
        (0..=2, _) => None,
        (_, 0) => Some(Family::G0((n - 3) / 3)),
        (_, 1) => Some(Family::G1((n - 1) / 3)),
        _ => Some(Family::G2((n - 5) / 3)),
    }
}

/// Tree expected to hold the largest root: `T_k` for odd orders and
/// `T_k'` for even orders from 6 on.
pub fn conjectured_tree_family(n: usize) -> Option<Family> {
    if n % 2 == 1 {
        Some(Family::Tk((n - 1) / 2))
    } else if n >= 6 {
        Some(Family::TkPrime((n - 6) / 2))
    } else {
        None
    }
}

/// Formats an exact bound as an integer or a short decimal.
pub fn format_bound(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        let s = format!("{}", ratio_to_f64(q));
        if decimal_value(&s).as_ref() == Some(q) {
            s
        } else {
            format_ratio(q)
        }
    }
}

/// Exact value of a plain decimal literal such as `-0.25`.
fn decimal_value(s: &str) -> Option<BigRational> {
    let (int_part, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits: BigInt = format!("{int_part}{frac}").parse().ok()?;
    Some(BigRational::new(digits, BigInt::from(10u32).pow(frac.len() as u32)))
}

/// Every formula evaluated at one order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundFormulas {
    pub n: usize,
    pub moon_moser: String,
    pub wilf: Option<String>,
    pub graph_ratio_cap: f64,
    pub forest_ratio_cap: String,
    pub xi_deletion_cap: Option<String>,
    pub graph_lower_bound: String,
    pub tree_lower_bound: String,
    pub conjectured_graph_cap: Option<String>,
    pub conjectured_tree_cap: Option<String>,
}

impl BoundFormulas {
    pub fn at(n: usize) -> Self {
        let f = |q: BigRational| format_bound(&q);
        BoundFormulas {
            n,
            moon_moser: f(moon_moser(n)),
            wilf: (n >= 2).then(|| f(wilf(n))),
            graph_ratio_cap: graph_ratio_cap_f64(n),
            forest_ratio_cap: f(forest_ratio_cap(n)),
            xi_deletion_cap: (n >= 2).then(|| f(xi_deletion_cap(n))),
            graph_lower_bound: f(graph_lower_bound(n)),
            tree_lower_bound: f(tree_lower_bound(n)),
            conjectured_graph_cap: conjectured_graph_cap(n).map(f),
            conjectured_tree_cap: conjectured_tree_cap(n).map(f),
        }
    }
}

/// `true` when `|q| <= 3^(n/3)` holds for the Moon–Moser value itself.
pub fn moon_moser_below_cube_root(n: usize) -> bool {
    at_most_cube_root_cap(&moon_moser(n), n, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn moon_moser_values() {
        let expect = [(2, 2), (3, 3), (4, 4), (5, 6), (6, 9), (7, 12), (8, 18), (9, 27)];
        for (n, g) in expect {
            assert_eq!(moon_moser(n), int(g), "n={n}");
            assert!(moon_moser_below_cube_root(n));
        }
        assert_eq!(moon_moser(1), r(4, 3));
    }

    #[test]
    fn wilf_values() {
        assert_eq!(wilf(2), int(2));
        assert_eq!(wilf(3), int(1));
        assert_eq!(wilf(7), int(4));
        assert_eq!(wilf(8), int(9));
    }

    #[test]
    fn ratio_caps() {
        assert_eq!(forest_ratio_cap(7), int(11));
        assert_eq!(forest_ratio_cap(8), int(12));
        assert_eq!(forest_ratio_cap(2), int(2));
        assert_eq!(forest_ratio_cap(1), int(1));
        // 3^(3/3) + 2 = 5.
        assert!(within_graph_ratio_cap(&int(5), 3));
        assert!(!within_graph_ratio_cap(&r(5001, 1000), 3));
        // 3^(4/3) + 3 ~ 7.3267
        assert!(within_graph_ratio_cap(&r(7326, 1000), 4));
        assert!(!within_graph_ratio_cap(&r(7327, 1000), 4));
        assert!(within_graph_ratio_cap(&int(-4), 2));
    }

    #[test]
    fn lower_bounds_and_conjectures() {
        assert_eq!(graph_lower_bound(1), int(1));
        assert_eq!(graph_lower_bound(2), int(1));
        assert_eq!(graph_lower_bound(6), int(3));
        assert_eq!(graph_lower_bound(8), int(9));
        assert_eq!(tree_lower_bound(2), r(1, 4));
        assert_eq!(tree_lower_bound(9), int(16));
        assert_eq!(conjectured_graph_cap(3), Some(int(3)));
        assert_eq!(conjectured_graph_cap(5), Some(int(6)));
        assert_eq!(conjectured_graph_cap(2), None);
        assert_eq!(conjectured_tree_cap(6), Some(int(6)));
        assert_eq!(conjectured_tree_cap(7), None);
        assert_eq!(conjectured_graph_family(7), Some(Family::G1(2)));
        assert_eq!(conjectured_graph_family(5), Some(Family::G2(0)));
        assert_eq!(conjectured_tree_family(6), Some(Family::TkPrime(0)));
        assert_eq!(conjectured_tree_family(4), None);
        assert_eq!(format_bound(&r(1, 4)), "0.25");
        assert_eq!(format_bound(&r(1, 3)), "1/3");
    }
}
