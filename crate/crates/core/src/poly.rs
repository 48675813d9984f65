//! Dense integer polynomials with arbitrary-precision coefficients.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::PolyError;

/// `coeffs[k]` is the coefficient of `x^k`. Trailing zeros are trimmed, so
/// the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// `a + b x`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_i64s(&[a, b])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact value at `num / den` scaled by `den^degree`, which has the sign
    /// of `p(num/den)` whenever `den > 0`.
    pub fn eval_homogeneous(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        // acc = sum a_k num^k den^(d-k), Horner from the top.
        for a in self.coeffs.iter().rev() {
            acc = acc * num + a * &den_pow;
            den_pow *= den;
        }
        acc
    }

    /// Sign of `p(q)` as -1, 0 or 1, computed exactly.
    pub fn sign_at(&self, q: &BigRational) -> i8 {
        let v = self.eval_homogeneous(q.numer(), q.denom());
        match v.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn eval(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc * q + BigRational::from_integer(a.clone());
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Gcd of the coefficients, 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, with a positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Pseudo-remainder of `self` by `d`: `lc(d)^(deg - deg d + 1) * self mod d`.
    fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let lc = d.leading();
        while r.len() > dd && !r.is_empty() {
            let top = r.last().cloned().unwrap_or_default();
            let shift = r.len() - 1 - dd;
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (k, b) in d.coeffs.iter().enumerate() {
                r[k + shift] -= &top * b;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        IntPoly::new(r)
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Exact quotient by `d`, or `None` when `d` does not divide `self` in
    /// `Z[x]`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.degree() < d.degree() || self.is_zero() {
            return self.is_zero().then(IntPoly::zero);
        }
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let lc = d.leading();
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for shift in (0..q.len()).rev() {
            let top = &r[shift + dd];
            if top.is_zero() {
                continue;
            }
            let (c, rem) = top.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (k, b) in d.coeffs.iter().enumerate() {
                r[k + shift] -= &c * b;
            }
            q[shift] = c;
        }
        r.iter().all(Zero::is_zero).then(|| IntPoly::new(q))
    }

    /// Square-free factors `(f_i, i)` with `self = c * prod f_i^i`, each
    /// `f_i` primitive and of positive degree (Yun's algorithm).
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, usize)> {
        let mut out = Vec::new();
        if self.degree() == 0 {
            return out;
        }
        let f = self.primitive_part();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let quo = |x: &IntPoly, y: &IntPoly| x.div_exact(y).expect("gcd divides exactly");
        let mut b = quo(&f, &a0);
        let mut c = quo(&df, &a0);
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree() > 0 {
            let a = b.gcd(&d);
            b = quo(&b, &a);
            c = quo(&d, &a);
            d = &c - &b.derivative();
            if a.degree() > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    /// Coefficients rounded to the nearest `f64`.
    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::INFINITY)).collect()
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Checks that every coefficient up to the degree is strictly positive.
    pub fn require_positive(&self) -> Result<(), PolyError> {
        match self.coeffs.iter().position(|c| !c.is_positive()) {
            Some(index) => Err(PolyError::NonPositiveCoefficient { index }),
            None if self.coeffs.is_empty() => Err(PolyError::Constant),
            None => Ok(()),
        }
    }

    /// Decimal coefficient strings, constant term first.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_decimal_strings<S: AsRef<str>>(items: &[S]) -> Result<Self, PolyError> {
        items
            .iter()
            .map(|s| {
                s.as_ref()
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|_| PolyError::Parse(format!("bad coefficient {:?}", s.as_ref())))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(IntPoly::new)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("string arrays always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, PolyError> {
        serde_json::from_str(s).map_err(|e| PolyError::Parse(e.to_string()))
    }
}

impl From<Vec<i64>> for IntPoly {
    fn from(v: Vec<i64>) -> Self {
        IntPoly::from_i64s(&v)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::new(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        IntPoly::new(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        IntPoly::from_decimal_strings(&items).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(a.pow(0), IntPoly::one());
        assert_eq!(&a * &a, p(&[1, 2, 1]));
        assert_eq!(&a + &p(&[0, 0, 5]), p(&[1, 1, 5]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!(a.shift(2), p(&[0, 0, 1, 1]));
        assert_eq!(p(&[1, 2, 0, 0]).degree(), 1);
    }

    #[test]
    fn exact_signs() {
        // (1+x)^2 at -1 is zero, positive elsewhere.
        let sq = p(&[1, 2, 1]);
        assert_eq!(sq.sign_at(&Ratio::from_integer((-1).into())), 0);
        assert_eq!(sq.sign_at(&Ratio::new((-3).into(), 2.into())), 1);
        // 1 + 3x + x^2 is negative at -1 and -5/2.
        let q = p(&[1, 3, 1]);
        assert_eq!(q.sign_at(&Ratio::from_integer((-1).into())), -1);
        assert_eq!(q.sign_at(&Ratio::new((-5).into(), 2.into())), -1);
        assert_eq!(q.sign_at(&Ratio::from_integer((-3).into())), 1);
        let at = q.eval(&Ratio::new((-5).into(), 2.into()));
        assert_eq!(at, Ratio::new((-1).into(), 4.into()));
    }

    #[test]
    fn display_and_json() {
        assert_eq!(p(&[1, 3, 1]).to_string(), "1 + 3x + x^2");
        assert_eq!(p(&[0, -1, 2]).to_string(), "-x + 2x^2");
        assert_eq!(p(&[1, 5, 6, 1]).to_json(), r#"["1","5","6","1"]"#);
        let big = IntPoly::from_json(r#"["1","123456789012345678901234567890"]"#).unwrap();
        assert_eq!(big.degree(), 1);
        assert!(IntPoly::from_json(r#"["1","x"]"#).is_err());
        assert!(IntPoly::from_json(r#"[1,2]"#).is_err());
    }

    #[test]
    fn gcd_and_division() {
        let a = p(&[1, 1]);
        let b = p(&[1, 2]);
        let ab = &a * &b;
        assert_eq!(ab.gcd(&(&a * &a)), a);
        assert_eq!(ab.div_exact(&b), Some(a.clone()));
        assert_eq!(ab.div_exact(&p(&[1, 3])), None);
        assert_eq!(p(&[2, 4, 6]).content(), BigInt::from(2));
        assert_eq!(p(&[-2, -4]).primitive_part(), p(&[1, 2]));
        assert_eq!(p(&[1, 3, 1]).derivative(), p(&[3, 2]));
    }

    #[test]
    fn squarefree() {
        let a = p(&[1, 1]);
        let b = p(&[1, 2]);
        assert_eq!(a.pow(2).squarefree_decomposition(), vec![(a.clone(), 2)]);
        let f = &a.pow(3) * &b;
        assert_eq!(f.squarefree_decomposition(), vec![(b.clone(), 1), (a.clone(), 3)]);
        // A well-covered tree polynomial with -1 of multiplicity four.
        let t = p(&[1, 16, 105, 371, 776, 990, 757, 319, 57]);
        let parts = t.squarefree_decomposition();
        assert!(parts.contains(&(a.clone(), 4)));
        let back = parts.iter().fold(IntPoly::one(), |acc, (g, i)| &acc * &g.pow(*i as u32));
        assert_eq!(back, t);
        assert_eq!(p(&[1, 3, 1]).squarefree_decomposition(), vec![(p(&[1, 3, 1]), 1)]);
        assert!(p(&[5]).squarefree_decomposition().is_empty());
    }

    #[test]
    fn positivity() {
        assert_eq!(p(&[1, 0, 1]).require_positive(), Err(PolyError::NonPositiveCoefficient { index: 1 }));
        assert_eq!(IntPoly::zero().require_positive(), Err(PolyError::Constant));
        assert!(p(&[1, 2]).require_positive().is_ok());
    }
}
