//! Exact multivariate Laurent-polynomial arithmetic over arbitrary-precision
//! rationals in the five fixed variables q, s, q12, q13, q23.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use thiserror::Error;

/// Number of ring variables.
pub const NVARS: usize = 5;
/// Variable order used in exponent vectors.
pub const VAR_NAMES: [&str; NVARS] = ["q", "s", "q12", "q13", "q23"];

/// Variable indices into an exponent vector.
pub const Q: usize = 0;
pub const S: usize = 1;
pub const Q12: usize = 2;
pub const Q13: usize = 3;
pub const Q23: usize = 4;

/// Exponent vector: one signed exponent per variable.
pub type Expo = [i32; NVARS];

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum RingError {
    #[error("polynomial is not divisible by the requested divisor")]
    NotDivisible,
    #[error("specialization assigns zero to a variable with negative exponent")]
    ZeroToNegativePower,
}

/// Multivariate Laurent polynomial with `BigRational` coefficients.
///
/// Invariants: no stored zero coefficients; terms keyed by exponent vector in
/// lexicographic `BTreeMap` order, so structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Expo, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::monomial([0; NVARS], c)
    }

    pub fn monomial(e: Expo, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// Integer-coefficient monomial `c * prod(var_i^e_i)`.
    pub fn term(c: i64, e: Expo) -> Self {
        Self::monomial(e, BigRational::from_integer(BigInt::from(c)))
    }

    /// The monomial `var^exp`.
    pub fn var_pow(var: usize, exp: i32) -> Self {
        let mut e = [0; NVARS];
        e[var] = exp;
        Self::term(1, e)
    }

    /// Exact rational `num/den` as a constant polynomial.
    pub fn rational(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// λ = q − q⁻¹.
    pub fn lambda() -> Self {
        Self::var_pow(Q, 1) - Self::var_pow(Q, -1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&[0; NVARS])
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &BigRational)> {
        self.terms.iter()
    }

    /// The constant-term coefficient (0 if absent).
    pub fn constant_coeff(&self) -> BigRational {
        self.terms.get(&[0; NVARS]).cloned().unwrap_or_else(BigRational::zero)
    }

    /// If the polynomial is a constant, return it.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&[0; NVARS]) {
                return Some(c.clone());
            }
        }
        None
    }

    fn insert_add(&mut self, e: Expo, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiply by a single monomial (cheap shift + scale).
    pub fn mul_monomial(&self, e: &Expo, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(te, tv)| {
                    let mut ne = *te;
                    for i in 0..NVARS {
                        ne[i] += e[i];
                    }
                    (ne, tv * c)
                })
                .collect(),
        }
    }

    /// The quantum integer [n]_q = (qⁿ − q⁻ⁿ)/(q − q⁻¹).
    pub fn qnum(n: i64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let m = n.unsigned_abs() as i32;
        let mut out = Self::zero();
        for i in 0..m {
            out.insert_add(
                {
                    let mut e = [0; NVARS];
                    e[Q] = m - 1 - 2 * i;
                    e
                },
                BigRational::one(),
            );
        }
        if n < 0 {
            -out
        } else {
            out
        }
    }

    /// Exact division by a divisor supported only on the variable q.
    /// Errors with `NotDivisible` if the quotient is not a Laurent polynomial.
    pub fn div_exact_q(&self, d: &LaurentPoly) -> Result<Self, RingError> {
        assert!(!d.is_zero(), "division by zero polynomial");
        assert!(
            d.terms.keys().all(|e| e[1..].iter().all(|&x| x == 0)),
            "divisor must involve only q"
        );
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Normalize the divisor to an ordinary polynomial in q.
        let dmin = d.terms.keys().map(|e| e[Q]).min().unwrap();
        let dmax = d.terms.keys().map(|e| e[Q]).max().unwrap();
        let ddeg = (dmax - dmin) as usize;
        let mut dc = vec![BigRational::zero(); ddeg + 1];
        for (e, c) in &d.terms {
            dc[(e[Q] - dmin) as usize] = c.clone();
        }
        // Group terms of self by the exponents of the other four variables.
        let mut groups: BTreeMap<[i32; NVARS - 1], BTreeMap<i32, BigRational>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let key = [e[1], e[2], e[3], e[4]];
            groups.entry(key).or_default().insert(e[Q], c.clone());
        }
        let mut out = Self::zero();
        for (key, grp) in groups {
            let nmin = *grp.keys().min().unwrap();
            let nmax = *grp.keys().max().unwrap();
            let ndeg = (nmax - nmin) as usize;
            if ndeg < ddeg {
                return Err(RingError::NotDivisible);
            }
            let mut nc = vec![BigRational::zero(); ndeg + 1];
            for (e, c) in grp {
                nc[(e - nmin) as usize] = c;
            }
            // Long division from the top coefficient.
            let lead = dc[ddeg].clone();
            let qdeg = ndeg - ddeg;
            let mut quot = vec![BigRational::zero(); qdeg + 1];
            for i in (0..=qdeg).rev() {
                let coef = &nc[i + ddeg] / &lead;
                if coef.is_zero() {
                    continue;
                }
                for j in 0..=ddeg {
                    let delta = &coef * &dc[j];
                    nc[i + j] -= delta;
                }
                quot[i] = coef;
            }
            if nc.iter().any(|c| !c.is_zero()) {
                return Err(RingError::NotDivisible);
            }
            let shift = nmin - dmin;
            for (i, c) in quot.into_iter().enumerate() {
                if !c.is_zero() {
                    out.insert_add([shift + i as i32, key[0], key[1], key[2], key[3]], c);
                }
            }
        }
        Ok(out)
    }

    /// Exact division by λᵏ = (q − q⁻¹)ᵏ.
    pub fn divide_lambda_power(&self, k: u32) -> Result<Self, RingError> {
        let mut out = self.clone();
        let lam = Self::lambda();
        for _ in 0..k {
            out = out.div_exact_q(&lam)?;
        }
        Ok(out)
    }

    /// Evaluate at a parameter point; exact or floating per the point's mode.
    pub fn specialize(&self, at: &ParamPoint) -> Result<SpecValue, RingError> {
        match at {
            ParamPoint::Exact(vals) => Ok(SpecValue::Exact(self.eval_exact(vals)?)),
            ParamPoint::Float(vals) => {
                let mut acc = 0.0f64;
                for (e, c) in &self.terms {
                    let mut t = rational_to_f64(c);
                    for i in 0..NVARS {
                        if e[i] != 0 {
                            if vals[i] == 0.0 && e[i] < 0 {
                                return Err(RingError::ZeroToNegativePower);
                            }
                            t *= vals[i].powi(e[i]);
                        }
                    }
                    acc += t;
                }
                Ok(SpecValue::Float(acc))
            }
        }
    }

    /// Exact evaluation at rational values.
    pub fn eval_exact(&self, vals: &[BigRational; NVARS]) -> Result<BigRational, RingError> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..NVARS {
                if e[i] != 0 {
                    if vals[i].is_zero() {
                        if e[i] < 0 {
                            return Err(RingError::ZeroToNegativePower);
                        }
                        t = BigRational::zero();
                        break;
                    }
                    t *= rational_pow(&vals[i], e[i]);
                }
            }
            acc += t;
        }
        Ok(acc)
    }
}

/// Integer power of a nonzero rational, negative exponents allowed.
pub fn rational_pow(v: &BigRational, e: i32) -> BigRational {
    let mut base = if e < 0 { v.recip() } else { v.clone() };
    let mut n = e.unsigned_abs();
    let mut acc = BigRational::one();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &base;
        }
        let sq = &base * &base;
        base = sq;
        n >>= 1;
    }
    acc
}

pub fn rational_to_f64(v: &BigRational) -> f64 {
    let n = v.numer();
    let d = v.denom();
    // Good enough for the magnitudes appearing here.
    let nf: f64 = n.to_string().parse().unwrap_or(f64::NAN);
    let df: f64 = d.to_string().parse().unwrap_or(f64::NAN);
    nf / df
}

/// A specialization target: all five variables assigned, in one mode.
#[derive(Clone, Debug, PartialEq)]
pub enum ParamPoint {
    Exact([BigRational; NVARS]),
    Float([f64; NVARS]),
}

impl ParamPoint {
    /// Exact point with all variables set to 1.
    pub fn all_ones() -> Self {
        ParamPoint::Exact(std::array::from_fn(|_| BigRational::one()))
    }

    /// Exact point from (num, den) pairs in variable order.
    pub fn exact(vals: [(i64, i64); NVARS]) -> Self {
        ParamPoint::Exact(std::array::from_fn(|i| {
            BigRational::new(BigInt::from(vals[i].0), BigInt::from(vals[i].1))
        }))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SpecValue {
    Exact(BigRational),
    Float(f64),
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.insert_add(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.insert_add(*e, -c);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for i in 0..NVARS {
                    e[i] += eb[i];
                }
                out.insert_add(e, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        (&self) * (&rhs)
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = (&*self) * rhs;
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            for i in 0..NVARS {
                if e[i] != 0 {
                    write!(f, "*{}^{}", VAR_NAMES[i], e[i])?;
                }
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<Se: Serializer>(&self, serializer: Se) -> Result<Se::Ok, Se::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            c: String,
            e: &'a Expo,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(e, c)| Term {
                c: format!("{}/{}", c.numer(), c.denom()),
                e,
            })
            .collect();
        let mut map = serializer.serialize_map(Some(1))?;
        map.serialize_entry("terms", &terms)?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Term {
            c: String,
            e: Expo,
        }
        #[derive(Deserialize)]
        struct Repr {
            terms: Vec<Term>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut out = LaurentPoly::zero();
        for t in repr.terms {
            let (num, den) = match t.c.split_once('/') {
                Some((n, d)) => (n, d),
                None => (t.c.as_str(), "1"),
            };
            let n: BigInt = num.parse().map_err(D::Error::custom)?;
            let d: BigInt = den.parse().map_err(D::Error::custom)?;
            if d.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            out.insert_add(t.e, BigRational::new(n, d));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentPoly {
        LaurentPoly::var_pow(Q, 1)
    }
    fn qi() -> LaurentPoly {
        LaurentPoly::var_pow(Q, -1)
    }

    #[test]
    fn exponent_cancellation() {
        assert!((q() * qi()).is_one());
    }

    #[test]
    fn lambda_times_conjugate() {
        let got = LaurentPoly::lambda() * (q() + qi());
        let want = LaurentPoly::var_pow(Q, 2) - LaurentPoly::var_pow(Q, -2);
        assert_eq!(got, want);
    }

    #[test]
    fn additive_identity() {
        let p = LaurentPoly::qnum(3) * LaurentPoly::var_pow(S, -2);
        assert_eq!(&p + &LaurentPoly::zero(), p);
    }

    #[test]
    fn qnum_values() {
        assert!(LaurentPoly::qnum(0).is_zero());
        assert!(LaurentPoly::qnum(1).is_one());
        let want3 = LaurentPoly::var_pow(Q, 2) + LaurentPoly::one() + LaurentPoly::var_pow(Q, -2);
        assert_eq!(LaurentPoly::qnum(3), want3);
        assert_eq!(LaurentPoly::qnum(-2), -(q() + qi()));
    }

    #[test]
    fn lambda_division() {
        let p = LaurentPoly::var_pow(Q, 2) - LaurentPoly::var_pow(Q, -2);
        assert_eq!(p.divide_lambda_power(1).unwrap(), q() + qi());
        assert_eq!(
            LaurentPoly::zero().divide_lambda_power(5).unwrap(),
            LaurentPoly::zero()
        );
        assert_eq!(q().divide_lambda_power(1), Err(RingError::NotDivisible));
    }

    #[test]
    fn specialize_values() {
        let p = q() + qi();
        match p.specialize(&ParamPoint::all_ones()).unwrap() {
            SpecValue::Exact(v) => assert_eq!(v, BigRational::from_integer(2.into())),
            _ => panic!(),
        }
        let at = ParamPoint::exact([(2, 1), (1, 1), (1, 1), (1, 1), (1, 1)]);
        match LaurentPoly::qnum(3).specialize(&at).unwrap() {
            SpecValue::Exact(v) => assert_eq!(v, BigRational::new(21.into(), 4.into())),
            _ => panic!(),
        }
        let at0 = ParamPoint::exact([(0, 1), (1, 1), (1, 1), (1, 1), (1, 1)]);
        assert_eq!(qi().specialize(&at0), Err(RingError::ZeroToNegativePower));
    }

    #[test]
    fn qnum_recurrence() {
        // [n+1]_q = (q + q⁻¹)[n]_q − [n−1]_q
        let bracket = q() + qi();
        for n in -5i64..=5 {
            let lhs = LaurentPoly::qnum(n + 1);
            let rhs = &(&bracket * &LaurentPoly::qnum(n)) - &LaurentPoly::qnum(n - 1);
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn json_roundtrip() {
        let p = LaurentPoly::lambda() * LaurentPoly::rational(-3, 7)
            + LaurentPoly::var_pow(Q13, -2);
        let js = serde_json::to_string(&p).unwrap();
        assert!(js.contains("\"terms\""));
        let back: LaurentPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
    }
}
