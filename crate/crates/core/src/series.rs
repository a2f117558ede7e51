//! Integer Laurent polynomials and truncated power series over the fixed
//! Hilbert denominator `(1-t)^2 (1-t^2)`.
//!
//! A characteristic polynomial `q(t)` determines the Hilbert series
//! `q(t) / ((1-t)^2 (1-t^2))`; this module expands it exactly, extracts the
//! GK-dimension and multiplicity from the pole order at `t = 1`, and reads
//! off the rank `q(1)`.

use num::{BigInt, BigRational, One, Zero};
use serde_json::{Map, Value};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("truncation order {order} is below the top degree {top} of the polynomial")]
    OrderTooSmall { order: i64, top: i64 },
    #[error("the zero polynomial has no dimension data")]
    ZeroPolynomial,
    #[error("t = 1 is a root of multiplicity {0} > 3; not a characteristic polynomial")]
    PoleOrderNegative(u32),
    #[error("cannot parse {0:?} as a Laurent polynomial")]
    Parse(String),
}

/// A finitely supported integer Laurent polynomial in `t`.
///
/// No zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, BigInt::one())
    }

    pub fn monomial(degree: i64, coeff: BigInt) -> Self {
        let mut p = LaurentPoly::default();
        p.add_term(degree, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = LaurentPoly::default();
        for (d, c) in terms {
            p.add_term(d, BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, degree: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(degree).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn coeff(&self, degree: i64) -> BigInt {
        self.coeffs.get(&degree).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.add_term(d, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&d, c)| (d, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::default();
        for (d1, c1) in self.terms() {
            for (d2, c2) in other.terms() {
                out.add_term(d1 + d2, c1 * c2);
            }
        }
        out
    }

    /// Shift by `t^n`.
    pub fn shift(&self, n: i64) -> Self {
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&d, c)| (d + n, c.clone()))
                .collect(),
        }
    }

    /// Evaluate at an integer point. Negative powers of `t` are only exact
    /// at units, so evaluation with negative support is restricted to
    /// `t = 1` and `t = -1` (the points the theory needs).
    pub fn eval(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (d, c) in self.terms() {
            acc += c * pow_signed(t, d);
        }
        acc
    }

    /// Exact division, `None` when the divisor does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        // Reduce to ordinary polynomial division by shifting both factors
        // to start at degree zero.
        let smin = self.min_degree().unwrap();
        let dmin = divisor.min_degree().unwrap();
        let num = self.shift(-smin);
        let den = divisor.shift(-dmin);
        let dlead_deg = den.max_degree().unwrap();
        let dlead = den.coeff(dlead_deg);
        let mut rem = num;
        let mut quot = LaurentPoly::default();
        while !rem.is_zero() {
            let rdeg = rem.max_degree().unwrap();
            if rdeg < dlead_deg {
                return None;
            }
            let rlead = rem.coeff(rdeg);
            if (&rlead % &dlead) != BigInt::zero() {
                return None;
            }
            let q = &rlead / &dlead;
            let qmono = LaurentPoly::monomial(rdeg - dlead_deg, q);
            rem = rem.sub(&qmono.mul(&den));
            quot = quot.add(&qmono);
        }
        Some(quot.shift(smin - dmin))
    }

    /// `1 - t`, the factor extracted at the `t = 1` pole.
    pub fn one_minus_t() -> Self {
        LaurentPoly::from_terms([(0, 1), (1, -1)])
    }

    /// `1 - t^2`.
    pub fn one_minus_t2() -> Self {
        LaurentPoly::from_terms([(0, 1), (2, -1)])
    }

    /// JSON object `{"degree": "coefficient"}` with decimal strings.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (d, c) in self.terms() {
            map.insert(d.to_string(), Value::String(c.to_string()));
        }
        Value::Object(map)
    }

    pub fn from_json(v: &Value) -> Result<Self, SeriesError> {
        let obj = v
            .as_object()
            .ok_or_else(|| SeriesError::Parse(v.to_string()))?;
        let mut p = LaurentPoly::default();
        for (k, val) in obj {
            let d: i64 = k.parse().map_err(|_| SeriesError::Parse(k.clone()))?;
            let c: BigInt = match val {
                Value::String(s) => s.parse().map_err(|_| SeriesError::Parse(s.clone()))?,
                Value::Number(n) => BigInt::from(
                    n.as_i64()
                        .ok_or_else(|| SeriesError::Parse(n.to_string()))?,
                ),
                other => return Err(SeriesError::Parse(other.to_string())),
            };
            p.add_term(d, c);
        }
        Ok(p)
    }

    /// Parse compact text like `2t^2 - t^4 + 1` or `1-t`.
    pub fn parse(input: &str) -> Result<Self, SeriesError> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(SeriesError::Parse(input.to_string()));
        }
        if s.starts_with('{') {
            let v: Value =
                serde_json::from_str(&s).map_err(|_| SeriesError::Parse(input.to_string()))?;
            return LaurentPoly::from_json(&v);
        }
        let bad = || SeriesError::Parse(input.to_string());
        let mut p = LaurentPoly::default();
        let bytes = s.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = BigInt::one();
            while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            }
            let num_start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: BigInt = if num_start == i {
                BigInt::one()
            } else {
                s[num_start..i].parse().map_err(|_| bad())?
            };
            let mut degree: i64 = 0;
            if i < bytes.len() && bytes[i] == b't' {
                i += 1;
                degree = 1;
                // An exponent needs a caret or a bare digit; a '-' after t
                // starts the next term ("t^-1" is negative degree, "t-1"
                // is t minus one).
                if i < bytes.len() && (bytes[i] == b'^' || bytes[i].is_ascii_digit()) {
                    if bytes[i] == b'^' {
                        i += 1;
                    }
                    let exp_start = i;
                    if i < bytes.len() && bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if exp_start == i {
                        return Err(bad());
                    }
                    degree = s[exp_start..i].parse().map_err(|_| bad())?;
                }
            } else if num_start == i {
                // Neither a number nor a power of t.
                return Err(bad());
            }
            p.add_term(degree, coeff * sign);
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.terms() {
            let (sign, abs) = if c < &BigInt::zero() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            match (d, abs.is_one()) {
                (0, _) => write!(f, "{}", abs)?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{}t", abs)?,
                (_, true) => write!(f, "t^{}", d)?,
                (_, false) => write!(f, "{}t^{}", abs, d)?,
            }
        }
        Ok(())
    }
}

fn pow_signed(t: &BigInt, e: i64) -> BigInt {
    if e >= 0 {
        return t.pow(e.unsigned_abs() as u32);
    }
    // t^{-1} = t exactly when t is a unit of Z.
    assert!(
        t == &BigInt::one() || t == &BigInt::from(-1),
        "negative powers can only be evaluated at t = 1 or t = -1"
    );
    t.pow(e.unsigned_abs() as u32)
}

/// Coefficients of a left-bounded power series, exact through degree `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    start: i64,
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn new(start: i64, coeffs: Vec<BigInt>) -> Self {
        TruncatedSeries { start, coeffs }
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    /// The truncation order `T`; coefficients are exact for degrees `<= T`.
    pub fn order(&self) -> i64 {
        self.start + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, n: i64) -> Option<BigInt> {
        if n < self.start {
            Some(BigInt::zero())
        } else if n > self.order() {
            None
        } else {
            Some(self.coeffs[(n - self.start) as usize].clone())
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

/// Coefficient of `t^n` in `1/((1-t)^2 (1-t^2))`.
pub fn ha_coefficient(n: i64) -> BigInt {
    if n < 0 {
        BigInt::zero()
    } else if n % 2 == 0 {
        BigInt::from((n + 2) * (n + 2) / 4)
    } else {
        BigInt::from((n + 1) * (n + 3) / 4)
    }
}

/// Expand `q(t) / ((1-t)^2 (1-t^2))` through degree `order`.
pub fn expand_over_ha(q: &LaurentPoly, order: i64) -> Result<TruncatedSeries, SeriesError> {
    if let Some(top) = q.max_degree() {
        if order < top {
            return Err(SeriesError::OrderTooSmall { order, top });
        }
    }
    let start = q.min_degree().unwrap_or(0).min(0);
    let mut coeffs = Vec::with_capacity((order - start + 1) as usize);
    for n in start..=order {
        let mut acc = BigInt::zero();
        for (d, c) in q.terms() {
            acc += c * ha_coefficient(n - d);
        }
        coeffs.push(acc);
    }
    Ok(TruncatedSeries::new(start, coeffs))
}

/// GK-dimension `3 - v` (with `v` the multiplicity of the root `t = 1` in
/// `q`) and the exact multiplicity `e = lim_{t->1} (1-t)^{gk} q/((1-t)^2(1-t^2))`.
pub fn gk_dim_and_multiplicity(q: &LaurentPoly) -> Result<(u8, BigRational), SeriesError> {
    if q.is_zero() {
        return Err(SeriesError::ZeroPolynomial);
    }
    let one = BigInt::one();
    let mut g = q.clone();
    let mut v: u32 = 0;
    while g.eval(&one).is_zero() {
        g = g
            .div_exact(&LaurentPoly::one_minus_t())
            .expect("root at t = 1 makes division by 1 - t exact");
        v += 1;
    }
    if v > 3 {
        return Err(SeriesError::PoleOrderNegative(v));
    }
    let gk = 3 - v as u8;
    // (1-t)^gk * q / ((1-t)^3 (1+t)) = g / (1+t) at t = 1.
    let e = BigRational::new(g.eval(&one), BigInt::from(2));
    Ok((gk, e))
}

/// The rank `q(1)`.
pub fn rank(q: &LaurentPoly) -> BigInt {
    q.eval(&BigInt::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn series_values(s: &TruncatedSeries, from: i64, to: i64) -> Vec<i64> {
        (from..=to)
            .map(|n| {
                let c = s.coeff(n).unwrap();
                i64::try_from(&c).unwrap()
            })
            .collect()
    }

    #[test]
    fn expansion_of_one_gives_ha() {
        let s = expand_over_ha(&LaurentPoly::one(), 5).unwrap();
        assert_eq!(series_values(&s, 0, 5), vec![1, 2, 4, 6, 9, 12]);
    }

    #[test]
    fn expansion_of_point_char_poly_is_constant() {
        // (1-t)(1-t^2) over the denominator collapses to 1/(1-t).
        let q = LaurentPoly::one_minus_t().mul(&LaurentPoly::one_minus_t2());
        let s = expand_over_ha(&q, 4).unwrap();
        assert_eq!(series_values(&s, 0, 4), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn expansion_of_line_char_poly() {
        // Frozen by long division of (1-t)/((1-t)^2(1-t^2)) = 1/((1-t)(1-t^2)).
        let s = expand_over_ha(&LaurentPoly::one_minus_t(), 5).unwrap();
        assert_eq!(series_values(&s, 0, 5), vec![1, 1, 2, 2, 3, 3]);
    }

    #[test]
    fn expansion_rejects_too_small_order() {
        let q = LaurentPoly::from_terms([(0, 1), (4, 1)]);
        assert_eq!(
            expand_over_ha(&q, 3).unwrap_err(),
            SeriesError::OrderTooSmall { order: 3, top: 4 }
        );
    }

    #[test]
    fn ha_coefficient_examples() {
        assert_eq!(ha_coefficient(0), BigInt::from(1));
        assert_eq!(ha_coefficient(3), BigInt::from(6));
        assert_eq!(ha_coefficient(-1), BigInt::from(0));
    }

    #[test]
    fn ha_coefficient_matches_expansion_up_to_200() {
        let s = expand_over_ha(&LaurentPoly::one(), 200).unwrap();
        for n in 0..=200 {
            assert_eq!(s.coeff(n).unwrap(), ha_coefficient(n), "degree {n}");
        }
    }

    #[test]
    fn gk_dim_and_multiplicity_examples() {
        let (gk, e) = gk_dim_and_multiplicity(&LaurentPoly::one()).unwrap();
        assert_eq!((gk, e.to_string()), (3, "1/2".into()));

        let (gk, e) = gk_dim_and_multiplicity(&LaurentPoly::one_minus_t()).unwrap();
        assert_eq!((gk, e.to_string()), (2, "1/2".into()));

        // Point-module characteristic polynomial: pole order one, multiplicity
        // one (the constant series 1/(1-t)).
        let q = LaurentPoly::one_minus_t().mul(&LaurentPoly::one_minus_t2());
        let (gk, e) = gk_dim_and_multiplicity(&q).unwrap();
        assert_eq!((gk, e.to_string()), (1, "1".into()));
    }

    #[test]
    fn gk_dim_rejects_zero_and_deep_roots() {
        assert_eq!(
            gk_dim_and_multiplicity(&LaurentPoly::zero()).unwrap_err(),
            SeriesError::ZeroPolynomial
        );
        let one_minus_t = LaurentPoly::one_minus_t();
        let deep = one_minus_t
            .mul(&one_minus_t)
            .mul(&one_minus_t)
            .mul(&one_minus_t);
        assert_eq!(
            gk_dim_and_multiplicity(&deep).unwrap_err(),
            SeriesError::PoleOrderNegative(4)
        );
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&LaurentPoly::one()), BigInt::from(1));
        assert_eq!(
            rank(&LaurentPoly::from_terms([(2, 2), (4, -1)])),
            BigInt::from(1)
        );
        assert_eq!(rank(&LaurentPoly::one_minus_t()), BigInt::from(0));
    }

    #[test]
    fn parse_round_trips() {
        let q = LaurentPoly::parse("2t^2-t^4").unwrap();
        assert_eq!(q, LaurentPoly::from_terms([(2, 2), (4, -1)]));
        let q = LaurentPoly::parse("1 - t").unwrap();
        assert_eq!(q, LaurentPoly::one_minus_t());
        let q = LaurentPoly::parse("t^-1+3").unwrap();
        assert_eq!(q, LaurentPoly::from_terms([(-1, 1), (0, 3)]));
        let json = q.to_json();
        assert_eq!(LaurentPoly::from_json(&json).unwrap(), q);
        assert!(LaurentPoly::parse("t^").is_err());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i64..10, -9i64..9), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn expansion_is_linear(q1 in arb_poly(), q2 in arb_poly()) {
            let t = 12;
            let lhs = expand_over_ha(&q1.add(&q2), t).unwrap();
            let a = expand_over_ha(&q1, t).unwrap();
            let b = expand_over_ha(&q2, t).unwrap();
            for n in -6..=t {
                prop_assert_eq!(
                    lhs.coeff(n).unwrap(),
                    a.coeff(n).unwrap() + b.coeff(n).unwrap()
                );
            }
        }

        #[test]
        fn nonzero_rank_forces_gk_three(q in arb_poly()) {
            prop_assume!(!q.is_zero());
            if let Ok((gk, _)) = gk_dim_and_multiplicity(&q) {
                if !rank(&q).is_zero() {
                    prop_assert_eq!(gk, 3);
                }
            }
        }

        #[test]
        fn div_exact_inverts_mul(q in arb_poly(), d in arb_poly()) {
            prop_assume!(!d.is_zero());
            let prod = q.mul(&d);
            let back = prod.div_exact(&d).unwrap();
            prop_assert_eq!(back, q);
        }

        #[test]
        fn display_parse_round_trip(q in arb_poly()) {
            let text = q.to_string();
            prop_assert_eq!(LaurentPoly::parse(&text).unwrap(), q, "text {}", text);
        }
    }
}
