//! Exact coefficient fields: the rationals and prime fields `F_p`.
//!
//! Arithmetic context is carried by a field value rather than by the
//! elements, so `F_p` elements are plain `u64` residues and rational
//! elements are `BigRational`. Every operation takes the field by
//! reference.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Zero};
use rand_core::RngCore;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported bound 2^61")]
    ModulusTooLarge(u64),
    #[error("cannot parse {0:?} as a field element")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes modulo p")]
    BadDenominator,
}

/// An exact field with explicit context. Elements carry no context of
/// their own, so conversions like `from_i64` hang off the field value.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Image of an exact rational; fails over `F_p` when `p` divides the
    /// denominator.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem, FieldError>;
    /// Parse the serialization format: decimal over `F_p`, `num` or
    /// `num/den` over the rationals.
    fn parse(&self, s: &str) -> Result<Self::Elem, FieldError>;
    fn render(&self, a: &Self::Elem) -> String;
    /// Uniform sample over `F_p`; small integers over the rationals.
    fn sample(&self, rng: &mut dyn RngCore) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

/// The field of rational numbers with big-integer arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(a.recip())
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational, FieldError> {
        if den.is_zero() {
            return Err(FieldError::BadDenominator);
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }
    fn parse(&self, s: &str) -> Result<BigRational, FieldError> {
        let make_err = || FieldError::Parse(s.to_string());
        match s.split_once('/') {
            Some((num, den)) => {
                let num: BigInt = num.trim().parse().map_err(|_| make_err())?;
                let den: BigInt = den.trim().parse().map_err(|_| make_err())?;
                if den.is_zero() {
                    return Err(make_err());
                }
                Ok(BigRational::new(num, den))
            }
            None => {
                let num: BigInt = s.trim().parse().map_err(|_| make_err())?;
                Ok(BigRational::from_integer(num))
            }
        }
    }
    fn render(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn sample(&self, rng: &mut dyn RngCore) -> BigRational {
        // Small integers keep random-representation tests well conditioned.
        let n = (rng.next_u64() % 19) as i64 - 9;
        self.from_i64(n)
    }
}

/// A prime field `F_p` with `p < 2^61`; elements are residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p >= 1 << 61 {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_bigint(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let mut r = n % &p;
        if r.sign() == Sign::Minus {
            r += &p;
        }
        let (_, digits) = r.to_u64_digits();
        digits.first().copied().unwrap_or(0)
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> Result<u64, FieldError> {
        if *a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        // Extended Euclid on signed 128-bit words.
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        let mut t = t0 % self.p as i128;
        if t < 0 {
            t += self.p as i128;
        }
        Ok(t as u64)
    }
    fn from_i64(&self, n: i64) -> u64 {
        // p < 2^61 < i64::MAX, so the modulus fits.
        n.rem_euclid(self.p as i64) as u64
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u64, FieldError> {
        let d = self.reduce_bigint(den);
        if d == 0 {
            return Err(FieldError::BadDenominator);
        }
        let n = self.reduce_bigint(num);
        Ok(self.mul(&n, &self.inv(&d)?))
    }
    fn parse(&self, s: &str) -> Result<u64, FieldError> {
        let n: BigInt = s
            .trim()
            .parse()
            .map_err(|_| FieldError::Parse(s.to_string()))?;
        Ok(self.reduce_bigint(&n))
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn sample(&self, rng: &mut dyn RngCore) -> u64 {
        // Rejection sampling for uniformity.
        let zone = u64::MAX - u64::MAX % self.p;
        loop {
            let r = rng.next_u64();
            if r < zone {
                return r % self.p;
            }
        }
    }
}

impl PrimeField {
    pub fn pow(&self, base: u64, mut e: u64) -> u64 {
        let mut acc = self.one();
        let mut b = base % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    /// A square root of `a` modulo `p` when one exists (Tonelli-Shanks).
    pub fn sqrt(&self, a: u64) -> Option<u64> {
        let p = self.p;
        if a == 0 {
            return Some(0);
        }
        if p == 2 {
            return Some(a % 2);
        }
        if self.pow(a, (p - 1) / 2) != 1 {
            return None;
        }
        if p % 4 == 3 {
            return Some(self.pow(a, (p + 1) / 4));
        }
        // Tonelli-Shanks: write p - 1 = q 2^s with q odd.
        let mut q = p - 1;
        let mut s = 0u32;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        // Find a quadratic non-residue deterministically.
        let z = (2..p)
            .find(|&z| self.pow(z, (p - 1) / 2) == p - 1)
            .expect("non-residues exist for odd p");
        let mut m = s;
        let mut c = self.pow(z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, q.div_ceil(2));
        while t != 1 {
            let mut i = 0u32;
            let mut tt = t;
            while tt != 1 {
                tt = self.mul(&tt, &tt);
                i += 1;
            }
            let b = self.pow(c, 1u64 << (m - i - 1));
            m = i;
            c = self.mul(&b, &b);
            t = self.mul(&t, &c);
            r = self.mul(&r, &b);
        }
        Some(r)
    }
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut base: u64, mut e: u64| {
        let mut acc = 1u64;
        base %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
