//! Exact rational arithmetic, binomial coefficients over signed integers,
//! factorials and generalized harmonic numbers.
//!
//! Every scalar in the crate is a [`Rational`]. Values are always kept in
//! canonical form (positive denominator, reduced), so equality is structural.

use std::collections::HashMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("factorial of negative argument {0}")]
    NegativeFactorial(i64),
    #[error("harmonic number at negative index {0}")]
    NegativeHarmonicIndex(i64),
    #[error("harmonic order must be at least 1, got {0}")]
    InvalidHarmonicOrder(i64),
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

/// Arbitrary-precision exact fraction in lowest terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// `numer / denom`, reduced. Panics if `denom` is zero.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        let denom = denom.into();
        assert!(!denom.is_zero(), "rational with zero denominator");
        Rational(BigRational::new(numer.into(), denom))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// `(-1)^e` as a rational.
    pub fn sign_power(e: i64) -> Self {
        if e.rem_euclid(2) == 0 {
            Rational::one()
        } else {
            -Rational::one()
        }
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

macro_rules! from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(n: $t) -> Self {
                Rational::from_integer(n)
            }
        }
    )*};
}
from_int!(i32, i64, u32, u64, usize, BigInt);

/// Serialized as `num/den` in lowest terms, or just `num` when the
/// denominator is one (so zero is `0`).
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ExactError::Parse(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = num.trim().parse().map_err(|_| err())?;
        let den: BigInt = den.trim().parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        Ok(Rational::new(num, den))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

fn big_factorial(m: u64) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient `s choose t` for any signed integers, via the
/// falling factorial `s(s-1)...(s-t+1)/t!`. Zero for `t < 0`.
pub fn binomial(s: i64, t: i64) -> Rational {
    if t < 0 || (0 <= s && s < t) {
        return Rational::zero();
    }
    // symmetric shortcut for the usual non-negative case
    let t = if s >= 0 && t > s - t { s - t } else { t };
    let numer = (0..t).fold(BigInt::one(), |acc, i| acc * (s - i));
    Rational::new(numer, big_factorial(t as u64))
}

pub fn factorial(m: i64) -> Result<Rational, ExactError> {
    if m < 0 {
        return Err(ExactError::NegativeFactorial(m));
    }
    Ok(Rational::from_integer(big_factorial(m as u64)))
}

/// Memoized generalized harmonic numbers `H_n^<l>` for one order `l`.
///
/// Entry 0 is zero and entry `n` is entry `n - 1` plus `1/n^l`. The table
/// only grows; readers share it behind a lock.
#[derive(Debug)]
pub struct HarmonicTable {
    order: u32,
    values: RwLock<Vec<Rational>>,
}

impl HarmonicTable {
    pub fn new(order: u32) -> Self {
        assert!(order >= 1, "harmonic order must be positive");
        HarmonicTable {
            order,
            values: RwLock::new(vec![Rational::zero()]),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Number of entries computed so far.
    pub fn len(&self) -> usize {
        self.values.read().expect("harmonic table poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, n: usize) -> Rational {
        if let Some(v) = self.values.read().expect("harmonic table poisoned").get(n) {
            return v.clone();
        }
        let mut values = self.values.write().expect("harmonic table poisoned");
        while values.len() <= n {
            let k = values.len();
            let term = Rational::new(1, BigInt::from(k).pow(self.order));
            let next = values[k - 1].clone() + term;
            values.push(next);
        }
        values[n].clone()
    }
}

fn table(order: u32) -> Arc<HarmonicTable> {
    static TABLES: OnceLock<RwLock<HashMap<u32, Arc<HarmonicTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = tables
        .read()
        .expect("harmonic registry poisoned")
        .get(&order)
    {
        return Arc::clone(t);
    }
    let mut tables = tables.write().expect("harmonic registry poisoned");
    Arc::clone(
        tables
            .entry(order)
            .or_insert_with(|| Arc::new(HarmonicTable::new(order))),
    )
}

/// `H_n^<l> = sum_{k=1}^n 1/k^l`, with `H_0^<l> = 0`. Backed by a
/// process-wide cache per order.
pub fn harmonic(n: i64, l: i64) -> Result<Rational, ExactError> {
    if l < 1 || l > u32::MAX as i64 {
        return Err(ExactError::InvalidHarmonicOrder(l));
    }
    if n < 0 {
        return Err(ExactError::NegativeHarmonicIndex(n));
    }
    Ok(table(l as u32).get(n as usize))
}
