//! Bivariate first-order jets over [`Rational`].
//!
//! A [`Jet2`] is `a + b·εx + c·εy + d·εx·εy` with `εx² = εy² = 0`. Evaluating
//! an expression in jets with `x = εx`, `y = εy` carries its value, the first
//! partials at the origin and the mixed partial `∂²/∂x∂y` at the origin, so the
//! operators `D_x`, `D_y` and `D²_xy` reduce to reading a coefficient.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{factorial, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Jet2 {
    pub val: Rational,
    pub dx: Rational,
    pub dy: Rational,
    pub dxy: Rational,
}

/// Which coefficient of a jet to read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    Value,
    Dx,
    Dy,
    Dxy,
}

impl Component {
    pub const ALL: [Component; 4] = [
        Component::Value,
        Component::Dx,
        Component::Dy,
        Component::Dxy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Component::Value => "value",
            Component::Dx => "dx",
            Component::Dy => "dy",
            Component::Dxy => "dxy",
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Component {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "value" | "val" => Ok(Component::Value),
            "dx" => Ok(Component::Dx),
            "dy" => Ok(Component::Dy),
            "dxy" => Ok(Component::Dxy),
            other => Err(format!(
                "unknown jet component {other:?} (expected value, dx, dy or dxy)"
            )),
        }
    }
}

impl Jet2 {
    pub fn new(
        val: impl Into<Rational>,
        dx: impl Into<Rational>,
        dy: impl Into<Rational>,
        dxy: impl Into<Rational>,
    ) -> Self {
        Jet2 {
            val: val.into(),
            dx: dx.into(),
            dy: dy.into(),
            dxy: dxy.into(),
        }
    }

    pub fn constant(r: impl Into<Rational>) -> Self {
        Jet2 {
            val: r.into(),
            ..Jet2::default()
        }
    }

    pub fn zero() -> Self {
        Jet2::default()
    }

    pub fn one() -> Self {
        Jet2::constant(1)
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Jet2::new(0, 1, 0, 0)
    }

    /// The variable `y`.
    pub fn y() -> Self {
        Jet2::new(0, 0, 1, 0)
    }

    pub fn extract(&self, component: Component) -> &Rational {
        match component {
            Component::Value => &self.val,
            Component::Dx => &self.dx,
            Component::Dy => &self.dy,
            Component::Dxy => &self.dxy,
        }
    }

    pub fn scale(&self, r: &Rational) -> Jet2 {
        Jet2 {
            val: &self.val * r,
            dx: &self.dx * r,
            dy: &self.dy * r,
            dxy: &self.dxy * r,
        }
    }
}

impl fmt::Debug for Jet2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.val, self.dx, self.dy, self.dxy)
    }
}

impl fmt::Display for Jet2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "value={} dx={} dy={} dxy={}",
            self.val, self.dx, self.dy, self.dxy
        )
    }
}

impl Add<&Jet2> for &Jet2 {
    type Output = Jet2;
    fn add(self, rhs: &Jet2) -> Jet2 {
        Jet2 {
            val: &self.val + &rhs.val,
            dx: &self.dx + &rhs.dx,
            dy: &self.dy + &rhs.dy,
            dxy: &self.dxy + &rhs.dxy,
        }
    }
}

impl Add for Jet2 {
    type Output = Jet2;
    fn add(self, rhs: Jet2) -> Jet2 {
        &self + &rhs
    }
}

impl Sub<&Jet2> for &Jet2 {
    type Output = Jet2;
    fn sub(self, rhs: &Jet2) -> Jet2 {
        self + &(-rhs)
    }
}

impl Sub for Jet2 {
    type Output = Jet2;
    fn sub(self, rhs: Jet2) -> Jet2 {
        &self - &rhs
    }
}

impl Mul<&Jet2> for &Jet2 {
    type Output = Jet2;
    fn mul(self, rhs: &Jet2) -> Jet2 {
        Jet2 {
            val: &self.val * &rhs.val,
            dx: &self.val * &rhs.dx + &self.dx * &rhs.val,
            dy: &self.val * &rhs.dy + &self.dy * &rhs.val,
            dxy: &self.val * &rhs.dxy
                + &self.dx * &rhs.dy
                + &self.dy * &rhs.dx
                + &self.dxy * &rhs.val,
        }
    }
}

impl Mul for Jet2 {
    type Output = Jet2;
    fn mul(self, rhs: Jet2) -> Jet2 {
        &self * &rhs
    }
}

impl Neg for &Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        Jet2 {
            val: -&self.val,
            dx: -&self.dx,
            dy: -&self.dy,
            dxy: -&self.dxy,
        }
    }
}

impl Neg for Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        -&self
    }
}

impl Sum for Jet2 {
    fn sum<I: Iterator<Item = Jet2>>(iter: I) -> Self {
        iter.fold(Jet2::zero(), |acc, j| &acc + &j)
    }
}

pub fn jet_add(a: &Jet2, b: &Jet2) -> Jet2 {
    a + b
}

pub fn jet_mul(a: &Jet2, b: &Jet2) -> Jet2 {
    a * b
}

pub fn jet_neg(a: &Jet2) -> Jet2 {
    -a
}

pub fn extract(component: Component, j: &Jet2) -> Rational {
    j.extract(component).clone()
}

/// `binom(s0 + cx·x + cy·y, t)` as a jet, through the falling factorial
/// `∏_{i<t} (s0 + cx·x + cy·y - i) / t!`. Zero when `t < 0`.
///
/// For `0 <= t <= s0` and `(cx, cy) = (1, 0)` the `dx` coefficient is
/// `binom(s0, t)·(H_{s0} - H_{s0-t})`.
///
/// Panics unless `cx` and `cy` are in `{-1, 0, 1}`.
pub fn jet_binomial_affine(s0: i64, cx: i64, cy: i64, t: i64) -> Jet2 {
    assert!(
        (-1..=1).contains(&cx) && (-1..=1).contains(&cy),
        "jet binomial coefficients must be unit or zero, got ({cx}, {cy})"
    );
    if t < 0 {
        return Jet2::zero();
    }
    // integer jet coefficients of the numerator, one linear factor at a time
    let [mut val, mut dx, mut dy, mut dxy] = [
        BigInt::one(),
        BigInt::zero(),
        BigInt::zero(),
        BigInt::zero(),
    ];
    for i in 0..t {
        let r = s0 - i;
        dxy = &dxy * r + &dx * cy + &dy * cx;
        dx = &dx * r + &val * cx;
        dy = &dy * r + &val * cy;
        val *= r;
    }
    let t_fact = factorial(t).expect("t is non-negative");
    let over = |c: BigInt| Rational::from(c) / &t_fact;
    Jet2 {
        val: over(val),
        dx: over(dx),
        dy: over(dy),
        dxy: over(dxy),
    }
}
