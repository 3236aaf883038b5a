//! The Chu-Vandermonde convolution and its three substituted forms, evaluated
//! both as plain rationals and in [`Jet2`] arithmetic.

use std::fmt;
use std::str::FromStr;

use super::{binom, ClosedForm, Domain, IdentityDescriptor, IdentityParams};
use crate::exact::Rational;
use crate::jets::{jet_binomial_affine, Component, Jet2};

/// `sum_k binom(x, k) binom(y, n - k)`, checked against `binom(x + y, n)`.
///
/// Panics if the two sides differ.
pub fn vandermonde(n: u32, x: i64, y: i64) -> Rational {
    let n = n as i64;
    let lhs: Rational = (0..=n).map(|k| binom(x, k) * binom(y, n - k)).sum();
    let rhs = binom(x + y, n);
    assert_eq!(lhs, rhs, "Chu-Vandermonde failed at n={n} x={x} y={y}");
    rhs
}

fn vandermonde_lhs(params: &IdentityParams) -> Rational {
    let (n, x, y) = params.signed();
    (0..=n).map(|k| binom(x, k) * binom(y, n - k)).sum()
}

fn vandermonde_rhs(params: &IdentityParams) -> ClosedForm {
    let (n, x, y) = params.signed();
    ClosedForm::plain(binom(x + y, n))
}

/// Registry entry for the convolution itself, specialised at `x = p`, `y = q`.
pub(super) fn descriptor() -> IdentityDescriptor {
    IdentityDescriptor {
        id: "vandermonde",
        anchor: "Eq. (1), Chu-Vandermonde convolution (x = p, y = q)",
        uses_pq: true,
        domain: Domain::ALL,
        lhs: vandermonde_lhs,
        rhs: vandermonde_rhs,
    }
}

/// The three substitutions of the convolution that seed the derivations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Seed {
    /// `x -> -p-1-x`, `y -> -q-1-y`:
    /// `sum binom(p+k+x, k) binom(q+n-k+y, n-k) = binom(p+q+n+1+x+y, n)`
    Eq2,
    /// `x -> p+n+x`, `y -> q+n+y`:
    /// `sum binom(p+n+x, k) binom(q+n+y, n-k) = binom(p+q+2n+x+y, n)`
    Eq5,
    /// `x -> -p-1-x`, `y -> q+n+y`:
    /// `sum (-1)^k binom(p+k+x, k) binom(q+n+y, n-k) = (-1)^n binom(p-q+x-y, n)`
    Eq7,
}

impl Seed {
    pub const ALL: [Seed; 3] = [Seed::Eq2, Seed::Eq5, Seed::Eq7];

    pub fn name(self) -> &'static str {
        match self {
            Seed::Eq2 => "eq2",
            Seed::Eq5 => "eq5",
            Seed::Eq7 => "eq7",
        }
    }

    /// One summand of the left side as a jet in `x`, `y`.
    pub fn lhs_term(self, params: &IdentityParams, k: i64) -> Jet2 {
        let (n, p, q) = params.signed();
        match self {
            Seed::Eq2 => {
                &jet_binomial_affine(p + k, 1, 0, k) * &jet_binomial_affine(q + n - k, 0, 1, n - k)
            }
            Seed::Eq5 => {
                &jet_binomial_affine(p + n, 1, 0, k) * &jet_binomial_affine(q + n, 0, 1, n - k)
            }
            Seed::Eq7 => {
                let term =
                    &jet_binomial_affine(p + k, 1, 0, k) * &jet_binomial_affine(q + n, 0, 1, n - k);
                term.scale(&Rational::sign_power(k))
            }
        }
    }

    pub fn lhs_jet(self, params: &IdentityParams) -> Jet2 {
        (0..=params.n as i64)
            .map(|k| self.lhs_term(params, k))
            .sum()
    }

    pub fn rhs_jet(self, params: &IdentityParams) -> Jet2 {
        let (n, p, q) = params.signed();
        match self {
            Seed::Eq2 => jet_binomial_affine(p + q + n + 1, 1, 1, n),
            Seed::Eq5 => jet_binomial_affine(p + q + 2 * n, 1, 1, n),
            Seed::Eq7 => jet_binomial_affine(p - q, 1, -1, n).scale(&Rational::sign_power(n)),
        }
    }

    pub fn jet_sides(self, params: &IdentityParams) -> SeedSides {
        SeedSides {
            lhs: self.lhs_jet(params),
            rhs: self.rhs_jet(params),
        }
    }

    /// Value of the convolution at `x = y = 0`. Panics if the two sides
    /// disagree in any jet component.
    pub fn convolution(self, params: &IdentityParams) -> Rational {
        let sides = self.jet_sides(params);
        assert!(
            sides.agree(),
            "{} convolution failed at {params}: {:?} vs {:?}",
            self.name(),
            sides.lhs,
            sides.rhs
        );
        sides.rhs.val
    }
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Seed {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "eq2" => Ok(Seed::Eq2),
            "eq5" => Ok(Seed::Eq5),
            "eq7" => Ok(Seed::Eq7),
            other => Err(format!("unknown seed {other:?} (expected eq2, eq5 or eq7)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedSides {
    pub lhs: Jet2,
    pub rhs: Jet2,
}

impl SeedSides {
    pub fn agree(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn component(&self, component: Component) -> (Rational, Rational) {
        (
            self.lhs.extract(component).clone(),
            self.rhs.extract(component).clone(),
        )
    }
}

pub fn eq2_convolution(params: &IdentityParams) -> Rational {
    Seed::Eq2.convolution(params)
}

pub fn eq2_jet(params: &IdentityParams) -> SeedSides {
    Seed::Eq2.jet_sides(params)
}

pub fn eq5_convolution(params: &IdentityParams) -> Rational {
    Seed::Eq5.convolution(params)
}

pub fn eq5_jet(params: &IdentityParams) -> SeedSides {
    Seed::Eq5.jet_sides(params)
}

pub fn eq7_convolution(params: &IdentityParams) -> Rational {
    Seed::Eq7.convolution(params)
}

pub fn eq7_jet(params: &IdentityParams) -> SeedSides {
    Seed::Eq7.jet_sides(params)
}

/// Apply a derivative operator to both sides of a seed convolution: the
/// chosen jet coefficient of the left side and of the right side.
pub fn jet_derive_theorem(
    seed: Seed,
    operator: Component,
    params: &IdentityParams,
) -> (Rational, Rational) {
    seed.jet_sides(params).component(operator)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::harmonic;

    fn p(n: u32, p: u32, q: u32) -> IdentityParams {
        IdentityParams::new(n, p, q)
    }

    #[test]
    fn vandermonde_examples() {
        assert_eq!(vandermonde(2, 3, 2), Rational::from(10));
        assert_eq!(vandermonde(0, 7, -4), Rational::one());
        assert_eq!(vandermonde(3, -2, -2), Rational::from(-20));
    }

    #[test]
    fn eq2_examples() {
        for (pp, qq) in [(0, 0), (3, 1), (2, 7)] {
            assert_eq!(eq2_convolution(&p(0, pp, qq)), Rational::one());
        }
        // binom(1,0)binom(2,2) + binom(2,1)binom(1,1) + binom(3,2)binom(0,0) = binom(4, 2)
        assert_eq!(eq2_convolution(&p(2, 1, 0)), Rational::from(6));
        let h = |n| harmonic(n, 1).unwrap();
        let (lhs, rhs) = jet_derive_theorem(Seed::Eq2, Component::Dx, &p(1, 0, 0));
        assert_eq!(rhs, binom(2, 1) * (h(2) - h(1)));
        assert_eq!(lhs, rhs);
        assert_eq!(rhs, Rational::one());
    }

    #[test]
    fn eq5_examples() {
        assert_eq!(eq5_convolution(&p(2, 1, 0)), Rational::from(10));
        let (lhs, rhs) = jet_derive_theorem(Seed::Eq5, Component::Dy, &p(0, 5, 5));
        assert!(lhs.is_zero() && rhs.is_zero());
    }

    #[test]
    fn eq7_dispatch_free_rhs() {
        // (-1)^n binom(p - q, n) with negative upper index
        assert_eq!(eq7_convolution(&p(3, 0, 2)), -binom(-2, 3));
        let sides = eq7_jet(&p(2, 0, 0));
        assert!(sides.agree());
        let (lhs, rhs) = sides.component(Component::Dx);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn eq2_dxy_small() {
        let (lhs, rhs) = jet_derive_theorem(Seed::Eq2, Component::Dxy, &p(2, 0, 0));
        assert_eq!(lhs, rhs);
        // d²/dxdy binom(3+x+y, 2) at 0 = 1
        assert_eq!(rhs, Rational::one());
    }

    #[test]
    fn seed_names_round_trip() {
        for s in Seed::ALL {
            assert_eq!(s.name().parse::<Seed>().unwrap(), s);
        }
        assert!("eq3".parse::<Seed>().is_err());
    }
}
