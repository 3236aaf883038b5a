//! Second routes to identity values.
//!
//! *Derivation*: differentiate a seed convolution in jet arithmetic and
//! rebuild the identity from the extracted coefficients, exactly as the
//! hand derivation does, using the lower-order identity where it is needed.
//! The left side is rebuilt from the left-side jet (with brute-force sums for
//! the lower identity) and the right side from the right-side jet (with
//! closed forms).
//!
//! *Shift*: a `k`-weighted identity equals a scaled evaluation of its parent
//! at shifted parameters.

use super::alternating::{
    harmonic_d_lhs, harmonic_d_rhs, harmonic_e_lhs, harmonic_e_rhs, thm_e_lhs, thm_e_rhs,
};
use super::convolution::{harmonic_a_lhs, harmonic_a_rhs, thm_a_lhs, thm_a_rhs};
use super::seeds::Seed;
use super::squared::{harmonic_c_lhs, harmonic_c_rhs, thm_c_lhs, thm_c_rhs};
use super::{h, int, IdentityParams};
use crate::exact::Rational;
use crate::jets::Jet2;

/// Identity sides recomputed along another route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reconstruction {
    pub lhs: Rational,
    pub rhs: Rational,
}

pub const DERIVED_IDS: [&str; 7] = [
    "harmonic-a",
    "harmonic-c",
    "harmonic-d",
    "harmonic-e",
    "thm-a",
    "thm-c",
    "thm-e",
];

type Side = fn(&IdentityParams) -> Rational;

pub const SHIFTED_IDS: [&str; 4] = ["harmonic-b", "thm-b", "thm-d", "thm-f"];

/// Seed convolution an identity is derived from, if any.
pub fn seed_of(id: &str) -> Option<Seed> {
    match id {
        "harmonic-a" | "thm-a" => Some(Seed::Eq2),
        "harmonic-c" | "thm-c" => Some(Seed::Eq5),
        "harmonic-d" | "harmonic-e" | "thm-e" => Some(Seed::Eq7),
        _ => None,
    }
}

fn swap_pq(params: &IdentityParams) -> IdentityParams {
    IdentityParams::new(params.n, params.q, params.p)
}

/// Lower-order sums used while rebuilding a product identity, taken either
/// from brute force or from closed forms.
struct Lower {
    harmonic_a: fn(&IdentityParams) -> Rational,
    harmonic_c: fn(&IdentityParams) -> Rational,
    harmonic_d: fn(&IdentityParams) -> Rational,
    harmonic_e: fn(&IdentityParams) -> Rational,
}

const BRUTE: Lower = Lower {
    harmonic_a: harmonic_a_lhs,
    harmonic_c: harmonic_c_lhs,
    harmonic_d: harmonic_d_lhs,
    harmonic_e: harmonic_e_lhs,
};

const CLOSED: Lower = Lower {
    harmonic_a: harmonic_a_rhs,
    harmonic_c: harmonic_c_rhs,
    harmonic_d: |p| harmonic_d_rhs(p).1,
    harmonic_e: |p| harmonic_e_rhs(p).1,
};

fn rebuild(id: &str, params: &IdentityParams, jet: &Jet2, lower: &Lower) -> Rational {
    let (n, p, q) = params.signed();
    match id {
        // D_x binom(p+k+x, k) = binom(p+k, k)(H_{p+k} - H_p)
        "harmonic-a" => &jet.dx + h(p) * &jet.val,
        "thm-a" => {
            &jet.dxy
                + h(q) * (lower.harmonic_a)(params)
                + h(p) * (lower.harmonic_a)(&swap_pq(params))
                - h(p) * h(q) * &jet.val
        }
        // D_y binom(q+n+y, n-k) = binom(q+n, n-k)(H_{q+n} - H_{q+k})
        "harmonic-c" => h(q + n) * &jet.val - &jet.dy,
        "thm-c" => {
            &jet.dxy - h(p + n) * h(q + n) * &jet.val
                + h(p + n) * (lower.harmonic_c)(params)
                + h(q + n) * (lower.harmonic_c)(&swap_pq(params))
        }
        "harmonic-d" => &jet.dx + h(p) * &jet.val,
        "harmonic-e" => h(q + n) * &jet.val - &jet.dy,
        "thm-e" => {
            -&jet.dxy + h(q + n) * (lower.harmonic_d)(params) - h(p) * h(q + n) * &jet.val
                + h(p) * (lower.harmonic_e)(params)
        }
        _ => unreachable!("no derivation for {id}"),
    }
}

/// Rebuild both sides of `id` from the jets of its seed convolution. `None`
/// if `id` is not obtained by differentiating a seed.
pub fn derivation(id: &str, params: &IdentityParams) -> Option<Reconstruction> {
    let seed = seed_of(id)?;
    let sides = seed.jet_sides(params);
    Some(Reconstruction {
        lhs: rebuild(id, params, &sides.lhs, &BRUTE),
        rhs: rebuild(id, params, &sides.rhs, &CLOSED),
    })
}

/// Rebuild both sides of a `k`-weighted identity from its parent at shifted
/// parameters. `None` if `id` has no parent or `n = 0`.
pub fn shift(id: &str, params: &IdentityParams) -> Option<Reconstruction> {
    if params.n == 0 {
        return None;
    }
    let IdentityParams { n, p, q } = *params;
    let (scale, parent, lhs, rhs): (Rational, IdentityParams, Side, Side) = match id {
        "harmonic-b" => (
            int(p as i64 + 1),
            IdentityParams::new(n - 1, p + 1, q),
            harmonic_a_lhs,
            harmonic_a_rhs,
        ),
        "thm-b" => (
            int(p as i64 + 1),
            IdentityParams::new(n - 1, p + 1, q),
            thm_a_lhs,
            thm_a_rhs,
        ),
        "thm-d" => (
            int(p as i64 + n as i64),
            IdentityParams::new(n - 1, p, q + 1),
            thm_c_lhs,
            thm_c_rhs,
        ),
        "thm-f" => (
            -int(p as i64 + 1),
            IdentityParams::new(n - 1, p + 1, q + 1),
            thm_e_lhs,
            |p| thm_e_rhs(p).1,
        ),
        _ => return None,
    };
    Some(Reconstruction {
        lhs: &scale * lhs(&parent),
        rhs: &scale * rhs(&parent),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::registry;

    #[test]
    fn derivation_reproduces_small_grid() {
        for id in DERIVED_IDS {
            let d = registry().get(id).unwrap();
            for n in 0..=5 {
                for p in 0..=3 {
                    for q in 0..=3 {
                        let at = IdentityParams::new(n, p, q);
                        let rec = derivation(id, &at).unwrap();
                        assert_eq!(rec.lhs, (d.lhs)(&at), "{id} lhs at {at}");
                        assert_eq!(rec.rhs, (d.rhs)(&at).value, "{id} rhs at {at}");
                    }
                }
            }
        }
    }

    #[test]
    fn shift_reproduces_small_grid() {
        for id in SHIFTED_IDS {
            let d = registry().get(id).unwrap();
            for n in 1..=5 {
                for p in 0..=3 {
                    for q in 0..=3 {
                        let at = IdentityParams::new(n, p, q);
                        let rec = shift(id, &at).unwrap();
                        assert_eq!(rec.lhs, (d.lhs)(&at), "{id} lhs at {at}");
                        assert_eq!(rec.rhs, (d.rhs)(&at).value, "{id} rhs at {at}");
                    }
                }
            }
        }
    }

    #[test]
    fn no_second_route_for_corollaries() {
        let at = IdentityParams::n_only(4);
        assert!(derivation("chen-chu", &at).is_none());
        assert!(shift("alt-k2Hk2", &at).is_none());
        assert!(shift("thm-b", &IdentityParams::n_only(0)).is_none());
    }
}
