//! Alternating sums `sum (-1)^k binom(p+k, k) binom(q+n, n-k) ...`.
//!
//! The closed forms split on `p - q`: at least `n` (or `n - 1` for the
//! `k`-weighted product), between `0` and that threshold, or negative.

use super::{
    binom, fact, frac, h, h2, int, regime, sign, CaseTag, ClosedForm, Domain, IdentityDescriptor,
    IdentityError, IdentityParams, Regime,
};
use crate::exact::Rational;

fn weight(n: i64, p: i64, q: i64, k: i64) -> Rational {
    sign(k) * binom(p + k, k) * binom(q + n, n - k)
}

/// `(p-q)! (q-p+n-1)! / n!`, the middle-regime magnitude.
fn middle_ratio(d: i64, n: i64) -> Rational {
    fact(d) * fact(n - d - 1) / fact(n)
}

pub fn harmonic_d_lhs(params: &IdentityParams) -> Rational {
    let (n, p, q) = params.signed();
    (0..=n).map(|k| weight(n, p, q, k) * h(p + k)).sum()
}

pub fn harmonic_d_rhs(params: &IdentityParams) -> (CaseTag, Rational) {
    let (n, p, q) = params.signed();
    let d = p - q;
    match regime(p, q, n) {
        Regime::Upper => (CaseTag::A, sign(n) * binom(d, n) * (h(p) + h(d) - h(d - n))),
        Regime::Middle => (CaseTag::B, sign(1 + d) * middle_ratio(d, n)),
        Regime::Lower => (
            CaseTag::C,
            sign(n) * binom(d, n) * (h(p) + h(-d - 1) - h(n - d - 1)),
        ),
    }
}

pub fn harmonic_e_lhs(params: &IdentityParams) -> Rational {
    let (n, p, q) = params.signed();
    (0..=n).map(|k| weight(n, p, q, k) * h(q + k)).sum()
}

pub fn harmonic_e_rhs(params: &IdentityParams) -> (CaseTag, Rational) {
    let (n, p, q) = params.signed();
    let d = p - q;
    match regime(p, q, n) {
        Regime::Upper => (
            CaseTag::D,
            sign(n) * binom(d, n) * (h(q + n) + h(d) - h(d - n)),
        ),
        Regime::Middle => (CaseTag::E, sign(1 + d) * middle_ratio(d, n)),
        Regime::Lower => (
            CaseTag::F,
            sign(n) * binom(d, n) * (h(q + n) + h(-d - 1) - h(n - d - 1)),
        ),
    }
}

pub fn thm_e_lhs(params: &IdentityParams) -> Rational {
    let (n, p, q) = params.signed();
    (0..=n)
        .map(|k| weight(n, p, q, k) * h(p + k) * h(q + k))
        .sum()
}

pub fn thm_e_rhs(params: &IdentityParams) -> (CaseTag, Rational) {
    let (n, p, q) = params.signed();
    let d = p - q;
    match regime(p, q, n) {
        Regime::Upper => {
            let shift = h(d) - h(d - n);
            let value = sign(n)
                * binom(d, n)
                * ((h2(d - n) - h2(d)) + (h(p) + &shift) * (h(q + n) + &shift));
            (CaseTag::U, value)
        }
        Regime::Middle => {
            let bracket = h(p) + h(q + n) + int(2) * h(d) - int(2) * h(n - d) + frac(2, n - d);
            (CaseTag::V, sign(1 + d) * middle_ratio(d, n) * bracket)
        }
        Regime::Lower => {
            let shift = h(-d - 1) - h(n - d - 1);
            let value = sign(n)
                * binom(d, n)
                * ((h2(-d - 1) - h2(n - d - 1)) + (h(p) + &shift) * (h(q + n) + &shift));
            (CaseTag::W, value)
        }
    }
}

pub fn thm_f_lhs(params: &IdentityParams) -> Rational {
    let (n, p, q) = params.signed();
    (1..=n)
        .map(|k| weight(n, p, q, k) * int(k) * h(p + k) * h(q + k))
        .sum()
}

/// Requires `n >= 1`; the regimes split at `p - q = n - 1`, so for `n = 1`
/// every `p >= q` is in the upper regime.
pub fn thm_f_rhs(params: &IdentityParams) -> (CaseTag, Rational) {
    let (n, p, q) = params.signed();
    let d = p - q;
    let scale = int(p + 1);
    match regime(p, q, n - 1) {
        Regime::Upper => {
            let shift = h(d) - h(d - n + 1);
            let value = sign(n)
                * scale
                * binom(d, n - 1)
                * ((h2(d - n + 1) - h2(d)) + (h(p + 1) + &shift) * (h(q + n) + &shift));
            (CaseTag::Ustar, value)
        }
        Regime::Middle => {
            let ratio = fact(d) * fact(n - d - 2) / fact(n - 1);
            let bracket =
                h(p + 1) + h(q + n) + int(2) * h(d) - int(2) * h(n - d - 1) + frac(2, n - d - 1);
            // sign exponent p - q as stated, one less than in thm-e's middle case
            (CaseTag::Vstar, sign(d) * scale * ratio * bracket)
        }
        Regime::Lower => {
            let shift = h(-d - 1) - h(n - d - 2);
            let value = sign(n)
                * scale
                * binom(d, n - 1)
                * ((h2(-d - 1) - h2(n - d - 2)) + (h(p + 1) + &shift) * (h(q + n) + &shift));
            (CaseTag::Wstar, value)
        }
    }
}

/// `sum_k (-1)^k binom(n, k) k^m H_k^2` by direct summation, `m` in `0..=3`.
pub fn alternating_square_sum_lhs(m: u32, n: u32) -> Result<Rational, IdentityError> {
    if m > 3 {
        return Err(IdentityError::UnknownVariant {
            family: "alternating squared-harmonic sums",
            m,
        });
    }
    let n = n as i64;
    Ok((0..=n)
        .map(|k| {
            let hk = h(k);
            sign(k) * binom(n, k) * int(k.pow(m)) * &hk * &hk
        })
        .sum())
}

/// Closed forms at `p = q = 0`, valid for `n > m`.
pub fn alternating_square_sum_rhs(m: u32, n: u32) -> Result<Rational, IdentityError> {
    if m > 3 {
        return Err(IdentityError::UnknownVariant {
            family: "alternating squared-harmonic sums",
            m,
        });
    }
    let n = n as i64;
    let hn = h(n);
    Ok(match m {
        0 => frac(1, n) * (hn - frac(2, n)),
        1 => frac(1, 1 - n) * (hn - frac(n * n + 3 * n - 2, n * (n - 1))),
        2 => {
            frac(n, (n - 1) * (n - 2))
                * (hn - frac(2 * n * n * n + n * n - 11 * n + 6, n * (n - 1) * (n - 2)))
        }
        _ => {
            let falling = (n + 1) * n * (n - 1) * (n - 2) * (n - 3);
            let numer = (3 * n.pow(4) - 4 * n.pow(3) - 32 * n * n + 62 * n - 15) * n - 6;
            frac((n + 1) * n, (n - 1) * (n - 2) * (n - 3)) * (hn - frac(numer, falling))
        }
    })
}

const IN_RANGE: &str = "variant exponent in range";

pub(super) fn descriptors() -> Vec<IdentityDescriptor> {
    let n_only = |id, anchor, domain, lhs, rhs| IdentityDescriptor {
        id,
        anchor,
        uses_pq: false,
        domain,
        lhs,
        rhs,
    };
    vec![
        IdentityDescriptor {
            id: "harmonic-d",
            anchor: "Eq. (8), D_x applied to Eq. (7), cases A/B/C",
            uses_pq: true,
            domain: Domain::ALL,
            lhs: harmonic_d_lhs,
            rhs: |p| {
                let (case, value) = harmonic_d_rhs(p);
                ClosedForm::with_case(case, value)
            },
        },
        IdentityDescriptor {
            id: "harmonic-e",
            anchor: "Eq. (9), D_y applied to Eq. (7), cases D/E/F",
            uses_pq: true,
            domain: Domain::ALL,
            lhs: harmonic_e_lhs,
            rhs: |p| {
                let (case, value) = harmonic_e_rhs(p);
                ClosedForm::with_case(case, value)
            },
        },
        IdentityDescriptor {
            id: "thm-e",
            anchor: "Theorem 5 (thm-e), D^2_xy applied to Eq. (7), cases U/V/W",
            uses_pq: true,
            domain: Domain::ALL,
            lhs: thm_e_lhs,
            rhs: |p| {
                let (case, value) = thm_e_rhs(p);
                ClosedForm::with_case(case, value)
            },
        },
        n_only(
            "thm-e-pq0",
            "Theorem 5 at p=q=0, alternating sum of binom(n,k) H_k^2",
            Domain::n_greater_than(0, "n > 0"),
            |p| alternating_square_sum_lhs(0, p.n).expect(IN_RANGE),
            |p| ClosedForm::plain(alternating_square_sum_rhs(0, p.n).expect(IN_RANGE)),
        ),
        IdentityDescriptor {
            id: "thm-f",
            anchor: "Theorem 6 (thm-f), Theorem 5 shifted p->p+1, q->q+1, k->k-1, n->n-1, cases U*/V*/W*",
            uses_pq: true,
            domain: Domain::SHIFTED,
            lhs: thm_f_lhs,
            rhs: |p| {
                let (case, value) = thm_f_rhs(p);
                ClosedForm::with_case(case, value)
            },
        },
        n_only(
            "thm-f-pq0",
            "Theorem 6 at p=q=0, alternating sum of binom(n,k) k H_k^2",
            Domain::n_greater_than(1, "n > 1"),
            |p| alternating_square_sum_lhs(1, p.n).expect(IN_RANGE),
            |p| ClosedForm::plain(alternating_square_sum_rhs(1, p.n).expect(IN_RANGE)),
        ),
        n_only(
            "alt-k2Hk2",
            "§2.3, alternating sum of binom(n,k) k^2 H_k^2",
            Domain::n_greater_than(2, "n > 2"),
            |p| alternating_square_sum_lhs(2, p.n).expect(IN_RANGE),
            |p| ClosedForm::plain(alternating_square_sum_rhs(2, p.n).expect(IN_RANGE)),
        ),
        n_only(
            "alt-k3Hk2",
            "§2.3, alternating sum of binom(n,k) k^3 H_k^2",
            Domain::n_greater_than(3, "n > 3"),
            |p| alternating_square_sum_lhs(3, p.n).expect(IN_RANGE),
            |p| ClosedForm::plain(alternating_square_sum_rhs(3, p.n).expect(IN_RANGE)),
        ),
    ]
}
