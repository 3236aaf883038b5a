//! Identities from the convolution `sum binom(p+k, k) binom(q+n-k, n-k)`.

use super::{
    binom, frac, h, h2, int, ClosedForm, Domain, IdentityDescriptor, IdentityError, IdentityParams,
};
use crate::exact::Rational;

fn weight(n: i64, p: i64, q: i64, k: i64) -> Rational {
    binom(p + k, p) * binom(q + n - k, q)
}

pub fn harmonic_a_lhs(params: &IdentityParams) -> Rational {
    let (n, p, q) = params.signed();
    (0..=n).map(|k| weight(n, p, q, k) * h(p + k)).sum()
}

pub fn harmonic_a_rhs(params: &IdentityParams) -> Rational {
    let (n, p, q) = params.signed();
    binom(p + q + n + 1, n) * (h(p) + h(p + q + n + 1) - h(p + q + 1))
}

pub fn harmonic_b_lhs(params: &IdentityParams) -> Rational {
    let (n, p, q) = params.signed();
    (1..=n)
        .map(|k| binom(p + k, k) * binom(q + n - k, q) * int(k) * h(p + k))
        .sum()
}

pub fn harmonic_b_rhs(params: &IdentityParams) -> Rational {
    let (n, p, q) = params.signed();
    int(p + 1) * binom(p + q + n + 1, n - 1) * (h(p + 1) + h(p + q + n + 1) - h(p + q + 2))
}

fn check_m(
    family: &'static str,
    m: u32,
    range: std::ops::RangeInclusive<u32>,
) -> Result<(), IdentityError> {
    if range.contains(&m) {
        Ok(())
    } else {
        Err(IdentityError::UnknownVariant { family, m })
    }
}

/// `sum_{k} k^m H_k` by direct summation, `m` in `0..=3`.
pub fn known_power_sum_lhs(m: u32, n: u32) -> Result<Rational, IdentityError> {
    check_m("known power sums", m, 0..=3)?;
    let n = n as i64;
    Ok((0..=n).map(|k| int(k.pow(m)) * h(k)).sum())
}

pub fn known_power_sum_rhs(m: u32, n: u32) -> Result<Rational, IdentityError> {
    check_m("known power sums", m, 0..=3)?;
    let n = n as i64;
    let hn = h(n);
    Ok(match m {
        0 => int(n + 1) * (h(n + 1) - int(1)),
        1 => frac(n * (n + 1), 2) * hn - frac((n - 1) * n, 4),
        2 => frac(n * (n + 1) * (2 * n + 1), 6) * hn - frac((n - 1) * n * (4 * n + 1), 36),
        _ => {
            frac(n * n * (n + 1) * (n + 1), 4) * hn - frac((n - 1) * n * (n + 1) * (3 * n - 2), 48)
        }
    })
}

pub fn thm_a_lhs(params: &IdentityParams) -> Rational {
    let (n, p, q) = params.signed();
    (0..=n)
        .map(|k| weight(n, p, q, k) * h(p + k) * h(q + n - k))
        .sum()
}

pub fn thm_a_rhs(params: &IdentityParams) -> Rational {
    let (n, p, q) = params.signed();
    let top = p + q + n + 1;
    let shift = h(top) - h(p + q + 1);
    binom(top, n) * ((h2(p + q + 1) - h2(top)) + (h(p) + &shift) * (h(q) + &shift))
}

pub fn thm_b_lhs(params: &IdentityParams) -> Rational {
    let (n, p, q) = params.signed();
    (1..=n)
        .map(|k| weight(n, p, q, k) * int(k) * h(p + k) * h(q + n - k))
        .sum()
}

pub fn thm_b_rhs(params: &IdentityParams) -> Rational {
    let (n, p, q) = params.signed();
    let top = p + q + n + 1;
    let shift = h(top) - h(p + q + 2);
    binom(top, n - 1)
        * ((h2(p + q + 2) - h2(top)) + (h(p + 1) + &shift) * (h(q) + &shift))
        * int(p + 1)
}

/// `sum_{k} k^m H_k H_{n-k}`, `m` in `0..=3`, by direct summation.
pub fn product_power_sum_lhs(m: u32, n: u32) -> Result<Rational, IdentityError> {
    check_m("convolution product sums", m, 0..=3)?;
    let n = n as i64;
    Ok((0..=n).map(|k| int(k.pow(m)) * h(k) * h(n - k)).sum())
}

/// Closed forms of the `p = q = 0` specialisations: `m = 0` from the first
/// product theorem, `m = 1` from its shifted form, `m = 2, 3` the further
/// power-weighted sums. `m >= 1` needs `n >= 1`.
pub fn product_power_sum_rhs(m: u32, n: u32) -> Result<Rational, IdentityError> {
    check_m("convolution product sums", m, 0..=3)?;
    let n = n as i64;
    let h1 = h(n + 1);
    let base = &h1 * &h1 - h2(n + 1);
    Ok(match m {
        0 => int(n + 1) * ((int(1) - h2(n + 1)) + (&h1 - int(1)) * (&h1 - int(1))),
        1 => frac(n * (n + 1), 2) * (base - int(2) * &h1 + int(2)),
        2 => {
            let d = 2 * n + 1;
            frac(n * (n + 1) * d, 6)
                * (base - frac(13 * n + 5, 3 * d) * &h1 + frac(71 * n + 37, 18 * d))
        }
        _ => {
            frac(n * n * (n + 1) * (n + 1), 4)
                * (base - frac(7 * n + 5, 3 * (n + 1)) * &h1 + frac(35 * n + 37, 18 * (n + 1)))
        }
    })
}

const IN_RANGE: &str = "variant exponent in range";

fn power_sum_descriptor(
    id: &'static str,
    anchor: &'static str,
    domain: Domain,
    lhs: fn(&IdentityParams) -> Rational,
    rhs: fn(&IdentityParams) -> ClosedForm,
) -> IdentityDescriptor {
    IdentityDescriptor {
        id,
        anchor,
        uses_pq: false,
        domain,
        lhs,
        rhs,
    }
}

pub(super) fn descriptors() -> Vec<IdentityDescriptor> {
    vec![
        IdentityDescriptor {
            id: "harmonic-a",
            anchor: "Eq. (3), D_x applied to Eq. (2)",
            uses_pq: true,
            domain: Domain::ALL,
            lhs: harmonic_a_lhs,
            rhs: |p| ClosedForm::plain(harmonic_a_rhs(p)),
        },
        IdentityDescriptor {
            id: "harmonic-b",
            anchor: "Eq. (4), Eq. (3) shifted p->p+1, k->k-1, n->n-1",
            uses_pq: true,
            domain: Domain::SHIFTED,
            lhs: harmonic_b_lhs,
            rhs: |p| ClosedForm::plain(harmonic_b_rhs(p)),
        },
        power_sum_descriptor(
            "sum-Hk",
            "§2.1, known sum of H_k (Eq. (3) at p=q=0)",
            Domain::ALL,
            |p| known_power_sum_lhs(0, p.n).expect(IN_RANGE),
            |p| ClosedForm::plain(known_power_sum_rhs(0, p.n).expect(IN_RANGE)),
        ),
        power_sum_descriptor(
            "sum-kHk",
            "§2.1, known sum of k H_k (Eq. (4) at p=q=0)",
            Domain::SHIFTED,
            |p| known_power_sum_lhs(1, p.n).expect(IN_RANGE),
            |p| ClosedForm::plain(known_power_sum_rhs(1, p.n).expect(IN_RANGE)),
        ),
        power_sum_descriptor(
            "sum-k2Hk",
            "§2.1, known sum of k^2 H_k",
            Domain::SHIFTED,
            |p| known_power_sum_lhs(2, p.n).expect(IN_RANGE),
            |p| ClosedForm::plain(known_power_sum_rhs(2, p.n).expect(IN_RANGE)),
        ),
        power_sum_descriptor(
            "sum-k3Hk",
            "§2.1, known sum of k^3 H_k",
            Domain::SHIFTED,
            |p| known_power_sum_lhs(3, p.n).expect(IN_RANGE),
            |p| ClosedForm::plain(known_power_sum_rhs(3, p.n).expect(IN_RANGE)),
        ),
        IdentityDescriptor {
            id: "thm-a",
            anchor: "Theorem 1 (thm-a), D^2_xy applied to Eq. (2)",
            uses_pq: true,
            domain: Domain::ALL,
            lhs: thm_a_lhs,
            rhs: |p| ClosedForm::plain(thm_a_rhs(p)),
        },
        power_sum_descriptor(
            "thm-a-pq0",
            "Theorem 1 at p=q=0, sum of H_k H_{n-k}",
            Domain::ALL,
            |p| product_power_sum_lhs(0, p.n).expect(IN_RANGE),
            |p| ClosedForm::plain(product_power_sum_rhs(0, p.n).expect(IN_RANGE)),
        ),
        IdentityDescriptor {
            id: "thm-b",
            anchor: "Theorem 2 (thm-b), Theorem 1 shifted p->p+1, k->k-1, n->n-1",
            uses_pq: true,
            domain: Domain::SHIFTED,
            lhs: thm_b_lhs,
            rhs: |p| ClosedForm::plain(thm_b_rhs(p)),
        },
        power_sum_descriptor(
            "thm-b-pq0",
            "Theorem 2 at p=q=0, sum of k H_k H_{n-k}",
            Domain::SHIFTED,
            |p| product_power_sum_lhs(1, p.n).expect(IN_RANGE),
            |p| ClosedForm::plain(product_power_sum_rhs(1, p.n).expect(IN_RANGE)),
        ),
        power_sum_descriptor(
            "sum-k2HkHnk",
            "§2.1, sum of k^2 H_k H_{n-k}",
            Domain::SHIFTED,
            |p| product_power_sum_lhs(2, p.n).expect(IN_RANGE),
            |p| ClosedForm::plain(product_power_sum_rhs(2, p.n).expect(IN_RANGE)),
        ),
        power_sum_descriptor(
            "sum-k3HkHnk",
            "§2.1, sum of k^3 H_k H_{n-k}",
            Domain::SHIFTED,
            |p| product_power_sum_lhs(3, p.n).expect(IN_RANGE),
            |p| ClosedForm::plain(product_power_sum_rhs(3, p.n).expect(IN_RANGE)),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u32, p: u32, q: u32) -> IdentityParams {
        IdentityParams::new(n, p, q)
    }

    fn both(lhs: Rational, rhs: Rational) -> Rational {
        assert_eq!(lhs, rhs);
        lhs
    }

    #[test]
    fn harmonic_a_examples() {
        let at = |n, pp, qq| both(harmonic_a_lhs(&p(n, pp, qq)), harmonic_a_rhs(&p(n, pp, qq)));
        assert_eq!(at(0, 0, 0), Rational::zero());
        // 1·H_1 + 2·H_2 + 3·H_3
        assert_eq!(at(2, 1, 0), frac(19, 2));
        // H_0 + H_1 + H_2 + H_3
        assert_eq!(at(3, 0, 0), frac(13, 3));
        assert_eq!(at(3, 0, 0), known_power_sum_rhs(0, 3).unwrap());
    }

    #[test]
    fn harmonic_b_examples() {
        let at = |n, pp, qq| both(harmonic_b_lhs(&p(n, pp, qq)), harmonic_b_rhs(&p(n, pp, qq)));
        assert_eq!(at(1, 0, 0), Rational::one());
        assert_eq!(at(3, 0, 0), frac(19, 2));
        assert_eq!(at(3, 0, 0), known_power_sum_rhs(1, 3).unwrap());
        // 2·2·1·(3/2) + 3·1·2·(11/6)
        assert_eq!(at(2, 1, 1), int(17));
    }

    #[test]
    fn known_power_sum_examples() {
        let at = |m, n| {
            both(
                known_power_sum_lhs(m, n).unwrap(),
                known_power_sum_rhs(m, n).unwrap(),
            )
        };
        assert_eq!(at(0, 1), Rational::one());
        // 1·1 + 4·(3/2) + 9·(11/6)
        assert_eq!(at(2, 3), frac(47, 2));
        // 1·1 + 8·(3/2)
        assert_eq!(at(3, 2), int(13));
        assert!(known_power_sum_lhs(4, 2).is_err());
    }

    #[test]
    fn thm_a_examples() {
        let at = |n, pp, qq| both(thm_a_lhs(&p(n, pp, qq)), thm_a_rhs(&p(n, pp, qq)));
        assert_eq!(at(0, 0, 0), Rational::zero());
        // H_0 H_2 + H_1 H_1 + H_2 H_0
        assert_eq!(at(2, 0, 0), Rational::one());
        // binom(1,1)·H_1·H_1 + binom(2,1)·H_2·H_0
        assert_eq!(at(1, 1, 0), Rational::one());
        assert_eq!(product_power_sum_rhs(0, 2).unwrap(), Rational::one());
    }

    #[test]
    fn thm_b_examples() {
        assert_eq!(thm_b_lhs(&p(1, 0, 0)), Rational::zero());
        assert_eq!(thm_b_rhs(&p(1, 0, 0)), Rational::zero());
        // 1·H_1 H_2 + 2·H_2 H_1 + 3·H_3 H_0
        let m1 = both(
            product_power_sum_lhs(1, 3).unwrap(),
            product_power_sum_rhs(1, 3).unwrap(),
        );
        assert_eq!(m1, frac(9, 2));
        // 1·H_1 H_1 + 4·H_2 H_0
        let m2 = both(
            product_power_sum_lhs(2, 2).unwrap(),
            product_power_sum_rhs(2, 2).unwrap(),
        );
        assert_eq!(m2, Rational::one());
    }
}
