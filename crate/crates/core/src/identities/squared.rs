//! Identities from the convolution `sum binom(p+n, k) binom(q+n, n-k)`,
//! including the `binom(n, k)^2` family at `p = q = 0`.

use super::{
    binom, frac, h, h2, int, ClosedForm, Domain, IdentityDescriptor, IdentityError, IdentityParams,
};
use crate::exact::Rational;

fn weight(n: i64, p: i64, q: i64, k: i64) -> Rational {
    binom(p + n, k) * binom(q + n, n - k)
}

pub fn harmonic_c_lhs(params: &IdentityParams) -> Rational {
    let (n, p, q) = params.signed();
    (0..=n).map(|k| weight(n, p, q, k) * h(q + k)).sum()
}

pub fn harmonic_c_rhs(params: &IdentityParams) -> Rational {
    let (n, p, q) = params.signed();
    binom(p + q + 2 * n, n) * (h(q + n) + h(p + q + n) - h(p + q + 2 * n))
}

pub fn thm_c_lhs(params: &IdentityParams) -> Rational {
    let (n, p, q) = params.signed();
    (0..=n)
        .map(|k| weight(n, p, q, k) * h(p + n - k) * h(q + k))
        .sum()
}

pub fn thm_c_rhs(params: &IdentityParams) -> Rational {
    let (n, p, q) = params.signed();
    let top = p + q + 2 * n;
    let shift = h(p + q + n) - h(top);
    binom(top, n) * ((h2(p + q + n) - h2(top)) + (h(p + n) + &shift) * (h(q + n) + &shift))
}

pub fn thm_d_lhs(params: &IdentityParams) -> Rational {
    let (n, p, q) = params.signed();
    (1..=n)
        .map(|k| weight(n, p, q, k) * int(k) * h(p + n - k) * h(q + k))
        .sum()
}

pub fn thm_d_rhs(params: &IdentityParams) -> Rational {
    let (n, p, q) = params.signed();
    let top = p + q + 2 * n - 1;
    let shift = h(p + q + n) - h(top);
    binom(top, n - 1)
        * ((h2(p + q + n) - h2(top)) + (h(p + n - 1) + &shift) * (h(q + n) + &shift))
        * int(p + n)
}

/// `sum_k binom(n, k)^2 k^m H_k H_{n-k}` by direct summation, `m` in `0..=3`.
pub fn squared_power_sum_lhs(m: u32, n: u32) -> Result<Rational, IdentityError> {
    if m > 3 {
        return Err(IdentityError::UnknownVariant {
            family: "squared-binomial product sums",
            m,
        });
    }
    let n = n as i64;
    Ok((0..=n)
        .map(|k| {
            let b = binom(n, k);
            &b * &b * int(k.pow(m)) * h(k) * h(n - k)
        })
        .sum())
}

/// Closed forms at `p = q = 0`: `m = 0` is the Chen-Chu sum, `m = 1` the
/// shifted theorem, `m = 2, 3` the further weighted sums. `m >= 1` needs
/// `n >= 1`.
pub fn squared_power_sum_rhs(m: u32, n: u32) -> Result<Rational, IdentityError> {
    if m > 3 {
        return Err(IdentityError::UnknownVariant {
            family: "squared-binomial product sums",
            m,
        });
    }
    let n = n as i64;
    let central = binom(2 * n, n);
    if m == 0 {
        let d = int(2) * h(n) - h(2 * n);
        return Ok(central * ((h2(n) - h2(2 * n)) + &d * &d));
    }
    let d = int(2) * h(n) - h(2 * n - 1);
    let gap = h2(n) - h2(2 * n - 1);
    Ok(match m {
        1 => frac(n, 2) * central * (gap + &d * (&d - frac(1, n))),
        2 => {
            frac(n * n * n, 4 * n - 2)
                * central
                * (gap + &d * (&d - frac(2 * n * n - 1, 2 * n * n * n - n * n))
                    - frac(
                        (n - 1) * (2 * n * n - 2 * n + 1),
                        n * n * n * (2 * n - 1) * (2 * n - 1),
                    ))
        }
        _ => {
            frac(n * n * n * (n + 1), 8 * n - 4)
                * central
                * (gap + &d * (&d - frac(2 * n * n + 4 * n - 4, 2 * n * n * n + n * n - n))
                    - frac(
                        3 * (n - 1) * (2 * n * n - 2 * n + 1),
                        n * n * (n + 1) * (2 * n - 1) * (2 * n - 1),
                    ))
        }
    })
}

const IN_RANGE: &str = "variant exponent in range";

pub(super) fn descriptors() -> Vec<IdentityDescriptor> {
    let squared = |id, anchor, domain, lhs, rhs| IdentityDescriptor {
        id,
        anchor,
        uses_pq: false,
        domain,
        lhs,
        rhs,
    };
    vec![
        IdentityDescriptor {
            id: "harmonic-c",
            anchor: "Eq. (6), D_y applied to Eq. (5)",
            uses_pq: true,
            domain: Domain::ALL,
            lhs: harmonic_c_lhs,
            rhs: |p| ClosedForm::plain(harmonic_c_rhs(p)),
        },
        IdentityDescriptor {
            id: "thm-c",
            anchor: "Theorem 3 (thm-c), D^2_xy applied to Eq. (5)",
            uses_pq: true,
            domain: Domain::ALL,
            lhs: thm_c_lhs,
            rhs: |p| ClosedForm::plain(thm_c_rhs(p)),
        },
        squared(
            "chen-chu",
            "§2.2, Theorem 3 at p=q=0, known result due to Chen and Chu",
            Domain::ALL,
            |p| squared_power_sum_lhs(0, p.n).expect(IN_RANGE),
            |p| ClosedForm::plain(squared_power_sum_rhs(0, p.n).expect(IN_RANGE)),
        ),
        IdentityDescriptor {
            id: "thm-d",
            anchor: "Theorem 4 (thm-d), Theorem 3 shifted q->q+1, k->k-1, n->n-1",
            uses_pq: true,
            domain: Domain::SHIFTED,
            lhs: thm_d_lhs,
            rhs: |p| ClosedForm::plain(thm_d_rhs(p)),
        },
        squared(
            "thm-d-pq0",
            "Theorem 4 at p=q=0, sum of binom(n,k)^2 k H_k H_{n-k}",
            Domain::SHIFTED,
            |p| squared_power_sum_lhs(1, p.n).expect(IN_RANGE),
            |p| ClosedForm::plain(squared_power_sum_rhs(1, p.n).expect(IN_RANGE)),
        ),
        squared(
            "binom2-k2HkHnk",
            "§2.2, sum of binom(n,k)^2 k^2 H_k H_{n-k}",
            Domain::SHIFTED,
            |p| squared_power_sum_lhs(2, p.n).expect(IN_RANGE),
            |p| ClosedForm::plain(squared_power_sum_rhs(2, p.n).expect(IN_RANGE)),
        ),
        squared(
            "binom2-k3HkHnk",
            "§2.2, sum of binom(n,k)^2 k^3 H_k H_{n-k}",
            Domain::SHIFTED,
            |p| squared_power_sum_lhs(3, p.n).expect(IN_RANGE),
            |p| ClosedForm::plain(squared_power_sum_rhs(3, p.n).expect(IN_RANGE)),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u32, p: u32, q: u32) -> IdentityParams {
        IdentityParams::new(n, p, q)
    }

    #[test]
    fn harmonic_c_examples() {
        for (pp, qq) in [(0, 0), (2, 5), (7, 1)] {
            let at = p(0, pp, qq);
            assert_eq!(harmonic_c_lhs(&at), h(qq as i64));
            assert_eq!(harmonic_c_rhs(&at), h(qq as i64));
        }
        // binom(1,0)binom(1,1)H_0 + binom(1,1)binom(1,0)H_1
        assert_eq!(harmonic_c_lhs(&p(1, 0, 0)), Rational::one());
        assert_eq!(harmonic_c_rhs(&p(1, 0, 0)), Rational::one());
    }

    #[test]
    fn thm_c_examples() {
        // 4·H_1^2
        assert_eq!(thm_c_lhs(&p(2, 0, 0)), int(4));
        assert_eq!(thm_c_rhs(&p(2, 0, 0)), int(4));
        // n = 0 collapses to H_p H_q
        let at = p(0, 3, 2);
        assert_eq!(thm_c_lhs(&at), h(3) * h(2));
        assert_eq!(thm_c_rhs(&at), h(3) * h(2));
        assert_eq!(squared_power_sum_rhs(0, 2).unwrap(), int(4));
    }

    #[test]
    fn thm_d_examples() {
        assert_eq!(thm_d_lhs(&p(1, 0, 0)), Rational::zero());
        assert_eq!(thm_d_rhs(&p(1, 0, 0)), Rational::zero());
        assert_eq!(squared_power_sum_rhs(1, 1).unwrap(), Rational::zero());
        assert!(squared_power_sum_rhs(4, 1).is_err());
    }
}
