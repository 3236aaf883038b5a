use num_bigint::BigInt;
use proptest::prelude::*;

use vandermonde_harmonic::exact::{binomial, harmonic, Rational};
use vandermonde_harmonic::identities::CaseTag;
use vandermonde_harmonic::jets::{jet_binomial_affine, Component, Jet2};
use vandermonde_harmonic::verify::{Status, VerificationRecord};

fn big() -> impl Strategy<Value = BigInt> {
    (any::<bool>(), any::<u128>()).prop_map(|(neg, m)| {
        let b = BigInt::from(m);
        if neg {
            -b
        } else {
            b
        }
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (big(), 1..=u128::MAX).prop_map(|(n, d)| Rational::new(n, BigInt::from(d)))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("non-zero", |r| !r.is_zero())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-1000i64..1000, 1i64..50).prop_map(|(n, d)| Rational::new(n, d))
}

fn jet() -> impl Strategy<Value = Jet2> {
    (
        small_rational(),
        small_rational(),
        small_rational(),
        small_rational(),
    )
        .prop_map(|(a, b, c, d)| Jet2::new(a, b, c, d))
}

fn case_tag() -> impl Strategy<Value = Option<CaseTag>> {
    prop_oneof![
        Just(None),
        Just(Some(CaseTag::A)),
        Just(Some(CaseTag::V)),
        Just(Some(CaseTag::Ustar)),
        Just(Some(CaseTag::Wstar)),
    ]
}

proptest! {
    #[test]
    fn add_then_sub_round_trips(a in rational(), b in rational()) {
        prop_assert_eq!((a.clone() + &b) - &b, a);
    }

    #[test]
    fn mul_then_div_round_trips(a in rational(), b in nonzero_rational()) {
        prop_assert_eq!((a.clone() * &b) / &b, a);
    }

    #[test]
    fn results_are_canonical(a in rational(), b in rational()) {
        use num_integer::Integer;
        let s = a * b;
        prop_assert!(s.denom() > &BigInt::from(0));
        prop_assert_eq!(s.numer().gcd(s.denom()), if s.is_zero() { s.denom().clone() } else { BigInt::from(1) });
    }

    #[test]
    fn display_parse_round_trips(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn jet_ring_axioms(a in jet(), b in jet(), c in jet()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a - &a, Jet2::zero());
        prop_assert_eq!(&a * &Jet2::one(), a.clone());
    }

    #[test]
    fn record_json_round_trips(
        id in "[a-z0-9-]{1,16}",
        n in 0u32..30, p in 0u32..10, q in 0u32..10,
        case in case_tag(),
        sides in prop::option::of((rational(), rational())),
    ) {
        let (status, lhs, rhs) = match sides {
            Some((l, r)) => (if l == r { Status::Pass } else { Status::Mismatch }, Some(l), Some(r)),
            None => (Status::Skip, None, None),
        };
        let record = VerificationRecord { id, n, p, q, case, status, lhs, rhs };
        let back: VerificationRecord = serde_json::from_str(&record.to_json()).unwrap();
        prop_assert_eq!(back, record);
    }
}

fn h(n: i64) -> Rational {
    harmonic(n, 1).unwrap()
}

#[test]
fn dx_formula_exhaustive() {
    for s in 0..=25i64 {
        for t in 0..=s {
            let j = jet_binomial_affine(s, 1, 0, t);
            assert_eq!(j.dx, binomial(s, t) * (h(s) - h(s - t)), "s={s} t={t}");
            assert_eq!(j.val, binomial(s, t));
            assert!(j.dy.is_zero() && j.dxy.is_zero());
        }
    }
}

#[test]
fn dxy_product_formula_exhaustive() {
    for s in 0..=12i64 {
        for t in 0..=s {
            let left = jet_binomial_affine(s, 1, 0, t);
            for u in 0..=12i64 {
                for v in 0..=u {
                    let right = jet_binomial_affine(u, 0, 1, v);
                    let expected =
                        binomial(s, t) * binomial(u, v) * (h(s) - h(s - t)) * (h(u) - h(u - v));
                    assert_eq!(*(&left * &right).extract(Component::Dxy), expected);
                }
            }
        }
    }
}

#[test]
fn jet_value_matches_signed_binomial() {
    for s in -20..=20i64 {
        for t in 0..=20i64 {
            for (cx, cy) in [(0, 0), (1, 0), (0, 1), (1, -1), (-1, 1)] {
                assert_eq!(
                    jet_binomial_affine(s, cx, cy, t).val,
                    binomial(s, t),
                    "s={s} t={t}"
                );
            }
        }
    }
}

#[test]
fn dx_of_negative_upper_index_matches_finite_difference_free_formula() {
    // d/dx prod_{i<t}(s + x - i) / t! = binom(s,t) * sum_{i<t} 1/(s - i) when no factor vanishes
    for s in -15..=-1i64 {
        for t in 0..=10i64 {
            let expected: Rational =
                (0..t).map(|i| Rational::new(1, s - i)).sum::<Rational>() * binomial(s, t);
            assert_eq!(jet_binomial_affine(s, 1, 0, t).dx, expected, "s={s} t={t}");
        }
    }
}
