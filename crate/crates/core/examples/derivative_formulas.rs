//! Derivatives of binomial coefficients read off bivariate jets.
//!
//! Run: `cargo run --example derivative_formulas`

use vandermonde_harmonic::{binomial, harmonic, jet_binomial_affine, Rational};

fn main() {
    let h = |n: i64| harmonic(n, 1).unwrap();
    println!(
        "{:>3} {:>3} {:>14} {:>14}",
        "s", "t", "d/dx binom", "binom*(Hs-Hs-t)"
    );
    for s in 0..=6i64 {
        for t in 0..=s {
            let jet = jet_binomial_affine(s, 1, 0, t);
            let formula: Rational = binomial(s, t) * (h(s) - h(s - t));
            assert_eq!(jet.dx, formula);
            println!(
                "{s:>3} {t:>3} {:>14} {:>14}",
                jet.dx.to_string(),
                formula.to_string()
            );
        }
    }

    // upper index -1 - x: binom(-1 - x, t) = (-1)^t binom(x + t, t)
    let jet = jet_binomial_affine(-1, -1, 0, 3);
    println!("binom(-1-x, 3) at x=0: {jet:?}");
}
