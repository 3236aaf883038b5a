//! The alternating `k^3 H_k^2` closed form as catalogued, next to the
//! brute-force sum. The two differ by a sign for every `n > 3`.
//!
//! Run: `cargo run --example erratum_report`

use vandermonde_harmonic::{registry, IdentityParams};

fn main() {
    let descriptor = registry().get("alt-k3Hk2").unwrap();
    println!(
        "{:>3} {:>28} {:>28}  lhs/rhs",
        "n", "brute force", "closed form"
    );
    for n in 4..=12 {
        let eval = descriptor.evaluate(&IdentityParams::n_only(n)).unwrap();
        let ratio = &eval.lhs / &eval.rhs.value;
        println!(
            "{n:>3} {:>28} {:>28}  {ratio}",
            eval.lhs.to_string(),
            eval.rhs.value.to_string()
        );
    }
}
