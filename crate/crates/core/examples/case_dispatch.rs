//! Which closed form the alternating identities pick across `p - q`.
//!
//! Run: `cargo run --example case_dispatch`

use vandermonde_harmonic::{registry, IdentityParams};

fn main() {
    let n = 3;
    for id in ["harmonic-d", "harmonic-e", "thm-e", "thm-f"] {
        let descriptor = registry().get(id).unwrap();
        print!("{id:<11}");
        for (p, q) in [(0, 4), (1, 2), (2, 2), (3, 1), (5, 2), (6, 0)] {
            let eval = descriptor.evaluate(&IdentityParams::new(n, p, q)).unwrap();
            let case = eval.rhs.case.map(|c| c.to_string()).unwrap_or_default();
            print!("  p-q={:>2}:{case:<2}", p as i64 - q as i64);
            assert!(eval.holds());
        }
        println!();
    }
}
