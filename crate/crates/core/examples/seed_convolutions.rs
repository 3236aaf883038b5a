//! The three substituted convolutions, evaluated in jets at a few points.
//!
//! Run: `cargo run --example seed_convolutions`

use vandermonde_harmonic::identities::seeds::Seed;
use vandermonde_harmonic::IdentityParams;

fn main() {
    for seed in Seed::ALL {
        for (n, p, q) in [(0, 0, 0), (2, 1, 0), (4, 2, 3), (6, 5, 1)] {
            let params = IdentityParams::new(n, p, q);
            let sides = seed.jet_sides(&params);
            println!(
                "{seed} {params}: {:?} {}",
                sides.rhs,
                if sides.agree() { "agree" } else { "DIFFER" }
            );
        }
    }
}
