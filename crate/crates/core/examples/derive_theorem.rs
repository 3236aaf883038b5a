//! Rebuild a harmonic identity from the mixed partial of a seed, then
//! compare with the catalogue closed form.
//!
//! Run: `cargo run --example derive_theorem -- thm-c 5 2 1`

use std::env;

use vandermonde_harmonic::identities::closure::{derivation, seed_of};
use vandermonde_harmonic::{registry, IdentityParams};

fn main() {
    let args: Vec<String> = env::args().skip(1).collect();
    let id = args.first().map(String::as_str).unwrap_or("thm-a");
    let num = |i: usize, default: u32| args.get(i).and_then(|s| s.parse().ok()).unwrap_or(default);
    let params = IdentityParams::new(num(1, 4), num(2, 2), num(3, 1));

    let Some(seed) = seed_of(id) else {
        eprintln!("{id} is not derived directly from a seed");
        std::process::exit(2);
    };
    let rebuilt = derivation(id, &params).expect("derived id");
    let eval = registry().get(id).unwrap().evaluate(&params).unwrap();
    println!("{id} from {seed} at {params}");
    println!("  jet route:   lhs={} rhs={}", rebuilt.lhs, rebuilt.rhs);
    println!("  catalogue:   lhs={} rhs={}", eval.lhs, eval.rhs.value);
    println!("  holds: {}", rebuilt.lhs == rebuilt.rhs && eval.holds());
}
