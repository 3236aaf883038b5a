//! Sweep the whole catalogue and print a per-identity tally.
//!
//! Run: `cargo run --release --example verify_grid -- 12`

use std::collections::BTreeMap;

use vandermonde_harmonic::verify::{run_verification, Check, RunConfig, Status};

fn main() {
    let n_max = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(10);
    let config = RunConfig {
        n_max,
        p_max: 4,
        q_max: 4,
        checks: vec![Check::Equality, Check::Derivation, Check::Shift],
        ..RunConfig::default()
    };
    let report = run_verification(&config).expect("built-in ids");
    let mut tally: BTreeMap<&str, [usize; 3]> = BTreeMap::new();
    for r in &report.records {
        let slot = match r.status {
            Status::Pass => 0,
            Status::Skip => 1,
            Status::Mismatch => 2,
        };
        tally.entry(r.id.as_str()).or_default()[slot] += 1;
    }
    println!("{:<22} {:>6} {:>6} {:>9}", "id", "pass", "skip", "mismatch");
    for (id, [pass, skip, bad]) in tally {
        println!("{id:<22} {pass:>6} {skip:>6} {bad:>9}");
    }
    println!("{}", report.summary);
}
