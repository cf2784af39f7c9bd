//! Checks every identity exactly to a given order.
//!
//! `cargo run --release --example verify_identities -- 500`

use qser::verify::Verifier;

fn main() {
    let order: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(300);
    let verifier = Verifier::new();
    let reports = verifier.verify_all(order);
    for r in &reports {
        println!("{r}");
    }
    if reports.iter().any(|r| !r.is_verified()) {
        std::process::exit(1);
    }
}
