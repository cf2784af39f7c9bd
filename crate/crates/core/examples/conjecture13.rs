//! Scans A(5n) < 0, B(5n) < 0, D(5n+1) > 0 and shows where they fail,
//! together with the small coefficients behind the counterexamples.

use qser::rr::{coefficient, NamedSeries};
use qser::verify::Verifier;

fn main() {
    let n_max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1000);
    let report = Verifier::new().check_conjecture13(n_max);
    for part in report.parts() {
        println!("{part}");
    }
    let f = report.falsified();
    println!(
        "fails for A(5n) at n in {:?}, B(5n) at {:?}, D(5n+1) at {:?}",
        f.a, f.b, f.d
    );
    println!(
        "matches the recorded outcome: {}",
        report.matches_expected()
    );

    let a = |n| coefficient(NamedSeries::A, n);
    let b = |n| coefficient(NamedSeries::B, n);
    let c = |n| coefficient(NamedSeries::LowerC, n);
    let cc = |n| coefficient(NamedSeries::C, n);
    println!("A(0) = {}, A(10) = {}, A(15) = {}", a(0), a(10), a(15));
    println!(
        "c(0)C(10) + c(1)C(5) + c(2)C(0) = {}",
        c(0) * cc(10) + c(1) * cc(5) + c(2) * cc(0)
    );
    println!("B(0) = {}, B(5) = {}", b(0), b(5));
    println!("D(1) = {}", coefficient(NamedSeries::D, 1));
}
