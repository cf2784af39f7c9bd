//! Main term of the asymptotic for c(n) against the exact coefficients.

use num_traits::ToPrimitive;
use qser::rr::{build, NamedSeries};
use qser::verify::{asymptotic_c, cos_factor, Verifier};

fn main() {
    let c = build(NamedSeries::LowerC, 2001);
    println!("{:>5} {:>14} {:>14} {:>8}", "n", "c(n)", "main term", "cos");
    for n in [100usize, 101, 102, 103, 104, 500, 1000, 1500, 2000] {
        let exact = c.coeffs()[n].to_f64().unwrap();
        println!(
            "{n:>5} {exact:>14.6e} {:>14.6e} {:>8.3}",
            asymptotic_c(n as u64),
            cos_factor(n as u64)
        );
    }
    let check = Verifier::new().asymptotic_check(100, 2000);
    println!(
        "signs agree for {}/{} indices; mean relative error per window of 100:",
        check.agreements, check.compared
    );
    let means: Vec<String> = check
        .window_means
        .iter()
        .map(|m| format!("{m:.4}"))
        .collect();
    println!("{}", means.join(" "));
}
