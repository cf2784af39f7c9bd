//! Sign-pattern scans for c, d and the four theorem families, plus a custom
//! pattern built by hand.

use qser::rr::NamedSeries;
use qser::verify::{ExceptionValue, Expectation, ScanOutcome, ScanTarget, SignPattern, Verifier};

fn main() {
    let verifier = Verifier::new();
    let plain = [
        (ScanTarget::RichmondC, 5000),
        (ScanTarget::RichmondD, 5000),
        (ScanTarget::Thm2, 2500),
        (ScanTarget::Thm3, 2500),
        (ScanTarget::Thm4, 2500),
        (ScanTarget::Thm5, 2500),
    ];
    for (target, n_max) in plain {
        if let ScanOutcome::Signs(report) = verifier.scan(target, n_max) {
            println!("{report}");
        }
    }

    // d without its two late zeros listed: the scan pinpoints them
    use Expectation::*;
    let pattern = SignPattern::new(&[Pos, Neg, Pos, Neg, Neg])
        .except(3, ExceptionValue::Zero)
        .except(8, ExceptionValue::Zero);
    let report = verifier.scan_signs(NamedSeries::LowerD, &pattern, 1000);
    println!("{report}");
    for v in &report.violations {
        println!(
            "  d({}) = {}, expected {}",
            v.index,
            v.value,
            v.expected.sign_label()
        );
    }
}
