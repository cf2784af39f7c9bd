//! The coefficient families c, d, A, B, C, D and the sum-form cross-check.
//!
//! `cargo run --example named_series -- 30`

use qser::rr::{build, NamedSeries, SeriesCache};

fn main() {
    let order: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(20);
    let cache = SeriesCache::new();
    let names = [
        NamedSeries::LowerC,
        NamedSeries::LowerD,
        NamedSeries::A,
        NamedSeries::B,
        NamedSeries::C,
        NamedSeries::D,
    ];
    print!("{:>4}", "n");
    for name in names {
        print!("{name:>14}");
    }
    println!();
    let built: Vec<_> = names.iter().map(|&n| cache.build(n, order)).collect();
    for n in 0..order {
        print!("{n:>4}");
        for s in &built {
            print!("{:>14}", s.coeffs()[n]);
        }
        println!();
    }

    let g_ok = build(NamedSeries::GSum, 200) == build(NamedSeries::G, 200);
    let h_ok = build(NamedSeries::HSum, 200) == build(NamedSeries::H, 200);
    println!("sum form = product form to order 200: G {g_ok}, H {h_ok}");
}
