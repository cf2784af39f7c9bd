//! Named constructions: the Rogers-Ramanujan functions, R(q) and the
//! products and quotients built from it.
//!
//! With R(q) = H(q)/G(q) (the q^(1/5) prefactor already normalized away):
//!
//! | name       | series              | coefficients |
//! |------------|---------------------|--------------|
//! | `R`        | R(q)                | d(n)         |
//! | `Rinv`     | 1/R(q)              | c(n)         |
//! | `R5`       | R^5(q)              | B(n)         |
//! | `R5inv`    | 1/R^5(q)            | A(n)         |
//! | `Cratio`   | R^5(q)/R(q^5)       | C(n)         |
//! | `Dratio`   | R(q^5)/R^5(q)       | D(n)         |
//! | `Rq5`      | R(q^5)              |              |
//! | `Fratio15` | f_1^6/f_5^6         |              |
//! | `Fratio51` | f_5^6/f_1^6         |              |
//!
//! G and H are built from their product forms. The sum forms `G_sum` and
//! `H_sum` exist only to cross-check them.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

use crate::error::Error;
use crate::qproducts::{euler_f, expand_product, pochhammer_finite, ProductSpec};
use crate::series::Series;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedSeries {
    G,
    H,
    GSum,
    HSum,
    R,
    Rinv,
    R5,
    R5inv,
    Rq5,
    Cratio,
    Dratio,
    Fratio15,
    Fratio51,
    A,
    B,
    C,
    D,
    /// c(n), the coefficients of 1/R(q).
    LowerC,
    /// d(n), the coefficients of R(q).
    LowerD,
}

impl NamedSeries {
    pub const ALL: [NamedSeries; 19] = [
        NamedSeries::G,
        NamedSeries::H,
        NamedSeries::GSum,
        NamedSeries::HSum,
        NamedSeries::R,
        NamedSeries::Rinv,
        NamedSeries::R5,
        NamedSeries::R5inv,
        NamedSeries::Rq5,
        NamedSeries::Cratio,
        NamedSeries::Dratio,
        NamedSeries::Fratio15,
        NamedSeries::Fratio51,
        NamedSeries::A,
        NamedSeries::B,
        NamedSeries::C,
        NamedSeries::D,
        NamedSeries::LowerC,
        NamedSeries::LowerD,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NamedSeries::G => "G",
            NamedSeries::H => "H",
            NamedSeries::GSum => "G_sum",
            NamedSeries::HSum => "H_sum",
            NamedSeries::R => "R",
            NamedSeries::Rinv => "Rinv",
            NamedSeries::R5 => "R5",
            NamedSeries::R5inv => "R5inv",
            NamedSeries::Rq5 => "Rq5",
            NamedSeries::Cratio => "Cratio",
            NamedSeries::Dratio => "Dratio",
            NamedSeries::Fratio15 => "Fratio15",
            NamedSeries::Fratio51 => "Fratio51",
            NamedSeries::A => "A",
            NamedSeries::B => "B",
            NamedSeries::C => "C",
            NamedSeries::D => "D",
            NamedSeries::LowerC => "c",
            NamedSeries::LowerD => "d",
        }
    }

    /// Coefficient-sequence names resolve to the series they read from.
    pub fn canonical(self) -> NamedSeries {
        match self {
            NamedSeries::A => NamedSeries::R5inv,
            NamedSeries::B => NamedSeries::R5,
            NamedSeries::C => NamedSeries::Cratio,
            NamedSeries::D => NamedSeries::Dratio,
            NamedSeries::LowerC => NamedSeries::Rinv,
            NamedSeries::LowerD => NamedSeries::R,
            other => other,
        }
    }
}

impl fmt::Display for NamedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for NamedSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        NamedSeries::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownSeries(s.to_string()))
    }
}

/// 1/G(q) = (q; q^5)_inf (q^4; q^5)_inf.
pub fn g_reciprocal_product() -> ProductSpec {
    ProductSpec::from_triples(&[(1, 5, 1), (4, 5, 1)]).expect("valid factors")
}

/// 1/H(q) = (q^2; q^5)_inf (q^3; q^5)_inf.
pub fn h_reciprocal_product() -> ProductSpec {
    ProductSpec::from_triples(&[(2, 5, 1), (3, 5, 1)]).expect("valid factors")
}

/// R(q) = (q; q^5)(q^4; q^5) / ((q^2; q^5)(q^3; q^5)).
pub fn r_product() -> ProductSpec {
    g_reciprocal_product().times(&h_reciprocal_product().powered(-1))
}

/// Which Rogers-Ramanujan sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumForm {
    /// `sum q^(n^2) / (q;q)_n`
    G,
    /// `sum q^(n^2 + n) / (q;q)_n`
    H,
}

/// Partial sum of the Rogers-Ramanujan series, with each 1/(q;q)_n obtained
/// by inverting the expanded finite product.
pub fn build_sum_form(which: SumForm, prec: usize) -> Series {
    let mut total = Series::zero(prec);
    for n in 0.. {
        let exponent = match which {
            SumForm::G => n * n,
            SumForm::H => n * n + n,
        };
        if exponent >= prec {
            break;
        }
        let rest = prec - exponent;
        let term = pochhammer_finite(n, rest)
            .inverse()
            .expect("(q;q)_n has constant term 1")
            .shift(exponent as i64)
            .expect("positive shift");
        total = total.add(&term);
    }
    total
}

fn unit_div(num: &Series, den: &Series) -> Series {
    num.div(den).expect("denominator has constant term 1")
}

/// Construction recipe for `name`; dependencies come from `get`.
fn recipe(name: NamedSeries, prec: usize, get: &dyn Fn(NamedSeries, usize) -> Series) -> Series {
    use NamedSeries::*;
    match name.canonical() {
        G => expand_product(&g_reciprocal_product().powered(-1), prec),
        H => expand_product(&h_reciprocal_product().powered(-1), prec),
        GSum => build_sum_form(SumForm::G, prec),
        HSum => build_sum_form(SumForm::H, prec),
        R => unit_div(&get(H, prec), &get(G, prec)),
        Rinv => get(R, prec).inverse().expect("R(0) = 1"),
        R5 => get(R, prec).pow(5),
        R5inv => get(R5, prec).inverse().expect("R(0) = 1"),
        Rq5 => get(R, prec.div_ceil(5)).substitute_qm(5).truncate(prec),
        Cratio => unit_div(&get(R5, prec), &get(Rq5, prec)),
        Dratio => unit_div(&get(Rq5, prec), &get(R5, prec)),
        Fratio15 => unit_div(&euler_f(1, prec).pow(6), &euler_f(5, prec).pow(6)),
        Fratio51 => unit_div(&euler_f(5, prec).pow(6), &euler_f(1, prec).pow(6)),
        A | B | C | D | LowerC | LowerD => unreachable!("aliases are canonicalized"),
    }
}

/// Builds `name` to precision `prec` from scratch.
pub fn build(name: NamedSeries, prec: usize) -> Series {
    recipe(name, prec, &build)
}

/// Exact coefficient of q^n in `name`, served from a process-wide cache.
pub fn coefficient(name: NamedSeries, n: usize) -> BigInt {
    static GLOBAL: OnceLock<SeriesCache> = OnceLock::new();
    GLOBAL.get_or_init(SeriesCache::new).coefficient(name, n)
}

/// Memoizes built series per name, keeping the longest prefix seen.
///
/// Concurrent builders of the same series may both compute it; the results
/// are identical, so whichever lands last is kept only if it is longer.
#[derive(Debug, Default)]
pub struct SeriesCache {
    store: RwLock<HashMap<NamedSeries, Series>>,
}

impl SeriesCache {
    pub fn new() -> Self {
        SeriesCache::default()
    }

    pub fn build(&self, name: NamedSeries, prec: usize) -> Series {
        let name = name.canonical();
        {
            let store = self.store.read().unwrap_or_else(|e| e.into_inner());
            if let Some(s) = store.get(&name) {
                if s.prec() >= prec {
                    return s.truncate(prec);
                }
            }
        }
        let built = recipe(name, prec, &|n, p| self.build(n, p));
        let mut store = self.store.write().unwrap_or_else(|e| e.into_inner());
        let keep = store.get(&name).is_none_or(|s| s.prec() < built.prec());
        if keep {
            store.insert(name, built.clone());
        }
        built
    }

    pub fn coefficient(&self, name: NamedSeries, n: usize) -> BigInt {
        self.build(name, n + 1).coeffs()[n].clone()
    }

    /// Longest cached precision for `name`, if any.
    pub fn cached_prec(&self, name: NamedSeries) -> Option<usize> {
        let store = self.store.read().unwrap_or_else(|e| e.into_inner());
        store.get(&name.canonical()).map(Series::prec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Series) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn names_round_trip() {
        for name in NamedSeries::ALL {
            assert_eq!(name.as_str().parse::<NamedSeries>().unwrap(), name);
        }
        assert!("Q".parse::<NamedSeries>().is_err());
        assert_ne!("c".parse::<NamedSeries>().unwrap(), NamedSeries::C);
    }

    #[test]
    fn leading_coefficients() {
        assert_eq!(
            ints(&build(NamedSeries::LowerD, 10)),
            [1, -1, 1, 0, -1, 1, -1, 1, 0, -1]
        );
        assert_eq!(
            ints(&build(NamedSeries::LowerC, 10)),
            [1, 1, 0, -1, 0, 1, 1, -1, -2, 0]
        );
        assert_eq!(ints(&build(NamedSeries::C, 1)), [1]);
        assert_eq!(ints(&build(NamedSeries::D, 1)), [1]);
        assert_eq!(build(NamedSeries::B, 6).coeffs()[5], BigInt::from(-26));
    }

    #[test]
    fn r_equals_its_product_form() {
        assert_eq!(
            build(NamedSeries::R, 400),
            expand_product(&r_product(), 400)
        );
    }

    #[test]
    fn sum_forms_small() {
        assert_eq!(build_sum_form(SumForm::G, 1), Series::one(1));
        assert_eq!(build_sum_form(SumForm::H, 2), Series::one(2));
        assert_eq!(ints(&build_sum_form(SumForm::H, 5)), [1, 0, 1, 1, 1]);
        assert_eq!(build_sum_form(SumForm::G, 0), Series::zero(0));
    }

    #[test]
    fn sum_and_product_forms_agree() {
        assert_eq!(build(NamedSeries::GSum, 200), build(NamedSeries::G, 200));
        assert_eq!(build(NamedSeries::HSum, 200), build(NamedSeries::H, 200));
    }

    #[test]
    fn reciprocal_pairs() {
        let p = 300;
        let one = Series::one(p);
        let get = |n| build(n, p);
        assert_eq!(get(NamedSeries::R).mul(&get(NamedSeries::Rinv)), one);
        assert_eq!(get(NamedSeries::R5).mul(&get(NamedSeries::R5inv)), one);
        assert_eq!(get(NamedSeries::Cratio).mul(&get(NamedSeries::Dratio)), one);
        let f = get(NamedSeries::Fratio15).mul(&get(NamedSeries::Fratio51));
        assert_eq!(f, one);
    }

    #[test]
    fn rq5_support() {
        let rq5 = build(NamedSeries::Rq5, 103);
        assert_eq!(rq5.prec(), 103);
        for (n, c) in rq5.coeffs().iter().enumerate() {
            if n % 5 != 0 {
                assert_eq!(*c, BigInt::from(0));
            }
        }
        assert_eq!(rq5.dissect(5, 0), build(NamedSeries::R, 21));
    }

    #[test]
    fn rebuilding_preserves_prefix() {
        for name in [
            NamedSeries::A,
            NamedSeries::D,
            NamedSeries::Fratio51,
            NamedSeries::Rq5,
        ] {
            let short = build(name, 57);
            let long = build(name, 211);
            assert_eq!(long.truncate(57), short, "{name}");
        }
    }

    #[test]
    fn cache_matches_fresh_build_and_grows() {
        let cache = SeriesCache::new();
        assert_eq!(cache.build(NamedSeries::C, 50), build(NamedSeries::C, 50));
        assert_eq!(cache.cached_prec(NamedSeries::Cratio), Some(50));
        assert_eq!(cache.build(NamedSeries::C, 20), build(NamedSeries::C, 20));
        assert_eq!(cache.cached_prec(NamedSeries::C), Some(50));
        assert_eq!(cache.coefficient(NamedSeries::LowerC, 9), BigInt::from(0));
        assert_eq!(cache.build(NamedSeries::C, 120), build(NamedSeries::C, 120));
        assert_eq!(cache.cached_prec(NamedSeries::C), Some(120));
    }

    #[test]
    fn cache_is_shareable_across_threads() {
        let cache = SeriesCache::new();
        let expected = build(NamedSeries::A, 400);
        std::thread::scope(|s| {
            for i in 0..4 {
                let cache = &cache;
                let expected = &expected;
                s.spawn(move || {
                    let p = 100 * (i + 1);
                    assert_eq!(cache.build(NamedSeries::A, p), expected.truncate(p));
                });
            }
        });
    }

    #[test]
    fn global_coefficients() {
        assert_eq!(coefficient(NamedSeries::LowerC, 9), BigInt::from(0));
        assert_eq!(coefficient(NamedSeries::LowerD, 23), BigInt::from(0));
        assert_eq!(coefficient(NamedSeries::A, 0), BigInt::from(1));
    }
}
