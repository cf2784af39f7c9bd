//! Small-order values checked against the brute-force expansions in
//! `common`, then frozen.

mod common;

use num_bigint::BigInt;
use qser::qproducts::{euler_f, expand_product, pochhammer_inf, ProductSpec};
use qser::rr::{build, build_sum_form, NamedSeries, SumForm};
use qser::verify::Verifier;
use qser::Series;

fn coeffs_i128(s: &Series) -> Vec<i128> {
    s.coeffs().iter().map(common::to_i128).collect()
}

#[test]
fn oracle_reproduces_frozen_values() {
    let a = common::a_coeffs(16);
    let b = common::b_coeffs(16);
    let d = common::d_upper_coeffs(16);
    assert_eq!(a[0], 1);
    assert_eq!(a[1], 5);
    assert_eq!(a[10], -175);
    assert_eq!(a[15], -826);
    assert_eq!(b[0], 1);
    assert_eq!(b[1], -5);
    assert_eq!(b[5], -26);
    assert_eq!(d[0], 1);
    assert_eq!(d[1], 5);
    assert_eq!(common::f51(2)[1], 6);
}

#[test]
fn engine_matches_oracle_to_order_30() {
    let order = 30;
    let pairs = [
        (NamedSeries::A, common::a_coeffs(order)),
        (NamedSeries::B, common::b_coeffs(order)),
        (NamedSeries::C, common::c_upper_coeffs(order)),
        (NamedSeries::D, common::d_upper_coeffs(order)),
        (NamedSeries::LowerD, common::r_power(1, order)),
        (NamedSeries::LowerC, common::r_power(-1, order)),
        (NamedSeries::Rq5, common::r_q5_power(1, order)),
        (NamedSeries::Fratio51, common::f51(order)),
        (NamedSeries::Fratio15, common::f15(order)),
    ];
    for (name, expected) in pairs {
        assert_eq!(coeffs_i128(&build(name, order)), expected, "{name}");
    }
}

#[test]
fn pentagonal_prefix_against_oracle() {
    let expected = common::product(&[(1, 1, 1)], 8);
    assert_eq!(expected, vec![1, -1, -1, 0, 0, 1, 0, 1]);
    assert_eq!(coeffs_i128(&pochhammer_inf(1, 1, 8)), expected);
    assert_eq!(coeffs_i128(&euler_f(1, 8)), expected);
}

#[test]
fn r_product_prefix() {
    let spec = ProductSpec::from_triples(&[(1, 5, 1), (4, 5, 1), (2, 5, -1), (3, 5, -1)]).unwrap();
    assert_eq!(coeffs_i128(&expand_product(&spec, 4)), vec![1, -1, 1, 0]);
    let f = ProductSpec::from_triples(&[(1, 1, 6), (5, 5, -6)]).unwrap();
    assert_eq!(expand_product(&f, 3).coeffs()[0], BigInt::from(1));
}

#[test]
fn h_sum_first_terms() {
    // sum over n of q^(n^2+n) / (q;q)_n, each finite product expanded by brute force
    let order = 8;
    let mut direct = vec![0i128; order];
    for n in 0..3usize {
        let start = n * n + n;
        let factors: Vec<(usize, usize, i32)> = (1..=n).map(|k| (k, order, -1)).collect();
        let term = common::product(&factors, order);
        for i in start..order {
            direct[i] += term[i - start];
        }
    }
    assert_eq!(direct, vec![1, 0, 1, 1, 1, 1, 2, 2]);
    assert_eq!(coeffs_i128(&build_sum_form(SumForm::H, order)), direct);
    assert_eq!(coeffs_i128(&build_sum_form(SumForm::H, 2)), vec![1, 0]);
    assert_eq!(coeffs_i128(&build_sum_form(SumForm::G, 1)), vec![1]);
}

#[test]
fn derived_low_order_identity_terms() {
    let a = common::a_coeffs(2);
    let f15 = common::f15(2);
    // 1/R^5 - q^2 R^5 = 11q + f_1^6/f_5^6 at q^0 and q^1
    assert_eq!(a[0], f15[0]);
    assert_eq!(a[1], 11 + f15[1]);
    assert_eq!(f15[1], -6);

    // R^5 identity at q^1: R(q^5) contributes nothing, numerator -2, 1/denominator -3
    assert_eq!(common::b_coeffs(2)[1], -2 - 3);

    let v = Verifier::new();
    assert!(v.verify_identity_b20(2).is_verified());
    assert!(v.verify_identity_r5(2).is_verified());
}

#[test]
fn dissection_d1_constant_term() {
    // D(1) = d(0) A(1)
    let d = common::d_upper_coeffs(2);
    assert_eq!(d[1], common::r_power(1, 1)[0] * common::a_coeffs(2)[1]);
    let s = build(NamedSeries::D, 10).dissect(5, 1);
    assert_eq!(s.coeffs()[0], BigInt::from(5));
}

#[test]
fn a10_from_products_of_c_and_upper_c() {
    // A(10) = c(0)C(10) + c(1)C(5) + c(2)C(0)
    let c = common::r_power(-1, 11);
    let cc = common::c_upper_coeffs(11);
    assert_eq!(c[0] * cc[10] + c[1] * cc[5] + c[2] * cc[0], -175);
    let one_minus = {
        let mut p = common::one(3);
        let f = common::f51(3);
        p[1] -= 25 * f[0];
        p[2] -= 25 * f[1];
        p
    };
    assert_eq!(common::mul(&common::r_power(-1, 3), &one_minus)[2], -175);
}
