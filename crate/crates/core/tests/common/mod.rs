//! Brute-force reference expansions on `i128`, sharing no code with the
//! engine. Every infinite product is expanded as an explicit product of
//! polynomials (1 - q^n); each reciprocal factor 1/(1 - q^n) is multiplied
//! in as its geometric series. Only meant for small orders.

#![allow(dead_code)]

pub type Poly = Vec<i128>;

pub fn one(order: usize) -> Poly {
    let mut p = vec![0; order];
    if order > 0 {
        p[0] = 1;
    }
    p
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let order = a.len().min(b.len());
    let mut out = vec![0i128; order];
    for i in 0..order {
        for j in 0..order - i {
            out[i + j] += a[i] * b[j];
        }
    }
    out
}

fn linear(n: usize, order: usize) -> Poly {
    let mut p = one(order);
    if n < order {
        p[n] = -1;
    }
    p
}

fn geometric(n: usize, order: usize) -> Poly {
    (0..order).map(|i| if i % n == 0 { 1 } else { 0 }).collect()
}

/// prod over (a, m, e): (q^a; q^m)_inf^e
pub fn product(factors: &[(usize, usize, i32)], order: usize) -> Poly {
    let mut acc = one(order);
    for &(a, m, e) in factors {
        let mut n = a;
        while n < order {
            for _ in 0..e.unsigned_abs() {
                let f = if e > 0 {
                    linear(n, order)
                } else {
                    geometric(n, order)
                };
                acc = mul(&acc, &f);
            }
            n += m;
        }
    }
    acc
}

/// R(q) = (q;q^5)(q^4;q^5) / ((q^2;q^5)(q^3;q^5)), raised to `k`.
pub fn r_power(k: i32, order: usize) -> Poly {
    product(&[(1, 5, k), (4, 5, k), (2, 5, -k), (3, 5, -k)], order)
}

/// R(q^5), raised to `k`.
pub fn r_q5_power(k: i32, order: usize) -> Poly {
    product(
        &[(5, 25, k), (20, 25, k), (10, 25, -k), (15, 25, -k)],
        order,
    )
}

/// A(n): coefficients of 1/R^5(q).
pub fn a_coeffs(order: usize) -> Poly {
    r_power(-5, order)
}

/// B(n): coefficients of R^5(q).
pub fn b_coeffs(order: usize) -> Poly {
    r_power(5, order)
}

/// C(n): coefficients of R^5(q)/R(q^5).
pub fn c_upper_coeffs(order: usize) -> Poly {
    mul(&r_power(5, order), &r_q5_power(-1, order))
}

/// D(n): coefficients of R(q^5)/R^5(q).
pub fn d_upper_coeffs(order: usize) -> Poly {
    mul(&r_q5_power(1, order), &r_power(-5, order))
}

/// f_5^6 / f_1^6
pub fn f51(order: usize) -> Poly {
    product(&[(5, 5, 6), (1, 1, -6)], order)
}

/// f_1^6 / f_5^6
pub fn f15(order: usize) -> Poly {
    product(&[(1, 1, 6), (5, 5, -6)], order)
}

pub fn to_i128(c: &num_bigint::BigInt) -> i128 {
    i128::try_from(c).expect("coefficient fits in i128")
}
