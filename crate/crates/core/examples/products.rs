//! q-Pochhammer and Euler products, including the product form of R(q).

use qser::qproducts::{euler_f, euler_f_naive, expand_product, pochhammer_inf, ProductSpec};

fn main() -> qser::Result<()> {
    println!("(q;q)_inf = {}", pochhammer_inf(1, 1, 16));
    println!("f_5       = {}", euler_f(5, 31));
    assert_eq!(euler_f(1, 2000), euler_f_naive(1, 2000));
    println!("pentagonal fast path matches the product to order 2000");

    let r = ProductSpec::from_triples(&[(1, 5, 1), (4, 5, 1), (2, 5, -1), (3, 5, -1)])?;
    println!("R(q)      = {}", expand_product(&r, 25));

    let f15 = ProductSpec::new().with(1, 1, 6)?.with(5, 5, -6)?;
    println!("f1^6/f5^6 = {}", expand_product(&f15, 8));
    Ok(())
}
