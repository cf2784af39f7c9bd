//! The truncated series ring: precision rules, inversion, division,
//! substitution and dissection.

use qser::Series;

fn main() -> qser::Result<()> {
    let a = Series::from_i64s(&[1, 2, 3]);
    let b = Series::from_i64s(&[5]);
    println!("({a}) + ({b}) = {}", a.add(&b));

    let one_minus_q = Series::from_i64s(&[1, -1, 0, 0, 0, 0, 0, 0]);
    let geometric = one_minus_q.inverse()?;
    println!("1/(1 - q) = {geometric}");
    println!("(1 - q) * that = {}", one_minus_q.mul(&geometric));

    let num = Series::from_i64s(&[0, 0, 1, 1, 0]);
    let q = Series::from_i64s(&[0, 1, 0, 0, 0]);
    println!("({num}) / q = {}", num.div(&q)?);
    match Series::from_i64s(&[2, 1]).inverse() {
        Ok(_) => unreachable!(),
        Err(e) => println!("inverting 2 + q: {e}"),
    }

    let s = Series::from_i64s(&[1, 1]).substitute_qm(5);
    println!("(1 + q) at q^5: {s}");
    let x = Series::from_i64s(&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]);
    for j in 0..5 {
        println!("5-dissection, residue {j}: {}", x.dissect(5, j));
    }
    println!("11q = {}", Series::monomial(1, 1, 3).scale(11));
    Ok(())
}
