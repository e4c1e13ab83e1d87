//! Recover the triangles as connection coefficients between polynomial
//! bases, with no recurrence involved.
//!
//! Run with: cargo run --example basis_conversion

use num::One;

use whitney::exact::{rat, LambdaPoly, XPoly};
use whitney::factorial::xpoly_falling_factorial;
use whitney::oracle::{connection_coefficients, oracle_whitney, PolyBasis, WhitneyKind};
use whitney::triangles::{whitney_second, Family, Triangle, TriangleParams};

fn main() {
    // x⁴ expanded in the falling-factorial basis gives the classical
    // second-kind Stirling row 0, 1, 7, 6, 1.
    let target = XPoly::monomial(LambdaPoly::one(), 4);
    let coeffs = connection_coefficients(&target, &PolyBasis::falling_ordinary()).unwrap();
    let rendered: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    println!("x^4 in {{(x)_k}}: [{}]", rendered.join(", "));

    // The defining expansion of the second-kind Whitney numbers:
    // (mx+r)_{n,L} = sum_k W(n,k) m^k (x)_k.
    let (m, r) = (2u32, rat(1));
    let base = XPoly::new(vec![
        LambdaPoly::constant(r.clone()),
        LambdaPoly::constant(rat(m as i64)),
    ]);
    let target = xpoly_falling_factorial(&base, 3, &whitney::lambda());
    println!("\n(2x+1)_{{3,L}} = {target}");
    let row = oracle_whitney(m, &r, 3, WhitneyKind::Second);
    for (k, c) in row.iter().enumerate() {
        println!("  W(3,{k}) = {c}");
    }

    // The recurrence route lands on exactly the same values.
    let tri = Triangle::new(TriangleParams::new(Family::WhitneySecond, m, r.clone()).unwrap());
    assert_eq!(tri.row(3), row);
    println!("  (matches the recurrence row exactly)");

    // First-kind numbers invert the expansion: m^n (x)_n in {(mx+r)_{k,L}}.
    let v_row = oracle_whitney(m, &r, 3, WhitneyKind::First);
    println!("\nV(3,k) by expanding 2^3 (x)_3 in {{(2x+1)_{{k,L}}}}:");
    for (k, c) in v_row.iter().enumerate() {
        println!("  V(3,{k}) = {c}");
    }
    assert_eq!(whitney_second(m, &r, 3, 0), row[0].clone());
}
