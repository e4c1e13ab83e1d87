//! Dowling polynomials, the exponentially-weighted series evaluator, the
//! difference-operator closed form, and the inverse sequence transforms.
//!
//! Run with: cargo run --example dowling_dobinski

use whitney::dowling::{
    difference_formula, dobinski_eval, dowling_poly, transform, TransformKind,
};
use whitney::exact::{rat, ratio, LambdaPoly};
use whitney::triangles::whitney_second;

fn main() {
    let (m, r) = (2u32, rat(1));

    // Row polynomials D(n, x) = sum_k W(n,k) x^k.
    println!("Dowling polynomials (m=2, r=1), coefficients of x^k:");
    for n in 0..=4usize {
        let d = dowling_poly(m, &r, n);
        let coeffs: Vec<String> = d.coeffs().iter().map(|c| c.to_string()).collect();
        println!("  n={n}: [{}]", coeffs.join(", "));
    }

    // The series route: e^{-x/m} sum_k (x/m)^k (mk+r)_{n,L} / k! agrees with
    // exact evaluation of the row polynomial to the requested tolerance.
    println!("\nseries evaluation vs exact rows at x = 1, L = 1/2:");
    for n in 0..=6usize {
        let series = dobinski_eval(m, &r, n, 1.0, 0.5, 1e-9).unwrap();
        let exact = dowling_poly(m, &r, n).eval(&rat(1), &ratio(1, 2));
        println!("  n={n}: series {series:.12}  exact {exact}");
    }

    // Single entries from the difference operator match the recurrence.
    println!("\ndifference-operator route for W(4,k):");
    for k in 0..=4usize {
        let diff = difference_formula(m, &r, 4, k);
        assert_eq!(diff, whitney_second(m, &r, 4, k as i64));
        println!("  W(4,{k}) = {diff}");
    }

    // The two triangles act as mutually inverse sequence transforms.
    let seq: Vec<LambdaPoly> = (0..6)
        .map(|i| LambdaPoly::constant(ratio(i * i + 1, i + 1)))
        .collect();
    let forward = transform(m, &r, &seq, TransformKind::SecondKind);
    let back = transform(m, &r, &forward, TransformKind::FirstKind);
    assert_eq!(back, seq);
    println!("\ninverse-transform round trip on a length-6 sequence: exact");
}
