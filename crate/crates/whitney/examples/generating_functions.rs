//! Exponential generating functions of the triangles and Dowling
//! polynomials, checked against the recurrence route.
//!
//! Run with: cargo run --example generating_functions

use whitney::exact::rat;
use whitney::factorial::factorial;
use whitney::series::{degenerate_exp, dowling_egf, whitney_egf};
use whitney::triangles::{whitney_second, Family, Triangle, TriangleParams};

fn main() {
    // The degenerate exponential: coefficients (x)_{k,L} / k! interpolate
    // between e^{xt} (L = 0) and (1 + t)^x (L = 1).
    let e1 = degenerate_exp(&rat(1), 5);
    println!("degenerate exponential at x = 1, coefficients of t^k:");
    for (k, c) in e1.coeffs().iter().enumerate() {
        println!("  k={k}: {c}");
    }

    // Column EGF: n!·[t^n] of (1/(m^k k!))·e_L^r(t)(e_L^m(t)-1)^k is W(n,k).
    let (m, r) = (2u32, rat(1));
    let order = 8;
    println!("\nsecond-kind Whitney column k = 2 from its EGF (m=2, r=1):");
    let egf = whitney_egf(m, &r, 2, order);
    let tri = Triangle::new(TriangleParams::new(Family::WhitneySecond, m, r.clone()).unwrap());
    for n in 2..=6usize {
        let from_egf = egf.coeff(n).scale(&factorial(n as u64));
        let from_recurrence = tri.entry(n as i64, 2);
        println!("  n={n}: {from_egf}");
        assert_eq!(from_egf, from_recurrence);
    }

    // Dowling EGF at x = 1 generates the Dowling numbers.
    println!("\nDowling numbers D(n) from the EGF at x = 1 (m=2, r=1):");
    let egf = dowling_egf(m, &r, &rat(1), order);
    for n in 0..=6usize {
        let d_n = egf.coeff(n).scale(&factorial(n as u64));
        println!("  n={n}: {d_n}");
    }
    // spot check: D(1) = W(1,0) + W(1,1) = 1 + 1
    assert_eq!(
        egf.coeff(1),
        &whitney_second(m, &r, 1, 0) + &whitney_second(m, &r, 1, 1)
    );
}
