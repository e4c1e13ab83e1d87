//! Generate the number triangles and export them.
//!
//! Run with: cargo run --example triangle_tables

use whitney::exact::{lambda_eval, rat, ratio};
use whitney::triangles::{triangle_to_csv, Family, Triangle, TriangleDoc, TriangleParams};

fn main() {
    // Second-kind degenerate r-Whitney triangle for m = 2, r = 1. Entries
    // are polynomials in the deformation parameter L; the k = 0 column
    // carries the products (r)(r-L)(r-2L)...
    let params = TriangleParams::new(Family::WhitneySecond, 2, rat(1)).unwrap();
    let tri = Triangle::new(params);
    println!("whitney-second, m=2, r=1:");
    for n in 0..=4 {
        let row: Vec<String> = tri.row(n).iter().map(|e| e.to_string()).collect();
        println!("  n={n}: [{}]", row.join(", "));
    }

    // The same triangle at a numeric deformation value.
    let half = ratio(1, 2);
    println!("\nsame rows at L = 1/2:");
    for n in 0..=4 {
        let row: Vec<String> = tri
            .row(n)
            .iter()
            .map(|e| lambda_eval(e, &half).to_string())
            .collect();
        println!("  n={n}: [{}]", row.join(", "));
    }

    // Degenerate Stirling triangles are the m = 1, r = 0 specialization.
    let stirling2 = Triangle::new(TriangleParams::new(Family::Stirling2Deg, 1, rat(0)).unwrap());
    println!("\nstirling2-deg rows (classical values at L = 0):");
    for n in 0..=5 {
        let classical: Vec<String> = stirling2
            .row(n)
            .iter()
            .map(|e| lambda_eval(e, &rat(0)).to_string())
            .collect();
        println!("  n={n}: [{}]", classical.join(", "));
    }

    // The CSV and JSON wire formats used by the CLI.
    println!("\nCSV export (nmax = 3):");
    print!("{}", triangle_to_csv(&tri, 3, None));

    let doc = TriangleDoc::from_triangle(&tri, 3, None);
    println!("\nJSON export (nmax = 3):");
    println!("{}", serde_json::to_string(&doc).unwrap());
}
