//! Normal-order operator expressions and read Whitney numbers off the
//! diagonal of the result.
//!
//! Run with: cargo run --example normal_ordering

use whitney::boson::{
    ffact_normal_form, normal_order, number_state_eigenvalue, parse, whitney_from_normal_ordering,
    NormalForm,
};
use whitney::exact::{rat, LambdaPoly};
use whitney::triangles::{whitney_second, Family, Triangle, TriangleParams};

fn main() {
    // The commutation relation itself.
    for src in ["a*ad", "N^2", "a^2*ad", "ffact(N, 3)", "ffact(2*N+1, 2)"] {
        let expr = parse(src).unwrap();
        println!("{src:<16} ->  {}", normal_order(&expr));
    }

    // Malformed input carries the byte offset of the problem.
    let err = parse("a +* ad").unwrap_err();
    println!("\nparse(\"a +* ad\"): {err}");

    // Normal ordering (m·ad a + r)_{n,L} is diagonal, and the (k,k)
    // coefficients are m^k · W(n,k): a third route to the triangle.
    let (m, r) = (2u32, rat(1));
    println!("\n(2 ad a + 1)_{{3,L}} diagonal vs the recurrence triangle:");
    let row = whitney_from_normal_ordering(m, &r, 3).unwrap();
    let tri = Triangle::new(TriangleParams::new(Family::WhitneySecond, m, r.clone()).unwrap());
    for (k, c) in row.iter().enumerate() {
        let rec = tri.entry(3, k as i64);
        println!("  k={k}: engine {c}   recurrence {rec}");
        assert_eq!(c, &rec);
    }

    // Number states are eigenvectors of every diagonal normal form:
    // ad^k a^k |s> = (s)_k |s>, so (m·ad a + r)_{n,L} |s> = (ms+r)_{n,L} |s>.
    println!("\nnumber-state eigenvalues (s)_k:");
    for s in 0..=4u32 {
        let values: Vec<String> = (0..=4)
            .map(|k| number_state_eigenvalue(k, s).to_string())
            .collect();
        println!("  s={s}: [{}]", values.join(", "));
    }
    let base = NormalForm::number_operator()
        .scale(&LambdaPoly::constant(rat(m as i64)))
        .add(&NormalForm::constant(LambdaPoly::constant(r.clone())));
    let nf = ffact_normal_form(&base, 3);
    let on_state = nf.apply_to_number_state(2).unwrap();
    println!("\n(2 ad a + 1)_{{3,L}} acting on |2>: scalar {on_state}");
    // which is (2·2+1)_{3,L} = 5(5-L)(5-2L)
    assert_eq!(
        on_state,
        whitney::factorial::falling_factorial_at(
            &LambdaPoly::constant(rat(5)),
            3,
            &whitney::lambda()
        )
    );
    let _ = whitney_second(m, &r, 3, 3); // diagonal entries are always 1
}
