//! Generalized factorial primitives.
//!
//! The degenerate falling factorial `(x)_{n,λ} = x(x-λ)...(x-(n-1)λ)` and its
//! rising/ordinary variants are the building blocks every triangle identity
//! is stated in. This module produces them both as polynomials in `x` and as
//! pointwise products at a fixed argument, alongside binomial coefficients
//! and the classical Stirling numbers used as λ→0 reference values.

use num::{BigInt, One, Zero};

use crate::exact::{lambda, rat, LambdaPoly, Rational, XPoly};

/// Which generalized factorial product to build. The ordinary kinds are the
/// degenerate kinds with the step fixed to 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FactorialKind {
    FallingDegenerate,
    RisingDegenerate,
    FallingOrdinary,
    RisingOrdinary,
}

/// The `n`-th generalized factorial of the bare variable as a polynomial in
/// `x`: the empty product (n = 0) is 1, and the degree in `x` is exactly `n`.
pub fn factorial_poly(n: usize, kind: FactorialKind) -> XPoly {
    let step = match kind {
        FactorialKind::FallingDegenerate => lambda(),
        FactorialKind::RisingDegenerate => -lambda(),
        FactorialKind::FallingOrdinary => LambdaPoly::one(),
        FactorialKind::RisingOrdinary => -LambdaPoly::one(),
    };
    xpoly_falling_factorial(&XPoly::var(), n, &step)
}

/// `∏_{j=0}^{n-1} (base - j·step)` over polynomials in `x`. Rising products
/// are falling products with the step negated.
pub fn xpoly_falling_factorial(base: &XPoly, n: usize, step: &LambdaPoly) -> XPoly {
    let mut acc = XPoly::one();
    for j in 0..n {
        let offset = XPoly::constant(step.scale(&rat(j as i64)));
        acc = &acc * &(base - &offset);
    }
    acc
}

/// `∏_{j=0}^{n-1} (a - j·step)`, exact in λ. With `step = λ` this is
/// `(a)_{n,λ}`; with `step = -λ` the rising counterpart.
pub fn falling_factorial_at(a: &LambdaPoly, n: usize, step: &LambdaPoly) -> LambdaPoly {
    let mut acc = LambdaPoly::one();
    for j in 0..n {
        acc = &acc * &(a - &step.scale(&rat(j as i64)));
    }
    acc
}

/// Binomial coefficient as a rational; zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> Rational {
    if k < 0 || k as u64 > n {
        return Rational::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Rational::new(num, den)
}

/// `n!` as a rational.
pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rational::from_integer(acc)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StirlingKind {
    First,
    Second,
}

/// Classical (signed) Stirling numbers by their standard recurrences,
/// integer-valued. These are the λ→0 limits of the degenerate triangles and
/// serve only as reference values.
pub fn classical_stirling(n: usize, k: usize, kind: StirlingKind) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut prev = vec![Rational::zero(); k + 1];
    prev[0] = Rational::one();
    for i in 1..=n {
        let mut curr = vec![Rational::zero(); k + 1];
        for j in 1..=k.min(i) {
            curr[j] = match kind {
                StirlingKind::First => &prev[j - 1] - &(&prev[j] * rat(i as i64 - 1)),
                StirlingKind::Second => &prev[j - 1] + &(&prev[j] * rat(j as i64)),
            };
        }
        prev = curr;
    }
    prev[k].clone()
}
