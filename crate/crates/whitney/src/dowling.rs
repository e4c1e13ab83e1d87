//! Degenerate r-Dowling polynomials and numbers.
//!
//! `D(n, x) = Σ_k W(n,k) x^k` over the second-kind Whitney triangle, the
//! exponentially-weighted series evaluator for the same quantity, the
//! finite-difference closed form for single entries, and the mutually
//! inverse sequence transforms carried by the two triangles.

use std::error::Error;
use std::fmt;

use num::{BigInt, One, Signed, ToPrimitive, Zero};

use crate::exact::{lambda, lambda_eval, rat, LambdaPoly, Rational};
use crate::factorial::{binomial, factorial, falling_factorial_at};
use crate::triangles::{Family, Triangle, TriangleParams};

/// Row polynomial of the second-kind Whitney triangle: the coefficient of
/// `x^k` is `W(n, k)`, so the leading coefficient is always 1.
#[derive(Clone, PartialEq, Debug)]
pub struct DowlingPoly {
    m: u32,
    r: Rational,
    n: usize,
    coeffs: Vec<LambdaPoly>,
}

impl DowlingPoly {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn r(&self) -> &Rational {
        &self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coefficients of `x^0 ..= x^n`.
    pub fn coeffs(&self) -> &[LambdaPoly] {
        &self.coeffs
    }

    /// Evaluates at a rational `x`, leaving λ symbolic.
    pub fn eval_x(&self, x: &Rational) -> LambdaPoly {
        let mut acc = LambdaPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(x) + c;
        }
        acc
    }

    /// Evaluates at rational `x` and λ.
    pub fn eval(&self, x: &Rational, lambda_value: &Rational) -> Rational {
        lambda_eval(&self.eval_x(x), lambda_value)
    }
}

/// The degenerate r-Dowling polynomial of degree `n` for modulus `m` and
/// shift `r`, with exact triangle coefficients.
pub fn dowling_poly(m: u32, r: &Rational, n: usize) -> DowlingPoly {
    let params = TriangleParams::new(Family::WhitneySecond, m, r.clone())
        .expect("whitney-second accepts any m >= 1, r >= 0");
    let tri = Triangle::new(params);
    DowlingPoly {
        m,
        r: r.clone(),
        n,
        coeffs: tri.row(n),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DobinskiError {
    /// The tolerance must be strictly positive for the tail bound to
    /// terminate the summation.
    NonPositiveTolerance,
    /// The series identity is established for `x ≥ 0` only; negative
    /// arguments are rejected rather than extrapolated.
    NegativeX,
    /// `x`, λ or the tolerance was NaN or infinite.
    NonFiniteInput,
}

impl fmt::Display for DobinskiError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DobinskiError::NonPositiveTolerance => write!(f, "tolerance must be positive"),
            DobinskiError::NegativeX => write!(f, "x must be nonnegative"),
            DobinskiError::NonFiniteInput => write!(f, "inputs must be finite"),
        }
    }
}

impl Error for DobinskiError {}

/// Evaluates `D(n, x) = e^{-x/m} Σ_{k≥0} (x/m)^k (mk+r)_{n,λ} / k!` to within
/// `tol` of the true sum (plus double rounding in the final exponential).
///
/// Terms are accumulated in exact rational arithmetic on the exact rational
/// values the `f64` inputs denote; only the closing `e^{-x/m}` factor is
/// floating point. Truncation: each term is bounded by
/// `(x/m)^k/k! · (mk + |r| + n|λ|)^n`; summation continues until three
/// consecutive bounds fall below `tol/10` and the geometric tail estimate
/// from that point is below `tol/2`. `x = 0` short-circuits to the exact
/// value `(r)_{n,λ}`.
pub fn dobinski_eval(
    m: u32,
    r: &Rational,
    n: usize,
    x: f64,
    lambda_value: f64,
    tol: f64,
) -> Result<f64, DobinskiError> {
    if !x.is_finite() || !lambda_value.is_finite() || !tol.is_finite() {
        return Err(DobinskiError::NonFiniteInput);
    }
    if tol <= 0.0 {
        return Err(DobinskiError::NonPositiveTolerance);
    }
    if x < 0.0 {
        return Err(DobinskiError::NegativeX);
    }
    let lam = Rational::from_float(lambda_value).expect("finite float");
    if x == 0.0 {
        let exact = falling_factorial_at(&LambdaPoly::constant(r.clone()), n, &lambda());
        return Ok(lambda_eval(&exact, &lam).to_f64().unwrap_or(f64::NAN));
    }

    let z = Rational::from_float(x).expect("finite float") / rat(m as i64);
    let zf = z.to_f64().unwrap_or(f64::NAN);
    let mf = m as f64;
    let envelope_offset = r.abs().to_f64().unwrap_or(0.0) + n as f64 * lambda_value.abs();

    // Integer accumulation over the running common denominator
    // scale^n · zd^k · k!, where scale clears the denominators of r and λ:
    // (mk + r - jλ)·scale = mk·scale + r_shift - j·l_step, all integers.
    // A single normalization happens at the very end.
    let scale = r.denom() * lam.denom();
    let r_shift = r.numer() * lam.denom();
    let l_step = lam.numer() * r.denom();
    let (zn, zd) = (z.numer().clone(), z.denom().clone());

    let mut acc = BigInt::zero(); // numerator of the partial sum
    let mut denom = BigInt::one(); // zd^k · k!
    let mut zn_pow = BigInt::one(); // zn^k
    let mut env = 1.0_f64; // z^k / k! as a float envelope
    let mut below = 0u32;
    let mut k: u64 = 0;
    loop {
        // scale^n · (mk + r)_{n,λ}, an integer
        let mut term = BigInt::one();
        let mut arg = BigInt::from(m as u64 * k) * &scale + &r_shift;
        for _ in 0..n {
            term *= &arg;
            arg -= &l_step;
        }
        if k == 0 {
            acc = term;
        } else {
            let step = &zd * BigInt::from(k);
            acc = acc * &step + term * &zn_pow;
            denom *= step;
        }

        let bound = env * (mf * k as f64 + envelope_offset).powi(n as i32);
        if bound < tol / 10.0 {
            below += 1;
        } else {
            below = 0;
        }
        if below >= 3 {
            let kf = k as f64;
            let ratio = zf / (kf + 1.0)
                * ((mf * (kf + 1.0) + envelope_offset) / (mf * kf + envelope_offset)).powi(n as i32);
            if ratio < 0.5 && bound * ratio / (1.0 - ratio) < tol / 2.0 {
                break;
            }
        }
        k += 1;
        zn_pow *= &zn;
        env *= zf / k as f64;
        if k > 20_000 {
            break; // the envelope is eventually geometric; unreachable for sane inputs
        }
    }

    let sum = Rational::new(acc, num::pow(scale, n) * denom);
    Ok((-zf).exp() * sum.to_f64().unwrap_or(f64::NAN))
}

/// Single second-kind entry by the difference-operator closed form:
/// `W(n,k) = (m^{n-k}/k!) · Δ^k f(r/m)` with `f(x) = (x)_{n,λ/m}` and
/// `Δf(x) = f(x+1) - f(x)`. Must equal the recurrence value exactly.
pub fn difference_formula(m: u32, r: &Rational, n: usize, k: usize) -> LambdaPoly {
    assert!(k <= n, "requires 0 <= k <= n");
    let step = lambda().scale(&rat(m as i64).recip()); // λ/m
    let base_point = r / rat(m as i64);
    let mut acc = LambdaPoly::zero();
    for l in 0..=k {
        let sign = if (k - l) % 2 == 0 { rat(1) } else { rat(-1) };
        let c = binomial(k as u64, l as i64) * sign;
        let at = LambdaPoly::constant(&base_point + rat(l as i64));
        acc = &acc + &falling_factorial_at(&at, n, &step).scale(&c);
    }
    let scale = num::pow(rat(m as i64), n - k) * factorial(k as u64).recip();
    acc.scale(&scale)
}

/// Which triangle a [`transform`] multiplies by.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TransformKind {
    /// `out_n = Σ_l W(n,l)·in_l` (second kind).
    SecondKind,
    /// `out_n = Σ_l V(n,l)·in_l` (first kind).
    FirstKind,
}

/// Applies the lower-triangular Whitney matrix of the requested kind to a
/// finite sequence; the two kinds are mutually inverse, so either
/// composition is the identity.
pub fn transform(
    m: u32,
    r: &Rational,
    input: &[LambdaPoly],
    kind: TransformKind,
) -> Vec<LambdaPoly> {
    let family = match kind {
        TransformKind::SecondKind => Family::WhitneySecond,
        TransformKind::FirstKind => Family::WhitneyFirst,
    };
    let params =
        TriangleParams::new(family, m, r.clone()).expect("whitney families accept m >= 1, r >= 0");
    let tri = Triangle::new(params);
    input
        .iter()
        .enumerate()
        .map(|(n, _)| {
            let mut acc = LambdaPoly::zero();
            for (l, f) in input.iter().take(n + 1).enumerate() {
                acc = &acc + &(&tri.entry(n as i64, l as i64) * f);
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use crate::triangles::whitney_second;

    fn lpoly(cs: &[i64]) -> LambdaPoly {
        LambdaPoly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn row_polynomials() {
        assert_eq!(dowling_poly(1, &rat(0), 0).coeffs(), &[LambdaPoly::one()]);
        let d = dowling_poly(2, &rat(1), 1);
        assert_eq!(d.coeffs(), &[lpoly(&[1]), lpoly(&[1])]);
        let d = dowling_poly(1, &rat(0), 2);
        assert_eq!(
            d.coeffs(),
            &[LambdaPoly::zero(), lpoly(&[1, -1]), lpoly(&[1])]
        );
        // leading coefficient is 1 across a small grid
        for m in [1u32, 2, 3] {
            for r in 0..3 {
                for n in 0..8 {
                    let d = dowling_poly(m, &rat(r), n);
                    assert_eq!(d.coeffs()[n], LambdaPoly::one());
                }
            }
        }
    }

    #[test]
    fn evaluation() {
        let d = dowling_poly(1, &rat(0), 2);
        // D(2, x) = x² + (1-λ)x; at x = 1 this is 2-λ
        assert_eq!(d.eval_x(&rat(1)), lpoly(&[2, -1]));
        assert_eq!(d.eval(&rat(1), &ratio(1, 2)), ratio(3, 2));
    }

    #[test]
    fn dobinski_degenerate_cases() {
        // n = 0: the series telescopes to 1
        let v = dobinski_eval(2, &rat(1), 0, 1.0, 0.25, 1e-9).unwrap();
        assert!((v - 1.0).abs() <= 1e-9, "{v}");
        // n = 1, λ = 0, m = 2, r = 1, x = 3: closed form x + r = 4
        let v = dobinski_eval(2, &rat(1), 1, 3.0, 0.0, 1e-9).unwrap();
        assert!((v - 4.0).abs() <= 1e-9, "{v}");
        // x = 0 takes the exact path: (r)_{n,λ}
        let v = dobinski_eval(2, &rat(1), 3, 0.0, 0.5, 1e-9).unwrap();
        let exact = lambda_eval(&lpoly(&[1, -3, 2]), &ratio(1, 2));
        assert!((v - exact.to_f64().unwrap()).abs() < 1e-12);
    }

    #[test]
    fn dobinski_matches_exact_polynomial() {
        let v = dobinski_eval(2, &rat(1), 5, 1.0, 0.5, 1e-9).unwrap();
        let exact = dowling_poly(2, &rat(1), 5)
            .eval(&rat(1), &ratio(1, 2))
            .to_f64()
            .unwrap();
        assert!((v - exact).abs() <= 1e-9, "{v} vs {exact}");
    }

    #[test]
    fn dobinski_rejects_bad_inputs() {
        assert_eq!(
            dobinski_eval(1, &rat(0), 2, 1.0, 0.0, 0.0),
            Err(DobinskiError::NonPositiveTolerance)
        );
        assert_eq!(
            dobinski_eval(1, &rat(0), 2, -1.0, 0.0, 1e-9),
            Err(DobinskiError::NegativeX)
        );
        assert_eq!(
            dobinski_eval(1, &rat(0), 2, f64::INFINITY, 0.0, 1e-9),
            Err(DobinskiError::NonFiniteInput)
        );
    }

    #[test]
    fn difference_formula_matches_recurrence() {
        // k = 0 reduces to (r)_{n,λ}
        assert_eq!(difference_formula(2, &rat(1), 3, 0), lpoly(&[1, -3, 2]));
        assert_eq!(difference_formula(3, &rat(2), 4, 4), LambdaPoly::one());
        assert_eq!(
            difference_formula(2, &rat(1), 3, 1),
            whitney_second(2, &rat(1), 3, 1)
        );
    }

    #[test]
    fn difference_formula_across_the_grid() {
        for m in [1u32, 2, 3] {
            for r in [rat(0), rat(1), rat(2)] {
                let params =
                    TriangleParams::new(Family::WhitneySecond, m, r.clone()).unwrap();
                let tri = Triangle::new(params);
                for n in 0..=10usize {
                    for k in 0..=n {
                        assert_eq!(
                            difference_formula(m, &r, n, k),
                            tri.entry(n as i64, k as i64),
                            "m={m} r={r} n={n} k={k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn transforms_are_mutually_inverse() {
        let seq: Vec<LambdaPoly> = vec![
            lpoly(&[1]),
            lpoly(&[0, 1]),
            lpoly(&[2, -1]),
            lpoly(&[5]),
            LambdaPoly::zero(),
        ];
        let g = transform(2, &rat(1), &seq, TransformKind::SecondKind);
        let back = transform(2, &rat(1), &g, TransformKind::FirstKind);
        assert_eq!(back, seq);
        let f = transform(2, &rat(1), &seq, TransformKind::FirstKind);
        let back = transform(2, &rat(1), &f, TransformKind::SecondKind);
        assert_eq!(back, seq);
        // unit vector extracts the k = 0 column
        let e0 = vec![LambdaPoly::one(), LambdaPoly::zero(), LambdaPoly::zero(), LambdaPoly::zero()];
        let g = transform(2, &rat(1), &e0, TransformKind::SecondKind);
        for (n, v) in g.iter().enumerate() {
            assert_eq!(v, &whitney_second(2, &rat(1), n as i64, 0));
        }
        // empty in, empty out
        assert!(transform(1, &rat(0), &[], TransformKind::SecondKind).is_empty());
    }
}
