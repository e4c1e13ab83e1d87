//! Truncated formal power series over λ-polynomials.
//!
//! Truncation order is explicit everywhere: a series of order `N` stores
//! exactly `N+1` coefficients, arithmetic results carry the minimum order of
//! the operands, and there are no lazy streams. The exponential generating
//! functions of the Whitney triangles and the Dowling polynomials are built
//! here and compared coefficient-by-coefficient against the recurrence route.

use num::{One, Zero};

use crate::exact::{rat, LambdaPoly, Rational};
use crate::factorial::factorial;

/// Power series in `t` truncated at an inclusive order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coeffs: Vec<LambdaPoly>, // length = order + 1
}

impl Series {
    /// Builds a series of order `coeffs.len() - 1`. Panics on an empty
    /// vector (order would be negative).
    pub fn from_coeffs(coeffs: Vec<LambdaPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least its constant term");
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![LambdaPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = LambdaPoly::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> LambdaPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(LambdaPoly::zero)
    }

    pub fn coeffs(&self) -> &[LambdaPoly] {
        &self.coeffs
    }

    fn truncated(&self, order: usize) -> Series {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, LambdaPoly::zero());
        Series { coeffs }
    }

    pub fn add(&self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
            .collect();
        Series { coeffs }
    }

    pub fn sub(&self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
            .collect();
        Series { coeffs }
    }

    pub fn mul(&self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![LambdaPoly::zero(); order + 1];
        for i in 0..=order.min(self.order()) {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i).min(rhs.order()) {
                coeffs[i + j] = &coeffs[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        Series { coeffs }
    }

    pub fn scale(&self, c: &LambdaPoly) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Series {
        let mut out = Series::one(self.order());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Composition `self ∘ inner` by Horner's rule. The inner series must
    /// have zero constant term, otherwise truncation would not commute with
    /// composition; the result carries the minimum of the two orders.
    pub fn compose(&self, inner: &Series) -> Series {
        assert!(
            inner.coeff(0).is_zero(),
            "composition requires a zero constant term in the inner series"
        );
        let order = self.order().min(inner.order());
        let inner = inner.truncated(order);
        let mut out = Series::zero(order);
        for i in (0..=order).rev() {
            out = out.mul(&inner);
            out.coeffs[0] = &out.coeffs[0] + &self.coeffs[i];
        }
        out
    }
}

/// The degenerate exponential: coefficient of `t^k` is `(x)_{k,λ} / k!`.
/// At λ = 0 this collapses to the classical `e^{xt}`.
pub fn degenerate_exp(x: &Rational, order: usize) -> Series {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut num = LambdaPoly::one();
    coeffs.push(LambdaPoly::one());
    for k in 1..=order {
        // multiply in (x - (k-1)λ)
        let factor = LambdaPoly::new(vec![x.clone(), rat(-(k as i64 - 1))]);
        num = &num * &factor;
        coeffs.push(num.scale(&factorial(k as u64).recip()));
    }
    Series::from_coeffs(coeffs)
}

/// The classical exponential truncated at `order`: coefficients `1/k!`.
pub fn exp_series(order: usize) -> Series {
    let coeffs = (0..=order)
        .map(|k| LambdaPoly::constant(factorial(k as u64).recip()))
        .collect();
    Series::from_coeffs(coeffs)
}

/// Exponential generating function of the `k`-th column of the second-kind
/// Whitney triangle: `(1/(m^k k!)) · e_λ^r(t) (e_λ^m(t) - 1)^k`. The
/// coefficient of `t^n` times `n!` is `W(n, k)`.
pub fn whitney_egf(m: u32, r: &Rational, k: usize, order: usize) -> Series {
    assert!(order >= k, "order must reach the first nonzero coefficient");
    let e_r = degenerate_exp(r, order);
    let e_m1 = degenerate_exp(&rat(m as i64), order).sub(&Series::one(order));
    let norm = (num::pow(rat(m as i64), k) * factorial(k as u64)).recip();
    e_r.mul(&e_m1.pow(k)).scale(&LambdaPoly::constant(norm))
}

/// Exponential generating function of the Dowling polynomials at a fixed
/// rational `x`: `e_λ^r(t) · exp((x/m)(e_λ^m(t) - 1))`. The coefficient of
/// `t^n` times `n!` is `D(n, x)`.
pub fn dowling_egf(m: u32, r: &Rational, x: &Rational, order: usize) -> Series {
    let e_r = degenerate_exp(r, order);
    let e_m1 = degenerate_exp(&rat(m as i64), order).sub(&Series::one(order));
    let arg = e_m1.scale(&LambdaPoly::constant(x / rat(m as i64)));
    e_r.mul(&exp_series(order).compose(&arg))
}
