//! Connection-coefficient oracle.
//!
//! Ground truth for every triangle in this crate: a degree-`n` polynomial is
//! expanded in a triangular polynomial basis by exact back-substitution, with
//! no reference to any recurrence. The Whitney and r-Stirling rows fall out
//! as connection coefficients of generalized factorials, which is their
//! definition; the recurrence and normal-ordering routes are checked against
//! these expansions.

use std::error::Error;
use std::fmt;

use num::{One, Zero};

use crate::exact::{lambda, LambdaPoly, Rational, XPoly};
use crate::factorial::xpoly_falling_factorial;
use crate::triangles::RStirlingKind;

/// A graded polynomial basis: `generator(n)` must have degree exactly `n` in
/// `x` with a nonzero constant (λ-free) leading coefficient, which is what
/// makes back-substitution exact and pivot-free.
pub struct PolyBasis {
    name: String,
    generator: Box<dyn Fn(usize) -> XPoly>,
}

impl PolyBasis {
    pub fn new(name: impl Into<String>, generator: impl Fn(usize) -> XPoly + 'static) -> Self {
        PolyBasis {
            name: name.into(),
            generator: Box::new(generator),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generator(&self, n: usize) -> XPoly {
        (self.generator)(n)
    }

    /// `{ (x)_k }` — ordinary falling factorials.
    pub fn falling_ordinary() -> Self {
        PolyBasis::new("(x)_k", |k| {
            xpoly_falling_factorial(&XPoly::var(), k, &LambdaPoly::one())
        })
    }

    /// `{ m^k (x)_k }` — falling factorials with the modulus absorbed.
    pub fn scaled_falling_ordinary(m: u32) -> Self {
        PolyBasis::new(format!("{m}^k (x)_k"), move |k| {
            let scale = LambdaPoly::constant(num::pow(crate::exact::rat(m as i64), k));
            xpoly_falling_factorial(&XPoly::var(), k, &LambdaPoly::one()).scale(&scale)
        })
    }

    /// `{ (x)_{k,λ} }` — degenerate falling factorials.
    pub fn falling_degenerate() -> Self {
        PolyBasis::new("(x)_{k,L}", |k| {
            xpoly_falling_factorial(&XPoly::var(), k, &lambda())
        })
    }

    /// `{ ⟨x⟩_{k,λ} }` — degenerate rising factorials.
    pub fn rising_degenerate() -> Self {
        PolyBasis::new("<x>_{k,L}", |k| {
            xpoly_falling_factorial(&XPoly::var(), k, &(-lambda()))
        })
    }

    /// `{ (mx+r)_{k,λ} }` — degenerate falling factorials of `mx + r`.
    pub fn shifted_degenerate(m: u32, r: &Rational) -> Self {
        let r = r.clone();
        PolyBasis::new(format!("({m}x+{r})_{{k,L}}"), move |k| {
            let base = XPoly::new(vec![
                LambdaPoly::constant(r.clone()),
                LambdaPoly::constant(crate::exact::rat(m as i64)),
            ]);
            xpoly_falling_factorial(&base, k, &lambda())
        })
    }

    /// `{ x^k }` — plain powers.
    pub fn monomials() -> Self {
        PolyBasis::new("x^k", |k| XPoly::monomial(LambdaPoly::one(), k))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum OracleError {
    /// `generator(index)` broke the triangularity contract.
    NotTriangular { index: usize, reason: String },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::NotTriangular { index, reason } => {
                write!(f, "basis element {index} is not triangular: {reason}")
            }
        }
    }
}

impl Error for OracleError {}

/// Expands `target` (degree `n`) as `Σ c_k · basis(k)`, returning
/// `c_0, ..., c_n` by back-substitution from degree `n` down to 0.
pub fn connection_coefficients(
    target: &XPoly,
    basis: &PolyBasis,
) -> Result<Vec<LambdaPoly>, OracleError> {
    let n = match target.degree() {
        Some(n) => n,
        None => return Ok(vec![LambdaPoly::zero()]),
    };
    let mut remainder = target.clone();
    let mut coeffs = vec![LambdaPoly::zero(); n + 1];
    for d in (0..=n).rev() {
        let b = basis.generator(d);
        if b.degree() != Some(d) {
            return Err(OracleError::NotTriangular {
                index: d,
                reason: format!(
                    "degree {:?}, expected {d}",
                    b.degree().map(|x| x as i64).unwrap_or(-1)
                ),
            });
        }
        let lead = b.leading().expect("nonzero by degree check");
        if lead.degree() != Some(0) {
            return Err(OracleError::NotTriangular {
                index: d,
                reason: "leading coefficient is not a nonzero rational".into(),
            });
        }
        let lead = lead.coeff(0);
        let c = remainder.coeff(d).scale(&lead.recip());
        if !c.is_zero() {
            remainder = &remainder - &b.scale(&c);
        }
        coeffs[d] = c;
    }
    debug_assert!(remainder.is_zero(), "triangular back-substitution left a remainder");
    Ok(coeffs)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WhitneyKind {
    First,
    Second,
}

/// Row `n` of a Whitney triangle by pure basis conversion: the second kind
/// expands `(mx+r)_{n,λ}` in `{m^k (x)_k}`, the first kind expands
/// `m^n (x)_n` in `{(mx+r)_{k,λ}}`.
pub fn oracle_whitney(m: u32, r: &Rational, n: usize, kind: WhitneyKind) -> Vec<LambdaPoly> {
    match kind {
        WhitneyKind::Second => {
            let base = XPoly::new(vec![
                LambdaPoly::constant(r.clone()),
                LambdaPoly::constant(crate::exact::rat(m as i64)),
            ]);
            let target = xpoly_falling_factorial(&base, n, &lambda());
            connection_coefficients(&target, &PolyBasis::scaled_falling_ordinary(m))
                .expect("stock basis is triangular")
        }
        WhitneyKind::First => {
            let scale = LambdaPoly::constant(num::pow(crate::exact::rat(m as i64), n));
            let target =
                xpoly_falling_factorial(&XPoly::var(), n, &LambdaPoly::one()).scale(&scale);
            connection_coefficients(&target, &PolyBasis::shifted_degenerate(m, r))
                .expect("stock basis is triangular")
        }
    }
}

/// Row `n` of an r-Stirling triangle by pure basis conversion: the bracket
/// expands `⟨x+r⟩_n` in `{⟨x⟩_{k,λ}}`, the brace expands `(x+r)_{n,λ}` in
/// `{(x)_k}`.
pub fn oracle_r_stirling(n: usize, r: &Rational, kind: RStirlingKind) -> Vec<LambdaPoly> {
    let base = XPoly::new(vec![LambdaPoly::constant(r.clone()), LambdaPoly::one()]);
    match kind {
        RStirlingKind::Bracket => {
            let target = xpoly_falling_factorial(&base, n, &(-LambdaPoly::one()));
            connection_coefficients(&target, &PolyBasis::rising_degenerate())
                .expect("stock basis is triangular")
        }
        RStirlingKind::Brace => {
            let target = xpoly_falling_factorial(&base, n, &lambda());
            connection_coefficients(&target, &PolyBasis::falling_ordinary())
                .expect("stock basis is triangular")
        }
    }
}
