//! Exact scalar and polynomial arithmetic.
//!
//! Everything downstream is built on three value types: [`Rational`]
//! (arbitrary-precision rational scalars), [`LambdaPoly`] (dense polynomials
//! in the deformation parameter, printed with the letter `L`), and [`XPoly`]
//! (dense polynomials in `x` whose coefficients are `LambdaPoly`). All
//! arithmetic is exact; no floating point appears in this module.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

/// Arbitrary-precision rational scalar, always in lowest terms with a
/// positive denominator; zero is uniquely 0/1. Displays as `p/q`, with `/q`
/// omitted when the denominator is 1.
pub type Rational = num::BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

/// Coefficient ring for [`Poly`]. Blanket-implemented; `Rational` and
/// `LambdaPoly` both qualify, which is what makes `XPoly` a polynomial over
/// polynomials.
pub trait Coeff:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T>
{
}

/// Dense polynomial over a coefficient ring `C`.
///
/// Canonical form: trailing zero coefficients are stripped, and the zero
/// polynomial holds an empty coefficient vector. Every constructor and every
/// arithmetic result re-establishes this, so equality is structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

/// Polynomial in the deformation parameter; coefficient `i` multiplies the
/// `i`-th power. Every triangle entry in this crate is one of these.
pub type LambdaPoly = Poly<Rational>;

/// Polynomial in `x` with `LambdaPoly` coefficients, the carrier for
/// basis-conversion targets such as generalized factorials.
pub type XPoly = Poly<LambdaPoly>;

impl<C: Coeff> Poly<C> {
    /// Builds a polynomial from ascending-degree coefficients, normalizing.
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Poly::new(vec![c])
    }

    /// `c` times the variable to the `degree`-th power.
    pub fn monomial(c: C, degree: usize) -> Self {
        let mut coeffs = vec![C::zero(); degree];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    /// The bare variable.
    pub fn var() -> Self {
        Poly::monomial(C::one(), 1)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of the `i`-th power (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    /// Ascending-degree coefficient slice; empty for zero.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &C) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Horner evaluation at a point of the coefficient ring.
    pub fn eval(&self, at: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Poly::constant(C::one());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Applies `f` to every stored coefficient and re-normalizes.
    pub fn map<F: Fn(&C) -> C>(&self, f: F) -> Self {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<'b, C: Coeff> Add<&'b Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &'b Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::new(out)
    }
}

impl<'b, C: Coeff> Sub<&'b Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &'b Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::new(out)
    }
}

impl<'b, C: Coeff> Mul<&'b Poly<C>> for &Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &'b Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a.clone() * b.clone();
                out[i + j] = std::mem::replace(&mut out[i + j], C::zero()) + prod;
            }
        }
        Poly::new(out)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<C: Coeff> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Poly<C>) -> Poly<C> {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Poly<C>) -> Poly<C> {
        &self - &rhs
    }
}

impl<C: Coeff> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        &self * &rhs
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl<C: Coeff> Zero for Poly<C> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coeff> One for Poly<C> {
    fn one() -> Self {
        Poly::constant(C::one())
    }
}

/// The deformation parameter as a polynomial.
pub fn lambda() -> LambdaPoly {
    LambdaPoly::var()
}

/// Substitutes `c`·λ for λ: the coefficient of the `i`-th power scales by
/// `c^i`. `c = 0` extracts the constant term (the classical limit).
pub fn lambda_substitute(p: &LambdaPoly, c: &Rational) -> LambdaPoly {
    let mut power = Rational::one();
    let mut out = Vec::with_capacity(p.coeffs.len());
    for coeff in &p.coeffs {
        out.push(coeff * &power);
        power *= c;
    }
    LambdaPoly::new(out)
}

/// Exact Horner evaluation at a rational point.
pub fn lambda_eval(p: &LambdaPoly, v: &Rational) -> Rational {
    p.eval(v)
}

/// Coefficient-wise λ → `c`·λ on an `XPoly`; the degree in `x` can drop when
/// leading coefficients vanish under the substitution.
pub fn xpoly_lambda_substitute(p: &XPoly, c: &Rational) -> XPoly {
    p.map(|q| lambda_substitute(q, c))
}

/// Serializes a λ-polynomial as coefficient strings `p/q` (denominator
/// omitted when 1) in ascending degree order; the zero polynomial is empty.
pub fn lambda_poly_to_strings(p: &LambdaPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

/// Inverse of [`lambda_poly_to_strings`].
pub fn lambda_poly_from_strings(coeffs: &[String]) -> Result<LambdaPoly, String> {
    let mut out = Vec::with_capacity(coeffs.len());
    for s in coeffs {
        let c: Rational = s
            .parse()
            .map_err(|e| format!("bad rational coefficient {s:?}: {e}"))?;
        out.push(c);
    }
    Ok(LambdaPoly::new(out))
}

impl fmt::Display for Poly<Rational> {
    /// Descending-degree rendering with variable letter `L`, e.g.
    /// `2*L^2-3*L+1`; the zero polynomial prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[d];
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            let body = if d == 0 {
                mag.to_string()
            } else {
                let var = if d == 1 { "L".to_string() } else { format!("L^{d}") };
                if mag.is_one() {
                    var
                } else {
                    format!("{mag}*{var}")
                }
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Display for Poly<LambdaPoly> {
    /// Descending-degree rendering with parenthesized λ-polynomial
    /// coefficients, e.g. `(1)*x^2 + (-L)*x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[d];
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match d {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{d}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lpoly(cs: &[i64]) -> LambdaPoly {
        LambdaPoly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn additive_inverse_cancels() {
        let p = lambda();
        assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn product_expands() {
        // (1-λ)(1-2λ) = 2λ² - 3λ + 1
        let a = lpoly(&[1, -1]);
        let b = lpoly(&[1, -2]);
        assert_eq!(&a * &b, lpoly(&[1, -3, 2]));
    }

    #[test]
    fn multiplication_by_zero_annihilates() {
        let p = lpoly(&[3, 0, 7]);
        assert!((&p * &LambdaPoly::zero()).is_zero());
    }

    #[test]
    fn substitute_scales_coefficients() {
        let p = LambdaPoly::monomial(rat(1), 2);
        assert_eq!(
            lambda_substitute(&p, &ratio(1, 2)),
            LambdaPoly::monomial(ratio(1, 4), 2)
        );
        // λ → 0 keeps only the constant term
        assert_eq!(lambda_substitute(&lpoly(&[1, -3, 2]), &rat(0)), lpoly(&[1]));
        assert_eq!(lambda_substitute(&lambda(), &rat(3)), lpoly(&[0, 3]));
    }

    #[test]
    fn substitution_composes_multiplicatively() {
        let p = lpoly(&[5, -1, 7, 2]);
        let a = ratio(2, 3);
        let b = rat(-4);
        assert_eq!(
            lambda_substitute(&lambda_substitute(&p, &a), &b),
            lambda_substitute(&p, &(a * b))
        );
    }

    #[test]
    fn horner_evaluation() {
        let p = lpoly(&[1, -3, 2]);
        assert_eq!(lambda_eval(&p, &rat(1)), rat(0));
        assert_eq!(lambda_eval(&p, &rat(0)), rat(1));
        assert_eq!(lambda_eval(&lambda(), &ratio(1, 3)), ratio(1, 3));
    }

    #[test]
    fn canonical_form_is_idempotent() {
        let p = LambdaPoly::new(vec![rat(1), rat(2), rat(0), rat(0)]);
        assert_eq!(p.coeffs().len(), 2);
        let q = LambdaPoly::new(p.coeffs().to_vec());
        assert_eq!(p, q);
        assert!(LambdaPoly::new(vec![rat(0), rat(0)]).is_zero());
    }

    #[test]
    fn display_matches_wire_format() {
        assert_eq!(lpoly(&[1, -3, 2]).to_string(), "2*L^2-3*L+1");
        assert_eq!(lpoly(&[1, -1]).to_string(), "-L+1");
        assert_eq!(lpoly(&[0, 1]).to_string(), "L");
        assert_eq!(lpoly(&[0, -1]).to_string(), "-L");
        assert_eq!(LambdaPoly::zero().to_string(), "0");
        assert_eq!(LambdaPoly::constant(ratio(-3, 4)).to_string(), "-3/4");
        assert_eq!(
            LambdaPoly::new(vec![rat(0), ratio(1, 2)]).to_string(),
            "1/2*L"
        );
    }

    #[test]
    fn coefficient_strings_round_trip() {
        let p = LambdaPoly::new(vec![rat(1), ratio(-3, 4), rat(2)]);
        let ss = lambda_poly_to_strings(&p);
        assert_eq!(ss, vec!["1", "-3/4", "2"]);
        assert_eq!(lambda_poly_from_strings(&ss).unwrap(), p);
        assert!(lambda_poly_to_strings(&LambdaPoly::zero()).is_empty());
        assert!(lambda_poly_from_strings(&["x".into()]).is_err());
    }

    #[test]
    fn xpoly_arithmetic_and_display() {
        // (x)(x - λ) = x² - λx
        let x = XPoly::var();
        let xml = &x - &XPoly::constant(lambda());
        let p = &x * &xml;
        assert_eq!(p.coeff(2), LambdaPoly::one());
        assert_eq!(p.coeff(1), -lambda());
        assert_eq!(p.to_string(), "(1)*x^2 + (-L)*x");
    }
}
