//! Normal ordering in the Weyl algebra generated by an annihilator `a` and a
//! creator `ad` with `a·ad - ad·a = 1`.
//!
//! The canonical element is a [`NormalForm`]: a finite sum of terms
//! `c·ad^p a^q` with λ-polynomial coefficients. Multiplication reorders
//! `a^q·ad^p` by the closed-form identity
//!
//! ```text
//! a^q ad^p = Σ_i  C(q,i) C(p,i) i!  ad^(p-i) a^(q-i)
//! ```
//!
//! which keeps products polynomial-sized. [`BosonWord::normal_form`] performs
//! the same reduction by naive rewriting of the single rule `a·ad → ad·a + 1`
//! to completion (each step strictly reduces the number of out-of-order
//! pairs); it is exponential in the worst case and exists as an independent
//! route for cross-checking the closed form.
//!
//! Normal-ordering the degenerate factorial `(m·ad a + r)_{n,λ}` is diagonal,
//! and its `(k,k)` coefficients are `m^k` times the second-kind Whitney
//! triangle row — the third, operator-algebra route to those numbers.

mod parser;

pub use parser::{parse, OperatorExpr, ParseError};

use std::collections::BTreeMap;
use std::error::Error;
use std::fmt;

use num::{One, Zero};

use crate::exact::{lambda, rat, LambdaPoly, Rational};
use crate::factorial::{binomial, factorial};
use crate::triangles::{self, RStirlingKind};

/// A single generator letter.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BosonOp {
    Annihilate,
    Create,
}

/// A finite word over the two generators; the empty word is the identity
/// operator.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BosonWord {
    letters: Vec<BosonOp>,
}

impl BosonWord {
    pub fn new(letters: Vec<BosonOp>) -> Self {
        BosonWord { letters }
    }

    pub fn letters(&self) -> &[BosonOp] {
        &self.letters
    }

    /// Normal-orders the word by rewriting `a·ad → ad·a + 1` to completion.
    /// Exponential in the number of out-of-order pairs; used as an oracle for
    /// the closed-form multiplication at small sizes.
    pub fn normal_form(&self) -> NormalForm {
        let mut acc = NormalForm::zero();
        let mut stack = vec![self.letters.clone()];
        while let Some(word) = stack.pop() {
            let inversion = word
                .windows(2)
                .position(|w| w == [BosonOp::Annihilate, BosonOp::Create]);
            match inversion {
                Some(i) => {
                    let mut swapped = word.clone();
                    swapped.swap(i, i + 1);
                    stack.push(swapped);
                    let mut contracted = word;
                    contracted.drain(i..i + 2);
                    stack.push(contracted);
                }
                None => {
                    let p = word.iter().filter(|&&l| l == BosonOp::Create).count() as u32;
                    let q = word.len() as u32 - p;
                    acc.add_term(p, q, LambdaPoly::one());
                }
            }
        }
        acc
    }
}

impl fmt::Display for BosonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let rendered: Vec<&str> = self
            .letters
            .iter()
            .map(|l| match l {
                BosonOp::Annihilate => "a",
                BosonOp::Create => "ad",
            })
            .collect();
        write!(f, "{}", rendered.join(" "))
    }
}

/// Which reordering rule multiplication applies. `Commutative` drops the
/// commutator term (`a·ad → ad·a`), deliberately breaking the algebra; it
/// exists as a negative control for the verification suites.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RewriteRule {
    Weyl,
    Commutative,
}

/// Canonical element of the boson algebra: a map `(p, q) → c` representing
/// `Σ c·ad^p a^q`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NormalForm {
    terms: BTreeMap<(u32, u32), LambdaPoly>,
}

impl NormalForm {
    pub fn zero() -> Self {
        NormalForm::default()
    }

    /// The identity operator.
    pub fn identity() -> Self {
        NormalForm::monomial(0, 0, LambdaPoly::one())
    }

    pub fn constant(c: LambdaPoly) -> Self {
        NormalForm::monomial(0, 0, c)
    }

    /// `c · ad^p a^q`.
    pub fn monomial(p: u32, q: u32, c: LambdaPoly) -> Self {
        let mut nf = NormalForm::zero();
        nf.add_term(p, q, c);
        nf
    }

    pub fn annihilator() -> Self {
        NormalForm::monomial(0, 1, LambdaPoly::one())
    }

    pub fn creator() -> Self {
        NormalForm::monomial(1, 0, LambdaPoly::one())
    }

    /// The number operator `ad a`.
    pub fn number_operator() -> Self {
        NormalForm::monomial(1, 1, LambdaPoly::one())
    }

    fn add_term(&mut self, p: u32, q: u32, c: LambdaPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((p, q)).or_insert_with(LambdaPoly::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&(p, q));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `ad^p a^q` (zero if absent).
    pub fn coeff(&self, p: u32, q: u32) -> LambdaPoly {
        self.terms.get(&(p, q)).cloned().unwrap_or_else(LambdaPoly::zero)
    }

    /// Terms in ascending `(p, q)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &LambdaPoly)> {
        self.terms.iter()
    }

    pub fn is_diagonal(&self) -> bool {
        self.terms.keys().all(|&(p, q)| p == q)
    }

    pub fn add(&self, rhs: &NormalForm) -> NormalForm {
        let mut out = self.clone();
        for (&(p, q), c) in &rhs.terms {
            out.add_term(p, q, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &NormalForm) -> NormalForm {
        let mut out = self.clone();
        for (&(p, q), c) in &rhs.terms {
            out.add_term(p, q, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> NormalForm {
        NormalForm::zero().sub(self)
    }

    pub fn scale(&self, c: &LambdaPoly) -> NormalForm {
        let mut out = NormalForm::zero();
        for (&(p, q), coeff) in &self.terms {
            out.add_term(p, q, coeff * c);
        }
        out
    }

    /// Product under the canonical Weyl rule.
    pub fn mul(&self, rhs: &NormalForm) -> NormalForm {
        self.mul_with_rule(rhs, RewriteRule::Weyl)
    }

    /// Product with an explicit reordering rule.
    pub fn mul_with_rule(&self, rhs: &NormalForm, rule: RewriteRule) -> NormalForm {
        let mut out = NormalForm::zero();
        for (&(p1, q1), c1) in &self.terms {
            for (&(p2, q2), c2) in &rhs.terms {
                let c = c1 * c2;
                let imax = match rule {
                    RewriteRule::Weyl => q1.min(p2),
                    RewriteRule::Commutative => 0,
                };
                for i in 0..=imax {
                    let count = binomial(q1 as u64, i as i64)
                        * binomial(p2 as u64, i as i64)
                        * factorial(i as u64);
                    out.add_term(
                        p1 + p2 - i,
                        q1 + q2 - i,
                        c.scale(&count),
                    );
                }
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> NormalForm {
        let mut out = NormalForm::identity();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Substitutes a numeric value for λ in every coefficient.
    pub fn substitute_lambda(&self, v: &Rational) -> NormalForm {
        let mut out = NormalForm::zero();
        for (&(p, q), c) in &self.terms {
            out.add_term(p, q, LambdaPoly::constant(crate::exact::lambda_eval(c, v)));
        }
        out
    }

    /// Applies the operator to the number state `|s⟩`, which is an
    /// eigenvector exactly when every term is diagonal:
    /// `ad^k a^k |s⟩ = (s)_k |s⟩`. Returns the eigenvalue as a λ-polynomial.
    pub fn apply_to_number_state(&self, s: u32) -> Result<LambdaPoly, BosonError> {
        let mut acc = LambdaPoly::zero();
        for (&(p, q), c) in &self.terms {
            if p != q {
                return Err(BosonError::OffDiagonal { p, q });
            }
            acc = &acc + &c.scale(&number_state_eigenvalue(p, s));
        }
        Ok(acc)
    }
}

impl fmt::Display for NormalForm {
    /// Terms sorted by `(p, q)` descending, e.g. `(1)*ad a + (1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(p, q), c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            if p > 0 {
                write!(f, "*ad")?;
                if p > 1 {
                    write!(f, "^{p}")?;
                }
            }
            if q > 0 {
                write!(f, "{}a", if p > 0 { " " } else { "*" })?;
                if q > 1 {
                    write!(f, "^{q}")?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// `∏_{j=0}^{n-1} (base - jλ)` over normal forms: the degenerate falling
/// factorial of an operator, expanded before (and during) ordering.
pub fn ffact_normal_form(base: &NormalForm, n: usize) -> NormalForm {
    ffact_normal_form_with_rule(base, n, RewriteRule::Weyl)
}

/// [`ffact_normal_form`] with an explicit reordering rule.
pub fn ffact_normal_form_with_rule(base: &NormalForm, n: usize, rule: RewriteRule) -> NormalForm {
    let mut acc = NormalForm::identity();
    for j in 0..n {
        let offset = NormalForm::constant(lambda().scale(&rat(j as i64)));
        acc = acc.mul_with_rule(&base.sub(&offset), rule);
    }
    acc
}

/// Evaluates a parsed operator expression to its normal form.
pub fn normal_order(expr: &OperatorExpr) -> NormalForm {
    match expr {
        OperatorExpr::Annihilate => NormalForm::annihilator(),
        OperatorExpr::Create => NormalForm::creator(),
        OperatorExpr::Lambda => NormalForm::constant(lambda()),
        OperatorExpr::Literal(c) => NormalForm::constant(LambdaPoly::constant(c.clone())),
        OperatorExpr::Neg(e) => normal_order(e).neg(),
        OperatorExpr::Add(l, r) => normal_order(l).add(&normal_order(r)),
        OperatorExpr::Sub(l, r) => normal_order(l).sub(&normal_order(r)),
        OperatorExpr::Mul(l, r) => normal_order(l).mul(&normal_order(r)),
        OperatorExpr::Pow(e, k) => normal_order(e).pow(*k as usize),
        OperatorExpr::FallingFactorial(e, n) => {
            ffact_normal_form(&normal_order(e), *n as usize)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BosonError {
    /// A normal form expected to be diagonal carried an `ad^p a^q` term with
    /// `p ≠ q`.
    OffDiagonal { p: u32, q: u32 },
}

impl fmt::Display for BosonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BosonError::OffDiagonal { p, q } => {
                write!(f, "unexpected off-diagonal term ad^{p} a^{q}")
            }
        }
    }
}

impl Error for BosonError {}

/// Diagonal number-state action: `ad^k a^k |s⟩ = (s)_k |s⟩` with the ordinary
/// falling factorial `(s)_k`.
pub fn number_state_eigenvalue(k: u32, s: u32) -> Rational {
    let mut acc = rat(1);
    for j in 0..k as i64 {
        acc *= rat(s as i64 - j);
    }
    acc
}

/// Second-kind Whitney row recovered from the operator algebra:
/// normal-orders `(m·ad a + r)_{n,λ}`, verifies the result is diagonal, and
/// divides the `(k,k)` coefficient by `m^k`.
pub fn whitney_from_normal_ordering(
    m: u32,
    r: &Rational,
    n: usize,
) -> Result<Vec<LambdaPoly>, BosonError> {
    let base = NormalForm::number_operator()
        .scale(&LambdaPoly::constant(rat(m as i64)))
        .add(&NormalForm::constant(LambdaPoly::constant(r.clone())));
    let nf = ffact_normal_form(&base, n);
    for (&(p, q), _) in nf.terms() {
        if p != q {
            return Err(BosonError::OffDiagonal { p, q });
        }
    }
    let mut row = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let minv = num::pow(rat(m as i64), k).recip();
        row.push(nf.coeff(k as u32, k as u32).scale(&minv));
    }
    Ok(row)
}

/// One named pass/fail outcome inside a report.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

/// Report of the operator-algebra consistency checks.
#[derive(Clone, Debug, Default)]
pub struct InversionReport {
    pub checks: Vec<IdentityCheck>,
}

impl InversionReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn record(&mut self, name: String, passed: bool, detail: Option<String>) {
        self.checks.push(IdentityCheck { name, passed, detail });
    }
}

/// Runs the engine's inversion checks up to `n ≤ nmax`:
///
/// 1. the diagonal coefficients of `(ad a + r)_{n,λ}` equal the r-Stirling
///    brace row, for `r ∈ {0, 1, 2}`;
/// 2. rebuilding `m^{n+1} ad^{n+1} a^{n+1}` from the first-kind recurrence
///    coefficients against `(m·ad a + r)_{k,λ}` reproduces the algebra;
/// 3. rebuilding `(m·ad a + r)_{n+1,λ}` from the second-kind recurrence
///    coefficients reproduces the algebra;
///
/// both 2 and 3 over `m ∈ {1, 2}`, `r ∈ {0, 1}`.
pub fn verify_inversion_identities(nmax: usize) -> InversionReport {
    let mut report = InversionReport::default();

    for r in 0..=2i64 {
        let r = rat(r);
        let base = NormalForm::number_operator()
            .add(&NormalForm::constant(LambdaPoly::constant(r.clone())));
        let mut ok = true;
        let mut detail = None;
        'outer: for n in 0..=nmax {
            let nf = ffact_normal_form(&base, n);
            for k in 0..=n {
                let expect = triangles::r_stirling(n as i64, k as i64, &r, RStirlingKind::Brace);
                if nf.coeff(k as u32, k as u32) != expect {
                    ok = false;
                    detail = Some(format!("n={n} k={k} r={r}"));
                    break 'outer;
                }
            }
            if !nf.is_diagonal() {
                ok = false;
                detail = Some(format!("off-diagonal term at n={n} r={r}"));
                break;
            }
        }
        report.record(format!("brace-normal-ordering r={r}"), ok, detail);
    }

    for m in [1u32, 2] {
        for r in 0..=1i64 {
            let r = rat(r);
            let base = NormalForm::number_operator()
                .scale(&LambdaPoly::constant(rat(m as i64)))
                .add(&NormalForm::constant(LambdaPoly::constant(r.clone())));

            let mut ok = true;
            let mut detail = None;
            for n in 0..nmax {
                let lhs = NormalForm::monomial(
                    n as u32 + 1,
                    n as u32 + 1,
                    LambdaPoly::constant(num::pow(rat(m as i64), n + 1)),
                );
                let mut rhs = NormalForm::zero();
                for k in 0..=(n + 1) as i64 {
                    let carry = triangles::whitney_first(m, &r, n as i64, k - 1);
                    let weight = LambdaPoly::new(vec![
                        -(&r + &rat(m as i64 * n as i64)),
                        rat(k),
                    ]);
                    let c = &carry + &(&weight * &triangles::whitney_first(m, &r, n as i64, k));
                    rhs = rhs.add(&ffact_normal_form(&base, k as usize).scale(&c));
                }
                if lhs != rhs {
                    ok = false;
                    detail = Some(format!("n={n}"));
                    break;
                }
            }
            report.record(format!("first-kind-rebuild m={m} r={r}"), ok, detail);

            let mut ok = true;
            let mut detail = None;
            for n in 0..nmax {
                let lhs = ffact_normal_form(&base, n + 1);
                let mut rhs = NormalForm::zero();
                for k in 0..=(n + 1) as i64 {
                    let carry = triangles::whitney_second(m, &r, n as i64, k - 1);
                    let weight = LambdaPoly::new(vec![
                        rat(m as i64) * rat(k) + &r,
                        rat(-(n as i64)),
                    ]);
                    let c = &carry + &(&weight * &triangles::whitney_second(m, &r, n as i64, k));
                    let mk = LambdaPoly::constant(num::pow(rat(m as i64), k as usize));
                    rhs = rhs.add(&NormalForm::monomial(k as u32, k as u32, &c * &mk));
                }
                if lhs != rhs {
                    ok = false;
                    detail = Some(format!("n={n}"));
                    break;
                }
            }
            report.record(format!("second-kind-rebuild m={m} r={r}"), ok, detail);
        }
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use crate::factorial::falling_factorial_at;

    fn lpoly(cs: &[i64]) -> LambdaPoly {
        LambdaPoly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn commutation_relation() {
        // a·ad = ad·a + 1
        let nf = NormalForm::annihilator().mul(&NormalForm::creator());
        assert_eq!(nf.coeff(1, 1), LambdaPoly::one());
        assert_eq!(nf.coeff(0, 0), LambdaPoly::one());
        assert_eq!(nf.terms().count(), 2);
        assert_eq!(nf.to_string(), "(1)*ad a + (1)");
    }

    #[test]
    fn number_operator_square() {
        let nf = NormalForm::number_operator().pow(2);
        assert_eq!(nf.coeff(2, 2), LambdaPoly::one());
        assert_eq!(nf.coeff(1, 1), LambdaPoly::one());
        assert_eq!(nf.terms().count(), 2);
    }

    #[test]
    fn annihilators_past_a_creator() {
        // a² ad = ad a² + 2a
        let nf = NormalForm::annihilator()
            .pow(2)
            .mul(&NormalForm::creator());
        assert_eq!(nf.coeff(1, 2), LambdaPoly::one());
        assert_eq!(nf.coeff(0, 1), lpoly(&[2]));
        assert_eq!(nf.terms().count(), 2);
    }

    #[test]
    fn commutator_identities() {
        // aⁿ·ad - ad·aⁿ = n·aⁿ⁻¹ and the creator-side mirror
        for n in 1..=8usize {
            let an = NormalForm::annihilator().pow(n);
            let lhs = an.mul(&NormalForm::creator()).sub(&NormalForm::creator().mul(&an));
            let expect = NormalForm::monomial(0, n as u32 - 1, lpoly(&[n as i64]));
            assert_eq!(lhs, expect, "annihilator side, n={n}");

            let adn = NormalForm::creator().pow(n);
            let lhs = NormalForm::annihilator()
                .mul(&adn)
                .sub(&adn.mul(&NormalForm::annihilator()));
            let expect = NormalForm::monomial(n as u32 - 1, 0, lpoly(&[n as i64]));
            assert_eq!(lhs, expect, "creator side, n={n}");
        }
    }

    #[test]
    fn naive_rewriting_agrees_with_closed_form() {
        use BosonOp::{Annihilate as A, Create as D};
        let words = [
            vec![A, D],
            vec![A, A, D],
            vec![A, D, A, D],
            vec![A, A, D, D],
            vec![D, A, A, D, A],
            vec![A, A, A, D, D, D],
            vec![A, D, D, A, A, D],
        ];
        for letters in words {
            let word = BosonWord::new(letters.clone());
            let direct = word.normal_form();
            let composed = letters.iter().fold(NormalForm::identity(), |acc, l| {
                let factor = match l {
                    A => NormalForm::annihilator(),
                    D => NormalForm::creator(),
                };
                acc.mul(&factor)
            });
            assert_eq!(direct, composed, "word {word}");
        }
    }

    #[test]
    fn number_state_values() {
        assert_eq!(number_state_eigenvalue(2, 4), rat(12));
        assert_eq!(number_state_eigenvalue(0, 9), rat(1));
        assert_eq!(number_state_eigenvalue(3, 2), rat(0));
    }

    #[test]
    fn diagonal_action_on_number_states() {
        // (m·ad a + r)_{n,λ} acts on |s⟩ by the scalar (ms+r)_{n,λ}
        for (m, r) in [(1u32, 0i64), (2, 1)] {
            let base = NormalForm::number_operator()
                .scale(&LambdaPoly::constant(rat(m as i64)))
                .add(&NormalForm::constant(LambdaPoly::constant(rat(r))));
            for n in 0..=5usize {
                let nf = ffact_normal_form(&base, n);
                for s in 0..=5u32 {
                    let got = nf.apply_to_number_state(s).unwrap();
                    let expect = falling_factorial_at(
                        &LambdaPoly::constant(rat(m as i64 * s as i64 + r)),
                        n,
                        &lambda(),
                    );
                    assert_eq!(got, expect, "m={m} r={r} n={n} s={s}");
                }
            }
        }
        // off-diagonal forms are not eigenvectors
        assert!(NormalForm::creator().apply_to_number_state(3).is_err());
    }

    #[test]
    fn whitney_rows_from_the_algebra() {
        let row = whitney_from_normal_ordering(1, &rat(0), 2).unwrap();
        assert_eq!(row, vec![LambdaPoly::zero(), lpoly(&[1, -1]), lpoly(&[1])]);

        let row = whitney_from_normal_ordering(2, &rat(1), 1).unwrap();
        assert_eq!(row, vec![lpoly(&[1]), lpoly(&[1])]);

        let row = whitney_from_normal_ordering(3, &rat(2), 0).unwrap();
        assert_eq!(row, vec![LambdaPoly::one()]);
    }

    #[test]
    fn substitution_into_coefficients() {
        let base = NormalForm::number_operator();
        let nf = ffact_normal_form(&base, 2); // ad² a² + (1-λ)·ad a
        let at_half = nf.substitute_lambda(&ratio(1, 2));
        assert_eq!(at_half.coeff(1, 1), LambdaPoly::constant(ratio(1, 2)));
    }

    #[test]
    fn inversion_report_passes() {
        let report = verify_inversion_identities(5);
        for check in &report.checks {
            assert!(check.passed, "{} failed: {:?}", check.name, check.detail);
        }
        assert!(report.all_passed());
    }

    #[test]
    fn corrupted_rule_is_detected() {
        // With the commutator dropped, the brace coefficients collapse and the
        // comparison against the triangle must fail.
        let r = rat(1);
        let base = NormalForm::number_operator()
            .add(&NormalForm::constant(LambdaPoly::constant(r.clone())));
        let broken = ffact_normal_form_with_rule(&base, 3, RewriteRule::Commutative);
        let mut mismatch = false;
        for k in 0..=3i64 {
            let expect = triangles::r_stirling(3, k, &r, RStirlingKind::Brace);
            if broken.coeff(k as u32, k as u32) != expect {
                mismatch = true;
            }
        }
        assert!(mismatch, "negative control failed to fail");
    }

    #[test]
    fn rendering() {
        let base = NormalForm::number_operator();
        let nf = ffact_normal_form(&base, 2);
        assert_eq!(nf.to_string(), "(1)*ad^2 a^2 + (-L+1)*ad a");
        assert_eq!(NormalForm::zero().to_string(), "0");
        assert_eq!(NormalForm::monomial(0, 2, lpoly(&[3])).to_string(), "(3)*a^2");
        assert_eq!(NormalForm::monomial(2, 0, lpoly(&[1])).to_string(), "(1)*ad^2");
    }
}
