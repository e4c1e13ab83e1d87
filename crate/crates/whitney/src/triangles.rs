//! Number triangles generated by two-term recurrences.
//!
//! Seven families share one engine: for each family the entry at `(n+1, k)`
//! is `T(n, k-1) + w(n, k)·T(n, k)` with a family-specific weight `w` that is
//! linear in λ, the boundary convention `T(n, k) = 0` for `n < k` or `k < 0`,
//! and `T(0, 0) = 1`. The families:
//!
//! * `whitney-second`  — `W(n+1,k) = W(n,k-1) + (mk + r - nλ)·W(n,k)`
//! * `whitney-first`   — `V(n+1,k) = V(n,k-1) + (kλ - r - mn)·V(n,k)`
//! * `stirling2-deg`   — `whitney-second` at `m = 1, r = 0`
//! * `stirling1-deg`   — `whitney-first` at `m = 1, r = 0`
//! * `rstirling-brace` — `B(n+1,k) = B(n,k-1) + (r + k - nλ)·B(n,k)`
//! * `rstirling-bracket` — `B(n+1,k) = B(n,k-1) + (r + n - kλ)·B(n,k)`
//! * `unsigned-stirling1-deg` — `rstirling-bracket` at `r = 0`
//!
//! Rows are memoized per [`Triangle`]; row `n+1` reads only row `n`. The
//! closed form [`explicit_whitney_second`], the parameter-shift sums
//! [`shift_r`], and [`recurrence16_check`] provide independent routes through
//! the same numbers and are compared against the recurrences in the
//! verification suites.

use std::cell::RefCell;
use std::error::Error;
use std::fmt;
use std::fmt::Write as _;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{
    lambda, lambda_eval, lambda_poly_from_strings, lambda_poly_to_strings, rat, LambdaPoly,
    Rational,
};
use crate::factorial::{binomial, factorial, falling_factorial_at};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    WhitneyFirst,
    WhitneySecond,
    Stirling1Deg,
    Stirling2Deg,
    RStirlingBracket,
    RStirlingBrace,
    UnsignedStirling1Deg,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::WhitneyFirst,
        Family::WhitneySecond,
        Family::Stirling1Deg,
        Family::Stirling2Deg,
        Family::RStirlingBracket,
        Family::RStirlingBrace,
        Family::UnsignedStirling1Deg,
    ];

    /// Stable token used on the CLI and in serialized tables.
    pub fn token(&self) -> &'static str {
        match self {
            Family::WhitneyFirst => "whitney-first",
            Family::WhitneySecond => "whitney-second",
            Family::Stirling1Deg => "stirling1-deg",
            Family::Stirling2Deg => "stirling2-deg",
            Family::RStirlingBracket => "rstirling-bracket",
            Family::RStirlingBrace => "rstirling-brace",
            Family::UnsignedStirling1Deg => "unsigned-stirling1-deg",
        }
    }

    pub fn from_token(s: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.token() == s)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ParamError {
    /// `m` must be at least 1 (divisions by `m` occur in the closed forms).
    ZeroModulus,
    NegativeR(Rational),
    /// The family fixes `m = 1`.
    FixedModulus(Family),
    /// The family fixes `r = 0`.
    FixedR(Family),
}

impl fmt::Display for ParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamError::ZeroModulus => write!(f, "m must be a positive integer"),
            ParamError::NegativeR(r) => write!(f, "r must be nonnegative, got {r}"),
            ParamError::FixedModulus(fam) => write!(f, "family {fam} requires m = 1"),
            ParamError::FixedR(fam) => write!(f, "family {fam} requires r = 0"),
        }
    }
}

impl Error for ParamError {}

/// Validated parameter set for one triangle: the family, the modulus `m ≥ 1`
/// and the shift `r ≥ 0`. The Stirling families fix `m = 1, r = 0`; the
/// r-Stirling families fix `m = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct TriangleParams {
    family: Family,
    m: u32,
    r: Rational,
}

impl TriangleParams {
    pub fn new(family: Family, m: u32, r: Rational) -> Result<Self, ParamError> {
        if m == 0 {
            return Err(ParamError::ZeroModulus);
        }
        if r.is_negative() {
            return Err(ParamError::NegativeR(r));
        }
        match family {
            Family::Stirling1Deg | Family::Stirling2Deg | Family::UnsignedStirling1Deg => {
                if m != 1 {
                    return Err(ParamError::FixedModulus(family));
                }
                if !r.is_zero() {
                    return Err(ParamError::FixedR(family));
                }
            }
            Family::RStirlingBracket | Family::RStirlingBrace => {
                if m != 1 {
                    return Err(ParamError::FixedModulus(family));
                }
            }
            Family::WhitneyFirst | Family::WhitneySecond => {}
        }
        Ok(TriangleParams { family, m, r })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn r(&self) -> &Rational {
        &self.r
    }

    /// The multiplier of `T(n, k)` in the recurrence for `T(n+1, k)`.
    fn weight(&self, n: usize, k: usize) -> LambdaPoly {
        let m = rat(self.m as i64);
        let n = rat(n as i64);
        let k = rat(k as i64);
        let (c0, c1) = match self.family {
            Family::WhitneySecond => (&m * &k + &self.r, -&n),
            Family::WhitneyFirst => (-(&self.r + &(&m * &n)), k),
            Family::Stirling2Deg => (k, -&n),
            Family::Stirling1Deg => (-&n, k),
            Family::RStirlingBrace => (&self.r + &k, -&n),
            Family::RStirlingBracket => (&self.r + &n, -&k),
            Family::UnsignedStirling1Deg => (n, -&k),
        };
        LambdaPoly::new(vec![c0, c1])
    }
}

/// Memoized triangle of λ-polynomial entries for a fixed parameter set.
///
/// Interior mutability confines a `Triangle` to one thread; entries, once
/// computed, are immutable and returned by value.
pub struct Triangle {
    params: TriangleParams,
    rows: RefCell<Vec<Vec<LambdaPoly>>>,
}

impl Triangle {
    pub fn new(params: TriangleParams) -> Self {
        Triangle {
            params,
            rows: RefCell::new(vec![vec![LambdaPoly::one()]]),
        }
    }

    pub fn params(&self) -> &TriangleParams {
        &self.params
    }

    fn ensure(&self, n: usize) {
        let mut rows = self.rows.borrow_mut();
        while rows.len() <= n {
            let i = rows.len(); // building row i from row i-1
            let prev = &rows[i - 1];
            let mut row = Vec::with_capacity(i + 1);
            for k in 0..=i {
                let carry = if k > 0 { prev[k - 1].clone() } else { LambdaPoly::zero() };
                let stay = if k < i {
                    &self.params.weight(i - 1, k) * &prev[k]
                } else {
                    LambdaPoly::zero()
                };
                row.push(&carry + &stay);
            }
            rows.push(row);
        }
    }

    /// Entry at `(n, k)`; zero whenever `n < k` or `k < 0`.
    pub fn entry(&self, n: i64, k: i64) -> LambdaPoly {
        if k < 0 || n < k {
            return LambdaPoly::zero();
        }
        let (n, k) = (n as usize, k as usize);
        self.ensure(n);
        self.rows.borrow()[n][k].clone()
    }

    /// Row `n` as entries for `k = 0..=n`.
    pub fn row(&self, n: usize) -> Vec<LambdaPoly> {
        self.ensure(n);
        self.rows.borrow()[n].clone()
    }
}

/// Degenerate r-Whitney number of the second kind `W(n, k)` for modulus `m`
/// and shift `r`, via the recurrence.
pub fn whitney_second(m: u32, r: &Rational, n: i64, k: i64) -> LambdaPoly {
    let params = TriangleParams::new(Family::WhitneySecond, m, r.clone())
        .expect("whitney-second accepts any m >= 1, r >= 0");
    Triangle::new(params).entry(n, k)
}

/// Degenerate r-Whitney number of the first kind `V(n, k)`.
pub fn whitney_first(m: u32, r: &Rational, n: i64, k: i64) -> LambdaPoly {
    let params = TriangleParams::new(Family::WhitneyFirst, m, r.clone())
        .expect("whitney-first accepts any m >= 1, r >= 0");
    Triangle::new(params).entry(n, k)
}

/// Degenerate Stirling numbers, the `m = 1, r = 0` specialization of the
/// Whitney recurrences.
pub fn stirling_degenerate(n: i64, k: i64, kind: crate::factorial::StirlingKind) -> LambdaPoly {
    match kind {
        crate::factorial::StirlingKind::First => whitney_first(1, &rat(0), n, k),
        crate::factorial::StirlingKind::Second => whitney_second(1, &rat(0), n, k),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RStirlingKind {
    /// Unsigned first kind, written with brackets.
    Bracket,
    /// Second kind, written with braces.
    Brace,
}

/// Degenerate r-Stirling number, computed as the (±1)-signed `m = 1` Whitney
/// value: the bracket is `(-1)^{n-k} V(n,k)` and the brace is `W(n,k)`. The
/// `rstirling-*` triangle families re-derive the same numbers from their own
/// recurrences, which the verification suites compare against this route.
pub fn r_stirling(n: i64, k: i64, r: &Rational, kind: RStirlingKind) -> LambdaPoly {
    match kind {
        RStirlingKind::Bracket => {
            let v = whitney_first(1, r, n, k);
            if (n - k).rem_euclid(2) == 0 {
                v
            } else {
                -v
            }
        }
        RStirlingKind::Brace => whitney_second(1, r, n, k),
    }
}

/// Unsigned degenerate Stirling number of the first kind,
/// `(-1)^{n-k}` times the signed first-kind value.
pub fn unsigned_stirling1_degenerate(n: i64, k: i64) -> LambdaPoly {
    r_stirling(n, k, &rat(0), RStirlingKind::Bracket)
}

/// Entry of the parameter-`(r+1)` triangle computed from the `r` triangle by
/// the shift sums:
///
/// * first kind: `V⁽ʳ⁺¹⁾(n,k) = Σ_j C(j,k) (-1)^{j-k} ⟨1⟩_{j-k,λ} V⁽ʳ⁾(n,j)`
/// * second kind: `W⁽ʳ⁺¹⁾(n,k) = Σ_l C(n,l) (1)_{n-l,λ} W⁽ʳ⁾(l,k)`
/// * bracket: `B⁽ʳ⁺¹⁾(n,k) = Σ_j C(j,k) ⟨1⟩_{j-k,λ} B⁽ʳ⁾(n,j)`
/// * brace: `B⁽ʳ⁺¹⁾(n,k) = Σ_j C(n,j) (1)_{n-j,λ} B⁽ʳ⁾(j,k)`
///
/// Panics for the plain Stirling families, which have no `r` to shift.
pub fn shift_r(params: &TriangleParams, n: usize, k: usize) -> LambdaPoly {
    let tri = Triangle::new(params.clone());
    let one = LambdaPoly::one();
    let rising_one = |t: usize| falling_factorial_at(&one, t, &(-lambda()));
    let falling_one = |t: usize| falling_factorial_at(&one, t, &lambda());
    let mut acc = LambdaPoly::zero();
    match params.family() {
        Family::WhitneyFirst => {
            for j in k..=n {
                let sign = if (j - k) % 2 == 0 { rat(1) } else { rat(-1) };
                let c = binomial(j as u64, k as i64) * sign;
                let term = rising_one(j - k).scale(&c);
                acc = &acc + &(&term * &tri.entry(n as i64, j as i64));
            }
        }
        Family::WhitneySecond => {
            for l in k..=n {
                let c = binomial(n as u64, l as i64);
                let term = falling_one(n - l).scale(&c);
                acc = &acc + &(&term * &tri.entry(l as i64, k as i64));
            }
        }
        Family::RStirlingBracket => {
            for j in k..=n {
                let c = binomial(j as u64, k as i64);
                let term = rising_one(j - k).scale(&c);
                acc = &acc + &(&term * &tri.entry(n as i64, j as i64));
            }
        }
        Family::RStirlingBrace => {
            for j in k..=n {
                let c = binomial(n as u64, j as i64);
                let term = falling_one(n - j).scale(&c);
                acc = &acc + &(&term * &tri.entry(j as i64, k as i64));
            }
        }
        fam => panic!("shift_r is not defined for family {fam}"),
    }
    acc
}

/// Finite-difference closed form for the second-kind numbers:
/// `W(n,k) = (1/(m^k k!)) Σ_j C(k,j) (-1)^{k-j} (mj+r)_{n,λ}`.
pub fn explicit_whitney_second(m: u32, r: &Rational, n: usize, k: usize) -> LambdaPoly {
    let mut acc = LambdaPoly::zero();
    for j in 0..=k {
        let sign = if (k - j) % 2 == 0 { rat(1) } else { rat(-1) };
        let c = binomial(k as u64, j as i64) * sign;
        let base = LambdaPoly::constant(rat((m as i64) * (j as i64)) + r);
        let term = falling_factorial_at(&base, n, &lambda()).scale(&c);
        acc = &acc + &term;
    }
    let mk = num::pow(rat(m as i64), k);
    acc.scale(&(mk * factorial(k as u64)).recip())
}

/// Checks `W(n+1,k) - (r - nλ)W(n,k) = Σ_{l=k-1}^{n} C(n,l) (m)_{n-l,λ} W(l,k-1)`
/// exactly, for `n ≥ k ≥ 1`.
pub fn recurrence16_check(m: u32, r: &Rational, n: usize, k: usize) -> bool {
    assert!(n >= k && k >= 1, "requires n >= k >= 1");
    let params = TriangleParams::new(Family::WhitneySecond, m, r.clone()).unwrap();
    let tri = Triangle::new(params);
    let shift = LambdaPoly::new(vec![r.clone(), rat(-(n as i64))]);
    let lhs = &tri.entry(n as i64 + 1, k as i64) - &(&shift * &tri.entry(n as i64, k as i64));
    let m_poly = LambdaPoly::constant(rat(m as i64));
    let mut rhs = LambdaPoly::zero();
    for l in (k - 1)..=n {
        let c = binomial(n as u64, l as i64);
        let term = falling_factorial_at(&m_poly, n - l, &lambda()).scale(&c);
        rhs = &rhs + &(&term * &tri.entry(l as i64, k as i64 - 1));
    }
    lhs == rhs
}

/// Long-form CSV export with header `n,k,value`; values are λ-polynomial
/// strings, or rationals when `lambda` pins the parameter numerically.
pub fn triangle_to_csv(tri: &Triangle, nmax: usize, lambda_value: Option<&Rational>) -> String {
    let mut out = String::from("n,k,value\n");
    for n in 0..=nmax {
        for (k, entry) in tri.row(n).iter().enumerate() {
            let value = match lambda_value {
                Some(v) => lambda_eval(entry, v).to_string(),
                None => entry.to_string(),
            };
            let _ = writeln!(out, "{n},{k},{value}");
        }
    }
    out
}

/// Serialized triangle: `entries[n][k]` is the ascending coefficient array
/// of the `(n, k)` entry (empty array = zero entry).
#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
pub struct TriangleDoc {
    pub family: String,
    pub m: u32,
    pub r: String,
    pub entries: Vec<Vec<Vec<String>>>,
}

impl TriangleDoc {
    pub fn from_triangle(tri: &Triangle, nmax: usize, lambda_value: Option<&Rational>) -> Self {
        let entries = (0..=nmax)
            .map(|n| {
                tri.row(n)
                    .iter()
                    .map(|e| {
                        let entry = match lambda_value {
                            Some(v) => LambdaPoly::constant(lambda_eval(e, v)),
                            None => e.clone(),
                        };
                        lambda_poly_to_strings(&entry)
                    })
                    .collect()
            })
            .collect();
        TriangleDoc {
            family: tri.params().family().token().to_string(),
            m: tri.params().m(),
            r: tri.params().r().to_string(),
            entries,
        }
    }

    /// Validates tokens and coefficients, returning the decoded entries.
    pub fn decode(&self) -> Result<(TriangleParams, Vec<Vec<LambdaPoly>>), String> {
        let family = Family::from_token(&self.family)
            .ok_or_else(|| format!("unknown family token {:?}", self.family))?;
        let r: Rational = self
            .r
            .parse()
            .map_err(|e| format!("bad r value {:?}: {e}", self.r))?;
        let params = TriangleParams::new(family, self.m, r).map_err(|e| e.to_string())?;
        let mut rows = Vec::with_capacity(self.entries.len());
        for row in &self.entries {
            let mut decoded = Vec::with_capacity(row.len());
            for entry in row {
                decoded.push(lambda_poly_from_strings(entry)?);
            }
            rows.push(decoded);
        }
        Ok((params, rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::lambda_substitute;
    use crate::factorial::StirlingKind;

    fn lpoly(cs: &[i64]) -> LambdaPoly {
        LambdaPoly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn param_validation() {
        assert!(TriangleParams::new(Family::WhitneySecond, 0, rat(0)).is_err());
        assert!(TriangleParams::new(Family::WhitneySecond, 2, rat(-1)).is_err());
        assert!(TriangleParams::new(Family::Stirling1Deg, 2, rat(0)).is_err());
        assert!(TriangleParams::new(Family::Stirling2Deg, 1, rat(1)).is_err());
        assert!(TriangleParams::new(Family::RStirlingBrace, 2, rat(1)).is_err());
        assert!(TriangleParams::new(Family::RStirlingBrace, 1, rat(3)).is_ok());
        assert!(TriangleParams::new(Family::WhitneySecond, 3, ratio_r(1, 2)).is_ok());
    }

    fn ratio_r(p: i64, q: i64) -> Rational {
        crate::exact::ratio(p, q)
    }

    #[test]
    fn boundary_conventions() {
        for family in Family::ALL {
            let params = TriangleParams::new(family, 1, rat(0)).unwrap();
            let tri = Triangle::new(params);
            assert_eq!(tri.entry(0, 0), LambdaPoly::one());
            assert!(tri.entry(2, 3).is_zero());
            assert!(tri.entry(2, -1).is_zero());
            for n in 0..6 {
                assert_eq!(tri.entry(n, n), LambdaPoly::one(), "{family} diagonal");
            }
        }
    }

    #[test]
    fn whitney_second_known_values() {
        assert_eq!(whitney_second(2, &rat(1), 0, 0), LambdaPoly::one());
        // W(n,0) = (r)_{n,λ}: here (1)(1-λ)(1-2λ)
        assert_eq!(whitney_second(2, &rat(1), 3, 0), lpoly(&[1, -3, 2]));
        // λ=0 limit of the m=1, r=0 case is the classical second kind
        let w = whitney_second(1, &rat(0), 4, 2);
        assert_eq!(lambda_substitute(&w, &rat(0)), LambdaPoly::constant(rat(7)));
    }

    #[test]
    fn whitney_first_known_values() {
        // V(n,0) = (-1)^n ∏_{k<n} (mk+r): (-1)²·1·3 = 3
        assert_eq!(whitney_first(2, &rat(1), 2, 0), LambdaPoly::constant(rat(3)));
        for n in 0..6 {
            assert_eq!(whitney_first(3, &rat(2), n, n), LambdaPoly::one());
        }
        // m = 1, r = 0 reduces to the degenerate first-kind Stirling numbers
        for n in 0..8i64 {
            for k in 0..=n {
                assert_eq!(
                    whitney_first(1, &rat(0), n, k),
                    stirling_degenerate(n, k, StirlingKind::First)
                );
            }
        }
    }

    #[test]
    fn stirling_degenerate_small_entries() {
        assert_eq!(stirling_degenerate(2, 1, StirlingKind::Second), lpoly(&[1, -1]));
        assert_eq!(stirling_degenerate(2, 1, StirlingKind::First), lpoly(&[-1, 1]));
        // either kind at λ=0 matches the classical recurrences
        for n in 0..=8i64 {
            for k in 0..=n {
                for kind in [StirlingKind::First, StirlingKind::Second] {
                    let deg = stirling_degenerate(n, k, kind);
                    assert_eq!(
                        lambda_eval(&deg, &rat(0)),
                        crate::factorial::classical_stirling(n as usize, k as usize, kind),
                        "kind={kind:?} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn r_stirling_small_entries() {
        // brace (1, 0) at r = 2 is (r)_{1,λ} = 2
        assert_eq!(
            r_stirling(1, 0, &rat(2), RStirlingKind::Brace),
            LambdaPoly::constant(rat(2))
        );
        for n in 0..6 {
            assert_eq!(
                r_stirling(n, n, &rat(3), RStirlingKind::Bracket),
                LambdaPoly::one()
            );
        }
        assert_eq!(
            r_stirling(2, 1, &rat(0), RStirlingKind::Brace),
            stirling_degenerate(2, 1, StirlingKind::Second)
        );
    }

    #[test]
    fn r_stirling_families_match_signed_whitney_route() {
        for r in 0..=3i64 {
            let bracket = Triangle::new(
                TriangleParams::new(Family::RStirlingBracket, 1, rat(r)).unwrap(),
            );
            let brace =
                Triangle::new(TriangleParams::new(Family::RStirlingBrace, 1, rat(r)).unwrap());
            for n in 0..=8i64 {
                for k in 0..=n {
                    assert_eq!(
                        bracket.entry(n, k),
                        r_stirling(n, k, &rat(r), RStirlingKind::Bracket),
                        "bracket r={r} n={n} k={k}"
                    );
                    assert_eq!(
                        brace.entry(n, k),
                        r_stirling(n, k, &rat(r), RStirlingKind::Brace),
                        "brace r={r} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn unsigned_first_kind_columns() {
        assert_eq!(unsigned_stirling1_degenerate(2, 1), lpoly(&[1, -1]));
        for n in 0..6 {
            assert_eq!(unsigned_stirling1_degenerate(n, n), LambdaPoly::one());
        }
        // Column k = 1 carries the factorial-like products ∏_{j=1}^{n-1}(j-λ);
        // column k = 0 is identically zero for n ≥ 1 by the zero convention.
        for n in 1..=8 {
            let mut expect = LambdaPoly::one();
            for j in 1..n {
                expect = &expect * &lpoly(&[j, -1]);
            }
            assert_eq!(unsigned_stirling1_degenerate(n, 1), expect, "n={n}");
            assert!(unsigned_stirling1_degenerate(n, 0).is_zero());
            let classical = lambda_eval(&unsigned_stirling1_degenerate(n, 1), &rat(0));
            assert_eq!(classical, factorial(n as u64 - 1));
        }
    }

    #[test]
    fn shift_r_matches_direct_computation() {
        // second kind, m=2, r: 0 → 1, n=1, k=0
        let params = TriangleParams::new(Family::WhitneySecond, 2, rat(0)).unwrap();
        assert_eq!(shift_r(&params, 1, 0), whitney_second(2, &rat(1), 1, 0));
        assert_eq!(shift_r(&params, 0, 0), LambdaPoly::one());
        // first kind preserves the diagonal
        let params = TriangleParams::new(Family::WhitneyFirst, 2, rat(1)).unwrap();
        assert_eq!(shift_r(&params, 3, 3), LambdaPoly::one());
    }

    #[test]
    fn explicit_form_small_cases() {
        // m=1, r=0, n=2, k=1: -(0)_{2,λ} + (1)_{2,λ} = 1-λ
        assert_eq!(explicit_whitney_second(1, &rat(0), 2, 1), lpoly(&[1, -1]));
        assert_eq!(explicit_whitney_second(3, &rat(2), 0, 0), LambdaPoly::one());
        assert_eq!(explicit_whitney_second(2, &rat(1), 3, 0), lpoly(&[1, -3, 2]));
    }

    #[test]
    fn recurrence16_small_grid() {
        assert!(recurrence16_check(1, &rat(0), 1, 1));
        assert!(recurrence16_check(2, &rat(1), 4, 2));
        assert!(recurrence16_check(3, &rat(2), 6, 3));
    }

    #[test]
    fn three_routes_agree_through_n_twelve() {
        let (m, r) = (2u32, rat(1));
        let params = TriangleParams::new(Family::WhitneySecond, m, r.clone()).unwrap();
        let tri = Triangle::new(params);
        for n in 0..=12usize {
            let oracle_row =
                crate::oracle::oracle_whitney(m, &r, n, crate::oracle::WhitneyKind::Second);
            for k in 0..=n {
                let rec = tri.entry(n as i64, k as i64);
                assert_eq!(rec, explicit_whitney_second(m, &r, n, k), "closed n={n} k={k}");
                assert_eq!(rec, oracle_row[k], "oracle n={n} k={k}");
            }
        }
    }

    #[test]
    fn csv_layout() {
        let params = TriangleParams::new(Family::WhitneySecond, 2, rat(1)).unwrap();
        let tri = Triangle::new(params);
        let csv = triangle_to_csv(&tri, 3, None);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,k,value");
        assert!(lines.contains(&"3,0,2*L^2-3*L+1"));
        assert_eq!(lines.len(), 1 + 1 + 2 + 3 + 4);
        // numeric λ turns entries into rationals: (1)_{2,λ} at λ=1/2 is 1/2
        let half = ratio_r(1, 2);
        let csv = triangle_to_csv(&tri, 2, Some(&half));
        assert!(csv.lines().any(|l| l == "2,0,1/2"), "{csv}");
    }

    #[test]
    fn doc_round_trip() {
        let params = TriangleParams::new(Family::WhitneyFirst, 3, rat(2)).unwrap();
        let tri = Triangle::new(params);
        let doc = TriangleDoc::from_triangle(&tri, 4, None);
        let json = serde_json::to_string(&doc).unwrap();
        let parsed: TriangleDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&parsed).unwrap(), json);
        let (params, rows) = parsed.decode().unwrap();
        assert_eq!(params.family(), Family::WhitneyFirst);
        assert_eq!(rows[4][2], tri.entry(4, 2));
    }
}
