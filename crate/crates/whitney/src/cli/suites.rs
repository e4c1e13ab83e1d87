//! Numbered identity suites behind `whitney verify`.
//!
//! Each suite checks one exact identity (or a small group) across the row
//! range `n ≤ nmax` at the given `(m, r)`, with λ symbolic throughout —
//! every identity here is a polynomial identity in λ, so numeric spot
//! checks would be strictly weaker. THEOREM_MAP.md states the formula each
//! numbered suite verifies. Suites that only hold for `m = 1` (2, 5, 8, 11,
//! 52, 53) or `r = 0` (1) pin those parameters themselves.

use num::{One, Zero};

use crate::dowling::{self, TransformKind};
use crate::exact::{
    lambda, lambda_substitute, rat, ratio, LambdaPoly, Rational,
};
use crate::factorial::{binomial, falling_factorial_at, StirlingKind};
use crate::oracle::{self, WhitneyKind};
use crate::triangles::{
    explicit_whitney_second, r_stirling, recurrence16_check, shift_r, stirling_degenerate,
    unsigned_stirling1_degenerate, Family, RStirlingKind, Triangle, TriangleParams,
};

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub nmax: usize,
    pub m: u32,
    pub r: Rational,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub label: String,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub id: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Accumulates labeled checks; a check passes when its closure returns
/// `None` and fails with the returned counterexample otherwise.
struct Recorder {
    checks: Vec<CheckResult>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { checks: Vec::new() }
    }

    fn run(&mut self, label: &str, body: impl FnOnce() -> Option<String>) {
        let counterexample = body();
        self.checks.push(CheckResult {
            label: label.to_string(),
            passed: counterexample.is_none(),
            counterexample,
        });
    }

    fn finish(self, id: &str) -> SuiteReport {
        SuiteReport {
            id: id.to_string(),
            checks: self.checks,
        }
    }
}

pub fn known_ids() -> Vec<String> {
    let mut ids: Vec<String> = (1..=16).map(|i| i.to_string()).collect();
    ids.extend(["48".to_string(), "52".to_string(), "53".to_string()]);
    ids
}

pub fn run_all(opts: &SuiteOptions) -> Vec<SuiteReport> {
    known_ids()
        .iter()
        .map(|id| run_suite(id, opts).expect("known id"))
        .collect()
}

pub fn run_suite(id: &str, opts: &SuiteOptions) -> Option<SuiteReport> {
    let report = match id {
        "1" => suite_1(opts),
        "2" => suite_2(opts),
        "3" => suite_3(opts),
        "4" => suite_4(opts),
        "5" => suite_5(opts),
        "6" => suite_6(opts),
        "7" => suite_7(opts),
        "8" => suite_8(opts),
        "9" => suite_9(opts),
        "10" => suite_10(opts),
        "11" => suite_11(opts),
        "12" => suite_12(opts),
        "13" => suite_13(opts),
        "14" => suite_14(opts),
        "15" => suite_15(opts),
        "16" => suite_16(opts),
        "48" => suite_48(opts),
        "52" => suite_52(opts),
        "53" => suite_53(opts),
        _ => return None,
    };
    Some(report)
}

fn whitney_triangle(kind: WhitneyKind, m: u32, r: &Rational) -> Triangle {
    let family = match kind {
        WhitneyKind::First => Family::WhitneyFirst,
        WhitneyKind::Second => Family::WhitneySecond,
    };
    Triangle::new(TriangleParams::new(family, m, r.clone()).expect("validated upstream"))
}

fn cex(ctx: &str, lhs: &LambdaPoly, rhs: &LambdaPoly) -> String {
    format!("{ctx}: lhs={lhs}, rhs={rhs}")
}

/// r = 0 reduction: `V(n,k) = m^{n-k}·S1(n,k)|_{λ→λ/m}` and the second-kind
/// analogue.
fn suite_1(opts: &SuiteOptions) -> SuiteReport {
    let m = opts.m;
    let minv = rat(m as i64).recip();
    let zero = rat(0);
    let v = whitney_triangle(WhitneyKind::First, m, &zero);
    let w = whitney_triangle(WhitneyKind::Second, m, &zero);
    let mut rec = Recorder::new();
    rec.run("first-kind r=0 reduction", || {
        for n in 0..=opts.nmax as i64 {
            for k in 0..=n {
                let lhs = v.entry(n, k);
                let scale = num::pow(rat(m as i64), (n - k) as usize);
                let rhs = lambda_substitute(&stirling_degenerate(n, k, StirlingKind::First), &minv)
                    .scale(&scale);
                if lhs != rhs {
                    return Some(cex(&format!("m={m} n={n} k={k}"), &lhs, &rhs));
                }
            }
        }
        None
    });
    rec.run("second-kind r=0 reduction", || {
        for n in 0..=opts.nmax as i64 {
            for k in 0..=n {
                let lhs = w.entry(n, k);
                let scale = num::pow(rat(m as i64), (n - k) as usize);
                let rhs =
                    lambda_substitute(&stirling_degenerate(n, k, StirlingKind::Second), &minv)
                        .scale(&scale);
                if lhs != rhs {
                    return Some(cex(&format!("m={m} n={n} k={k}"), &lhs, &rhs));
                }
            }
        }
        None
    });
    rec.finish("1")
}

/// m = 1 reduction: the r-Stirling triangles (own recurrences) equal the
/// (±1)-signed m = 1 Whitney values.
fn suite_2(opts: &SuiteOptions) -> SuiteReport {
    let r = &opts.r;
    let bracket = Triangle::new(
        TriangleParams::new(Family::RStirlingBracket, 1, r.clone()).expect("m=1"),
    );
    let brace =
        Triangle::new(TriangleParams::new(Family::RStirlingBrace, 1, r.clone()).expect("m=1"));
    let mut rec = Recorder::new();
    rec.run("bracket = signed first-kind whitney (m=1)", || {
        for n in 0..=opts.nmax as i64 {
            for k in 0..=n {
                let lhs = bracket.entry(n, k);
                let rhs = r_stirling(n, k, r, RStirlingKind::Bracket);
                if lhs != rhs {
                    return Some(cex(&format!("r={r} n={n} k={k}"), &lhs, &rhs));
                }
            }
        }
        None
    });
    rec.run("brace = second-kind whitney (m=1)", || {
        for n in 0..=opts.nmax as i64 {
            for k in 0..=n {
                let lhs = brace.entry(n, k);
                let rhs = r_stirling(n, k, r, RStirlingKind::Brace);
                if lhs != rhs {
                    return Some(cex(&format!("r={r} n={n} k={k}"), &lhs, &rhs));
                }
            }
        }
        None
    });
    rec.finish("2")
}

/// `V(n,k)|_{λ→mλ} = Σ_i C(i,k) m^{n-i} S1(n,i) (-r)_{i-k, mλ}`.
fn suite_3(opts: &SuiteOptions) -> SuiteReport {
    let (m, r) = (opts.m, &opts.r);
    let v = whitney_triangle(WhitneyKind::First, m, r);
    let m_rat = rat(m as i64);
    let step = lambda().scale(&m_rat); // mλ
    let neg_r = LambdaPoly::constant(-r.clone());
    let mut rec = Recorder::new();
    rec.run("first-kind via degenerate Stirling numbers", || {
        for n in 0..=opts.nmax as i64 {
            for k in 0..=n {
                let lhs = lambda_substitute(&v.entry(n, k), &m_rat);
                let mut rhs = LambdaPoly::zero();
                for i in k..=n {
                    let c = binomial(i as u64, k) * num::pow(m_rat.clone(), (n - i) as usize);
                    let s1 = stirling_degenerate(n, i, StirlingKind::First);
                    let ff = falling_factorial_at(&neg_r, (i - k) as usize, &step);
                    rhs = &rhs + &(&s1 * &ff).scale(&c);
                }
                if lhs != rhs {
                    return Some(cex(&format!("m={m} r={r} n={n} k={k}"), &lhs, &rhs));
                }
            }
        }
        None
    });
    rec.finish("3")
}

/// `W(n,k) = Σ_i C(n,i) (r)_{n-i,λ} m^{i-k} S2(i,k)|_{λ→λ/m}`.
fn suite_4(opts: &SuiteOptions) -> SuiteReport {
    let (m, r) = (opts.m, &opts.r);
    let w = whitney_triangle(WhitneyKind::Second, m, r);
    let minv = rat(m as i64).recip();
    let r_poly = LambdaPoly::constant(r.clone());
    let mut rec = Recorder::new();
    rec.run("second-kind via degenerate Stirling numbers", || {
        for n in 0..=opts.nmax as i64 {
            for k in 0..=n {
                let lhs = w.entry(n, k);
                let mut rhs = LambdaPoly::zero();
                for i in k..=n {
                    let c = binomial(n as u64, i);
                    let ff = falling_factorial_at(&r_poly, (n - i) as usize, &lambda());
                    // m^{i-k} stays exact for i >= k
                    let scale = num::pow(rat(m as i64), (i - k) as usize);
                    let s2 =
                        lambda_substitute(&stirling_degenerate(i, k, StirlingKind::Second), &minv);
                    rhs = &rhs + &(&ff * &s2).scale(&(c * scale));
                }
                if lhs != rhs {
                    return Some(cex(&format!("m={m} r={r} n={n} k={k}"), &lhs, &rhs));
                }
            }
        }
        None
    });
    rec.finish("4")
}

/// r-Stirling numbers from plain degenerate Stirling numbers (m = 1):
/// bracket via the unsigned first kind, brace via the second kind.
fn suite_5(opts: &SuiteOptions) -> SuiteReport {
    let r = &opts.r;
    let neg_r = LambdaPoly::constant(-r.clone());
    let r_poly = LambdaPoly::constant(r.clone());
    let mut rec = Recorder::new();
    rec.run("bracket via unsigned degenerate first kind", || {
        for n in 0..=opts.nmax as i64 {
            for k in 0..=n {
                let lhs = r_stirling(n, k, r, RStirlingKind::Bracket);
                let mut rhs = LambdaPoly::zero();
                for i in k..=n {
                    let sign = if (i - k) % 2 == 0 { rat(1) } else { rat(-1) };
                    let c = binomial(i as u64, k) * sign;
                    let ff = falling_factorial_at(&neg_r, (i - k) as usize, &lambda());
                    rhs = &rhs + &(&ff * &unsigned_stirling1_degenerate(n, i)).scale(&c);
                }
                if lhs != rhs {
                    return Some(cex(&format!("r={r} n={n} k={k}"), &lhs, &rhs));
                }
            }
        }
        None
    });
    rec.run("brace via degenerate second kind", || {
        for n in 0..=opts.nmax as i64 {
            for k in 0..=n {
                let lhs = r_stirling(n, k, r, RStirlingKind::Brace);
                let mut rhs = LambdaPoly::zero();
                for i in k..=n {
                    let c = binomial(n as u64, i);
                    let ff = falling_factorial_at(&r_poly, (n - i) as usize, &lambda());
                    rhs = &rhs + &(&ff * &stirling_degenerate(i, k, StirlingKind::Second)).scale(&c);
                }
                if lhs != rhs {
                    return Some(cex(&format!("r={r} n={n} k={k}"), &lhs, &rhs));
                }
            }
        }
        None
    });
    rec.finish("5")
}

/// First-kind recurrence route against the basis-conversion oracle.
fn suite_6(opts: &SuiteOptions) -> SuiteReport {
    let (m, r) = (opts.m, &opts.r);
    let v = whitney_triangle(WhitneyKind::First, m, r);
    let mut rec = Recorder::new();
    rec.run("first-kind recurrence = oracle expansion", || {
        for n in 0..=opts.nmax {
            let row = oracle::oracle_whitney(m, r, n, WhitneyKind::First);
            for (k, expect) in row.iter().enumerate() {
                let got = v.entry(n as i64, k as i64);
                if &got != expect {
                    return Some(cex(&format!("m={m} r={r} n={n} k={k}"), &got, expect));
                }
            }
        }
        None
    });
    rec.finish("6")
}

/// Second-kind recurrence route against the oracle and the closed form.
fn suite_7(opts: &SuiteOptions) -> SuiteReport {
    let (m, r) = (opts.m, &opts.r);
    let w = whitney_triangle(WhitneyKind::Second, m, r);
    let mut rec = Recorder::new();
    rec.run("second-kind recurrence = oracle expansion", || {
        for n in 0..=opts.nmax {
            let row = oracle::oracle_whitney(m, r, n, WhitneyKind::Second);
            for (k, expect) in row.iter().enumerate() {
                let got = w.entry(n as i64, k as i64);
                if &got != expect {
                    return Some(cex(&format!("m={m} r={r} n={n} k={k}"), &got, expect));
                }
            }
        }
        None
    });
    rec.run("second-kind recurrence = finite-difference closed form", || {
        for n in 0..=opts.nmax {
            for k in 0..=n {
                let got = w.entry(n as i64, k as i64);
                let expect = explicit_whitney_second(m, r, n, k);
                if got != expect {
                    return Some(cex(&format!("m={m} r={r} n={n} k={k}"), &got, &expect));
                }
            }
        }
        None
    });
    rec.finish("7")
}

fn bracket_recurrence_cex(opts: &SuiteOptions) -> Option<String> {
    let r = &opts.r;
    for n in 0..opts.nmax as i64 {
        for k in 0..=(n + 1) {
            let lhs = r_stirling(n + 1, k, r, RStirlingKind::Bracket);
            let weight = LambdaPoly::new(vec![r + rat(n), rat(-k)]);
            let rhs = &r_stirling(n, k - 1, r, RStirlingKind::Bracket)
                + &(&weight * &r_stirling(n, k, r, RStirlingKind::Bracket));
            if lhs != rhs {
                return Some(cex(&format!("r={r} n={n} k={k}"), &lhs, &rhs));
            }
        }
    }
    None
}

fn brace_recurrence_cex(opts: &SuiteOptions) -> Option<String> {
    let r = &opts.r;
    for n in 0..opts.nmax as i64 {
        for k in 0..=(n + 1) {
            let lhs = r_stirling(n + 1, k, r, RStirlingKind::Brace);
            let weight = LambdaPoly::new(vec![r + rat(k), rat(-n)]);
            let rhs = &r_stirling(n, k - 1, r, RStirlingKind::Brace)
                + &(&weight * &r_stirling(n, k, r, RStirlingKind::Brace));
            if lhs != rhs {
                return Some(cex(&format!("r={r} n={n} k={k}"), &lhs, &rhs));
            }
        }
    }
    None
}

/// Two-term recurrences of the r-Stirling numbers, checked on values that
/// were computed by the signed-Whitney route, not by these recurrences.
fn suite_8(opts: &SuiteOptions) -> SuiteReport {
    let mut rec = Recorder::new();
    rec.run("bracket recurrence (m=1)", || bracket_recurrence_cex(opts));
    rec.run("brace recurrence (m=1)", || brace_recurrence_cex(opts));
    rec.finish("8")
}

/// First-kind parameter shift: the r+1 triangle from the r triangle.
fn suite_9(opts: &SuiteOptions) -> SuiteReport {
    let (m, r) = (opts.m, &opts.r);
    let params = TriangleParams::new(Family::WhitneyFirst, m, r.clone()).expect("validated");
    let r_up = r + rat(1);
    let direct = whitney_triangle(WhitneyKind::First, m, &r_up);
    let mut rec = Recorder::new();
    rec.run("first-kind shift sum", || {
        for n in 0..=opts.nmax {
            for k in 0..=n {
                let got = shift_r(&params, n, k);
                let expect = direct.entry(n as i64, k as i64);
                if got != expect {
                    return Some(cex(&format!("m={m} r={r} n={n} k={k}"), &got, &expect));
                }
            }
        }
        None
    });
    rec.finish("9")
}

/// Second-kind parameter shift.
fn suite_10(opts: &SuiteOptions) -> SuiteReport {
    let (m, r) = (opts.m, &opts.r);
    let params = TriangleParams::new(Family::WhitneySecond, m, r.clone()).expect("validated");
    let r_up = r + rat(1);
    let direct = whitney_triangle(WhitneyKind::Second, m, &r_up);
    let mut rec = Recorder::new();
    rec.run("second-kind shift sum", || {
        for n in 0..=opts.nmax {
            for k in 0..=n {
                let got = shift_r(&params, n, k);
                let expect = direct.entry(n as i64, k as i64);
                if got != expect {
                    return Some(cex(&format!("m={m} r={r} n={n} k={k}"), &got, &expect));
                }
            }
        }
        None
    });
    rec.finish("10")
}

/// r-Stirling parameter shifts (m = 1), both kinds.
fn suite_11(opts: &SuiteOptions) -> SuiteReport {
    let r = &opts.r;
    let r_up = r + rat(1);
    let mut rec = Recorder::new();
    rec.run("bracket shift sum", || {
        let params = TriangleParams::new(Family::RStirlingBracket, 1, r.clone()).expect("m=1");
        for n in 0..=opts.nmax {
            for k in 0..=n {
                let got = shift_r(&params, n, k);
                let expect = r_stirling(n as i64, k as i64, &r_up, RStirlingKind::Bracket);
                if got != expect {
                    return Some(cex(&format!("r={r} n={n} k={k}"), &got, &expect));
                }
            }
        }
        None
    });
    rec.run("brace shift sum", || {
        let params = TriangleParams::new(Family::RStirlingBrace, 1, r.clone()).expect("m=1");
        for n in 0..=opts.nmax {
            for k in 0..=n {
                let got = shift_r(&params, n, k);
                let expect = r_stirling(n as i64, k as i64, &r_up, RStirlingKind::Brace);
                if got != expect {
                    return Some(cex(&format!("r={r} n={n} k={k}"), &got, &expect));
                }
            }
        }
        None
    });
    rec.finish("11")
}

/// Orthogonality: both products of the W and V matrices are the identity.
fn suite_12(opts: &SuiteOptions) -> SuiteReport {
    let (m, r) = (opts.m, &opts.r);
    let w = whitney_triangle(WhitneyKind::Second, m, r);
    let v = whitney_triangle(WhitneyKind::First, m, r);
    let mut rec = Recorder::new();
    let run_product = |label: &str, a: &Triangle, b: &Triangle| {
        let outcome = (|| {
            for n in 0..=opts.nmax as i64 {
                for j in 0..=n {
                    let mut sum = LambdaPoly::zero();
                    for k in j..=n {
                        sum = &sum + &(&a.entry(n, k) * &b.entry(k, j));
                    }
                    let expect = if n == j {
                        LambdaPoly::one()
                    } else {
                        LambdaPoly::zero()
                    };
                    if sum != expect {
                        return Some(cex(&format!("m={m} r={r} n={n} j={j}"), &sum, &expect));
                    }
                }
            }
            None
        })();
        (label.to_string(), outcome)
    };
    let (label, outcome) = run_product("W·V = identity", &w, &v);
    rec.checks.push(CheckResult {
        label,
        passed: outcome.is_none(),
        counterexample: outcome,
    });
    let (label, outcome) = run_product("V·W = identity", &v, &w);
    rec.checks.push(CheckResult {
        label,
        passed: outcome.is_none(),
        counterexample: outcome,
    });
    rec.finish("12")
}

/// Tiny deterministic generator for the inversion round-trips.
struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn small_rational(&mut self) -> Rational {
        let p = (self.next() % 19) as i64 - 9;
        let q = (self.next() % 4) as i64 + 1;
        ratio(p, q)
    }
}

fn random_sequence(rng: &mut XorShift, max_len: usize) -> Vec<LambdaPoly> {
    let len = (rng.next() as usize % max_len) + 1;
    (0..len)
        .map(|_| {
            LambdaPoly::new(vec![rng.small_rational(), rng.small_rational()])
        })
        .collect()
}

/// Inversion: applying the second-kind transform then the first-kind
/// transform (and vice versa) returns the original sequence.
fn suite_13(opts: &SuiteOptions) -> SuiteReport {
    let (m, r) = (opts.m, &opts.r);
    let mut rec = Recorder::new();
    rec.run("transform round-trips", || {
        let mut rng = XorShift(0x5eed_1234_abcd_9876);
        for trial in 0..20 {
            let seq = random_sequence(&mut rng, opts.nmax.max(1).min(12));
            let g = dowling::transform(m, r, &seq, TransformKind::SecondKind);
            let back = dowling::transform(m, r, &g, TransformKind::FirstKind);
            if back != seq {
                return Some(format!("m={m} r={r} trial={trial} (second then first)"));
            }
            let f = dowling::transform(m, r, &seq, TransformKind::FirstKind);
            let back = dowling::transform(m, r, &f, TransformKind::SecondKind);
            if back != seq {
                return Some(format!("m={m} r={r} trial={trial} (first then second)"));
            }
        }
        None
    });
    rec.finish("13")
}

/// The exponentially-weighted series evaluator against exact row-polynomial
/// evaluation, within 1e-9.
fn suite_14(opts: &SuiteOptions) -> SuiteReport {
    let (m, r) = (opts.m, &opts.r);
    let tol = 1e-9;
    let mut rec = Recorder::new();
    rec.run("series evaluation within tolerance", || {
        use num::ToPrimitive;
        for n in 0..=opts.nmax.min(8) {
            let d = dowling::dowling_poly(m, r, n);
            for x in [0.5f64, 1.0, 2.0] {
                for (lam_f, lam_q) in [(0.0, rat(0)), (0.5, ratio(1, 2)), (1.0, rat(1))] {
                    let got = match dowling::dobinski_eval(m, r, n, x, lam_f, tol) {
                        Ok(v) => v,
                        Err(e) => return Some(format!("n={n} x={x} λ={lam_f}: {e}")),
                    };
                    let exact = d
                        .eval(&Rational::from_float(x).expect("finite"), &lam_q)
                        .to_f64()
                        .expect("in f64 range");
                    if (got - exact).abs() > tol {
                        return Some(format!(
                            "m={m} r={r} n={n} x={x} λ={lam_f}: series={got}, exact={exact}"
                        ));
                    }
                }
            }
        }
        None
    });
    rec.finish("14")
}

/// Finite-difference closed form against the recurrence.
fn suite_15(opts: &SuiteOptions) -> SuiteReport {
    let (m, r) = (opts.m, &opts.r);
    let w = whitney_triangle(WhitneyKind::Second, m, r);
    let mut rec = Recorder::new();
    rec.run("closed form = recurrence", || {
        for n in 0..=opts.nmax {
            for k in 0..=n {
                let got = explicit_whitney_second(m, r, n, k);
                let expect = w.entry(n as i64, k as i64);
                if got != expect {
                    return Some(cex(&format!("m={m} r={r} n={n} k={k}"), &got, &expect));
                }
            }
        }
        None
    });
    rec.run("difference operator = recurrence", || {
        for n in 0..=opts.nmax {
            for k in 0..=n {
                let got = dowling::difference_formula(m, r, n, k);
                let expect = w.entry(n as i64, k as i64);
                if got != expect {
                    return Some(cex(&format!("m={m} r={r} n={n} k={k}"), &got, &expect));
                }
            }
        }
        None
    });
    rec.finish("15")
}

/// Row-convolution recurrence for the second kind.
fn suite_16(opts: &SuiteOptions) -> SuiteReport {
    let (m, r) = (opts.m, &opts.r);
    let mut rec = Recorder::new();
    rec.run("row-convolution recurrence", || {
        for n in 1..=opts.nmax {
            for k in 1..=n {
                if !recurrence16_check(m, r, n, k) {
                    return Some(format!("m={m} r={r} n={n} k={k}"));
                }
            }
        }
        None
    });
    rec.finish("16")
}

/// Boundary sum: `Σ_i S1(n,i)|_{λ→λ/m} m^{n-i} (-r)_{i,λ}` equals both
/// `(-1)^n ∏_{j<n}(mj+r)` and the first-kind boundary column `V(n,0)`.
fn suite_48(opts: &SuiteOptions) -> SuiteReport {
    let (m, r) = (opts.m, &opts.r);
    let minv = rat(m as i64).recip();
    let neg_r = LambdaPoly::constant(-r.clone());
    let v = whitney_triangle(WhitneyKind::First, m, r);
    let mut rec = Recorder::new();
    rec.run("boundary-column sum identity", || {
        for n in 0..=opts.nmax as i64 {
            let mut sum = LambdaPoly::zero();
            for i in 0..=n {
                let s1 = lambda_substitute(&stirling_degenerate(n, i, StirlingKind::First), &minv);
                let ff = falling_factorial_at(&neg_r, i as usize, &lambda());
                let scale = num::pow(rat(m as i64), (n - i) as usize);
                sum = &sum + &(&s1 * &ff).scale(&scale);
            }
            let mut product = rat(1);
            for j in 0..n {
                product *= rat(m as i64) * rat(j) + r;
            }
            if n % 2 == 1 {
                product = -product;
            }
            let expect = LambdaPoly::constant(product);
            if sum != expect {
                return Some(cex(&format!("m={m} r={r} n={n}"), &sum, &expect));
            }
            let boundary = v.entry(n, 0);
            if boundary != expect {
                return Some(cex(&format!("m={m} r={r} n={n} (V(n,0))"), &boundary, &expect));
            }
        }
        None
    });
    rec.finish("48")
}

/// Bracket recurrence alone (the first half of suite 8).
fn suite_52(opts: &SuiteOptions) -> SuiteReport {
    let mut rec = Recorder::new();
    rec.run("bracket recurrence (m=1)", || bracket_recurrence_cex(opts));
    rec.finish("52")
}

/// Brace recurrence alone (the second half of suite 8).
fn suite_53(opts: &SuiteOptions) -> SuiteReport {
    let mut rec = Recorder::new();
    rec.run("brace recurrence (m=1)", || brace_recurrence_cex(opts));
    rec.finish("53")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_on_a_small_grid() {
        for (m, r) in [(1u32, rat(0)), (2, rat(1)), (3, ratio(1, 2))] {
            let opts = SuiteOptions { nmax: 5, m, r };
            for report in run_all(&opts) {
                assert!(
                    report.all_passed(),
                    "suite {} failed: {:?}",
                    report.id,
                    report.first_failure()
                );
            }
        }
    }

    #[test]
    fn unknown_ids_are_rejected() {
        let opts = SuiteOptions {
            nmax: 3,
            m: 1,
            r: rat(0),
        };
        assert!(run_suite("17", &opts).is_none());
        assert!(run_suite("bogus", &opts).is_none());
        assert_eq!(known_ids().len(), 19);
    }
}
