//! Invariant suites shared by the `verify` command and the benches.
//!
//! Each suite returns one [`Check`] per case in a fixed order; cases run in
//! parallel but the output order never depends on scheduling.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::poly::tpoly;
use crate::exact::rat::{big, int, rat, Rat};
use crate::exact::trig::{trig_from_w_poly, trig_mul_cos3};
use crate::genfun::{row, RefinedRow};
use crate::kernel::{
    beta_even_closed, f_closed, f_even_closed, f_even_closed_reversed, f_odd_closed,
    f_solve_linear, ratio_identity, reconstruct_row_from_f, verify_root_multiplicity,
    verify_shift_sum, KernelProblem,
};
use crate::oracle::{enumerate, OracleMode, BRUTE_FORCE_MAX_ORDER};
use crate::recurrences::{
    a3_total, f_trig_direct, g_poly, phi, phi_special, total_ratio, Family, GRoute, SpecialPoint,
};

/// Plain ASM counts `A(n)` for `n = 1..=7`.
pub const ASM_NUMBERS: [u64; 7] = [1, 2, 7, 42, 429, 7436, 218348];

/// Largest order the kernel suite solves by linear algebra.
pub const KERNEL_MAX_ORDER: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Oracle,
    Recurrence,
    Genfun,
    Kernel,
    SpecialPoints,
    RatioIdentity,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Oracle,
        Suite::Recurrence,
        Suite::Genfun,
        Suite::Kernel,
        Suite::SpecialPoints,
        Suite::RatioIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Oracle => "oracle",
            Suite::Recurrence => "recurrence",
            Suite::Genfun => "genfun",
            Suite::Kernel => "kernel",
            Suite::SpecialPoints => "special-points",
            Suite::RatioIdentity => "ratio-identity",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::EACH)
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

/// Size limits for a verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest `nu` for the recurrence, kernel-ladder and special-point checks.
    pub nu_max: usize,
    /// Largest order enumerated by the oracle.
    pub oracle_n_max: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            nu_max: 10,
            oracle_n_max: 6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub case: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(
        suite: Suite,
        case: impl Into<String>,
        outcome: Result<std::result::Result<(), String>>,
    ) -> Self {
        let (passed, detail) = match outcome {
            Ok(Ok(())) => (true, String::new()),
            Ok(Err(why)) => (false, why),
            Err(e) => (false, e.to_string()),
        };
        Check {
            suite,
            case: case.into(),
            passed,
            detail,
        }
    }
}

fn expect_eq<T: PartialEq + fmt::Debug>(got: T, want: T) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("got {got:?}, expected {want:?}"))
    }
}

fn expect(cond: bool, why: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn counts(r: &RefinedRow) -> Vec<String> {
    r.counts.iter().map(ToString::to_string).collect()
}

/// Runs `suite` (every suite for [`Suite::All`]).
pub fn run(suite: Suite, bounds: Bounds) -> Vec<Check> {
    match suite {
        Suite::All => Suite::EACH.iter().flat_map(|&s| run(s, bounds)).collect(),
        Suite::Oracle => oracle_suite(bounds),
        Suite::Recurrence => recurrence_suite(bounds),
        Suite::Genfun => genfun_suite(bounds),
        Suite::Kernel => kernel_suite(bounds),
        Suite::SpecialPoints => special_point_suite(bounds),
        Suite::RatioIdentity => ratio_identity_suite(bounds),
    }
}

fn oracle_suite(b: Bounds) -> Vec<Check> {
    let s = Suite::Oracle;
    let ns: Vec<usize> = (1..=b.oracle_n_max).collect();
    let mut checks: Vec<Check> = ns
        .par_iter()
        .map(|&n| {
            let outcome = (|| {
                let formula = row(n)?;
                let dp = enumerate(n, 3, OracleMode::Dp)?;
                if dp != formula {
                    return Ok(Err(format!(
                        "dp {:?} vs formula {:?}",
                        counts(&dp),
                        counts(&formula)
                    )));
                }
                if n <= BRUTE_FORCE_MAX_ORDER {
                    let brute = enumerate(n, 3, OracleMode::BruteForce)?;
                    if brute != dp {
                        return Ok(Err(format!(
                            "brute force {:?} vs dp {:?}",
                            counts(&brute),
                            counts(&dp)
                        )));
                    }
                }
                Ok(Ok(()))
            })();
            Check::new(s, format!("rows-x3 n={n}"), outcome)
        })
        .collect();
    for (i, &want) in ASM_NUMBERS.iter().enumerate().take(b.oracle_n_max) {
        let n = i + 1;
        let outcome =
            enumerate(n, 1, OracleMode::Dp).map(|r| expect_eq(r.total, BigUint::from(want)));
        checks.push(Check::new(s, format!("asm-count n={n}"), outcome));
    }
    for x in 1..=3u64 {
        for n in 2..=b.oracle_n_max.min(BRUTE_FORCE_MAX_ORDER) {
            let outcome = (|| {
                let brute = enumerate(n, x, OracleMode::BruteForce)?;
                let dp = enumerate(n, x, OracleMode::Dp)?;
                let smaller = enumerate(n - 1, x, OracleMode::Dp)?;
                Ok(expect_eq(&brute, &dp)
                    .and(expect_eq(&dp.counts[0], &smaller.total))
                    .and(expect(dp.is_palindromic(), || {
                        "row is not palindromic".into()
                    })))
            })();
            checks.push(Check::new(s, format!("modes x={x} n={n}"), outcome));
        }
    }
    checks
}

fn recurrence_suite(b: Bounds) -> Vec<Check> {
    let s = Suite::Recurrence;
    let cases: Vec<(Family, usize)> = Family::ALL
        .iter()
        .flat_map(|&f| (0..=b.nu_max).map(move |nu| (f, nu)))
        .collect();
    let mut checks: Vec<Check> = cases
        .par_iter()
        .flat_map_iter(|&(family, nu)| {
            let j = family.j();
            let routes = (|| {
                Ok(expect_eq(
                    g_poly(family, nu, GRoute::Recurrence)?,
                    g_poly(family, nu, GRoute::Substitution)?,
                ))
            })();
            let quotient = (|| {
                let expanded = trig_from_w_poly(&phi(family, nu)?, 2 * nu as u32 + 1);
                Ok(expect_eq(expanded, f_trig_direct(family, nu)))
            })();
            let mut out = vec![
                Check::new(s, format!("g-routes j={j} nu={nu}"), routes),
                Check::new(s, format!("quotient j={j} nu={nu}"), quotient),
            ];
            if nu >= 1 {
                // 9nu(nu+1) F_{nu+1} - 18nu(2nu+1) cos6u F_nu - 4(9nu^2-j^2) sin^2 6u F_{nu-1} = 0
                let nu_i = nu as i64;
                let next = f_trig_direct(family, nu + 1).scale(&int(9 * nu_i * (nu_i + 1)));
                let mid = f_trig_direct(family, nu)
                    .mul_cos(6)
                    .scale(&int(18 * nu_i * (2 * nu_i + 1)));
                let prev = f_trig_direct(family, nu - 1)
                    .mul_sin_squared(6)
                    .scale(&int(4 * (9 * nu_i * nu_i - j * j)));
                let residual = &(&next - &mid) - &prev;
                out.push(Check::new(
                    s,
                    format!("u-recurrence j={j} nu={nu}"),
                    Ok(expect(residual.is_zero(), || {
                        format!("residual {residual}")
                    })),
                ));
            }
            out
        })
        .collect();
    let n_max = 2 * b.nu_max + 2;
    for n in 2..=n_max {
        let outcome = (|| {
            let ratio = big(a3_total(n)?) / big(a3_total(n - 1)?);
            Ok(expect_eq(ratio, total_ratio(n)))
        })();
        checks.push(Check::new(s, format!("total-ratio n={n}"), outcome));
    }
    for nu in 1..=b.nu_max {
        let outcome = (|| {
            let lhs = a3_total(2 * nu + 1)? * a3_total(2 * nu - 1)? * BigUint::from(4u32);
            let even = a3_total(2 * nu)?;
            Ok(expect_eq(lhs, &even * &even * BigUint::from(9u32)))
        })();
        checks.push(Check::new(s, format!("total-cross nu={nu}"), outcome));
    }
    checks
}

fn genfun_suite(b: Bounds) -> Vec<Check> {
    let s = Suite::Genfun;
    let n_max = 2 * b.nu_max + 2;
    let ns: Vec<usize> = (1..=n_max).collect();
    let mut checks: Vec<Check> = ns
        .par_iter()
        .map(|&n| {
            let outcome = (|| {
                let r = row(n)?;
                let total = a3_total(n)?;
                let first = if n >= 2 {
                    a3_total(n - 1)?
                } else {
                    BigUint::one()
                };
                Ok(expect(r.is_palindromic(), || "not palindromic".into())
                    .and(expect_eq(&r.total, &total))
                    .and(expect_eq(&r.counts[0], &first))
                    .and(expect_eq(r.normalized().coeff_sum(), Rat::one())))
            })();
            Check::new(s, format!("row n={n}"), outcome)
        })
        .collect();
    for nu in 1..=b.nu_max {
        let outcome = (|| {
            let even = row(2 * nu)?;
            let odd = row(2 * nu + 1)?;
            let lhs = (&tpoly(&[9, 9]) * &odd.to_poly()).scale(&big(even.total.clone()));
            let rhs = (&tpoly(&[4, 10, 4]) * &even.to_poly()).scale(&big(odd.total.clone()));
            Ok(expect_eq(lhs, rhs))
        })();
        checks.push(Check::new(s, format!("even-odd nu={nu}"), outcome));
    }
    checks
}

fn kernel_suite(b: Bounds) -> Vec<Check> {
    let s = Suite::Kernel;
    let n_max = (2 * b.nu_max + 2).min(KERNEL_MAX_ORDER);
    let ns: Vec<usize> = (2..=n_max).collect();
    let mut checks: Vec<Check> = ns
        .par_iter()
        .flat_map_iter(|&n| {
            let solved = (|| {
                let problem = KernelProblem::new(n);
                let dim = problem.kernel().len();
                if dim != 1 {
                    return Ok(Err(format!("kernel dimension {dim}")));
                }
                let f = f_solve_linear(n)?;
                let closed = f_closed(n);
                Ok(expect_eq(&f, &closed)
                    .and(expect_eq(f.max_frequency(), Some(3 * n as u32 - 2)))
                    .and(expect(verify_shift_sum(&f), || {
                        "frequency divisible by 3".into()
                    }))
                    .and(expect(verify_root_multiplicity(&f, n), || {
                        "derivative does not vanish".into()
                    })))
            })();
            let rows = (|| Ok(expect_eq(reconstruct_row_from_f(n)?, row(n)?)))();
            [
                Check::new(s, format!("kernel n={n}"), solved),
                Check::new(s, format!("reconstruct n={n}"), rows),
            ]
        })
        .collect();
    for nu in 0..=b.nu_max {
        let ladder = trig_mul_cos3(&f_even_closed(nu));
        let outcome = Ok(expect(
            ladder.ratio_to(&f_odd_closed(nu + 1)).is_some(),
            || "cos 3u f_even is not proportional to f_odd".into(),
        ));
        checks.push(Check::new(s, format!("cos3-ladder nu={nu}"), outcome));
        let reversed = Ok(expect_eq(f_even_closed_reversed(nu), -&f_even_closed(nu)));
        checks.push(Check::new(s, format!("reversed-sum nu={nu}"), reversed));
    }
    for nu in 0..=(n_max - 2) / 2 {
        let outcome = (|| {
            let n = 2 * nu + 2;
            let problem = KernelProblem::new(n);
            let kernel = problem.kernel();
            let [beta] = kernel.as_slice() else {
                return Ok(Err(format!("kernel dimension {}", kernel.len())));
            };
            let ratio = ratio_identity(nu)?;
            let closed = beta_even_closed(nu, &ratio);
            let scale = &beta[0] / &closed[0];
            let scaled: Vec<Rat> = closed.iter().map(|c| c * &scale).collect();
            Ok(expect_eq(beta, &scaled)
                .and(expect_eq(ratio, rat(3 * nu as i64 + 1, 3 * nu as i64 + 2))))
        })();
        checks.push(Check::new(s, format!("beta-formulas nu={nu}"), outcome));
    }
    checks
}

fn special_point_suite(b: Bounds) -> Vec<Check> {
    let s = Suite::SpecialPoints;
    let mut checks = Vec::new();
    for family in Family::ALL {
        let j = family.j();
        for nu in 0..=b.nu_max {
            let outcome = (|| {
                let p = phi(family, nu)?;
                let mut res = Ok(());
                for point in [SpecialPoint::MinusHalf, SpecialPoint::MinusOne] {
                    res = res.and(expect_eq(
                        p.eval(&point.value()),
                        phi_special(family, nu, point),
                    ));
                }
                Ok(res)
            })();
            checks.push(Check::new(s, format!("closed-form j={j} nu={nu}"), outcome));
            let outcome = (|| {
                let nu_i = nu as i64;
                let here = phi(family, nu)?;
                let next = phi(family, nu + 1)?;
                let half = rat(-1, 2);
                // 3(nu+1) Phi_{nu+1}(-1/2) = 8(2nu+1) Phi_nu(-1/2)
                let mut res = expect_eq(
                    int(3 * (nu_i + 1)) * next.eval(&half),
                    int(8 * (2 * nu_i + 1)) * here.eval(&half),
                );
                if nu >= 1 {
                    // nu(2nu+1) Phi_nu(-1) = 2(9nu^2-j^2) Phi_{nu-1}(-1)
                    let prev = phi(family, nu - 1)?;
                    let m1 = int(-1);
                    res = res.and(expect_eq(
                        int(nu_i * (2 * nu_i + 1)) * here.eval(&m1),
                        int(2 * (9 * nu_i * nu_i - j * j)) * prev.eval(&m1),
                    ));
                }
                Ok(res)
            })();
            checks.push(Check::new(
                s,
                format!("reduced-recurrence j={j} nu={nu}"),
                outcome,
            ));
        }
    }
    checks
}

fn ratio_identity_suite(b: Bounds) -> Vec<Check> {
    let s = Suite::RatioIdentity;
    (0..=b.nu_max)
        .into_par_iter()
        .map(|nu| {
            let nu_i = nu as i64;
            let outcome = ratio_identity(nu).map(|r| expect_eq(r, rat(3 * nu_i + 1, 3 * nu_i + 2)));
            Check::new(s, format!("nu={nu}"), outcome)
        })
        .collect()
}

/// Whether every check passed.
pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}
