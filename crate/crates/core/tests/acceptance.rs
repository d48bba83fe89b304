//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rayon::prelude::*;

use asm3_core::exact::poly::tpoly;
use asm3_core::exact::rat::{factorial_int, rat_pow};
use asm3_core::{
    a3_total, enumerate, f_closed, f_solve_linear, f_trig_direct, g_poly, phi, ratio_identity,
    reconstruct_row_from_f, row, trig_from_w_poly, verify_root_multiplicity, verify_shift_sum,
    Family, GRoute, KernelProblem, OracleMode,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn fact(n: usize) -> BigRational {
    BigRational::from_integer(factorial_int(n))
}

fn nat(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn err(e: asm3_core::Error) -> String {
    e.to_string()
}

/// 1. Formula, kernel and brute-force rows agree for n = 1..7.
fn oracle_refined() -> Outcome {
    (1..=7usize).into_par_iter().try_for_each(|n| {
        let formula = row(n).map_err(err)?;
        let kernel = reconstruct_row_from_f(n).map_err(err)?;
        let brute = enumerate(n, 3, OracleMode::BruteForce).map_err(err)?;
        ensure(formula == kernel && kernel == brute, || {
            format!(
                "n={n}: formula {:?}, kernel {:?}, brute force {:?}",
                formula.counts, kernel.counts, brute.counts
            )
        })
    })?;
    Ok("n=1..7, three routes identical".into())
}

/// 2. Formula rows equal DP rows for n = 8..12.
fn oracle_dp() -> Outcome {
    for n in 8..=12 {
        let formula = row(n).map_err(err)?;
        let dp = enumerate(n, 3, OracleMode::Dp).map_err(err)?;
        ensure(formula == dp, || {
            format!("n={n}: formula {:?}, dp {:?}", formula.counts, dp.counts)
        })?;
    }
    Ok("n=8..12".into())
}

/// 3. Totals, ratio formulas and the cross identity.
fn totals() -> Outcome {
    let expected = [1u64, 2, 9, 90, 2025, 102060];
    for (i, &e) in expected.iter().enumerate() {
        let n = i + 1;
        let got = a3_total(n).map_err(err)?;
        ensure(got == BigUint::from(e), || {
            format!("A({n};3) = {got}, expected {e}")
        })?;
        let dp = enumerate(n, 3, OracleMode::Dp).map_err(err)?.total;
        ensure(dp == got, || format!("oracle total {dp} for n={n}"))?;
    }
    let a = |n: usize| a3_total(n).map(|t| nat(&t)).map_err(err);
    for n in 2..=40usize {
        let nu = (n - 1) / 2;
        let three = rat_pow(&q(3, 1), nu);
        let want = if n % 2 == 0 {
            three * fact(nu) * fact(3 * nu + 2) / (fact(2 * nu + 1) * fact(2 * nu + 1))
        } else {
            three * fact(nu) * fact(3 * nu) / (fact(2 * nu) * fact(2 * nu))
        };
        let got = a(n)? / a(n - 1)?;
        ensure(got == want, || {
            format!("A({n})/A({}) = {got}, formula {want}", n - 1)
        })?;
    }
    // A(2nu+1)/A(2nu) = 9 A(2nu) / (4 A(2nu-1)), cleared of denominators
    for nu in 1..=20usize {
        let lhs = a(2 * nu + 1)? * a(2 * nu - 1)? * q(4, 1);
        let rhs = a(2 * nu)? * a(2 * nu)? * q(9, 1);
        ensure(lhs == rhs, || format!("cross identity fails at nu={nu}"))?;
    }
    Ok("A(1..6;3) = 1,2,9,90,2025,102060; ratios n<=40; 4*A(2nu+1)A(2nu-1) = 9*A(2nu)^2 for nu<=20".into())
}

/// 4. 9(t+1) A(2nu) G_{2nu+1} = 2(1+2t)(2+t) A(2nu+1) G_{2nu}.
fn even_odd_relation() -> Outcome {
    (1..=25usize).into_par_iter().try_for_each(|nu| {
        let even = row(2 * nu).map_err(err)?;
        let odd = row(2 * nu + 1).map_err(err)?;
        let lhs = (&tpoly(&[9, 9]) * &odd.to_poly()).scale(&nat(&even.total));
        let rhs = (&tpoly(&[4, 10, 4]) * &even.to_poly()).scale(&nat(&odd.total));
        ensure(lhs == rhs, || format!("nu={nu}: {lhs} vs {rhs}"))
    })?;
    Ok("nu=1..25".into())
}

/// 5. g by recurrence equals g by substitution.
fn g_routes() -> Outcome {
    for family in Family::ALL {
        for nu in 0..=30 {
            let a = g_poly(family, nu, GRoute::Recurrence).map_err(err)?;
            let b = g_poly(family, nu, GRoute::Substitution).map_err(err)?;
            ensure(a == b, || format!("j={} nu={nu}: {a} vs {b}", family.j()))?;
        }
    }
    Ok("j=1,2, nu=0..30".into())
}

/// 6. sin^(2nu+1)(2u) Phi_nu(cos 2u) expands to the direct sine sum.
fn quotient() -> Outcome {
    for family in Family::ALL {
        for nu in 0..=20usize {
            let p = phi(family, nu).map_err(err)?;
            let expanded = trig_from_w_poly(&p, 2 * nu as u32 + 1);
            let direct = f_trig_direct(family, nu);
            ensure(expanded == direct, || {
                format!("j={} nu={nu}: {expanded} vs {direct}", family.j())
            })?;
        }
    }
    Ok("j=1,2, nu=0..20".into())
}

/// 7. One-dimensional kernel spanned by the closed form.
fn kernel() -> Outcome {
    (2..=12usize).into_par_iter().try_for_each(|n| {
        let problem = KernelProblem::new(n);
        let basis = problem.kernel();
        ensure(basis.len() == 1, || {
            format!("n={n}: kernel dimension {}", basis.len())
        })?;
        let spanned = problem.to_trig(&basis[0]);
        let closed = f_closed(n);
        ensure(spanned.ratio_to(&closed).is_some(), || {
            format!("n={n}: {spanned} not a multiple of {closed}")
        })?;
        let f = f_solve_linear(n).map_err(err)?;
        ensure(f == closed, || {
            format!("n={n}: normalized solve {f} vs {closed}")
        })?;
        ensure(f.max_frequency() == Some(3 * n as u32 - 2), || {
            format!("n={n}: max frequency {:?}", f.max_frequency())
        })?;
        ensure(verify_shift_sum(&f), || format!("n={n}: shift sum"))?;
        ensure(verify_root_multiplicity(&f, n), || {
            format!("n={n}: root multiplicity")
        })
    })?;
    Ok("n=2..12".into())
}

/// 8. The binomial ratio identity.
fn ratio() -> Outcome {
    (0..=50usize).into_par_iter().try_for_each(|nu| {
        let got = ratio_identity(nu).map_err(err)?;
        let want = q(3 * nu as i64 + 1, 3 * nu as i64 + 2);
        ensure(got == want, || format!("nu={nu}: {got}"))
    })?;
    Ok("nu=0..50".into())
}

/// 9. Phi at -1/2 and -1 against closed forms, and the reduced recurrences.
fn special_points() -> Outcome {
    let half = q(-1, 2);
    let one = q(-1, 1);
    let four_thirds = q(4, 3);
    for family in Family::ALL {
        let j = family.j();
        for nu in 0..=30usize {
            let p = phi(family, nu).map_err(err)?;
            let power = rat_pow(&four_thirds, nu);
            let sign = if j == 1 { q(1, 1) } else { q(-1, 1) };
            let at_half = &sign * &power * fact(2 * nu) / (fact(nu) * fact(nu));
            ensure(p.eval(&half) == at_half, || {
                format!("j={j} nu={nu}: Phi(-1/2) = {}", p.eval(&half))
            })?;
            let at_one = if j == 1 {
                &power * fact(3 * nu + 1) / (fact(nu) * fact(2 * nu + 1))
            } else {
                -(&power * q(3 * nu as i64 + 2, 1) * fact(3 * nu) / (fact(nu) * fact(2 * nu + 1)))
            };
            ensure(p.eval(&one) == at_one, || {
                format!("j={j} nu={nu}: Phi(-1) = {}", p.eval(&one))
            })?;

            let nu_i = nu as i64;
            let next = phi(family, nu + 1).map_err(err)?;
            ensure(
                q(3 * (nu_i + 1), 1) * next.eval(&half) == q(8 * (2 * nu_i + 1), 1) * p.eval(&half),
                || format!("j={j} nu={nu}: reduced recurrence at -1/2"),
            )?;
            if nu >= 1 {
                let prev = phi(family, nu - 1).map_err(err)?;
                ensure(
                    q(nu_i * (2 * nu_i + 1), 1) * p.eval(&one)
                        == q(2 * (9 * nu_i * nu_i - j * j), 1) * prev.eval(&one),
                    || format!("j={j} nu={nu}: reduced recurrence at -1"),
                )?;
            }
        }
    }
    Ok("j=1,2, nu=0..30, closed forms and both reduced recurrences".into())
}

/// 10. Palindromic rows summing to A(n;3) with first entry A(n-1;3).
fn structure() -> Outcome {
    (1..=40usize).into_par_iter().try_for_each(|n| {
        let r = row(n).map_err(err)?;
        ensure(r.is_palindromic(), || format!("n={n}: not palindromic"))?;
        let total = a3_total(n).map_err(err)?;
        ensure(r.total == total, || {
            format!("n={n}: sum {} vs {total}", r.total)
        })?;
        let first = if n == 1 {
            BigUint::from(1u32)
        } else {
            a3_total(n - 1).map_err(err)?
        };
        ensure(r.counts[0] == first, || {
            format!("n={n}: first entry {}", r.counts[0])
        })
    })?;
    Ok("n=1..40".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("oracle equivalence, refined", oracle_refined),
        ("oracle equivalence, dp", oracle_dp),
        ("totals", totals),
        ("even/odd relation", even_odd_relation),
        ("g routes", g_routes),
        ("quotient property", quotient),
        ("kernel route", kernel),
        ("ratio identity", ratio),
        ("special points", special_points),
        ("structural invariants", structure),
    ];
    // libtest flags such as --nocapture are accepted and ignored
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = check();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed ({:.1}s)",
        criteria.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
