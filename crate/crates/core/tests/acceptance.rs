//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//! All comparisons are exact; there is no tolerance anywhere.

use std::process::{Command, ExitCode};

use num_bigint::BigInt;
use num_traits::One;

use frobenius_euler::egf_series::{exp_xt, frobenius_oracle, Polynomial};
use frobenius_euler::exact_arith::{factorial, multinomial, rat, weak_compositions, Rational};
use frobenius_euler::frobenius::{
    bernoulli_polynomial, fe_higher_number_formula, fe_higher_number_oracle, fe_higher_polynomial,
    fe_number, fe_numbers, Variant,
};
use frobenius_euler::stirling::{coeff_closed_form, triangle_recurrence};
use frobenius_euler::verifier::{
    verify_bernoulli_product, verify_carlitz, verify_carlitz_reciprocal, verify_corollary4,
    verify_corollary5, verify_product_multinomial, verify_theorem1, verify_theorem3, Verdict,
};

type Outcome = Result<String, String>;

fn r(n: i64, d: i64) -> Rational {
    rat(n, d).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&a| BigInt::from(a)).collect()
}

fn ac1_triangle() -> Outcome {
    let triangle = triangle_recurrence(12).map_err(|e| e.to_string())?;
    let mut compared = 0;
    for n in 1..=12usize {
        let row = triangle.row(n).ok_or(format!("row {n} missing"))?;
        ensure(row.len() == n, || format!("row {n} has {} entries", row.len()))?;
        for (k, a) in row.iter().enumerate() {
            let closed = coeff_closed_form(k, n).map_err(|e| e.to_string())?;
            ensure(closed.is_integer() && closed.numer() == a, || {
                format!("a_{k}({n}): recurrence {a}, closed form {closed}")
            })?;
            compared += 1;
        }
        ensure(row[0] == factorial(n - 1), || format!("a_0({n}) = {} != (N-1)!", row[0]))?;
        ensure(row[n - 1].is_one(), || format!("a_(N-1)({n}) = {} != 1", row[n - 1]))?;
    }
    ensure(triangle.row(3) == Some(&ints(&[2, 3, 1])[..]), || "row 3 != (2,3,1)".into())?;
    ensure(triangle.row(4) == Some(&ints(&[6, 11, 6, 1])[..]), || "row 4 != (6,11,6,1)".into())?;
    Ok(format!("{compared} entries, N <= 12, rows 3 and 4 match"))
}

/// `2/(e^t + 1)` by ordinary power-series division, independent of the
/// series module; returns `E_n = n! [t^n]`.
fn euler_numbers_by_division(n_max: usize) -> Vec<Rational> {
    let denom: Vec<Rational> = (0..=n_max)
        .map(|n| {
            let inv_fact = Rational::new(1, factorial(n)).unwrap();
            if n == 0 {
                inv_fact + r(1, 1)
            } else {
                inv_fact
            }
        })
        .collect();
    let mut q: Vec<Rational> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let numer = if n == 0 { r(2, 1) } else { r(0, 1) };
        let acc: Rational = (0..n).map(|k| &q[k] * &denom[n - k]).sum();
        q.push((numer - acc) * denom[0].recip().unwrap());
    }
    q.iter()
        .enumerate()
        .map(|(n, c)| c * &Rational::from(factorial(n)))
        .collect()
}

fn ac2_numbers() -> Outcome {
    let grid = [r(2, 1), r(-1, 1), r(1, 3), r(-5, 7)];
    for u in &grid {
        let oracle = frobenius_oracle(u, 16).map_err(|e| e.to_string())?;
        for n in 0..=16 {
            let h = fe_number(n, u).map_err(|e| e.to_string())?;
            ensure(Some(&h) == oracle.coeff(n), || {
                format!("u={u} n={n}: recurrence {h}, oracle {:?}", oracle.coeff(n))
            })?;
        }
    }
    let euler = euler_numbers_by_division(16);
    let column = fe_numbers(16, &r(-1, 1)).map_err(|e| e.to_string())?;
    ensure(column == euler, || format!("u=-1 column {column:?} != Euler {euler:?}"))?;
    let two = fe_numbers(4, &r(2, 1)).map_err(|e| e.to_string())?;
    let expected: Vec<Rational> = [1, 1, 3, 13, 75].iter().map(|&v| r(v, 1)).collect();
    ensure(two == expected, || format!("u=2 column starts {two:?}"))?;
    Ok("n <= 16 for 4 values of u; Euler column and 1,1,3,13,75 confirmed".into())
}

fn ac3_theorem1() -> Outcome {
    let grid = [r(2, 1), r(-1, 1), r(1, 3), r(-5, 7)];
    let mut runs = 0;
    for order in 1..=8usize {
        for u in &grid {
            let corrected = verify_theorem1(order, u, 16, Variant::Corrected).map_err(|e| e.to_string())?;
            ensure(corrected.verdict == Verdict::Pass, || {
                format!("corrected N={order} u={u}: {:?}", corrected.mismatches.first())
            })?;
            let printed = verify_theorem1(order, u, 16, Variant::AsPrinted).map_err(|e| e.to_string())?;
            let expect_pass = order % 2 == 1;
            ensure(printed.passed() == expect_pass, || {
                format!("as_printed N={order} u={u}: verdict {}", printed.verdict)
            })?;
            runs += 2;
        }
    }
    Ok(format!("{runs} runs at T=16; as_printed fails exactly for even N"))
}

fn ac4_theorem3_corollary4() -> Outcome {
    let grid = [r(2, 1), r(1, 3), r(-5, 7)];
    let mut points = 0;
    for u in &grid {
        let h = fe_numbers(8, u).map_err(|e| e.to_string())?;
        for order in 1..=5usize {
            for n in 0..=8usize {
                let formula = fe_higher_number_formula(n, order, u, Variant::Corrected).map_err(|e| e.to_string())?;
                let oracle = fe_higher_number_oracle(n, order, u).map_err(|e| e.to_string())?;
                let direct: Rational = weak_compositions(n, order)
                    .iter()
                    .map(|ls| {
                        let prod: Rational = ls.iter().map(|&l| h[l].clone()).product();
                        Rational::from(multinomial(n, ls).unwrap()) * prod
                    })
                    .sum();
                ensure(formula == oracle && oracle == direct, || {
                    format!("n={n} N={order} u={u}: formula {formula}, oracle {oracle}, direct {direct}")
                })?;
                for report in [
                    verify_theorem3(n, order, u, Variant::Corrected),
                    verify_corollary4(n, order, u, Variant::Corrected),
                ] {
                    let report = report.map_err(|e| e.to_string())?;
                    ensure(report.passed(), || format!("{} n={n} N={order} u={u} failed", report.identity))?;
                }
                points += 1;
            }
        }
    }
    Ok(format!("{points} points, formula = oracle = enumeration"))
}

fn ac5_polynomials() -> Outcome {
    let grid = [r(2, 1), r(1, 3)];
    let mut points = 0;
    for u in &grid {
        for order in 1..=4usize {
            // F_u(t, x)^N e^(xt) with x symbolic, for the Appell form.
            let symbolic = &frobenius_oracle(u, 8).map_err(|e| e.to_string())?.pow(order).to_polynomial_series()
                * &exp_xt(Polynomial::x(), 8);
            for n in 0..=8usize {
                let appell = fe_higher_polynomial(n, order, u).map_err(|e| e.to_string())?;
                ensure(symbolic.coeff(n) == Some(&appell), || {
                    format!("Appell form n={n} N={order} u={u}: {appell}")
                })?;
                for report in [
                    verify_corollary5(n, order, u, Variant::Corrected),
                    verify_product_multinomial(n, order, u),
                ] {
                    let report = report.map_err(|e| e.to_string())?;
                    ensure(report.passed(), || {
                        format!("{} n={n} N={order} u={u}: {:?}", report.identity, report.mismatches.first())
                    })?;
                }
                points += 1;
            }
        }
    }
    Ok(format!("{points} points, coefficientwise"))
}

fn ac6_carlitz() -> Outcome {
    let pairs = [(r(2, 1), r(3, 1)), (r(1, 2), r(1, 3)), (r(-2, 1), r(5, 1))];
    let one = Rational::one();
    let mut runs = 0;
    for (a, b) in &pairs {
        for m in 0..=6 {
            for n in 0..=6 {
                let report = verify_carlitz(m, n, a, b, Variant::Corrected).map_err(|e| e.to_string())?;
                ensure(report.passed(), || format!("m={m} n={n} alpha={a} beta={b}: {:?}", report.mismatches))?;
                runs += 1;
            }
        }
        let printed = verify_carlitz(0, 0, a, b, Variant::AsPrinted).map_err(|e| e.to_string())?;
        let expected = ((&one - &(b * b)) * (&one - &(a * b)).recip().unwrap()).to_string();
        ensure(
            printed.verdict == Verdict::Fail
                && printed.mismatches.len() == 1
                && printed.mismatches[0].at == "x^0"
                && printed.mismatches[0].rhs == expected,
            || format!("as_printed m=n=0 alpha={a} beta={b}: {:?}", printed.mismatches),
        )?;
    }
    Ok(format!("{runs} corrected runs pass; as_printed m=n=0 gives (1-b^2)/(1-ab)"))
}

fn ac7_bernoulli() -> Outcome {
    let mut runs = 0;
    for m in 1..=7usize {
        for n in 1..=(8 - m) {
            let report = verify_bernoulli_product(m, n).map_err(|e| e.to_string())?;
            ensure(report.passed(), || format!("m={m} n={n}: {:?}", report.mismatches))?;
            runs += 1;
        }
    }
    let square = &bernoulli_polynomial(1) * &bernoulli_polynomial(1);
    let expected = Polynomial::new(vec![r(1, 4), r(-1, 1), r(1, 1)]);
    ensure(square == expected, || format!("B_1(x)^2 = {square}"))?;
    Ok(format!("{runs} runs with m+n <= 8; B_1(x)^2 = {square}"))
}

fn ac8_audit_determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_frobenius-euler"))
            .arg("audit")
            .output()
            .map_err(|e| e.to_string())
    };
    let first = run()?;
    let second = run()?;
    ensure(first.stdout == second.stdout, || "audit outputs differ".into())?;
    ensure(first.status.code() == second.status.code(), || "exit codes differ".into())?;
    let json: serde_json::Value = serde_json::from_slice(&first.stdout).map_err(|e| e.to_string())?;
    let reports = json["reports"].as_array().ok_or("no reports array")?;
    let all_pass = reports.iter().all(|r| r["verdict"] == "pass");
    let expected = if all_pass { 0 } else { 1 };
    ensure(first.status.code() == Some(expected), || {
        format!("exit {:?}, expected {expected}", first.status.code())
    })?;
    Ok(format!(
        "{} bytes identical across runs, {} reports, exit {expected}",
        first.stdout.len(),
        reports.len()
    ))
}

fn ac9_carlitz_reciprocal() -> Outcome {
    let (mut pass, mut fail) = (0, 0);
    for alpha in [r(2, 1), r(1, 2), r(-2, 1)] {
        for m in 0..=4 {
            for n in 0..=4 {
                let report = verify_carlitz_reciprocal(m, n, &alpha).map_err(|e| e.to_string())?;
                ensure(report.is_consistent(), || format!("inconsistent report {report:?}"))?;
                match report.verdict {
                    Verdict::Pass => pass += 1,
                    _ => fail += 1,
                }
            }
        }
    }
    Ok(format!("75 reports self-consistent ({pass} pass, {fail} fail)"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1 triangle equivalence and boundaries", ac1_triangle),
        ("AC2 numbers agree with series oracle", ac2_numbers),
        ("AC3 power identity, corrected + sign audit", ac3_theorem1),
        ("AC4 higher-order numbers, three routes", ac4_theorem3_corollary4),
        ("AC5 higher-order polynomial identities", ac5_polynomials),
        ("AC6 Carlitz product (symmetric form)", ac6_carlitz),
        ("AC7 Bernoulli product", ac7_bernoulli),
        ("AC8 audit determinism and exit status", ac8_audit_determinism),
        ("AC9 reciprocal Carlitz audit", ac9_carlitz_reciprocal),
    ];
    let mut failed = 0;
    for (name, criterion) in criteria {
        match criterion() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
