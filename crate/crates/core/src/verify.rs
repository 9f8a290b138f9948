//! Cross-checks between every exact route, the derangement table, the
//! step recursions and the game-tree oracle.
//!
//! [`VerifyInputs::compute`] gathers all sequences; [`run_checks`] compares
//! them. Keeping the two apart lets a caller corrupt an entry and watch the
//! matching check fail.

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::exact::{
    closed_form, derangements, gf_coefficients, solve_recursive, solve_telescoping, E_INV,
    FLOAT_SLACK,
};
use crate::oracle::{Oracle, PLAIN_DEPTH_LIMIT};
use crate::prob::{ratio, to_f64, Rational};
use crate::steps::{expected_steps, q_sequence};

/// Float check range for the gap to `e^-1`.
pub const FLOAT_GAP_MAX_N: usize = 20;

/// All sequences a verification run compares. Fields are public so tests can
/// tamper with them.
#[derive(Debug, Clone)]
pub struct VerifyInputs {
    pub n_max: usize,
    pub oracle_max: usize,
    /// `R_n` per method, `n = 0..=n_max`.
    pub recursive: Vec<Rational>,
    pub telescoping: Vec<Rational>,
    pub closed_form: Vec<Rational>,
    pub gf: Vec<Rational>,
    /// `d_n` and `n!`, `n = 0..=n_max`.
    pub derangements: Vec<BigUint>,
    pub factorials: Vec<BigUint>,
    /// `E(Z_n)` for `n = 1..=steps_max` (index 0 holds `E(Z_1)`).
    pub steps: Vec<Rational>,
    /// `E(Q_n)` for `n = 2..=steps_max` (index 0 holds `E(Q_2)`).
    pub q: Vec<Rational>,
    /// Oracle `D_n`, `n = 0..=oracle_max`.
    pub oracle_prob: Vec<Rational>,
    /// Oracle `D_n` without caching, `n = 0..=min(oracle_max, 10)`.
    pub oracle_prob_plain: Vec<Rational>,
    /// Oracle `E(Z_n)`, `n = 1..=oracle_max` (index 0 holds `n = 1`).
    pub oracle_steps: Vec<Rational>,
}

impl VerifyInputs {
    /// Exact tables are extended to `oracle_max` when it exceeds `n_max`, so
    /// every oracle value has an exact counterpart.
    pub fn compute(n_max: usize, oracle_max: usize) -> Result<Self> {
        let n_max = n_max.max(oracle_max);
        let values = |t: crate::exact::WinTable| -> Vec<Rational> {
            t.r_values().iter().map(|p| p.value().clone()).collect()
        };
        let der = derangements(n_max);
        let steps_max = n_max.max(oracle_max).max(2);
        let steps = expected_steps(steps_max)?;
        let memo = Oracle::memoized();
        let plain = Oracle::exhaustive();
        let oracle_prob = (0..=oracle_max)
            .map(|n| memo.win_prob(n).map(|p| p.into_inner()))
            .collect::<Result<_>>()?;
        let oracle_prob_plain = (0..=oracle_max.min(PLAIN_DEPTH_LIMIT))
            .map(|n| plain.win_prob(n).map(|p| p.into_inner()))
            .collect::<Result<_>>()?;
        let oracle_steps = (1..=oracle_max)
            .map(|n| memo.expected_steps(n))
            .collect::<Result<_>>()?;
        Ok(VerifyInputs {
            n_max,
            oracle_max,
            recursive: values(solve_recursive(n_max)),
            telescoping: values(solve_telescoping(n_max)),
            closed_form: (0..=n_max).map(|n| closed_form(n).into_inner()).collect(),
            gf: gf_coefficients(n_max)
                .into_iter()
                .map(|p| p.into_inner())
                .collect(),
            derangements: der.d().to_vec(),
            factorials: der.factorial().to_vec(),
            steps: steps.ez_values().to_vec(),
            q: q_sequence(steps_max)?,
            oracle_prob,
            oracle_prob_plain,
            oracle_steps,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    /// Stable identifier.
    pub id: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn outcome(id: &'static str, failure: Option<String>, scope: String) -> CheckOutcome {
    match failure {
        None => CheckOutcome {
            id,
            passed: true,
            detail: scope,
        },
        Some(why) => CheckOutcome {
            id,
            passed: false,
            detail: why,
        },
    }
}

fn first_mismatch(a: &[Rational], b: &[Rational], offset: usize) -> Option<String> {
    if a.len() != b.len() {
        return Some(format!("length {} vs {}", a.len(), b.len()));
    }
    a.iter()
        .zip(b)
        .position(|(x, y)| x != y)
        .map(|i| format!("mismatch at n={}: {} vs {}", i + offset, a[i], b[i]))
}

fn one_minus(r: &[Rational]) -> Vec<Rational> {
    r.iter().map(|x| Rational::one() - x).collect()
}

fn integer(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Runs every check. The order of the result is stable.
pub fn run_checks(inputs: &VerifyInputs) -> Vec<CheckOutcome> {
    let n_max = inputs.n_max;
    let range = format!("n=0..={n_max}");
    let mut out = Vec::new();

    let base = [ratio(0, 1), ratio(1, 1), ratio(1, 2)];
    let base_fail = base
        .iter()
        .enumerate()
        .take(n_max + 1)
        .find(|(n, v)| inputs.recursive.get(*n) != Some(v))
        .map(|(n, v)| format!("mismatch at n={n}: expected R_{n} = {v}"));
    out.push(outcome(
        "base-cases",
        base_fail,
        "R_0=0, R_1=1, R_2=1/2".into(),
    ));

    let range_fail = inputs
        .recursive
        .iter()
        .position(|r| *r < Rational::zero() || *r > Rational::one())
        .map(|n| format!("R_n outside [0,1] at n={n}"));
    out.push(outcome("probability-range", range_fail, range.clone()));

    let methods: [(&str, &Vec<Rational>); 4] = [
        ("recursive", &inputs.recursive),
        ("telescoping", &inputs.telescoping),
        ("closed-form", &inputs.closed_form),
        ("gf", &inputs.gf),
    ];
    const PAIR_IDS: [&str; 6] = [
        "recursive-vs-telescoping",
        "recursive-vs-closed-form",
        "recursive-vs-gf",
        "telescoping-vs-closed-form",
        "telescoping-vs-gf",
        "closed-form-vs-gf",
    ];
    let mut ids = PAIR_IDS.iter();
    for i in 0..methods.len() {
        for j in i + 1..methods.len() {
            let id = ids.next().expect("six pairs");
            debug_assert_eq!(*id, format!("{}-vs-{}", methods[i].0, methods[j].0));
            out.push(outcome(
                id,
                first_mismatch(methods[i].1, methods[j].1, 0),
                range.clone(),
            ));
        }
    }

    // R_n - R_{n-1} = (-1)^{n+1}/n!
    let diff_fail = (1..inputs.recursive.len()).find_map(|n| {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        let expect = Rational::new(
            BigInt::from(sign),
            BigInt::from(inputs.factorials.get(n)?.clone()),
        );
        (&inputs.recursive[n] - &inputs.recursive[n - 1] != expect)
            .then(|| format!("difference mismatch at n={n}"))
    });
    out.push(outcome(
        "telescoping-differences",
        diff_fail,
        format!("n=1..={n_max}"),
    ));

    let dn: Vec<Rational> = inputs
        .derangements
        .iter()
        .zip(&inputs.factorials)
        .map(|(d, f)| Rational::new(d.clone().into(), f.clone().into()))
        .collect();
    out.push(outcome(
        "dn-identity",
        first_mismatch(&one_minus(&inputs.recursive), &dn, 0),
        range.clone(),
    ));

    let oracle_range = format!("n=0..={}", inputs.oracle_max);
    let d_exact = one_minus(&inputs.recursive);
    let prefix = |len: usize| &d_exact[..len.min(d_exact.len())];
    out.push(outcome(
        "oracle-prob",
        first_mismatch(&inputs.oracle_prob, prefix(inputs.oracle_prob.len()), 0),
        oracle_range,
    ));
    out.push(outcome(
        "oracle-prob-exhaustive",
        first_mismatch(
            &inputs.oracle_prob_plain,
            prefix(inputs.oracle_prob_plain.len()),
            0,
        ),
        format!("n=0..={}", inputs.oracle_prob_plain.len().saturating_sub(1)),
    ));
    let steps_prefix = &inputs.steps[..inputs.oracle_steps.len().min(inputs.steps.len())];
    out.push(outcome(
        "oracle-steps",
        first_mismatch(&inputs.oracle_steps, steps_prefix, 1),
        format!("n=1..={}", inputs.oracle_max),
    ));

    let steps_max = inputs.q.len() + 1;
    let q_fail = if inputs.q.first().is_some_and(|q| !q.is_zero()) {
        Some("E(Q_2) is not 0; mismatch at n=2".to_string())
    } else {
        (3..=steps_max).find_map(|n| {
            let lhs = integer(n) * &inputs.q[n - 2];
            let rhs = Rational::one() - &inputs.q[n - 3];
            (lhs != rhs).then(|| format!("n*E(Q_n) != 1 - E(Q_(n-1)) at n={n}"))
        })
    };
    out.push(outcome("q-recursion", q_fail, format!("n=2..={steps_max}")));

    let diffs: Vec<Rational> = inputs.steps.windows(2).map(|w| &w[1] - &w[0]).collect();
    out.push(outcome(
        "q-vs-steps",
        first_mismatch(&inputs.q, &diffs, 2),
        format!("n=2..={steps_max}"),
    ));

    out.push(outcome(
        "alternating-bound",
        alternating_bound_failure(&d_exact, &inputs.factorials),
        format!("0<=n<m<={n_max}"),
    ));

    let float_fail = d_exact
        .iter()
        .take(FLOAT_GAP_MAX_N + 1)
        .enumerate()
        .find_map(|(n, d)| {
            let gap = (to_f64(d) - E_INV).abs();
            let bound = to_f64(&Rational::new(
                BigInt::one(),
                BigInt::from(inputs.factorials.get(n)?.clone() * (n + 1)),
            ));
            (gap > bound + FLOAT_SLACK).then(|| format!("gap {gap:e} exceeds bound at n={n}"))
        });
    out.push(outcome(
        "float-gap",
        float_fail,
        format!("n=0..={}", n_max.min(FLOAT_GAP_MAX_N)),
    ));

    out
}

/// Checks `|D_n - D_m| <= 1/(n+1)!` for every `n < m`.
///
/// All values are scaled by the lcm `L` of their denominators so they become
/// integers, and the test becomes `(n+1)! |x_n - x_m| <= L`. For each `n`
/// only the extreme values over `m > n` need comparing.
fn alternating_bound_failure(d: &[Rational], factorials: &[BigUint]) -> Option<String> {
    let last = d.len().checked_sub(1)?;
    let scale = d.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = d.iter().map(|x| x.numer() * (&scale / x.denom())).collect();
    // suffix extremes over m > n
    let mut hi = scaled[last].clone();
    let mut lo = scaled[last].clone();
    for n in (0..last).rev() {
        let Some(f) = factorials.get(n) else {
            return Some(format!("missing factorial at n={n}"));
        };
        let weight = BigInt::from(f.clone() * (n + 1));
        let x = &scaled[n];
        let spread = (x - &lo).abs().max((&hi - x).abs());
        if spread * &weight > scale {
            return Some(format!("bound violated at n={n}"));
        }
        if *x > hi {
            hi = x.clone();
        }
        if *x < lo {
            lo = x.clone();
        }
    }
    None
}

/// Human-readable report and the process exit code (0 all pass, 1 otherwise).
pub fn render(outcomes: &[CheckOutcome]) -> (String, i32) {
    let mut text = String::new();
    let passed = outcomes.iter().filter(|o| o.passed).count();
    for o in outcomes {
        let tag = if o.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(text, "{tag} {:<28} {}", o.id, o.detail);
    }
    let _ = writeln!(text, "{passed}/{} checks passed", outcomes.len());
    let code = if passed == outcomes.len() { 0 } else { 1 };
    (text, code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass_small() {
        let inputs = VerifyInputs::compute(30, 8).unwrap();
        let outcomes = run_checks(&inputs);
        for o in &outcomes {
            assert!(o.passed, "{} failed: {}", o.id, o.detail);
        }
        assert_eq!(outcomes.len(), 17);
        let (_, code) = render(&outcomes);
        assert_eq!(code, 0);
    }

    #[test]
    fn degenerate_sizes() {
        for (n, o) in [(0, 0), (1, 1), (2, 0), (0, 5)] {
            let inputs = VerifyInputs::compute(n, o).unwrap();
            for c in run_checks(&inputs) {
                assert!(c.passed, "n_max={n} oracle_max={o}: {} {}", c.id, c.detail);
            }
        }
    }

    #[test]
    fn corrupted_gf_entry_is_named() {
        let mut inputs = VerifyInputs::compute(20, 6).unwrap();
        inputs.gf[7] += ratio(1, 1_000_000);
        let outcomes = run_checks(&inputs);
        let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed).collect();
        let ids: Vec<_> = failed.iter().map(|o| o.id).collect();
        assert_eq!(
            ids,
            vec!["recursive-vs-gf", "telescoping-vs-gf", "closed-form-vs-gf"]
        );
        assert!(failed.iter().all(|o| o.detail.contains("n=7")));
        assert_eq!(render(&outcomes).1, 1);
    }

    #[test]
    fn corrupted_derangement_is_named() {
        let mut inputs = VerifyInputs::compute(12, 4).unwrap();
        inputs.derangements[9] += 1u32;
        let outcomes = run_checks(&inputs);
        let bad = outcomes.iter().find(|o| o.id == "dn-identity").unwrap();
        assert!(!bad.passed);
        assert!(bad.detail.contains("n=9"));
    }

    #[test]
    fn corrupted_oracle_step_is_named() {
        let mut inputs = VerifyInputs::compute(12, 8).unwrap();
        inputs.oracle_steps[4] = ratio(7, 3);
        let bad: Vec<_> = run_checks(&inputs)
            .into_iter()
            .filter(|o| !o.passed)
            .collect();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].id, "oracle-steps");
        assert!(bad[0].detail.contains("n=5"), "{}", bad[0].detail);
    }

    #[test]
    fn bound_check_catches_drift() {
        let inputs = VerifyInputs::compute(15, 0).unwrap();
        let mut d = one_minus(&inputs.recursive);
        assert!(alternating_bound_failure(&d, &inputs.factorials).is_none());
        d[15] += ratio(1, 1000);
        let msg = alternating_bound_failure(&d, &inputs.factorials).unwrap();
        assert!(msg.contains("n="));
    }
}
