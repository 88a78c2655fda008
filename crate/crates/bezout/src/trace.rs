//! Traced execution of the iterative gcd loop with mechanical runtime
//! checks at every loop boundary.
//!
//! A trace records the full 3×2 stack `[a b; c d; e f]` once before the
//! loop and once after every iteration, together with the quotient that
//! drove the iteration. Three checks audit it:
//!
//! - [`check_invariant`] re-verifies the two-clause loop condition on one
//!   row: `[a b] = [α β]·[[c,d],[e,f]]`, and `gcd(a, b) = gcd(α, β)`.
//! - [`check_exit`] verifies the final row yields `a = α·c + β·e` with
//!   `a` the true gcd.
//! - [`check_trace`] audits a whole trace: structure, every row's
//!   invariant, the step replay `(a, b) → (b, a mod b)`, strict descent
//!   of `b`, reconstruction of each accumulated coefficient matrix as the
//!   product of the recorded step matrices, and the exit condition.
//!
//! Failed checks are values, not errors: a [`CheckResult`] names the
//! violated clause and the row where it broke.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

use crate::egcd::{gcd, BezoutTriple, EgcdState};
use crate::error::Error;
use crate::matrix::{Mat2, Row2};
use crate::oracle::oracle_gcd;

/// State of the 3×2 stack at one loop boundary. `k = 0` is the state
/// before the first iteration; `q` is the quotient used to reach this
/// state (absent at `k = 0`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRow {
    pub k: u64,
    #[serde(with = "crate::dec::int_opt")]
    pub q: Option<BigInt>,
    #[serde(with = "crate::dec::nat")]
    pub a: BigUint,
    #[serde(with = "crate::dec::nat")]
    pub b: BigUint,
    #[serde(with = "crate::dec::int")]
    pub c: BigInt,
    #[serde(with = "crate::dec::int")]
    pub d: BigInt,
    #[serde(with = "crate::dec::int")]
    pub e: BigInt,
    #[serde(with = "crate::dec::int")]
    pub f: BigInt,
}

impl TraceRow {
    /// The accumulated coefficient matrix `[[c, d], [e, f]]` this row
    /// carries.
    pub fn coeff_matrix(&self) -> Mat2 {
        Mat2::new(
            self.c.clone(),
            self.d.clone(),
            self.e.clone(),
            self.f.clone(),
        )
    }
}

/// A full run of the iterative algorithm on `(alpha, beta)`: one row per
/// loop boundary plus the returned triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EgcdTrace {
    #[serde(with = "crate::dec::nat")]
    pub alpha: BigUint,
    #[serde(with = "crate::dec::nat")]
    pub beta: BigUint,
    pub steps: Vec<TraceRow>,
    pub result: BezoutTriple,
}

impl EgcdTrace {
    /// CSV rendering with header `k,q,a,b,c,d,e,f`; the `q` field is
    /// empty on the `k = 0` row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,q,a,b,c,d,e,f\n");
        for r in &self.steps {
            let q = r.q.as_ref().map(BigInt::to_string).unwrap_or_default();
            writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                r.k, q, r.a, r.b, r.c, r.d, r.e, r.f
            )
            .expect("writing to a String cannot fail");
        }
        out
    }
}

/// Outcome of a check: passing, or a description naming the violated
/// clause and the row index where it broke.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub violated: Option<String>,
}

impl CheckResult {
    pub fn ok(&self) -> bool {
        self.violated.is_none()
    }

    fn pass() -> Self {
        CheckResult { violated: None }
    }

    fn fail(description: String) -> Self {
        CheckResult {
            violated: Some(description),
        }
    }
}

/// Runs the iterative algorithm on `(alpha, beta)` recording every loop
/// boundary. The recorded result is the triple the plain iterative form
/// returns: both drive the same state machine.
pub fn egcd_traced(alpha: &BigUint, beta: &BigUint) -> EgcdTrace {
    let mut state = EgcdState::new(alpha, beta);
    let mut steps = vec![snapshot(0, None, &state)];
    let mut k = 0;
    while !state.finished() {
        let q = state.advance();
        k += 1;
        steps.push(snapshot(k, Some(q), &state));
    }
    EgcdTrace {
        alpha: alpha.clone(),
        beta: beta.clone(),
        steps,
        result: state.triple(),
    }
}

fn snapshot(k: u64, q: Option<BigInt>, state: &EgcdState) -> TraceRow {
    TraceRow {
        k,
        q,
        a: state.head.r0.to_biguint().expect("head row non-negative"),
        b: state.head.r1.to_biguint().expect("head row non-negative"),
        c: state.mid.r0.clone(),
        d: state.mid.r1.clone(),
        e: state.tail.r0.clone(),
        f: state.tail.r1.clone(),
    }
}

/// Reference gcd for the checks: trial division while both operands fit
/// the oracle bound, the fast gcd (itself oracle-validated at small
/// scale) beyond it.
fn reference_gcd(a: &BigUint, b: &BigUint) -> BigUint {
    oracle_gcd(a, b).unwrap_or_else(|_| gcd(a, b))
}

/// Checks both clauses of the loop condition on one row against the
/// initial operands: (1) `[alpha beta]·[[c,d],[e,f]] = [a, b]`;
/// (2) `gcd(a, b) = gcd(alpha, beta)`.
pub fn check_invariant(row: &TraceRow, alpha: &BigUint, beta: &BigUint) -> CheckResult {
    let init = Row2::new(BigInt::from(alpha.clone()), BigInt::from(beta.clone()));
    let product = &init * &row.coeff_matrix();
    if product.r0 != BigInt::from(row.a.clone()) || product.r1 != BigInt::from(row.b.clone()) {
        return CheckResult::fail(format!(
            "clause 1 at k={}: [alpha beta]·[[c,d],[e,f]] = [{}, {}] but the row holds [{}, {}]",
            row.k, product.r0, product.r1, row.a, row.b
        ));
    }
    let row_gcd = reference_gcd(&row.a, &row.b);
    let init_gcd = reference_gcd(alpha, beta);
    if row_gcd != init_gcd {
        return CheckResult::fail(format!(
            "clause 2 at k={}: gcd(a, b) = {row_gcd} but gcd(alpha, beta) = {init_gcd}",
            row.k
        ));
    }
    CheckResult::pass()
}

/// Checks the exit condition of a completed trace: the final `a` equals
/// both `alpha·c + beta·e` and the gcd of the initial operands.
///
/// Errors with [`Error::MalformedTrace`] when the trace did not actually
/// finish (last row has `b != 0`).
pub fn check_exit(trace: &EgcdTrace) -> Result<CheckResult, Error> {
    let last = trace
        .steps
        .last()
        .ok_or_else(|| Error::MalformedTrace("trace has no rows".into()))?;
    if !last.b.is_zero() {
        return Err(Error::MalformedTrace(format!(
            "final row has b = {}, expected 0",
            last.b
        )));
    }
    let combination =
        BigInt::from(trace.alpha.clone()) * &last.c + BigInt::from(trace.beta.clone()) * &last.e;
    if combination != BigInt::from(last.a.clone()) {
        return Ok(CheckResult::fail(format!(
            "exit at k={}: alpha·c + beta·e = {combination} but a = {}",
            last.k, last.a
        )));
    }
    let expected = reference_gcd(&trace.alpha, &trace.beta);
    if last.a != expected {
        return Ok(CheckResult::fail(format!(
            "exit at k={}: final a = {} but gcd(alpha, beta) = {expected}",
            last.k, last.a
        )));
    }
    Ok(CheckResult::pass())
}

/// Audits a whole trace. Beyond running [`check_invariant`] on every row
/// and [`check_exit`] at the end, this validates the recorded structure
/// itself: row indices, the initial stack, quotient/replay consistency
/// `(a, b) → (b, a mod b)`, strict descent of `b`, and that each row's
/// coefficient matrix equals the product of the step matrices rebuilt
/// from the recorded quotients.
pub fn check_trace(trace: &EgcdTrace) -> CheckResult {
    let rows = &trace.steps;
    if rows.is_empty() {
        return CheckResult::fail("structure: trace has no rows".into());
    }
    for (i, row) in rows.iter().enumerate() {
        if row.k != i as u64 {
            return CheckResult::fail(format!(
                "structure: row {i} carries index k={}",
                row.k
            ));
        }
    }

    let first = &rows[0];
    if first.a != trace.alpha || first.b != trace.beta {
        return CheckResult::fail(format!(
            "structure at k=0: stack head is ({}, {}) but the inputs are ({}, {})",
            first.a, first.b, trace.alpha, trace.beta
        ));
    }
    if first.coeff_matrix() != Mat2::identity() {
        return CheckResult::fail(
            "structure at k=0: coefficient rows are not the identity".into(),
        );
    }
    if first.q.is_some() {
        return CheckResult::fail("structure at k=0: unexpected quotient".into());
    }

    for row in rows {
        let res = check_invariant(row, &trace.alpha, &trace.beta);
        if !res.ok() {
            return res;
        }
    }

    let mut accumulated = Mat2::identity();
    for pair in rows.windows(2) {
        let (prev, cur) = (&pair[0], &pair[1]);
        if prev.b.is_zero() {
            return CheckResult::fail(format!(
                "structure at k={}: the loop continued past b = 0",
                cur.k
            ));
        }
        let Some(q) = &cur.q else {
            return CheckResult::fail(format!("structure at k={}: missing quotient", cur.k));
        };
        let (expected_q, expected_b) = prev.a.div_rem(&prev.b);
        let expected_q = BigInt::from(expected_q);
        if *q != expected_q {
            return CheckResult::fail(format!(
                "replay at k={}: recorded quotient {q} but ⌊a/b⌋ of the previous row is \
                 {expected_q}",
                cur.k
            ));
        }
        if cur.a != prev.b || cur.b != expected_b {
            return CheckResult::fail(format!(
                "replay at k={}: expected (a, b) = ({}, {expected_b}), row holds ({}, {})",
                cur.k, prev.b, cur.a, cur.b
            ));
        }
        if cur.b >= prev.b {
            return CheckResult::fail(format!(
                "descent at k={}: b did not strictly decrease ({} -> {})",
                cur.k, prev.b, cur.b
            ));
        }
        accumulated = &accumulated * &Mat2::step_for_quotient(q);
        if cur.coeff_matrix() != accumulated {
            return CheckResult::fail(format!(
                "matrix product at k={}: the recorded coefficient rows differ from the \
                 product of the step matrices rebuilt from the quotients",
                cur.k
            ));
        }
    }

    let last = rows.last().expect("non-empty");
    if !last.b.is_zero() {
        return CheckResult::fail(format!(
            "structure: final row has b = {}, expected 0",
            last.b
        ));
    }
    let expected_result = BezoutTriple {
        d: last.a.clone(),
        x: last.c.clone(),
        y: last.e.clone(),
    };
    if trace.result != expected_result {
        return CheckResult::fail(format!(
            "structure: recorded result ({}, {}, {}) differs from the final row's (a, c, e)",
            trace.result.d, trace.result.x, trace.result.y
        ));
    }
    match check_exit(trace) {
        Ok(res) => res,
        Err(err) => CheckResult::fail(err.to_string()),
    }
}
