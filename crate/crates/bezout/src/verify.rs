//! Batch self-checks: exhaustive oracle sweeps at small scale and audits
//! of random traces at arbitrary bit lengths.

use num_bigint::{BigUint, RandBigInt};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::egcd::{
    check_recursion_budget, egcd_iterative, egcd_recursive, gcd, run_on_sized_stack, BezoutTriple,
};
use crate::error::Error;
use crate::oracle::{oracle_gcd, oracle_verify, ORACLE_BOUND};
use crate::trace::{check_trace, egcd_traced};

/// Tally of one verification run. Every count is deterministic for fixed
/// arguments; a clean run has an empty `violations`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    /// Pairs (exhaustive mode) or traces (random mode) examined.
    pub pairs: u64,
    /// Trace rows that went through the per-row invariant check.
    pub rows: u64,
    /// gcd-and-identity comparisons against the trial-division oracle.
    pub oracle_checks: u64,
    /// Recursive-vs-iterative equality comparisons.
    pub variant_checks: u64,
    /// Whole-trace audits (row invariants, replay, matrix products, exit).
    pub trace_audits: u64,
    pub violations: Vec<String>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    fn new() -> Self {
        VerifyReport {
            pairs: 0,
            rows: 0,
            oracle_checks: 0,
            variant_checks: 0,
            trace_audits: 0,
            violations: Vec::new(),
        }
    }
}

/// Sweeps every pair `0 <= b <= a <= limit`: the fast gcd and the
/// iterative triple are compared against the trial-division oracle, the
/// two variants against each other, and the full trace of each pair is
/// audited. `limit` must stay within [`ORACLE_BOUND`].
pub fn verify_exhaustive(limit: u64) -> Result<VerifyReport, Error> {
    if limit > ORACLE_BOUND {
        return Err(Error::InvalidInput(format!(
            "exhaustive limit {limit} exceeds the oracle bound {ORACLE_BOUND}"
        )));
    }
    let mut report = VerifyReport::new();
    for a in 0..=limit {
        for b in 0..=a {
            let (a_big, b_big) = (BigUint::from(a), BigUint::from(b));
            report.pairs += 1;

            let triple = egcd_iterative(&a_big, &b_big);
            let oracle_ok = oracle_verify(&a_big, &b_big, &triple)?
                && gcd(&a_big, &b_big) == oracle_gcd(&a_big, &b_big)?;
            if oracle_ok {
                report.oracle_checks += 1;
            } else {
                report
                    .violations
                    .push(format!("oracle mismatch for ({a}, {b})"));
            }

            if egcd_recursive(&a_big, &b_big) == triple {
                report.variant_checks += 1;
            } else {
                report
                    .violations
                    .push(format!("variant mismatch for ({a}, {b})"));
            }

            audit_one(&a_big, &b_big, &triple, &mut report);
        }
    }
    Ok(report)
}

/// Audits `count` random traces with `max_bits`-bit operands drawn from
/// `seed`, and checks recursive/iterative equality on each pair. The
/// recursive runs happen on a stack sized for `max_bits`.
pub fn verify_random(count: u64, max_bits: u64, seed: u64) -> Result<VerifyReport, Error> {
    let stack = check_recursion_budget(max_bits)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(BigUint, BigUint)> = (0..count)
        .map(|_| (rng.gen_biguint(max_bits), rng.gen_biguint(max_bits)))
        .collect();

    let recursive: Vec<BezoutTriple> = {
        let pairs = pairs.clone();
        run_on_sized_stack(stack, move || {
            pairs.iter().map(|(a, b)| egcd_recursive(a, b)).collect()
        })?
    };

    let mut report = VerifyReport::new();
    for ((alpha, beta), recursive_triple) in pairs.iter().zip(&recursive) {
        report.pairs += 1;
        let iterative_triple = egcd_iterative(alpha, beta);
        if iterative_triple == *recursive_triple {
            report.variant_checks += 1;
        } else {
            report
                .violations
                .push(format!("variant mismatch for ({alpha}, {beta})"));
        }
        audit_one(alpha, beta, &iterative_triple, &mut report);
    }
    Ok(report)
}

fn audit_one(alpha: &BigUint, beta: &BigUint, triple: &BezoutTriple, report: &mut VerifyReport) {
    let trace = egcd_traced(alpha, beta);
    report.rows += trace.steps.len() as u64;
    debug_assert_eq!(&trace.result, triple);
    let audit = check_trace(&trace);
    match audit.violated {
        None => report.trace_audits += 1,
        Some(violation) => report
            .violations
            .push(format!("({alpha}, {beta}): {violation}")),
    }
}
