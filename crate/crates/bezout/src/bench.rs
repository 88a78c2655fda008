//! Wall-clock and iteration-count comparison of the two extended-gcd
//! forms on seeded random operands at chosen bit lengths.
//!
//! The protocol: operands are generated from the seed alone, so both
//! variants see the same pair sequence; one untimed warm-up run precedes
//! the timed trials; timing uses the monotonic clock and is reported,
//! never asserted against.

use std::time::Instant;

use num_bigint::{BigUint, RandBigInt};
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::egcd::{check_recursion_budget, egcd_recursive_counted, run_on_sized_stack, EgcdState};
use crate::error::Error;

/// Which algorithm form a benchmark run drives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Recursive,
    Iterative,
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "recursive" => Ok(Variant::Recursive),
            "iterative" => Ok(Variant::Iterative),
            other => Err(format!(
                "unknown variant '{other}' (expected 'recursive' or 'iterative')"
            )),
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Variant::Recursive => f.write_str("recursive"),
            Variant::Iterative => f.write_str("iterative"),
        }
    }
}

/// Loop iterations the gcd reduction performs on `(a, b)`; equals the
/// recursion depth of the recursive form minus the base call.
pub fn iteration_count(a: &BigUint, b: &BigUint) -> u64 {
    let mut state = EgcdState::new(a, b);
    let mut n = 0;
    while !state.finished() {
        state.advance();
        n += 1;
    }
    n
}

/// Summary of one benchmark run. Timing fields vary run to run; every
/// other field is a pure function of `(variant, bits, count, seed)`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BenchReport {
    pub variant: Variant,
    pub bits: u64,
    pub count: u32,
    #[serde(with = "crate::dec::u128_str")]
    pub total_ns: u128,
    pub iterations_min: u64,
    pub iterations_mean: f64,
    pub iterations_max: u64,
    pub seed: u64,
}

/// Seeded operand pairs: the first operand has exactly `bits` bits (top
/// bit forced), the second is uniform below it.
fn generate_pairs(bits: u64, count: u32, seed: u64) -> Vec<(BigUint, BigUint)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let top = BigUint::one() << (bits - 1);
    (0..count)
        .map(|_| {
            let a = rng.gen_biguint(bits - 1) | &top;
            let b = rng.gen_biguint_below(&a);
            (a, b)
        })
        .collect()
}

fn run_one(variant: Variant, a: &BigUint, b: &BigUint) -> u64 {
    match variant {
        Variant::Iterative => {
            let mut state = EgcdState::new(a, b);
            let mut n = 0;
            while !state.finished() {
                state.advance();
                n += 1;
            }
            std::hint::black_box(state.triple());
            n
        }
        Variant::Recursive => {
            let (triple, depth) = egcd_recursive_counted(a, b);
            std::hint::black_box(triple);
            depth - 1
        }
    }
}

fn run_trials(variant: Variant, pairs: &[(BigUint, BigUint)]) -> (u128, Vec<u64>) {
    if let Some((a, b)) = pairs.first() {
        run_one(variant, a, b); // warm-up, untimed
    }
    let mut total_ns = 0u128;
    let mut iterations = Vec::with_capacity(pairs.len());
    for (a, b) in pairs {
        let start = Instant::now();
        let n = run_one(variant, a, b);
        total_ns += start.elapsed().as_nanos();
        iterations.push(n);
    }
    (total_ns, iterations)
}

/// Runs `count` trials of one variant on fresh seeded `bits`-bit pairs
/// (`bits >= 2`, `count >= 1`).
///
/// The recursive variant runs on a dedicated thread whose stack is sized
/// from the worst-case recursion depth; when that much stack cannot be
/// provided the run reports [`Error::ResourceExhausted`] instead of
/// crashing.
pub fn run_bench(variant: Variant, bits: u64, count: u32, seed: u64) -> Result<BenchReport, Error> {
    if bits < 2 {
        return Err(Error::InvalidInput(format!(
            "bits must be >= 2, got {bits}"
        )));
    }
    if count < 1 {
        return Err(Error::InvalidInput("count must be >= 1".into()));
    }
    // budget the recursion before paying for operand generation
    let stack = match variant {
        Variant::Recursive => Some(check_recursion_budget(bits)?),
        Variant::Iterative => None,
    };
    let pairs = generate_pairs(bits, count, seed);
    let (total_ns, iterations) = match stack {
        None => run_trials(variant, &pairs),
        Some(bytes) => run_on_sized_stack(bytes, move || run_trials(variant, &pairs))?,
    };
    let iterations_min = *iterations.iter().min().expect("count >= 1");
    let iterations_max = *iterations.iter().max().expect("count >= 1");
    let iterations_mean = iterations.iter().sum::<u64>() as f64 / iterations.len() as f64;
    Ok(BenchReport {
        variant,
        bits,
        count,
        total_ns,
        iterations_min,
        iterations_mean,
        iterations_max,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fibonacci_pair;

    fn nat(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn iteration_count_known_values() {
        assert_eq!(iteration_count(&nat(7), &nat(0)), 0);
        assert_eq!(iteration_count(&nat(12), &nat(8)), 2);
        assert_eq!(iteration_count(&nat(89), &nat(55)), 9);
    }

    #[test]
    fn fibonacci_pairs_need_exactly_n_minus_1_iterations() {
        for n in 2..=40 {
            let (a, b) = fibonacci_pair(n).unwrap();
            assert_eq!(
                iteration_count(&a, &b),
                u64::from(n) - 1,
                "fibonacci_pair({n})"
            );
        }
    }

    #[test]
    fn same_seed_gives_identical_iteration_statistics_across_variants() {
        let iterative = run_bench(Variant::Iterative, 96, 12, 1234).unwrap();
        let recursive = run_bench(Variant::Recursive, 96, 12, 1234).unwrap();
        assert_eq!(iterative.iterations_min, recursive.iterations_min);
        assert_eq!(iterative.iterations_mean, recursive.iterations_mean);
        assert_eq!(iterative.iterations_max, recursive.iterations_max);
    }

    #[test]
    fn reports_are_deterministic_apart_from_timing() {
        let first = run_bench(Variant::Iterative, 64, 10, 1).unwrap();
        let second = run_bench(Variant::Iterative, 64, 10, 1).unwrap();
        assert_eq!(first.count, 10);
        assert_eq!(first.iterations_min, second.iterations_min);
        assert_eq!(first.iterations_mean, second.iterations_mean);
        assert_eq!(first.iterations_max, second.iterations_max);
        // different seed, different operands
        let other = run_bench(Variant::Iterative, 64, 10, 2).unwrap();
        assert!(
            (first.iterations_min, first.iterations_max)
                != (other.iterations_min, other.iterations_max)
                || first.iterations_mean != other.iterations_mean
        );
    }

    #[test]
    fn generated_operands_have_the_requested_width() {
        let pairs = generate_pairs(64, 20, 7);
        for (a, b) in &pairs {
            assert_eq!(a.bits(), 64);
            assert!(b < a);
        }
    }

    #[test]
    fn report_statistics_are_ordered() {
        let report = run_bench(Variant::Iterative, 128, 8, 3).unwrap();
        assert!(report.iterations_min as f64 <= report.iterations_mean);
        assert!(report.iterations_mean <= report.iterations_max as f64);
    }

    #[test]
    fn completes_at_2048_bits() {
        let report = run_bench(Variant::Iterative, 2048, 100, 7).unwrap();
        assert_eq!(report.count, 100);
        // recorded, not asserted against a prediction
        assert!(report.iterations_mean > 0.0);
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(matches!(
            run_bench(Variant::Iterative, 1, 10, 0),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            run_bench(Variant::Iterative, 64, 0, 0),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn absurd_recursion_depth_is_reported_not_crashed() {
        let result = run_bench(Variant::Recursive, u64::MAX / 2, 1, 0);
        assert!(matches!(result, Err(Error::ResourceExhausted(_))));
    }

    #[test]
    fn report_json_uses_string_nanoseconds() {
        let report = run_bench(Variant::Iterative, 64, 3, 5).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains(r#""variant":"iterative""#));
        assert!(json.contains(r#""total_ns":""#), "got: {json}");
        let back: BenchReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.total_ns, report.total_ns);
        assert_eq!(back.iterations_mean, report.iterations_mean);
    }
}
