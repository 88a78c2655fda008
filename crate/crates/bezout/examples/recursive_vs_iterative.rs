//! Benchmark the recursive form against the iterative one on identical
//! seeded operands at growing bit lengths. Iteration statistics must
//! match exactly — both variants walk the same quotient sequence — while
//! wall times differ.
//!
//! ```bash
//! cargo run -p bezout --example recursive_vs_iterative
//! ```

use bezout::{run_bench, Variant};

fn main() {
    let count = 50;
    let seed = 7;

    println!(
        "{:>6} {:>11} {:>15} {:>15} {:>8}",
        "bits", "mean iters", "recursive (ms)", "iterative (ms)", "ratio"
    );
    for bits in [64u64, 256, 1024, 2048] {
        let recursive = run_bench(Variant::Recursive, bits, count, seed).unwrap();
        let iterative = run_bench(Variant::Iterative, bits, count, seed).unwrap();

        // identical seed ⇒ identical operands ⇒ identical iteration stats
        assert_eq!(recursive.iterations_min, iterative.iterations_min);
        assert_eq!(recursive.iterations_mean, iterative.iterations_mean);
        assert_eq!(recursive.iterations_max, iterative.iterations_max);

        let rec_ms = recursive.total_ns as f64 / 1e6;
        let iter_ms = iterative.total_ns as f64 / 1e6;
        println!(
            "{bits:>6} {:>11.1} {rec_ms:>15.3} {iter_ms:>15.3} {:>8.2}",
            recursive.iterations_mean,
            rec_ms / iter_ms
        );
    }

    println!("\nfull JSON report for one run:");
    let report = run_bench(Variant::Iterative, 128, 10, 1).unwrap();
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
