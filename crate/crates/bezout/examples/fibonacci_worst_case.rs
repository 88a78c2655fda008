//! Consecutive Fibonacci numbers maximize Euclid's iteration count:
//! `(F(n+1), F(n))` takes exactly n - 1 iterations, while random pairs of
//! similar size need far fewer.
//!
//! ```bash
//! cargo run -p bezout --example fibonacci_worst_case
//! ```

use num_bigint::RandBigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use bezout::{fibonacci_pair, iteration_count};

fn main() {
    println!("{:>4} {:>12} {:>12} {:>11}", "n", "F(n+1)", "F(n)", "iterations");
    for n in [5u32, 10, 20, 31, 40] {
        let (a, b) = fibonacci_pair(n).unwrap();
        let iterations = iteration_count(&a, &b);
        println!("{n:>4} {a:>12} {b:>12} {iterations:>11}");
        assert_eq!(iterations, u64::from(n) - 1);
    }

    // random pairs of the same magnitude finish much faster on average
    let (worst_a, _) = fibonacci_pair(40).unwrap();
    let bits = worst_a.bits();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let trials = 200;
    let total: u64 = (0..trials)
        .map(|_| {
            let a = rng.gen_biguint(bits);
            let b = rng.gen_biguint(bits);
            iteration_count(&a, &b)
        })
        .sum();
    println!(
        "\nrandom {bits}-bit pairs: mean {:.1} iterations over {trials} trials \
         (worst case above: {})",
        total as f64 / f64::from(trials),
        iteration_count(&worst_a, &fibonacci_pair(40).unwrap().1)
    );
}
