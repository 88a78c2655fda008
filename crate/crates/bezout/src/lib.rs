//! Extended Euclidean algorithm over arbitrary-precision integers.
//!
//! The crate provides two routes to the Bézout triple `(d, x, y)` with
//! `d = gcd(a, b) = a·x + b·y` — the textbook recursion and an iterative
//! form that drives a 3×2 stack of rows by right-multiplying a 2×2 step
//! matrix — and holds them to bit-identical results. Around that core:
//!
//! - [`trace`]: traced execution that records the full stack at every
//!   loop boundary and mechanically re-checks the loop invariant
//!   (`[a b] = [α β]·[[c,d],[e,f]]` and gcd preservation) on every row,
//!   plus the exit condition `a = α·c + β·e`.
//! - [`oracle`]: descending trial division as slow, independent ground
//!   truth, and Fibonacci worst-case input generation.
//! - [`modular`]: modular inverses canonicalized into `[0, m)`, with a
//!   toy RSA private-exponent derivation.
//! - [`bench`]: seeded recursive-vs-iterative comparison at chosen bit
//!   lengths (identical seed ⇒ identical operands for both variants).
//! - [`verify`]: batch suites — exhaustive oracle sweeps and random
//!   trace audits.
//!
//! ## Runnable examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p bezout --example basic_egcd
//! cargo run -p bezout --example traced_invariants
//! cargo run -p bezout --example modular_inverse
//! cargo run -p bezout --example rsa_demo
//! cargo run -p bezout --example fibonacci_worst_case
//! cargo run -p bezout --example recursive_vs_iterative
//! ```
//!
//! ## Command line
//!
//! The `bezout` binary is a thin wrapper over the library:
//! `gcd`, `egcd`, `inverse`, `trace` (JSON/CSV, self-auditing),
//! `verify` (exhaustive or randomized suites) and `bench`.

pub mod bench;
mod dec;
pub mod egcd;
pub mod error;
pub mod input;
pub mod matrix;
pub mod modular;
pub mod oracle;
pub mod trace;
pub mod verify;

pub use bench::{iteration_count, run_bench, BenchReport, Variant};
pub use egcd::{
    egcd_iterative, egcd_recursive, gcd, recursion_stack_bytes, run_on_sized_stack, BezoutTriple,
};
pub use error::Error;
pub use input::parse_nat;
pub use matrix::{step_matrix, Mat2, Row2};
pub use modular::{mod_inverse, rsa_toy_private_exponent, Modulus};
pub use oracle::{fibonacci_pair, oracle_gcd, oracle_verify, ORACLE_BOUND};
pub use trace::{check_exit, check_invariant, check_trace, egcd_traced, CheckResult, EgcdTrace, TraceRow};
pub use verify::{verify_exhaustive, verify_random, VerifyReport};
