//! Record a full execution trace and mechanically check the loop
//! invariant at every boundary — then corrupt one entry and watch the
//! check catch it.
//!
//! ```bash
//! cargo run -p bezout --example traced_invariants
//! ```

use num_bigint::BigUint;

use bezout::{check_exit, check_invariant, check_trace, egcd_traced};

fn main() {
    let alpha = BigUint::from(240u32);
    let beta = BigUint::from(46u32);
    let trace = egcd_traced(&alpha, &beta);

    println!("trace of ({alpha}, {beta}):");
    println!("{:>3} {:>4} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6}", "k", "q", "a", "b", "c", "d", "e", "f");
    for row in &trace.steps {
        let q = row.q.as_ref().map(ToString::to_string).unwrap_or_else(|| "-".into());
        println!(
            "{:>3} {:>4} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6}",
            row.k, q, row.a, row.b, row.c, row.d, row.e, row.f
        );

        // both invariant clauses hold at every loop boundary:
        //   [a b] = [alpha beta]·[[c,d],[e,f]]   and   gcd(a,b) = gcd(alpha,beta)
        let check = check_invariant(row, &alpha, &beta);
        assert!(check.ok(), "row {}: {:?}", row.k, check.violated);
    }

    // on exit, a = alpha·c + beta·e and a is the gcd
    let exit = check_exit(&trace).expect("trace is complete");
    assert!(exit.ok());
    println!(
        "exit: {} = {alpha}·({}) + {beta}·({})",
        trace.result.d, trace.result.x, trace.result.y
    );

    // the whole-trace audit adds replay, descent and matrix-product checks
    assert!(check_trace(&trace).ok());
    println!("full audit: ok ({} rows)", trace.steps.len());

    // corrupt a single entry; the audit pinpoints the broken clause
    let mut corrupted = trace.clone();
    corrupted.steps[1].c += 1;
    let caught = check_trace(&corrupted);
    println!("\nafter adding 1 to c at k=1:");
    println!("  {}", caught.violated.expect("corruption must be caught"));
}
