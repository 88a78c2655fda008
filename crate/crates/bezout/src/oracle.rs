//! Brute-force ground truth, deliberately independent of the gcd loop,
//! plus the worst-case input generator.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::egcd::BezoutTriple;
use crate::error::Error;

/// Inclusive operand bound for the trial-division oracle.
pub const ORACLE_BOUND: u64 = 1_000_000;

fn within_bound(v: &BigUint) -> Result<u64, Error> {
    v.to_u64()
        .filter(|&x| x <= ORACLE_BOUND)
        .ok_or_else(|| Error::OracleBoundExceeded {
            value: v.clone(),
            bound: ORACLE_BOUND,
        })
}

/// Greatest common divisor by descending trial division. Slow on purpose:
/// starting at `min(a, b)`, returns the first candidate dividing both.
/// `oracle_gcd(a, 0) = a` and `oracle_gcd(0, 0) = 0`.
///
/// Operands above [`ORACLE_BOUND`] are rejected with
/// [`Error::OracleBoundExceeded`]. Within the bound the values fit `u64`
/// exactly, so the divisor search runs on machine words.
pub fn oracle_gcd(a: &BigUint, b: &BigUint) -> Result<BigUint, Error> {
    let a = within_bound(a)?;
    let b = within_bound(b)?;
    Ok(BigUint::from(oracle_gcd_u64(a, b)))
}

fn oracle_gcd_u64(a: u64, b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let mut d = a.min(b);
    while !a.is_multiple_of(d) || !b.is_multiple_of(d) {
        d -= 1; // terminates: 1 divides everything
    }
    d
}

/// Whether `t` is a valid extended-gcd answer for `(a, b)`: its `d` must
/// equal the trial-division gcd and the identity `d = a·x + b·y` must
/// hold. The coefficients themselves are not compared — Bézout
/// coefficients are not unique.
pub fn oracle_verify(a: &BigUint, b: &BigUint, t: &BezoutTriple) -> Result<bool, Error> {
    let d = oracle_gcd(a, b)?;
    Ok(t.d == d && t.identity_holds(a, b))
}

/// Consecutive Fibonacci numbers `(F(n+1), F(n))` with `F(1) = F(2) = 1`,
/// the classic worst-case input family for Euclid's loop. Requires
/// `n >= 2`.
pub fn fibonacci_pair(n: u32) -> Result<(BigUint, BigUint), Error> {
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "fibonacci_pair needs n >= 2, got {n}"
        )));
    }
    let mut prev = BigUint::one(); // F(1)
    let mut cur = BigUint::one(); // F(2)
    for _ in 0..n - 1 {
        let next = &prev + &cur;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok((cur, prev))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn oracle_gcd_known_values() {
        assert_eq!(oracle_gcd(&nat(240), &nat(46)).unwrap(), nat(2));
        assert_eq!(oracle_gcd(&nat(9), &nat(0)).unwrap(), nat(9));
        assert_eq!(oracle_gcd(&nat(0), &nat(9)).unwrap(), nat(9));
        assert_eq!(oracle_gcd(&nat(17), &nat(13)).unwrap(), nat(1));
        assert_eq!(oracle_gcd(&nat(0), &nat(0)).unwrap(), nat(0));
    }

    #[test]
    fn oracle_rejects_operands_over_the_bound() {
        let big = nat(ORACLE_BOUND + 1);
        assert!(matches!(
            oracle_gcd(&big, &nat(4)),
            Err(Error::OracleBoundExceeded { .. })
        ));
        // the bound itself is fine
        assert_eq!(
            oracle_gcd(&nat(ORACLE_BOUND), &nat(ORACLE_BOUND)).unwrap(),
            nat(ORACLE_BOUND)
        );
    }

    #[test]
    fn oracle_verify_checks_both_clauses() {
        let good = BezoutTriple {
            d: nat(4),
            x: 1.into(),
            y: (-1).into(),
        };
        let alternative = BezoutTriple {
            d: nat(4),
            x: 3.into(),
            y: (-4).into(),
        };
        let broken_identity = BezoutTriple {
            d: nat(4),
            x: 1.into(),
            y: 0.into(),
        };
        assert!(oracle_verify(&nat(12), &nat(8), &good).unwrap());
        assert!(oracle_verify(&nat(12), &nat(8), &alternative).unwrap());
        assert!(!oracle_verify(&nat(12), &nat(8), &broken_identity).unwrap());
        // identity holds but d is not the gcd: 12·1 + 8·(-1) = 4 != 2
        let wrong_d = BezoutTriple {
            d: nat(2),
            x: 1.into(),
            y: (-1).into(),
        };
        assert!(!oracle_verify(&nat(12), &nat(8), &wrong_d).unwrap());
    }

    #[test]
    fn fibonacci_pair_known_values() {
        assert_eq!(fibonacci_pair(2).unwrap(), (nat(2), nat(1)));
        assert_eq!(fibonacci_pair(5).unwrap(), (nat(8), nat(5)));
        assert_eq!(fibonacci_pair(10).unwrap(), (nat(89), nat(55)));
        assert_eq!(fibonacci_pair(31).unwrap(), (nat(2178309), nat(1346269)));
    }

    #[test]
    fn fibonacci_pair_rejects_small_n() {
        assert!(matches!(fibonacci_pair(1), Err(Error::InvalidInput(_))));
        assert!(matches!(fibonacci_pair(0), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn fibonacci_pairs_are_consecutive() {
        for n in 2..40 {
            let (hi, lo) = fibonacci_pair(n).unwrap();
            let (next_hi, next_lo) = fibonacci_pair(n + 1).unwrap();
            assert_eq!(next_lo, hi);
            assert_eq!(next_hi, lo + hi);
        }
    }
}
