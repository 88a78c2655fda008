//! Greatest common divisor and its extended forms.
//!
//! Two routes to the same triple: [`egcd_recursive`] is the textbook
//! recursion, [`egcd_iterative`] drives a 3×2 stack of rows by repeated
//! right-multiplication with the step matrix. Both return identical
//! Bézout triples on every input; the test suites hold them to that,
//! component for component.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::matrix::Row2;

/// Result of an extended-gcd run: `d = gcd(a, b)` together with
/// coefficients satisfying `d = a·x + b·y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BezoutTriple {
    #[serde(with = "crate::dec::nat")]
    pub d: BigUint,
    #[serde(with = "crate::dec::int")]
    pub x: BigInt,
    #[serde(with = "crate::dec::int")]
    pub y: BigInt,
}

impl BezoutTriple {
    /// True when `d = a·x + b·y` holds for this triple.
    pub fn identity_holds(&self, a: &BigUint, b: &BigUint) -> bool {
        let combination = BigInt::from(a.clone()) * &self.x + BigInt::from(b.clone()) * &self.y;
        combination == BigInt::from(self.d.clone())
    }
}

/// Greatest common divisor by Euclid's reduction.
///
/// `gcd(a, 0) = a` and in particular `gcd(0, 0) = 0`; arguments in either
/// order are fine (the first reduction swaps an ascending pair).
pub fn gcd(a: &BigUint, b: &BigUint) -> BigUint {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = &a % &b;
        a = std::mem::replace(&mut b, r);
    }
    a
}

/// Recursive extended gcd.
///
/// Base case `(a, 1, 0)`; otherwise with `(d, x', y') = egcd(b, a mod b)`
/// the answer is `(d, y', x' - ⌊a/b⌋·y')`. Depth is one frame per
/// reduction step: worst case ≈ 1.44 frames per bit (consecutive
/// Fibonacci inputs), ≈ 0.58 on average. The default 8 MiB main stack
/// comfortably covers 4096-bit operands; for more, size a thread with
/// [`recursion_stack_bytes`] and [`run_on_sized_stack`].
pub fn egcd_recursive(a: &BigUint, b: &BigUint) -> BezoutTriple {
    egcd_recursive_counted(a, b).0
}

/// Recursion with its call depth (including the base call, so depth is
/// one more than the loop-iteration count of the iterative form).
pub(crate) fn egcd_recursive_counted(a: &BigUint, b: &BigUint) -> (BezoutTriple, u64) {
    if b.is_zero() {
        let triple = BezoutTriple {
            d: a.clone(),
            x: One::one(),
            y: Zero::zero(),
        };
        return (triple, 1);
    }
    let (q, r) = a.div_rem(b);
    let (sub, depth) = egcd_recursive_counted(b, &r);
    let y = sub.x - BigInt::from(q) * &sub.y;
    (BezoutTriple { d: sub.d, x: sub.y, y }, depth + 1)
}

/// Working state of the iterative algorithm: the 3×2 stack of rows
/// `[a b; c d; e f]`, advanced by right-multiplying every row with the
/// step matrix of the head row.
pub(crate) struct EgcdState {
    /// `(a, b)` — stays non-negative throughout.
    pub(crate) head: Row2,
    /// `(c, d)`
    pub(crate) mid: Row2,
    /// `(e, f)`
    pub(crate) tail: Row2,
}

impl EgcdState {
    pub(crate) fn new(alpha: &BigUint, beta: &BigUint) -> Self {
        EgcdState {
            head: Row2::new(BigInt::from(alpha.clone()), BigInt::from(beta.clone())),
            mid: Row2::new(One::one(), Zero::zero()),
            tail: Row2::new(Zero::zero(), One::one()),
        }
    }

    pub(crate) fn finished(&self) -> bool {
        self.head.r1.is_zero()
    }

    /// One loop iteration; returns the quotient that drove it.
    ///
    /// This is the entrywise form of right-multiplying every row by the
    /// step matrix `[[0, 1], [1, -q]]`: `(r0, r1) -> (r1, r0 - q·r1)`.
    /// A property test pins it to the literal matrix product.
    pub(crate) fn advance(&mut self) -> BigInt {
        debug_assert!(!self.finished());
        // both head entries are non-negative, so truncation is the floor
        let (q, r) = self.head.r0.div_rem(&self.head.r1);
        self.head.r0 = std::mem::replace(&mut self.head.r1, r);
        advance_row(&mut self.mid, &q);
        advance_row(&mut self.tail, &q);
        q
    }

    pub(crate) fn triple(&self) -> BezoutTriple {
        BezoutTriple {
            d: self
                .head
                .r0
                .to_biguint()
                .expect("head row stays non-negative"),
            x: self.mid.r0.clone(),
            y: self.tail.r0.clone(),
        }
    }
}

fn advance_row(row: &mut Row2, q: &BigInt) {
    let next = &row.r0 - q * &row.r1;
    row.r0 = std::mem::replace(&mut row.r1, next);
}

/// Iterative extended gcd.
///
/// The stack starts as `[α β; 1 0; 0 1]` and is right-multiplied by the
/// step matrix until `b = 0`; the answer is `(a, c, e)`. Returns the same
/// triple as [`egcd_recursive`] while holding only the six working
/// integers, whatever the input size.
pub fn egcd_iterative(alpha: &BigUint, beta: &BigUint) -> BezoutTriple {
    let mut state = EgcdState::new(alpha, beta);
    while !state.finished() {
        state.advance();
    }
    state.triple()
}

/// Worst-case stack estimate for running [`egcd_recursive`] on
/// `bits`-bit operands: Fibonacci-pair depth (≈ 1.44 frames per bit,
/// rounded up to 1.5) times a generous frame size, plus fixed headroom.
pub fn recursion_stack_bytes(bits: u64) -> usize {
    const FRAME_BYTES: u64 = 1024;
    const HEADROOM: u64 = 4 << 20;
    let frames = bits.saturating_add(bits / 2).saturating_add(64);
    let bytes = frames.saturating_mul(FRAME_BYTES).saturating_add(HEADROOM);
    usize::try_from(bytes).unwrap_or(usize::MAX)
}

/// Runs `f` on a thread with an explicitly sized stack so that deep
/// recursion is either given the room it needs or reported as
/// [`Error::ResourceExhausted`] instead of aborting the process.
pub fn run_on_sized_stack<T, F>(stack_bytes: usize, f: F) -> Result<T, Error>
where
    T: Send + 'static,
    F: FnOnce() -> T + Send + 'static,
{
    let handle = std::thread::Builder::new()
        .name("deep-recursion".into())
        .stack_size(stack_bytes)
        .spawn(f)
        .map_err(|e| {
            Error::ResourceExhausted(format!("cannot obtain a {stack_bytes}-byte stack: {e}"))
        })?;
    handle
        .join()
        .map_err(|_| Error::ResourceExhausted("recursion worker panicked".into()))
}

/// Largest stack this crate will request for the recursive form before
/// reporting [`Error::ResourceExhausted`] up front.
pub(crate) const RECURSION_STACK_CAP: usize = 256 << 20;

/// Stack budget for recursing on `bits`-bit operands, or
/// [`Error::ResourceExhausted`] when the estimate exceeds the cap.
pub(crate) fn check_recursion_budget(bits: u64) -> Result<usize, Error> {
    let needed = recursion_stack_bytes(bits);
    if needed > RECURSION_STACK_CAP {
        return Err(Error::ResourceExhausted(format!(
            "recursive form would need about {needed} bytes of stack for {bits}-bit operands \
             (cap {RECURSION_STACK_CAP})"
        )));
    }
    Ok(needed)
}
