//! Multiplicative inverses in modular arithmetic, the main consumer of
//! the extended gcd, plus a toy RSA key derivation built on them.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::egcd::egcd_iterative;
use crate::error::Error;

/// A modulus `m >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modulus(BigUint);

impl Modulus {
    /// Errors with [`Error::InvalidInput`] for `m = 0`.
    pub fn new(m: BigUint) -> Result<Self, Error> {
        if m.is_zero() {
            return Err(Error::InvalidInput("modulus must be >= 1".into()));
        }
        Ok(Modulus(m))
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }
}

/// The unique `v` in `[0, m)` with `a·v ≡ 1 (mod m)`, derived from the
/// Bézout coefficient `x` of `egcd(a mod m, m)` and mapped into `[0, m)`.
/// For `m = 1` the inverse is 0.
///
/// Errors with [`Error::NonInvertible`] (carrying the offending gcd)
/// when `gcd(a mod m, m) != 1`.
pub fn mod_inverse(a: &BigUint, m: &Modulus) -> Result<BigUint, Error> {
    let m_val = m.value();
    let reduced = a % m_val;
    // for m = 1 this is egcd(0, 1) = (1, 0, 1), so the general path
    // already yields 0
    let triple = egcd_iterative(&reduced, m_val);
    if !triple.d.is_one() {
        return Err(Error::NonInvertible { gcd: triple.d });
    }
    let canonical = triple.x.mod_floor(&BigInt::from(m_val.clone()));
    Ok(canonical
        .to_biguint()
        .expect("mod_floor with a positive modulus is non-negative"))
}

/// Toy RSA private exponent: `d = e⁻¹ mod (p-1)(q-1)`.
///
/// A worked example, not a cryptosystem: primality of `p` and `q` is the
/// caller's business. Rejects `p = q` and factors below 2 with
/// [`Error::InvalidInput`]; a unit `e` that shares a factor with the
/// totient surfaces as [`Error::NonInvertible`].
pub fn rsa_toy_private_exponent(p: &BigUint, q: &BigUint, e: &BigUint) -> Result<BigUint, Error> {
    let two = BigUint::from(2u32);
    if p < &two || q < &two {
        return Err(Error::InvalidInput(
            "both factors must be at least 2".into(),
        ));
    }
    if p == q {
        return Err(Error::InvalidInput("the two factors must differ".into()));
    }
    let totient = (p - 1u32) * (q - 1u32);
    let modulus = Modulus::new(totient).expect("totient of factors >= 2 is >= 1");
    mod_inverse(e, &modulus)
}
