//! Parsing of command-line number literals.

use num_bigint::BigUint;
use num_traits::Num;

use crate::error::Error;

/// Parses a non-negative integer literal: decimal digits, or `0x`-prefixed
/// hexadecimal (RSA-scale operands are conventionally hex). A leading `-`
/// is rejected explicitly: every operand here is non-negative.
pub fn parse_nat(text: &str) -> Result<BigUint, Error> {
    let trimmed = text.trim();
    if trimmed.starts_with('-') {
        return Err(Error::InvalidInput(format!(
            "'{trimmed}' is negative; operands must be non-negative integers"
        )));
    }
    let (digits, radix) = match trimmed
        .strip_prefix("0x")
        .or_else(|| trimmed.strip_prefix("0X"))
    {
        Some(hex) => (hex, 16u32),
        None => (trimmed, 10u32),
    };
    if digits.is_empty() {
        return Err(Error::InvalidInput(format!(
            "'{text}' is not a number literal"
        )));
    }
    BigUint::from_str_radix(digits, radix).map_err(|_| {
        Error::InvalidInput(format!("'{text}' is not a valid base-{radix} literal"))
    })
}
