//! Exact output rendering.

use baire::reals::Rat;
use num::bigint::BigInt;
use num::{One, Signed};

/// Canonical `numerator/denominator` form, denominator always explicit.
pub fn rational_line(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Enough decimal digits that `10^-digits` undershoots `2^-prec_exp`, plus
/// one guard digit.
pub fn decimal_digit_count(prec_exp: u32) -> u32 {
    let target = BigInt::from(2u8).pow(prec_exp);
    let mut digits = 0u32;
    let mut power = BigInt::one();
    while power < target {
        digits += 1;
        power *= 10;
    }
    digits + 1
}

/// Decimal expansion truncated toward zero, with the precision tag appended.
pub fn decimal_line(r: &Rat, prec_exp: u32) -> String {
    let digits = decimal_digit_count(prec_exp);
    let magnitude = r.abs();
    let integer = magnitude.trunc().to_integer();
    let mut rem = (magnitude.numer() % magnitude.denom()).abs();
    let denom = magnitude.denom().clone();
    let mut frac = String::with_capacity(digits as usize);
    for _ in 0..digits {
        rem *= 10;
        frac.push(char::from(
            b'0' + u8::try_from(&rem / &denom).expect("single digit"),
        ));
        rem %= &denom;
    }
    let sign = if r.is_negative() { "-" } else { "" };
    format!("{sign}{integer}.{frac} \u{b1}2^-{prec_exp}")
}
