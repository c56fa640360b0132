//! Cantor pairing and related codings of discrete data.

use num::bigint::{BigInt, BigUint};
use num::{One, Zero};

/// Cantor pairing `(n, m) -> (n+m)(n+m+1)/2 + m`.
pub fn pair(n: u64, m: u64) -> u64 {
    let s = n + m;
    s * (s + 1) / 2 + m
}

/// Inverse of [`pair`].
pub fn unpair(code: u64) -> (u64, u64) {
    let d = 8u128 * u128::from(code) + 1;
    // w = floor((sqrt(8c+1) - 1) / 2) is the index of the diagonal
    let w = ((integer_sqrt(d) - 1) / 2) as u64;
    let t = w * (w + 1) / 2;
    let m = code - t;
    (w - m, m)
}

fn integer_sqrt(d: u128) -> u128 {
    let mut r = (d as f64).sqrt() as u128;
    while r.saturating_mul(r) > d {
        r -= 1;
    }
    while (r + 1).saturating_mul(r + 1) <= d {
        r += 1;
    }
    r
}

/// Cantor pairing on unbounded naturals.
pub fn pair_big(n: &BigUint, m: &BigUint) -> BigUint {
    let s = n + m;
    (&s * (&s + BigUint::one())) / BigUint::from(2u8) + m
}

/// Inverse of [`pair_big`].
pub fn unpair_big(code: &BigUint) -> (BigUint, BigUint) {
    let d = BigUint::from(8u8) * code + BigUint::one();
    let r = d.sqrt();
    let w = (&r - BigUint::one()) / BigUint::from(2u8);
    let t = (&w * (&w + BigUint::one())) / BigUint::from(2u8);
    let m = code - t;
    (&w - &m, m)
}

/// Zig-zag surjection from the naturals onto the integers:
/// `0, -1, 1, -2, 2, ...` is the preimage order of `0, 1, 2, 3, 4, ...`.
pub fn nat_to_int(n: &BigUint) -> BigInt {
    let half = BigInt::from(n / BigUint::from(2u8));
    if n % BigUint::from(2u8) == BigUint::zero() {
        half
    } else {
        -half - BigInt::one()
    }
}

/// Inverse of [`nat_to_int`].
pub fn int_to_nat(z: &BigInt) -> BigUint {
    if z.sign() == num::bigint::Sign::Minus {
        let pos = (-z - BigInt::one()) * BigInt::from(2) + BigInt::one();
        pos.to_biguint().expect("nonnegative by construction")
    } else {
        (z * BigInt::from(2)).to_biguint().expect("nonnegative")
    }
}

/// Surjection from the naturals onto finite sequences of naturals.
///
/// `0` decodes to the empty sequence; `c+1` decodes by unpairing `c` into a
/// head element and a code for the tail.
pub fn decode_seq(code: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut c = code;
    while c > 0 {
        let (head, tail) = unpair(c - 1);
        out.push(head);
        c = tail;
    }
    out
}
