//! Exact real arithmetic over rational-approximation names.
//!
//! A real number is named by a function from positive rational accuracies to
//! rational approximations: `phi` names `x` when `|x - phi(eps)| <= eps` for
//! every `eps > 0`. All arithmetic is exact arbitrary-precision rational
//! arithmetic; no floating point enters any name value.

use std::sync::Arc;

use num::bigint::{BigInt, BigUint};
use num::{BigRational, One, Signed, Zero};

use crate::metric;
use crate::name::Name;
use crate::pairing;
use crate::spaces::Space;

pub type Rat = BigRational;

/// A name of a real number: accuracy in, approximation out.
pub type RealName = Name<Rat, Rat>;

/// `2^i` as an exact rational, for any sign of `i`.
pub fn two_pow(i: i64) -> Rat {
    let mag = BigInt::from(2u8).pow(i.unsigned_abs() as u32);
    if i >= 0 {
        Rat::from_integer(mag)
    } else {
        Rat::new(BigInt::one(), mag)
    }
}

/// The accuracies `2^0, 2^-1, ..., 2^-max_exp` used by the validity checks.
pub fn dyadic_accuracies(max_exp: u32) -> Vec<Rat> {
    (0..=max_exp as i64).map(|i| two_pow(-i)).collect()
}

/// `|x - name(eps)| <= eps` at every listed accuracy.
pub fn name_validates(name: &RealName, x: &Rat, accuracies: &[Rat]) -> bool {
    accuracies
        .iter()
        .all(|eps| (x - name.query(eps)).abs() <= *eps)
}

/// The canonical name of a rational: constant at every accuracy.
pub fn rat_name(q: Rat) -> RealName {
    Name::constant(q)
}

/// A valid but non-constant name of `x`, answering `x + eps/2`.
pub fn jittered_name(x: Rat) -> RealName {
    Name::new(move |eps: &Rat| x.clone() + eps / two_pow(1))
}

/// Addition realizer: query both summands at half the accuracy.
pub fn add_realizer(a: &RealName, b: &RealName) -> RealName {
    let (a, b) = (a.clone(), b.clone());
    Name::new(move |eps: &Rat| {
        let half = eps / two_pow(1);
        a.query(&half) + b.query(&half)
    })
}

/// Negation realizer.
pub fn neg_realizer(a: &RealName) -> RealName {
    let a = a.clone();
    Name::new(move |eps: &Rat| -a.query(eps))
}

/// Multiplication realizer. With `b := |a(1)| + |b(1)| + 3` both factors are
/// queried at `delta := min(1, eps/b)`; since `|x| <= |a(1)| + 1` and
/// `|b(delta)| <= |y| + 1 <= |b(1)| + 2`, the product error is at most
/// `b * delta <= eps`.
pub fn mul_realizer(a: &RealName, b: &RealName) -> RealName {
    let (a, b) = (a.clone(), b.clone());
    Name::new(move |eps: &Rat| {
        let one = Rat::one();
        let bound = a.query(&one).abs() + b.query(&one).abs() + Rat::from_integer(3.into());
        let delta = (eps / bound).min(one);
        a.query(&delta) * b.query(&delta)
    })
}

/// A name of an efficiently Cauchy sequence of reals: slice `n` names some
/// `x_n`, and the sequence satisfies `|x_n - x_m| <= 2^-n + 2^-m`.
pub struct EffCauchyName {
    entry: Arc<dyn Fn(u64, &Rat) -> Rat + Send + Sync>,
}

impl Clone for EffCauchyName {
    fn clone(&self) -> Self {
        EffCauchyName {
            entry: Arc::clone(&self.entry),
        }
    }
}

impl EffCauchyName {
    pub fn new(entry: impl Fn(u64, &Rat) -> Rat + Send + Sync + 'static) -> Self {
        EffCauchyName {
            entry: Arc::new(entry),
        }
    }

    pub fn entry(&self, index: u64, eps: &Rat) -> Rat {
        (self.entry)(index, eps)
    }

    /// One slice as a real-number name.
    pub fn slice(&self, index: u64) -> RealName {
        let entry = Arc::clone(&self.entry);
        Name::new(move |eps: &Rat| entry(index, eps))
    }
}

/// Limit realizer on the efficiently Cauchy domain: for accuracy `eps` pick
/// the least `n` with `2^-n <= eps/2` and query slice `n` at `eps/2`; the
/// slice error plus the tail bound `|x_n - lim| <= 2^-n` stay within `eps`.
/// Off the stated domain the output is meaningless.
pub fn lim_eff_realizer(seq: &EffCauchyName) -> RealName {
    let seq = seq.clone();
    Name::new(move |eps: &Rat| {
        debug_assert!(eps.is_positive());
        let half = eps / two_pow(1);
        let mut n: u64 = 0;
        while two_pow(-(n as i64)) > half {
            n += 1;
        }
        seq.entry(n, &half)
    })
}

/// Partial sums of the geometric series `sum_{k<=n} 2^-k`, converging to 2.
/// The tail is exactly `2^-n`, so `|x_n - x_m| <= 2^-n + 2^-m`.
pub fn geom2_sequence() -> EffCauchyName {
    EffCauchyName::new(|n, _| two_pow(1) - two_pow(-(n as i64)))
}

/// Partial sums `sum_{k<=n+2} 1/k!`, converging to Euler's number. The tail
/// is at most `2/(n+3)! <= 2^-n`, so the sequence is efficiently Cauchy.
pub fn e1_sequence() -> EffCauchyName {
    EffCauchyName::new(|n, _| factorial_partial_sum(n + 2))
}

/// `sum_{k<=terms} 1/k!` as an exact rational.
pub fn factorial_partial_sum(terms: u64) -> Rat {
    let mut sum = Rat::zero();
    let mut factorial = BigInt::one();
    for k in 0..=terms {
        if k > 0 {
            factorial *= BigInt::from(k);
        }
        sum += Rat::new(BigInt::one(), factorial.clone());
    }
    sum
}

/// Enumeration of the positive rationals: `n` unpairs to `(i, j)` giving
/// `(i+1)/(j+1)`.
pub fn pos_rat_enum(n: u64) -> Rat {
    let (i, j) = pairing::unpair(n);
    Rat::new(BigInt::from(i + 1), BigInt::from(j + 1))
}

/// The represented space of reals over rational-approximation names; the
/// validity predicate samples the accuracies `2^0 .. 2^-20` against exact
/// rational test points.
pub fn real_space() -> Space<Rat, Rat, Rat> {
    let accuracies = dyadic_accuracies(20);
    Space::new(
        pos_rat_enum,
        |n| metric::rat_enum(&BigUint::from(n)),
        move |name, x| name_validates(name, x, &accuracies),
    )
}
