//! The metric on naming spaces and dense-sequence encodings of metric points.
//!
//! For an enumeration `q` of the question set, the distance between two
//! names is `2^-k` where `k` is the first enumerated question they disagree
//! on. Equality of names is undecidable, so the distance is reported as a
//! sum type: an exact value witnessed by a disagreement, or a certified
//! upper bound `2^-cutoff` after a full agreeing scan.

use std::sync::Arc;

use num::bigint::{BigInt, BigUint};
use num::One;

use crate::name::{coincide_on, Name};
use crate::pairing;
use crate::reals::{two_pow, Rat, RealName};

/// Distance between two names under an enumeration of their question set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaireDistance {
    /// `2^-exponent`, witnessed by a disagreement at question `exponent`
    /// after agreement on all earlier ones.
    Exact { exponent: u64 },
    /// No disagreement among the first `cutoff` questions: the distance is
    /// at most `2^-cutoff`.
    ZeroCertifiedUpTo { cutoff: u64 },
}

impl BaireDistance {
    /// The certified upper bound as an exact rational.
    pub fn upper_bound(&self) -> Rat {
        match self {
            BaireDistance::Exact { exponent } => two_pow(-(*exponent as i64)),
            BaireDistance::ZeroCertifiedUpTo { cutoff } => two_pow(-(*cutoff as i64)),
        }
    }

    pub fn is_certified_zero(&self) -> bool {
        matches!(self, BaireDistance::ZeroCertifiedUpTo { .. })
    }
}

/// Scan the first `cutoff` enumerated questions for a disagreement.
pub fn baire_dist<Q, A: PartialEq>(
    left: &Name<Q, A>,
    right: &Name<Q, A>,
    questions: impl Fn(u64) -> Q,
    cutoff: u64,
) -> BaireDistance {
    assert!(cutoff >= 1, "a distance scan needs at least one question");
    for n in 0..cutoff {
        let q = questions(n);
        if left.query(&q) != right.query(&q) {
            return BaireDistance::Exact { exponent: n };
        }
    }
    BaireDistance::ZeroCertifiedUpTo { cutoff }
}

/// Stage-`n` comparison of coincidence and metric closeness: returns
/// (coincide on the first `n` questions, distance certified `<= 2^-n`).
/// The two components are computed by independent routes and must agree.
pub fn coincide_iff_close<Q, A: PartialEq>(
    left: &Name<Q, A>,
    right: &Name<Q, A>,
    questions: impl Fn(u64) -> Q,
    n: u64,
) -> (bool, bool) {
    if n == 0 {
        return (true, true);
    }
    let prefix: Vec<Q> = (0..n).map(&questions).collect();
    let coincides = coincide_on(left, right, &prefix);
    let close = baire_dist(left, right, questions, n).is_certified_zero();
    (coincides, close)
}

/// Name of a point of a separable metric space over a dense sequence: entry
/// `n` is the index of a dense element within `2^-n` of the point.
pub struct MetricName {
    index: Arc<dyn Fn(u64) -> BigUint + Send + Sync>,
}

impl Clone for MetricName {
    fn clone(&self) -> Self {
        MetricName {
            index: Arc::clone(&self.index),
        }
    }
}

impl MetricName {
    pub fn new(index: impl Fn(u64) -> BigUint + Send + Sync + 'static) -> Self {
        MetricName {
            index: Arc::new(index),
        }
    }

    pub fn index(&self, n: u64) -> BigUint {
        (self.index)(n)
    }
}

/// The fixed enumeration of the rationals: the index unpairs into a zig-zag
/// numerator and a denominator; non-reduced pairs collapse onto the reduced
/// fraction, keeping the map total and surjective.
pub fn rat_enum(index: &BigUint) -> Rat {
    let (i, j) = pairing::unpair_big(index);
    Rat::new(pairing::nat_to_int(&i), BigInt::from(j) + BigInt::one())
}

/// A preimage of `q` under [`rat_enum`]: the index built from the reduced
/// numerator and denominator.
pub fn rat_index(q: &Rat) -> BigUint {
    let numer = pairing::int_to_nat(q.numer());
    let denom = q.denom().to_biguint().expect("denominators are positive") - BigUint::one();
    pairing::pair_big(&numer, &denom)
}

/// Translate a rational-approximation name of a real into a dense-sequence
/// name over [`rat_enum`]: level `n` indexes the approximation at `2^-n`.
pub fn rq_to_metric(name: &RealName) -> MetricName {
    let name = name.clone();
    MetricName::new(move |n| rat_index(&name.query(&two_pow(-(n as i64)))))
}

/// The reverse translation: answer accuracy `eps` with the dense element at
/// the least level `n` with `2^-n <= eps`.
pub fn metric_to_rq(name: &MetricName) -> RealName {
    let name = name.clone();
    Name::new(move |eps: &Rat| {
        let mut n: u64 = 0;
        while two_pow(-(n as i64)) > *eps {
            n += 1;
        }
        rat_enum(&name.index(n))
    })
}

/// `|x - r_{name(n)}| <= 2^-n` for all levels below `levels` — the validity
/// of a dense-sequence name against an exact rational test point.
pub fn metric_name_validates(name: &MetricName, x: &Rat, levels: u64) -> bool {
    use num::Signed;
    (0..levels).all(|n| (x - rat_enum(&name.index(n))).abs() <= two_pow(-(n as i64)))
}
