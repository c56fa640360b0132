//! Sierpinski space and enumeration encodings of subsets of the naturals.
//!
//! An open subset of ℕ is named by enumerating its elements, a closed subset
//! by enumerating its complement. The enumeration convention is uniform:
//! value `0` means "nothing emitted this step", value `k+1` emits `k`. Open
//! sets translate to sequences of Sierpinski points and back, complementation
//! is the literal identity on the underlying function, and the closed-choice
//! adversary constructs, for any logged candidate realizer, a name it must
//! answer incorrectly on.

use crate::machines::{OperatorMachine, QueryLog};
use crate::name::Name;
use crate::pairing;

/// Name of a Sierpinski point: `true` anywhere means "top".
pub type SierpName = Name<u64, bool>;

/// Name of a sequence of Sierpinski points; questions pair a slice index
/// with a probe step.
pub type SierpSeqName = Name<(u64, u64), bool>;

/// Name of an open subset of ℕ under the emit convention.
#[derive(Clone)]
pub struct OpenEnumName(pub Name<u64, u64>);

/// Name of a closed subset of ℕ: the same data, read as an enumeration of
/// the complement.
#[derive(Clone)]
pub struct ClosedEnumName(pub Name<u64, u64>);

impl std::fmt::Debug for OpenEnumName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let prefix: Vec<u64> = (0..8).map(|m| self.0.query(&m)).collect();
        write!(f, "OpenEnumName({prefix:?}...)")
    }
}

impl std::fmt::Debug for ClosedEnumName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let prefix: Vec<u64> = (0..8).map(|m| self.0.query(&m)).collect();
        write!(f, "ClosedEnumName({prefix:?}...)")
    }
}

/// Semi-decide "top": a witness among the first `fuel` probes. Monotone in
/// `fuel`; absence conflates "bottom" with "not yet".
pub fn sierp_eval(name: &SierpName, fuel: u64) -> Option<()> {
    (0..fuel).any(|n| name.query(&n)).then_some(())
}

/// An open-set name from an explicit finite element list.
pub fn open_from_set(elements: &[u64]) -> OpenEnumName {
    let elements = elements.to_vec();
    OpenEnumName(Name::new(move |step: &u64| {
        elements.get(*step as usize).map_or(0, |e| e + 1)
    }))
}

/// Does the open set contain `n`, looking at the first `fuel` enumeration
/// steps?
pub fn member_open(name: &OpenEnumName, n: u64, fuel: u64) -> bool {
    (0..fuel).any(|m| name.0.query(&m) == n + 1)
}

/// Does the closed set contain `n`, as certified by the first `fuel` steps
/// of its complement enumeration?
pub fn member_closed(name: &ClosedEnumName, n: u64, fuel: u64) -> bool {
    (0..fuel).all(|m| name.0.query(&m) != n + 1)
}

/// Translate an open-set name to a sequence of Sierpinski names: slice `i`
/// fires at step `m` exactly when the enumeration emits `i` there.
pub fn open_to_sw(name: &OpenEnumName) -> SierpSeqName {
    let name = name.0.clone();
    Name::new(move |q: &(u64, u64)| name.query(&q.1) == q.0 + 1)
}

/// One slice of a Sierpinski sequence.
pub fn sierp_slice(name: &SierpSeqName, index: u64) -> SierpName {
    let name = name.clone();
    Name::new(move |m: &u64| name.query(&(index, *m)))
}

/// Translate back by dovetailing over (slice, probe) pairs: step `<i, m>`
/// emits `i` when slice `i` fires at probe `m`.
pub fn sw_to_on(name: &SierpSeqName) -> OpenEnumName {
    let name = name.clone();
    OpenEnumName(Name::new(move |step: &u64| {
        let (i, m) = pairing::unpair(*step);
        if name.query(&(i, m)) {
            i + 1
        } else {
            0
        }
    }))
}

/// Complementation as the identity on the underlying enumeration.
pub fn closed_complement(name: &OpenEnumName) -> ClosedEnumName {
    ClosedEnumName(name.0.clone())
}

/// And back.
pub fn open_complement(name: &ClosedEnumName) -> OpenEnumName {
    OpenEnumName(name.0.clone())
}

/// What the adversary observed about a fooled candidate.
#[derive(Debug, Clone)]
pub struct FoolingReport {
    /// The constructed closed-set name the candidate answers incorrectly on.
    pub fooling_name: ClosedEnumName,
    /// Enumeration prefix of the fooling name, for display.
    pub name_prefix: Vec<u64>,
    /// The candidate's answer on the canonical name of `{0}`.
    pub first_answer: u64,
    /// The candidate's answer on the fooling name; it is outside the set the
    /// fooling name describes.
    pub second_answer: u64,
    /// A verified element of the fooling set, witnessing non-emptiness.
    pub witness_member: u64,
    /// The query log of the first run; the fooling name copies the original
    /// on exactly these questions.
    pub certificate: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdversaryError {
    /// The candidate converged on the name of `{0}` but did not answer `0`.
    NotARealizer { answer: u64 },
    /// The candidate did not converge within the budget.
    BudgetExhausted,
}

impl std::fmt::Display for AdversaryError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AdversaryError::NotARealizer { answer } => {
                write!(f, "not a realizer: answered {answer} on a name of {{0}}")
            }
            AdversaryError::BudgetExhausted => write!(f, "budget exhausted"),
        }
    }
}

impl std::error::Error for AdversaryError {}

/// Outcome of the adversary run against a candidate.
#[derive(Debug, Clone)]
pub enum ChoiceOutcome {
    /// The candidate repeated its answer on a set that excludes it.
    Fooled(FoolingReport),
    /// The candidate escaped: it changed its answer, or its answer landed
    /// inside the rewritten set. Structurally impossible for machines whose
    /// oracle access is logged, kept for honesty.
    Survived { second_answer: u64 },
}

/// The discontinuity construction for closed choice on ℕ.
///
/// Runs the candidate on the canonical name of `{0}` (complement enumerated
/// as `1, 2, 3, ...`), demands the answer `0`, then rewrites the name to `1`
/// ("emit 0 into the complement") everywhere outside the recorded query log.
/// The rewritten name describes a nonempty set that excludes `0`, yet the
/// candidate cannot distinguish it from the original.
pub fn choice_adversary(
    candidate: &OperatorMachine<u64, u64, (), u64>,
    budget: u64,
) -> Result<ChoiceOutcome, AdversaryError> {
    let singleton_zero = Name::new(|m: &u64| m + 2);
    let (first, log) = candidate.eval_op_logged(&singleton_zero, &(), budget);
    let first_answer = match first {
        None => return Err(AdversaryError::BudgetExhausted),
        Some(0) => 0,
        Some(other) => return Err(AdversaryError::NotARealizer { answer: other }),
    };

    let fooling_name = fooling_name(&singleton_zero, &log);
    let (second, _) = candidate.eval_op_logged(&fooling_name.0, &(), budget);
    let second_answer = match second {
        None => return Err(AdversaryError::BudgetExhausted),
        Some(a) => a,
    };
    if second_answer != first_answer {
        return Ok(ChoiceOutcome::Survived { second_answer });
    }

    // The fooling set omits 0 and everything the logged prefix emitted, and
    // nothing else: the scan fuel below covers every logged position plus an
    // unlogged one, so membership of the scanned values is decided exactly.
    let max_emitted = log.iter().map(|&m| m + 1).max().unwrap_or(0);
    let scan_fuel = max_emitted + 2;
    let witness_member = (1..=max_emitted + 1)
        .find(|&n| member_closed(&fooling_name, n, scan_fuel))
        .expect("a finite log cannot exclude every natural number");
    if member_closed(&fooling_name, second_answer, scan_fuel) {
        return Ok(ChoiceOutcome::Survived { second_answer });
    }

    Ok(ChoiceOutcome::Fooled(FoolingReport {
        name_prefix: (0..16).map(|m| fooling_name.0.query(&m)).collect(),
        fooling_name,
        first_answer,
        second_answer,
        witness_member,
        certificate: log.queries().to_vec(),
    }))
}

/// Copy the original on the logged questions, emit `0` into the complement
/// everywhere else.
fn fooling_name(original: &Name<u64, u64>, log: &QueryLog<u64>) -> ClosedEnumName {
    let original = original.clone();
    let log = log.queries().to_vec();
    ClosedEnumName(Name::new(move |m: &u64| {
        if log.contains(m) {
            original.query(m)
        } else {
            1
        }
    }))
}

/// Candidate answering `0` without looking at the oracle.
pub fn always_zero_candidate() -> OperatorMachine<u64, u64, (), u64> {
    OperatorMachine::new(|_, _, _| Some(0))
}

/// Candidate answering the least number not excluded by the first `k`
/// complement values.
pub fn scan_candidate(k: u64) -> OperatorMachine<u64, u64, (), u64> {
    OperatorMachine::new(move |_, oracle: &crate::machines::Oracle<u64, u64>, _| {
        let excluded: Vec<u64> = (0..k)
            .filter_map(|m| oracle.ask(&m).checked_sub(1))
            .collect();
        (0..).find(|n| !excluded.contains(n))
    })
}

/// Candidate that never converges.
pub fn diverging_candidate() -> OperatorMachine<u64, u64, (), u64> {
    OperatorMachine::new(|_, _, _| None)
}
