//! Fuel-bounded partial computation.
//!
//! A [`FuelMachine`] is a total function `(effort, input) -> Option<output>`;
//! the partial operation it models returns whatever the machine returns at
//! the least converging effort. An [`OperatorMachine`] additionally consults
//! an oracle name, and all oracle access goes through a logging wrapper so
//! that every run yields a certificate: the finite list of questions the
//! result depended on.

use std::cell::RefCell;
use std::sync::Arc;

use crate::name::Name;
use crate::pairing;

/// Effort-indexed optional-valued function modeling a partial computation.
pub struct FuelMachine<S, T> {
    step: Arc<dyn Fn(u64, &S) -> Option<T> + Send + Sync>,
}

impl<S, T> Clone for FuelMachine<S, T> {
    fn clone(&self) -> Self {
        FuelMachine {
            step: Arc::clone(&self.step),
        }
    }
}

impl<S, T> FuelMachine<S, T> {
    pub fn new(step: impl Fn(u64, &S) -> Option<T> + Send + Sync + 'static) -> Self {
        FuelMachine {
            step: Arc::new(step),
        }
    }

    /// Raw machine output at a fixed effort.
    pub fn step(&self, effort: u64, input: &S) -> Option<T> {
        (self.step)(effort, input)
    }

    /// Value at the least effort `n <= budget` where the machine converges.
    /// An absent result is indistinguishable from divergence; callers
    /// escalate budgets.
    pub fn eval_fuel(&self, input: &S, budget: u64) -> Option<T> {
        (0..=budget).find_map(|n| self.step(n, input))
    }
}

impl<S: 'static, T: 'static> FuelMachine<S, T> {
    /// First-hit monotonization: effort `n` scans efforts `0..=n` and keeps
    /// the first value. The result returns the same value on all bigger
    /// efforts, so the specification it induces is singlevalued and tightens
    /// the original one without shrinking its domain.
    pub fn monotonize(&self) -> FuelMachine<S, T> {
        let inner = self.clone();
        FuelMachine::new(move |n, s| inner.eval_fuel(s, n))
    }
}

/// Sequential composition through the effort parameter: the combined effort
/// is a Cantor code `<n, m>` splitting into the efforts of the two stages.
pub fn phi_compose<R, S, T>(
    second: &FuelMachine<S, T>,
    first: &FuelMachine<R, S>,
) -> FuelMachine<R, T>
where
    R: 'static,
    S: 'static,
    T: 'static,
{
    let second = second.clone();
    let first = first.clone();
    FuelMachine::new(move |effort, r| {
        let (n, m) = pairing::unpair(effort);
        first.step(m, r).and_then(|s| second.step(n, &s))
    })
}

/// Certificate data: the questions a run asked, in first-access order,
/// deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QueryLog<Q> {
    queries: Vec<Q>,
}

impl<Q> QueryLog<Q> {
    pub fn queries(&self) -> &[Q] {
        &self.queries
    }

    pub fn len(&self) -> usize {
        self.queries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.queries.is_empty()
    }
}

impl<Q> std::ops::Deref for QueryLog<Q> {
    type Target = [Q];

    fn deref(&self) -> &[Q] {
        &self.queries
    }
}

/// Logging wrapper around an oracle name. Machines only see the oracle
/// through this handle, so the recorded log is a certificate by construction.
pub struct Oracle<Q, A> {
    name: Name<Q, A>,
    log: RefCell<Vec<Q>>,
}

impl<Q: Clone + PartialEq, A> Oracle<Q, A> {
    pub fn new(name: Name<Q, A>) -> Self {
        Oracle {
            name,
            log: RefCell::new(Vec::new()),
        }
    }

    /// Query the oracle, recording the question on first access.
    pub fn ask(&self, q: &Q) -> A {
        let mut log = self.log.borrow_mut();
        if !log.iter().any(|seen| seen == q) {
            log.push(q.clone());
        }
        drop(log);
        self.name.query(q)
    }

    pub fn into_log(self) -> QueryLog<Q> {
        QueryLog {
            queries: self.log.into_inner(),
        }
    }
}

/// Effort-indexed machine consulting an oracle: models a partial operator
/// between naming spaces, one output question at a time.
pub struct OperatorMachine<Q, A, QO, AO> {
    step: Arc<dyn Fn(u64, &Oracle<Q, A>, &QO) -> Option<AO> + Send + Sync>,
}

impl<Q, A, QO, AO> Clone for OperatorMachine<Q, A, QO, AO> {
    fn clone(&self) -> Self {
        OperatorMachine {
            step: Arc::clone(&self.step),
        }
    }
}

impl<Q, A, QO, AO> OperatorMachine<Q, A, QO, AO>
where
    Q: Clone + PartialEq,
{
    pub fn new(
        step: impl Fn(u64, &Oracle<Q, A>, &QO) -> Option<AO> + Send + Sync + 'static,
    ) -> Self {
        OperatorMachine {
            step: Arc::new(step),
        }
    }

    /// Least-effort result within the budget.
    pub fn eval_op(&self, oracle: &Name<Q, A>, question: &QO, budget: u64) -> Option<AO> {
        self.eval_op_logged(oracle, question, budget).0
    }

    /// Like [`eval_op`](Self::eval_op) but also returns the query log of the
    /// whole evaluation, covering every effort that was tried. Any oracle
    /// coinciding with this one on the log reproduces the same result and the
    /// same log at the same budget.
    pub fn eval_op_logged(
        &self,
        oracle: &Name<Q, A>,
        question: &QO,
        budget: u64,
    ) -> (Option<AO>, QueryLog<Q>) {
        let wrapped = Oracle::new(oracle.clone());
        let mut result = None;
        for effort in 0..=budget {
            if let Some(answer) = (self.step)(effort, &wrapped, question) {
                result = Some(answer);
                break;
            }
        }
        (result, wrapped.into_log())
    }
}

/// The search operator on Cantor space: at effort `n` it returns the least
/// `k <= n` with `oracle(k) = 0`, and diverges on oracles without zeros.
pub fn search_machine() -> OperatorMachine<u64, u64, (), u64> {
    OperatorMachine::new(|n, oracle, _| (0..=n).find(|k| oracle.ask(k) == 0))
}

/// The section machine: at effort `n` it answers `n` when `oracle(n)` equals
/// the target question, so evaluation finds the least preimage.
pub fn section_machine() -> OperatorMachine<u64, u64, u64, u64> {
    OperatorMachine::new(|n, oracle, q| if oracle.ask(&n) == *q { Some(n) } else { None })
}

/// A machine ignoring oracle and effort.
pub fn const_machine<Q, A, QO, AO>(answer: AO) -> OperatorMachine<Q, A, QO, AO>
where
    Q: Clone + PartialEq + 'static,
    A: 'static,
    QO: 'static,
    AO: Clone + Send + Sync + 'static,
{
    OperatorMachine::new(move |_, _, _| Some(answer.clone()))
}
