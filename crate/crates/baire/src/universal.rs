//! Associates and the dialogue evaluation loop.
//!
//! An associate is a name of a continuous operator: a strategy that, shown
//! the answers received so far and a target question, either asks a finite
//! batch of further oracle questions or commits to a final answer. The
//! evaluation loop [`u_eval`] drives such a strategy against an oracle name.
//! Tracking the questions posed yields certificates and self-modulating
//! moduli of continuity, and [`build_associate`] turns any logged operator
//! machine into a strategy for the loop.

use std::sync::Arc;

use crate::machines::OperatorMachine;
use crate::name::Name;

/// One consultation result: either a batch of oracle questions (the `?`
/// injection) or a final answer (the `!` injection).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reply<Q, AO> {
    Ask(Vec<Q>),
    Answer(AO),
}

/// A dialogue strategy over oracle questions `Q`, oracle answers `A`, target
/// questions `QO` and final answers `AO`. As a name it lives in the naming
/// space with questions `(seq A, QO)` and answers `seq Q + AO`.
pub struct Associate<Q, A, QO, AO> {
    consult: Arc<dyn Fn(&[A], &QO) -> Reply<Q, AO> + Send + Sync>,
}

impl<Q, A, QO, AO> Clone for Associate<Q, A, QO, AO> {
    fn clone(&self) -> Self {
        Associate {
            consult: Arc::clone(&self.consult),
        }
    }
}

impl<Q, A, QO, AO> Associate<Q, A, QO, AO> {
    pub fn new(consult: impl Fn(&[A], &QO) -> Reply<Q, AO> + Send + Sync + 'static) -> Self {
        Associate {
            consult: Arc::new(consult),
        }
    }

    /// A strategy that commits to the same answer immediately.
    pub fn constant(answer: AO) -> Self
    where
        AO: Clone + Send + Sync + 'static,
    {
        Associate::new(move |_, _| Reply::Answer(answer.clone()))
    }

    pub fn consult(&self, answers: &[A], question: &QO) -> Reply<Q, AO> {
        (self.consult)(answers, question)
    }
}

impl<Q, A, QO, AO> Associate<Q, A, QO, AO>
where
    Q: 'static,
    A: Clone + Send + Sync + 'static,
    QO: Clone + Send + Sync + 'static,
    AO: 'static,
{
    /// The associate as a point of its naming space.
    pub fn as_name(&self) -> Name<(Vec<A>, QO), Reply<Q, AO>> {
        let consult = Arc::clone(&self.consult);
        Name::new(move |q: &(Vec<A>, QO)| consult(&q.0, &q.1))
    }

    pub fn from_name(name: Name<(Vec<A>, QO), Reply<Q, AO>>) -> Self {
        Associate::new(move |answers: &[A], question: &QO| {
            name.query(&(answers.to_vec(), question.clone()))
        })
    }
}

/// One round of a dialogue: how many answers the strategy had seen, and what
/// it replied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DialogueRound<Q, AO> {
    pub answers_seen: usize,
    pub reply: Reply<Q, AO>,
}

/// Full record of a [`u_eval`] run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DialogueTrace<Q, AO> {
    pub rounds: Vec<DialogueRound<Q, AO>>,
    /// All questions posed, in dialogue order (not deduplicated).
    pub gathered: Vec<Q>,
    pub outcome: Option<AO>,
}

/// Run the dialogue loop: starting from the empty answer list, consult the
/// strategy; on a question batch extend the list with the oracle's answers
/// and repeat, on a final answer stop. Returns the trace of up to
/// `max_loops` rounds.
pub fn u_eval_traced<Q, A, QO, AO>(
    strategy: &Associate<Q, A, QO, AO>,
    oracle: &Name<Q, A>,
    question: &QO,
    max_loops: u64,
) -> DialogueTrace<Q, AO>
where
    Q: Clone,
    AO: Clone,
{
    let mut answers: Vec<A> = Vec::new();
    let mut rounds = Vec::new();
    let mut gathered = Vec::new();
    let mut outcome = None;
    for _ in 0..max_loops {
        let reply = strategy.consult(&answers, question);
        rounds.push(DialogueRound {
            answers_seen: answers.len(),
            reply: reply.clone(),
        });
        match reply {
            Reply::Answer(a) => {
                outcome = Some(a);
                break;
            }
            Reply::Ask(batch) => {
                gathered.extend(batch.iter().cloned());
                answers.extend(batch.iter().map(|q| oracle.query(q)));
            }
        }
    }
    DialogueTrace {
        rounds,
        gathered,
        outcome,
    }
}

/// The answer of the dialogue loop, absent when the loop budget runs out.
/// Deterministic and monotone in `max_loops`.
pub fn u_eval<Q, A, QO, AO>(
    strategy: &Associate<Q, A, QO, AO>,
    oracle: &Name<Q, A>,
    question: &QO,
    max_loops: u64,
) -> Option<AO>
where
    Q: Clone,
    AO: Clone,
{
    u_eval_traced(strategy, oracle, question, max_loops).outcome
}

/// All questions posed during the first `loops` rounds; prefix-monotone in
/// `loops`.
pub fn gather_queries<Q, A, QO, AO>(
    strategy: &Associate<Q, A, QO, AO>,
    oracle: &Name<Q, A>,
    question: &QO,
    loops: u64,
) -> Vec<Q>
where
    Q: Clone,
    AO: Clone,
{
    u_eval_traced(strategy, oracle, question, loops).gathered
}

/// The self-modulating modulus: present exactly when [`u_eval`] converges
/// within the budget, and then a certificate for the run. Any oracle
/// coinciding with this one on the returned list yields the same answer and
/// the same modulus.
pub fn query_modulus<Q, A, QO, AO>(
    strategy: &Associate<Q, A, QO, AO>,
    oracle: &Name<Q, A>,
    question: &QO,
    max_loops: u64,
) -> Option<Vec<Q>>
where
    Q: Clone,
    AO: Clone,
{
    let trace = u_eval_traced(strategy, oracle, question, max_loops);
    trace.outcome.map(|_| trace.gathered)
}

/// Turn a logged operator machine into a dialogue strategy.
///
/// On answer list `a` the strategy interprets `a` as the oracle's values on
/// the first `|a|` questions of the enumeration, extends with the default
/// answer everywhere else, and runs the machine with `fuel_schedule(|a|)`.
/// The machine's answer is only committed when its query log stayed inside
/// the known prefix; otherwise the strategy asks for the next enumerated
/// question. Answers therefore never depend on the default filling.
pub fn build_associate<Q, A, QO, AO>(
    machine: OperatorMachine<Q, A, QO, AO>,
    question_enum: Arc<dyn Fn(u64) -> Q + Send + Sync>,
    default_answer: A,
    fuel_schedule: Arc<dyn Fn(u64) -> u64 + Send + Sync>,
) -> Associate<Q, A, QO, AO>
where
    Q: Clone + PartialEq + Send + Sync + 'static,
    A: Clone + Send + Sync + 'static,
    QO: 'static,
    AO: 'static,
{
    Associate::new(move |answers: &[A], question: &QO| {
        let known = answers.len() as u64;
        let table: Vec<(Q, A)> = answers
            .iter()
            .enumerate()
            .map(|(i, a)| (question_enum(i as u64), a.clone()))
            .collect();
        let partial_oracle = Name::finite_support(table, default_answer.clone());
        let (result, log) = machine.eval_op_logged(&partial_oracle, question, fuel_schedule(known));
        if let Some(answer) = result {
            let in_prefix = |q: &Q| (0..known).any(|i| question_enum(i) == *q);
            if log.iter().all(in_prefix) {
                return Reply::Answer(answer);
            }
        }
        Reply::Ask(vec![question_enum(known)])
    })
}

/// Swap the arguments of the dialogue loop. The returned strategy, evaluated
/// with a strategy-as-name `psi` as its oracle, replays the dialogue of
/// `psi` against `phi`: for all `psi`, `phi`, `q` and `loops`,
///
/// `u_eval(d_swap(phi), psi.as_name(), q, loops + 1) == u_eval(psi, phi, q, loops)`.
///
/// The one extra round is the relay of the final answer.
pub fn d_swap<Q, A, QO, AO>(phi: Name<Q, A>) -> Associate<(Vec<A>, QO), Reply<Q, AO>, QO, AO>
where
    Q: Clone + Send + Sync + 'static,
    A: Clone + Send + Sync + 'static,
    QO: Clone + Send + Sync + 'static,
    AO: Clone + Send + Sync + 'static,
{
    Associate::new(move |history: &[Reply<Q, AO>], question: &QO| {
        // Rebuild the answer list of the inner dialogue from the replies
        // received so far; relay a final answer as soon as one appears.
        let mut answers: Vec<A> = Vec::new();
        for reply in history {
            match reply {
                Reply::Answer(a) => return Reply::Answer(a.clone()),
                Reply::Ask(batch) => answers.extend(batch.iter().map(|q| phi.query(q))),
            }
        }
        Reply::Ask(vec![(answers, question.clone())])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machines::{const_machine, search_machine, section_machine, Oracle};
    use crate::name::coincide_on;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn identity_enum() -> Arc<dyn Fn(u64) -> u64 + Send + Sync> {
        Arc::new(|i| i)
    }

    fn identity_fuel() -> Arc<dyn Fn(u64) -> u64 + Send + Sync> {
        Arc::new(|n| n)
    }

    #[test]
    fn constant_associate_answers_in_one_loop() {
        let psi: Associate<u64, u64, (), u64> = Associate::constant(5);
        let oracle = Name::constant(0u64);
        assert_eq!(u_eval(&psi, &oracle, &(), 1), Some(5));
        assert!(gather_queries(&psi, &oracle, &(), 10).is_empty());
        assert_eq!(query_modulus(&psi, &oracle, &(), 1), Some(vec![]));
    }

    #[test]
    fn forever_asking_associate_exhausts_any_budget() {
        let psi: Associate<u64, u64, (), u64> =
            Associate::new(|answers, _| Reply::Ask(vec![answers.len() as u64]));
        let oracle = Name::constant(0u64);
        for loops in 1..20 {
            assert_eq!(u_eval(&psi, &oracle, &(), loops), None);
            assert_eq!(query_modulus(&psi, &oracle, &(), loops), None);
        }
        assert_eq!(gather_queries(&psi, &oracle, &(), 3), vec![0, 1, 2]);
    }

    #[test]
    fn empty_batches_consume_loops_without_progress() {
        let psi: Associate<u64, u64, (), u64> = Associate::new(|answers, _| {
            if answers.is_empty() {
                Reply::Ask(Vec::new())
            } else {
                Reply::Answer(1)
            }
        });
        let oracle = Name::constant(0u64);
        // the empty batch never grows the answer list, so no progress
        assert_eq!(u_eval(&psi, &oracle, &(), 50), None);
    }

    #[test]
    fn traces_grow_answer_lists_and_end_on_answers() {
        let psi: Associate<u64, u64, (), u64> = Associate::new(|answers, _| {
            if answers.len() < 4 {
                Reply::Ask(vec![answers.len() as u64, answers.len() as u64 + 10])
            } else {
                Reply::Answer(0)
            }
        });
        let oracle = Name::new(|q: &u64| *q);
        for loops in 1..8u64 {
            let trace = u_eval_traced(&psi, &oracle, &(), loops);
            let lengths: Vec<usize> = trace.rounds.iter().map(|r| r.answers_seen).collect();
            assert!(lengths.windows(2).all(|w| w[0] <= w[1]));
            let ends_in_answer = matches!(
                trace.rounds.last().map(|r| &r.reply),
                Some(Reply::Answer(_))
            );
            assert_eq!(trace.outcome.is_some(), ends_in_answer);
        }
    }

    #[test]
    fn gathered_queries_are_prefix_monotone() {
        let psi: Associate<u64, u64, (), u64> = Associate::new(|answers, _| {
            if answers.len() < 5 {
                Reply::Ask(vec![answers.len() as u64, 100 + answers.len() as u64])
            } else {
                Reply::Answer(answers.iter().sum())
            }
        });
        let oracle = Name::new(|q: &u64| q % 7);
        for n in 0..8u64 {
            let shorter = gather_queries(&psi, &oracle, &(), n);
            let longer = gather_queries(&psi, &oracle, &(), n + 1);
            assert!(longer.starts_with(&shorter));
        }
    }

    #[test]
    fn budget_monotone_once_answered() {
        let psi: Associate<u64, u64, (), u64> = Associate::new(|answers, _| {
            if answers.len() < 3 {
                Reply::Ask(vec![answers.len() as u64])
            } else {
                Reply::Answer(answers.iter().sum())
            }
        });
        let oracle = Name::new(|q: &u64| q + 1);
        let settled = u_eval(&psi, &oracle, &(), 4);
        assert_eq!(settled, Some(6));
        for loops in 4..12 {
            assert_eq!(u_eval(&psi, &oracle, &(), loops), settled);
        }
    }

    #[test]
    fn built_search_associate_agrees_with_direct_evaluation() {
        let built = build_associate(search_machine(), identity_enum(), 1, identity_fuel());
        let chi = Name::finite_support(vec![(0u64, 1u64), (1, 0), (2, 1)], 1);
        assert_eq!(u_eval(&built, &chi, &(), 16), Some(1));
        assert_eq!(search_machine().eval_op(&chi, &(), 16), Some(1));
    }

    #[test]
    fn built_constant_associate_answers_on_empty_list() {
        let machine: OperatorMachine<u64, u64, (), u64> = const_machine(9);
        let built = build_associate(machine, identity_enum(), 0, identity_fuel());
        let trace = u_eval_traced(&built, &Name::constant(0u64), &(), 8);
        assert_eq!(trace.outcome, Some(9));
        assert_eq!(trace.rounds.len(), 1);
    }

    #[test]
    fn built_section_associate_diverges_at_small_budgets() {
        // oracle is the successor function; the section of q=0 needs a
        // preimage that does not exist, so the built strategy keeps asking
        let built = build_associate(section_machine(), identity_enum(), 0, identity_fuel());
        let successor = Name::new(|q: &u64| q + 1);
        assert_eq!(u_eval(&built, &successor, &0, 6), None);
    }

    #[test]
    fn convergent_runs_are_invariant_under_perturbation_outside_modulus() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let built = build_associate(search_machine(), identity_enum(), 1, identity_fuel());
        for _ in 0..60 {
            let support: Vec<(u64, u64)> = (0..10).map(|q| (q, rng.gen_range(0..2))).collect();
            let chi = Name::finite_support(support, 0);
            let loops = 24;
            let Some(modulus) = query_modulus(&built, &chi, &(), loops) else {
                continue;
            };
            let answer = u_eval(&built, &chi, &(), loops);
            for _ in 0..20 {
                let noise: Vec<(u64, u64)> = (0..32)
                    .map(|q| {
                        if modulus.contains(&q) {
                            (q, chi.query(&q))
                        } else {
                            (q, rng.gen_range(0..2))
                        }
                    })
                    .collect();
                let perturbed = Name::finite_support(noise, chi.query(&99));
                assert!(coincide_on(&chi, &perturbed, &modulus));
                assert_eq!(u_eval(&built, &perturbed, &(), loops), answer);
                assert_eq!(
                    query_modulus(&built, &perturbed, &(), loops),
                    Some(modulus.clone())
                );
            }
        }
    }

    #[test]
    fn gathered_prefix_covers_the_machine_log_at_convergence() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let mut convergent = 0;
        for trial in 0..60u64 {
            // a zero-search that ignores its target question, and the section
            // machine; both over u64 target questions
            let make_machine = || -> OperatorMachine<u64, u64, u64, u64> {
                if trial % 2 == 0 {
                    OperatorMachine::new(|n, oracle: &Oracle<u64, u64>, _: &u64| {
                        (0..=n).find(|k| oracle.ask(k) == 0)
                    })
                } else {
                    section_machine()
                }
            };
            let strategy = build_associate(make_machine(), identity_enum(), 0, identity_fuel());
            let support: Vec<(u64, u64)> = (0..10).map(|q| (q, rng.gen_range(0..3))).collect();
            let oracle = Name::finite_support(support, 0);
            let question = rng.gen_range(0..4u64);
            let trace = u_eval_traced(&strategy, &oracle, &question, 32);
            let Some(_) = trace.outcome else { continue };
            convergent += 1;
            let rounds = trace.rounds.len() as u64;
            // one enumerated question per round, final round answers
            assert_eq!(trace.gathered, (0..rounds - 1).collect::<Vec<u64>>());
            // the converged machine run on the reconstructed partial oracle
            // only consulted questions inside the gathered prefix
            let known = (rounds - 1) as usize;
            let table: Vec<(u64, u64)> = (0..known as u64).map(|q| (q, oracle.query(&q))).collect();
            let partial = Name::finite_support(table, 0);
            let (result, log) = make_machine().eval_op_logged(&partial, &question, known as u64);
            assert!(result.is_some());
            assert!(log.iter().all(|q| trace.gathered.contains(q)));
        }
        assert!(convergent > 30);
    }

    #[test]
    fn swap_relays_a_constant_strategy() {
        let psi: Associate<u64, u64, (), u64> = Associate::constant(5);
        let phi = Name::constant(0u64);
        let swapped = d_swap::<u64, u64, (), u64>(phi.clone());
        assert_eq!(u_eval(&psi, &phi, &(), 1), Some(5));
        assert_eq!(u_eval(&swapped, &psi.as_name(), &(), 2), Some(5));
    }

    #[test]
    fn swap_exchange_law_on_search_dialogues() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        let built = build_associate(search_machine(), identity_enum(), 1, identity_fuel());
        for _ in 0..50 {
            let support: Vec<(u64, u64)> = (0..8).map(|q| (q, rng.gen_range(0..2))).collect();
            let chi = Name::finite_support(support, rng.gen_range(0..2));
            let swapped = d_swap::<u64, u64, (), u64>(chi.clone());
            for loops in 1..20 {
                assert_eq!(
                    u_eval(&swapped, &built.as_name(), &(), loops + 1),
                    u_eval(&built, &chi, &(), loops)
                );
            }
        }
    }
}
