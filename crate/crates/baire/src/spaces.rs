//! Represented spaces and their constructors.
//!
//! A space descriptor packages enumerations of the question and answer sets
//! of a naming space together with a name-validity predicate. The predicate
//! is specification data for the tests: runtime code only ever manipulates
//! names, and validity of infinitary encodings (sequences, functions) is
//! checked by sampling.

use std::sync::Arc;

use crate::name::Name;
use crate::pairing;
use crate::universal::{u_eval, Associate, Reply};

/// Binary sum of question sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sum<L, R> {
    Left(L),
    Right(R),
}

/// Points of sequence spaces, for the test predicates.
pub type SeqPoint<I, X> = Arc<dyn Fn(&I) -> X + Send + Sync>;

/// Points of function spaces, for the test predicates.
pub type PointFn<X, Y> = Arc<dyn Fn(&X) -> Y + Send + Sync>;

/// A represented space: enumerated question/answer sets plus the (test-only)
/// representation predicate relating names to points.
pub struct Space<Q, A, X> {
    question_enum: Arc<dyn Fn(u64) -> Q + Send + Sync>,
    answer_enum: Arc<dyn Fn(u64) -> A + Send + Sync>,
    names_point: Arc<dyn Fn(&Name<Q, A>, &X) -> bool + Send + Sync>,
}

impl<Q, A, X> Clone for Space<Q, A, X> {
    fn clone(&self) -> Self {
        Space {
            question_enum: Arc::clone(&self.question_enum),
            answer_enum: Arc::clone(&self.answer_enum),
            names_point: Arc::clone(&self.names_point),
        }
    }
}

impl<Q, A, X> Space<Q, A, X> {
    pub fn new(
        question_enum: impl Fn(u64) -> Q + Send + Sync + 'static,
        answer_enum: impl Fn(u64) -> A + Send + Sync + 'static,
        names_point: impl Fn(&Name<Q, A>, &X) -> bool + Send + Sync + 'static,
    ) -> Self {
        Space {
            question_enum: Arc::new(question_enum),
            answer_enum: Arc::new(answer_enum),
            names_point: Arc::new(names_point),
        }
    }

    pub fn question(&self, n: u64) -> Q {
        (self.question_enum)(n)
    }

    pub fn answer(&self, n: u64) -> A {
        (self.answer_enum)(n)
    }

    /// Does the name describe the point? Sampling-based for infinitary data.
    pub fn names_point(&self, name: &Name<Q, A>, point: &X) -> bool {
        (self.names_point)(name, point)
    }
}

/// The discrete space over a countable set: one question, the point itself
/// as answer.
pub fn discrete<I>(answer_enum: impl Fn(u64) -> I + Send + Sync + 'static) -> Space<(), I, I>
where
    I: PartialEq + 'static,
{
    Space::new(|_| (), answer_enum, |name, i| name.query(&()) == *i)
}

/// The only sensible name of a discrete point.
pub fn discrete_name<I: Clone + Send + Sync + 'static>(i: I) -> Name<(), I> {
    Name::constant(i)
}

/// Product space: questions are tagged component questions (enumerated
/// even/odd), answers are pairs with one slot per component.
pub fn product<QX, AX, X, QY, AY, Y>(
    x: &Space<QX, AX, X>,
    y: &Space<QY, AY, Y>,
) -> Space<Sum<QX, QY>, (AX, AY), (X, Y)>
where
    QX: Clone + Send + Sync + 'static,
    AX: Clone + Send + Sync + 'static,
    X: 'static,
    QY: Clone + Send + Sync + 'static,
    AY: Clone + Send + Sync + 'static,
    Y: 'static,
{
    let (xe, ye) = (x.clone(), y.clone());
    let (xa, ya) = (x.clone(), y.clone());
    Space::new(
        move |n| {
            if n % 2 == 0 {
                Sum::Left(xe.question(n / 2))
            } else {
                Sum::Right(ye.question(n / 2))
            }
        },
        move |n| {
            let (i, j) = pairing::unpair(n);
            (xa.answer(i), ya.answer(j))
        },
        {
            let (xs, ys) = (x.clone(), y.clone());
            move |name: &Name<Sum<QX, QY>, (AX, AY)>, point: &(X, Y)| {
                xs.names_point(&proj_left(name), &point.0)
                    && ys.names_point(&proj_right(name), &point.1)
            }
        },
    )
}

/// First projection on names: answer left-tagged questions, keep the first
/// answer component.
pub fn proj_left<QX, QY, AX, AY>(pair: &Name<Sum<QX, QY>, (AX, AY)>) -> Name<QX, AX>
where
    QX: Clone + 'static,
    QY: 'static,
    AX: 'static,
    AY: 'static,
{
    let pair = pair.clone();
    Name::new(move |q: &QX| pair.query(&Sum::Left(q.clone())).0)
}

/// Second projection on names.
pub fn proj_right<QX, QY, AX, AY>(pair: &Name<Sum<QX, QY>, (AX, AY)>) -> Name<QY, AY>
where
    QX: 'static,
    QY: Clone + 'static,
    AX: 'static,
    AY: 'static,
{
    let pair = pair.clone();
    Name::new(move |q: &QY| pair.query(&Sum::Right(q.clone())).1)
}

/// Embed two component names into one product name. Off-component slots are
/// filled with the component's answer to its first enumerated question, so
/// both projections recover the originals exactly.
pub fn pair_names<QX, AX, X, QY, AY, Y>(
    x: &Space<QX, AX, X>,
    y: &Space<QY, AY, Y>,
    left: &Name<QX, AX>,
    right: &Name<QY, AY>,
) -> Name<Sum<QX, QY>, (AX, AY)>
where
    QX: Send + Sync + 'static,
    AX: Send + Sync + 'static,
    QY: Send + Sync + 'static,
    AY: Send + Sync + 'static,
    X: 'static,
    Y: 'static,
{
    let (left, right) = (left.clone(), right.clone());
    let (x0, y0) = (x.question(0), y.question(0));
    Name::new(move |q: &Sum<QX, QY>| match q {
        Sum::Left(qx) => (left.query(qx), right.query(&y0)),
        Sum::Right(qy) => (left.query(&x0), right.query(qy)),
    })
}

/// Product of realizers: apply one per component.
pub fn fprd<QX, AX, QY, AY, QX2, AX2, X2, QY2, AY2, Y2>(
    x2: &Space<QX2, AX2, X2>,
    y2: &Space<QY2, AY2, Y2>,
    f: impl Fn(&Name<QX, AX>) -> Name<QX2, AX2>,
    g: impl Fn(&Name<QY, AY>) -> Name<QY2, AY2>,
    pair: &Name<Sum<QX, QY>, (AX, AY)>,
) -> Name<Sum<QX2, QY2>, (AX2, AY2)>
where
    QX: Clone + 'static,
    AX: 'static,
    QY: Clone + 'static,
    AY: 'static,
    QX2: Send + Sync + 'static,
    AX2: Send + Sync + 'static,
    QY2: Send + Sync + 'static,
    AY2: Send + Sync + 'static,
    X2: 'static,
    Y2: 'static,
{
    pair_names(x2, y2, &f(&proj_left(pair)), &g(&proj_right(pair)))
}

/// Space of sequences indexed by a countable set: questions pair an index
/// with a component question, and a name is valid when every sampled slice
/// names the corresponding entry.
pub fn seq_space<I, QX, AX, X>(
    idx_enum: Arc<dyn Fn(u64) -> I + Send + Sync>,
    x: &Space<QX, AX, X>,
    index_samples: u64,
) -> Space<(I, QX), AX, SeqPoint<I, X>>
where
    I: Clone + Send + Sync + 'static,
    QX: Clone + Send + Sync + 'static,
    AX: Send + Sync + 'static,
    X: 'static,
{
    let xs = x.clone();
    let xq = x.clone();
    let idx = Arc::clone(&idx_enum);
    Space::new(
        move |n| {
            let (i, j) = pairing::unpair(n);
            (idx_enum(i), xq.question(j))
        },
        {
            let xa = x.clone();
            move |n| xa.answer(n)
        },
        move |name: &Name<(I, QX), AX>, point: &SeqPoint<I, X>| {
            (0..index_samples).all(|k| {
                let i = idx(k);
                xs.names_point(&slice_name(name, i.clone()), &point(&i))
            })
        },
    )
}

/// Extract one slice of a sequence name.
pub fn slice_name<I, QX, AX>(name: &Name<(I, QX), AX>, index: I) -> Name<QX, AX>
where
    I: Clone + Send + Sync + 'static,
    QX: Clone + 'static,
    AX: 'static,
{
    let name = name.clone();
    Name::new(move |q: &QX| name.query(&(index.clone(), q.clone())))
}

/// Re-bundle a family of slice names into a sequence name.
pub fn bundle_names<I, QX, AX>(
    slices: Arc<dyn Fn(&I) -> Name<QX, AX> + Send + Sync>,
) -> Name<(I, QX), AX>
where
    I: 'static,
    QX: 'static,
    AX: 'static,
{
    Name::new(move |q: &(I, QX)| slices(&q.0).query(&q.1))
}

/// Pointwise lift of a realizer to sequence names.
pub fn ptw_lift<I, QX, AX, QY, AY>(
    realizer: Arc<dyn Fn(&Name<QX, AX>) -> Name<QY, AY> + Send + Sync>,
    name: &Name<(I, QX), AX>,
) -> Name<(I, QY), AY>
where
    I: Clone + Send + Sync + 'static,
    QX: Clone + Send + Sync + 'static,
    AX: Send + Sync + 'static,
    QY: 'static,
    AY: 'static,
{
    let name = name.clone();
    Name::new(move |q: &(I, QY)| realizer(&slice_name(&name, q.0.clone())).query(&q.1))
}

/// Function space: names are dialogue strategies, and a name is valid when,
/// on every sample, evaluating it on a name of the point yields a name of
/// the value. The budget must cover every dialogue the component validity
/// predicate triggers.
pub fn fun_space<QX, AX, X, QY, AY, Y>(
    x: &Space<QX, AX, X>,
    y: &Space<QY, AY, Y>,
    samples: Vec<(Name<QX, AX>, X)>,
    budget: u64,
) -> Space<(Vec<AX>, QY), Reply<QX, AY>, PointFn<X, Y>>
where
    QX: Clone + Send + Sync + 'static,
    AX: Clone + Send + Sync + 'static,
    X: Send + Sync + 'static,
    QY: Clone + Send + Sync + 'static,
    AY: Clone + Send + Sync + 'static,
    Y: 'static,
{
    let ys = y.clone();
    let yq = y.clone();
    let xa = x.clone();
    let xq = x.clone();
    let ya = y.clone();
    Space::new(
        move |n| {
            let (list, j) = pairing::unpair(n);
            let answers = pairing::decode_seq(list)
                .into_iter()
                .map(|k| xa.answer(k))
                .collect();
            (answers, yq.question(j))
        },
        move |n| {
            if n % 2 == 0 {
                Reply::Ask(
                    pairing::decode_seq(n / 2)
                        .into_iter()
                        .map(|k| xq.question(k))
                        .collect(),
                )
            } else {
                Reply::Answer(ya.answer(n / 2))
            }
        },
        move |name: &Name<(Vec<AX>, QY), Reply<QX, AY>>, f: &PointFn<X, Y>| {
            let strategy = Associate::from_name(name.clone());
            samples.iter().all(|(phi, x_pt)| {
                let out = eval_name(&strategy, phi, budget);
                ys.names_point(&out, &f(x_pt))
            })
        },
    )
}

/// The evaluation realizer in partial form: each output answer is a dialogue
/// run, absent when the loop budget runs out.
pub fn eval_name_opt<Q, A, QO, AO>(
    strategy: &Associate<Q, A, QO, AO>,
    oracle: &Name<Q, A>,
    max_loops: u64,
) -> Name<QO, Option<AO>>
where
    Q: Clone + Send + Sync + 'static,
    A: Send + Sync + 'static,
    QO: 'static,
    AO: Clone + Send + Sync + 'static,
{
    let strategy = strategy.clone();
    let oracle = oracle.clone();
    Name::new(move |q: &QO| u_eval(&strategy, &oracle, q, max_loops))
}

/// Total form of [`eval_name_opt`] for dialogues known to converge; panics
/// when the budget runs out.
pub fn eval_name<Q, A, QO, AO>(
    strategy: &Associate<Q, A, QO, AO>,
    oracle: &Name<Q, A>,
    max_loops: u64,
) -> Name<QO, AO>
where
    Q: Clone + Send + Sync + 'static,
    A: Send + Sync + 'static,
    QO: 'static,
    AO: Clone + Send + Sync + 'static,
{
    let strategy = strategy.clone();
    let oracle = oracle.clone();
    Name::new(move |q: &QO| {
        u_eval(&strategy, &oracle, q, max_loops).expect("dialogue exhausted its loop budget")
    })
}

/// Evaluation as an operation on a product name of (strategy, argument).
pub fn eval_pair<QX, AX, QY, AY>(
    pair: &Name<Sum<(Vec<AX>, QY), QX>, (Reply<QX, AY>, AX)>,
    question: &QY,
    max_loops: u64,
) -> Option<AY>
where
    QX: Clone + Send + Sync + 'static,
    AX: Clone + Send + Sync + 'static,
    QY: Clone + Send + Sync + 'static,
    AY: Clone + Send + Sync + 'static,
{
    let strategy = Associate::from_name(proj_left(pair));
    let argument = proj_right(pair);
    u_eval(&strategy, &argument, question, max_loops)
}

/// Translate a sequence name into a dialogue strategy for the corresponding
/// function out of the discrete index space: ask for the index once, then
/// answer from the slice.
pub fn seq_to_fun<I, QX, AX>(name: &Name<(I, QX), AX>) -> Associate<(), I, QX, AX>
where
    I: Clone + Send + Sync + 'static,
    QX: Clone + Send + Sync + 'static,
    AX: Send + Sync + 'static,
{
    let name = name.clone();
    Associate::new(move |answers: &[I], q: &QX| {
        if answers.is_empty() {
            Reply::Ask(vec![()])
        } else {
            Reply::Answer(name.query(&(answers[0].clone(), q.clone())))
        }
    })
}

/// Translate a dialogue strategy back into a (partial) sequence name by
/// evaluating it on the canonical name of each index.
pub fn fun_to_seq<I, QX, AX>(
    strategy: &Associate<(), I, QX, AX>,
    max_loops: u64,
) -> Name<(I, QX), Option<AX>>
where
    I: Clone + Send + Sync + 'static,
    QX: Clone + Send + Sync + 'static,
    AX: Clone + Send + Sync + 'static,
{
    let strategy = strategy.clone();
    Name::new(move |q: &(I, QX)| u_eval(&strategy, &discrete_name(q.0.clone()), &q.1, max_loops))
}

/// View a name as a sequence name over its own question set.
pub fn graph_name<Q, A>(name: &Name<Q, A>) -> Name<(Q, ()), A>
where
    Q: Clone + 'static,
    A: 'static,
{
    let name = name.clone();
    Name::new(move |q: &(Q, ())| name.query(&q.0))
}

/// Inverse of [`graph_name`].
pub fn ungraph_name<Q, A>(name: &Name<(Q, ()), A>) -> Name<Q, A>
where
    Q: Clone + 'static,
    A: 'static,
{
    let name = name.clone();
    Name::new(move |q: &Q| name.query(&(q.clone(), ())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reals::{add_realizer, mul_realizer, rat_name, real_space, two_pow, Rat};
    use crate::universal::u_eval_traced;
    use num::{BigRational, FromPrimitive, Signed};

    fn rat(n: i64, d: i64) -> Rat {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn discrete_name_validates_its_point() {
        let nat = discrete(|n| n);
        assert!(nat.names_point(&discrete_name(5u64), &5));
        assert!(!nat.names_point(&discrete_name(5u64), &6));
    }

    #[test]
    fn a_name_validates_at_most_one_test_point() {
        let reals = real_space();
        let name = rat_name(rat(1, 3));
        let candidates = [rat(1, 3), rat(1, 2), rat(0, 1), rat(-1, 3), rat(333, 1000)];
        let hits = candidates
            .iter()
            .filter(|x| reals.names_point(&name, x))
            .count();
        assert_eq!(hits, 1);
        let nat = discrete(|n| n);
        let hits = (0..10u64)
            .filter(|i| nat.names_point(&discrete_name(7u64), i))
            .count();
        assert_eq!(hits, 1);
    }

    #[test]
    fn product_of_discretes_names_pairs_componentwise() {
        let nat = discrete(|n| n);
        let prod = product(&nat, &nat);
        let name = pair_names(&nat, &nat, &discrete_name(3u64), &discrete_name(8u64));
        assert!(prod.names_point(&name, &(3, 8)));
        assert!(!prod.names_point(&name, &(3, 9)));
        assert!(!prod.names_point(&name, &(4, 8)));
    }

    #[test]
    fn pairing_then_projecting_recovers_real_names() {
        let reals = real_space();
        let third = rat_name(rat(1, 3));
        let sixth = rat_name(rat(1, 6));
        let paired = pair_names(&reals, &reals, &third, &sixth);
        let back_left = proj_left(&paired);
        let back_right = proj_right(&paired);
        for i in 0..10u64 {
            let eps = two_pow(-(i as i64));
            assert_eq!(back_left.query(&eps), third.query(&eps));
            assert_eq!(back_right.query(&eps), sixth.query(&eps));
        }
        assert!(product(&reals, &reals).names_point(&paired, &(rat(1, 3), rat(1, 6))));
    }

    #[test]
    fn projection_value_depends_only_on_its_tagged_question() {
        // the trivial one-question certificate for the first projection
        let reals = real_space();
        let paired = pair_names(&reals, &reals, &rat_name(rat(2, 1)), &rat_name(rat(5, 1)));
        let q = rat(1, 4);
        let certificate = [Sum::Left(q.clone())];
        let same_on_cert = Name::new({
            let paired = paired.clone();
            move |query: &Sum<Rat, Rat>| {
                if certificate.contains(query) {
                    paired.query(query)
                } else {
                    (Rat::from_i64(99).unwrap(), Rat::from_i64(99).unwrap())
                }
            }
        });
        assert_eq!(
            proj_left(&paired).query(&q),
            proj_left(&same_on_cert).query(&q)
        );
    }

    #[test]
    fn fprd_equals_componentwise_application() {
        let reals = real_space();
        let a = rat_name(rat(1, 3));
        let b = rat_name(rat(1, 6));
        let paired = pair_names(&reals, &reals, &a, &b);
        let double = |n: &Name<Rat, Rat>| add_realizer(n, n);
        let halve = |n: &Name<Rat, Rat>| mul_realizer(n, &rat_name(rat(1, 2)));
        let mapped = fprd(&reals, &reals, double, halve, &paired);
        for i in 0..12u64 {
            let eps = two_pow(-(i as i64));
            assert_eq!(
                proj_left(&mapped).query(&eps),
                add_realizer(&a, &a).query(&eps)
            );
            assert_eq!(
                proj_right(&mapped).query(&eps),
                mul_realizer(&b, &rat_name(rat(1, 2))).query(&eps)
            );
        }
    }

    #[test]
    fn constant_sequence_of_halves_validates() {
        let reals = real_space();
        let seq = seq_space(Arc::new(|i| i), &reals, 6);
        let name: Name<(u64, Rat), Rat> = Name::new(|_| rat(1, 2));
        let point: SeqPoint<u64, Rat> = Arc::new(|_| rat(1, 2));
        assert!(seq.names_point(&name, &point));
        let off: SeqPoint<u64, Rat> = Arc::new(|_| rat(1, 3));
        assert!(!seq.names_point(&name, &off));
    }

    #[test]
    fn slicing_and_rebundling_is_the_identity() {
        let name: Name<(u64, Rat), Rat> =
            Name::new(|q: &(u64, Rat)| Rat::from_u64(q.0).unwrap() + q.1.clone());
        let rebundled = bundle_names::<u64, Rat, Rat>({
            let name = name.clone();
            Arc::new(move |i: &u64| slice_name(&name, *i))
        });
        for i in 0..5u64 {
            for d in 1..5i64 {
                let q = (i, rat(1, d));
                assert_eq!(name.query(&q), rebundled.query(&q));
            }
        }
    }

    #[test]
    fn pointwise_lift_of_doubling_names_doubled_sequence() {
        let double: Arc<dyn Fn(&Name<Rat, Rat>) -> Name<Rat, Rat> + Send + Sync> =
            Arc::new(|n| mul_realizer(&rat_name(rat(2, 1)), n));
        // x_i = 1/(i+1), approximated with a jitter of eps/2
        let name: Name<(u64, Rat), Rat> =
            Name::new(|q: &(u64, Rat)| rat(1, q.0 as i64 + 1) + q.1.clone() / rat(2, 1));
        let lifted = ptw_lift(double.clone(), &name);
        for i in 0..3u64 {
            let expected = rat(2, i as i64 + 1);
            for k in 0..=16u64 {
                let eps = two_pow(-(k as i64));
                let approx = slice_name(&lifted, i).query(&eps);
                assert!((expected.clone() - approx).abs() <= eps);
            }
            // lift commutes with slicing
            let direct = double(&slice_name(&name, i));
            assert_eq!(
                direct.query(&rat(1, 1000)),
                slice_name(&lifted, i).query(&rat(1, 1000))
            );
        }
    }

    #[test]
    fn echo_strategy_names_the_identity_function() {
        let reals = real_space();
        let echo: Associate<Rat, Rat, Rat, Rat> = Associate::new(|answers: &[Rat], q: &Rat| {
            if answers.is_empty() {
                Reply::Ask(vec![q.clone()])
            } else {
                Reply::Answer(answers[0].clone())
            }
        });
        let samples = vec![
            (rat_name(rat(1, 3)), rat(1, 3)),
            (rat_name(rat(-2, 7)), rat(-2, 7)),
            (rat_name(rat(0, 1)), rat(0, 1)),
        ];
        let space = fun_space(&reals, &reals, samples, 4);
        let identity: PointFn<Rat, Rat> = Arc::new(|x: &Rat| x.clone());
        assert!(space.names_point(&echo.as_name(), &identity));
        let shifted: PointFn<Rat, Rat> = Arc::new(|x: &Rat| x.clone() + rat(1, 1));
        assert!(!space.names_point(&echo.as_name(), &shifted));
    }

    #[test]
    fn evaluation_realizer_on_doubling_strategy() {
        // strategy asking for eps/2 and answering the doubled approximation
        let doubling: Associate<Rat, Rat, Rat, Rat> = Associate::new(|answers: &[Rat], q: &Rat| {
            if answers.is_empty() {
                Reply::Ask(vec![q.clone() / rat(2, 1)])
            } else {
                Reply::Answer(answers[0].clone() * rat(2, 1))
            }
        });
        let third = rat_name(rat(1, 3));
        let out = eval_name(&doubling, &third, 4);
        for i in 0..=20u64 {
            let eps = two_pow(-(i as i64));
            assert!((rat(2, 3) - out.query(&eps)).abs() <= eps);
        }
        // and through a product name of (strategy, argument)
        let reals = real_space();
        let fun: Space<(Vec<Rat>, Rat), Reply<Rat, Rat>, PointFn<Rat, Rat>> =
            fun_space(&reals, &reals, Vec::new(), 4);
        let paired = pair_names(&fun, &reals, &doubling.as_name(), &third);
        let eps = two_pow(-10);
        let direct = u_eval(&doubling, &third, &eps, 4);
        assert_eq!(eval_pair(&paired, &eps, 4), direct);
        assert!((rat(2, 3) - direct.unwrap()).abs() <= eps);
    }

    #[test]
    fn seq_to_fun_runs_the_two_round_dialogue() {
        let name: Name<(u64, Rat), Rat> = Name::new(|q: &(u64, Rat)| Rat::from_u64(q.0).unwrap());
        let strategy = seq_to_fun(&name);
        assert_eq!(strategy.consult(&[], &rat(1, 10)), Reply::Ask(vec![()]));
        assert_eq!(
            strategy.consult(&[7], &rat(1, 10)),
            Reply::Answer(Rat::from_u64(7).unwrap())
        );
        let trace = u_eval_traced(&strategy, &discrete_name(3u64), &rat(1, 10), 2);
        assert_eq!(trace.rounds.len(), 2);
        assert_eq!(trace.gathered, vec![()]);
        assert_eq!(trace.outcome, Some(Rat::from_u64(3).unwrap()));
    }

    #[test]
    fn seq_to_fun_dialogue_has_the_one_question_modulus() {
        // every function out of a discrete space carries the one-question
        // certificate: the dialogue only ever asks for the index
        use crate::universal::query_modulus;
        let name: Name<(u64, u64), u64> = Name::new(|q: &(u64, u64)| q.0 + q.1);
        let strategy = seq_to_fun(&name);
        for i in 0..6u64 {
            for q in 0..6u64 {
                assert_eq!(
                    query_modulus(&strategy, &discrete_name(i), &q, 2),
                    Some(vec![()])
                );
            }
        }
    }

    #[test]
    fn swapping_the_seq_to_fun_dialogue_preserves_its_value() {
        use crate::universal::d_swap;
        let sequence: Name<(u64, Rat), Rat> =
            Name::new(|q: &(u64, Rat)| Rat::from_u64(q.0).unwrap() + q.1.clone());
        let strategy = seq_to_fun(&sequence);
        for i in 0..5u64 {
            let index_name = discrete_name(i);
            let swapped = d_swap::<(), u64, Rat, Rat>(index_name.clone());
            for d in 1..5i64 {
                let q = rat(1, d);
                let direct = u_eval(&strategy, &index_name, &q, 2);
                assert_eq!(direct, Some(sequence.query(&(i, q.clone()))));
                assert_eq!(u_eval(&swapped, &strategy.as_name(), &q, 3), direct);
            }
        }
    }

    #[test]
    fn built_addition_machine_names_the_half_shift_map() {
        use crate::machines::{OperatorMachine, Oracle};
        use crate::universal::build_associate;
        // machine realizing x -> x + 1/2 on rational-approximation names
        let machine: OperatorMachine<Rat, Rat, Rat, Rat> =
            OperatorMachine::new(|_, oracle: &Oracle<Rat, Rat>, eps: &Rat| {
                Some(oracle.ask(&(eps.clone() / rat(2, 1))) + rat(1, 2))
            });
        // dyadic question enumeration reaches the queried accuracies quickly
        let dyadics: Arc<dyn Fn(u64) -> Rat + Send + Sync> = Arc::new(|i| two_pow(-(i as i64)));
        let strategy = build_associate(machine, dyadics, rat(0, 1), Arc::new(|n| n));

        let reals = real_space();
        let mut samples = Vec::new();
        for k in 0..10i64 {
            let x = rat(2 * k - 9, k + 2);
            samples.push((rat_name(x.clone()), x));
        }
        let space = fun_space(&reals, &reals, samples, 40);
        let shift: PointFn<Rat, Rat> = Arc::new(|x: &Rat| x.clone() + rat(1, 2));
        assert!(space.names_point(&strategy.as_name(), &shift));
        let identity: PointFn<Rat, Rat> = Arc::new(|x: &Rat| x.clone());
        assert!(!space.names_point(&strategy.as_name(), &identity));
    }

    #[test]
    fn fun_to_seq_inverts_seq_to_fun_at_budget_two() {
        let name: Name<(u64, u64), u64> = Name::new(|q: &(u64, u64)| q.0 * 10 + q.1 % 10);
        let round_trip = fun_to_seq(&seq_to_fun(&name), 2);
        for i in 0..8 {
            for q in 0..8 {
                assert_eq!(round_trip.query(&(i, q)), Some(name.query(&(i, q))));
            }
        }
    }

    #[test]
    fn diverging_strategy_gives_all_absent_entries() {
        let stubborn: Associate<(), u64, u64, u64> = Associate::new(|_, _| Reply::Ask(vec![()]));
        let name = fun_to_seq(&stubborn, 10);
        for i in 0..4 {
            assert_eq!(name.query(&(i, 0)), None);
        }
        let constant: Associate<(), u64, u64, u64> = Associate::constant(9);
        let name = fun_to_seq(&constant, 1);
        for i in 0..4 {
            assert_eq!(name.query(&(i, 3)), Some(9));
        }
    }

    #[test]
    fn graph_translations_compose_to_identities() {
        let name: Name<u64, u64> = Name::new(|q: &u64| q * q + 1);
        let there_and_back = ungraph_name(&graph_name(&name));
        for q in 0..32 {
            assert_eq!(name.query(&q), there_and_back.query(&q));
        }
        let seq: Name<(u64, ()), u64> = Name::new(|q: &(u64, ())| q.0 + 3);
        let back_and_there = graph_name(&ungraph_name(&seq));
        for q in 0..32 {
            assert_eq!(seq.query(&(q, ())), back_and_there.query(&(q, ())));
        }
    }
}
