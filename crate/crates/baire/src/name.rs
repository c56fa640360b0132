//! Points of naming spaces.

use std::sync::Arc;

/// A point of the naming space `A^Q`: a total function from questions to
/// answers. Names are pure values; cloning shares the underlying function.
pub struct Name<Q, A> {
    f: Arc<dyn Fn(&Q) -> A + Send + Sync>,
}

impl<Q, A> Clone for Name<Q, A> {
    fn clone(&self) -> Self {
        Name {
            f: Arc::clone(&self.f),
        }
    }
}

impl<Q, A> Name<Q, A> {
    pub fn new(f: impl Fn(&Q) -> A + Send + Sync + 'static) -> Self {
        Name { f: Arc::new(f) }
    }

    /// Answer a single question.
    pub fn query(&self, q: &Q) -> A {
        (self.f)(q)
    }
}

impl<Q, A: Clone + Send + Sync + 'static> Name<Q, A> {
    pub fn constant(a: A) -> Self {
        Name::new(move |_| a.clone())
    }
}

impl<Q, A> Name<Q, A>
where
    Q: PartialEq + Send + Sync + 'static,
    A: Clone + Send + Sync + 'static,
{
    /// A name answering from a finite table and a default everywhere else.
    /// Earlier entries shadow later ones.
    pub fn finite_support(table: Vec<(Q, A)>, default: A) -> Self {
        Name::new(move |q| {
            for (tq, ta) in &table {
                if tq == q {
                    return ta.clone();
                }
            }
            default.clone()
        })
    }
}

/// Two names coincide on a finite question list if they agree at every entry.
pub fn coincide_on<Q, A: PartialEq>(
    left: &Name<Q, A>,
    right: &Name<Q, A>,
    questions: &[Q],
) -> bool {
    questions.iter().all(|q| left.query(q) == right.query(q))
}
