//! Computing with names over generalized Baire space.
//!
//! A *naming space* is a set of total functions `A^Q` where `Q` (questions) and
//! `A` (answers) are countable and non-empty. Points of abstract spaces are
//! encoded by such functions and all computation happens on the encodings:
//! fuel-bounded machines consume finitely many oracle answers, dialogue
//! strategies drive a universal evaluation loop, and represented-space
//! constructors assemble encodings for products, sequences, function spaces,
//! real numbers and hyperspaces of subsets of the naturals.
//!
//! The crate is organised around the carriers:
//!
//! * [`name`] — the `Name` type, a total function from questions to answers.
//! * [`mf`] — multivalued functions over finite carriers, the specification
//!   algebra used as a test oracle layer.
//! * [`machines`] — fuel-bounded partial computation and query logging.
//! * [`universal`] — associates and the dialogue evaluation loop.
//! * [`spaces`] — represented-space constructors and realizer combinators.
//! * [`reals`] — exact real arithmetic over rational-approximation names.
//! * [`metric`] — the metric on naming spaces and dense-sequence encodings.
//! * [`hyper`] — Sierpinski space, open/closed subsets of ℕ, closed choice.
//!
//! Heavy verification sweeps go through [`batch`], which runs data-parallel
//! when the `parallel` feature (default) is enabled and sequentially
//! otherwise.

pub mod batch;
pub mod hyper;
pub mod machines;
pub mod metric;
pub mod mf;
pub mod name;
pub mod pairing;
pub mod reals;
pub mod spaces;
pub mod universal;

pub use name::Name;
pub use reals::Rat;
