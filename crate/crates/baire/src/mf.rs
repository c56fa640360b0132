//! Multivalued functions over finite enumerated carriers.
//!
//! A multifunction assigns to each element of its input carrier a possibly
//! empty set of eligible outputs. It is read as a specification: a function
//! `f` is a *choice* for `F` when `f(s) ∈ F(s)` on all of `dom(F)`.
//! Carriers are the canonical finite sets `0..size`, so the composition and
//! tightening laws are decidable by scanning. The [`laws`] submodule runs
//! those scans exhaustively over all multifunctions of a given carrier size.

use std::fmt;

pub mod laws;

/// Specification object: input carrier `0..in_size`, output carrier
/// `0..out_size`, and one sorted duplicate-free value set per input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiFn {
    in_size: usize,
    out_size: usize,
    graph: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MfError {
    /// The carriers at a composition or comparison boundary differ.
    CarrierMismatch { left: usize, right: usize },
    /// A graph row mentions a value outside the output carrier.
    ValueOutOfRange {
        input: usize,
        value: usize,
        out_size: usize,
    },
    /// The graph does not have one row per input carrier element.
    RowCountMismatch { expected: usize, found: usize },
}

impl fmt::Display for MfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MfError::CarrierMismatch { left, right } => {
                write!(f, "carrier mismatch: {left} vs {right}")
            }
            MfError::ValueOutOfRange {
                input,
                value,
                out_size,
            } => {
                write!(
                    f,
                    "value {value} at input {input} outside carrier 0..{out_size}"
                )
            }
            MfError::RowCountMismatch { expected, found } => {
                write!(f, "graph has {found} rows, carrier needs {expected}")
            }
        }
    }
}

impl std::error::Error for MfError {}

impl MultiFn {
    /// Build from an explicit graph; rows are sorted and deduplicated so that
    /// structural equality is equality of multifunctions.
    pub fn new(in_size: usize, out_size: usize, graph: Vec<Vec<usize>>) -> Result<Self, MfError> {
        if graph.len() != in_size {
            return Err(MfError::RowCountMismatch {
                expected: in_size,
                found: graph.len(),
            });
        }
        let mut canonical = Vec::with_capacity(in_size);
        for (input, row) in graph.into_iter().enumerate() {
            if let Some(&value) = row.iter().find(|&&v| v >= out_size) {
                return Err(MfError::ValueOutOfRange {
                    input,
                    value,
                    out_size,
                });
            }
            let mut row = row;
            row.sort_unstable();
            row.dedup();
            canonical.push(row);
        }
        Ok(MultiFn {
            in_size,
            out_size,
            graph: canonical,
        })
    }

    pub fn from_fn(
        in_size: usize,
        out_size: usize,
        f: impl Fn(usize) -> Vec<usize>,
    ) -> Result<Self, MfError> {
        MultiFn::new(in_size, out_size, (0..in_size).map(f).collect())
    }

    pub fn identity(size: usize) -> Self {
        MultiFn::from_fn(size, size, |s| vec![s]).expect("identity graph is well formed")
    }

    /// The everywhere-empty specification.
    pub fn empty(in_size: usize, out_size: usize) -> Self {
        MultiFn {
            in_size,
            out_size,
            graph: vec![Vec::new(); in_size],
        }
    }

    pub fn in_size(&self) -> usize {
        self.in_size
    }

    pub fn out_size(&self) -> usize {
        self.out_size
    }

    /// Eligible outputs at `s`.
    pub fn values(&self, s: usize) -> &[usize] {
        &self.graph[s]
    }

    pub fn dom_contains(&self, s: usize) -> bool {
        !self.graph[s].is_empty()
    }

    pub fn dom(&self) -> Vec<usize> {
        (0..self.in_size)
            .filter(|&s| self.dom_contains(s))
            .collect()
    }

    pub fn is_total(&self) -> bool {
        self.graph.iter().all(|row| !row.is_empty())
    }

    pub fn is_singlevalued(&self) -> bool {
        self.graph.iter().all(|row| row.len() <= 1)
    }

    /// Multifunction composition: `t ∈ (self ∘ g)(r)` iff `g(r) ⊆ dom(self)`
    /// and some `s ∈ g(r)` has `t ∈ self(s)`.
    pub fn compose(&self, g: &MultiFn) -> Result<MultiFn, MfError> {
        if g.out_size != self.in_size {
            return Err(MfError::CarrierMismatch {
                left: g.out_size,
                right: self.in_size,
            });
        }
        MultiFn::from_fn(g.in_size, self.out_size, |r| {
            if g.values(r).iter().any(|&s| !self.dom_contains(s)) {
                return Vec::new();
            }
            let mut out = Vec::new();
            for &s in g.values(r) {
                out.extend_from_slice(self.values(s));
            }
            out
        })
    }

    /// Relational composition: same but without the domain condition.
    pub fn rel_compose(&self, g: &MultiFn) -> Result<MultiFn, MfError> {
        if g.out_size != self.in_size {
            return Err(MfError::CarrierMismatch {
                left: g.out_size,
                right: self.in_size,
            });
        }
        MultiFn::from_fn(g.in_size, self.out_size, |r| {
            let mut out = Vec::new();
            for &s in g.values(r) {
                out.extend_from_slice(self.values(s));
            }
            out
        })
    }

    /// `self` tightens `other` when it is the more restrictive specification:
    /// `dom(other) ⊆ dom(self)` and `self(s) ⊆ other(s)` on `dom(other)`.
    pub fn tightens(&self, other: &MultiFn) -> Result<bool, MfError> {
        if self.in_size != other.in_size {
            return Err(MfError::CarrierMismatch {
                left: self.in_size,
                right: other.in_size,
            });
        }
        if self.out_size != other.out_size {
            return Err(MfError::CarrierMismatch {
                left: self.out_size,
                right: other.out_size,
            });
        }
        Ok((0..self.in_size).all(|s| {
            if !other.dom_contains(s) {
                return true;
            }
            self.dom_contains(s) && self.values(s).iter().all(|t| other.values(s).contains(t))
        }))
    }

    /// Reverse the direction: `t ∈ invert(F)(s)` iff `s ∈ F(t)`.
    pub fn invert(&self) -> MultiFn {
        MultiFn::from_fn(self.out_size, self.in_size, |t| {
            (0..self.in_size)
                .filter(|&s| self.graph[s].contains(&t))
                .collect()
        })
        .expect("inverted graph is well formed")
    }

    /// `invert(self)` is total, i.e. every output value is hit.
    pub fn is_cototal(&self) -> bool {
        self.invert().is_total()
    }
}

/// The total-function-to-multifunction correspondence: `s ↦ {f(s)}`.
pub fn lift_total(
    in_size: usize,
    out_size: usize,
    f: impl Fn(usize) -> usize,
) -> Result<MultiFn, MfError> {
    MultiFn::from_fn(in_size, out_size, |s| vec![f(s)])
}

/// `f` (a total function given as a table) is a choice for `spec`.
pub fn is_choice(f: &[usize], spec: &MultiFn) -> bool {
    f.len() == spec.in_size()
        && (0..spec.in_size()).all(|s| !spec.dom_contains(s) || spec.values(s).contains(&f[s]))
}
