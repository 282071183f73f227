//! Heaps of pieces and their rank functions.
//!
//! A heap is a finite labelled poset over an alphabet of pieces with a
//! concurrency relation. This crate builds heaps from words or explicit
//! relations, decides whether a heap is ranked (with a checkable
//! certificate when it is not), and implements two shortcut criteria:
//!
//! * [`rank::balanced_interval_criterion`]: when the concurrency subgraph
//!   has no circuit, a heap is ranked iff each of its minimal balanced
//!   subintervals is ranked.
//! * [`fc_rank::label_criterion`]: for heaps of fully commutative elements
//!   of FC-finite Coxeter groups, rankedness is read off the labels inside
//!   each minimal balanced subinterval.
//!
//! [`enumerate`] lists every FC heap of a Coxeter graph, which is what the
//! criteria are cross-checked against.

pub mod alphabet;
pub mod classify;
pub mod coxeter;
pub mod enumerate;
pub mod error;
pub mod fc_rank;
pub mod format;
pub mod heap;
pub mod rank;
pub mod report;

pub use alphabet::{ConcurrencyGraph, Piece, PieceAlphabet};
pub use classify::{classify, is_fc_finite, Classification, FamilyTag};
pub use coxeter::{concurrency_from_coxeter, is_fc_heap, Bond, CoxeterGraph, Family, FcCheck};
pub use enumerate::{census, enumerate_fc_heaps, Census};
pub use error::{Error, Result};
pub use fc_rank::{label_criterion, s_set, LabelVerdict, SSetReport};
pub use heap::{Elem, Heap};
pub use rank::{balanced_interval_criterion, rank, IntervalVerdict, RankOutcome};
