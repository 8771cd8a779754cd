//! Exact solvers for parameterized problems from computational social choice.
//!
//! The crate works on complete strict preference profiles ([`Election`]) and
//! provides exact, desk-scale algorithms together with independent brute-force
//! oracles:
//!
//! * [`kemeny`]: subset dynamic program for Kemeny rankings.
//! * [`dodgson`]: Dodgson scores via the typed integer program and branch and bound.
//! * [`control`]: constructive control by deleting voters under d-Approval.
//! * [`bribery`]: unit, priced, swap and shift bribery under scoring rules.
//! * [`structure`]: single-peaked, single-crossing, Euclidean and group-separable profiles.
//! * [`circuit`]: weighted circuit satisfiability with majority gates and the
//!   majoritywise accepted ballot problem.
//! * [`cake`]: cake cutting with piecewise-polynomial densities.
//! * [`io`] and [`gen`]: text formats and seeded instance generators.

pub mod bribery;
pub mod cake;
pub mod circuit;
pub mod control;
pub mod dodgson;
pub mod election;
pub mod error;
pub mod fixtures;
pub mod gen;
pub mod io;
pub mod kemeny;
pub mod structure;

pub use election::{
    condorcet_winner, kendall_tau, majority_matrix, scoring_winners, Alt, Election, MajorityMatrix,
    PreferenceOrder, Rule, ScoringVector, WinnerMode,
};
pub use error::{Error, Result};
