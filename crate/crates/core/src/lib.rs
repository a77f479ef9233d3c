//! Exact representation of finite extensive-form mechanisms and certifiers
//! for simplicity criteria.
//!
//! A [`mechanisms::Mechanism`] is a finite game tree with information sets
//! and exact rational chance moves, plus a finite type space of utility
//! functions per player and (where the designer claims one) a truthful
//! strategy per type. The certifier modules decide, with replayable
//! witnesses:
//!
//! - [`dominance`]: weak dominance, strategy-proofness, obvious dominance,
//!   obvious strategy-proofness, weak group strategy-proofness;
//! - [`foresight`]: F-dominance of partial strategic plans, strong obvious
//!   dominance, one-step dominance, F-simplicity;
//! - [`strategic`]: undominated strategies, robustness against undominated
//!   opponent play under a first-order belief, strategic simplicity.
//!
//! All payoffs and probabilities are exact [`Rational`]s; floating point
//! never touches a verdict. [`doc`] provides the `gamedoc/1` text format
//! and [`report`] the JSON report emitted by the CLI.

pub mod config;
pub mod corpus;
pub mod doc;
pub mod dominance;
pub mod error;
pub mod foresight;
pub mod game;
pub mod mechanisms;
pub mod rational;
pub mod report;
pub mod strategic;
pub mod verdict;

pub use config::CheckConfig;
pub use error::CheckError;
pub use rational::Rational;
pub use verdict::{Verdict, Witness};
