//! Error types shared by the game engine and the certifiers.

use thiserror::Error;

use crate::game::{InfosetId, NodeId, PlayerId};

/// Failure of a certifier or game-engine operation. Violated game
/// invariants are *not* errors — `validate` returns them as data.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CheckError {
    #[error("strategy for player {player:?} has no action at information set {infoset:?}")]
    MalformedStrategy { player: PlayerId, infoset: InfosetId },

    #[error("partial plan is undefined at its anchor information set {infoset:?}")]
    MalformedPlan { infoset: InfosetId },

    #[error("chance policy has no pick for chance node {node:?}")]
    MissingChancePick { node: NodeId },

    #[error("strategy space of size {count} exceeds the enumeration cap {cap}")]
    EnumerationCap { count: u128, cap: u64 },

    #[error("enumeration budget exhausted: {limit} payoff evaluations")]
    BudgetExceeded { limit: u64 },

    #[error("mechanism declares no truthful strategies for player {player:?}")]
    MissingTruthful { player: PlayerId },

    #[error("utility has no payoff for outcome '{label}'")]
    IncompleteUtility { label: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Mechanism constructor failure (bad parameters).
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("{message}")]
pub struct ConstructError {
    pub message: String,
}

impl ConstructError {
    pub fn new(message: impl Into<String>) -> Self {
        ConstructError { message: message.into() }
    }
}
