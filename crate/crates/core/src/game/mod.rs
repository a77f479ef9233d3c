//! The game engine: exact extensive-form trees, strategies, validation,
//! and payoff evaluation.

mod eval;
mod index;
mod strategy;
mod tree;
mod validate;

pub use eval::{
    bound_compiled, expected_payoff, expected_payoff_compiled, payoff_bounds, play, play_outcome,
    ActionChoices, SingleChoice,
};
pub use index::{Experience, TreeIndex};
pub use strategy::{
    all_strategies, enumerate_strategies, strategy_count, ChancePolicy, PureStrategy, StrategyIter,
};
pub use tree::{
    ChanceEdge, GameTree, Infoset, InfosetId, Node, NodeId, OutcomeId, PlayerId, TreeBuilder,
    Utility,
};
pub use validate::{validate, Violation};
