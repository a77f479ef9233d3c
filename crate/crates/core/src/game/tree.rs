//! Finite extensive-form game trees with information sets and exact
//! rational chance moves.
//!
//! Nodes, information sets, players, and outcome labels are stored in
//! indexed tables; a node references its information set and children by
//! id. The structures are plain data — [`crate::game::validate`] checks
//! the tree invariants (rootedness, infoset consistency, probability
//! sums, perfect recall) and reports violations as data.

use std::collections::BTreeMap;

use crate::error::CheckError;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlayerId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InfosetId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OutcomeId(pub usize);

/// One edge out of a chance node: an exact probability and the child.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChanceEdge {
    pub probability: Rational,
    pub child: NodeId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    /// A move of `player`; the k-th child corresponds to the k-th action
    /// of the node's information set.
    Decision {
        player: PlayerId,
        infoset: InfosetId,
        children: Vec<NodeId>,
    },
    Chance { edges: Vec<ChanceEdge> },
    Terminal { outcome: OutcomeId },
}

/// An information set: owning player, the shared action list, and the
/// member decision nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Infoset {
    pub player: PlayerId,
    pub actions: Vec<String>,
    pub members: Vec<NodeId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameTree {
    players: Vec<String>,
    outcomes: Vec<String>,
    infosets: Vec<Infoset>,
    nodes: Vec<Node>,
    root: NodeId,
}

impl GameTree {
    /// Assemble a tree from raw tables. Only index bounds are enforced
    /// here so that structurally broken trees can still be built and then
    /// reported on by `validate`.
    pub fn new(
        players: Vec<String>,
        outcomes: Vec<String>,
        infosets: Vec<Infoset>,
        nodes: Vec<Node>,
        root: NodeId,
    ) -> Result<Self, CheckError> {
        let tree = GameTree { players, outcomes, infosets, nodes, root };
        tree.check_bounds()?;
        Ok(tree)
    }

    fn check_bounds(&self) -> Result<(), CheckError> {
        let bad = |what: String| Err(CheckError::InvalidArgument(what));
        if self.root.0 >= self.nodes.len() {
            return bad(format!("root node id {} out of range", self.root.0));
        }
        for (id, node) in self.nodes.iter().enumerate() {
            match node {
                Node::Decision { player, infoset, children } => {
                    if player.0 >= self.players.len() {
                        return bad(format!("node {id}: player id {} out of range", player.0));
                    }
                    if infoset.0 >= self.infosets.len() {
                        return bad(format!("node {id}: infoset id {} out of range", infoset.0));
                    }
                    for child in children {
                        if child.0 >= self.nodes.len() {
                            return bad(format!("node {id}: child id {} out of range", child.0));
                        }
                    }
                }
                Node::Chance { edges } => {
                    for edge in edges {
                        if edge.child.0 >= self.nodes.len() {
                            return bad(format!("node {id}: child id {} out of range", edge.child.0));
                        }
                    }
                }
                Node::Terminal { outcome } => {
                    if outcome.0 >= self.outcomes.len() {
                        return bad(format!("node {id}: outcome id {} out of range", outcome.0));
                    }
                }
            }
        }
        for (id, infoset) in self.infosets.iter().enumerate() {
            if infoset.player.0 >= self.players.len() {
                return bad(format!("infoset {id}: player id {} out of range", infoset.player.0));
            }
            for member in &infoset.members {
                if member.0 >= self.nodes.len() {
                    return bad(format!("infoset {id}: member id {} out of range", member.0));
                }
            }
        }
        Ok(())
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn num_players(&self) -> usize {
        self.players.len()
    }

    pub fn players(&self) -> &[String] {
        &self.players
    }

    pub fn player_name(&self, player: PlayerId) -> &str {
        &self.players[player.0]
    }

    pub fn player_by_name(&self, name: &str) -> Option<PlayerId> {
        self.players.iter().position(|p| p == name).map(PlayerId)
    }

    pub fn outcomes(&self) -> &[String] {
        &self.outcomes
    }

    pub fn outcome_label(&self, outcome: OutcomeId) -> &str {
        &self.outcomes[outcome.0]
    }

    pub fn outcome_by_label(&self, label: &str) -> Option<OutcomeId> {
        self.outcomes.iter().position(|o| o == label).map(OutcomeId)
    }

    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id.0]
    }

    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> {
        (0..self.nodes.len()).map(NodeId)
    }

    pub fn num_infosets(&self) -> usize {
        self.infosets.len()
    }

    pub fn infoset(&self, id: InfosetId) -> &Infoset {
        &self.infosets[id.0]
    }

    pub fn infoset_ids(&self) -> impl Iterator<Item = InfosetId> {
        (0..self.infosets.len()).map(InfosetId)
    }

    /// The player's information sets, in id order.
    pub fn infosets_of(&self, player: PlayerId) -> Vec<InfosetId> {
        self.infoset_ids()
            .filter(|i| self.infoset(*i).player == player)
            .collect()
    }

    pub fn is_chance_free(&self) -> bool {
        !self.nodes.iter().any(|n| matches!(n, Node::Chance { .. }))
    }

    pub fn chance_nodes(&self) -> Vec<NodeId> {
        self.node_ids()
            .filter(|id| matches!(self.node(*id), Node::Chance { .. }))
            .collect()
    }
}

/// A player's payoff table: one exact rational per outcome label. Must be
/// total on the tree's outcome labels to evaluate payoffs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Utility {
    values: BTreeMap<String, Rational>,
}

impl Utility {
    pub fn new(values: BTreeMap<String, Rational>) -> Self {
        Utility { values }
    }

    pub fn from_pairs<I, S>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (S, Rational)>,
        S: Into<String>,
    {
        Utility {
            values: pairs.into_iter().map(|(k, v)| (k.into(), v)).collect(),
        }
    }

    pub fn get(&self, label: &str) -> Option<&Rational> {
        self.values.get(label)
    }

    pub fn values(&self) -> &BTreeMap<String, Rational> {
        &self.values
    }

    /// Dense payoff table indexed by the tree's outcome ids. Errors when a
    /// label is missing (the totality invariant).
    pub fn compile(&self, tree: &GameTree) -> Result<Vec<Rational>, CheckError> {
        tree.outcomes()
            .iter()
            .map(|label| {
                self.values
                    .get(label)
                    .cloned()
                    .ok_or_else(|| CheckError::IncompleteUtility { label: label.clone() })
            })
            .collect()
    }

    /// Multiply every payoff by a positive factor (dominance relations are
    /// ordinal, so verdicts must not change; tests rely on this).
    pub fn scaled(&self, factor: &Rational) -> Self {
        Utility {
            values: self
                .values
                .iter()
                .map(|(k, v)| (k.clone(), v * factor))
                .collect(),
        }
    }
}

/// Incremental builder used by the mechanism constructors and the parser.
#[derive(Debug, Default)]
pub struct TreeBuilder {
    players: Vec<String>,
    outcomes: Vec<String>,
    outcome_index: BTreeMap<String, OutcomeId>,
    infosets: Vec<Infoset>,
    nodes: Vec<Option<Node>>,
}

impl TreeBuilder {
    pub fn new(players: Vec<String>) -> Self {
        TreeBuilder { players, ..TreeBuilder::default() }
    }

    pub fn num_players(&self) -> usize {
        self.players.len()
    }

    /// Intern an outcome label.
    pub fn outcome(&mut self, label: impl Into<String>) -> OutcomeId {
        let label = label.into();
        if let Some(id) = self.outcome_index.get(&label) {
            return *id;
        }
        let id = OutcomeId(self.outcomes.len());
        self.outcomes.push(label.clone());
        self.outcome_index.insert(label, id);
        id
    }

    pub fn infoset(&mut self, player: PlayerId, actions: Vec<String>) -> InfosetId {
        let id = InfosetId(self.infosets.len());
        self.infosets.push(Infoset { player, actions, members: Vec::new() });
        id
    }

    /// Reserve a node id to be filled in later (children are often built
    /// after their parent).
    pub fn reserve(&mut self) -> NodeId {
        let id = NodeId(self.nodes.len());
        self.nodes.push(None);
        id
    }

    pub fn fill_decision(&mut self, id: NodeId, infoset: InfosetId, children: Vec<NodeId>) {
        let player = self.infosets[infoset.0].player;
        self.infosets[infoset.0].members.push(id);
        self.nodes[id.0] = Some(Node::Decision { player, infoset, children });
    }

    pub fn fill_chance(&mut self, id: NodeId, edges: Vec<(Rational, NodeId)>) {
        self.nodes[id.0] = Some(Node::Chance {
            edges: edges
                .into_iter()
                .map(|(probability, child)| ChanceEdge { probability, child })
                .collect(),
        });
    }

    pub fn fill_terminal(&mut self, id: NodeId, outcome: OutcomeId) {
        self.nodes[id.0] = Some(Node::Terminal { outcome });
    }

    pub fn decision(&mut self, infoset: InfosetId, children: Vec<NodeId>) -> NodeId {
        let id = self.reserve();
        self.fill_decision(id, infoset, children);
        id
    }

    pub fn chance(&mut self, edges: Vec<(Rational, NodeId)>) -> NodeId {
        let id = self.reserve();
        self.fill_chance(id, edges);
        id
    }

    pub fn terminal(&mut self, label: impl Into<String>) -> NodeId {
        let outcome = self.outcome(label);
        let id = self.reserve();
        self.fill_terminal(id, outcome);
        id
    }

    pub fn finish(self, root: NodeId) -> Result<GameTree, CheckError> {
        let nodes = self
            .nodes
            .into_iter()
            .enumerate()
            .map(|(i, n)| {
                n.ok_or_else(|| CheckError::InvalidArgument(format!("node {i} was reserved but never filled")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        GameTree::new(self.players, self.outcomes, self.infosets, nodes, root)
    }
}
