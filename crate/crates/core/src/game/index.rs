//! Derived structure over a validated tree: parent pointers, per-infoset
//! experience sequences, and descendant relations. The certifiers build
//! one `TreeIndex` per mechanism and share it across checks.

use crate::error::CheckError;
use crate::game::tree::{GameTree, InfosetId, Node, NodeId, PlayerId};
use crate::game::validate::validate;

/// A player's own experience: the information sets visited and actions
/// taken on the root path, in order. Under perfect recall this is a
/// property of the information set, not of the individual node.
pub type Experience = Vec<(InfosetId, usize)>;

#[derive(Debug, Clone)]
pub struct TreeIndex {
    parents: Vec<Option<(NodeId, usize)>>,
    /// Experience of (any node of) each infoset.
    experience: Vec<Experience>,
    /// Per player: infoset ids in id order.
    player_infosets: Vec<Vec<InfosetId>>,
}

impl TreeIndex {
    /// Build the index. Errors when the tree is invalid (the index is
    /// only meaningful under the tree invariants, perfect recall included).
    pub fn new(tree: &GameTree) -> Result<Self, CheckError> {
        let violations = validate(tree);
        if !violations.is_empty() {
            return Err(CheckError::InvalidArgument(format!(
                "tree is invalid: {}",
                violations[0]
            )));
        }
        let mut parents: Vec<Option<(NodeId, usize)>> = vec![None; tree.num_nodes()];
        for id in tree.node_ids() {
            let children: Vec<NodeId> = match tree.node(id) {
                Node::Decision { children, .. } => children.clone(),
                Node::Chance { edges } => edges.iter().map(|e| e.child).collect(),
                Node::Terminal { .. } => Vec::new(),
            };
            for (edge, child) in children.into_iter().enumerate() {
                parents[child.0] = Some((id, edge));
            }
        }

        let mut experience = Vec::with_capacity(tree.num_infosets());
        for infoset_id in tree.infoset_ids() {
            let set = tree.infoset(infoset_id);
            let member = set.members[0];
            experience.push(node_experience(tree, &parents, member, set.player));
        }

        let player_infosets = (0..tree.num_players())
            .map(|p| tree.infosets_of(PlayerId(p)))
            .collect();

        Ok(TreeIndex { parents, experience, player_infosets })
    }

    pub fn parent(&self, node: NodeId) -> Option<(NodeId, usize)> {
        self.parents[node.0]
    }

    pub fn experience(&self, infoset: InfosetId) -> &Experience {
        &self.experience[infoset.0]
    }

    pub fn infosets_of(&self, player: PlayerId) -> &[InfosetId] {
        &self.player_infosets[player.0]
    }

    /// True when following `strategy` at the player's own prior moves can
    /// reach `infoset`: the recorded experience agrees with the strategy.
    pub fn consistent_with(
        &self,
        infoset: InfosetId,
        strategy: &crate::game::strategy::PureStrategy,
    ) -> bool {
        self.experience(infoset)
            .iter()
            .all(|(prior, action)| strategy.action_at(*prior) == Some(*action))
    }

    /// Own infosets of `player` with at least one member below (or at) a
    /// node of `from`, i.e. the infosets whose action can matter for
    /// payoff bounds computed from `from`.
    pub fn own_infosets_below(
        &self,
        tree: &GameTree,
        player: PlayerId,
        from: InfosetId,
    ) -> Vec<InfosetId> {
        let mut below = vec![false; tree.num_infosets()];
        let mut stack: Vec<NodeId> = tree.infoset(from).members.clone();
        while let Some(id) = stack.pop() {
            match tree.node(id) {
                Node::Decision { player: p, infoset, children } => {
                    if *p == player {
                        below[infoset.0] = true;
                    }
                    stack.extend(children.iter().copied());
                }
                Node::Chance { edges } => stack.extend(edges.iter().map(|e| e.child)),
                Node::Terminal { .. } => {}
            }
        }
        (0..tree.num_infosets())
            .map(InfosetId)
            .filter(|i| below[i.0] && *i != from)
            .collect()
    }
}

fn node_experience(
    tree: &GameTree,
    parents: &[Option<(NodeId, usize)>],
    node: NodeId,
    owner: PlayerId,
) -> Experience {
    let mut path = Vec::new();
    let mut cursor = node;
    while let Some((parent, edge)) = parents[cursor.0] {
        if let Node::Decision { player, infoset, .. } = tree.node(parent) {
            if *player == owner {
                path.push((*infoset, edge));
            }
        }
        cursor = parent;
    }
    path.reverse();
    path
}
