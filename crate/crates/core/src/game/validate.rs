//! Tree invariant checking. Violations are data, not failures: a broken
//! tree validates to a non-empty list naming the offending node or
//! information set.

use std::collections::VecDeque;
use std::fmt;

use num_traits::{One, Signed};

use crate::game::tree::{GameTree, InfosetId, Node, NodeId};
use crate::rational::format_rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A node reachable from the root through two different edges, or a
    /// node listed as a child of two parents.
    MultipleParents { node: NodeId },
    /// A non-root node that no edge points to.
    Unreachable { node: NodeId },
    /// Chance probabilities at the node do not sum to exactly 1.
    BadProbabilitySum { node: NodeId, sum: String },
    /// A negative chance probability.
    NegativeProbability { node: NodeId },
    /// Decision node whose child count differs from its infoset's action count.
    ActionCountMismatch { node: NodeId, infoset: InfosetId, children: usize, actions: usize },
    /// Infoset member that is not a decision node of the infoset's player,
    /// or a decision node whose infoset does not list it.
    InconsistentMembership { node: NodeId, infoset: InfosetId },
    /// Two nodes of one infoset with different own-experience sequences.
    PerfectRecall { infoset: InfosetId, node_a: NodeId, node_b: NodeId },
    /// Infoset with no member nodes.
    EmptyInfoset { infoset: InfosetId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MultipleParents { node } => {
                write!(f, "node {} has more than one parent", node.0)
            }
            Violation::Unreachable { node } => {
                write!(f, "node {} is not reachable from the root", node.0)
            }
            Violation::BadProbabilitySum { node, sum } => {
                write!(f, "chance node {}: probabilities sum to {}", node.0, sum)
            }
            Violation::NegativeProbability { node } => {
                write!(f, "chance node {}: negative probability", node.0)
            }
            Violation::ActionCountMismatch { node, infoset, children, actions } => write!(
                f,
                "node {} has {} children but infoset {} lists {} actions",
                node.0, children, infoset.0, actions
            ),
            Violation::InconsistentMembership { node, infoset } => write!(
                f,
                "node {} and infoset {} disagree about membership",
                node.0, infoset.0
            ),
            Violation::PerfectRecall { infoset, node_a, node_b } => write!(
                f,
                "infoset {}: nodes {} and {} have different experience sequences (perfect recall)",
                infoset.0, node_a.0, node_b.0
            ),
            Violation::EmptyInfoset { infoset } => {
                write!(f, "infoset {} has no member nodes", infoset.0)
            }
        }
    }
}

fn children_of(node: &Node) -> Vec<NodeId> {
    match node {
        Node::Decision { children, .. } => children.clone(),
        Node::Chance { edges } => edges.iter().map(|e| e.child).collect(),
        Node::Terminal { .. } => Vec::new(),
    }
}

/// The player's own experience on the root path to `node` (exclusive):
/// the sequence of their information sets and the action taken at each.
/// `parents` maps a node to its (parent, edge index).
fn experience_of(
    tree: &GameTree,
    parents: &[Option<(NodeId, usize)>],
    node: NodeId,
) -> Vec<(InfosetId, usize)> {
    let owner = match tree.node(node) {
        Node::Decision { player, .. } => *player,
        _ => return Vec::new(),
    };
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

/// Check every tree invariant; empty result means the tree is valid.
pub fn validate(tree: &GameTree) -> Vec<Violation> {
    let mut violations = Vec::new();
    let n = tree.num_nodes();

    // Parent structure and reachability.
    let mut parents: Vec<Option<(NodeId, usize)>> = vec![None; n];
    let mut flagged_multi = vec![false; n];
    for id in tree.node_ids() {
        for (edge, child) in children_of(tree.node(id)).into_iter().enumerate() {
            if parents[child.0].is_some() || child == tree.root() {
                if !flagged_multi[child.0] {
                    violations.push(Violation::MultipleParents { node: child });
                    flagged_multi[child.0] = true;
                }
            } else {
                parents[child.0] = Some((id, edge));
            }
        }
    }
    let mut reachable = vec![false; n];
    let mut queue = VecDeque::from([tree.root()]);
    reachable[tree.root().0] = true;
    while let Some(id) = queue.pop_front() {
        for child in children_of(tree.node(id)) {
            if !reachable[child.0] {
                reachable[child.0] = true;
                queue.push_back(child);
            }
        }
    }
    for id in tree.node_ids() {
        if !reachable[id.0] {
            violations.push(Violation::Unreachable { node: id });
        }
    }

    // Chance probabilities.
    for id in tree.node_ids() {
        if let Node::Chance { edges } = tree.node(id) {
            if edges.iter().any(|e| e.probability.is_negative()) {
                violations.push(Violation::NegativeProbability { node: id });
            }
            let sum: crate::rational::Rational =
                edges.iter().map(|e| e.probability.clone()).sum();
            if !sum.is_one() {
                violations.push(Violation::BadProbabilitySum { node: id, sum: format_rational(&sum) });
            }
        }
    }

    // Infoset consistency.
    for id in tree.node_ids() {
        if let Node::Decision { infoset, children, .. } = tree.node(id) {
            let set = tree.infoset(*infoset);
            if children.len() != set.actions.len() {
                violations.push(Violation::ActionCountMismatch {
                    node: id,
                    infoset: *infoset,
                    children: children.len(),
                    actions: set.actions.len(),
                });
            }
            if !set.members.contains(&id) {
                violations.push(Violation::InconsistentMembership { node: id, infoset: *infoset });
            }
        }
    }
    for infoset_id in tree.infoset_ids() {
        let set = tree.infoset(infoset_id);
        if set.members.is_empty() {
            violations.push(Violation::EmptyInfoset { infoset: infoset_id });
            continue;
        }
        for member in &set.members {
            match tree.node(*member) {
                Node::Decision { player, infoset, .. }
                    if *player == set.player && *infoset == infoset_id => {}
                _ => violations.push(Violation::InconsistentMembership {
                    node: *member,
                    infoset: infoset_id,
                }),
            }
        }
    }

    // Perfect recall: identical experiences within each infoset. Only
    // meaningful when the parent structure is sound, so skip nodes already
    // flagged above.
    for infoset_id in tree.infoset_ids() {
        let set = tree.infoset(infoset_id);
        let sound: Vec<NodeId> = set
            .members
            .iter()
            .copied()
            .filter(|m| reachable[m.0] && !flagged_multi[m.0])
            .collect();
        if sound.len() < 2 {
            continue;
        }
        let reference = experience_of(tree, &parents, sound[0]);
        for other in &sound[1..] {
            if experience_of(tree, &parents, *other) != reference {
                violations.push(Violation::PerfectRecall {
                    infoset: infoset_id,
                    node_a: sound[0],
                    node_b: *other,
                });
            }
        }
    }

    violations
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::tree::{Infoset, PlayerId, TreeBuilder};
    use crate::rational::ratio;

    #[test]
    fn single_terminal_tree_is_valid() {
        let mut b = TreeBuilder::new(vec!["p0".into()]);
        let root = b.terminal("done");
        let tree = b.finish(root).unwrap();
        assert!(validate(&tree).is_empty());
    }

    #[test]
    fn action_count_mismatch_is_reported_at_the_infoset() {
        // One infoset with two actions, but a member node with three children.
        let mut b = TreeBuilder::new(vec!["p0".into()]);
        let i = b.infoset(PlayerId(0), vec!["l".into(), "r".into()]);
        let t0 = b.terminal("o0");
        let t1 = b.terminal("o1");
        let t2 = b.terminal("o2");
        let root = b.decision(i, vec![t0, t1, t2]);
        let tree = b.finish(root).unwrap();
        let violations = validate(&tree);
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::ActionCountMismatch { infoset, .. } if infoset.0 == 0)),
            "expected an action-count violation, got {violations:?}");
    }

    #[test]
    fn bad_probability_sum_is_reported() {
        let mut b = TreeBuilder::new(vec!["p0".into()]);
        let t0 = b.terminal("o0");
        let t1 = b.terminal("o1");
        let t2 = b.terminal("o2");
        let root = b.chance(vec![
            (ratio(1, 3), t0),
            (ratio(1, 3), t1),
            (ratio(1, 4), t2),
        ]);
        let tree = b.finish(root).unwrap();
        let violations = validate(&tree);
        assert!(violations.iter().any(
            |v| matches!(v, Violation::BadProbabilitySum { sum, .. } if sum == "11/12")
        ));
    }

    #[test]
    fn perfect_recall_violation_is_detected() {
        // Player 0 moves at the root, then both children land in one
        // infoset of player 0: the two members differ in the action taken.
        let mut b = TreeBuilder::new(vec!["p0".into()]);
        let i_root = b.infoset(PlayerId(0), vec!["l".into(), "r".into()]);
        let i_deep = b.infoset(PlayerId(0), vec!["a".into(), "b".into()]);
        let t: Vec<_> = (0..4).map(|k| b.terminal(format!("o{k}"))).collect();
        let d0 = b.decision(i_deep, vec![t[0], t[1]]);
        let d1 = b.decision(i_deep, vec![t[2], t[3]]);
        let root = b.decision(i_root, vec![d0, d1]);
        let tree = b.finish(root).unwrap();
        let violations = validate(&tree);
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::PerfectRecall { .. })));
    }

    #[test]
    fn cycle_and_orphan_are_reported() {
        use crate::game::tree::{GameTree, Node, OutcomeId};
        // Node 1 points at node 2 and node 2 points back at node 1.
        let nodes = vec![
            Node::Terminal { outcome: OutcomeId(0) },
            Node::Chance {
                edges: vec![crate::game::tree::ChanceEdge {
                    probability: ratio(1, 1),
                    child: NodeId(2),
                }],
            },
            Node::Chance {
                edges: vec![crate::game::tree::ChanceEdge {
                    probability: ratio(1, 1),
                    child: NodeId(1),
                }],
            },
        ];
        let tree = GameTree::new(
            vec!["p0".into()],
            vec!["o".into()],
            Vec::<Infoset>::new(),
            nodes,
            NodeId(0),
        )
        .unwrap();
        let violations = validate(&tree);
        assert!(violations.iter().any(|v| matches!(v, Violation::Unreachable { .. })));
        assert!(violations.iter().any(|v| matches!(v, Violation::MultipleParents { .. })));
    }
}
