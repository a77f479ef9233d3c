//! Pure strategies, chance policies, and exhaustive strategy enumeration.

use std::collections::BTreeMap;

use crate::config::CheckConfig;
use crate::error::CheckError;
use crate::game::tree::{GameTree, InfosetId, NodeId, PlayerId};

/// One action choice per information set of a single player. Stored as a
/// sorted `(infoset, action index)` list; the action index points into the
/// infoset's action list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PureStrategy {
    player: PlayerId,
    choices: Vec<(InfosetId, usize)>,
}

impl PureStrategy {
    pub fn new(player: PlayerId, mut choices: Vec<(InfosetId, usize)>) -> Self {
        choices.sort_by_key(|(i, _)| *i);
        PureStrategy { player, choices }
    }

    /// Build from explicit choices, checking totality and action bounds.
    pub fn total(
        tree: &GameTree,
        player: PlayerId,
        choices: &BTreeMap<InfosetId, usize>,
    ) -> Result<Self, CheckError> {
        let mut picked = Vec::new();
        for infoset_id in tree.infosets_of(player) {
            match choices.get(&infoset_id) {
                Some(&action) => {
                    let n_actions = tree.infoset(infoset_id).actions.len();
                    if action >= n_actions {
                        return Err(CheckError::InvalidArgument(format!(
                            "action index {action} out of range at infoset {}",
                            infoset_id.0
                        )));
                    }
                    picked.push((infoset_id, action));
                }
                None => {
                    return Err(CheckError::MalformedStrategy { player, infoset: infoset_id })
                }
            }
        }
        Ok(PureStrategy { player, choices: picked })
    }

    pub fn player(&self) -> PlayerId {
        self.player
    }

    pub fn choices(&self) -> &[(InfosetId, usize)] {
        &self.choices
    }

    pub fn action_at(&self, infoset: InfosetId) -> Option<usize> {
        self.choices
            .binary_search_by_key(&infoset, |(i, _)| *i)
            .ok()
            .map(|pos| self.choices[pos].1)
    }

    /// Copy of this strategy with one choice replaced.
    pub fn with_choice(&self, infoset: InfosetId, action: usize) -> Self {
        let mut choices = self.choices.clone();
        match choices.binary_search_by_key(&infoset, |(i, _)| *i) {
            Ok(pos) => choices[pos].1 = action,
            Err(pos) => choices.insert(pos, (infoset, action)),
        }
        PureStrategy { player: self.player, choices }
    }
}

/// One explicit edge pick per chance node, used by `play`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ChancePolicy {
    picks: BTreeMap<NodeId, usize>,
}

impl ChancePolicy {
    pub fn new(picks: BTreeMap<NodeId, usize>) -> Self {
        ChancePolicy { picks }
    }

    pub fn empty() -> Self {
        ChancePolicy::default()
    }

    pub fn pick(&self, node: NodeId) -> Option<usize> {
        self.picks.get(&node).copied()
    }

    pub fn set(&mut self, node: NodeId, edge: usize) {
        self.picks.insert(node, edge);
    }

    pub fn picks(&self) -> &BTreeMap<NodeId, usize> {
        &self.picks
    }
}

/// Number of pure strategies of `player`: the product of action-set sizes
/// over the player's information sets.
pub fn strategy_count(tree: &GameTree, player: PlayerId) -> u128 {
    tree.infosets_of(player)
        .iter()
        .map(|i| tree.infoset(*i).actions.len() as u128)
        .product()
}

/// Exhaustive stream of the player's pure strategies. Every total map
/// infoset -> action appears exactly once; refuses with a size error when
/// the count exceeds `config.enumeration_cap`.
pub fn enumerate_strategies(
    tree: &GameTree,
    player: PlayerId,
    config: &CheckConfig,
) -> Result<StrategyIter, CheckError> {
    let count = strategy_count(tree, player);
    if count > config.enumeration_cap as u128 {
        return Err(CheckError::EnumerationCap { count, cap: config.enumeration_cap });
    }
    let infosets = tree.infosets_of(player);
    let sizes = infosets
        .iter()
        .map(|i| tree.infoset(*i).actions.len())
        .collect();
    Ok(StrategyIter {
        player,
        infosets,
        sizes,
        current: None,
        done: false,
    })
}

/// Convenience: the full strategy list as a `Vec`.
pub fn all_strategies(
    tree: &GameTree,
    player: PlayerId,
    config: &CheckConfig,
) -> Result<Vec<PureStrategy>, CheckError> {
    Ok(enumerate_strategies(tree, player, config)?.collect())
}

pub struct StrategyIter {
    player: PlayerId,
    infosets: Vec<InfosetId>,
    sizes: Vec<usize>,
    current: Option<Vec<usize>>,
    done: bool,
}

impl Iterator for StrategyIter {
    type Item = PureStrategy;

    fn next(&mut self) -> Option<PureStrategy> {
        if self.done {
            return None;
        }
        // An infoset with an empty action list admits no strategy at all.
        if self.sizes.iter().any(|&s| s == 0) {
            self.done = true;
            return None;
        }
        match &mut self.current {
            None => {
                self.current = Some(vec![0; self.infosets.len()]);
            }
            Some(digits) => {
                let mut pos = 0;
                loop {
                    if pos == digits.len() {
                        self.done = true;
                        return None;
                    }
                    digits[pos] += 1;
                    if digits[pos] < self.sizes[pos] {
                        break;
                    }
                    digits[pos] = 0;
                    pos += 1;
                }
            }
        }
        let digits = self.current.as_ref().unwrap();
        Some(PureStrategy::new(
            self.player,
            self.infosets.iter().copied().zip(digits.iter().copied()).collect(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::tree::TreeBuilder;
    use std::collections::BTreeSet;

    /// Two infosets for player 0 with 2 and 3 actions.
    fn two_infoset_tree() -> GameTree {
        let mut b = TreeBuilder::new(vec!["p0".into(), "p1".into()]);
        let i0 = b.infoset(PlayerId(0), vec!["a".into(), "b".into()]);
        let i1 = b.infoset(PlayerId(0), vec!["x".into(), "y".into(), "z".into()]);
        let leaves: Vec<NodeId> = (0..3).map(|k| b.terminal(format!("o{k}"))).collect();
        let inner = b.decision(i1, leaves);
        let l0 = b.terminal("o3");
        let root = b.decision(i0, vec![inner, l0]);
        b.finish(root).unwrap()
    }

    #[test]
    fn product_rule_count() {
        let tree = two_infoset_tree();
        assert_eq!(strategy_count(&tree, PlayerId(0)), 6);
        let all: Vec<_> = enumerate_strategies(&tree, PlayerId(0), &CheckConfig::default())
            .unwrap()
            .collect();
        assert_eq!(all.len(), 6);
        let distinct: BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), 6, "no duplicates");
    }

    #[test]
    fn player_with_no_infosets_has_one_empty_strategy() {
        let tree = two_infoset_tree();
        let all: Vec<_> = enumerate_strategies(&tree, PlayerId(1), &CheckConfig::default())
            .unwrap()
            .collect();
        assert_eq!(all.len(), 1);
        assert!(all[0].choices().is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        let tree = two_infoset_tree();
        let tight = CheckConfig { enumeration_cap: 5, ..CheckConfig::default() };
        match enumerate_strategies(&tree, PlayerId(0), &tight) {
            Err(CheckError::EnumerationCap { count: 6, cap: 5 }) => {}
            other => panic!("expected cap error, got {other:?}"),
        }
    }
}
