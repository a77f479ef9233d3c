//! Payoff evaluation: deterministic play, chance-averaged expected payoff,
//! and worst/best-case payoff bounds from an information set.

use std::collections::BTreeSet;

use crate::config::BudgetMeter;
use crate::error::CheckError;
use crate::game::strategy::{ChancePolicy, PureStrategy};
use crate::game::tree::{GameTree, InfosetId, Node, NodeId, PlayerId, Utility};
use crate::rational::Rational;

/// Anything that picks actions at (some of) a player's information sets.
/// `payoff_bounds` follows the choice where one is defined and treats the
/// information set as free otherwise.
pub trait ActionChoices {
    fn choice(&self, infoset: InfosetId) -> Option<usize>;
}

impl ActionChoices for PureStrategy {
    fn choice(&self, infoset: InfosetId) -> Option<usize> {
        self.action_at(infoset)
    }
}

/// A single fixed action at one information set; everything else is free.
#[derive(Debug, Clone, Copy)]
pub struct SingleChoice(pub InfosetId, pub usize);

impl ActionChoices for SingleChoice {
    fn choice(&self, infoset: InfosetId) -> Option<usize> {
        (infoset == self.0).then_some(self.1)
    }
}

fn check_profile(tree: &GameTree, profile: &[PureStrategy]) -> Result<(), CheckError> {
    if profile.len() != tree.num_players() {
        return Err(CheckError::InvalidArgument(format!(
            "profile has {} strategies for {} players",
            profile.len(),
            tree.num_players()
        )));
    }
    for (i, s) in profile.iter().enumerate() {
        if s.player() != PlayerId(i) {
            return Err(CheckError::InvalidArgument(format!(
                "profile slot {i} holds a strategy for player {}",
                s.player().0
            )));
        }
    }
    Ok(())
}

/// Follow the profile's actions and the chance policy's edge picks from
/// the root; returns the unique terminal reached.
pub fn play(
    tree: &GameTree,
    profile: &[PureStrategy],
    chance: &ChancePolicy,
) -> Result<NodeId, CheckError> {
    check_profile(tree, profile)?;
    let mut cursor = tree.root();
    loop {
        match tree.node(cursor) {
            Node::Terminal { .. } => return Ok(cursor),
            Node::Decision { player, infoset, children } => {
                let action = profile[player.0]
                    .action_at(*infoset)
                    .ok_or(CheckError::MalformedStrategy { player: *player, infoset: *infoset })?;
                cursor = children[action];
            }
            Node::Chance { edges } => {
                let pick = chance
                    .pick(cursor)
                    .ok_or(CheckError::MissingChancePick { node: cursor })?;
                if pick >= edges.len() {
                    return Err(CheckError::MissingChancePick { node: cursor });
                }
                cursor = edges[pick].child;
            }
        }
    }
}

/// The outcome label at the terminal reached by `play`.
pub fn play_outcome<'t>(
    tree: &'t GameTree,
    profile: &[PureStrategy],
    chance: &ChancePolicy,
) -> Result<&'t str, CheckError> {
    let leaf = play(tree, profile, chance)?;
    match tree.node(leaf) {
        Node::Terminal { outcome } => Ok(tree.outcome_label(*outcome)),
        _ => unreachable!("play returns terminals"),
    }
}

/// Probability-weighted payoff under `profile`, averaging over chance
/// edges with their exact probabilities. The utility identifies whose
/// payoff is being taken.
pub fn expected_payoff(
    tree: &GameTree,
    profile: &[PureStrategy],
    utility: &Utility,
) -> Result<Rational, CheckError> {
    let table = utility.compile(tree)?;
    let mut meter = BudgetMeter::new(&crate::config::CheckConfig {
        budget: u64::MAX,
        ..Default::default()
    });
    expected_payoff_compiled(tree, profile, &table, tree.root(), &mut meter)
}

/// Expected payoff with a precompiled payoff table, from an arbitrary
/// start node, counting terminal visits against the meter. Used by the
/// certifiers.
pub fn expected_payoff_compiled(
    tree: &GameTree,
    profile: &[PureStrategy],
    table: &[Rational],
    from: NodeId,
    meter: &mut BudgetMeter,
) -> Result<Rational, CheckError> {
    check_profile(tree, profile)?;
    fn go(
        tree: &GameTree,
        profile: &[PureStrategy],
        table: &[Rational],
        node: NodeId,
        meter: &mut BudgetMeter,
    ) -> Result<Rational, CheckError> {
        match tree.node(node) {
            Node::Terminal { outcome } => {
                meter.spend(1)?;
                Ok(table[outcome.0].clone())
            }
            Node::Decision { player, infoset, children } => {
                let action = profile[player.0]
                    .action_at(*infoset)
                    .ok_or(CheckError::MalformedStrategy { player: *player, infoset: *infoset })?;
                go(tree, profile, table, children[action], meter)
            }
            Node::Chance { edges } => {
                let mut total = Rational::from_integer(0.into());
                for edge in edges {
                    let value = go(tree, profile, table, edge.child, meter)?;
                    total += value * &edge.probability;
                }
                Ok(total)
            }
        }
    }
    go(tree, profile, table, from, meter)
}

/// Worst-case (`min`) and best-case (`max`) payoff of `player` from the
/// information set `from`, over: every member node of `from`, every
/// opponent action below, every chance edge below, and the player's own
/// actions at information sets in `free_own` or where `continuation` is
/// undefined. The player follows `continuation` where it is defined
/// (unless the set is listed in `free_own`, which wins).
pub fn payoff_bounds(
    tree: &GameTree,
    player: PlayerId,
    utility: &Utility,
    from: InfosetId,
    continuation: &dyn ActionChoices,
    free_own: &BTreeSet<InfosetId>,
) -> Result<(Rational, Rational), CheckError> {
    let table = utility.compile(tree)?;
    let mut meter = BudgetMeter::new(&crate::config::CheckConfig {
        budget: u64::MAX,
        ..Default::default()
    });
    let min = bound_compiled(tree, player, &table, from, continuation, free_own, true, &mut meter)?;
    let max = bound_compiled(tree, player, &table, from, continuation, free_own, false, &mut meter)?;
    Ok((min, max))
}

/// One side of `payoff_bounds` with a precompiled table and budget meter.
pub fn bound_compiled(
    tree: &GameTree,
    player: PlayerId,
    table: &[Rational],
    from: InfosetId,
    continuation: &dyn ActionChoices,
    free_own: &BTreeSet<InfosetId>,
    minimize: bool,
    meter: &mut BudgetMeter,
) -> Result<Rational, CheckError> {
    if tree.infoset(from).player != player {
        return Err(CheckError::InvalidArgument(format!(
            "infoset {} does not belong to player {}",
            from.0, player.0
        )));
    }
    if continuation.choice(from).is_none() && !free_own.contains(&from) {
        return Err(CheckError::MalformedPlan { infoset: from });
    }
    let members = &tree.infoset(from).members;
    if members.is_empty() {
        return Err(CheckError::InvalidArgument(format!("infoset {} has no members", from.0)));
    }
    let mut best: Option<Rational> = None;
    for member in members {
        let value =
            bound_from_node(tree, player, table, *member, continuation, free_own, minimize, meter)?;
        best = Some(match best {
            None => value,
            Some(previous) => {
                if minimize == (value < previous) {
                    value
                } else {
                    previous
                }
            }
        });
    }
    Ok(best.unwrap())
}

fn bound_from_node(
    tree: &GameTree,
    player: PlayerId,
    table: &[Rational],
    node: NodeId,
    continuation: &dyn ActionChoices,
    free_own: &BTreeSet<InfosetId>,
    minimize: bool,
    meter: &mut BudgetMeter,
) -> Result<Rational, CheckError> {
    let over_children = |children: Vec<NodeId>, meter: &mut BudgetMeter| -> Result<Rational, CheckError> {
        let mut best: Option<Rational> = None;
        for child in children {
            let value = bound_from_node(
                tree, player, table, child, continuation, free_own, minimize, meter,
            )?;
            best = Some(match best {
                None => value,
                Some(previous) => {
                    if minimize == (value < previous) {
                        value
                    } else {
                        previous
                    }
                }
            });
        }
        best.ok_or_else(|| CheckError::InvalidArgument("node with no children".to_string()))
    };
    match tree.node(node) {
        Node::Terminal { outcome } => {
            meter.spend(1)?;
            Ok(table[outcome.0].clone())
        }
        Node::Chance { edges } => {
            over_children(edges.iter().map(|e| e.child).collect(), meter)
        }
        Node::Decision { player: mover, infoset, children } => {
            if *mover == player && !free_own.contains(infoset) {
                if let Some(action) = continuation.choice(*infoset) {
                    return bound_from_node(
                        tree, player, table, children[action], continuation, free_own, minimize,
                        meter,
                    );
                }
            }
            over_children(children.clone(), meter)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::tree::TreeBuilder;
    use crate::rational::{rat, ratio};
    use std::collections::BTreeMap;

    /// Root chance 1/2-1/2 onto terminals worth 0 and 1.
    #[test]
    fn expected_payoff_of_a_coin_flip_is_one_half() {
        let mut b = TreeBuilder::new(vec!["p0".into()]);
        let t0 = b.terminal("zero");
        let t1 = b.terminal("one");
        let root = b.chance(vec![(ratio(1, 2), t0), (ratio(1, 2), t1)]);
        let tree = b.finish(root).unwrap();
        let utility = Utility::from_pairs([("zero", rat(0)), ("one", rat(1))]);
        let profile = vec![PureStrategy::new(PlayerId(0), vec![])];
        let value = expected_payoff(&tree, &profile, &utility, PlayerId(0)).unwrap();
        assert_eq!(value, ratio(1, 2));
    }

    #[test]
    fn chance_free_expected_payoff_equals_play_utility() {
        let mut b = TreeBuilder::new(vec!["p0".into()]);
        let i = b.infoset(PlayerId(0), vec!["l".into(), "r".into()]);
        let t0 = b.terminal("left");
        let t1 = b.terminal("right");
        let root = b.decision(i, vec![t0, t1]);
        let tree = b.finish(root).unwrap();
        let utility = Utility::from_pairs([("left", rat(3)), ("right", rat(7))]);
        for action in 0..2 {
            let strategy =
                PureStrategy::total(&tree, PlayerId(0), &BTreeMap::from([(InfosetId(0), action)]))
                    .unwrap();
            let profile = vec![strategy];
            let leaf = play(&tree, &profile, &ChancePolicy::empty()).unwrap();
            let label = match tree.node(leaf) {
                Node::Terminal { outcome } => tree.outcome_label(*outcome),
                _ => unreachable!(),
            };
            let expected = expected_payoff(&tree, &profile, &utility, PlayerId(0)).unwrap();
            assert_eq!(&expected, utility.get(label).unwrap());
        }
    }

    #[test]
    fn play_is_deterministic_and_ignores_chance_policy_without_chance() {
        let mut b = TreeBuilder::new(vec!["p0".into()]);
        let i = b.infoset(PlayerId(0), vec!["l".into(), "r".into()]);
        let t0 = b.terminal("left");
        let t1 = b.terminal("right");
        let root = b.decision(i, vec![t0, t1]);
        let tree = b.finish(root).unwrap();
        let strategy =
            PureStrategy::total(&tree, PlayerId(0), &BTreeMap::from([(InfosetId(0), 1)])).unwrap();
        let profile = vec![strategy];
        let mut with_pick = ChancePolicy::empty();
        with_pick.set(NodeId(5), 0);
        let a = play(&tree, &profile, &ChancePolicy::empty()).unwrap();
        let c = play(&tree, &profile, &with_pick).unwrap();
        assert_eq!(a, c);
        assert_eq!(a, play(&tree, &profile, &ChancePolicy::empty()).unwrap());
    }

    #[test]
    fn missing_strategy_entry_is_a_malformed_strategy_error() {
        let mut b = TreeBuilder::new(vec!["p0".into()]);
        let i = b.infoset(PlayerId(0), vec!["l".into(), "r".into()]);
        let t0 = b.terminal("left");
        let t1 = b.terminal("right");
        let root = b.decision(i, vec![t0, t1]);
        let tree = b.finish(root).unwrap();
        let empty = PureStrategy::new(PlayerId(0), vec![]);
        match play(&tree, &[empty], &ChancePolicy::empty()) {
            Err(CheckError::MalformedStrategy { .. }) => {}
            other => panic!("expected malformed-strategy error, got {other:?}"),
        }
    }

    #[test]
    fn bounds_require_continuation_at_the_anchor() {
        let mut b = TreeBuilder::new(vec!["p0".into()]);
        let i = b.infoset(PlayerId(0), vec!["l".into(), "r".into()]);
        let t0 = b.terminal("left");
        let t1 = b.terminal("right");
        let root = b.decision(i, vec![t0, t1]);
        let tree = b.finish(root).unwrap();
        let utility = Utility::from_pairs([("left", rat(0)), ("right", rat(1))]);
        let undefined = PureStrategy::new(PlayerId(0), vec![]);
        match payoff_bounds(&tree, PlayerId(0), &utility, InfosetId(0), &undefined, &BTreeSet::new())
        {
            Err(CheckError::MalformedPlan { .. }) => {}
            other => panic!("expected malformed-plan error, got {other:?}"),
        }
    }
}
