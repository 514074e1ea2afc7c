//! Drop phase and utilities.
//!
//! Every participant independently keeps its best matches up to its true
//! quantity and drops the rest, with no knowledge of what the other side
//! drops. A match is contracted at the smaller of the two kept quantities.

use serde::{Deserialize, Serialize};

use crate::matching::{Match, MatchSet};
use crate::model::Scenario;

/// Absolute tolerance for treating two per-unit utilities as equal.
pub const UTILITY_TIE_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Consumer,
    Supplier,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KeptMatch {
    pub matched: Match,
    /// Originally matched quantity.
    pub q_mo: f64,
    pub kept_by_consumer: f64,
    pub kept_by_supplier: f64,
    /// Contracted quantity, the smaller of the two kept quantities.
    pub q_mu: f64,
}

/// Per-player utilities and aggregate quantities for one strategy profile.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub u_consumers: Vec<f64>,
    pub u_suppliers: Vec<f64>,
    pub tmq: f64,
    pub tcq: f64,
    pub tu: f64,
}

impl Outcome {
    /// Utility of player `p`, consumers first.
    pub fn utility(&self, p: usize) -> f64 {
        let n_c = self.u_consumers.len();
        if p < n_c {
            self.u_consumers[p]
        } else {
            self.u_suppliers[p - n_c]
        }
    }

    pub fn utilities(&self) -> impl Iterator<Item = f64> + '_ {
        self.u_consumers.iter().chain(&self.u_suppliers).copied()
    }
}

/// Options for the drop phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DropRule {
    /// Drop matches with negative per-unit utility even when capacity remains.
    pub drop_negative: bool,
}

/// Utility per unit of a match for one of its two parties.
pub fn per_unit_utility(m: &Match, side: Side, scenario: &Scenario) -> f64 {
    match side {
        Side::Consumer => {
            let c = &scenario.consumers[m.consumer];
            c.u - m.price - c.ct[m.dp]
        }
        Side::Supplier => {
            let s = &scenario.suppliers[m.supplier];
            m.price - s.cp - s.ct[m.dp]
        }
    }
}

/// Keeps the best `(quantity, utility)` items up to `capacity`.
///
/// Items are taken in descending utility. The utility level at which capacity
/// runs out is shared pro rata across all items tied at that level; strictly
/// worse items keep nothing.
pub fn keep_best(capacity: f64, items: &[(f64, f64)], rule: DropRule) -> Vec<f64> {
    let admissible = |u: f64| !(rule.drop_negative && u < 0.0);
    let total: f64 = items
        .iter()
        .filter(|(_, u)| admissible(*u))
        .map(|(q, _)| q)
        .sum();
    if total <= capacity {
        return items
            .iter()
            .map(|&(q, u)| if admissible(u) { q } else { 0.0 })
            .collect();
    }

    let mut order: Vec<usize> = (0..items.len()).filter(|&k| admissible(items[k].1)).collect();
    order.sort_by(|&a, &b| items[b].1.total_cmp(&items[a].1).then(a.cmp(&b)));

    let mut kept = vec![0.0; items.len()];
    let mut remaining = capacity.max(0.0);
    let mut k = 0;
    while k < order.len() && remaining > 0.0 {
        let level = items[order[k]].1;
        let mut end = k + 1;
        while end < order.len() && (level - items[order[end]].1).abs() <= UTILITY_TIE_EPS {
            end += 1;
        }
        let group_qty: f64 = order[k..end].iter().map(|&i| items[i].0).sum();
        let share = if group_qty <= remaining { 1.0 } else { remaining / group_qty };
        for &i in &order[k..end] {
            kept[i] = items[i].0 * share;
        }
        remaining -= group_qty * share;
        k = end;
    }
    kept
}

/// Quantities participant `index` on `side` keeps of each of `matches`
/// (which must all involve that participant).
pub fn kept_quantities(
    scenario: &Scenario,
    side: Side,
    index: usize,
    matches: &[Match],
    rule: DropRule,
) -> Vec<f64> {
    let capacity = match side {
        Side::Consumer => scenario.consumers[index].qr,
        Side::Supplier => scenario.suppliers[index].qa,
    };
    let items: Vec<(f64, f64)> = matches
        .iter()
        .map(|m| {
            debug_assert_eq!(party(m, side), index);
            (m.quantity, per_unit_utility(m, side, scenario))
        })
        .collect();
    keep_best(capacity, &items, rule)
}

fn party(m: &Match, side: Side) -> usize {
    match side {
        Side::Consumer => m.consumer,
        Side::Supplier => m.supplier,
    }
}

/// Simultaneous drop by every participant; returns one entry per match in
/// match-set order.
pub fn realize(match_set: &MatchSet, scenario: &Scenario) -> Vec<KeptMatch> {
    realize_with(match_set, scenario, DropRule::default())
}

pub fn realize_with(match_set: &MatchSet, scenario: &Scenario, rule: DropRule) -> Vec<KeptMatch> {
    let matches = &match_set.matches;
    let mut by_consumer = vec![0.0; matches.len()];
    let mut by_supplier = vec![0.0; matches.len()];

    for (side, count, out) in [
        (Side::Consumer, scenario.n_consumers(), &mut by_consumer),
        (Side::Supplier, scenario.n_suppliers(), &mut by_supplier),
    ] {
        for index in 0..count {
            let mine: Vec<usize> = (0..matches.len()).filter(|&k| party(&matches[k], side) == index).collect();
            let subset: Vec<Match> = mine.iter().map(|&k| matches[k]).collect();
            let kept = kept_quantities(scenario, side, index, &subset, rule);
            for (k, q) in mine.into_iter().zip(kept) {
                out[k] = q;
            }
        }
    }

    matches
        .iter()
        .enumerate()
        .map(|(k, m)| KeptMatch {
            matched: *m,
            q_mo: m.quantity,
            kept_by_consumer: by_consumer[k],
            kept_by_supplier: by_supplier[k],
            q_mu: by_consumer[k].min(by_supplier[k]),
        })
        .collect()
}

/// Utilities from realised contracts.
pub fn utilities(contracts: &[KeptMatch], scenario: &Scenario, tmq: f64) -> Outcome {
    let mut u_consumers = vec![0.0; scenario.n_consumers()];
    let mut u_suppliers = vec![0.0; scenario.n_suppliers()];
    let mut tcq = 0.0;
    for c in contracts {
        let m = &c.matched;
        u_consumers[m.consumer] += c.q_mu * per_unit_utility(m, Side::Consumer, scenario);
        u_suppliers[m.supplier] += c.q_mu * per_unit_utility(m, Side::Supplier, scenario);
        tcq += c.q_mu;
    }
    let tu = u_consumers.iter().chain(&u_suppliers).sum();
    Outcome {
        u_consumers,
        u_suppliers,
        tmq,
        tcq,
        tu,
    }
}
