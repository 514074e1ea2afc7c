//! Alternatives to the simultaneous drop phase: a sweep with supplier
//! overbidding disallowed, and a quantity-based deferred-acceptance
//! contracting stage with a stability checker.
//!
//! Deferred acceptance runs on the platform's match list. Each match is an
//! edge whose capacity is its matched quantity. Proposers offer along their
//! preference order up to their remaining quantity and per-DP access; each
//! responder holds its preferred offers up to its own limits and rejects the
//! rest for good. The loop ends when a round produces no rejection.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::contracting::{per_unit_utility, KeptMatch, Side, UTILITY_TIE_EPS};
use crate::error::Result;
use crate::game::{sweep_consumers_only, Mechanism, SweepTable};
use crate::matching::{Match, MatchSet};
use crate::model::Scenario;

/// Quantities below this are treated as zero.
const QTY_EPS: f64 = 1e-9;

/// Slack used when the stability check compares quantities against limits.
const STABILITY_EPS: f64 = 1e-7;

/// Sweep over consumer strategies with every supplier bidding truthfully.
pub fn sweep_supplier_restricted(scenario: &Scenario) -> Result<SweepTable> {
    sweep_consumers_only(scenario, Mechanism::default())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Contract {
    pub matched: Match,
    pub quantity: f64,
}

impl From<&KeptMatch> for Contract {
    fn from(k: &KeptMatch) -> Self {
        Contract {
            matched: k.matched,
            quantity: k.q_mu,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StableContractSet {
    pub contracts: Vec<Contract>,
    pub rounds: usize,
    pub proposer_side: Side,
}

impl StableContractSet {
    pub fn tcq(&self) -> f64 {
        self.contracts.iter().map(|c| c.quantity).sum()
    }
}

fn party(m: &Match, side: Side) -> usize {
    match side {
        Side::Consumer => m.consumer,
        Side::Supplier => m.supplier,
    }
}

fn other(side: Side) -> Side {
    match side {
        Side::Consumer => Side::Supplier,
        Side::Supplier => Side::Consumer,
    }
}

/// Overall and per-DP limits of one participant.
struct Limits {
    total: f64,
    per_dp: Vec<f64>,
}

fn limits(scenario: &Scenario, side: Side) -> Vec<Limits> {
    let make = |cap: f64, qbar: &[f64]| Limits {
        total: cap,
        per_dp: qbar.iter().map(|&q| q.min(cap)).collect(),
    };
    match side {
        Side::Consumer => scenario.consumers.iter().map(|c| make(c.qr, &c.qbar)).collect(),
        Side::Supplier => scenario.suppliers.iter().map(|s| make(s.qa, &s.qbar)).collect(),
    }
}

/// Strict preference over a participant's matches: higher per-unit utility,
/// then lower DP index, then lower counterpart index.
fn preference(side: Side, utility: &[f64], matches: &[Match], a: usize, b: usize) -> Ordering {
    let (ua, ub) = (utility[a], utility[b]);
    let by_utility = if (ua - ub).abs() <= UTILITY_TIE_EPS {
        Ordering::Equal
    } else {
        ub.total_cmp(&ua)
    };
    let counterpart = other(side);
    by_utility
        .then(matches[a].dp.cmp(&matches[b].dp))
        .then(party(&matches[a], counterpart).cmp(&party(&matches[b], counterpart)))
}

/// Edge indices of each participant on `side`, best first.
fn ranked_edges(side: Side, n: usize, utility: &[f64], matches: &[Match]) -> Vec<Vec<usize>> {
    let mut lists = vec![Vec::new(); n];
    for (e, m) in matches.iter().enumerate() {
        lists[party(m, side)].push(e);
    }
    for list in &mut lists {
        list.sort_by(|&a, &b| preference(side, utility, matches, a, b));
    }
    lists
}

/// Greedy fill of `amounts[e]` along `ranked`, bounded by the participant's limits.
fn fill(ranked: &[usize], amounts: &[f64], matches: &[Match], lim: &Limits, out: &mut [f64]) {
    let mut total_left = lim.total;
    let mut dp_left = lim.per_dp.clone();
    for &e in ranked {
        let t = matches[e].dp;
        let q = amounts[e].min(total_left).min(dp_left[t]).max(0.0);
        out[e] = q;
        total_left -= q;
        dp_left[t] -= q;
    }
}

/// Consumer-proposing deferred acceptance on the platform's matches.
pub fn deferred_acceptance(match_set: &MatchSet, scenario: &Scenario) -> StableContractSet {
    deferred_acceptance_with(match_set, scenario, Side::Consumer)
}

pub fn deferred_acceptance_with(match_set: &MatchSet, scenario: &Scenario, proposer: Side) -> StableContractSet {
    let matches = &match_set.matches;
    let responder = other(proposer);
    let count = |side| match side {
        Side::Consumer => scenario.n_consumers(),
        Side::Supplier => scenario.n_suppliers(),
    };
    let utility = |side| -> Vec<f64> { matches.iter().map(|m| per_unit_utility(m, side, scenario)).collect() };
    let (u_prop, u_resp) = (utility(proposer), utility(responder));
    let prop_lists = ranked_edges(proposer, count(proposer), &u_prop, matches);
    let resp_lists = ranked_edges(responder, count(responder), &u_resp, matches);
    let prop_limits = limits(scenario, proposer);
    let resp_limits = limits(scenario, responder);

    let mut available: Vec<f64> = matches.iter().map(|m| m.quantity).collect();
    let mut offers = vec![0.0; matches.len()];
    let mut held = vec![0.0; matches.len()];
    let mut rounds = 0;

    if !matches.is_empty() {
        loop {
            rounds += 1;
            for (list, lim) in prop_lists.iter().zip(&prop_limits) {
                fill(list, &available, matches, lim, &mut offers);
            }
            for (list, lim) in resp_lists.iter().zip(&resp_limits) {
                fill(list, &offers, matches, lim, &mut held);
            }
            let mut rejected = false;
            for e in 0..matches.len() {
                let r = offers[e] - held[e];
                if r > QTY_EPS {
                    // The responder's offers only improve, so it will never
                    // take more of this edge than it holds now.
                    available[e] = held[e];
                    rejected = true;
                } else {
                    held[e] = offers[e];
                }
            }
            if !rejected {
                break;
            }
        }
    }

    let contracts = matches
        .iter()
        .zip(&held)
        .filter(|(_, &q)| q > QTY_EPS)
        .map(|(m, &q)| Contract {
            matched: *m,
            quantity: q,
        })
        .collect();
    StableContractSet {
        contracts,
        rounds,
        proposer_side: proposer,
    }
}

/// An unrealised match both of whose parties would take more of it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlockingMatch {
    pub matched: Match,
    pub contracted: f64,
}

/// Matches that block `contracts`; an empty result certifies stability.
///
/// A party wants more of a match when it has room both overall and at the
/// match's DP, or when it holds a strictly worse contract whose release would
/// free the binding limit.
pub fn is_stable(contracts: &[Contract], match_set: &MatchSet, scenario: &Scenario) -> Vec<BlockingMatch> {
    let mut held: HashMap<(usize, usize, usize), f64> = HashMap::new();
    for c in contracts {
        let m = &c.matched;
        *held.entry((m.consumer, m.supplier, m.dp)).or_default() += c.quantity;
    }
    let matches = &match_set.matches;
    let x: Vec<f64> = matches
        .iter()
        .map(|m| held.get(&(m.consumer, m.supplier, m.dp)).copied().unwrap_or(0.0))
        .collect();

    let side_data = |side: Side| {
        let utility: Vec<f64> = matches.iter().map(|m| per_unit_utility(m, side, scenario)).collect();
        (utility, limits(scenario, side))
    };
    let consumers = side_data(Side::Consumer);
    let suppliers = side_data(Side::Supplier);

    let wants = |side: Side, (utility, lims): &(Vec<f64>, Vec<Limits>), e: usize| {
        let who = party(&matches[e], side);
        let t = matches[e].dp;
        let mine = || (0..matches.len()).filter(move |&k| party(&matches[k], side) == who);
        let total: f64 = mine().map(|k| x[k]).sum();
        let at_dp: f64 = mine().filter(|&k| matches[k].dp == t).map(|k| x[k]).sum();
        let lim = &lims[who];
        let total_room = total < lim.total - STABILITY_EPS;
        let dp_room = at_dp < lim.per_dp[t] - STABILITY_EPS;
        let worse = |same_dp: bool| {
            mine().any(|k| {
                k != e
                    && x[k] > STABILITY_EPS
                    && (!same_dp || matches[k].dp == t)
                    && utility[k] < utility[e] - UTILITY_TIE_EPS
            })
        };
        (total_room && dp_room) || worse(true) || (dp_room && worse(false))
    };

    (0..matches.len())
        .filter(|&e| x[e] < matches[e].quantity - STABILITY_EPS)
        .filter(|&e| wants(Side::Consumer, &consumers, e) && wants(Side::Supplier, &suppliers, e))
        .map(|e| BlockingMatch {
            matched: matches[e],
            contracted: x[e],
        })
        .collect()
}
