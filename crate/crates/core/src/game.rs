//! Strategy-profile sweeps, pure Nash equilibria and dominance.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bidding::{build_bids, BidSet};
use crate::contracting::{realize_with, utilities, DropRule, KeptMatch, Outcome};
use crate::error::{Error, Result};
use crate::matching::{match_all_with, MatchSet, SupplyPriority};
use crate::model::{Scenario, Strategy, StrategyProfile};

/// Largest player count accepted by [`sweep`].
pub const MAX_SWEEP_PLAYERS: usize = 24;

/// Absolute tolerance on utility comparisons in deviation checks.
pub const UTILITY_CMP_EPS: f64 = 1e-6;

/// Mechanism options shared by every pipeline stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Mechanism {
    pub priority: SupplyPriority,
    pub drop: DropRule,
}

/// Every intermediate product of one pipeline run.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub bids: BidSet,
    pub matches: MatchSet,
    pub contracts: Vec<KeptMatch>,
    pub outcome: Outcome,
}

pub fn evaluate_full(scenario: &Scenario, profile: &StrategyProfile, mech: Mechanism) -> Evaluation {
    let bids = build_bids(scenario, profile);
    let matches = match_all_with(&bids, mech.priority);
    let contracts = realize_with(&matches, scenario, mech.drop);
    let outcome = utilities(&contracts, scenario, matches.tmq);
    Evaluation {
        bids,
        matches,
        contracts,
        outcome,
    }
}

/// Bids, matching, drop phase and utilities for one profile.
pub fn evaluate_profile(scenario: &Scenario, profile: &StrategyProfile) -> Outcome {
    evaluate_full(scenario, profile, Mechanism::default()).outcome
}

/// Outcomes for a set of strategy profiles, in canonical row order.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub player_ids: Vec<String>,
    pub n_consumers: usize,
    pub rows: Vec<(StrategyProfile, Outcome)>,
    index: HashMap<u64, usize>,
}

impl SweepTable {
    fn new(scenario: &Scenario, rows: Vec<(StrategyProfile, Outcome)>) -> Self {
        let index = rows
            .iter()
            .enumerate()
            .map(|(k, (p, _))| (p.to_bits(), k))
            .collect();
        Self {
            player_ids: scenario.player_ids().into_iter().map(String::from).collect(),
            n_consumers: scenario.n_consumers(),
            rows,
            index,
        }
    }

    pub fn n_players(&self) -> usize {
        self.player_ids.len()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn outcome(&self, profile: &StrategyProfile) -> Option<&Outcome> {
        self.index.get(&profile.to_bits()).map(|&k| &self.rows[k].1)
    }

    /// Whether every profile of the full strategy space is present.
    pub fn is_complete(&self) -> bool {
        self.rows.len() == 1usize << self.n_players()
    }
}

/// Canonical row order: fewer overbidders first, then lexicographic with `O`
/// before `N`.
pub fn canonical_order(a: &StrategyProfile, b: &StrategyProfile) -> Ordering {
    let count = |p: &StrategyProfile| p.to_bits().count_ones();
    let key = |p: &StrategyProfile| {
        (0..p.n_players())
            .map(|k| p.get(k) == Strategy::N)
            .collect::<Vec<_>>()
    };
    count(a).cmp(&count(b)).then_with(|| key(a).cmp(&key(b)))
}

fn evaluate_all(scenario: &Scenario, mut profiles: Vec<StrategyProfile>, mech: Mechanism) -> SweepTable {
    profiles.sort_by(canonical_order);
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let chunk = profiles.len().div_ceil(threads).max(64);
    let outcomes: Vec<Outcome> = std::thread::scope(|s| {
        let handles: Vec<_> = profiles
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    part.iter()
                        .map(|p| evaluate_full(scenario, p, mech).outcome)
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("profile evaluation panicked"))
            .collect()
    });
    SweepTable::new(scenario, profiles.into_iter().zip(outcomes).collect())
}

/// Evaluates all `2^(n_C + n_S)` profiles.
pub fn sweep(scenario: &Scenario) -> Result<SweepTable> {
    sweep_with(scenario, Mechanism::default())
}

pub fn sweep_with(scenario: &Scenario, mech: Mechanism) -> Result<SweepTable> {
    let n = scenario.n_players();
    if n > MAX_SWEEP_PLAYERS {
        return Err(Error::TooManyPlayers {
            players: n,
            limit: MAX_SWEEP_PLAYERS,
        });
    }
    let (n_c, n_s) = (scenario.n_consumers(), scenario.n_suppliers());
    let profiles = (0..1u64 << n).map(|b| StrategyProfile::from_bits(b, n_c, n_s)).collect();
    Ok(evaluate_all(scenario, profiles, mech))
}

/// Sweep over consumer strategies only, every supplier pinned to `N`.
pub fn sweep_consumers_only(scenario: &Scenario, mech: Mechanism) -> Result<SweepTable> {
    let n_c = scenario.n_consumers();
    if n_c > MAX_SWEEP_PLAYERS {
        return Err(Error::TooManyPlayers {
            players: n_c,
            limit: MAX_SWEEP_PLAYERS,
        });
    }
    let n_s = scenario.n_suppliers();
    let profiles = (0..1u64 << n_c).map(|b| StrategyProfile::from_bits(b, n_c, n_s)).collect();
    Ok(evaluate_all(scenario, profiles, mech))
}

/// A unilateral switch that strictly raises the deviating player's utility.
#[derive(Debug, Clone, PartialEq)]
pub struct Deviation {
    pub profile: StrategyProfile,
    pub player: usize,
    pub utility_before: f64,
    pub utility_after: f64,
}

/// Every strictly improving unilateral deviation available in the table.
/// Deviations leading outside the table (pinned players) are not available.
pub fn improving_deviations(table: &SweepTable) -> Vec<Deviation> {
    let mut out = Vec::new();
    for (profile, outcome) in &table.rows {
        for p in 0..table.n_players() {
            let dev = profile.deviate(p);
            if let Some(other) = table.outcome(&dev) {
                let before = outcome.utility(p);
                let after = other.utility(p);
                if after > before + UTILITY_CMP_EPS {
                    out.push(Deviation {
                        profile: profile.clone(),
                        player: p,
                        utility_before: before,
                        utility_after: after,
                    });
                }
            }
        }
    }
    out
}

/// Pure-strategy equilibria: profiles where no player gains strictly by
/// switching.
pub fn nash_equilibria(table: &SweepTable) -> Vec<StrategyProfile> {
    let deviations = improving_deviations(table);
    table
        .rows
        .iter()
        .map(|(p, _)| p)
        .filter(|p| !deviations.iter().any(|d| &d.profile == *p))
        .cloned()
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Dominance {
    /// Strictly better against every opponent profile.
    Strict(Strategy),
    /// Never worse, and strictly better against at least one opponent profile.
    Weak(Strategy),
    None,
}

impl std::fmt::Display for Dominance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Dominance::Strict(s) => write!(f, "{s} strictly dominant"),
            Dominance::Weak(s) => write!(f, "{s} weakly dominant"),
            Dominance::None => write!(f, "none"),
        }
    }
}

/// Dominance status of each player's strategies.
pub fn dominant_strategies(table: &SweepTable) -> Vec<Dominance> {
    (0..table.n_players())
        .map(|p| {
            // Utility gains of O over N for each opponent profile.
            let gains: Vec<f64> = table
                .rows
                .iter()
                .filter(|(profile, _)| profile.get(p) == Strategy::N)
                .filter_map(|(profile, outcome)| {
                    let alt = table.outcome(&profile.deviate(p))?;
                    Some(alt.utility(p) - outcome.utility(p))
                })
                .collect();
            classify(&gains)
        })
        .collect()
}

fn classify(gains: &[f64]) -> Dominance {
    if gains.is_empty() {
        return Dominance::None;
    }
    let eps = UTILITY_CMP_EPS;
    if gains.iter().all(|&g| g > eps) {
        return Dominance::Strict(Strategy::O);
    }
    if gains.iter().all(|&g| g < -eps) {
        return Dominance::Strict(Strategy::N);
    }
    if gains.iter().all(|&g| g >= -eps) && gains.iter().any(|&g| g > eps) {
        return Dominance::Weak(Strategy::O);
    }
    if gains.iter().all(|&g| g <= eps) && gains.iter().any(|&g| g < -eps) {
        return Dominance::Weak(Strategy::N);
    }
    Dominance::None
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumReport {
    pub nash: Vec<StrategyProfile>,
    pub dominance: Vec<Dominance>,
    pub improving: Vec<Deviation>,
}

pub fn analyze(table: &SweepTable) -> EquilibriumReport {
    EquilibriumReport {
        nash: nash_equilibria(table),
        dominance: dominant_strategies(table),
        improving: improving_deviations(table),
    }
}
