//! Per-DP pro-rata matching of demand and supply bids.
//!
//! At a DP where demand covers supply every supply bid is matched in full.
//! Otherwise supply bids are ranked, accepted in rank order until demand is
//! exhausted (the marginal bid partially), and the rest are dropped. Each
//! accepted supply quantity is then split across demanders in proportion to
//! their demand bids at that DP.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::bidding::BidSet;

const TIE_EPS: f64 = 1e-9;

/// Ranking of supply bids at an oversupplied DP.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum SupplyPriority {
    /// Larger supply bids first; equal quantities by lower price, then lower
    /// supplier index. This ranking reproduces both
    /// reference scenarios.
    #[default]
    LargestBid,
    /// Cheaper supply bids first, then lower supplier index.
    LowestPrice,
}

impl SupplyPriority {
    fn compare(self, bids: &BidSet, t: usize, a: usize, b: usize) -> Ordering {
        let price = |j: usize| bids.bps[j][t];
        let qty = |j: usize| bids.bqs[j][t];
        let by_price = price(a).total_cmp(&price(b));
        match self {
            SupplyPriority::LowestPrice => by_price,
            SupplyPriority::LargestBid => qty(b).total_cmp(&qty(a)).then(by_price),
        }
        .then(a.cmp(&b))
    }

    /// Whether two bids share a rank and must be trimmed together.
    fn tied(self, bids: &BidSet, t: usize, a: usize, b: usize) -> bool {
        let same_price = (bids.bps[a][t] - bids.bps[b][t]).abs() <= TIE_EPS;
        match self {
            SupplyPriority::LowestPrice => same_price,
            SupplyPriority::LargestBid => {
                same_price && (bids.bqs[a][t] - bids.bqs[b][t]).abs() <= TIE_EPS
            }
        }
    }
}

/// One platform match `(consumer, supplier, dp)` with its quantity and the
/// supplier's bid price at that DP.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Match {
    pub consumer: usize,
    pub supplier: usize,
    pub dp: usize,
    pub quantity: f64,
    pub price: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatchSet {
    pub matches: Vec<Match>,
    pub dp_demand: Vec<f64>,
    pub dp_supply: Vec<f64>,
    /// Number of consumers with a positive demand bid at each DP.
    pub bidders_per_dp: Vec<usize>,
    /// Total matched quantity, `sum_t min(demand_t, supply_t)`.
    pub tmq: f64,
}

impl MatchSet {
    pub fn get(&self, consumer: usize, supplier: usize, dp: usize) -> Option<&Match> {
        self.matches
            .iter()
            .find(|m| m.consumer == consumer && m.supplier == supplier && m.dp == dp)
    }

    /// Matched quantity for a triple, 0 when absent.
    pub fn quantity(&self, consumer: usize, supplier: usize, dp: usize) -> f64 {
        self.get(consumer, supplier, dp).map_or(0.0, |m| m.quantity)
    }
}

/// Column sums of the demand and supply quantity matrices.
pub fn dp_totals(bids: &BidSet) -> (Vec<f64>, Vec<f64>) {
    let n_dp = bids.n_dp();
    let col = |rows: &[Vec<f64>], t: usize| rows.iter().map(|r| r[t]).sum::<f64>();
    (
        (0..n_dp).map(|t| col(&bids.bqc, t)).collect(),
        (0..n_dp).map(|t| col(&bids.bqs, t)).collect(),
    )
}

/// Supply quantity accepted from each supplier at DP `t`.
fn accepted_supply(t: usize, bids: &BidSet, demand: f64, supply: f64, priority: SupplyPriority) -> Vec<f64> {
    let offered: Vec<f64> = bids.bqs.iter().map(|r| r[t]).collect();
    if demand >= supply {
        return offered;
    }
    let mut ranked: Vec<usize> = (0..offered.len()).filter(|&j| offered[j] > 0.0).collect();
    ranked.sort_by(|&a, &b| priority.compare(bids, t, a, b));

    let mut accepted = vec![0.0; offered.len()];
    let mut remaining = demand;
    let mut k = 0;
    while k < ranked.len() && remaining > 0.0 {
        let mut end = k + 1;
        while end < ranked.len() && priority.tied(bids, t, ranked[k], ranked[end]) {
            end += 1;
        }
        let group = &ranked[k..end];
        let group_qty: f64 = group.iter().map(|&j| offered[j]).sum();
        let share = if group_qty <= remaining { 1.0 } else { remaining / group_qty };
        for &j in group {
            accepted[j] = offered[j] * share;
        }
        remaining -= group_qty * share;
        k = end;
    }
    accepted
}

/// Matches at a single DP under the default supply priority.
pub fn match_dp(t: usize, bids: &BidSet) -> Vec<Match> {
    match_dp_with(t, bids, SupplyPriority::default())
}

pub fn match_dp_with(t: usize, bids: &BidSet, priority: SupplyPriority) -> Vec<Match> {
    let demand: f64 = bids.bqc.iter().map(|r| r[t]).sum();
    let supply: f64 = bids.bqs.iter().map(|r| r[t]).sum();
    if demand <= 0.0 || supply <= 0.0 {
        return Vec::new();
    }
    let accepted = accepted_supply(t, bids, demand, supply, priority);

    let mut suppliers: Vec<usize> = (0..accepted.len()).filter(|&j| accepted[j] > 0.0).collect();
    suppliers.sort_by(|&a, &b| bids.bps[a][t].total_cmp(&bids.bps[b][t]).then(a.cmp(&b)));

    let mut out = Vec::new();
    for j in suppliers {
        for (i, row) in bids.bqc.iter().enumerate() {
            let quantity = accepted[j] * row[t] / demand;
            if quantity > 0.0 {
                out.push(Match {
                    consumer: i,
                    supplier: j,
                    dp: t,
                    quantity,
                    price: bids.bps[j][t],
                });
            }
        }
    }
    out
}

pub fn match_all(bids: &BidSet) -> MatchSet {
    match_all_with(bids, SupplyPriority::default())
}

pub fn match_all_with(bids: &BidSet, priority: SupplyPriority) -> MatchSet {
    let (dp_demand, dp_supply) = dp_totals(bids);
    let n_dp = dp_demand.len();
    let matches = (0..n_dp)
        .flat_map(|t| match_dp_with(t, bids, priority))
        .collect();
    let bidders_per_dp = (0..n_dp)
        .map(|t| bids.bqc.iter().filter(|r| r[t] > 0.0).count())
        .collect();
    let tmq = dp_demand
        .iter()
        .zip(&dp_supply)
        .map(|(d, s)| d.min(*s))
        .sum();
    MatchSet {
        matches,
        dp_demand,
        dp_supply,
        bidders_per_dp,
        tmq,
    }
}
