//! Bid construction: total bid quantities, least-cost allocation across
//! delivery points, and supplier bid prices.

use crate::error::{Error, Result};
use crate::model::{Consumer, Scenario, Strategy, StrategyProfile, Supplier};

const EPS: f64 = 1e-9;

/// Demand quantities `bqc`, supply quantities `bqs` and supply prices `bps`,
/// each indexed `[participant][dp]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BidSet {
    pub bqc: Vec<Vec<f64>>,
    pub bqs: Vec<Vec<f64>>,
    pub bps: Vec<Vec<f64>>,
}

impl BidSet {
    pub fn n_dp(&self) -> usize {
        self.bqc
            .first()
            .or(self.bqs.first())
            .map_or(0, |row| row.len())
    }
}

/// Either side of the market, as seen by the bidding rules.
pub trait Participant {
    /// `qr` for consumers, `qa` for suppliers.
    fn capacity(&self) -> f64;
    fn access_caps(&self) -> &[f64];
    fn transfer_costs(&self) -> &[f64];
}

impl Participant for Consumer {
    fn capacity(&self) -> f64 {
        self.qr
    }
    fn access_caps(&self) -> &[f64] {
        &self.qbar
    }
    fn transfer_costs(&self) -> &[f64] {
        &self.ct
    }
}

impl Participant for Supplier {
    fn capacity(&self) -> f64 {
        self.qa
    }
    fn access_caps(&self) -> &[f64] {
        &self.qbar
    }
    fn transfer_costs(&self) -> &[f64] {
        &self.ct
    }
}

/// Total quantity bid across all DPs: the true quantity under `N`, twice
/// that under `O`, capped by total DP access in both cases.
pub fn total_bid_quantity(p: &impl Participant, strategy: Strategy) -> f64 {
    let factor = match strategy {
        Strategy::N => 1.0,
        Strategy::O => 2.0,
    };
    let access: f64 = p.access_caps().iter().sum();
    (factor * p.capacity()).min(access)
}

/// Per-DP bid caps: a single bid never exceeds the access cap nor the true
/// quantity, whatever the strategy.
pub fn per_dp_caps(p: &impl Participant) -> Vec<f64> {
    p.access_caps()
        .iter()
        .map(|&q| q.min(p.capacity()))
        .collect()
}

/// Minimises `sum(x[t] * ct[t])` subject to `sum(x) == total` and
/// `0 <= x[t] <= caps[t]`.
///
/// The LP has a single equality row over box constraints, so filling DPs in
/// ascending cost order is optimal. Equal costs fill the lower DP index first.
pub fn allocate_bids(ct: &[f64], caps: &[f64], total: f64) -> Result<Vec<f64>> {
    assert_eq!(ct.len(), caps.len(), "cost and cap vectors must align");
    let capacity: f64 = caps.iter().sum();
    if total > capacity + EPS {
        return Err(Error::Infeasible { total, capacity });
    }
    let mut order: Vec<usize> = (0..ct.len()).collect();
    order.sort_by(|&a, &b| ct[a].total_cmp(&ct[b]).then(a.cmp(&b)));

    let mut x = vec![0.0; ct.len()];
    let mut remaining = total.max(0.0);
    for t in order {
        if remaining <= 0.0 {
            break;
        }
        let take = caps[t].min(remaining);
        x[t] = take;
        remaining -= take;
    }
    Ok(x)
}

/// Per-DP bid prices: a baseline covering production plus the worst-case
/// transfer cost, marked up by half the DP's own transfer cost.
pub fn supplier_prices(s: &Supplier) -> Vec<f64> {
    let worst = s.ct.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let baseline = s.cp + if worst.is_finite() { worst } else { 0.0 };
    s.ct.iter().map(|&c| baseline + c / 2.0).collect()
}

fn bid_row(p: &impl Participant, strategy: Strategy) -> Vec<f64> {
    let caps = per_dp_caps(p);
    let cap_sum: f64 = caps.iter().sum();
    let total = total_bid_quantity(p, strategy).min(cap_sum);
    allocate_bids(p.transfer_costs(), &caps, total).expect("total is clamped to the cap sum")
}

/// Builds every participant's bids for one strategy profile.
pub fn build_bids(scenario: &Scenario, profile: &StrategyProfile) -> BidSet {
    assert_eq!(profile.consumers.len(), scenario.n_consumers());
    assert_eq!(profile.suppliers.len(), scenario.n_suppliers());

    let bqc: Vec<Vec<f64>> = scenario
        .consumers
        .iter()
        .zip(&profile.consumers)
        .map(|(c, &s)| bid_row(c, s))
        .collect();
    let bqs: Vec<Vec<f64>> = scenario
        .suppliers
        .iter()
        .zip(&profile.suppliers)
        .map(|(s, &st)| bid_row(s, st))
        .collect();
    let bps = scenario.suppliers.iter().map(supplier_prices).collect();

    let bids = BidSet { bqc, bqs, bps };
    debug_assert!(check_caps(scenario, &bids));
    bids
}

fn check_caps(scenario: &Scenario, bids: &BidSet) -> bool {
    let rows_ok = |rows: &[Vec<f64>], caps: Vec<Vec<f64>>| {
        rows.iter()
            .zip(caps)
            .all(|(row, cap)| row.iter().zip(cap).all(|(&b, c)| b <= c + EPS))
    };
    let price_ok = bids
        .bqs
        .iter()
        .zip(&bids.bps)
        .zip(&scenario.suppliers)
        .all(|((q, p), s)| q.iter().zip(p).all(|(&q, &p)| q <= 0.0 || p >= s.cp));
    rows_ok(&bids.bqc, scenario.consumers.iter().map(per_dp_caps).collect())
        && rows_ok(&bids.bqs, scenario.suppliers.iter().map(per_dp_caps).collect())
        && price_ok
}
