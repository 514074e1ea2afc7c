//! One-round "rapid matching" on a two-sided market with incomplete
//! preference lists: one offer round, one acceptance round, then a
//! simultaneous drop down to each participant's date capacity.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Agent {
    pub id: String,
    /// Acceptable partners, most preferred first. Unlisted ids are unacceptable.
    pub prefs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreferenceScenario {
    pub proposers: Vec<Agent>,
    pub responders: Vec<Agent>,
    /// Offers per proposer (and acceptances per responder) when overbidding.
    #[serde(default = "default_k")]
    pub k: usize,
    /// Dates each participant can keep.
    #[serde(default = "default_capacity")]
    pub capacity: usize,
}

fn default_k() -> usize {
    2
}

fn default_capacity() -> usize {
    1
}

pub const EXAMPLE1_JSON: &str = include_str!("../fixtures/rapid1.json");
pub const EXAMPLE2_JSON: &str = include_str!("../fixtures/rapid2.json");

impl PreferenceScenario {
    pub fn from_json(text: &str) -> Result<Self> {
        let sc: Self = serde_json::from_str(text)?;
        sc.check()?;
        Ok(sc)
    }

    /// Bundled example `1` or `2`.
    pub fn example(n: u8) -> Result<Self> {
        match n {
            1 => Self::from_json(EXAMPLE1_JSON),
            2 => Self::from_json(EXAMPLE2_JSON),
            _ => Err(Error::UnknownBuiltin(format!("rapid example {n}"))),
        }
    }

    pub fn check(&self) -> Result<()> {
        let ids = |side: &[Agent]| side.iter().map(|a| a.id.clone()).collect::<Vec<_>>();
        let (p_ids, r_ids) = (ids(&self.proposers), ids(&self.responders));
        for (side, opposite) in [(&self.proposers, &r_ids), (&self.responders, &p_ids)] {
            for a in side.iter() {
                for (n, pref) in a.prefs.iter().enumerate() {
                    if !opposite.contains(pref) {
                        return Err(Error::Preferences(format!(
                            "{} lists `{pref}`, which is not on the opposite side",
                            a.id
                        )));
                    }
                    if a.prefs[..n].contains(pref) {
                        return Err(Error::Preferences(format!("{} lists `{pref}` twice", a.id)));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RapidOutcome {
    /// `(proposer, responder)` offers made.
    pub offers: Vec<(String, String)>,
    /// Accepted offers.
    pub matches: Vec<(String, String)>,
    /// Matches kept by both parties after the drop.
    pub dates: Vec<(String, String)>,
}

fn rank(agent: &Agent, id: &str) -> Option<usize> {
    agent.prefs.iter().position(|p| p == id)
}

/// Top `n` of `pairs` by `agent`'s ranking of the partner in slot 1 (or 0).
fn best<'a>(agent: &Agent, pairs: &[(&'a str, &'a str)], partner_second: bool, n: usize) -> Vec<(&'a str, &'a str)> {
    let mut ranked: Vec<(usize, (&str, &str))> = pairs
        .iter()
        .filter_map(|&pair| {
            let partner = if partner_second { pair.1 } else { pair.0 };
            rank(agent, partner).map(|r| (r, pair))
        })
        .collect();
    ranked.sort_by_key(|(r, _)| *r);
    ranked.into_iter().take(n).map(|(_, pair)| pair).collect()
}

/// Matches each agent on one side keeps after dropping to `cap`.
fn kept<'a>(side: &[Agent], matches: &[(&'a str, &'a str)], cap: usize, proposers: bool) -> Vec<(&'a str, &'a str)> {
    side.iter()
        .flat_map(|a| {
            let own: Vec<(&str, &str)> = matches
                .iter()
                .filter(|m| if proposers { m.0 == a.id } else { m.1 == a.id })
                .copied()
                .collect();
            best(a, &own, proposers, cap)
        })
        .collect()
}

pub fn run_rapid(scenario: &PreferenceScenario, overbid: bool) -> RapidOutcome {
    let k = if overbid { scenario.k } else { 1 };

    let offers: Vec<(&str, &str)> = scenario
        .proposers
        .iter()
        .flat_map(|p| p.prefs.iter().take(k).map(move |r| (p.id.as_str(), r.as_str())))
        .collect();

    let mut matches = Vec::new();
    for r in &scenario.responders {
        let received: Vec<(&str, &str)> = offers.iter().filter(|o| o.1 == r.id).copied().collect();
        matches.extend(best(r, &received, false, k));
    }
    // Deterministic order: by proposer, then responder, as listed.
    let pos = |side: &[Agent], id: &str| side.iter().position(|a| a.id == id);
    matches.sort_by_key(|(p, r)| (pos(&scenario.proposers, p), pos(&scenario.responders, r)));

    let kept_p = kept(&scenario.proposers, &matches, scenario.capacity, true);
    let kept_r = kept(&scenario.responders, &matches, scenario.capacity, false);
    let dates: Vec<(&str, &str)> = matches
        .iter()
        .filter(|m| kept_p.contains(m) && kept_r.contains(m))
        .copied()
        .collect();

    let own = |v: &[(&str, &str)]| v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    RapidOutcome {
        offers: own(&offers),
        matches: own(&matches),
        dates: own(&dates),
    }
}
