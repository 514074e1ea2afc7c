//! Market description: consumers, suppliers, delivery points and strategy profiles.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A buyer with a required quantity, a willingness-to-pay and per-DP access data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Consumer {
    pub id: String,
    /// Quantity required.
    pub qr: f64,
    /// Willingness-to-pay per unit.
    pub u: f64,
    /// Per-DP access caps.
    pub qbar: Vec<f64>,
    /// Per-DP unit transfer costs.
    pub ct: Vec<f64>,
}

/// A seller with an available quantity, a unit production cost and per-DP access data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Supplier {
    pub id: String,
    /// Quantity available.
    pub qa: f64,
    /// Unit production cost.
    pub cp: f64,
    pub qbar: Vec<f64>,
    pub ct: Vec<f64>,
}

/// Immutable market description.
///
/// Consumers are indexed `0..n_c`, suppliers `0..n_s` and delivery points
/// `0..n_dp`; every per-DP vector is positionally aligned with
/// `delivery_points`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub name: String,
    pub delivery_points: Vec<String>,
    pub consumers: Vec<Consumer>,
    pub suppliers: Vec<Supplier>,
}

/// One broken invariant found by [`Scenario::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Dotted path of the offending field, e.g. `consumers[0].qr`.
    pub field: String,
    pub rule: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.field, self.rule)
    }
}

impl Scenario {
    pub fn n_consumers(&self) -> usize {
        self.consumers.len()
    }

    pub fn n_suppliers(&self) -> usize {
        self.suppliers.len()
    }

    pub fn n_dp(&self) -> usize {
        self.delivery_points.len()
    }

    pub fn n_players(&self) -> usize {
        self.consumers.len() + self.suppliers.len()
    }

    /// Player ids, consumers first.
    pub fn player_ids(&self) -> Vec<&str> {
        self.consumers
            .iter()
            .map(|c| c.id.as_str())
            .chain(self.suppliers.iter().map(|s| s.id.as_str()))
            .collect()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario serializes")
    }

    /// Loads a scenario file, or one of the bundled fixtures when `source`
    /// is `builtin:scenario1` or `builtin:scenario2`.
    pub fn load(source: &str) -> Result<Self> {
        if let Some(name) = source.strip_prefix("builtin:") {
            return Self::builtin(name);
        }
        let text = std::fs::read_to_string(source).map_err(|e| Error::Io {
            path: source.to_string(),
            source: e,
        })?;
        Self::from_json(&text)
    }

    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "scenario1" => Self::from_json(SCENARIO1_JSON),
            "scenario2" => Self::from_json(SCENARIO2_JSON),
            other => Err(Error::UnknownBuiltin(other.to_string())),
        }
    }

    /// Checks every type invariant and returns the ones that do not hold.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut push = |field: String, rule: &str| {
            out.push(Violation {
                field,
                rule: rule.to_string(),
            })
        };
        let n_dp = self.n_dp();
        if n_dp == 0 {
            push("delivery_points".into(), "at least one delivery point required");
        }
        if self.consumers.is_empty() {
            push("consumers".into(), "at least one consumer required");
        }
        if self.suppliers.is_empty() {
            push("suppliers".into(), "at least one supplier required");
        }

        for (i, c) in self.consumers.iter().enumerate() {
            let at = |f: &str| format!("consumers[{i}].{f}");
            if !(c.qr > 0.0) {
                push(at("qr"), "must be > 0");
            }
            if !(c.u >= 0.0) {
                push(at("u"), "must be >= 0");
            }
            check_dp_vector(&mut push, &at("qbar"), &c.qbar, n_dp);
            check_dp_vector(&mut push, &at("ct"), &c.ct, n_dp);
        }
        for (j, s) in self.suppliers.iter().enumerate() {
            let at = |f: &str| format!("suppliers[{j}].{f}");
            if !(s.qa > 0.0) {
                push(at("qa"), "must be > 0");
            }
            if !(s.cp >= 0.0) {
                push(at("cp"), "must be >= 0");
            }
            check_dp_vector(&mut push, &at("qbar"), &s.qbar, n_dp);
            check_dp_vector(&mut push, &at("ct"), &s.ct, n_dp);
        }
        out
    }

    /// Returns the scenario if it is valid, otherwise every violation.
    pub fn validated(self) -> Result<Self> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(self)
        } else {
            Err(Error::Invalid(violations))
        }
    }
}

fn check_dp_vector(push: &mut impl FnMut(String, &str), field: &str, v: &[f64], n_dp: usize) {
    if v.len() != n_dp {
        push(
            field.to_string(),
            &format!("length {} does not match {} delivery points", v.len(), n_dp),
        );
    }
    for (t, x) in v.iter().enumerate() {
        if !(*x >= 0.0) {
            push(format!("{field}[{t}]"), "must be >= 0");
        }
    }
}

pub const SCENARIO1_JSON: &str = include_str!("../fixtures/scenario1.json");
pub const SCENARIO2_JSON: &str = include_str!("../fixtures/scenario2.json");

/// Bidding strategy: truthful (`N`) or overbid to twice the true quantity (`O`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Strategy {
    N,
    O,
}

impl Strategy {
    pub fn flip(self) -> Self {
        match self {
            Strategy::N => Strategy::O,
            Strategy::O => Strategy::N,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Strategy::N => 'N',
            Strategy::O => 'O',
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// One strategy per player, consumers first then suppliers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrategyProfile {
    pub consumers: Vec<Strategy>,
    pub suppliers: Vec<Strategy>,
}

impl StrategyProfile {
    pub fn uniform(scenario: &Scenario, s: Strategy) -> Self {
        Self {
            consumers: vec![s; scenario.n_consumers()],
            suppliers: vec![s; scenario.n_suppliers()],
        }
    }

    pub fn n_players(&self) -> usize {
        self.consumers.len() + self.suppliers.len()
    }

    /// Strategy of player `p` in consumers-then-suppliers order.
    pub fn get(&self, p: usize) -> Strategy {
        let n_c = self.consumers.len();
        if p < n_c {
            self.consumers[p]
        } else {
            self.suppliers[p - n_c]
        }
    }

    pub fn set(&mut self, p: usize, s: Strategy) {
        let n_c = self.consumers.len();
        if p < n_c {
            self.consumers[p] = s;
        } else {
            self.suppliers[p - n_c] = s;
        }
    }

    /// Same profile with player `p`'s strategy flipped.
    pub fn deviate(&self, p: usize) -> Self {
        let mut out = self.clone();
        out.set(p, self.get(p).flip());
        out
    }

    /// Parses the canonical text form (e.g. `ONNO`) against a scenario's player counts.
    pub fn parse_for(text: &str, scenario: &Scenario) -> Result<Self> {
        let all: Vec<Strategy> = text.parse::<ProfileText>()?.0;
        if all.len() != scenario.n_players() {
            return Err(Error::Profile(format!(
                "profile `{text}` has {} entries, scenario has {} players",
                all.len(),
                scenario.n_players()
            )));
        }
        let suppliers = all[scenario.n_consumers()..].to_vec();
        let mut consumers = all;
        consumers.truncate(scenario.n_consumers());
        Ok(Self {
            consumers,
            suppliers,
        })
    }

    /// Bit `p` set means player `p` overbids.
    pub fn from_bits(bits: u64, n_c: usize, n_s: usize) -> Self {
        let s = |p: usize| {
            if bits >> p & 1 == 1 {
                Strategy::O
            } else {
                Strategy::N
            }
        };
        Self {
            consumers: (0..n_c).map(s).collect(),
            suppliers: (n_c..n_c + n_s).map(s).collect(),
        }
    }

    pub fn to_bits(&self) -> u64 {
        (0..self.n_players())
            .filter(|&p| self.get(p) == Strategy::O)
            .fold(0, |acc, p| acc | 1 << p)
    }
}

impl fmt::Display for StrategyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.consumers.iter().chain(&self.suppliers) {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

struct ProfileText(Vec<Strategy>);

impl FromStr for ProfileText {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|ch| match ch.to_ascii_uppercase() {
                'N' => Ok(Strategy::N),
                'O' => Ok(Strategy::O),
                _ => Err(Error::Profile(format!(
                    "invalid strategy `{ch}` in `{s}`; expected N or O"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(ProfileText)
    }
}
