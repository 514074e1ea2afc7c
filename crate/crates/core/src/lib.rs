//! Simulation of a non-binding, pro-rata joint-purchasing platform and of
//! the overbidding game its participants play.
//!
//! The pipeline is `bidding` -> `matching` -> `contracting`; `game` sweeps
//! strategy profiles through it and finds equilibria, `alt_mech` holds the
//! restricted and stable-matching alternatives, and `rapid` the one-round
//! preference-list market.

pub mod alt_mech;
pub mod bidding;
pub mod contracting;
pub mod error;
pub mod game;
pub mod matching;
pub mod model;
pub mod rapid;
pub mod report;

pub use error::{Error, Result};
pub use model::{Consumer, Scenario, Strategy, StrategyProfile, Supplier, Violation};
