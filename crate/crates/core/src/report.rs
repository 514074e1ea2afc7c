//! CSV and markdown rendering of pipeline results.
//!
//! Numbers are rounded to a fixed number of decimals with trailing zeros
//! trimmed, so `210.000` renders as `210` and `532.450` as `532.45`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::alt_mech::{BlockingMatch, StableContractSet};
use crate::game::{EquilibriumReport, Evaluation, SweepTable};
use crate::model::Scenario;
use crate::rapid::RapidOutcome;

pub const DEFAULT_PRECISION: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Format {
    #[default]
    Csv,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReportKind {
    Bids,
    Matches,
    Contracts,
    Utilities,
    Sweep,
    Equilibria,
    Da,
    Rapid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub kind: ReportKind,
    pub format: Format,
    pub body: String,
}

/// Rounds to `precision` decimals and trims trailing zeros.
pub fn fmt_num(x: f64, precision: usize) -> String {
    let s = format!("{x:.precision$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

/// A titled grid of already-formatted cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(title: &str, headers: Vec<String>) -> Self {
        Self {
            title: title.to_string(),
            headers,
            rows: Vec::new(),
        }
    }

    fn csv(&self, out: &mut String) {
        let line = |cells: &[String]| cells.iter().map(|c| csv_cell(c)).collect::<Vec<_>>().join(",");
        out.push_str(&line(&self.headers));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
    }

    fn markdown(&self, out: &mut String) {
        let line = |cells: &[String]| format!("| {} |\n", cells.join(" | "));
        out.push_str(&line(&self.headers));
        out.push_str(&line(&vec!["---".to_string(); self.headers.len()]));
        for row in &self.rows {
            out.push_str(&line(row));
        }
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

/// Renders tables in order. A single CSV table is emitted bare; several are
/// each preceded by a `# title` line and separated by a blank line.
pub fn render(kind: ReportKind, format: Format, tables: &[Table]) -> Report {
    let mut body = String::new();
    for (k, table) in tables.iter().enumerate() {
        if k > 0 {
            body.push('\n');
        }
        match format {
            Format::Csv => {
                if tables.len() > 1 {
                    let _ = writeln!(body, "# {}", table.title);
                }
                table.csv(&mut body);
            }
            Format::Markdown => {
                let _ = writeln!(body, "### {}\n", table.title);
                table.markdown(&mut body);
            }
        }
    }
    Report { kind, format, body }
}

fn strings<I: IntoIterator<Item = S>, S: Into<String>>(it: I) -> Vec<String> {
    it.into_iter().map(Into::into).collect()
}

fn dp_headers(scenario: &Scenario, lead: &[&str]) -> Vec<String> {
    strings(lead.iter().copied().chain(scenario.delivery_points.iter().map(String::as_str)))
}

pub fn bids_table(scenario: &Scenario, eval: &Evaluation, prec: usize) -> Table {
    let mut t = Table::new("bids", dp_headers(scenario, &["participant", "kind"]));
    let row = |id: &str, kind: &str, v: &[f64]| {
        strings([id.to_string(), kind.to_string()].into_iter().chain(v.iter().map(|&x| fmt_num(x, prec))))
    };
    for (c, v) in scenario.consumers.iter().zip(&eval.bids.bqc) {
        t.rows.push(row(&c.id, "demand", v));
    }
    for (s, v) in scenario.suppliers.iter().zip(&eval.bids.bqs) {
        t.rows.push(row(&s.id, "supply", v));
    }
    for (s, v) in scenario.suppliers.iter().zip(&eval.bids.bps) {
        t.rows.push(row(&s.id, "price", v));
    }
    t
}

pub fn dp_totals_table(scenario: &Scenario, eval: &Evaluation, prec: usize) -> Table {
    let ms = &eval.matches;
    let mut t = Table::new("dp_totals", strings(["dp", "demand", "supply", "matched", "bidders"]));
    for (k, dp) in scenario.delivery_points.iter().enumerate() {
        t.rows.push(vec![
            dp.clone(),
            fmt_num(ms.dp_demand[k], prec),
            fmt_num(ms.dp_supply[k], prec),
            fmt_num(ms.dp_demand[k].min(ms.dp_supply[k]), prec),
            ms.bidders_per_dp[k].to_string(),
        ]);
    }
    t
}

pub fn matches_table(scenario: &Scenario, eval: &Evaluation, prec: usize) -> Table {
    let mut t = Table::new("matches", strings(["consumer", "supplier", "dp", "quantity", "price"]));
    for m in &eval.matches.matches {
        t.rows.push(vec![
            scenario.consumers[m.consumer].id.clone(),
            scenario.suppliers[m.supplier].id.clone(),
            scenario.delivery_points[m.dp].clone(),
            fmt_num(m.quantity, prec),
            fmt_num(m.price, prec),
        ]);
    }
    t
}

pub fn contracts_table(scenario: &Scenario, eval: &Evaluation, prec: usize) -> Table {
    let mut t = Table::new(
        "contracts",
        strings([
            "consumer",
            "supplier",
            "dp",
            "price",
            "q_mo",
            "kept_by_consumer",
            "kept_by_supplier",
            "q_mu",
        ]),
    );
    for k in &eval.contracts {
        let m = &k.matched;
        t.rows.push(vec![
            scenario.consumers[m.consumer].id.clone(),
            scenario.suppliers[m.supplier].id.clone(),
            scenario.delivery_points[m.dp].clone(),
            fmt_num(m.price, prec),
            fmt_num(k.q_mo, prec),
            fmt_num(k.kept_by_consumer, prec),
            fmt_num(k.kept_by_supplier, prec),
            fmt_num(k.q_mu, prec),
        ]);
    }
    t
}

fn outcome_headers(ids: &[String], lead: &str) -> Vec<String> {
    let mut h = vec![lead.to_string()];
    h.extend(ids.iter().map(|id| format!("U_{id}")));
    h.extend(strings(["TMQ", "TCQ", "TU"]));
    h
}

fn outcome_cells(o: &crate::contracting::Outcome, prec: usize) -> Vec<String> {
    o.utilities()
        .chain([o.tmq, o.tcq, o.tu])
        .map(|x| fmt_num(x, prec))
        .collect()
}

pub fn utilities_table(scenario: &Scenario, profile: &str, eval: &Evaluation, prec: usize) -> Table {
    let ids: Vec<String> = scenario.player_ids().into_iter().map(String::from).collect();
    let mut t = Table::new("utilities", outcome_headers(&ids, "profile"));
    let mut row = vec![profile.to_string()];
    row.extend(outcome_cells(&eval.outcome, prec));
    t.rows.push(row);
    t
}

pub fn sweep_table(table: &SweepTable, prec: usize) -> Table {
    let mut t = Table::new("sweep", outcome_headers(&table.player_ids, "profile"));
    for (p, o) in &table.rows {
        let mut row = vec![p.to_string()];
        row.extend(outcome_cells(o, prec));
        t.rows.push(row);
    }
    t
}

pub fn equilibria_tables(table: &SweepTable, report: &EquilibriumReport, prec: usize) -> Vec<Table> {
    let mut nash = Table::new("nash_equilibria", outcome_headers(&table.player_ids, "profile"));
    for p in &report.nash {
        let o = table.outcome(p).expect("equilibrium comes from the table");
        let mut row = vec![p.to_string()];
        row.extend(outcome_cells(o, prec));
        nash.rows.push(row);
    }
    let mut dom = Table::new("dominance", strings(["player", "dominance"]));
    for (id, d) in table.player_ids.iter().zip(&report.dominance) {
        dom.rows.push(vec![id.clone(), d.to_string()]);
    }
    let mut dev = Table::new(
        "improving_deviations",
        strings(["profile", "player", "to", "utility_before", "utility_after"]),
    );
    for d in &report.improving {
        dev.rows.push(vec![
            d.profile.to_string(),
            table.player_ids[d.player].clone(),
            d.profile.deviate(d.player).to_string(),
            fmt_num(d.utility_before, prec),
            fmt_num(d.utility_after, prec),
        ]);
    }
    vec![nash, dom, dev]
}

pub fn da_tables(
    scenario: &Scenario,
    da: &StableContractSet,
    blocking: &[BlockingMatch],
    matched: &crate::matching::MatchSet,
    prec: usize,
) -> Vec<Table> {
    let mut summary = Table::new("summary", strings(["proposer", "rounds", "TMQ", "TCQ", "blocking"]));
    summary.rows.push(vec![
        format!("{:?}", da.proposer_side).to_lowercase(),
        da.rounds.to_string(),
        fmt_num(matched.tmq, prec),
        fmt_num(da.tcq(), prec),
        blocking.len().to_string(),
    ]);
    let mut contracts = Table::new(
        "contracts",
        strings(["consumer", "supplier", "dp", "price", "q_mo", "quantity"]),
    );
    for c in &da.contracts {
        let m = &c.matched;
        contracts.rows.push(vec![
            scenario.consumers[m.consumer].id.clone(),
            scenario.suppliers[m.supplier].id.clone(),
            scenario.delivery_points[m.dp].clone(),
            fmt_num(m.price, prec),
            fmt_num(m.quantity, prec),
            fmt_num(c.quantity, prec),
        ]);
    }
    vec![summary, contracts]
}

pub fn rapid_table(out: &RapidOutcome) -> Table {
    let mut t = Table::new("rapid", strings(["stage", "proposer", "responder"]));
    for (stage, list) in [("offer", &out.offers), ("match", &out.matches), ("date", &out.dates)] {
        for (p, r) in list {
            t.rows.push(vec![stage.to_string(), p.clone(), r.clone()]);
        }
    }
    t
}
