//! Mechanical checks of the classification, uniqueness and comatching
//! claims, each producing a [`VerificationReport`].
//!
//! Reports serialize to one JSON object per line. Apart from `elapsed_ms`
//! every field is a deterministic function of the selector and the cap.

mod classification;
mod exceptions;
mod partners;
mod tables;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

pub use classification::verify_classification;
pub use exceptions::{verify_theorem_exceptions, ExceptionFamily};
pub use partners::{find_comatching_partners, find_comatching_partners_batch, is_matching_unique};
pub use tables::{verify_appendix, verify_tables, TABLE_PAIRS};

use crate::error::{Error, Result};
use crate::families::{describe, parse_graph_input};
use crate::graph::Graph;
use crate::matching::matching_polynomial;

pub const DEFAULT_CAP: usize = 9;

/// States how uniqueness searches reduce to a finite enumeration.
pub const REDUCTION_NOTE: &str = "a comatching partner has the order (degree of mu) and edge count (m(G,1)) of \
     the target, so all graphs with that order and edge count are searched, prefiltered by m(G,2)";

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Confirmed,
    Counterexample,
    PartiallyChecked,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Witness {
    pub graph6: String,
    pub mu: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl Witness {
    /// A witness labeled with the component description of `g`.
    pub fn of(g: &Graph) -> Witness {
        Witness::labeled(g, describe(g))
    }

    pub fn labeled(g: &Graph, label: impl Into<String>) -> Witness {
        Witness {
            graph6: g.to_graph6().expect("verification graphs are within graph6 range"),
            mu: matching_polynomial(g).to_string(),
            label: Some(label.into()),
        }
    }
}

/// Invariant: a counterexample carries at least one witness.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub scope: String,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    /// Wall-clock time; `None` in reports meant for byte comparison.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    fn new(claim: impl Into<String>, scope: impl Into<String>) -> VerificationReport {
        VerificationReport {
            claim: claim.into(),
            scope: scope.into(),
            status: Status::Confirmed,
            witnesses: Vec::new(),
            notes: Vec::new(),
            elapsed_ms: None,
        }
    }

    fn fail(&mut self, witnesses: impl IntoIterator<Item = Witness>) {
        self.status = Status::Counterexample;
        self.witnesses.extend(witnesses);
        debug_assert!(!self.witnesses.is_empty());
    }

    pub fn is_counterexample(&self) -> bool {
        self.status == Status::Counterexample
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    /// The report without timing, for byte-level comparisons.
    pub fn without_timing(&self) -> VerificationReport {
        VerificationReport { elapsed_ms: None, ..self.clone() }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Confirmed => "confirmed",
            Status::Counterexample => "COUNTEREXAMPLE",
            Status::PartiallyChecked => "partially checked",
        };
        write!(f, "{}: {status} [{}]", self.claim, self.scope)?;
        match self.elapsed_ms {
            Some(ms) => writeln!(f, " ({ms} ms)")?,
            None => writeln!(f)?,
        }
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        for w in &self.witnesses {
            writeln!(f, "  {}  {}  {}", w.graph6, w.mu, w.label.as_deref().unwrap_or(""))?;
        }
        Ok(())
    }
}

fn timed(run: impl FnOnce() -> Result<VerificationReport>) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = run()?;
    report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Selector {
    Classification,
    Tables,
    Appendix,
    Exceptions(ExceptionFamily),
    Comatching(String),
    All,
}

impl FromStr for Selector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Selector> {
        let unknown = || Error::UnknownSelector(s.to_string());
        Ok(match s {
            "classification" => Selector::Classification,
            "tables" => Selector::Tables,
            "appendix" => Selector::Appendix,
            "all" => Selector::All,
            _ => match s.split_once(':') {
                Some(("exceptions", id)) => Selector::Exceptions(id.parse().map_err(|_| unknown())?),
                Some(("comatching", input)) if !input.trim().is_empty() => {
                    Selector::Comatching(input.trim().to_string())
                }
                _ => return Err(unknown()),
            },
        })
    }
}

/// A comatching report for one input graph.
pub fn verify_comatching(input: &str, n_cap: usize) -> Result<VerificationReport> {
    let g = parse_graph_input(input)?;
    timed(|| {
        let mut report = VerificationReport::new(
            format!("comatching:{input}"),
            format!("all graphs on {} vertices with {} edges", g.order(), g.edge_count()),
        );
        report.notes.push(REDUCTION_NOTE.to_string());
        let partners = find_comatching_partners(&g, n_cap)?;
        report.notes.push(format!("{input} has {} comatching partner(s)", partners.len()));
        report.witnesses.extend(partners.iter().map(Witness::of));
        Ok(report)
    })
}

/// Runs the checks named by `selector`, in a fixed order.
pub fn run_selector(selector: &Selector, n_cap: usize) -> Result<Vec<VerificationReport>> {
    Ok(match selector {
        Selector::Classification => vec![verify_classification(n_cap)?],
        Selector::Tables => vec![verify_tables()?],
        Selector::Appendix => vec![verify_appendix()?],
        Selector::Exceptions(family) => vec![verify_theorem_exceptions(*family, n_cap)?],
        Selector::Comatching(input) => vec![verify_comatching(input, n_cap)?],
        Selector::All => {
            let mut out = vec![verify_appendix()?, verify_tables()?, verify_classification(n_cap)?];
            for family in ExceptionFamily::ALL {
                out.push(verify_theorem_exceptions(family, n_cap)?);
            }
            out
        }
    })
}
