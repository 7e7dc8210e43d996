//! Descriptive tabulation of which collections are exactly the maximum
//! independent sets of a graph. Nothing here is asserted.

use std::collections::BTreeMap;

use serde::Serialize;

use super::generate::collection_sweep;
use super::TrialConfig;
use crate::graph::{omega_bounded, realizable_in_some_omega_bounded};
use crate::sets::is_hke_bruteforce_bounded;
use crate::{Limits, Result, SetCollection};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OmegaClass {
    /// `f = Ω(G_f)`.
    Exact,
    /// `f ⊊ Ω(G_f)`.
    ProperlyContained,
    /// No graph has `f` among its maximum independent sets.
    Unrealizable,
}

/// Classifies `f` against its maximal compatible graph `G_f` on `⋃f`.
pub fn classify_omega(f: &SetCollection, limits: &Limits) -> Result<OmegaClass> {
    let r = realizable_in_some_omega_bounded(f, limits)?;
    if !r.realizable {
        return Ok(OmegaClass::Unrealizable);
    }
    // f ⊆ Ω(G_f) already holds, so comparing sizes decides equality.
    Ok(if omega_bounded(&r.graph, limits)?.len() == f.len() {
        OmegaClass::Exact
    } else {
        OmegaClass::ProperlyContained
    })
}

/// Counts for one `(alpha, size)` cell, split by class and by hke.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ProbeRow {
    pub alpha: usize,
    pub size: usize,
    pub exact: u64,
    pub properly_contained: u64,
    pub unrealizable: u64,
    pub exact_hke: u64,
    pub properly_contained_hke: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub checked: u64,
    pub exactly_omega: u64,
    pub properly_contained: u64,
    pub unrealizable: u64,
    pub rows: Vec<ProbeRow>,
}

/// Runs the classification over the exhaustive collection sweep of `config`.
pub fn probe_omega_characterization(config: &TrialConfig, limits: &Limits) -> Result<ProbeReport> {
    let sweep = TrialConfig {
        exhaustive: true,
        ..config.clone()
    };
    sweep.validate(limits)?;
    let mut cells: BTreeMap<(usize, usize), ProbeRow> = BTreeMap::new();
    let mut report = ProbeReport::default();
    for f in collection_sweep(&sweep)? {
        let alpha = f.members()[0].len();
        let class = classify_omega(&f, limits)?;
        let hke = class != OmegaClass::Unrealizable && is_hke_bruteforce_bounded(&f, limits)?;
        let row = cells.entry((alpha, f.len())).or_insert_with(|| ProbeRow {
            alpha,
            size: f.len(),
            ..ProbeRow::default()
        });
        report.checked += 1;
        match class {
            OmegaClass::Exact => {
                report.exactly_omega += 1;
                row.exact += 1;
                row.exact_hke += hke as u64;
            }
            OmegaClass::ProperlyContained => {
                report.properly_contained += 1;
                row.properly_contained += 1;
                row.properly_contained_hke += hke as u64;
            }
            OmegaClass::Unrealizable => {
                report.unrealizable += 1;
                row.unrealizable += 1;
            }
        }
    }
    report.rows = cells.into_values().collect();
    Ok(report)
}
