//! Structured analysis reports for collections and graphs.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::graph::{
    alpha_graph_bounded, induced_subgraph, is_ke_graph_bounded, ke_certificate_search_bounded,
    mu_bounded, omega_bounded,
};
use crate::sets::{
    alpha, compute_m, e_value, is_hke_via_duality_bounded, is_ke, signed_partition_law_bounded,
    HkeMethod,
};
use crate::{Error, FiniteSet, Graph, Limits, Result, SetCollection};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportKind {
    Collection,
    Graph,
}

/// A non-fatal condition: an analysis that was skipped because its
/// hypothesis does not hold for this input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Warning {
    pub code: String,
    pub message: String,
}

impl From<&Error> for Warning {
    fn from(e: &Error) -> Self {
        Warning {
            code: e.code().to_owned(),
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    /// SHA-256 of the raw input bytes, hex encoded.
    pub input_digest: String,
    pub kind: ReportKind,
    pub verdicts: BTreeMap<String, Value>,
    pub warnings: Vec<Warning>,
}

impl AnalysisReport {
    pub fn new(kind: ReportKind, input: &[u8]) -> Self {
        let digest = Sha256::digest(input);
        AnalysisReport {
            input_digest: digest.iter().map(|b| format!("{b:02x}")).collect(),
            kind,
            verdicts: BTreeMap::new(),
            warnings: Vec::new(),
        }
    }

    fn set(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("report values serialise");
        self.verdicts.insert(key.to_owned(), v);
    }

    fn warn(&mut self, e: &Error) {
        self.warnings.push(e.into());
    }
}

/// Which hke routes to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    One(HkeMethod),
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CollectionOptions {
    pub method: MethodChoice,
    pub signed: bool,
}

impl Default for CollectionOptions {
    fn default() -> Self {
        CollectionOptions {
            method: MethodChoice::One(HkeMethod::Brute),
            signed: false,
        }
    }
}

/// Errors that only mean "this verdict does not apply" become warnings;
/// everything else aborts the analysis.
fn soft(e: &Error) -> bool {
    matches!(
        e,
        Error::NotRelevant { .. }
            | Error::HypothesisFails { .. }
            | Error::CollectionTooSmall { .. }
            | Error::PreconditionFails(_)
    )
}

pub fn analyze_collection(
    c: &SetCollection,
    input: &[u8],
    opts: &CollectionOptions,
    limits: &Limits,
) -> Result<AnalysisReport> {
    let mut r = AnalysisReport::new(ReportKind::Collection, input);
    r.set("size", c.len());
    r.set("e", e_value(c)?);
    match alpha(c) {
        Ok(a) => r.set("alpha", a),
        Err(e) => {
            // KE and hke are only defined for relevant collections.
            r.warn(&e);
            return Ok(r);
        }
    }
    r.set("is_ke", is_ke(c)?);
    match opts.method {
        MethodChoice::One(HkeMethod::Duality) | MethodChoice::All => {
            let verdict = is_hke_via_duality_bounded(c, limits)?;
            r.set("is_hke", verdict.hke);
            if let Some(w) = verdict.witness {
                r.set("witness", w);
            }
        }
        MethodChoice::One(m) => r.set("is_hke", m.is_hke(c, limits)?),
    }
    if opts.method == MethodChoice::All {
        let mut by = BTreeMap::new();
        for m in HkeMethod::ALL {
            by.insert(m.name(), m.is_hke(c, limits)?);
        }
        if by.values().any(|&v| v != by["brute"]) {
            r.warnings.push(Warning {
                code: "MethodDisagreement".into(),
                message: format!("hke methods disagree: {by:?}"),
            });
        }
        r.set("is_hke_by_method", by);
    }
    match compute_m(c) {
        Ok(m) => r.set("m_result", m),
        Err(e) if soft(&e) => r.warn(&e),
        Err(e) => return Err(e),
    }
    if opts.signed {
        match signed_partition_law_bounded(c, limits) {
            Ok(table) => r.set("signed_law", table),
            Err(e) if soft(&e) => r.warn(&e),
            Err(e) => return Err(e),
        }
    }
    Ok(r)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GraphOptions {
    pub omega: bool,
    pub certificate: bool,
    pub induce: Option<FiniteSet>,
}

fn graph_basics(g: &Graph, limits: &Limits) -> Result<Value> {
    let mm = mu_bounded(g, limits)?;
    Ok(json!({
        "n": g.vertex_count(),
        "edge_count": g.edge_count(),
        "alpha": alpha_graph_bounded(g, limits)?,
        "mu": mm.size,
        "matching": mm.matching,
        "ke_graph": is_ke_graph_bounded(g, limits)?,
    }))
}

pub fn analyze_graph(
    g: &Graph,
    input: &[u8],
    opts: &GraphOptions,
    limits: &Limits,
) -> Result<AnalysisReport> {
    let mut r = AnalysisReport::new(ReportKind::Graph, input);
    if let Value::Object(basics) = graph_basics(g, limits)? {
        for (k, v) in basics {
            r.verdicts.insert(k, v);
        }
    }
    if opts.omega {
        r.set("omega", omega_bounded(g, limits)?);
    }
    if opts.certificate {
        let cert = ke_certificate_search_bounded(g, limits)?;
        r.set("certificate", cert);
    }
    if let Some(s) = &opts.induce {
        let sub = induced_subgraph(g, s)?;
        let mut v = graph_basics(&sub.graph, limits)?;
        let lifted: Vec<(u32, u32)> = mu_bounded(&sub.graph, limits)?
            .matching
            .edges()
            .iter()
            .map(|&(a, b)| (sub.original(a), sub.original(b)))
            .collect();
        let isolated: Vec<u32> = (1..=sub.graph.vertex_count() as u32)
            .filter(|&v| sub.graph.degree(v) == 0)
            .map(|v| sub.original(v))
            .collect();
        v["vertices"] = json!(s);
        v["matching"] = json!({ "edges": lifted });
        v["isolated"] = json!(isolated);
        r.set("induced", v);
    }
    Ok(r)
}
