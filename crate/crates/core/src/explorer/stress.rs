//! Runs each theorem as a universally quantified property over generated
//! instances and records every counterexample.

use std::time::{Duration, Instant};

use itertools::Itertools;
use serde::Serialize;
use serde_json::{json, Value};

use super::generate::{all_graphs, collection_sweep, random_collection, random_graph};
use super::{TheoremId, TrialConfig};
use crate::graph::{
    is_independent, is_ke_graph_bounded, ke_certificate_search_bounded, monotonicity_check_bounded,
    nonnegative_m_check_bounded, omega_bounded, realizable_in_some_omega_bounded,
};
use crate::sets::{
    all_single_removals_hke, compute_m, e_value, is_hke_bruteforce_bounded,
    is_hke_via_duality_bounded, is_hke_via_existential_bounded, is_ke, removal_defect,
    signed_partition_law_bounded, triangle_hke_check,
};
use crate::{Error, FiniteSet, Graph, Limits, Result, SetCollection};

/// Largest `Γ′` tried against each `Γ` by the monotonicity suite.
const MONOTONE_PRIME_MAX: usize = 2;

/// One failed assertion, with enough of the instance to replay it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub index: u64,
    pub instance: Value,
    pub assertion: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct StressReport {
    pub theorem_id: TheoremId,
    pub config: TrialConfig,
    pub instances_checked: u64,
    pub violations: Vec<Violation>,
    /// Wall-clock time; kept out of the serialised report so that runs with
    /// identical configuration produce identical bytes.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl StressReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// One JSON object per violation, then a summary object, each on its own line.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for v in &self.violations {
            let line = json!({
                "kind": "violation",
                "theorem_id": self.theorem_id,
                "index": v.index,
                "instance": v.instance,
                "assertion": v.assertion,
            });
            out.push_str(&line.to_string());
            out.push('\n');
        }
        let summary = json!({
            "kind": "summary",
            "theorem_id": self.theorem_id,
            "config": self.config,
            "instances_checked": self.instances_checked,
            "violation_count": self.violations.len(),
            "passed": self.passed(),
        });
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }
}

enum Outcome {
    Skipped,
    Passed,
    Failed(String),
}

fn fail(msg: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome::Failed(msg.into()))
}

/// Theorem-level failures surface as [`Error::Violation`]; record those
/// instead of aborting the run.
fn absorb(r: Result<Outcome>) -> Result<Outcome> {
    match r {
        Err(Error::Violation(msg)) => Ok(Outcome::Failed(msg)),
        other => other,
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    violations: Vec<Violation>,
}

impl Tally {
    fn record(&mut self, index: u64, instance: impl FnOnce() -> Value, outcome: Outcome) {
        match outcome {
            Outcome::Skipped => {}
            Outcome::Passed => self.checked += 1,
            Outcome::Failed(assertion) => {
                self.checked += 1;
                self.violations.push(Violation {
                    index,
                    instance: instance(),
                    assertion,
                });
            }
        }
    }
}

pub fn stress(theorem: TheoremId, config: &TrialConfig) -> Result<StressReport> {
    stress_bounded(theorem, config, &Limits::default())
}

pub fn stress_bounded(
    theorem: TheoremId,
    config: &TrialConfig,
    limits: &Limits,
) -> Result<StressReport> {
    config.validate(limits)?;
    let start = Instant::now();
    let mut tally = Tally::default();
    if theorem.on_graphs() {
        let graphs: Box<dyn Iterator<Item = Graph>> = if config.exhaustive {
            let per_n = (config.graph_n_min..=config.graph_n_max)
                .map(all_graphs)
                .collect::<Result<Vec<_>>>()?;
            Box::new(per_n.into_iter().flatten())
        } else {
            Box::new((0..config.trials as u64).map(|i| random_graph(config, i)))
        };
        for (index, g) in graphs.enumerate() {
            check_graph(theorem, &g, index as u64, config, limits, &mut tally)?;
        }
    } else {
        let collections: Box<dyn Iterator<Item = SetCollection>> = if config.exhaustive {
            Box::new(collection_sweep(config)?)
        } else {
            Box::new((0..config.trials as u64).map(|i| random_collection(config, i)))
        };
        for (index, c) in collections.enumerate() {
            let outcome = absorb(check_collection(theorem, &c, limits))?;
            tally.record(index as u64, || json!({ "collection": c }), outcome);
        }
    }
    Ok(StressReport {
        theorem_id: theorem,
        config: config.clone(),
        instances_checked: tally.checked,
        violations: tally.violations,
        elapsed: start.elapsed(),
    })
}

/// Whether `c` satisfies the hypotheses of a collection theorem.
pub(crate) fn qualifies(theorem: TheoremId, c: &SetCollection, limits: &Limits) -> Result<bool> {
    Ok(match theorem {
        TheoremId::Broken => {
            c.len() >= 2 && !matches!(compute_m(c), Err(Error::HypothesisFails { .. }))
        }
        TheoremId::Signed => c.len() >= 2 && all_single_removals_hke(c, limits)?,
        TheoremId::Even => {
            c.len() >= 2 && c.len().is_multiple_of(2) && all_single_removals_hke(c, limits)?
        }
        TheoremId::Triangle => c.len() == 3,
        TheoremId::Duality | TheoremId::Existential | TheoremId::Hke63 => true,
        TheoremId::Monotone | TheoremId::NonnegM | TheoremId::Dam26 => false,
    })
}

fn check_collection(theorem: TheoremId, c: &SetCollection, limits: &Limits) -> Result<Outcome> {
    if !qualifies(theorem, c, limits)? {
        return Ok(Outcome::Skipped);
    }
    let brute = || is_hke_bruteforce_bounded(c, limits);
    match theorem {
        TheoremId::Broken => check_broken(c),
        TheoremId::Signed => {
            let report = signed_partition_law_bounded(c, limits)?;
            match report.rows.iter().find(|r| !r.pass) {
                Some(r) => fail(format!(
                    "defect of {} | {} is {}, predicted {}",
                    r.bipartition.part1(),
                    r.bipartition.part2(),
                    r.defect,
                    r.predicted
                )),
                None => Ok(Outcome::Passed),
            }
        }
        TheoremId::Even => match brute()? {
            true => Ok(Outcome::Passed),
            false => fail("even-size collection with hke single removals is not hke"),
        },
        TheoremId::Duality => {
            let (b, d) = (brute()?, is_hke_via_duality_bounded(c, limits)?);
            if b != d.hke {
                return fail(format!("brute force says {b}, duality says {}", d.hke));
            }
            if d.witness.as_ref().is_some_and(|w| w.defect == 0) {
                return fail("duality witness has zero defect");
            }
            Ok(Outcome::Passed)
        }
        TheoremId::Existential => {
            let (b, e) = (brute()?, is_hke_via_existential_bounded(c, limits)?);
            if b != e {
                return fail(format!("brute force says {b}, existential says {e}"));
            }
            Ok(Outcome::Passed)
        }
        TheoremId::Triangle => {
            let b = brute()?;
            let m = c.members();
            // the formula singles out one set; every choice must agree
            for (x, y, z) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
                let t = triangle_hke_check(&m[x], &m[y], &m[z])?;
                if t != b {
                    return fail(format!(
                        "triangle formula with A = {} says {t}, brute force says {b}",
                        m[x]
                    ));
                }
            }
            Ok(Outcome::Passed)
        }
        TheoremId::Hke63 => {
            let b = brute()?;
            let ke = is_ke(c)?;
            let realizable = realizable_in_some_omega_bounded(c, limits)?.realizable;
            if b != (ke && realizable) {
                return fail(format!(
                    "brute force says {b}, KE = {ke}, realizable = {realizable}"
                ));
            }
            Ok(Outcome::Passed)
        }
        TheoremId::Monotone | TheoremId::NonnegM | TheoremId::Dam26 => unreachable!(),
    }
}

fn check_broken(c: &SetCollection) -> Result<Outcome> {
    let r = compute_m(c)?;
    let e = e_value(c)?;
    let mut removal_ke = Vec::with_capacity(c.len());
    for s in c {
        let rest = c.without(s)?;
        let direct = removal_defect(c, s)?;
        let via_e = e as i64 - e_value(&rest)? as i64;
        if direct != via_e {
            return fail(format!(
                "removal defect of {s} is {direct} but e(c) - e(c - s) is {via_e}"
            ));
        }
        removal_ke.push(is_ke(&rest)?);
    }
    let some = removal_ke.iter().any(|&k| k);
    let every = removal_ke.iter().all(|&k| k);
    if some && !every {
        return fail("some but not every single removal is KE");
    }
    if every && (r.m == 0) != is_ke(c)? {
        return fail(format!("m = {} but is_ke = {}", r.m, is_ke(c)?));
    }
    Ok(Outcome::Passed)
}

fn check_graph(
    theorem: TheoremId,
    g: &Graph,
    index: u64,
    config: &TrialConfig,
    limits: &Limits,
    tally: &mut Tally,
) -> Result<()> {
    match theorem {
        TheoremId::Dam26 => {
            let ke = is_ke_graph_bounded(g, limits)?;
            let cert = ke_certificate_search_bounded(g, limits)?;
            let outcome = match &cert {
                Some(cert) if !cert.verify(g, limits)? => Outcome::Failed(format!(
                    "certificate {} fails verification",
                    cert.collection
                )),
                _ if ke != cert.is_some() => Outcome::Failed(format!(
                    "is_ke_graph = {ke}, certificate found = {}",
                    cert.is_some()
                )),
                _ => Outcome::Passed,
            };
            tally.record(index, || json!({ "graph": g }), outcome);
        }
        TheoremId::NonnegM => {
            let omega = omega_bounded(g, limits)?;
            let max = config.collection_size_max.min(omega.len());
            for size in 2..=max {
                for members in omega.members().iter().cloned().combinations(size) {
                    let c = SetCollection::from_sorted(members);
                    if !all_single_removals_hke(&c, limits)? {
                        continue;
                    }
                    let outcome = absorb(match nonnegative_m_check_bounded(g, &c, limits) {
                        Ok(_) => Ok(Outcome::Passed),
                        Err(Error::HypothesisFails { values }) => fail(format!(
                            "single-removal e-values differ ({values:?}) although all removals are hke"
                        )),
                        Err(e) => Err(e),
                    })?;
                    tally.record(index, || json!({ "graph": g, "collection": c }), outcome);
                }
            }
        }
        TheoremId::Monotone => {
            let omega = omega_bounded(g, limits)?;
            let mut independent: Vec<FiniteSet> = (1u64..1 << g.vertex_count())
                .map(Graph::set_of)
                .filter(|s| is_independent(g, s).unwrap_or(false))
                .collect();
            independent.sort();
            let max = config.collection_size_max.min(omega.len());
            for size in 1..=max {
                for members in omega.members().iter().cloned().combinations(size) {
                    let c = SetCollection::from_sorted(members);
                    let union = c.union_all();
                    let inter = c.intersection_all().expect("non-empty");
                    // Γ′ ◁ Γ exactly when every member of Γ′ lies between ⋂Γ and ⋃Γ.
                    let between: Vec<&FiniteSet> = independent
                        .iter()
                        .filter(|s| inter.is_subset(s) && s.is_subset(&union))
                        .collect();
                    for k in 1..=MONOTONE_PRIME_MAX {
                        for prime in between.iter().copied().cloned().combinations(k) {
                            let c_prime = SetCollection::from_sorted(prime);
                            let outcome = match monotonicity_check_bounded(g, &c, &c_prime, limits)?
                            {
                                true => Outcome::Passed,
                                false => Outcome::Failed(format!(
                                    "e(Γ′) = {} exceeds e(Γ) = {}",
                                    e_value(&c_prime)?,
                                    e_value(&c)?
                                )),
                            };
                            tally.record(
                                index,
                                || json!({ "graph": g, "collection": c, "c_prime": c_prime }),
                                outcome,
                            );
                        }
                    }
                }
            }
        }
        _ => unreachable!("collection theorem routed to graph checker"),
    }
    Ok(())
}
