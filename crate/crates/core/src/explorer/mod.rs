//! Seeded generators and the theorem stress harness.

mod generate;
mod probe;
mod stress;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Limits, Result};

pub use generate::{
    all_graphs, collection_sweep, enumerate_relevant_collections, random_collection, random_graph,
    MAX_ENUM_GRAPH_N, MAX_ENUM_SIZE, MAX_ENUM_UNIVERSE,
};
pub use probe::{classify_omega, probe_omega_characterization, OmegaClass, ProbeReport, ProbeRow};
pub use stress::{stress, stress_bounded, StressReport, Violation};

/// Parameters shared by the stress suites and the probe.
///
/// With `exhaustive` set, collection suites sweep every relevant collection
/// over `{1..universe_max}` with `alpha <= alpha_max` and at most
/// `collection_size_max` members, and graph suites sweep every labelled
/// graph with `graph_n_min..=graph_n_max` vertices. Otherwise `trials`
/// random instances are drawn from the `(seed, index)` streams.
///
/// When deserialised, missing fields take their default values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TrialConfig {
    pub seed: u64,
    pub trials: usize,
    pub universe_max: usize,
    pub alpha_max: usize,
    pub collection_size_max: usize,
    pub graph_n_min: usize,
    pub graph_n_max: usize,
    pub edge_probability: f64,
    pub exhaustive: bool,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            seed: 0,
            trials: 1000,
            universe_max: 6,
            alpha_max: 3,
            collection_size_max: 4,
            graph_n_min: 1,
            graph_n_max: 5,
            edge_probability: 0.5,
            exhaustive: true,
        }
    }
}

impl TrialConfig {
    pub fn validate(&self, limits: &Limits) -> Result<()> {
        let bad = |msg: &str| Err(Error::BadConfig(msg.to_owned()));
        if self.trials == 0 {
            return bad("trials must be at least 1");
        }
        if self.universe_max == 0 || self.alpha_max == 0 || self.collection_size_max == 0 {
            return bad("universe_max, alpha_max and collection_size_max must be at least 1");
        }
        if !(0.0..=1.0).contains(&self.edge_probability) {
            return bad("edge_probability must lie in [0, 1]");
        }
        if self.graph_n_min == 0 || self.graph_n_min > self.graph_n_max {
            return bad("need 1 <= graph_n_min <= graph_n_max");
        }
        if self.exhaustive {
            if self.universe_max > MAX_ENUM_UNIVERSE {
                return Err(Error::too_large(
                    "universe",
                    self.universe_max,
                    MAX_ENUM_UNIVERSE,
                ));
            }
            if self.collection_size_max > MAX_ENUM_SIZE {
                return Err(Error::too_large(
                    "collection size",
                    self.collection_size_max,
                    MAX_ENUM_SIZE,
                ));
            }
            if self.graph_n_max > MAX_ENUM_GRAPH_N {
                return Err(Error::too_large(
                    "graph size for enumeration",
                    self.graph_n_max,
                    MAX_ENUM_GRAPH_N,
                ));
            }
        } else {
            limits.check_collection(self.collection_size_max)?;
            limits.check_vertices(self.graph_n_max)?;
            if self.universe_max > u32::MAX as usize {
                return bad("universe_max does not fit element ids");
            }
        }
        Ok(())
    }
}

/// The checked theorems, by their report identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TheoremId {
    /// Single-removal defects are constant when single-removal e-values are.
    Broken,
    /// Bipartition defects follow `(−1)^(|Γ1|+1)·m`.
    Signed,
    /// Even-size collections whose single removals are hke are hke.
    Even,
    /// Brute-force hke agrees with the all-bipartitions criterion.
    Duality,
    /// Brute-force hke agrees with the some-bipartition criterion.
    Existential,
    /// The three-set formula agrees with brute-force hke.
    Triangle,
    /// `Γ′ ◁ Γ ⊆ Ω(G)` implies `e(Γ′) <= e(Γ)`.
    Monotone,
    /// `m >= 0` inside `Ω(G)`.
    NonnegM,
    /// KE graph iff an hke certificate exists.
    Dam26,
    /// hke iff KE and realizable inside some `Ω(G)`.
    Hke63,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::Broken,
        TheoremId::Signed,
        TheoremId::Even,
        TheoremId::Duality,
        TheoremId::Existential,
        TheoremId::Triangle,
        TheoremId::Monotone,
        TheoremId::NonnegM,
        TheoremId::Dam26,
        TheoremId::Hke63,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Broken => "BROKEN",
            TheoremId::Signed => "SIGNED",
            TheoremId::Even => "EVEN",
            TheoremId::Duality => "DUALITY",
            TheoremId::Existential => "EXISTENTIAL",
            TheoremId::Triangle => "TRIANGLE",
            TheoremId::Monotone => "MONOTONE",
            TheoremId::NonnegM => "NONNEG_M",
            TheoremId::Dam26 => "DAM26",
            TheoremId::Hke63 => "HKE63",
        }
    }

    /// Whether instances are graphs rather than bare collections.
    pub fn on_graphs(self) -> bool {
        matches!(
            self,
            TheoremId::Monotone | TheoremId::NonnegM | TheoremId::Dam26
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTheorem(s.to_owned()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_ids_parse() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>(), Ok(t));
            assert_eq!(
                serde_json::to_string(&t).unwrap(),
                format!("\"{}\"", t.as_str())
            );
        }
        assert_eq!("nonneg_m".parse::<TheoremId>(), Ok(TheoremId::NonnegM));
        assert_eq!(
            "BOGUS".parse::<TheoremId>(),
            Err(Error::UnknownTheorem("BOGUS".into()))
        );
    }

    #[test]
    fn config_validation() {
        let l = Limits::default();
        assert!(TrialConfig::default().validate(&l).is_ok());
        let c = TrialConfig {
            trials: 0,
            ..TrialConfig::default()
        };
        assert!(matches!(c.validate(&l), Err(Error::BadConfig(_))));
        let c = TrialConfig {
            edge_probability: 1.5,
            ..TrialConfig::default()
        };
        assert!(matches!(c.validate(&l), Err(Error::BadConfig(_))));
        let c = TrialConfig {
            universe_max: 8,
            ..TrialConfig::default()
        };
        assert!(matches!(c.validate(&l), Err(Error::TooLarge { .. })));
        let c = TrialConfig {
            universe_max: 8,
            exhaustive: false,
            ..TrialConfig::default()
        };
        assert!(c.validate(&l).is_ok());
        let c = TrialConfig {
            graph_n_max: 30,
            exhaustive: false,
            ..TrialConfig::default()
        };
        assert!(matches!(c.validate(&l), Err(Error::TooLarge { .. })));
    }
}
