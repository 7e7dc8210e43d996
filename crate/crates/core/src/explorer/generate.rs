//! Instance generators. Exhaustive enumerators are plain iterators; random
//! generators are pure functions of `(seed, index)`.

use itertools::Itertools;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::TrialConfig;
use crate::{Error, FiniteSet, Graph, Result, SetCollection};

pub const MAX_ENUM_UNIVERSE: usize = 7;
pub const MAX_ENUM_SIZE: usize = 5;
pub const MAX_ENUM_GRAPH_N: usize = 6;

/// Every collection of `size` distinct `alpha`-subsets of `{1..universe_max}`,
/// in lexicographic order.
pub fn enumerate_relevant_collections(
    universe_max: usize,
    alpha: usize,
    size: usize,
) -> Result<impl Iterator<Item = SetCollection>> {
    if universe_max > MAX_ENUM_UNIVERSE {
        return Err(Error::too_large(
            "universe",
            universe_max,
            MAX_ENUM_UNIVERSE,
        ));
    }
    if size > MAX_ENUM_SIZE {
        return Err(Error::too_large("collection size", size, MAX_ENUM_SIZE));
    }
    let subsets: Vec<FiniteSet> = if alpha == 0 {
        Vec::new()
    } else {
        (1..=universe_max as u32)
            .combinations(alpha)
            .map(FiniteSet::from_sorted)
            .collect()
    };
    let combos = if size == 0 {
        None
    } else {
        Some(subsets.into_iter().combinations(size))
    };
    Ok(combos.into_iter().flatten().map(SetCollection::from_sorted))
}

/// The exhaustive collection sweep described by `config`: every relevant
/// collection with `alpha <= config.alpha_max` and
/// `1 <= size <= config.collection_size_max`.
pub fn collection_sweep(config: &TrialConfig) -> Result<impl Iterator<Item = SetCollection>> {
    let alpha_max = config.alpha_max.min(config.universe_max);
    let parts = (1..=alpha_max)
        .cartesian_product(1..=config.collection_size_max)
        .map(|(a, s)| enumerate_relevant_collections(config.universe_max, a, s))
        .collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().flatten())
}

/// Every labelled graph on `n` vertices, ordered by edge bitmask over the
/// lexicographically ordered vertex pairs.
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_ENUM_GRAPH_N {
        return Err(Error::too_large(
            "graph size for enumeration",
            n,
            MAX_ENUM_GRAPH_N,
        ));
    }
    let pairs: Vec<(u32, u32)> = (1..=n as u32)
        .flat_map(|u| (u + 1..=n as u32).map(move |v| (u, v)))
        .collect();
    Ok((0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).expect("valid by construction")
    }))
}

fn stream(config: &TrialConfig, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index);
    rng
}

/// Random graph number `index`: `n` uniform in
/// `graph_n_min..=graph_n_max`, then each vertex pair (in lexicographic
/// order) kept with probability `edge_probability`.
pub fn random_graph(config: &TrialConfig, index: u64) -> Graph {
    let mut rng = stream(config, index);
    let n = rng.random_range(config.graph_n_min..=config.graph_n_max);
    let p = config.edge_probability;
    let mut edges = Vec::new();
    for u in 1..=n as u32 {
        for v in u + 1..=n as u32 {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("valid by construction")
}

/// Random relevant collection number `index` over `{1..universe_max}`.
pub fn random_collection(config: &TrialConfig, index: u64) -> SetCollection {
    let mut rng = stream(config, index);
    let universe = config.universe_max;
    let alpha = rng.random_range(1..=config.alpha_max.min(universe));
    let available = binomial(universe, alpha);
    let size = rng
        .random_range(1..=config.collection_size_max)
        .min(available.min(usize::MAX as u128) as usize);
    let mut members: Vec<FiniteSet> = Vec::with_capacity(size);
    while members.len() < size {
        let s = FiniteSet::new(
            sample(&mut rng, universe, alpha)
                .into_iter()
                .map(|i| i as u32 + 1),
        )
        .expect("distinct positive ids");
        if !members.contains(&s) {
            members.push(s);
        }
    }
    SetCollection::new(members).expect("distinct non-empty members")
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collection;

    #[test]
    fn enumeration_examples() {
        let all: Vec<_> = enumerate_relevant_collections(3, 1, 3).unwrap().collect();
        assert_eq!(all, vec![collection![[1], [2], [3]]]);
        assert_eq!(enumerate_relevant_collections(4, 2, 1).unwrap().count(), 6);
        assert_eq!(enumerate_relevant_collections(3, 2, 4).unwrap().count(), 0);
        assert!(enumerate_relevant_collections(8, 2, 2).is_err());
        assert!(enumerate_relevant_collections(6, 2, 6).is_err());
    }

    #[test]
    fn enumeration_is_canonical_and_distinct() {
        let all: Vec<_> = enumerate_relevant_collections(5, 2, 3).unwrap().collect();
        assert_eq!(all.len(), 120);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn sweep_size() {
        let config = TrialConfig::default();
        // α = 1, 2, 3 over {1..6}: 6, 15, 20 subsets; sizes 1..=4
        let expect: u128 = [6, 15, 20]
            .iter()
            .map(|&m| (1..=4).map(|s| binomial(m, s)).sum::<u128>())
            .sum();
        assert_eq!(collection_sweep(&config).unwrap().count() as u128, expect);
    }

    #[test]
    fn all_graphs_counts() {
        assert_eq!(all_graphs(1).unwrap().count(), 1);
        assert_eq!(all_graphs(4).unwrap().count(), 64);
        assert!(all_graphs(7).is_err());
    }

    #[test]
    fn random_graph_extremes() {
        let mut config = TrialConfig {
            graph_n_min: 6,
            graph_n_max: 6,
            edge_probability: 0.0,
            ..TrialConfig::default()
        };
        assert_eq!(random_graph(&config, 3).edge_count(), 0);
        config.edge_probability = 1.0;
        assert_eq!(random_graph(&config, 3), Graph::complete(6).unwrap());
    }

    #[test]
    fn random_generators_are_deterministic() {
        let config = TrialConfig {
            graph_n_min: 5,
            graph_n_max: 9,
            edge_probability: 0.4,
            ..TrialConfig::default()
        };
        for i in 0..20 {
            assert_eq!(random_graph(&config, i), random_graph(&config, i));
            assert_eq!(random_collection(&config, i), random_collection(&config, i));
        }
        let other = TrialConfig {
            seed: 99,
            ..config.clone()
        };
        let differ = (0..20).any(|i| random_graph(&config, i) != random_graph(&other, i));
        assert!(differ);
    }

    #[test]
    fn random_collections_respect_config() {
        let config = TrialConfig::default();
        for i in 0..200 {
            let c = random_collection(&config, i);
            let a = crate::alpha(&c).unwrap();
            assert!(a <= config.alpha_max);
            assert!(c.len() <= config.collection_size_max);
            assert!(c.union_all().max_element().unwrap() as usize <= config.universe_max);
        }
    }
}
