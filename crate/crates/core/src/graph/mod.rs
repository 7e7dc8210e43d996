//! Simple undirected graphs on vertices `1..=n` and the exact algorithms
//! built on them.

mod independent;
mod ke;
mod matching;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::limits::MAX_GRAPH_VERTICES;
use crate::{Error, FiniteSet, Result};

pub use independent::{alpha_graph, alpha_graph_bounded, omega, omega_bounded};
pub use ke::{
    is_ke_graph, is_ke_graph_bounded, ke_certificate_search, ke_certificate_search_bounded,
    monotonicity_check, monotonicity_check_bounded, nonnegative_m_check,
    nonnegative_m_check_bounded, realizable_in_some_omega, realizable_in_some_omega_bounded,
    KeCertificate, Realization,
};
pub use matching::{mu, mu_bounded, MaxMatching};

/// A finite simple graph. Vertex `v` (1-based) is bit `v - 1` of the
/// adjacency masks, so at most 64 vertices are representable.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<[u32; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(json: GraphJson) -> Result<Self> {
        Graph::new(json.n, json.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    /// Rejects self-loops, repeated edges (in either orientation) and
    /// endpoints outside `1..=n`.
    pub fn new<I: IntoIterator<Item = (u32, u32)>>(n: usize, edges: I) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        if n > MAX_GRAPH_VERTICES {
            return Err(Error::too_large("vertex count", n, MAX_GRAPH_VERTICES));
        }
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            for x in [u, v] {
                if x == 0 || x as usize > n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (a, b) = (u as usize - 1, v as usize - 1);
            if adj[a] >> b & 1 == 1 {
                return Err(Error::ParallelEdge(u.min(v), u.max(v)));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Graph { n, adj })
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        Graph::new(n, [])
    }

    pub fn complete(n: usize) -> Result<Self> {
        let n32 = n as u32;
        Graph::new(
            n,
            (1..=n32).flat_map(|u| (u + 1..=n32).map(move |v| (u, v))),
        )
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::new(n, (1..n as u32).map(|u| (u, u + 1)))
    }

    pub(crate) fn from_masks(adj: Vec<u64>) -> Self {
        Graph { n: adj.len(), adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        (0..self.n)
            .flat_map(|a| {
                (a + 1..self.n)
                    .filter(move |&b| self.adj[a] >> b & 1 == 1)
                    .map(move |b| (a as u32 + 1, b as u32 + 1))
            })
            .collect()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        let n = self.n as u32;
        (1..=n).contains(&u) && (1..=n).contains(&v) && self.adj[u as usize - 1] >> (v - 1) & 1 == 1
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize - 1].count_ones() as usize
    }

    pub fn vertices(&self) -> FiniteSet {
        FiniteSet::from_sorted((1..=self.n as u32).collect())
    }

    /// Neighbour mask of the 0-based vertex `v`.
    pub(crate) fn adj_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn all_mask(&self) -> u64 {
        crate::sets::full_mask(self.n)
    }

    pub(crate) fn mask_of(&self, s: &FiniteSet) -> Result<u64> {
        s.iter().try_fold(0u64, |m, x| {
            if x as usize > self.n {
                Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                })
            } else {
                Ok(m | 1 << (x - 1))
            }
        })
    }

    pub(crate) fn set_of(mask: u64) -> FiniteSet {
        FiniteSet::from_sorted(
            (0..64)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| i + 1)
                .collect(),
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// True iff no edge of `g` joins two vertices of `s`.
pub fn is_independent(g: &Graph, s: &FiniteSet) -> Result<bool> {
    let mask = g.mask_of(s)?;
    Ok(s.iter().all(|v| g.adj_mask(v as usize - 1) & mask == 0))
}

/// A set of pairwise non-incident edges, stored as sorted `(u, v)` with `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matching {
    edges: Vec<(u32, u32)>,
}

impl Matching {
    /// Validates the edges against `g`.
    pub fn new<I: IntoIterator<Item = (u32, u32)>>(g: &Graph, edges: I) -> Result<Self> {
        let mut used = 0u64;
        let mut out = Vec::new();
        for (u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(Error::PreconditionFails(format!(
                    "({u}, {v}) is not an edge"
                )));
            }
            let bits = 1u64 << (u - 1) | 1u64 << (v - 1);
            if used & bits != 0 {
                return Err(Error::PreconditionFails(format!(
                    "edge ({u}, {v}) shares a vertex with another matching edge"
                )));
            }
            used |= bits;
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        Ok(Matching { edges: out })
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Partner of `v`, if matched.
    pub fn mate(&self, v: u32) -> Option<u32> {
        self.edges.iter().find_map(|&(a, b)| match v {
            _ if v == a => Some(b),
            _ if v == b => Some(a),
            _ => None,
        })
    }
}

/// An induced subgraph, relabelled to `1..=|s|`, with `labels[i]` holding the
/// original name of new vertex `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub labels: Vec<u32>,
}

impl InducedSubgraph {
    /// Original label of a relabelled vertex.
    pub fn original(&self, v: u32) -> u32 {
        self.labels[v as usize - 1]
    }

    /// Original labels of a relabelled set.
    pub fn lift(&self, s: &FiniteSet) -> FiniteSet {
        FiniteSet::from_sorted(s.iter().map(|v| self.original(v)).collect())
    }
}

pub fn induced_subgraph(g: &Graph, s: &FiniteSet) -> Result<InducedSubgraph> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    g.mask_of(s)?;
    let labels: Vec<u32> = s.elements().to_vec();
    let adj = labels
        .iter()
        .map(|&u| {
            labels
                .iter()
                .enumerate()
                .filter(|&(_, &v)| g.has_edge(u, v))
                .fold(0u64, |m, (j, _)| m | 1 << j)
        })
        .collect();
    Ok(InducedSubgraph {
        graph: Graph::from_masks(adj),
        labels,
    })
}
