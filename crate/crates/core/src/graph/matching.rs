//! Maximum matching in general graphs (Edmonds' blossom shrinking) and
//! saturating matchings between two disjoint vertex sets (augmenting paths).

use std::collections::VecDeque;

use serde::Serialize;

use super::{Graph, Matching};
use crate::{Limits, Result};

const NONE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxMatching {
    pub size: usize,
    pub matching: Matching,
}

/// Maximum matching size with a witness.
pub fn mu(g: &Graph) -> Result<MaxMatching> {
    mu_bounded(g, &Limits::default())
}

pub fn mu_bounded(g: &Graph, limits: &Limits) -> Result<MaxMatching> {
    limits.check_vertices(g.vertex_count())?;
    let mate = Blossom::new(g).solve();
    let edges = mate
        .iter()
        .enumerate()
        .filter(|&(v, &w)| w != NONE && v < w)
        .map(|(v, &w)| (v as u32 + 1, w as u32 + 1));
    let matching = Matching::new(g, edges).expect("blossom output is a matching");
    Ok(MaxMatching {
        size: matching.len(),
        matching,
    })
}

struct Blossom {
    n: usize,
    adj: Vec<Vec<usize>>,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let adj = (0..n)
            .map(|v| (0..n).filter(|&w| g.adj_mask(v) >> w & 1 == 1).collect())
            .collect();
        Blossom {
            n,
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn solve(mut self) -> Vec<usize> {
        for root in 0..self.n {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(mut v) = self.find_augmenting_path(root) {
                while v != NONE {
                    let pv = self.parent[v];
                    let next = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = next;
                }
            }
        }
        self.mate
    }

    fn lowest_common_base(&self, a: usize, b: usize) -> usize {
        let mut seen = vec![false; self.n];
        let mut a = a;
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        let mut b = b;
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS over alternating paths from `root`; returns the free endpoint.
    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for k in 0..self.adj[v].len() {
                let to = self.adj[v][k];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lowest_common_base(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..self.n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }
}

/// A matching along edges of `g` that covers every vertex of `left` with a
/// distinct partner in `right` (the two masks must be disjoint), or `None`
/// if no such matching exists.
pub fn saturating_bipartite_matching(g: &Graph, left: u64, right: u64) -> Option<Matching> {
    debug_assert_eq!(left & right, 0);
    let n = g.vertex_count();
    let mut owner = vec![NONE; n];
    for u in (0..n).filter(|&u| left >> u & 1 == 1) {
        let mut visited = 0u64;
        if !augment(g, u, right, &mut owner, &mut visited) {
            return None;
        }
    }
    let edges = owner
        .iter()
        .enumerate()
        .filter(|&(_, &u)| u != NONE)
        .map(|(v, &u)| (u as u32 + 1, v as u32 + 1));
    Some(Matching::new(g, edges).expect("augmenting paths yield a matching"))
}

fn augment(g: &Graph, u: usize, right: u64, owner: &mut [usize], visited: &mut u64) -> bool {
    let mut cand = g.adj_mask(u) & right & !*visited;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if *visited >> v & 1 == 1 {
            continue;
        }
        *visited |= 1 << v;
        if owner[v] == NONE || augment(g, owner[v], right, owner, visited) {
            owner[v] = u;
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::seven_vertex;
    use super::super::induced_subgraph;
    use super::*;
    use crate::set;
    use proptest::prelude::*;

    /// Oracle: exhaustive search over matchings, branching on the lowest
    /// unprocessed vertex (leave it unmatched, or pair it with a neighbour).
    fn oracle_mu(g: &Graph, alive: u64) -> usize {
        if alive == 0 {
            return 0;
        }
        let v = alive.trailing_zeros() as usize;
        let rest = alive & !(1 << v);
        let mut best = oracle_mu(g, rest);
        let mut nbrs = g.adj_mask(v) & rest;
        while nbrs != 0 {
            let w = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            best = best.max(1 + oracle_mu(g, rest & !(1 << w)));
        }
        best
    }

    #[test]
    fn mu_examples() {
        let g = seven_vertex();
        assert_eq!(mu(&g).unwrap().size, 3);
        assert_eq!(mu(&Graph::edgeless(5).unwrap()).unwrap().size, 0);
        let g2 = induced_subgraph(&g, &set![1, 2, 3, 4, 5, 7]).unwrap();
        assert_eq!(mu(&g2.graph).unwrap().size, 2);
        let g1 = induced_subgraph(&g, &set![1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(mu(&g1.graph).unwrap().size, 3);
    }

    #[test]
    fn odd_cycles_need_blossoms() {
        // 5-cycle with a pendant on every vertex: perfect matching of size 5
        let mut edges: Vec<(u32, u32)> = (1..=5).map(|i| (i, i % 5 + 1)).collect();
        edges.extend((1..=5).map(|i| (i, i + 5)));
        let g = Graph::new(10, edges).unwrap();
        assert_eq!(mu(&g).unwrap().size, 5);
        // two triangles joined by an edge
        let g = Graph::new(6, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert_eq!(mu(&g).unwrap().size, 3);
        assert_eq!(mu(&Graph::complete(7).unwrap()).unwrap().size, 3);
    }

    #[test]
    fn saturating_examples() {
        let g = Graph::complete(2).unwrap();
        let m = saturating_bipartite_matching(&g, 0b10, 0b01).unwrap();
        assert_eq!(m.edges(), &[(1, 2)]);
        assert!(saturating_bipartite_matching(&g, 0, 0b01)
            .unwrap()
            .is_empty());
        // star: two leaves cannot both be matched into the centre
        let star = Graph::new(3, [(1, 2), (1, 3)]).unwrap();
        assert!(saturating_bipartite_matching(&star, 0b110, 0b001).is_none());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let all = (1..=n as u32).flat_map(|u| (u + 1..=n as u32).map(move |v| (u, v)));
                Graph::new(n, all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(512))]

        #[test]
        fn blossom_agrees_with_exhaustive_search(g in arb_graph(8)) {
            let found = mu(&g).unwrap();
            prop_assert_eq!(found.size, oracle_mu(&g, g.all_mask()));
            prop_assert_eq!(found.matching.len(), found.size);
        }

        #[test]
        fn blossom_on_larger_graphs(g in arb_graph(14)) {
            prop_assert_eq!(mu(&g).unwrap().size, oracle_mu(&g, g.all_mask()));
        }
    }
}
