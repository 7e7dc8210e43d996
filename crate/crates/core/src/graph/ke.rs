//! KE-graph recognition, the hke-collection certificate, realizability of a
//! collection inside some `Ω(G)`, and the graph-side theorem checks.

use std::collections::HashSet;

use serde::Serialize;

use super::independent::{alpha_graph_bounded, max_independent, omega_masks};
use super::matching::{mu_bounded, saturating_bipartite_matching};
use super::{is_independent, Graph, Matching};
use crate::sets::{all_single_removals_hke, alpha, compute_m, e_value, masks_by_size, refines};
use crate::{Error, Limits, MInvariantResult, Result, SetCollection};

/// `α(G) + μ(G) = |V(G)|`.
pub fn is_ke_graph(g: &Graph) -> Result<bool> {
    is_ke_graph_bounded(g, &Limits::default())
}

pub fn is_ke_graph_bounded(g: &Graph, limits: &Limits) -> Result<bool> {
    let a = alpha_graph_bounded(g, limits)?;
    let m = mu_bounded(g, limits)?.size;
    Ok(a + m == g.vertex_count())
}

/// An hke subcollection of `Ω(G)` together with a matching that pairs every
/// vertex outside its union with a distinct neighbour in its intersection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KeCertificate {
    pub collection: SetCollection,
    pub matching: Matching,
}

impl KeCertificate {
    /// Re-checks every certificate invariant against `g`.
    pub fn verify(&self, g: &Graph, limits: &Limits) -> Result<bool> {
        if self.collection.is_empty() {
            return Ok(false);
        }
        let omega = omega_masks(g, limits)?;
        for s in &self.collection {
            if !omega.contains(&g.mask_of(s)?) {
                return Ok(false);
            }
        }
        if !crate::is_hke_bruteforce_bounded(&self.collection, limits)? {
            return Ok(false);
        }
        let union = g.mask_of(&self.collection.union_all())?;
        let inter = g.mask_of(&self.collection.intersection_all().expect("non-empty"))?;
        let outside = g.all_mask() & !union;
        let mut covered = 0u64;
        for &(u, v) in self.matching.edges() {
            let (bu, bv) = (1u64 << (u - 1), 1u64 << (v - 1));
            let crossing =
                (bu & outside != 0 && bv & inter != 0) || (bv & outside != 0 && bu & inter != 0);
            if !crossing || !g.has_edge(u, v) {
                return Ok(false);
            }
            covered |= (bu | bv) & outside;
        }
        Ok(covered == outside)
    }
}

/// Searches subcollections of `Ω(G)` (smallest first, then lexicographic)
/// for one that is hke and admits a matching of `V − ⋃Γ` into `⋂Γ`.
pub fn ke_certificate_search(g: &Graph) -> Result<Option<KeCertificate>> {
    ke_certificate_search_bounded(g, &Limits::default())
}

pub fn ke_certificate_search_bounded(g: &Graph, limits: &Limits) -> Result<Option<KeCertificate>> {
    let omega = omega_masks(g, limits)?;
    limits.check_collection(omega.len())?;
    let alpha = omega[0].count_ones();
    let all = g.all_mask();
    // hke is hereditary, so a subcollection is hke iff it is KE and every
    // subcollection one smaller is hke.
    let mut hke: HashSet<u64> = HashSet::new();
    for sel in masks_by_size(omega.len(), 1) {
        let mut union = 0u64;
        let mut inter = all;
        let mut bits = sel;
        let mut maximal_subsets_hke = true;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            union |= omega[i];
            inter &= omega[i];
            if sel.count_ones() > 1 && !hke.contains(&(sel & !(1 << i))) {
                maximal_subsets_hke = false;
            }
        }
        if !maximal_subsets_hke || union.count_ones() + inter.count_ones() != 2 * alpha {
            continue;
        }
        hke.insert(sel);
        if let Some(matching) = saturating_bipartite_matching(g, all & !union, inter) {
            let collection = SetCollection::from_sorted(
                (0..omega.len())
                    .filter(|i| sel >> i & 1 == 1)
                    .map(|i| Graph::set_of(omega[i]))
                    .collect(),
            );
            return Ok(Some(KeCertificate {
                collection,
                matching,
            }));
        }
    }
    Ok(None)
}

/// Outcome of the realizability test, with the maximal compatible graph on
/// `⋃f` as witness. `labels[i]` is the element id carried by vertex `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Realization {
    pub realizable: bool,
    pub graph: Graph,
    pub labels: Vec<u32>,
}

/// Whether `f ⊆ Ω(G)` for some graph `G`.
///
/// Any such `G` restricted to `⋃f` is a subgraph of the graph joining every
/// pair of elements that no member contains together; that graph has the
/// fewest independent sets among candidates, so `f` is realizable iff its
/// independence number equals `α(f)`.
pub fn realizable_in_some_omega(f: &SetCollection) -> Result<Realization> {
    realizable_in_some_omega_bounded(f, &Limits::default())
}

pub fn realizable_in_some_omega_bounded(f: &SetCollection, limits: &Limits) -> Result<Realization> {
    let a = alpha(f)?;
    let universe = f.union_all();
    limits.check_vertices(universe.len())?;
    let labels = universe.elements().to_vec();
    let position = |x: u32| labels.binary_search(&x).expect("in union");
    let mut together = vec![0u64; labels.len()];
    for s in f {
        let mask = s.iter().fold(0u64, |m, x| m | 1 << position(x));
        for x in s.iter() {
            together[position(x)] |= mask;
        }
    }
    let all = crate::sets::full_mask(labels.len());
    let adj = together
        .iter()
        .enumerate()
        .map(|(i, &t)| all & !t & !(1 << i))
        .collect();
    let graph = Graph::from_masks(adj);
    let realizable = max_independent(&graph, graph.all_mask()).count_ones() as usize == a;
    Ok(Realization {
        realizable,
        graph,
        labels,
    })
}

fn require_in_omega(g: &Graph, c: &SetCollection, limits: &Limits) -> Result<()> {
    let alpha = alpha_graph_bounded(g, limits)?;
    for s in c {
        if s.len() != alpha || !is_independent(g, s)? {
            return Err(Error::PreconditionFails(format!(
                "{s} is not a maximum independent set"
            )));
        }
    }
    Ok(())
}

/// For `c ⊆ Ω(g)` and a collection `c_prime` of independent sets with
/// `c_prime ◁ c`, returns whether `e(c_prime) <= e(c)`. The monotonicity
/// theorem says this is always true.
pub fn monotonicity_check(g: &Graph, c: &SetCollection, c_prime: &SetCollection) -> Result<bool> {
    monotonicity_check_bounded(g, c, c_prime, &Limits::default())
}

pub fn monotonicity_check_bounded(
    g: &Graph,
    c: &SetCollection,
    c_prime: &SetCollection,
    limits: &Limits,
) -> Result<bool> {
    if c.is_empty() || c_prime.is_empty() {
        return Err(Error::EmptyCollection);
    }
    require_in_omega(g, c, limits)?;
    for s in c_prime {
        if !is_independent(g, s)? {
            return Err(Error::PreconditionFails(format!("{s} is not independent")));
        }
    }
    if !refines(c_prime, c)? {
        return Err(Error::PreconditionFails("c_prime does not refine c".into()));
    }
    Ok(e_value(c_prime)? <= e_value(c)?)
}

/// The m-invariant of `c ⊆ Ω(g)` whose single removals are hke, failing
/// with [`Error::Violation`] should it come out negative.
pub fn nonnegative_m_check(g: &Graph, c: &SetCollection) -> Result<MInvariantResult> {
    nonnegative_m_check_bounded(g, c, &Limits::default())
}

pub fn nonnegative_m_check_bounded(
    g: &Graph,
    c: &SetCollection,
    limits: &Limits,
) -> Result<MInvariantResult> {
    if c.len() < 2 {
        return Err(Error::CollectionTooSmall {
            needed: 2,
            actual: c.len(),
        });
    }
    require_in_omega(g, c, limits)?;
    if !all_single_removals_hke(c, limits)? {
        return Err(Error::PreconditionFails(
            "some single removal is not an hke collection".into(),
        ));
    }
    let result = compute_m(c)?;
    if result.m < 0 {
        return Err(Error::Violation(format!("m = {} inside Ω(G)", result.m)));
    }
    Ok(result)
}
