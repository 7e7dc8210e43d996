use super::Graph;
use crate::{Error, Limits, Result, SetCollection};

/// Size of a maximum independent set.
pub fn alpha_graph(g: &Graph) -> Result<usize> {
    alpha_graph_bounded(g, &Limits::default())
}

pub fn alpha_graph_bounded(g: &Graph, limits: &Limits) -> Result<usize> {
    limits.check_vertices(g.vertex_count())?;
    Ok(max_independent(g, g.all_mask()).count_ones() as usize)
}

fn degree_in(g: &Graph, v: usize, cand: u64) -> u32 {
    (g.adj_mask(v) & cand).count_ones()
}

/// A maximum independent set inside `cand`, as a vertex mask.
pub(crate) fn max_independent(g: &Graph, cand: u64) -> u64 {
    if cand == 0 {
        return 0;
    }
    let vertices = || (0..g.vertex_count()).filter(move |&v| cand >> v & 1 == 1);
    let low = vertices()
        .min_by_key(|&v| degree_in(g, v, cand))
        .expect("non-empty");
    // A vertex of degree <= 1 belongs to some maximum independent set.
    if degree_in(g, low, cand) <= 1 {
        let rest = cand & !(1 << low) & !g.adj_mask(low);
        return 1 << low | max_independent(g, rest);
    }
    let high = vertices()
        .max_by_key(|&v| degree_in(g, v, cand))
        .expect("non-empty");
    let with = 1 << high | max_independent(g, cand & !(1 << high) & !g.adj_mask(high));
    let without = max_independent(g, cand & !(1 << high));
    if with.count_ones() >= without.count_ones() {
        with
    } else {
        without
    }
}

/// All maximum independent sets, in lexicographic order.
pub fn omega(g: &Graph) -> Result<SetCollection> {
    omega_bounded(g, &Limits::default())
}

pub fn omega_bounded(g: &Graph, limits: &Limits) -> Result<SetCollection> {
    let masks = omega_masks(g, limits)?;
    Ok(SetCollection::from_sorted(
        masks.into_iter().map(Graph::set_of).collect(),
    ))
}

/// Vertex masks of `Ω(g)`, ordered lexicographically on the sorted members.
pub(crate) fn omega_masks(g: &Graph, limits: &Limits) -> Result<Vec<u64>> {
    let alpha = alpha_graph_bounded(g, limits)?;
    let mut out = Vec::new();
    extend(g, alpha, 0, g.all_mask(), &mut out, limits.max_omega)?;
    Ok(out)
}

fn extend(
    g: &Graph,
    alpha: usize,
    current: u64,
    cand: u64,
    out: &mut Vec<u64>,
    cap: usize,
) -> Result<()> {
    let size = current.count_ones() as usize;
    if size == alpha {
        if out.len() == cap {
            return Err(Error::too_large(
                "maximum independent set count",
                cap + 1,
                cap,
            ));
        }
        out.push(current);
        return Ok(());
    }
    let mut rest = cand;
    while rest != 0 {
        if size + (rest.count_ones() as usize) < alpha {
            break;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        // Later candidates only: vertices are added in increasing order.
        extend(g, alpha, current | 1 << v, rest & !g.adj_mask(v), out, cap)?;
    }
    Ok(())
}
