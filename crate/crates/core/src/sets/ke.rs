//! Relevance, the `e` functional, and the three independent routes to the
//! hereditary-KE verdict.

use serde::Serialize;

use super::collection::{masks_by_size, unordered_bipartitions, Packed};
use super::{Bipartition, SetCollection};
use crate::{Error, Limits, Result};

/// Common cardinality of the members.
pub fn alpha(c: &SetCollection) -> Result<usize> {
    let (first, rest) = c.members().split_first().ok_or(Error::EmptyCollection)?;
    let a = first.len();
    match rest.iter().find(|s| s.len() != a) {
        Some(s) => Err(Error::NotRelevant {
            first: a,
            other: s.len(),
        }),
        None => Ok(a),
    }
}

pub fn is_relevant(c: &SetCollection) -> bool {
    alpha(c).is_ok()
}

/// `|⋃c| + |⋂c|`.
pub fn e_value(c: &SetCollection) -> Result<usize> {
    let inter = c.intersection_all().ok_or(Error::EmptyCollection)?;
    Ok(c.union_all().len() + inter.len())
}

pub fn is_ke(c: &SetCollection) -> Result<bool> {
    let a = alpha(c)?;
    Ok(e_value(c)? == 2 * a)
}

/// `⋃c1 ⊆ ⋃c2` and `⋂c2 ⊆ ⋂c1`.
pub fn refines(c1: &SetCollection, c2: &SetCollection) -> Result<bool> {
    let i1 = c1.intersection_all().ok_or(Error::EmptyCollection)?;
    let i2 = c2.intersection_all().ok_or(Error::EmptyCollection)?;
    Ok(c1.union_all().is_subset(&c2.union_all()) && i2.is_subset(&i1))
}

/// `|⋂part1 − ⋃part2| − |⋂part2 − ⋃part1|`.
pub fn partition_defect(p: &Bipartition) -> i64 {
    let i1 = p.part1().intersection_all().expect("non-empty part");
    let i2 = p.part2().intersection_all().expect("non-empty part");
    let left = i1.difference(&p.part2().union_all()).len() as i64;
    let right = i2.difference(&p.part1().union_all()).len() as i64;
    left - right
}

/// hke by definition: every non-empty subcollection has `e = 2α`.
pub fn is_hke_bruteforce(c: &SetCollection) -> Result<bool> {
    is_hke_bruteforce_bounded(c, &Limits::default())
}

pub fn is_hke_bruteforce_bounded(c: &SetCollection, limits: &Limits) -> Result<bool> {
    let a = alpha(c)?;
    limits.check_collection(c.len())?;
    let packed = Packed::new(c);
    Ok(masks_by_size(c.len(), 1).all(|mask| packed.e(mask) == 2 * a))
}

/// First zero-defect failure found by [`is_hke_via_duality`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityWitness {
    pub subcollection: SetCollection,
    pub bipartition: Bipartition,
    pub defect: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualityVerdict {
    pub hke: bool,
    pub witness: Option<DualityWitness>,
}

/// hke via the partition duality: every bipartition of every subcollection
/// with at least two members has zero defect.
///
/// A single-member collection has no bipartitions and is reported hke.
pub fn is_hke_via_duality(c: &SetCollection) -> Result<DualityVerdict> {
    is_hke_via_duality_bounded(c, &Limits::default())
}

pub fn is_hke_via_duality_bounded(c: &SetCollection, limits: &Limits) -> Result<DualityVerdict> {
    alpha(c)?;
    limits.check_collection(c.len())?;
    let packed = Packed::new(c);
    for sub in masks_by_size(c.len(), 2) {
        for (m1, m2) in unordered_bipartitions(sub) {
            let defect = packed.defect(m1, m2);
            if defect != 0 {
                let witness = DualityWitness {
                    subcollection: c.select(sub),
                    bipartition: Bipartition::from_masks(c, m1, m2),
                    defect,
                };
                return Ok(DualityVerdict {
                    hke: false,
                    witness: Some(witness),
                });
            }
        }
    }
    Ok(DualityVerdict {
        hke: true,
        witness: None,
    })
}

/// hke via the existential criterion: every subcollection with at least two
/// members has *some* zero-defect bipartition.
pub fn is_hke_via_existential(c: &SetCollection) -> Result<bool> {
    is_hke_via_existential_bounded(c, &Limits::default())
}

pub fn is_hke_via_existential_bounded(c: &SetCollection, limits: &Limits) -> Result<bool> {
    alpha(c)?;
    limits.check_collection(c.len())?;
    let packed = Packed::new(c);
    Ok(masks_by_size(c.len(), 2)
        .all(|sub| unordered_bipartitions(sub).any(|(m1, m2)| packed.defect(m1, m2) == 0)))
}

/// Whether `c − {s}` is hke for every member `s`.
pub fn all_single_removals_hke(c: &SetCollection, limits: &Limits) -> Result<bool> {
    let a = alpha(c)?;
    limits.check_collection(c.len())?;
    let packed = Packed::new(c);
    let full = c.full_mask();
    // A subcollection avoids some member iff it is proper.
    Ok(masks_by_size(c.len(), 1)
        .filter(|&m| m != full)
        .all(|m| packed.e(m) == 2 * a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HkeMethod {
    Brute,
    Duality,
    Existential,
}

impl HkeMethod {
    pub const ALL: [HkeMethod; 3] = [HkeMethod::Brute, HkeMethod::Duality, HkeMethod::Existential];

    pub fn name(self) -> &'static str {
        match self {
            HkeMethod::Brute => "brute",
            HkeMethod::Duality => "duality",
            HkeMethod::Existential => "existential",
        }
    }

    pub fn is_hke(self, c: &SetCollection, limits: &Limits) -> Result<bool> {
        match self {
            HkeMethod::Brute => is_hke_bruteforce_bounded(c, limits),
            HkeMethod::Duality => is_hke_via_duality_bounded(c, limits).map(|v| v.hke),
            HkeMethod::Existential => is_hke_via_existential_bounded(c, limits),
        }
    }
}
