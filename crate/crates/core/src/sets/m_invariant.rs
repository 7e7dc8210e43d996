//! The single-removal defect, the m-invariant, and the signed partition law.

use serde::Serialize;

use super::collection::{ordered_bipartitions, Packed};
use super::ke::{all_single_removals_hke, alpha, e_value};
use super::{Bipartition, FiniteSet, SetCollection};
use crate::{Error, Limits, Result};

fn require_len(c: &SetCollection, needed: usize) -> Result<()> {
    if c.len() < needed {
        return Err(Error::CollectionTooSmall {
            needed,
            actual: c.len(),
        });
    }
    Ok(())
}

/// `|s − ⋃(c−{s})| − |⋂(c−{s}) − s|`, computed directly from the sets.
pub fn removal_defect(c: &SetCollection, s: &FiniteSet) -> Result<i64> {
    let rest = c.without(s)?;
    require_len(c, 2)?;
    let inter = rest.intersection_all().expect("rest is non-empty");
    let gained = s.difference(&rest.union_all()).len() as i64;
    let lost = inter.difference(s).len() as i64;
    Ok(gained - lost)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MemberDefect {
    pub member: FiniteSet,
    pub defect: i64,
}

/// The common single-removal value `β`, and `m = e(c) − β`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MInvariantResult {
    pub e: usize,
    pub beta: usize,
    pub m: i64,
    pub per_member_defects: Vec<MemberDefect>,
}

/// Computes the m-invariant. Requires every `e(c − {s})` to coincide.
pub fn compute_m(c: &SetCollection) -> Result<MInvariantResult> {
    require_len(c, 2)?;
    let values = c
        .iter()
        .map(|s| e_value(&c.without(s)?))
        .collect::<Result<Vec<_>>>()?;
    let beta = values[0];
    if values.iter().any(|&v| v != beta) {
        return Err(Error::HypothesisFails { values });
    }
    let e = e_value(c)?;
    let m = e as i64 - beta as i64;
    let per_member_defects = c
        .iter()
        .map(|s| {
            Ok(MemberDefect {
                member: s.clone(),
                defect: removal_defect(c, s)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some(bad) = per_member_defects.iter().find(|d| d.defect != m) {
        return Err(Error::Violation(format!(
            "removal defect of {} is {}, expected m = {m}",
            bad.member, bad.defect
        )));
    }
    Ok(MInvariantResult {
        e,
        beta,
        m,
        per_member_defects,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedLawRow {
    pub bipartition: Bipartition,
    pub defect: i64,
    pub predicted: i64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedLawReport {
    pub m: i64,
    pub rows: Vec<SignedLawRow>,
    pub pass: bool,
}

/// Checks `defect(Γ1, Γ2) = (−1)^(|Γ1|+1) · m` on every ordered bipartition.
///
/// Needs a relevant collection of at least two members whose single
/// removals are all hke.
pub fn signed_partition_law(c: &SetCollection) -> Result<SignedLawReport> {
    signed_partition_law_bounded(c, &Limits::default())
}

pub fn signed_partition_law_bounded(c: &SetCollection, limits: &Limits) -> Result<SignedLawReport> {
    require_len(c, 2)?;
    if !all_single_removals_hke(c, limits)? {
        return Err(Error::PreconditionFails(
            "some single removal is not an hke collection".into(),
        ));
    }
    let m = compute_m(c)?.m;
    let packed = Packed::new(c);
    let rows: Vec<SignedLawRow> = ordered_bipartitions(c.full_mask())
        .map(|(m1, m2)| {
            let sign = if m1.count_ones() % 2 == 1 { 1 } else { -1 };
            let predicted = sign * m;
            let defect = packed.defect(m1, m2);
            SignedLawRow {
                bipartition: Bipartition::from_masks(c, m1, m2),
                defect,
                predicted,
                pass: defect == predicted,
            }
        })
        .collect();
    let pass = rows.iter().all(|r| r.pass);
    Ok(SignedLawReport { m, rows, pass })
}

/// hke test for three distinct equal-size sets: `|a − b − c| = |(b ∩ c) − a|`.
pub fn triangle_hke_check(a: &FiniteSet, b: &FiniteSet, c: &FiniteSet) -> Result<bool> {
    if a == b || b == c || a == c {
        return Err(Error::NotDistinct);
    }
    let triple = SetCollection::new([a.clone(), b.clone(), c.clone()])?;
    alpha(&triple)?;
    let lhs = a.difference(b).difference(c).len();
    let rhs = b.intersection(c).difference(a).len();
    Ok(lhs == rhs)
}

/// Cross-check used by tests: the set-formula defect agrees with the
/// explicit bipartition form `({s}, c − {s})`.
#[cfg(test)]
fn removal_as_bipartition(c: &SetCollection, s: &FiniteSet) -> Result<i64> {
    use super::ke::partition_defect;
    let single = SetCollection::new([s.clone()])?;
    Ok(partition_defect(&Bipartition::of(c, &single)?))
}
