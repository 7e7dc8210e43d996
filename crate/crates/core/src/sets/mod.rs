//! Set-collection algebra.

mod collection;
mod finite_set;
mod ke;
mod m_invariant;

pub use collection::{Bipartition, SetCollection};
pub use finite_set::FiniteSet;
pub use ke::{
    all_single_removals_hke, alpha, e_value, is_hke_bruteforce, is_hke_bruteforce_bounded,
    is_hke_via_duality, is_hke_via_duality_bounded, is_hke_via_existential,
    is_hke_via_existential_bounded, is_ke, is_relevant, partition_defect, refines, DualityVerdict,
    DualityWitness, HkeMethod,
};
pub use m_invariant::{
    compute_m, removal_defect, signed_partition_law, signed_partition_law_bounded,
    triangle_hke_check, MInvariantResult, MemberDefect, SignedLawReport, SignedLawRow,
};

pub(crate) use collection::{full_mask, masks_by_size};
