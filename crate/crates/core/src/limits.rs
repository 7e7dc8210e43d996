/// Hard ceiling imposed by the bitmask graph representation.
pub const MAX_GRAPH_VERTICES: usize = 64;

/// Hard ceiling on members for subset enumeration (masks are `u64`).
pub const MAX_ENUMERABLE_MEMBERS: usize = 63;

/// Guardrails for the exponential searches.
///
/// Every operation that enumerates subcollections, vertex subsets or
/// maximum independent sets checks its input against these numbers and
/// fails with [`Error::TooLarge`](crate::Error::TooLarge) instead of running
/// away.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest collection whose subcollections may be enumerated.
    pub max_collection: usize,
    /// Largest vertex count accepted by the exact graph algorithms.
    pub max_vertices: usize,
    /// Largest `Ω(G)` that will be materialised.
    pub max_omega: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_collection: 20,
            max_vertices: 24,
            max_omega: 1 << 16,
        }
    }
}

impl Limits {
    /// Defaults, with `KE_MAX_N` (if set and numeric) overriding the vertex bound.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(n) = std::env::var("KE_MAX_N")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            limits.max_vertices = n.min(MAX_GRAPH_VERTICES);
        }
        limits
    }

    pub(crate) fn check_collection(&self, len: usize) -> crate::Result<()> {
        let limit = self.max_collection.min(MAX_ENUMERABLE_MEMBERS);
        if len > limit {
            return Err(crate::Error::too_large("collection size", len, limit));
        }
        Ok(())
    }

    pub(crate) fn check_vertices(&self, n: usize) -> crate::Result<()> {
        let limit = self.max_vertices.min(MAX_GRAPH_VERTICES);
        if n > limit {
            return Err(crate::Error::too_large("vertex count", n, limit));
        }
        Ok(())
    }
}
