//! Enumeration budgets for the exhaustive drivers.

/// Caps guarding the exhaustive/recursive enumerations. Exceeding one is a
/// hard error, never a silent truncation.
#[derive(Debug, Clone)]
pub struct EnumCap {
    /// Largest carrier for symmetric-set enumeration.
    pub max_order: u64,
    /// Largest prime accepted by the exhaustive interval-rearrangement sweep.
    pub max_intopt_prime: u64,
    /// Node budget for support enumeration of the higher representation
    /// function (candidate tests in the pruned depth-first search).
    pub max_support_nodes: u64,
}

impl Default for EnumCap {
    fn default() -> Self {
        EnumCap { max_order: 31, max_intopt_prime: 13, max_support_nodes: 10_000_000 }
    }
}

impl EnumCap {
    /// Read overrides from `DIFFREP_CAP`: either `N` (order caps) or
    /// `N:NODES` (order caps plus the node budget).
    pub fn from_env() -> Self {
        let mut cap = EnumCap::default();
        if let Ok(s) = std::env::var("DIFFREP_CAP") {
            let mut parts = s.splitn(2, ':');
            if let Some(Ok(n)) = parts.next().map(|p| p.trim().parse::<u64>()) {
                cap.max_order = n;
                cap.max_intopt_prime = n;
            }
            if let Some(Ok(m)) = parts.next().map(|p| p.trim().parse::<u64>()) {
                cap.max_support_nodes = m;
            }
        }
        cap
    }
}
