//! Size limits shared by the enumeration routines.

use serde::{Deserialize, Serialize};

/// Upper bounds applied before any potentially exponential enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest group order accepted by the constructors.
    pub order: usize,
    /// Largest group order for which full interval enumeration is attempted.
    pub interval_order: usize,
    /// Largest number of subgroups an interval may contain.
    pub interval_size: usize,
    /// Associativity is checked on every triple up to this order and sampled above it.
    pub assoc_exhaustive: usize,
    /// Number of random triples sampled when the exhaustive check is skipped.
    pub assoc_samples: usize,
    /// Largest family size for the subset-rank (Rado) test.
    pub rado: usize,
    /// Largest number of simple objects for fusion subring enumeration.
    pub fusion_objects: usize,
    /// Largest number of (N1, H1) subgroup pairs examined for coideals.
    pub coideal_pairs: usize,
    /// Seed for the sampled associativity check.
    pub seed: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            order: 2048,
            interval_order: 1024,
            interval_size: 200_000,
            assoc_exhaustive: 512,
            assoc_samples: 100_000,
            rado: 20,
            fusion_objects: 24,
            coideal_pairs: 100_000,
            seed: 0x5eed,
        }
    }
}
