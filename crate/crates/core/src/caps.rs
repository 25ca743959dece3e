//! Size limits for the exponential parts of the engine.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Maximum number of elements of an lcm lattice (bottom included).
    pub lattice_elements: usize,
    /// Maximum number of faces of a single complex handed to homology.
    pub faces: usize,
    /// Maximum generator count of any ideal produced by powers or
    /// componentwise pieces.
    pub generators: usize,
    /// Generator cap of the Taylor-strand oracle (it enumerates 2^d subsets).
    pub taylor_generators: usize,
    /// Generator cap for the strong gcd order search.
    pub strong_gcd_generators: usize,
    /// Generator cap for the linear-quotient order search.
    pub linear_quotient_generators: usize,
    /// Node budget for the backtracking order searches.
    pub search_nodes: usize,
    /// Variable cap for monomial-order permutation sweeps (n! orders).
    pub order_variables: usize,
    /// Edge cap for the induced matching search.
    pub matching_edges: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            lattice_elements: 1 << 20,
            faces: 20_000_000,
            generators: 5_000,
            taylor_generators: 16,
            strong_gcd_generators: 12,
            linear_quotient_generators: 64,
            search_nodes: 2_000_000,
            order_variables: 8,
            matching_edges: 20,
        }
    }
}
