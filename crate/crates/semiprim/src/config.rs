/// Resource caps shared by the capacity-honest operations.
///
/// Every algorithm that could blow up on a large input checks one of these
/// caps and returns `Error::CapacityExceeded` instead of guessing or
/// thrashing. All caps are configurable; the defaults are chosen so that the
/// whole example corpus fits.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    /// Largest degree for which a coset action is realized pointwise.
    pub degree_cap: usize,
    /// Largest group order for element-enumeration algorithms
    /// (conjugacy classes, normal-subgroup lattices, minimal degree).
    pub order_cap: u128,
    /// Largest group order for the backtracking isomorphism search.
    pub effort_cap: u128,
    /// Largest group order for which an element table backs a triple.
    pub element_cap: usize,
    /// Below this order, subgroup intersections fall back to brute force.
    pub small_subgroup_cap: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            degree_cap: 100_000,
            order_cap: 2_000_000,
            effort_cap: 100_000,
            element_cap: 20_000,
            small_subgroup_cap: 10_000,
        }
    }
}
