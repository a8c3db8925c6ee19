//! Shared parameter grids for the benchmarks.

/// `(n, k)` cells for the sieving benchmarks, smallest first.
pub const SIEVING_CELLS: [(u32, u32); 3] = [(4, 2), (6, 3), (8, 4)];

/// `(n, k)` cells for the symbolic benchmarks.
pub const ALGEBRA_CELLS: [(u32, u32); 3] = [(2, 2), (3, 2), (3, 3)];
