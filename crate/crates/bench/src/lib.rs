//! Benchmark-only crate; see `benches/`. The grids below are shared so every
//! bench measures the same cells.

/// The cells `(d, d-1)`, where `dim Ker(E) ∩ A_j` peaks.
pub fn middle_cells(ds: &[u32]) -> Vec<(u32, u32)> {
    ds.iter().map(|&d| (d, d - 1)).collect()
}
