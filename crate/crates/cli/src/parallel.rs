//! Threaded drivers for the grid-shaped analyses.
//!
//! Grid cells are independent pure evaluations, so rows of the fidelity map
//! and slices of the no-go scan can run on any number of threads; results
//! are reassembled in index order (map) or merged as counts (scan), making
//! the output independent of scheduling.

use rayon::prelude::*;

use cpulse_core::analysis::{fidelity_row, grid_axis, n2_no_go_scan_slice};
use cpulse_core::{fidelity_map, n2_no_go_scan, FidelityMap, NoGoReport, PulseSequence, Result};

fn build_pool(threads: usize) -> std::result::Result<rayon::ThreadPool, String> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| format!("cannot build thread pool: {e}"))
}

/// Fidelity map over `[eps_range] × [f_range]`, using `threads` workers
/// (0 = one per core, 1 = run on the calling thread).
pub fn fidelity_map_threaded(
    seq: &PulseSequence,
    eps_range: (f64, f64),
    f_range: (f64, f64),
    resolution: usize,
    threads: usize,
) -> Result<FidelityMap> {
    if threads == 1 {
        return fidelity_map(seq, eps_range, f_range, resolution);
    }
    if resolution < 2 {
        // Delegate range checking to the sequential path.
        return fidelity_map(seq, eps_range, f_range, resolution);
    }
    let pool = build_pool(threads).map_err(cpulse_core::Error::InvalidParameter)?;
    let eps_axis = grid_axis(eps_range.0, eps_range.1, resolution);
    let f_axis = grid_axis(f_range.0, f_range.1, resolution);
    let rows: Vec<Vec<f64>> = pool.install(|| {
        eps_axis
            .par_iter()
            .map(|&eps| fidelity_row(seq, eps, &f_axis))
            .collect()
    });
    let values = rows.into_iter().flatten().collect();
    FidelityMap::from_parts(eps_axis, f_axis, values)
}

/// No-go scan split over first-pulse index slices.
pub fn no_go_scan_threaded(
    resolution: usize,
    robust_tol: f64,
    trivial_tol: f64,
    threads: usize,
) -> Result<NoGoReport> {
    if threads == 1 {
        return n2_no_go_scan(resolution, robust_tol, trivial_tol);
    }
    let pool = build_pool(threads).map_err(cpulse_core::Error::InvalidParameter)?;
    let total = resolution * resolution;
    // One slice per grid row of the first pulse keeps tasks coarse enough.
    let starts: Vec<usize> = (0..total).step_by(resolution).collect();
    let reports: Vec<Result<NoGoReport>> = pool.install(|| {
        starts
            .par_iter()
            .map(|&lo| {
                n2_no_go_scan_slice(
                    resolution,
                    robust_tol,
                    trivial_tol,
                    (lo, (lo + resolution).min(total)),
                )
            })
            .collect()
    });
    let mut merged = NoGoReport::default();
    for r in reports {
        merged = merged.merge(r?);
    }
    Ok(merged)
}
