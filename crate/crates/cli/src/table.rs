//! Deterministic text and CSV emitters for tables and fidelity grids.

use std::io::{self, Write};

use cpulse_core::{time_cost, FidelityMap, Result};

use crate::names::{self, PulseName};

/// One row of the time-cost table.
pub struct TimeCostRow {
    pub name: PulseName,
    pub pulse_count: usize,
    pub costs: Vec<f64>,
}

/// Compute rows for the given pulses at each target angle (φ = 0; the time
/// cost does not depend on the axis).
pub fn time_cost_rows(pulses: &[PulseName], thetas: &[f64]) -> Result<Vec<TimeCostRow>> {
    let mut rows = Vec::with_capacity(pulses.len());
    for &name in pulses {
        let mut costs = Vec::with_capacity(thetas.len());
        let mut pulse_count = 0;
        for &theta in thetas {
            let seq = names::build(name, theta, 0.0, None)?;
            pulse_count = seq.len();
            costs.push(time_cost(&seq)?);
        }
        rows.push(TimeCostRow {
            name,
            pulse_count,
            costs,
        });
    }
    Ok(rows)
}

/// Aligned text table with costs rounded to one decimal, the table's
/// conventional presentation.
pub fn write_time_cost_text<W: Write>(
    w: &mut W,
    rows: &[TimeCostRow],
    theta_labels: &[String],
) -> io::Result<()> {
    let name_width = rows
        .iter()
        .map(|r| r.name.display_name().len())
        .chain(["pulse".len()])
        .max()
        .unwrap_or(5);
    write!(w, "{:<name_width$}  {:>3}", "pulse", "N")?;
    for label in theta_labels {
        write!(w, "  {:>8}", format!("T({label})"))?;
    }
    writeln!(w)?;
    for row in rows {
        write!(
            w,
            "{:<name_width$}  {:>3}",
            row.name.display_name(),
            row.pulse_count
        )?;
        for cost in &row.costs {
            write!(w, "  {:>8.1}", cost)?;
        }
        writeln!(w)?;
    }
    Ok(())
}

/// CSV table with full-precision costs.
pub fn write_time_cost_csv<W: Write>(
    w: &mut W,
    rows: &[TimeCostRow],
    theta_labels: &[String],
) -> io::Result<()> {
    write!(w, "pulse,N")?;
    for label in theta_labels {
        write!(w, ",T({label})")?;
    }
    writeln!(w)?;
    for row in rows {
        write!(w, "{},{}", row.name.display_name(), row.pulse_count)?;
        for cost in &row.costs {
            write!(w, ",{cost:.12}")?;
        }
        writeln!(w)?;
    }
    Ok(())
}

/// Fidelity grid as CSV: header row of f values, first column of ε values,
/// body of fidelities, all to 12 decimal places.
pub fn write_fidelity_csv<W: Write>(w: &mut W, map: &FidelityMap) -> io::Result<()> {
    write!(w, "eps\\f")?;
    for f in map.f_axis() {
        write!(w, ",{f:.12}")?;
    }
    writeln!(w)?;
    for (i, eps) in map.eps_axis().iter().enumerate() {
        write!(w, "{eps:.12}")?;
        for j in 0..map.f_axis().len() {
            write!(w, ",{:.12}", map.value(i, j))?;
        }
        writeln!(w)?;
    }
    Ok(())
}
