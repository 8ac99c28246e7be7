//! Discount sweeps over a shipment portfolio, written as CSV.

use std::io::Write;

use entrain_core::tradeoff::{adoption_curve, AdoptionPoint, TradeoffInputs};

use crate::error::CliError;

/// `steps` evenly spaced discounts covering `[beta_min, beta_max]`
/// inclusive of both endpoints.
pub fn beta_grid(beta_min: f64, beta_max: f64, steps: u32) -> Result<Vec<f64>, CliError> {
    if !(0.0..=1.0).contains(&beta_min) || !(0.0..=1.0).contains(&beta_max) {
        return Err(CliError::BadRange(format!(
            "beta_min {beta_min} and beta_max {beta_max} must lie in [0, 1]"
        )));
    }
    if beta_min > beta_max {
        return Err(CliError::BadRange(format!(
            "beta_min {beta_min} exceeds beta_max {beta_max}"
        )));
    }
    if steps < 2 {
        return Err(CliError::BadRange(format!("steps must be at least 2, got {steps}")));
    }

    let span = beta_max - beta_min;
    let last = steps - 1;
    let mut grid: Vec<f64> = (0..steps)
        .map(|i| (beta_min + span * (f64::from(i) / f64::from(last))).clamp(beta_min, beta_max))
        .collect();
    grid[0] = beta_min;
    grid[last as usize] = beta_max;
    Ok(grid)
}

/// Runs the sweep and returns the curve.
pub fn sweep(
    portfolio: &[TradeoffInputs],
    beta_min: f64,
    beta_max: f64,
    steps: u32,
) -> Result<Vec<AdoptionPoint>, CliError> {
    let grid = beta_grid(beta_min, beta_max, steps)?;
    adoption_curve(portfolio, &grid).map_err(|err| CliError::Validation(err.to_string()))
}

/// CSV with the exact header
/// `beta,offered_fraction,adopting_fraction,win_win_fraction` and one row
/// per grid point, sorted ascending by beta.
pub fn write_adoption_csv<W: Write>(
    writer: &mut W,
    points: &[AdoptionPoint],
) -> std::io::Result<()> {
    writeln!(writer, "beta,offered_fraction,adopting_fraction,win_win_fraction")?;
    for point in points {
        writeln!(
            writer,
            "{},{},{},{}",
            point.beta, point.offered_fraction, point.adopting_fraction, point.win_win_fraction
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inputs(saving: f64, charge: f64, inventory: f64) -> TradeoffInputs {
        TradeoffInputs::new(saving, charge, inventory).unwrap()
    }

    #[test]
    fn grid_includes_both_endpoints() {
        let grid = beta_grid(0.0, 1.0, 2).unwrap();
        assert_eq!(grid, vec![0.0, 1.0]);
        let grid = beta_grid(0.1, 0.3, 5).unwrap();
        assert_eq!(grid.len(), 5);
        assert_eq!(grid[0], 0.1);
        assert_eq!(grid[4], 0.3);
        assert!(grid.windows(2).all(|pair| pair[0] <= pair[1]));
    }

    #[test]
    fn degenerate_span_repeats_the_point() {
        let grid = beta_grid(0.25, 0.25, 3).unwrap();
        assert_eq!(grid, vec![0.25, 0.25, 0.25]);
    }

    #[test]
    fn bad_ranges_are_rejected() {
        assert!(beta_grid(0.5, 0.2, 3).is_err());
        assert!(beta_grid(-0.1, 0.5, 3).is_err());
        assert!(beta_grid(0.0, 1.5, 3).is_err());
        assert!(beta_grid(0.0, 1.0, 1).is_err());
        assert!(beta_grid(0.0, 1.0, 0).is_err());
    }

    #[test]
    fn csv_has_the_exact_header_and_row_count() {
        let portfolio = vec![inputs(100.0, 1000.0, 50.0)];
        let points = sweep(&portfolio, 0.0, 1.0, 2).unwrap();
        let mut buffer = Vec::new();
        write_adoption_csv(&mut buffer, &points).unwrap();
        let text = String::from_utf8(buffer).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], "beta,offered_fraction,adopting_fraction,win_win_fraction");
        assert_eq!(lines[1], "0,1,0,0");
        assert_eq!(lines[2], "1,0,1,0");
    }

    #[test]
    fn single_shipment_wins_exactly_inside_its_band() {
        // Band [0.0625, 0.125] on a 101-point grid over [0, 1]. The charge
        // is a power of two so the discount amount is exact and the grid
        // comparison has no rounding slack.
        let portfolio = vec![inputs(128.0, 1024.0, 64.0)];
        let points = sweep(&portfolio, 0.0, 1.0, 101).unwrap();
        assert_eq!(points.len(), 101);
        for point in &points {
            let inside = point.beta >= 0.0625 && point.beta <= 0.125;
            let expected = if inside { 1.0 } else { 0.0 };
            assert_eq!(
                point.win_win_fraction, expected,
                "beta = {}",
                point.beta
            );
        }
    }
}
