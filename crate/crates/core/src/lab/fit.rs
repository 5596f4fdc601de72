use crate::error::{bail, Result};
use crate::lab::report::PowerFit;
use crate::math::{log, sqrt};

/// Fits `y ≈ e^{c} x^{p}` by least squares on `(log x, log y)`.
pub fn power_fit(xs: &[f64], ys: &[f64]) -> Result<PowerFit> {
    if xs.len() != ys.len() || xs.len() < 2 {
        bail!(InvalidParameter, "power fit needs at least two paired points");
    }
    if xs.iter().chain(ys).any(|v| !(*v > 0.0 && v.is_finite())) {
        bail!(InvalidParameter, "power fit needs positive finite data");
    }
    let n = xs.len() as f64;
    let lx: alloc::vec::Vec<f64> = xs.iter().map(|&x| log(x)).collect();
    let ly: alloc::vec::Vec<f64> = ys.iter().map(|&y| log(y)).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        bail!(InvalidParameter, "power fit needs at least two distinct x values");
    }
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let exponent = sxy / sxx;
    let intercept = my - exponent * mx;
    let ss: f64 = lx
        .iter()
        .zip(&ly)
        .map(|(x, y)| {
            let r = y - (intercept + exponent * x);
            r * r
        })
        .sum();
    Ok(PowerFit { exponent, intercept, residual: sqrt(ss / n), points: xs.len() })
}
