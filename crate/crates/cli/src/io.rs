//! Signal files and report output.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use lctkit::lab::{Cell, ExperimentReport};
use lctkit::{Complex64, Grid, SampledSignal};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SignalFile {
    grid: Grid,
    values: Vec<[f64; 2]>,
}

pub fn signal_from_json(text: &str) -> Result<SampledSignal> {
    let file: SignalFile = serde_json::from_str(text).map_err(CliError::schema)?;
    let values = file.values.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
    Ok(SampledSignal::new(file.grid, values)?)
}

pub fn signal_to_json(f: &SampledSignal) -> String {
    let file = SignalFile { grid: *f.grid(), values: f.values().iter().map(|v| [v.re, v.im]).collect() };
    let mut s = serde_json::to_string(&file).expect("signal serializes");
    s.push('\n');
    s
}

/// `t,re,im` with a one-line header. The grid is recovered from the first
/// and second sample and the count, so the file must hold a full grid.
pub fn signal_from_csv(text: &str) -> Result<SampledSignal> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| CliError::schema("empty signal CSV"))?;
    if header.split(',').map(str::trim).collect::<Vec<_>>() != ["t", "re", "im"] {
        return Err(CliError::schema(format!("signal CSV header must be t,re,im, got {header:?}")));
    }
    let mut ts = Vec::new();
    let mut values = Vec::new();
    for (k, line) in lines.enumerate() {
        let cols: Vec<f64> = line
            .split(',')
            .map(|c| c.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| CliError::schema(format!("signal CSV row {}: {e}", k + 1)))?;
        if cols.len() != 3 {
            return Err(CliError::schema(format!("signal CSV row {} has {} columns", k + 1, cols.len())));
        }
        ts.push(cols[0]);
        values.push(Complex64::new(cols[1], cols[2]));
    }
    if ts.len() < 2 {
        return Err(CliError::schema("signal CSV needs at least two samples"));
    }
    let n = ts.len();
    let d = ts[1] - ts[0];
    let grid = Grid::new(n as f64 * d / 2.0, n)?;
    for (j, &t) in ts.iter().enumerate() {
        if (t - grid.point(j)).abs() > 1e-9 * grid.half_width().max(1.0) {
            return Err(CliError::schema(format!("signal CSV sample {j} at t = {t} is off the grid {grid:?}")));
        }
    }
    Ok(SampledSignal::new(grid, values)?)
}

pub fn signal_to_csv(f: &SampledSignal) -> String {
    let mut s = String::from("t,re,im\n");
    for (t, v) in f.grid().points().zip(f.values()) {
        writeln!(s, "{},{},{}", num(t), num(v.re), num(v.im)).unwrap();
    }
    s
}

pub fn read_signal(path: &Path) -> Result<SampledSignal> {
    if !path.exists() {
        return Err(CliError::schema(format!("referenced file {} does not exist", path.display())));
    }
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("csv") => signal_from_csv(&text),
        _ => signal_from_json(&text),
    }
}

/// Seventeen significant digits; `NaN` and `inf` spelled out.
pub fn num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "NaN".into()
    } else if x > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

fn text(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn cell(c: &Cell) -> String {
    match c {
        Cell::Bool(b) => b.to_string(),
        Cell::Int(k) => k.to_string(),
        Cell::Num(x) => num(*x),
        Cell::Text(s) => text(s),
    }
}

pub fn report_csv(rep: &ExperimentReport) -> String {
    let mut s = rep.columns.iter().map(|c| text(c)).collect::<Vec<_>>().join(",");
    s.push('\n');
    for row in &rep.rows {
        s.push_str(&row.iter().map(cell).collect::<Vec<_>>().join(","));
        s.push('\n');
    }
    s
}

/// Two whitespace-separated columns with a `#` header naming them.
pub fn curve_dat(x_label: &str, y_label: &str, points: &[(f64, f64)]) -> String {
    let mut s = format!("# {x_label} {y_label}\n");
    for &(x, y) in points {
        writeln!(s, "{} {}", num(x), num(y)).unwrap();
    }
    s
}

pub fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trip() {
        let g = Grid::new(4.0, 16).unwrap();
        let f = SampledSignal::from_fn(g, |t| Complex64::new((-t * t).exp(), t)).unwrap();
        let back = signal_from_csv(&signal_to_csv(&f)).unwrap();
        assert_eq!(back.grid(), f.grid());
        assert_eq!(back.values(), f.values());
    }

    #[test]
    fn json_round_trip() {
        let g = Grid::new(4.0, 16).unwrap();
        let f = SampledSignal::from_real_fn(g, |t| t.sin()).unwrap();
        let back = signal_from_json(&signal_to_json(&f)).unwrap();
        assert_eq!(back.values(), f.values());
    }

    #[test]
    fn json_rejects_bad_length() {
        let r = signal_from_json(r#"{"grid":{"T":1,"N":4},"values":[[0,0]]}"#);
        assert!(r.is_err());
    }

    #[test]
    fn csv_quotes_text() {
        let mut rep = ExperimentReport::new("x", &["a", "b"]);
        rep.push_row(vec![Cell::from("p,q"), Cell::from(0.5)]).unwrap();
        assert_eq!(report_csv(&rep), "a,b\n\"p,q\",5.0000000000000000e-1\n");
    }
}
