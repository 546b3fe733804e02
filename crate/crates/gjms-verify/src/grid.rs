//! Parameter-grid specifications for the verification CLI.

use std::fmt;
use std::str::FromStr;

/// Spacing of a one-dimensional parameter grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridScale {
    Linear,
    Geometric,
}

/// A one-dimensional grid, parsed from `start:stop:count:scale` with
/// scale ∈ {linear, geometric}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub scale: GridScale,
}

impl GridSpec {
    pub fn linear(start: f64, stop: f64, count: usize) -> Self {
        GridSpec { start, stop, count, scale: GridScale::Linear }
    }

    pub fn geometric(start: f64, stop: f64, count: usize) -> Self {
        GridSpec { start, stop, count, scale: GridScale::Geometric }
    }

    /// Materialize the grid points, endpoints included.
    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let m = (self.count - 1) as f64;
        (0..self.count)
            .map(|k| {
                let t = k as f64 / m;
                match self.scale {
                    GridScale::Linear => self.start + t * (self.stop - self.start),
                    GridScale::Geometric => self.start * (self.stop / self.start).powf(t),
                }
            })
            .collect()
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let scale = match self.scale {
            GridScale::Linear => "linear",
            GridScale::Geometric => "geometric",
        };
        write!(f, "{}:{}:{}:{}", self.start, self.stop, self.count, scale)
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 4 {
            return Err(format!("grid `{s}` is not of the form start:stop:count:scale"));
        }
        let start: f64 = parts[0].parse().map_err(|_| format!("bad grid start `{}`", parts[0]))?;
        let stop: f64 = parts[1].parse().map_err(|_| format!("bad grid stop `{}`", parts[1]))?;
        let count: usize =
            parts[2].parse().map_err(|_| format!("bad grid count `{}`", parts[2]))?;
        if count == 0 {
            return Err("grid count must be ≥ 1".into());
        }
        let scale = match parts[3] {
            "linear" | "lin" => GridScale::Linear,
            "geometric" | "geom" => GridScale::Geometric,
            other => return Err(format!("grid scale `{other}` is neither linear nor geometric")),
        };
        if scale == GridScale::Geometric && (start <= 0.0 || stop <= 0.0) {
            return Err(format!("geometric grid `{s}` needs positive endpoints"));
        }
        Ok(GridSpec { start, stop, count, scale })
    }
}
