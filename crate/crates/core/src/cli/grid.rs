use super::format::round_sig;
use super::CliError;

/// Default entropic-index grid, `start:stop:step`.
pub const DEFAULT_Q_GRID: &str = "0.05:0.95:0.05";
/// Default Werner-parameter grid, `start:stop:step`.
pub const DEFAULT_F_GRID: &str = "0.25:1.0:0.05";

/// Points of a `(F, q)` sweep. Both axes are nonempty and strictly increasing;
/// q values lie in `(0, 1)` and F values in `[1/4, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    q_values: Vec<f64>,
    f_values: Vec<f64>,
}

impl SweepGrid {
    /// `f_values = None` selects the default F grid.
    pub fn new(q_values: Vec<f64>, f_values: Option<Vec<f64>>) -> Result<Self, CliError> {
        let f_values = match f_values {
            Some(f) => f,
            None => parse_range(DEFAULT_F_GRID)?,
        };
        check_axis("q", &q_values, |q| q > 0.0 && q < 1.0, "(0, 1)")?;
        check_axis("F", &f_values, |f| (0.25..=1.0).contains(&f), "[1/4, 1]")?;
        Ok(Self { q_values, f_values })
    }

    pub fn default_grid() -> Self {
        Self::new(parse_range(DEFAULT_Q_GRID).expect("default q grid"), None).expect("default grid")
    }

    pub fn q_values(&self) -> &[f64] {
        &self.q_values
    }

    pub fn f_values(&self) -> &[f64] {
        &self.f_values
    }
}

fn check_axis(name: &str, values: &[f64], ok: impl Fn(f64) -> bool, range: &str) -> Result<(), CliError> {
    if values.is_empty() {
        return Err(CliError::Parse(format!("{name} grid is empty")));
    }
    for (i, &v) in values.iter().enumerate() {
        if !ok(v) {
            return Err(CliError::Parse(format!("{name} grid value {v} outside {range}")));
        }
        if i > 0 && v <= values[i - 1] {
            return Err(CliError::Parse(format!(
                "{name} grid not strictly increasing at {v} (after {})",
                values[i - 1]
            )));
        }
    }
    Ok(())
}

/// Expands `start:stop:step` into `start, start + step, ...` up to `stop`
/// inclusive, each point rounded to 12 significant digits.
pub fn parse_range(s: &str) -> Result<Vec<f64>, CliError> {
    let bad = |msg: &str| CliError::Parse(format!("grid '{s}': {msg}"));
    let parts: Vec<&str> = s.split(':').collect();
    let [start, stop, step] = parts[..] else {
        return Err(bad("expected start:stop:step"));
    };
    let num = |t: &str| t.trim().parse::<f64>().ok().filter(|x| x.is_finite());
    let (Some(start), Some(stop), Some(step)) = (num(start), num(stop), num(step)) else {
        return Err(bad("start, stop and step must be finite numbers"));
    };
    if step <= 0.0 {
        return Err(bad("step must be positive"));
    }
    if stop < start {
        return Err(bad("stop is below start"));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|k| round_sig(start + k as f64 * step)).collect())
}
