use crate::error::{Error, Result};

/// Entropic index `q`, restricted to the open interval `(0, 1)`.
///
/// `1 - q` is the degree of nonadditivity; `q = 1` is excluded because the
/// additive limit is singular against pure references (use
/// [`kl_divergence`](super::kl_divergence) for the additive quantity).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EntropicIndex(f64);

impl EntropicIndex {
    pub fn new(q: f64) -> Result<Self> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::OutOfRange {
                value: q,
                range: "(0, 1)",
            });
        }
        Ok(Self(q))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `1 - q`.
    pub fn nonadditivity(self) -> f64 {
        1.0 - self.0
    }
}

/// q-logarithm `(x^(1-q) - 1) / (1 - q)` for `x >= 0`.
pub fn q_log(x: f64, q: EntropicIndex) -> f64 {
    let p = q.nonadditivity();
    (x.powf(p) - 1.0) / p
}

/// Jackson derivative `(f(qx) - f(x)) / (x (q - 1))`.
pub fn jackson_derivative(f: impl Fn(f64) -> f64, x: f64, q: EntropicIndex) -> Result<f64> {
    if x == 0.0 {
        return Err(Error::ZeroPoint);
    }
    let q = q.value();
    Ok((f(q * x) - f(x)) / (x * (q - 1.0)))
}

/// Residual of the q-deformed product rule:
/// `D(fg) - (Df) g - f (Dg) - x (q - 1) (Df)(Dg)` at `x`.
pub fn leibniz_defect(
    f: impl Fn(f64) -> f64,
    g: impl Fn(f64) -> f64,
    x: f64,
    q: EntropicIndex,
) -> Result<f64> {
    let dfg = jackson_derivative(|t| f(t) * g(t), x, q)?;
    let df = jackson_derivative(&f, x, q)?;
    let dg = jackson_derivative(&g, x, q)?;
    Ok(dfg - df * g(x) - f(x) * dg - x * (q.value() - 1.0) * df * dg)
}
