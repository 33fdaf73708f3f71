//! Signal representations: Boolean traces over discrete or continuous time,
//! real-valued result traces, and bundle I/O.

mod bundle;
mod interval_set;
mod piecewise_linear;
mod sat_set;

pub use bundle::{load_bundle, save_bundle, BundleFormat, SignalBundle};
pub use interval_set::IntervalSet;
pub use piecewise_linear::PiecewiseLinear;
pub use sat_set::{CadlagParts, SatSet, Seg};

use crate::error::{Error, Result};

/// Discrete versus dense time axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TimeKind {
    Discrete,
    Continuous,
}

/// A Boolean-valued sequence over integer times `{0, 1, ..., T}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteTrace {
    name: String,
    values: Vec<bool>,
}

impl DiscreteTrace {
    pub fn new(name: impl Into<String>, values: Vec<bool>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain("discrete trace needs at least one value".into()));
        }
        Ok(Self {
            name: name.into(),
            values,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    /// Domain bound: values cover `{0, ..., t_end}`.
    pub fn t_end(&self) -> usize {
        self.values.len() - 1
    }

    pub fn value_at(&self, t: usize) -> Result<bool> {
        self.values.get(t).copied().ok_or(Error::OutOfDomain {
            t: t as f64,
            domain_end: self.values.len() as f64,
        })
    }
}

/// A `[0, 1]`-valued sequence over integer times, the output of discrete
/// quantitative evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantTrace {
    values: Vec<f64>,
}

impl QuantTrace {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain("quantitative trace needs at least one value".into()));
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn t_end(&self) -> usize {
        self.values.len() - 1
    }

    pub fn value_at(&self, t: usize) -> Result<f64> {
        self.values.get(t).copied().ok_or(Error::OutOfDomain {
            t: t as f64,
            domain_end: self.values.len() as f64,
        })
    }
}
