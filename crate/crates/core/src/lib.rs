//! Bounded metric temporal logic over discrete- and continuous-time Boolean
//! signals, evaluated as linear time-invariant filtering.
//!
//! Two semantics share one formula language and one kernel toolbox:
//!
//! * [`qual`] computes classical true/false satisfaction by convolution over
//!   the max-min dioid with unnormalized rectangular windows;
//! * [`quant`] computes a `[0, 1]` measure, the normalized amount of time a
//!   formula holds inside its window, by real convolution with rectangular,
//!   Gaussian or sigmoid-edged kernels.
//!
//! [`oracle`] implements the textbook quantifier semantics directly and
//! serves as the reference the filtering evaluators are tested against;
//! [`check`] packages those comparisons as seeded randomized suites.
//!
//! Discrete evaluation parallelizes across time points with rayon; build
//! with `--no-default-features` for the sequential fallback.

pub mod check;
pub mod error;
pub mod formula;
pub mod kernel;
pub mod oracle;
pub mod qual;
pub mod quant;
pub mod signal;

mod numeric;
mod par;

pub use error::{Error, Result};
pub use formula::{Formula, TimeInterval};
pub use kernel::{Direction, Kernel, KernelShape, KernelSpec};
pub use signal::{
    load_bundle, save_bundle, BundleFormat, DiscreteTrace, IntervalSet, PiecewiseLinear,
    QuantTrace, SatSet, Seg, SignalBundle, TimeKind,
};
