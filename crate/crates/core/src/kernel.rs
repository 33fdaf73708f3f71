//! Windowing kernels: rectangular (future/past), singular Kronecker/Dirac,
//! truncated Gaussian, and sigmoid-edged, with evaluation and mass queries.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::formula::TimeInterval;
use crate::numeric;
use crate::signal::TimeKind;

/// Which side of the current time the window reaches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `w+`: support on `[-b, -a]`, used by finally/globally/until.
    Future,
    /// `w-`: support on `[a, b]`, used by once/historically/since.
    Past,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KernelShape {
    Rect,
    Singular,
    Gaussian { sigma: f64 },
    SigmoidEdge { steepness: f64 },
}

/// CLI-facing kernel selector: `rect | gauss:<recip_sigma> | sigmoid:<k>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KernelSpec {
    Rect,
    Gaussian { sigma_reciprocal: f64 },
    Sigmoid { steepness: f64 },
}

impl KernelSpec {
    pub fn is_smooth(&self) -> bool {
        !matches!(self, Self::Rect)
    }
}

impl FromStr for KernelSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "rect" {
            return Ok(Self::Rect);
        }
        if let Some(arg) = s.strip_prefix("gauss:") {
            let sigma_reciprocal: f64 = arg
                .parse()
                .map_err(|_| Error::InvalidParam(format!("bad gauss parameter {arg:?}")))?;
            return Ok(Self::Gaussian { sigma_reciprocal });
        }
        if let Some(arg) = s.strip_prefix("sigmoid:") {
            let steepness: f64 = arg
                .parse()
                .map_err(|_| Error::InvalidParam(format!("bad sigmoid parameter {arg:?}")))?;
            return Ok(Self::Sigmoid { steepness });
        }
        Err(Error::InvalidParam(format!(
            "kernel spec must be rect, gauss:<recip_sigma> or sigmoid:<k>, got {s:?}"
        )))
    }
}

/// An evaluable window function.
///
/// The support is the direction-adjusted interval: `[-b, -a]` for future
/// windows, `[a, b]` for past ones, widened for the smooth shapes. A
/// continuous singular kernel is the Dirac distribution: it is never
/// sampled, convolution with it is implemented as an exact time shift.
#[derive(Debug, Clone, PartialEq)]
pub struct Kernel {
    shape: KernelShape,
    interval: TimeInterval,
    direction: Direction,
    time_kind: TimeKind,
    normalized: bool,
    support: (f64, f64),
    norm: f64,
}

impl Kernel {
    pub fn rect(
        interval: TimeInterval,
        direction: Direction,
        time_kind: TimeKind,
        normalized: bool,
    ) -> Self {
        if interval.is_singular() {
            return Self::singular(interval.lo(), direction, time_kind);
        }
        let support = directed_support(interval, direction);
        let norm = if normalized {
            match time_kind {
                TimeKind::Discrete => interval.count_discrete() as f64,
                TimeKind::Continuous => interval.length(),
            }
        } else {
            1.0
        };
        Self {
            shape: KernelShape::Rect,
            interval,
            direction,
            time_kind,
            normalized,
            support,
            norm,
        }
    }

    /// Kronecker spike (discrete) or Dirac marker (continuous) at `-a`
    /// (future) or `a` (past).
    pub fn singular(a: u32, direction: Direction, time_kind: TimeKind) -> Self {
        let interval = TimeInterval::singular(a);
        let support = directed_support(interval, direction);
        Self {
            shape: KernelShape::Singular,
            interval,
            direction,
            time_kind,
            normalized: true,
            support,
            norm: 1.0,
        }
    }

    /// Truncated Gaussian: centered on the direction-adjusted support,
    /// `sigma = 1 / sigma_reciprocal`, truncated 3 sigma beyond the nominal
    /// support and renormalized to unit mass.
    pub fn gaussian(
        interval: TimeInterval,
        direction: Direction,
        time_kind: TimeKind,
        sigma_reciprocal: f64,
    ) -> Result<Self> {
        if !(sigma_reciprocal > 0.0) {
            return Err(Error::InvalidParam(format!(
                "gaussian sigma reciprocal must be positive, got {sigma_reciprocal}"
            )));
        }
        let sigma = 1.0 / sigma_reciprocal;
        let (lo, hi) = directed_support(interval, direction);
        let support = (lo - 3.0 * sigma, hi + 3.0 * sigma);
        let mut kernel = Self {
            shape: KernelShape::Gaussian { sigma },
            interval,
            direction,
            time_kind,
            normalized: true,
            support,
            norm: 1.0,
        };
        kernel.norm = kernel.raw_mass();
        Ok(kernel)
    }

    /// Product of two logistic edges over the direction-adjusted support,
    /// widened by `4 / k` per side and renormalized to unit mass.
    pub fn sigmoid(
        interval: TimeInterval,
        direction: Direction,
        time_kind: TimeKind,
        steepness: f64,
    ) -> Result<Self> {
        if !(steepness > 0.0) {
            return Err(Error::InvalidParam(format!(
                "sigmoid steepness must be positive, got {steepness}"
            )));
        }
        let (lo, hi) = directed_support(interval, direction);
        let pad = 4.0 / steepness;
        let support = (lo - pad, hi + pad);
        let mut kernel = Self {
            shape: KernelShape::SigmoidEdge { steepness },
            interval,
            direction,
            time_kind,
            normalized: true,
            support,
            norm: 1.0,
        };
        kernel.norm = kernel.raw_mass();
        Ok(kernel)
    }

    pub fn from_spec(
        spec: KernelSpec,
        interval: TimeInterval,
        direction: Direction,
        time_kind: TimeKind,
        normalized: bool,
    ) -> Result<Self> {
        match spec {
            KernelSpec::Rect => Ok(Self::rect(interval, direction, time_kind, normalized)),
            KernelSpec::Gaussian { sigma_reciprocal } => {
                Self::gaussian(interval, direction, time_kind, sigma_reciprocal)
            }
            KernelSpec::Sigmoid { steepness } => {
                Self::sigmoid(interval, direction, time_kind, steepness)
            }
        }
    }

    pub fn shape(&self) -> KernelShape {
        self.shape
    }

    pub fn interval(&self) -> TimeInterval {
        self.interval
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn time_kind(&self) -> TimeKind {
        self.time_kind
    }

    pub fn is_smooth(&self) -> bool {
        matches!(
            self.shape,
            KernelShape::Gaussian { .. } | KernelShape::SigmoidEdge { .. }
        )
    }

    pub fn is_singular(&self) -> bool {
        self.shape == KernelShape::Singular
    }

    /// Direction-adjusted support `[lo, hi]` outside which eval is zero.
    pub fn support(&self) -> (f64, f64) {
        self.support
    }

    /// Unnormalized shape value at `t`.
    fn raw_eval(&self, t: f64) -> f64 {
        let (lo, hi) = self.support;
        if t < lo || t > hi {
            return 0.0;
        }
        match self.shape {
            KernelShape::Rect => 1.0,
            KernelShape::Singular => {
                let spike = self.support.0;
                match self.time_kind {
                    TimeKind::Discrete => (t == spike) as u8 as f64,
                    // The Dirac distribution has no pointwise value; this
                    // marks its location for symmetry checks only.
                    TimeKind::Continuous => {
                        if t == spike {
                            f64::INFINITY
                        } else {
                            0.0
                        }
                    }
                }
            }
            KernelShape::Gaussian { sigma } => {
                let (nom_lo, nom_hi) = directed_support(self.interval, self.direction);
                let mu = 0.5 * (nom_lo + nom_hi);
                numeric::gaussian_pdf(mu, sigma, t)
            }
            KernelShape::SigmoidEdge { steepness } => {
                let (nom_lo, nom_hi) = directed_support(self.interval, self.direction);
                numeric::logistic(steepness * (t - nom_lo))
                    * numeric::logistic(-steepness * (t - nom_hi))
            }
        }
    }

    /// Window value at `t` (kernel time: the lag `i - j` of the convolution).
    pub fn eval(&self, t: f64) -> f64 {
        self.raw_eval(t) / self.norm
    }

    /// Raw mass before renormalization.
    fn raw_mass(&self) -> f64 {
        match self.time_kind {
            TimeKind::Discrete => self
                .integer_support()
                .map(|t| self.raw_eval(t as f64))
                .sum(),
            TimeKind::Continuous => {
                let (lo, hi) = self.support;
                numeric::adaptive_simpson(&|t| self.raw_eval(t), lo, hi, 1e-12)
            }
        }
    }

    /// Sum (discrete) or integral (continuous, adaptive quadrature) of the
    /// kernel over its support. Singular kernels have unit mass by
    /// definition.
    pub fn mass(&self) -> f64 {
        if self.is_singular() {
            return 1.0;
        }
        match self.time_kind {
            TimeKind::Discrete => self.integer_support().map(|t| self.eval(t as f64)).sum(),
            TimeKind::Continuous => {
                let (lo, hi) = self.support;
                numeric::adaptive_simpson(&|t| self.eval(t), lo, hi, 1e-10)
            }
        }
    }

    /// Integer lags in the support, for discrete convolution.
    pub fn integer_support(&self) -> impl Iterator<Item = i64> {
        let lo = self.support.0.ceil() as i64;
        let hi = self.support.1.floor() as i64;
        lo..=hi
    }
}

fn directed_support(interval: TimeInterval, direction: Direction) -> (f64, f64) {
    let (a, b) = (interval.lo() as f64, interval.hi() as f64);
    match direction {
        Direction::Future => (-b, -a),
        Direction::Past => (a, b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: u32, b: u32) -> TimeInterval {
        TimeInterval::closed(a, b).unwrap()
    }

    #[test]
    fn rect_discrete_values() {
        let past = Kernel::rect(iv(1, 4), Direction::Past, TimeKind::Discrete, true);
        assert_eq!(past.eval(2.0), 0.25);
        assert_eq!(past.eval(0.0), 0.0);
        assert_eq!(past.eval(5.0), 0.0);
        let future = Kernel::rect(iv(1, 4), Direction::Future, TimeKind::Discrete, true);
        assert_eq!(future.eval(-3.0), 0.25);
        assert_eq!(future.eval(3.0), 0.0);
    }

    #[test]
    fn rect_mass() {
        let k = Kernel::rect(iv(1, 4), Direction::Past, TimeKind::Discrete, true);
        assert_eq!(k.mass(), 1.0);
        let raw = Kernel::rect(iv(1, 4), Direction::Past, TimeKind::Discrete, false);
        assert_eq!(raw.mass(), 4.0);
        let cont = Kernel::rect(iv(1, 4), Direction::Past, TimeKind::Continuous, true);
        assert!((cont.mass() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn gaussian_normalized_and_unimodal() {
        let k = Kernel::gaussian(iv(1, 6), Direction::Past, TimeKind::Continuous, 8.0).unwrap();
        assert!((k.mass() - 1.0).abs() < 1e-9);
        let mu = 3.5;
        let sigma = 1.0 / 8.0;
        assert!(k.eval(mu) > k.eval(mu + sigma));
        assert!(k.eval(mu) > k.eval(mu - sigma));
        assert!(Kernel::gaussian(iv(1, 6), Direction::Past, TimeKind::Continuous, 0.0).is_err());
    }

    #[test]
    fn sigmoid_normalized_and_symmetric() {
        let k = Kernel::sigmoid(iv(1, 6), Direction::Past, TimeKind::Continuous, 5.0).unwrap();
        assert!((k.mass() - 1.0).abs() < 1e-9);
        let center = 3.5;
        for d in [0.3, 1.0, 2.0] {
            assert!((k.eval(center + d) - k.eval(center - d)).abs() < 1e-12);
        }
        assert!(Kernel::sigmoid(iv(1, 6), Direction::Past, TimeKind::Continuous, -1.0).is_err());
    }

    #[test]
    fn future_past_symmetry() {
        let past = Kernel::rect(iv(1, 4), Direction::Past, TimeKind::Continuous, true);
        let future = Kernel::rect(iv(1, 4), Direction::Future, TimeKind::Continuous, true);
        for t in [-5.0, -4.0, -2.5, -1.0, 0.0, 1.0, 2.5, 4.0, 5.0] {
            assert_eq!(future.eval(-t), past.eval(t));
        }
    }

    #[test]
    fn kernel_spec_parsing() {
        assert_eq!("rect".parse::<KernelSpec>().unwrap(), KernelSpec::Rect);
        assert_eq!(
            "gauss:8".parse::<KernelSpec>().unwrap(),
            KernelSpec::Gaussian {
                sigma_reciprocal: 8.0
            }
        );
        assert_eq!(
            "sigmoid:50".parse::<KernelSpec>().unwrap(),
            KernelSpec::Sigmoid { steepness: 50.0 }
        );
        assert!("box".parse::<KernelSpec>().is_err());
    }
}
