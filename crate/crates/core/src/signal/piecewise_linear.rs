use super::sat_set::SatSet;
use crate::error::{Error, Result};

/// A real-valued function on `[0, domain_end]` given by breakpoints with
/// linear interpolation between them, constant before the first and after
/// the last knot.
///
/// Knot times are non-decreasing. A jump discontinuity is encoded as two
/// knots at the same time, left value first; `value_at` returns the right
/// (cadlag) value there. This is what makes step-shaped outputs exact.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinear {
    knots: Vec<(f64, f64)>,
    domain_end: f64,
}

impl PiecewiseLinear {
    pub fn new(knots: Vec<(f64, f64)>, domain_end: f64) -> Result<Self> {
        if knots.is_empty() {
            return Err(Error::Domain("piecewise linear needs at least one knot".into()));
        }
        let mut run = 1usize;
        for w in knots.windows(2) {
            if !(w[0].0 <= w[1].0) {
                return Err(Error::Domain(format!(
                    "knot times not sorted: {} then {}",
                    w[0].0, w[1].0
                )));
            }
            run = if w[0].0 == w[1].0 { run + 1 } else { 1 };
            if run > 2 {
                return Err(Error::Domain(format!(
                    "more than two knots at time {}",
                    w[0].0
                )));
            }
        }
        let (first, last) = (knots[0].0, knots[knots.len() - 1].0);
        if first < 0.0 || last > domain_end {
            return Err(Error::Domain(format!(
                "knots [{first},{last}] outside [0,{domain_end}]"
            )));
        }
        Ok(Self { knots, domain_end })
    }

    pub fn constant(v: f64, domain_end: f64) -> Self {
        Self {
            knots: vec![(0.0, v)],
            domain_end,
        }
    }

    pub fn knots(&self) -> &[(f64, f64)] {
        &self.knots
    }

    pub fn domain_end(&self) -> f64 {
        self.domain_end
    }

    pub fn value_at(&self, t: f64) -> Result<f64> {
        if t < 0.0 || t > self.domain_end {
            return Err(Error::OutOfDomain {
                t,
                domain_end: self.domain_end,
            });
        }
        let k = &self.knots;
        if t < k[0].0 {
            return Ok(k[0].1);
        }
        if t >= k[k.len() - 1].0 {
            return Ok(k[k.len() - 1].1);
        }
        // Last knot with time <= t: at duplicated times this lands on the
        // second (right) knot, giving the cadlag value.
        let idx = k.partition_point(|&(kt, _)| kt <= t) - 1;
        let (t0, v0) = k[idx];
        let (t1, v1) = k[idx + 1];
        if t == t0 || t1 == t0 {
            return Ok(v0);
        }
        Ok(v0 + (v1 - v0) * (t - t0) / (t1 - t0))
    }

    /// Embeds a crisp satisfaction set as a 0/1 step function.
    ///
    /// Isolated points and endpoint-openness carry no width and are dropped;
    /// the embedded function is the right-continuous version of the
    /// indicator. PNF satisfaction sets have no left-open components, so
    /// the dropped defects only ever shrink the support.
    pub fn step_from_sat(sat: &SatSet) -> Self {
        let parts = sat.cadlag_parts();
        debug_assert!(parts.excluded.is_empty(), "left-open set in step embedding");
        let mut knots: Vec<(f64, f64)> = vec![(0.0, 0.0)];
        for (lo, hi) in parts.intervals {
            jump_to(&mut knots, lo, 1.0);
            jump_to(&mut knots, hi, 0.0);
        }
        // Drop a trailing jump scheduled exactly at the domain end.
        while knots.len() >= 2 && knots[knots.len() - 1].0 >= sat.domain_end() {
            knots.pop();
        }
        Self {
            knots,
            domain_end: sat.domain_end(),
        }
    }

    /// Samples onto a uniform grid (always includes t = 0).
    pub fn sample(&self, step: f64) -> Vec<(f64, f64)> {
        let mut out = Vec::new();
        let mut i = 0u64;
        loop {
            let t = i as f64 * step;
            if t >= self.domain_end {
                break;
            }
            out.push((t, self.value_at(t).expect("grid point in domain")));
            i += 1;
        }
        out
    }
}

fn jump_to(knots: &mut Vec<(f64, f64)>, t: f64, v: f64) {
    let last = *knots.last().expect("nonempty");
    if last.1 == v {
        return;
    }
    if last.0 == t {
        if knots.len() == 1 {
            // Jump exactly at the start: no left limb to keep.
            knots[0] = (t, v);
        } else {
            knots.push((t, v));
        }
    } else {
        knots.push((t, last.1));
        knots.push((t, v));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signal::sat_set::Seg;

    #[test]
    fn linear_interpolation() {
        let f = PiecewiseLinear::new(vec![(0.0, 0.0), (2.0, 1.0)], 4.0).unwrap();
        assert_eq!(f.value_at(1.0).unwrap(), 0.5);
        assert_eq!(f.value_at(0.0).unwrap(), 0.0);
        assert_eq!(f.value_at(2.0).unwrap(), 1.0);
        // Constant after the last knot.
        assert_eq!(f.value_at(3.5).unwrap(), 1.0);
        assert!(f.value_at(4.5).is_err());
    }

    #[test]
    fn jumps_are_right_continuous() {
        let f = PiecewiseLinear::new(
            vec![(0.0, 0.0), (2.0, 0.0), (2.0, 1.0), (5.0, 1.0), (5.0, 0.0)],
            8.0,
        )
        .unwrap();
        assert_eq!(f.value_at(1.9999).unwrap(), 0.0);
        assert_eq!(f.value_at(2.0).unwrap(), 1.0);
        assert_eq!(f.value_at(3.0).unwrap(), 1.0);
        assert_eq!(f.value_at(5.0).unwrap(), 0.0);
    }

    #[test]
    fn step_embedding_matches_set() {
        let sat = SatSet::from_segments(
            vec![Seg::closed_open(2.0, 5.0).unwrap()],
            10.0,
        );
        let f = PiecewiseLinear::step_from_sat(&sat);
        for t in [0.0, 1.99, 2.0, 3.0, 4.999, 5.0, 9.0] {
            let expect = if sat.contains(t) { 1.0 } else { 0.0 };
            assert_eq!(f.value_at(t).unwrap(), expect, "at {t}");
        }
    }

    #[test]
    fn rejects_malformed_knots() {
        assert!(PiecewiseLinear::new(vec![], 4.0).is_err());
        assert!(PiecewiseLinear::new(vec![(1.0, 0.0), (0.5, 1.0)], 4.0).is_err());
        assert!(
            PiecewiseLinear::new(vec![(1.0, 0.0), (1.0, 0.5), (1.0, 1.0)], 4.0).is_err()
        );
        assert!(PiecewiseLinear::new(vec![(0.0, 0.0), (5.0, 1.0)], 4.0).is_err());
    }
}
