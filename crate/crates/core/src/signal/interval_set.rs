use crate::error::{Error, Result};

/// Satisfaction set of a continuous-time proposition: a finite union of
/// left-closed right-open intervals `[lo, hi)` inside the signal domain
/// `[0, domain_end)`.
///
/// The representation is always normalized: intervals are sorted by `lo`,
/// pairwise disjoint and non-adjacent. Right-open segments make the signal
/// cadlag by construction; isolated points are unrepresentable.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalSet {
    intervals: Vec<(f64, f64)>,
    domain_end: f64,
}

impl IntervalSet {
    /// Builds a normalized set from raw `[lo, hi)` pairs.
    ///
    /// Pairs may arrive unsorted; adjacent pairs are merged. Overlapping
    /// pairs, inverted pairs and pairs outside `[0, domain_end)` are
    /// rejected with `Error::Domain`.
    pub fn new(mut intervals: Vec<(f64, f64)>, domain_end: f64) -> Result<Self> {
        if !(domain_end > 0.0) || !domain_end.is_finite() {
            return Err(Error::Domain(format!(
                "domain end must be positive and finite, got {domain_end}"
            )));
        }
        for &(lo, hi) in &intervals {
            if !lo.is_finite() || !hi.is_finite() {
                return Err(Error::Domain("non-finite interval endpoint".into()));
            }
            if lo >= hi {
                return Err(Error::Domain(format!(
                    "interval [{lo},{hi}) has lower bound >= upper bound"
                )));
            }
            if lo < 0.0 || hi > domain_end {
                return Err(Error::Domain(format!(
                    "interval [{lo},{hi}) outside domain [0,{domain_end})"
                )));
            }
        }
        intervals.sort_by(|a, b| a.partial_cmp(b).expect("finite endpoints"));
        for w in intervals.windows(2) {
            if w[1].0 < w[0].1 {
                return Err(Error::Domain(format!(
                    "intervals [{},{}) and [{},{}) overlap",
                    w[0].0, w[0].1, w[1].0, w[1].1
                )));
            }
        }
        // Merge exactly-adjacent segments so the invariant holds.
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(intervals.len());
        for (lo, hi) in intervals {
            match merged.last_mut() {
                Some(last) if last.1 == lo => last.1 = hi,
                _ => merged.push((lo, hi)),
            }
        }
        Ok(Self {
            intervals: merged,
            domain_end,
        })
    }

    /// The empty set over `[0, domain_end)`.
    pub fn empty(domain_end: f64) -> Self {
        Self {
            intervals: Vec::new(),
            domain_end,
        }
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }

    pub fn domain_end(&self) -> f64 {
        self.domain_end
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Total length of all segments.
    pub fn measure(&self) -> f64 {
        self.intervals.iter().map(|(lo, hi)| hi - lo).sum()
    }

    /// Membership test; `[lo, hi)` segments make this right-continuous.
    pub fn contains(&self, t: f64) -> bool {
        self.intervals.iter().any(|&(lo, hi)| lo <= t && t < hi)
    }

    /// Value of the indicator signal at `t`.
    pub fn value_at(&self, t: f64) -> Result<f64> {
        if t < 0.0 || t >= self.domain_end {
            return Err(Error::OutOfDomain {
                t,
                domain_end: self.domain_end,
            });
        }
        Ok(if self.contains(t) { 1.0 } else { 0.0 })
    }

    /// `[0, domain_end) \ self`.
    pub fn complement(&self) -> Self {
        let mut out = Vec::with_capacity(self.intervals.len() + 1);
        let mut cursor = 0.0;
        for &(lo, hi) in &self.intervals {
            if cursor < lo {
                out.push((cursor, lo));
            }
            cursor = hi;
        }
        if cursor < self.domain_end {
            out.push((cursor, self.domain_end));
        }
        Self {
            intervals: out,
            domain_end: self.domain_end,
        }
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_domain(other)?;
        let mut all: Vec<(f64, f64)> = self
            .intervals
            .iter()
            .chain(other.intervals.iter())
            .copied()
            .collect();
        all.sort_by(|a, b| a.partial_cmp(b).expect("finite endpoints"));
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(all.len());
        for (lo, hi) in all {
            match merged.last_mut() {
                Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
                _ => merged.push((lo, hi)),
            }
        }
        Ok(Self {
            intervals: merged,
            domain_end: self.domain_end,
        })
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_domain(other)?;
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.intervals.len() && j < other.intervals.len() {
            let a = self.intervals[i];
            let b = other.intervals[j];
            let lo = a.0.max(b.0);
            let hi = a.1.min(b.1);
            if lo < hi {
                out.push((lo, hi));
            }
            if a.1 <= b.1 {
                i += 1;
            } else {
                j += 1;
            }
        }
        Ok(Self {
            intervals: out,
            domain_end: self.domain_end,
        })
    }

    fn check_domain(&self, other: &Self) -> Result<()> {
        if self.domain_end != other.domain_end {
            return Err(Error::DomainMismatch(format!(
                "domain ends {} and {}",
                self.domain_end, other.domain_end
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(iv: &[(f64, f64)], t: f64) -> IntervalSet {
        IntervalSet::new(iv.to_vec(), t).unwrap()
    }

    #[test]
    fn complement_basic() {
        let s = set(&[(2.0, 6.0)], 12.0);
        assert_eq!(s.complement().intervals(), &[(0.0, 2.0), (6.0, 12.0)]);
        let empty = IntervalSet::empty(5.0);
        assert_eq!(empty.complement().intervals(), &[(0.0, 5.0)]);
        let full = set(&[(0.0, 12.0)], 12.0);
        assert!(full.complement().is_empty());
        assert_eq!(s.complement().complement(), s);
    }

    #[test]
    fn union_merges_adjacent() {
        let a = set(&[(0.0, 2.0)], 6.0);
        let b = set(&[(2.0, 4.0)], 6.0);
        assert_eq!(a.union(&b).unwrap().intervals(), &[(0.0, 4.0)]);
    }

    #[test]
    fn intersect_basic() {
        let a = set(&[(0.0, 3.0)], 6.0);
        let b = set(&[(2.0, 5.0)], 6.0);
        assert_eq!(a.intersect(&b).unwrap().intervals(), &[(2.0, 3.0)]);
        let c = set(&[(0.0, 1.0)], 6.0);
        let d = set(&[(2.0, 3.0)], 6.0);
        assert!(c.intersect(&d).unwrap().is_empty());
    }

    #[test]
    fn boundaries_are_left_closed_right_open() {
        let s = set(&[(2.0, 6.0)], 12.0);
        assert_eq!(s.value_at(2.0).unwrap(), 1.0);
        assert_eq!(s.value_at(6.0).unwrap(), 0.0);
        assert!(s.value_at(12.0).is_err());
    }

    #[test]
    fn rejects_inverted_and_overlapping() {
        assert!(IntervalSet::new(vec![(5.0, 3.0)], 12.0).is_err());
        assert!(IntervalSet::new(vec![(0.0, 3.0), (2.0, 5.0)], 12.0).is_err());
        assert!(IntervalSet::new(vec![(0.0, 13.0)], 12.0).is_err());
    }

    #[test]
    fn domain_mismatch_detected() {
        let a = set(&[(0.0, 1.0)], 6.0);
        let b = set(&[(0.0, 1.0)], 7.0);
        assert!(matches!(a.union(&b), Err(Error::DomainMismatch(_))));
    }
}
