use super::interval_set::IntervalSet;
use crate::error::{Error, Result};

/// One maximal component of a [`SatSet`]: a nonempty real interval with
/// individually open or closed endpoints. `lo == hi` with both ends closed
/// is an isolated point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Seg {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Seg {
    pub fn new(lo: f64, hi: f64, lo_closed: bool, hi_closed: bool) -> Option<Self> {
        let nonempty = lo < hi || (lo == hi && lo_closed && hi_closed);
        nonempty.then_some(Self {
            lo,
            hi,
            lo_closed,
            hi_closed,
        })
    }

    pub fn closed_open(lo: f64, hi: f64) -> Option<Self> {
        Self::new(lo, hi, true, false)
    }

    pub fn point(p: f64) -> Self {
        Self {
            lo: p,
            hi: p,
            lo_closed: true,
            hi_closed: true,
        }
    }

    pub fn contains(&self, t: f64) -> bool {
        let above = if self.lo_closed { t >= self.lo } else { t > self.lo };
        let below = if self.hi_closed { t <= self.hi } else { t < self.hi };
        above && below
    }

    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    /// Tighter of two lower bounds (greater value; open beats closed on ties).
    fn max_lo(a: (f64, bool), b: (f64, bool)) -> (f64, bool) {
        if a.0 > b.0 {
            a
        } else if b.0 > a.0 {
            b
        } else {
            (a.0, a.1 && b.1)
        }
    }

    /// Tighter of two upper bounds (smaller value; open beats closed on ties).
    fn min_hi(a: (f64, bool), b: (f64, bool)) -> (f64, bool) {
        if a.0 < b.0 {
            a
        } else if b.0 < a.0 {
            b
        } else {
            (a.0, a.1 && b.1)
        }
    }

    pub fn intersect(&self, other: &Seg) -> Option<Seg> {
        let (lo, lo_closed) = Self::max_lo((self.lo, self.lo_closed), (other.lo, other.lo_closed));
        let (hi, hi_closed) = Self::min_hi((self.hi, self.hi_closed), (other.hi, other.hi_closed));
        Seg::new(lo, hi, lo_closed, hi_closed)
    }

    /// True when the union of two segments (self left of or equal to other)
    /// is a single interval.
    fn connects(&self, next: &Seg) -> bool {
        next.lo < self.hi || (next.lo == self.hi && (self.hi_closed || next.lo_closed))
    }
}

/// A finite union of real intervals inside `[0, domain_end)`, each endpoint
/// independently open or closed.
///
/// Continuous-time satisfaction sets live here. Atomic propositions are
/// cadlag (`[lo, hi)` only, see [`IntervalSet`]), but until/since produce
/// right-closed components and negation then produces left-open ones, so
/// the evaluators need the general form. [`SatSet::cadlag_parts`] projects
/// back onto the `[lo, hi)`-plus-isolated-points view.
#[derive(Debug, Clone, PartialEq)]
pub struct SatSet {
    segs: Vec<Seg>,
    domain_end: f64,
}

impl SatSet {
    pub fn empty(domain_end: f64) -> Self {
        Self {
            segs: Vec::new(),
            domain_end,
        }
    }

    /// The whole domain `[0, domain_end)`.
    pub fn full(domain_end: f64) -> Self {
        Self {
            segs: vec![Seg {
                lo: 0.0,
                hi: domain_end,
                lo_closed: true,
                hi_closed: false,
            }],
            domain_end,
        }
    }

    /// Normalizes raw segments: clips to the domain, sorts, merges
    /// overlapping and touching components.
    pub fn from_segments(segs: Vec<Seg>, domain_end: f64) -> Self {
        let domain = Seg {
            lo: 0.0,
            hi: domain_end,
            lo_closed: true,
            hi_closed: false,
        };
        let mut clipped: Vec<Seg> = segs
            .into_iter()
            .filter_map(|s| s.intersect(&domain))
            .collect();
        clipped.sort_by(|a, b| {
            (a.lo, !a.lo_closed)
                .partial_cmp(&(b.lo, !b.lo_closed))
                .expect("finite endpoints")
        });
        let mut merged: Vec<Seg> = Vec::with_capacity(clipped.len());
        for seg in clipped {
            match merged.last_mut() {
                Some(last) if last.connects(&seg) => {
                    let (hi, hi_closed) = if seg.hi > last.hi
                        || (seg.hi == last.hi && (seg.hi_closed || last.hi_closed))
                    {
                        if seg.hi > last.hi {
                            (seg.hi, seg.hi_closed)
                        } else {
                            (seg.hi, seg.hi_closed || last.hi_closed)
                        }
                    } else {
                        (last.hi, last.hi_closed)
                    };
                    last.hi = hi;
                    last.hi_closed = hi_closed;
                }
                _ => merged.push(seg),
            }
        }
        Self {
            segs: merged,
            domain_end,
        }
    }

    pub fn from_interval_set(set: &IntervalSet) -> Self {
        Self {
            segs: set
                .intervals()
                .iter()
                .filter_map(|&(lo, hi)| Seg::closed_open(lo, hi))
                .collect(),
            domain_end: set.domain_end(),
        }
    }

    pub fn segments(&self) -> &[Seg] {
        &self.segs
    }

    pub fn domain_end(&self) -> f64 {
        self.domain_end
    }

    pub fn is_empty(&self) -> bool {
        self.segs.is_empty()
    }

    pub fn contains(&self, t: f64) -> bool {
        self.segs.iter().any(|s| s.contains(t))
    }

    /// Total length (endpoint flags carry no measure).
    pub fn measure(&self) -> f64 {
        self.segs.iter().map(Seg::len).sum()
    }

    /// Length of the overlap with the closed window `[lo, hi]`.
    pub fn measure_within(&self, lo: f64, hi: f64) -> f64 {
        self.segs
            .iter()
            .map(|s| (s.hi.min(hi) - s.lo.max(lo)).max(0.0))
            .sum()
    }

    /// True when the open interval `(lo, hi)` is covered by the set.
    /// An empty open interval (`lo >= hi`) is covered vacuously.
    pub fn covers_open(&self, lo: f64, hi: f64) -> bool {
        if lo >= hi {
            return true;
        }
        // A single component must span it: components are maximal, so a
        // covered open interval cannot straddle a gap.
        self.segs.iter().any(|s| s.lo <= lo && hi <= s.hi)
    }

    pub fn complement(&self) -> Self {
        let mut out = Vec::with_capacity(self.segs.len() + 1);
        let mut cursor = (0.0, true);
        for seg in &self.segs {
            if let Some(gap) = Seg::new(cursor.0, seg.lo, cursor.1, !seg.lo_closed) {
                out.push(gap);
            }
            cursor = (seg.hi, !seg.hi_closed);
        }
        if let Some(gap) = Seg::new(cursor.0, self.domain_end, cursor.1, false) {
            out.push(gap);
        }
        Self {
            segs: out,
            domain_end: self.domain_end,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.domain_end, other.domain_end);
        let mut segs = self.segs.clone();
        segs.extend_from_slice(&other.segs);
        Self::from_segments(segs, self.domain_end)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        debug_assert_eq!(self.domain_end, other.domain_end);
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.segs.len() && j < other.segs.len() {
            let (a, b) = (self.segs[i], other.segs[j]);
            if let Some(seg) = a.intersect(&b) {
                out.push(seg);
            }
            if (a.hi, a.hi_closed as u8) <= (b.hi, b.hi_closed as u8) {
                i += 1;
            } else {
                j += 1;
            }
        }
        Self {
            segs: out,
            domain_end: self.domain_end,
        }
    }

    /// `{t : [t+a, t+b] meets the set}` for a closed future window,
    /// `0 <= a <= b`. With `a == b` this is an exact backward shift.
    pub fn dilate_future(&self, a: f64, b: f64) -> Self {
        let segs = self
            .segs
            .iter()
            .filter_map(|s| Seg::new(s.lo - b, s.hi - a, s.lo_closed, s.hi_closed))
            .collect();
        Self::from_segments(segs, self.domain_end)
    }

    /// `{t : [t-b, t-a] meets the set}` for a closed past window.
    pub fn dilate_past(&self, a: f64, b: f64) -> Self {
        let segs = self
            .segs
            .iter()
            .filter_map(|s| Seg::new(s.lo + a, s.hi + b, s.lo_closed, s.hi_closed))
            .collect();
        Self::from_segments(segs, self.domain_end)
    }

    /// Projection onto the cadlag representation: `[lo, hi)` intervals,
    /// plus isolated satisfaction points (right endpoints of right-closed
    /// components and degenerate components), plus excluded points (left
    /// endpoints of left-open components, which arise only for formulas
    /// like a negated until whose satisfaction set is not cadlag).
    pub fn cadlag_parts(&self) -> CadlagParts {
        let mut intervals = Vec::new();
        let mut isolated = Vec::new();
        let mut excluded = Vec::new();
        for seg in &self.segs {
            if seg.lo == seg.hi {
                isolated.push(seg.lo);
                continue;
            }
            intervals.push((seg.lo, seg.hi));
            if seg.hi_closed {
                isolated.push(seg.hi);
            }
            if !seg.lo_closed {
                excluded.push(seg.lo);
            }
        }
        CadlagParts {
            intervals,
            isolated,
            excluded,
        }
    }

    /// Converts to a plain [`IntervalSet`] when the set is exactly cadlag.
    pub fn to_interval_set(&self) -> Result<IntervalSet> {
        let parts = self.cadlag_parts();
        if !parts.isolated.is_empty() || !parts.excluded.is_empty() {
            return Err(Error::Domain(
                "satisfaction set is not cadlag: isolated or excluded points present".into(),
            ));
        }
        IntervalSet::new(parts.intervals, self.domain_end)
    }
}

/// The `[lo, hi)`-plus-point-defects view of a [`SatSet`].
#[derive(Debug, Clone, PartialEq)]
pub struct CadlagParts {
    pub intervals: Vec<(f64, f64)>,
    pub isolated: Vec<f64>,
    pub excluded: Vec<f64>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn co(lo: f64, hi: f64) -> Seg {
        Seg::closed_open(lo, hi).unwrap()
    }

    #[test]
    fn normalize_merges_touching() {
        let s = SatSet::from_segments(vec![co(0.0, 2.0), co(2.0, 4.0)], 10.0);
        assert_eq!(s.segments(), &[co(0.0, 4.0)]);
        // A closed right end glues a point onto a half-open segment.
        let s = SatSet::from_segments(vec![co(0.0, 2.0), Seg::point(2.0)], 10.0);
        assert_eq!(s.segments(), &[Seg::new(0.0, 2.0, true, true).unwrap()]);
        // An open/open junction leaves the shared point out.
        let s = SatSet::from_segments(
            vec![co(0.0, 2.0), Seg::new(2.0, 4.0, false, false).unwrap()],
            10.0,
        );
        assert_eq!(s.segments().len(), 2);
    }

    #[test]
    fn complement_tracks_flags() {
        let s = SatSet::from_segments(vec![Seg::new(2.0, 3.0, true, true).unwrap()], 10.0);
        let c = s.complement();
        assert_eq!(
            c.segments(),
            &[
                co(0.0, 2.0),
                Seg::new(3.0, 10.0, false, false).unwrap()
            ]
        );
        assert_eq!(c.complement(), s);

        let pt = SatSet::from_segments(vec![Seg::point(2.0)], 5.0);
        let c = pt.complement();
        assert!(!c.contains(2.0));
        assert!(c.contains(1.999999));
        assert!(c.contains(2.000001));
        assert_eq!(c.complement(), pt);
    }

    #[test]
    fn dilation_is_window_overlap() {
        // {t : [t-3, t-2] meets [2, 6)} = [4, 9)
        let s = SatSet::from_segments(vec![co(2.0, 6.0)], 12.0);
        let d = s.dilate_past(2.0, 3.0);
        assert_eq!(d.segments(), &[co(4.0, 9.0)]);
        // Degenerate window = shift.
        let d = s.dilate_past(2.0, 2.0);
        assert_eq!(d.segments(), &[co(4.0, 8.0)]);
        // Future direction mirrors.
        let d = s.dilate_future(2.0, 3.0);
        assert_eq!(d.segments(), &[co(0.0, 4.0)]);
    }

    #[test]
    fn covers_open_respects_gaps() {
        let s = SatSet::from_segments(vec![co(0.0, 2.0), co(3.0, 5.0)], 10.0);
        assert!(s.covers_open(0.0, 2.0));
        assert!(s.covers_open(3.0, 5.0));
        assert!(!s.covers_open(1.0, 4.0));
        assert!(s.covers_open(4.0, 4.0));
        // The open interval (0, 2) is covered even by the open set (0, 2).
        let open = SatSet::from_segments(vec![Seg::new(0.0, 2.0, false, false).unwrap()], 10.0);
        assert!(open.covers_open(0.0, 2.0));
    }

    #[test]
    fn cadlag_projection() {
        let s = SatSet::from_segments(
            vec![Seg::new(2.0, 3.0, true, true).unwrap(), Seg::point(5.0)],
            10.0,
        );
        let parts = s.cadlag_parts();
        assert_eq!(parts.intervals, vec![(2.0, 3.0)]);
        assert_eq!(parts.isolated, vec![3.0, 5.0]);
        assert!(parts.excluded.is_empty());
        assert!(s.to_interval_set().is_err());

        let plain = SatSet::from_segments(vec![co(1.0, 4.0)], 10.0);
        assert_eq!(plain.to_interval_set().unwrap().intervals(), &[(1.0, 4.0)]);
    }
}
