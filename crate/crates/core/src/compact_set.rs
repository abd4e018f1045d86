//! Compact subsets of the real line, stored as a canonical finite union of
//! disjoint closed intervals.
//!
//! Points are degenerate intervals. Every constructor goes through
//! [`CompactSet::normalize`], so two sets compare equal exactly when their
//! interval lists are identical.
//!
//! The textual literal is `[lo,hi] u [lo,hi] u {p1,p2}`:
//!
//! ```
//! use svfrac::CompactSet;
//! let a: CompactSet = "[0,1] u {3,4}".parse().unwrap();
//! assert_eq!(a.to_string(), "[0,1] u {3} u {4}");
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Gaps of at most this width are fused during normalization.
pub const DEFAULT_MERGE_EPS: f64 = 1e-12;

/// Largest prefractal level produced by [`cantor_prefractal`].
pub const DEFAULT_MAX_CANTOR_LEVEL: u32 = 20;

/// A closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "interval [{lo}, {hi}] is reversed");
        Interval { lo, hi }
    }

    pub fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    /// Image under `x -> s * x + t`.
    pub fn affine(&self, s: f64, t: f64) -> Interval {
        let a = s * self.lo + t;
        let b = s * self.hi + t;
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    /// Minkowski sum of two intervals.
    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo + other.lo,
            hi: self.hi + other.hi,
        }
    }
}

/// A query inside the gap `(h, l)` at distances `dl` (to `h`) and `dr` (to
/// `l`) is a tie when the two differ by rounding only. Gap midpoints of
/// rational sets such as `(1/3, 2/3)` are not exactly representable.
fn is_tie(h: f64, l: f64, dl: f64, dr: f64) -> bool {
    let scale = h.abs().max(l.abs()).max(l - h);
    (dl - dr).abs() <= 4.0 * f64::EPSILON * scale
}

/// Canonical finite union of disjoint closed intervals.
#[derive(Debug, Clone, PartialEq)]
pub struct CompactSet {
    intervals: Vec<Interval>,
}

/// The points of `B` nearest to a query, together with their distance.
#[derive(Debug, Clone, PartialEq)]
pub struct NearestResult {
    pub points: Vec<f64>,
    pub distance: f64,
}

impl CompactSet {
    /// Builds the canonical set covering the union of `raw`, fusing gaps up
    /// to [`DEFAULT_MERGE_EPS`].
    pub fn normalize(raw: &[(f64, f64)]) -> Result<CompactSet> {
        Self::normalize_with(raw, DEFAULT_MERGE_EPS)
    }

    pub fn normalize_with(raw: &[(f64, f64)], merge_eps: f64) -> Result<CompactSet> {
        let mut ivs = Vec::with_capacity(raw.len());
        for &(lo, hi) in raw {
            if !lo.is_finite() || !hi.is_finite() || lo > hi {
                return Err(Error::InvalidEndpoint { lo, hi });
            }
            ivs.push(Interval { lo, hi });
        }
        Self::from_intervals_with(ivs, merge_eps)
    }

    pub fn from_intervals(ivs: Vec<Interval>) -> Result<CompactSet> {
        Self::from_intervals_with(ivs, DEFAULT_MERGE_EPS)
    }

    pub fn from_intervals_with(mut ivs: Vec<Interval>, merge_eps: f64) -> Result<CompactSet> {
        if ivs.is_empty() {
            return Err(Error::EmptySet);
        }
        for iv in &ivs {
            if !iv.lo.is_finite() || !iv.hi.is_finite() || iv.lo > iv.hi {
                return Err(Error::InvalidEndpoint {
                    lo: iv.lo,
                    hi: iv.hi,
                });
            }
        }
        ivs.sort_unstable_by(|a, b| a.lo.total_cmp(&b.lo).then(a.hi.total_cmp(&b.hi)));
        let mut out: Vec<Interval> = Vec::with_capacity(ivs.len());
        for iv in ivs {
            match out.last_mut() {
                Some(last) if iv.lo - last.hi <= merge_eps => {
                    if iv.hi > last.hi {
                        last.hi = iv.hi;
                    }
                }
                _ => out.push(iv),
            }
        }
        Ok(CompactSet { intervals: out })
    }

    /// Internal constructor for results that are already finite and nonempty.
    pub(crate) fn from_parts(ivs: Vec<Interval>) -> CompactSet {
        Self::from_intervals(ivs).expect("nonempty finite intervals")
    }

    pub fn interval(lo: f64, hi: f64) -> Result<CompactSet> {
        Self::normalize(&[(lo, hi)])
    }

    pub fn singleton(x: f64) -> Result<CompactSet> {
        Self::normalize(&[(x, x)])
    }

    pub fn points(xs: &[f64]) -> Result<CompactSet> {
        let raw: Vec<_> = xs.iter().map(|&x| (x, x)).collect();
        Self::normalize(&raw)
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min(&self) -> f64 {
        self.intervals[0].lo
    }

    pub fn max(&self) -> f64 {
        self.intervals[self.intervals.len() - 1].hi
    }

    pub fn hull(&self) -> Interval {
        Interval::new(self.min(), self.max())
    }

    /// True when the set is a single (possibly degenerate) interval.
    pub fn is_interval(&self) -> bool {
        self.intervals.len() == 1
    }

    /// True when every component is a point.
    pub fn is_finite(&self) -> bool {
        self.intervals.iter().all(Interval::is_point)
    }

    pub fn point_values(&self) -> Option<Vec<f64>> {
        self.is_finite()
            .then(|| self.intervals.iter().map(|iv| iv.lo).collect())
    }

    pub fn contains(&self, x: f64) -> bool {
        let i = self.intervals.partition_point(|iv| iv.hi < x);
        i < self.intervals.len() && self.intervals[i].lo <= x
    }

    /// Iterator over the open gaps `(hi_i, lo_{i+1})`.
    pub fn gaps(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.intervals.windows(2).map(|w| (w[0].hi, w[1].lo))
    }

    /// The components of `self` clipped to `window`.
    pub fn clip(&self, window: &Interval) -> Vec<Interval> {
        let start = self.intervals.partition_point(|iv| iv.hi < window.lo);
        self.intervals[start..]
            .iter()
            .take_while(|iv| iv.lo <= window.hi)
            .filter_map(|iv| iv.intersect(window))
            .collect()
    }

    /// `D(a, B) = min_{b in B} |a - b|`.
    pub fn dist_point(&self, a: f64) -> f64 {
        let ivs = &self.intervals;
        let i = ivs.partition_point(|iv| iv.hi < a);
        if i < ivs.len() && ivs[i].lo <= a {
            return 0.0;
        }
        let right = ivs.get(i).map(|iv| iv.lo - a);
        let left = i.checked_sub(1).map(|j| a - ivs[j].hi);
        match (left, right) {
            (Some(l), Some(r)) => {
                if is_tie(ivs[i - 1].hi, ivs[i].lo, l, r) {
                    0.5 * (ivs[i].lo - ivs[i - 1].hi)
                } else {
                    l.min(r)
                }
            }
            (Some(l), None) => l,
            (None, Some(r)) => r,
            (None, None) => unreachable!("canonical sets are nonempty"),
        }
    }

    /// All points of the set nearest to `a`; two points only on an exact tie.
    pub fn nearest_points(&self, a: f64) -> NearestResult {
        let ivs = &self.intervals;
        let i = ivs.partition_point(|iv| iv.hi < a);
        if i < ivs.len() && ivs[i].lo <= a {
            return NearestResult {
                points: vec![a],
                distance: 0.0,
            };
        }
        let right = ivs.get(i).map(|iv| (iv.lo, iv.lo - a));
        let left = i.checked_sub(1).map(|j| (ivs[j].hi, a - ivs[j].hi));
        match (left, right) {
            (Some((lp, ld)), Some((rp, rd))) => {
                if is_tie(lp, rp, ld, rd) {
                    NearestResult {
                        points: vec![lp, rp],
                        distance: 0.5 * (rp - lp),
                    }
                } else if ld < rd {
                    NearestResult {
                        points: vec![lp],
                        distance: ld,
                    }
                } else if rd < ld {
                    NearestResult {
                        points: vec![rp],
                        distance: rd,
                    }
                } else {
                    NearestResult {
                        points: vec![lp, rp],
                        distance: 0.5 * (rp - lp),
                    }
                }
            }
            (Some((p, d)), None) | (None, Some((p, d))) => NearestResult {
                points: vec![p],
                distance: d,
            },
            (None, None) => unreachable!("canonical sets are nonempty"),
        }
    }

    /// `max_{a in self} D(a, other)`, evaluated exactly: the distance
    /// function is piecewise linear, so its maximum over a component sits at
    /// a component endpoint or at a gap midpoint of `other`.
    pub fn directed_hausdorff(&self, other: &CompactSet) -> f64 {
        let gaps: Vec<(f64, f64)> = other.gaps().collect();
        let mids: Vec<f64> = gaps.iter().map(|&(h, l)| 0.5 * (h + l)).collect();
        let mut best = 0.0f64;
        for iv in &self.intervals {
            best = best.max(other.dist_point(iv.lo));
            best = best.max(other.dist_point(iv.hi));
            let start = mids.partition_point(|&m| m < iv.lo);
            for (k, &m) in mids.iter().enumerate().skip(start) {
                if m > iv.hi {
                    break;
                }
                let (h, l) = gaps[k];
                best = best.max(0.5 * (l - h));
            }
        }
        best
    }

    /// Hausdorff distance.
    pub fn hausdorff(&self, other: &CompactSet) -> f64 {
        self.directed_hausdorff(other)
            .max(other.directed_hausdorff(self))
    }

    /// `{lambda * a : a in self}`; `lambda = 0` gives `{0}`.
    pub fn scale(&self, lambda: f64) -> CompactSet {
        if lambda == 0.0 {
            return CompactSet {
                intervals: vec![Interval::point(0.0)],
            };
        }
        let ivs = self
            .intervals
            .iter()
            .map(|iv| iv.affine(lambda, 0.0))
            .collect();
        CompactSet::from_parts(ivs)
    }

    pub fn translate(&self, t: f64) -> CompactSet {
        let ivs = self.intervals.iter().map(|iv| iv.affine(1.0, t)).collect();
        CompactSet::from_parts(ivs)
    }

    /// Minkowski sum `{a + b}`.
    pub fn minkowski_sum(&self, other: &CompactSet) -> CompactSet {
        let mut ivs = Vec::with_capacity(self.len() * other.len());
        for a in &self.intervals {
            for b in &other.intervals {
                ivs.push(a.add(b));
            }
        }
        CompactSet::from_parts(ivs)
    }

    /// `sup_{x, y} |x - y|`.
    pub fn diameter(&self) -> f64 {
        self.max() - self.min()
    }

    /// `sup_x |x|`, the distance to `{0}`.
    pub fn norm(&self) -> f64 {
        self.min().abs().max(self.max().abs())
    }

    /// Union of two sets.
    pub fn union(&self, other: &CompactSet) -> CompactSet {
        let mut ivs = self.intervals.clone();
        ivs.extend_from_slice(&other.intervals);
        CompactSet::from_parts(ivs)
    }
}

/// Level-`k` middle-thirds prefractal on `[0, 1]`: `2^k` intervals of length
/// `3^-k`. It contains the Cantor set and lies within Hausdorff distance
/// `3^-k` of it.
pub fn cantor_prefractal(k: u32) -> Result<CompactSet> {
    cantor_prefractal_capped(k, DEFAULT_MAX_CANTOR_LEVEL)
}

pub fn cantor_prefractal_capped(k: u32, max_level: u32) -> Result<CompactSet> {
    if k > max_level || k > 33 {
        return Err(Error::LevelOverflow {
            level: k,
            max: max_level.min(33),
        });
    }
    let denom = 3u64.pow(k) as f64;
    let mut starts: Vec<u64> = vec![0];
    for _ in 0..k {
        starts = starts
            .iter()
            .flat_map(|&s| [3 * s, 3 * s + 2])
            .collect();
    }
    let ivs = starts
        .into_iter()
        .map(|s| Interval::new(s as f64 / denom, (s + 1) as f64 / denom))
        .collect();
    Ok(CompactSet { intervals: ivs })
}

impl fmt::Display for CompactSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, iv) in self.intervals.iter().enumerate() {
            if i > 0 {
                f.write_str(" u ")?;
            }
            if iv.is_point() {
                write!(f, "{{{}}}", iv.lo)?;
            } else {
                write!(f, "[{},{}]", iv.lo, iv.hi)?;
            }
        }
        Ok(())
    }
}

impl FromStr for CompactSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<CompactSet> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut raw = Vec::new();
        let mut rest = s.trim();
        if rest.is_empty() {
            return Err(err("empty literal"));
        }
        loop {
            let (open, close) = match rest.chars().next() {
                Some('[') => ('[', ']'),
                Some('{') => ('{', '}'),
                _ => return Err(err("expected `[` or `{`")),
            };
            let end = rest
                .find(close)
                .ok_or_else(|| err(&format!("unclosed `{open}`")))?;
            let body = &rest[1..end];
            let nums = body
                .split(',')
                .map(|t| t.trim().parse::<f64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| err(&e.to_string()))?;
            if open == '[' {
                if nums.len() != 2 {
                    return Err(err("an interval needs exactly two endpoints"));
                }
                raw.push((nums[0], nums[1]));
            } else {
                if nums.is_empty() {
                    return Err(err("empty point list"));
                }
                raw.extend(nums.iter().map(|&p| (p, p)));
            }
            rest = rest[end + 1..].trim_start();
            if rest.is_empty() {
                break;
            }
            rest = rest
                .strip_prefix('u')
                .or_else(|| rest.strip_prefix('∪'))
                .ok_or_else(|| err("expected `u` between components"))?
                .trim_start();
        }
        CompactSet::normalize(&raw).map_err(|e| match e {
            Error::InvalidEndpoint { .. } => err(&e.to_string()),
            other => other,
        })
    }
}
