//! Set-valued functions on a compact interval, sampled on a grid and
//! evaluated between nodes by metric piecewise-linear interpolation.
//!
//! All sup-type quantities (`d_C`, total variation, `d_BV`, Hölder
//! quotients) are maxima over explicit finite probes, so they are lower
//! bounds for the analytic suprema.

use std::io::{Read, Write};

use crate::compact_set::{CompactSet, Interval};
use crate::error::{Error, Result};
use crate::metric_comb::{metric_combination, metric_sum};

/// Relative slack for evaluation points that round just outside the domain.
const DOMAIN_SLACK: f64 = 1e-12;

/// A set-valued function given by its values on a strictly increasing grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSVF {
    xs: Vec<f64>,
    values: Vec<CompactSet>,
}

/// Strictly increasing partition points spanning a domain.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionSpec {
    points: Vec<f64>,
}

impl PartitionSpec {
    pub fn new(points: Vec<f64>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::Domain("a partition needs at least two points".into()));
        }
        if points.iter().any(|x| !x.is_finite()) || points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain("partition points must increase strictly".into()));
        }
        Ok(PartitionSpec { points })
    }

    /// `n` equal cells over `[a, b]`.
    pub fn uniform(a: f64, b: f64, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("uniform partition needs n >= 1".into()));
        }
        let pts = (0..=n)
            .map(|i| {
                if i == n {
                    b
                } else {
                    a + (b - a) * i as f64 / n as f64
                }
            })
            .collect();
        Self::new(pts)
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn cells(&self) -> usize {
        self.points.len() - 1
    }

    pub fn first(&self) -> f64 {
        self.points[0]
    }

    pub fn last(&self) -> f64 {
        self.points[self.points.len() - 1]
    }
}

impl GridSVF {
    pub fn new(xs: Vec<f64>, values: Vec<CompactSet>) -> Result<Self> {
        if xs.len() != values.len() {
            return Err(Error::Domain(format!(
                "{} grid points but {} values",
                xs.len(),
                values.len()
            )));
        }
        PartitionSpec::new(xs.clone())?;
        Ok(GridSVF { xs, values })
    }

    /// Samples `f` at every point of `xs`.
    pub fn sample(xs: &[f64], mut f: impl FnMut(f64) -> CompactSet) -> Result<Self> {
        let values = xs.iter().map(|&x| f(x)).collect();
        Self::new(xs.to_vec(), values)
    }

    pub fn constant(a: f64, b: f64, value: CompactSet) -> Result<Self> {
        Self::new(vec![a, b], vec![value.clone(), value])
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn values(&self) -> &[CompactSet] {
        &self.values
    }

    pub fn domain(&self) -> Interval {
        Interval::new(self.xs[0], self.xs[self.xs.len() - 1])
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Smallest spacing between consecutive nodes.
    pub fn mesh(&self) -> f64 {
        self.xs
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::INFINITY, f64::min)
    }

    /// Largest step `|x_{i+1} - x_i| + 𝔥(f(x_{i+1}), f(x_i))` between
    /// consecutive graph samples.
    pub fn graph_pitch(&self) -> f64 {
        self.xs
            .windows(2)
            .zip(self.values.windows(2))
            .map(|(x, y)| x[1] - x[0] + y[1].hausdorff(&y[0]))
            .fold(0.0, f64::max)
    }

    /// True when every value is a single interval.
    pub fn is_interval_valued(&self) -> bool {
        self.values.iter().all(CompactSet::is_interval)
    }

    /// Metric piecewise-linear value at `x`. Between nodes `x_i < x < x_{i+1}`
    /// this is `t f(x_i) ⊕ (1 - t) f(x_{i+1})` with `t = (x_{i+1} - x) / h`.
    pub fn pl_eval(&self, x: f64) -> Result<CompactSet> {
        let dom = self.domain();
        let slack = DOMAIN_SLACK * (dom.width().max(dom.lo.abs()).max(dom.hi.abs()));
        if !(x >= dom.lo - slack && x <= dom.hi + slack) {
            return Err(Error::Domain(format!(
                "x = {x} outside [{}, {}]",
                dom.lo, dom.hi
            )));
        }
        let x = x.clamp(dom.lo, dom.hi);
        let i = self.xs.partition_point(|&t| t < x);
        if i < self.xs.len() && self.xs[i] == x {
            return Ok(self.values[i].clone());
        }
        let (x0, x1) = (self.xs[i - 1], self.xs[i]);
        let t = (x1 - x) / (x1 - x0);
        Ok(metric_sum(t, &self.values[i - 1], 1.0 - t, &self.values[i]))
    }

    /// Values at every point of `xs`.
    pub fn eval_many(&self, xs: &[f64]) -> Result<Vec<CompactSet>> {
        xs.iter().map(|&x| self.pl_eval(x)).collect()
    }

    /// Pointwise `f(x) ⊕ g(x)` on the merged grid.
    pub fn pointwise_sum(&self, other: &GridSVF) -> Result<GridSVF> {
        check_same_domain(self, other)?;
        let xs = merged_grid(&[self.xs(), other.xs()]);
        let mut values = Vec::with_capacity(xs.len());
        for &x in &xs {
            values.push(metric_sum(1.0, &self.pl_eval(x)?, 1.0, &other.pl_eval(x)?));
        }
        GridSVF::new(xs, values)
    }

    /// Pointwise image under `Y -> λY`.
    pub fn scale(&self, lambda: f64) -> GridSVF {
        GridSVF {
            xs: self.xs.clone(),
            values: self.values.iter().map(|v| v.scale(lambda)).collect(),
        }
    }

    /// Writes rows `x, lo_1, hi_1, lo_2, hi_2, …`.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut wr = csv::WriterBuilder::new().flexible(true).from_writer(w);
        for (x, v) in self.xs.iter().zip(&self.values) {
            let mut row = vec![x.to_string()];
            for iv in v.intervals() {
                row.push(iv.lo.to_string());
                row.push(iv.hi.to_string());
            }
            wr.write_record(&row).map_err(|e| Error::Csv(e.to_string()))?;
        }
        wr.flush().map_err(|e| Error::Csv(e.to_string()))?;
        Ok(())
    }

    /// Reads the format produced by [`GridSVF::write_csv`].
    pub fn read_csv<R: Read>(r: R) -> Result<GridSVF> {
        let mut rd = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .trim(csv::Trim::All)
            .from_reader(r);
        let mut xs = Vec::new();
        let mut values = Vec::new();
        for (line, rec) in rd.records().enumerate() {
            let rec = rec.map_err(|e| Error::Csv(e.to_string()))?;
            let nums = rec
                .iter()
                .map(|t| t.parse::<f64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Csv(format!("row {}: {e}", line + 1)))?;
            if nums.len() < 3 || nums.len() % 2 == 0 {
                return Err(Error::Csv(format!(
                    "row {}: expected x followed by lo/hi pairs",
                    line + 1
                )));
            }
            xs.push(nums[0]);
            let raw: Vec<(f64, f64)> = nums[1..].chunks(2).map(|c| (c[0], c[1])).collect();
            values.push(CompactSet::normalize(&raw)?);
        }
        GridSVF::new(xs, values)
    }
}

fn check_same_domain(f: &GridSVF, g: &GridSVF) -> Result<()> {
    let (a, b) = (f.domain(), g.domain());
    let tol = DOMAIN_SLACK * a.width().max(1.0);
    if (a.lo - b.lo).abs() > tol || (a.hi - b.hi).abs() > tol {
        return Err(Error::Domain(format!(
            "domains differ: [{}, {}] vs [{}, {}]",
            a.lo, a.hi, b.lo, b.hi
        )));
    }
    Ok(())
}

/// Sorted union of several grids with exact duplicates removed.
pub fn merged_grid(grids: &[&[f64]]) -> Vec<f64> {
    let mut xs: Vec<f64> = grids.iter().flat_map(|g| g.iter().copied()).collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    xs
}

/// `grid` plus `probe` equally spaced interior points in every cell.
pub fn probe_points(grid: &[f64], probe: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(grid.len() * (probe + 1));
    for w in grid.windows(2) {
        out.push(w[0]);
        for k in 1..=probe {
            out.push(w[0] + (w[1] - w[0]) * k as f64 / (probe + 1) as f64);
        }
    }
    if let Some(&last) = grid.last() {
        out.push(last);
    }
    out
}

/// `max 𝔥(f(x), g(x))` over the merged grid plus `probe` points per cell.
pub fn d_c(f: &GridSVF, g: &GridSVF, probe: usize) -> Result<f64> {
    if probe == 0 {
        return Err(Error::Domain("probe must be at least 1".into()));
    }
    check_same_domain(f, g)?;
    let grid = merged_grid(&[f.xs(), g.xs()]);
    let mut best = 0.0f64;
    for x in probe_points(&grid, probe) {
        best = best.max(f.pl_eval(x)?.hausdorff(&g.pl_eval(x)?));
    }
    Ok(best)
}

/// `Σ 𝔥(f(x_i), f(x_{i-1}))` over the partition.
pub fn total_variation(f: &GridSVF, chi: &PartitionSpec) -> Result<f64> {
    let vals = f.eval_many(chi.points())?;
    Ok(vals.windows(2).map(|w| w[1].hausdorff(&w[0])).sum())
}

/// Cross-⊕ variation `Σ 𝔥(f(x_i) ⊕ g(x_{i-1}), g(x_i) ⊕ f(x_{i-1}))`.
pub fn cross_variation(f: &GridSVF, g: &GridSVF, chi: &PartitionSpec) -> Result<f64> {
    let fv = f.eval_many(chi.points())?;
    let gv = g.eval_many(chi.points())?;
    let mut sum = 0.0;
    for i in 1..fv.len() {
        let lhs = metric_sum(1.0, &fv[i], 1.0, &gv[i - 1]);
        let rhs = metric_sum(1.0, &gv[i], 1.0, &fv[i - 1]);
        sum += lhs.hausdorff(&rhs);
    }
    Ok(sum)
}

/// `d_C(f, g) + Σ 𝔥(f(x_i) ⊕ g(x_{i-1}), g(x_i) ⊕ f(x_{i-1}))`.
pub fn d_bv(f: &GridSVF, g: &GridSVF, chi: &PartitionSpec, probe: usize) -> Result<f64> {
    Ok(d_c(f, g, probe)? + cross_variation(f, g, chi)?)
}

fn check_exponent(sigma: f64) -> Result<()> {
    if sigma > 0.0 && sigma <= 1.0 {
        Ok(())
    } else {
        Err(Error::BadExponent(sigma))
    }
}

/// Hölder quotient over all pairs of grid nodes.
///
/// Without `g` this is `max 𝔥(f(x), f(y)) / |x - y|^σ`. With `g` it is the
/// cross quotient `max 𝔥(f(x) ⊕ g(y), g(x) ⊕ f(y)) / |x - y|^σ` on the merged
/// grid.
pub fn holder_quotient(f: &GridSVF, sigma: f64, g: Option<&GridSVF>) -> Result<f64> {
    check_exponent(sigma)?;
    let mut best = 0.0f64;
    match g {
        None => {
            let (xs, vs) = (f.xs(), f.values());
            for i in 0..xs.len() {
                for j in i + 1..xs.len() {
                    let q = vs[i].hausdorff(&vs[j]) / (xs[j] - xs[i]).powf(sigma);
                    best = best.max(q);
                }
            }
        }
        Some(g) => {
            check_same_domain(f, g)?;
            let xs = merged_grid(&[f.xs(), g.xs()]);
            let fv = f.eval_many(&xs)?;
            let gv = g.eval_many(&xs)?;
            for i in 0..xs.len() {
                for j in i + 1..xs.len() {
                    let lhs = metric_sum(1.0, &fv[i], 1.0, &gv[j]);
                    let rhs = metric_sum(1.0, &gv[i], 1.0, &fv[j]);
                    best = best.max(lhs.hausdorff(&rhs) / (xs[j] - xs[i]).powf(sigma));
                }
            }
        }
    }
    Ok(best)
}

/// `d_C(f, g)` plus the cross Hölder quotient.
pub fn d_hc(f: &GridSVF, g: &GridSVF, sigma: f64, probe: usize) -> Result<f64> {
    Ok(d_c(f, g, probe)? + holder_quotient(f, sigma, Some(g))?)
}

/// Largest difference quotient `𝔥(f(x), f(y)) / |x - y|` over node pairs.
pub fn lipschitz_constant(f: &GridSVF) -> f64 {
    holder_quotient(f, 1.0, None).expect("sigma = 1 is valid")
}

fn binomial(n: usize, k: usize) -> f64 {
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Bernstein weights `C(k, j) x^j (1 - x)^(k - j)`, `j = 0..=k`.
pub fn bernstein_weights(k: usize, x: f64) -> Vec<f64> {
    (0..=k)
        .map(|j| binomial(k, j) * x.powi(j as i32) * (1.0 - x).powi((k - j) as i32))
        .collect()
}

/// Metric Bernstein polynomial `⊕_j C(k,j) x^j (1-x)^(k-j) f(j/k)` with
/// `samples[j] = f(j/k)`. Runs of equal adjacent samples are merged first.
pub fn bernstein_metric(samples: &[CompactSet], x: f64) -> Result<CompactSet> {
    bernstein_metric_with(samples, x, true)
}

pub fn bernstein_metric_with(samples: &[CompactSet], x: f64, merge_equal: bool) -> Result<CompactSet> {
    if samples.len() < 2 {
        return Err(Error::Domain("Bernstein needs k >= 1".into()));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("x = {x} outside [0, 1]")));
    }
    let w = bernstein_weights(samples.len() - 1, x);
    if !merge_equal {
        return metric_combination(&w, samples);
    }
    // adjacent equal sets are linked by the diagonal only, so their weights add
    let mut sets: Vec<CompactSet> = Vec::new();
    let mut weights: Vec<f64> = Vec::new();
    for (s, wj) in samples.iter().zip(w) {
        match sets.last() {
            Some(last) if last == s => *weights.last_mut().unwrap() += wj,
            _ => {
                sets.push(s.clone());
                weights.push(wj);
            }
        }
    }
    metric_combination(&weights, &sets)
}

/// Metric polynomial `A_0 ⊕ A_1 x ⊕ … ⊕ A_n x^n`.
pub fn metric_polynomial(coeffs: &[CompactSet], x: f64) -> Result<CompactSet> {
    let w: Vec<f64> = (0..coeffs.len()).map(|j| x.powi(j as i32)).collect();
    metric_combination(&w, coeffs)
}

/// Extends `f`, known on the compact set `x_set`, to `domain`: unchanged on
/// `x_set`, metric-linear across each bounded gap, constant past the ends.
pub fn extend(f: &GridSVF, x_set: &CompactSet, domain: Interval) -> Result<GridSVF> {
    let comps = x_set.clip(&domain);
    if comps.is_empty() {
        return Err(Error::EmptySet);
    }
    let fd = f.domain();
    let (lo, hi) = (comps[0].lo, comps[comps.len() - 1].hi);
    if lo < fd.lo || hi > fd.hi {
        return Err(Error::Domain(format!(
            "X spans [{lo}, {hi}] beyond the data domain [{}, {}]",
            fd.lo, fd.hi
        )));
    }
    let mut xs: Vec<f64> = Vec::new();
    for c in &comps {
        xs.push(c.lo);
        xs.extend(f.xs().iter().copied().filter(|&x| c.lo < x && x < c.hi));
        xs.push(c.hi);
    }
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    let mut values = f.eval_many(&xs)?;
    if domain.lo < lo {
        xs.insert(0, domain.lo);
        values.insert(0, values[0].clone());
    }
    if domain.hi > hi {
        xs.push(domain.hi);
        values.push(values[values.len() - 1].clone());
    }
    if xs.len() == 1 {
        // X is a single point and fills the domain
        return Err(Error::Domain("extension domain is a single point".into()));
    }
    GridSVF::new(xs, values)
}

/// Sampling parameters for the Weierstrass family `w_a(x) = Σ a^k cos(2π 3^k x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeierstrassParams {
    pub a_lo: f64,
    pub a_hi: f64,
    /// series terms kept
    pub terms: usize,
    /// number of equally spaced `a` samples
    pub samples: usize,
}

impl Default for WeierstrassParams {
    fn default() -> Self {
        WeierstrassParams {
            a_lo: 0.01,
            a_hi: 0.5,
            terms: 30,
            samples: 513,
        }
    }
}

impl WeierstrassParams {
    /// Bound on the dropped series tail, `a_hi^K / (1 - a_hi)`.
    pub fn tail_bound(&self) -> f64 {
        self.a_hi.powi(self.terms as i32) / (1.0 - self.a_hi)
    }

    fn validate(&self) -> Result<()> {
        if !(self.a_lo > 0.0 && self.a_lo <= self.a_hi && self.a_hi < 1.0) {
            return Err(Error::Domain(format!(
                "need 0 < a_lo <= a_hi < 1, got [{}, {}]",
                self.a_lo, self.a_hi
            )));
        }
        if self.samples < 2 || self.terms == 0 {
            return Err(Error::Domain("need at least 2 a-samples and 1 term".into()));
        }
        Ok(())
    }
}

/// Truncated `Σ_{k<terms} a^k cos(2π 3^k x)`. Phases are reduced mod 1 at
/// every step so large frequencies keep their accuracy.
pub fn weierstrass_term_sum(a: f64, x: f64, terms: usize) -> f64 {
    let mut phase = x.rem_euclid(1.0);
    let mut amp = 1.0;
    let mut sum = 0.0;
    for _ in 0..terms {
        sum += amp * (std::f64::consts::TAU * phase).cos();
        phase = (3.0 * phase).rem_euclid(1.0);
        amp *= a;
    }
    sum
}

/// `W(x)`: the hull of the sampled values `w_a(x)` over `a ∈ [a_lo, a_hi]`.
/// `a ↦ w_a(x)` is continuous, so the exact value is an interval.
pub fn weierstrass_svf(x: f64, p: &WeierstrassParams) -> Result<CompactSet> {
    p.validate()?;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for i in 0..p.samples {
        let a = p.a_lo + (p.a_hi - p.a_lo) * i as f64 / (p.samples - 1) as f64;
        let w = weierstrass_term_sum(a, x, p.terms);
        lo = lo.min(w);
        hi = hi.max(w);
    }
    CompactSet::interval(lo, hi)
}

/// `W` sampled on `n + 1` equally spaced nodes of `[0, 1]`.
pub fn weierstrass_grid(n: usize, p: &WeierstrassParams) -> Result<GridSVF> {
    let xs: Vec<f64> = (0..=n).map(|i| i as f64 / n as f64).collect();
    let values = xs
        .iter()
        .map(|&x| weierstrass_svf(x, p))
        .collect::<Result<Vec<_>>>()?;
    GridSVF::new(xs, values)
}
