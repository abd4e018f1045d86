//! Box-counting estimates for graph clouds, and sampled distance and
//! difference sets of graphs.
//!
//! Interval-valued functions have two graph clouds. The planar graph
//! `{(x, y) : y ∈ f(x)}` is a band and has dimension 2 wherever `f` has
//! positive width. The graph `{(x, f(x))}` in `I × 𝒦(ℝ)` is embedded
//! bi-Lipschitz in `ℝ³` as `(x, lo, hi)`, since on intervals
//! `𝔥 = max(|Δlo|, |Δhi|)`.

use crate::compact_set::CompactSet;
use crate::error::{Error, Result};
use crate::svf::GridSVF;

/// Pair budget for distance sets before stratified subsampling.
pub const DEFAULT_PAIR_LIMIT: u64 = 10_000_000;
/// Fits with `r²` below this are flagged.
pub const R2_THRESHOLD: f64 = 0.98;

/// Dyadic scales `2^-4, …, 2^-11`.
pub fn default_deltas() -> Vec<f64> {
    (4..=11).map(|k| 2f64.powi(-k)).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoxCountReport {
    pub deltas: Vec<f64>,
    pub counts: Vec<usize>,
    /// least-squares slope of `log N` against `log(1/δ)`
    pub slope: f64,
    pub r2: f64,
    pub window: (f64, f64),
}

impl BoxCountReport {
    pub fn reliable(&self) -> bool {
        self.r2 >= R2_THRESHOLD
    }
}

/// Ordinary least squares `y = a + b x`; returns `(b, r²)`.
pub fn ols_slope(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let b = sxy / sxx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    (b, r2)
}

/// Counts occupied cells of the `δ`-grid anchored at the cloud's lower
/// corner, for every `δ` in `deltas`, and fits the log-log slope.
pub fn box_count<const D: usize>(points: &[[f64; D]], deltas: &[f64]) -> Result<BoxCountReport> {
    if points.len() < 2 {
        return Err(Error::DegenerateInput("box counting needs at least two points".into()));
    }
    if deltas.len() < 2 || deltas.iter().any(|d| !(*d > 0.0)) || deltas.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::DegenerateInput(
            "need at least two positive, strictly decreasing scales".into(),
        ));
    }
    let mut lo = [f64::INFINITY; D];
    let mut hi = [f64::NEG_INFINITY; D];
    for p in points {
        for k in 0..D {
            if !p[k].is_finite() {
                return Err(Error::DegenerateInput("non-finite coordinate".into()));
            }
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    if (0..D).all(|k| lo[k] == hi[k]) {
        return Err(Error::DegenerateInput("all points coincide".into()));
    }
    let mut counts = Vec::with_capacity(deltas.len());
    let mut cells: Vec<[i64; D]> = Vec::with_capacity(points.len());
    for &d in deltas {
        cells.clear();
        cells.extend(points.iter().map(|p| {
            let mut c = [0i64; D];
            for k in 0..D {
                c[k] = ((p[k] - lo[k]) / d).floor() as i64;
            }
            c
        }));
        cells.sort_unstable();
        cells.dedup();
        counts.push(cells.len());
    }
    let lx: Vec<f64> = deltas.iter().map(|d| (1.0 / d).ln()).collect();
    let ly: Vec<f64> = counts.iter().map(|&c| (c as f64).ln()).collect();
    let (slope, r2) = ols_slope(&lx, &ly);
    Ok(BoxCountReport {
        deltas: deltas.to_vec(),
        counts,
        slope,
        r2,
        window: (deltas[deltas.len() - 1], deltas[0]),
    })
}

fn probe_xs(f: &GridSVF, res: usize) -> Vec<f64> {
    let d = f.domain();
    (0..res)
        .map(|i| {
            if i + 1 == res {
                d.hi
            } else {
                d.lo + d.width() * i as f64 / (res - 1) as f64
            }
        })
        .collect()
}

fn fill(out: &mut Vec<[f64; 2]>, x: f64, lo: f64, hi: f64, pitch: f64) {
    let steps = ((hi - lo) / pitch).ceil() as usize;
    out.push([x, lo]);
    for s in 1..steps {
        out.push([x, lo + (hi - lo) * s as f64 / steps as f64]);
    }
    if hi > lo {
        out.push([x, hi]);
    }
}

fn segment(out: &mut Vec<[f64; 2]>, a: [f64; 2], b: [f64; 2], pitch: f64) {
    let steps = ((b[1] - a[1]).abs() / pitch).ceil() as usize;
    for s in 1..steps {
        let t = s as f64 / steps as f64;
        out.push([a[0] + (b[0] - a[0]) * t, a[1] + (b[1] - a[1]) * t]);
    }
}

/// Planar graph cloud `{(x, y) : y ∈ f(x)}` on `res` equally spaced
/// probes. Each value is filled at the probe pitch, and each component
/// endpoint is joined to its nearest point in the neighbouring column so
/// steep stretches stay connected.
pub fn graph_points(f: &GridSVF, res: usize) -> Result<Vec<[f64; 2]>> {
    if res < 2 {
        return Err(Error::Domain("graph sampling needs res >= 2".into()));
    }
    let xs = probe_xs(f, res);
    let pitch = f.domain().width() / (res - 1) as f64;
    let vals = f.eval_many(&xs)?;
    let mut out = Vec::new();
    for (i, (&x, v)) in xs.iter().zip(&vals).enumerate() {
        for iv in v.intervals() {
            fill(&mut out, x, iv.lo, iv.hi, pitch);
        }
        if i + 1 < xs.len() {
            let (xn, vn) = (xs[i + 1], &vals[i + 1]);
            for (xa, va, xb, vb) in [(x, v, xn, vn), (xn, vn, x, v)] {
                for iv in va.intervals() {
                    for e in [iv.lo, iv.hi] {
                        let near = vb.nearest_points(e).points[0];
                        segment(&mut out, [xa, e], [xb, near], pitch);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `(x, lo, hi)` cloud of an interval-valued `f` on `res` probes, with
/// linear fill between probes so consecutive points are within the pitch.
pub fn graph_star_points(f: &GridSVF, res: usize) -> Result<Vec<[f64; 3]>> {
    if res < 2 {
        return Err(Error::Domain("graph sampling needs res >= 2".into()));
    }
    let xs = probe_xs(f, res);
    let pitch = f.domain().width() / (res - 1) as f64;
    let mut pts: Vec<[f64; 3]> = Vec::with_capacity(res);
    for (i, v) in f.eval_many(&xs)?.iter().enumerate() {
        if !v.is_interval() {
            return Err(Error::ConvexityRequired { index: i });
        }
        let iv = v.intervals()[0];
        pts.push([xs[i], iv.lo, iv.hi]);
    }
    let mut out = Vec::with_capacity(pts.len());
    for w in pts.windows(2) {
        out.push(w[0]);
        let jump = (w[1][1] - w[0][1]).abs().max((w[1][2] - w[0][2]).abs());
        let steps = (jump / pitch).ceil() as usize;
        for s in 1..steps {
            let t = s as f64 / steps as f64;
            out.push(std::array::from_fn(|k| w[0][k] + (w[1][k] - w[0][k]) * t));
        }
    }
    out.push(pts[pts.len() - 1]);
    Ok(out)
}

/// Which cloud [`graph_dimension`] measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphCloud {
    /// singleton-valued: planar graph
    Planar,
    /// interval-valued: `(x, lo, hi)` embedding of the graph in `I × 𝒦(ℝ)`
    Star,
}

/// Box-counting slope of the graph of `f`: planar for singleton-valued
/// `f`, the `(x, lo, hi)` embedding for interval-valued `f`.
pub fn graph_dimension(f: &GridSVF, res: usize, deltas: &[f64]) -> Result<(GraphCloud, BoxCountReport)> {
    let xs = probe_xs(f, res);
    let vals = f.eval_many(&xs)?;
    if vals.iter().all(|v| v.is_interval() && v.diameter() == 0.0) {
        Ok((GraphCloud::Planar, box_count(&graph_points(f, res)?, deltas)?))
    } else {
        Ok((GraphCloud::Star, box_count(&graph_star_points(f, res)?, deltas)?))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistanceSetSample {
    pub values: Vec<f64>,
    pub max_gap: f64,
    pub hull: (f64, f64),
}

impl DistanceSetSample {
    fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        values.dedup();
        let max_gap = values.windows(2).map(|w| w[1] - w[0]).fold(0.0, f64::max);
        let hull = (values[0], values[values.len() - 1]);
        DistanceSetSample { values, max_gap, hull }
    }

    pub fn hull_length(&self) -> f64 {
        self.hull.1 - self.hull.0
    }
}

/// Evenly spaced indices `0..n` keeping at most `m`, first and last included.
fn stratified(n: usize, m: usize) -> Vec<usize> {
    if n <= m {
        return (0..n).collect();
    }
    let mut idx: Vec<usize> = (0..m).map(|k| k * (n - 1) / (m - 1)).collect();
    idx.dedup();
    idx
}

/// Largest `m` with `m (m + 1) / 2 <= limit`.
fn points_for_pairs(limit: u64) -> usize {
    let m = ((2.0 * limit as f64).sqrt()) as u64;
    let mut m = m.max(2);
    while m * (m + 1) / 2 > limit {
        m -= 1;
    }
    m as usize
}

fn probe_nodes(f: &GridSVF, probes: usize) -> Vec<f64> {
    probe_xs(f, probes + 1)
}

/// `{|x - x'| + 𝔥(f(x), f(x'))}` over `probes + 1` equally spaced nodes.
pub fn distance_set_star(f: &GridSVF, probes: usize) -> Result<DistanceSetSample> {
    distance_set_star_with(f, probes, DEFAULT_PAIR_LIMIT)
}

pub fn distance_set_star_with(f: &GridSVF, probes: usize, pair_limit: u64) -> Result<DistanceSetSample> {
    if probes < 2 {
        return Err(Error::Domain("distance sets need probes >= 2".into()));
    }
    let xs = probe_nodes(f, probes);
    let keep = stratified(xs.len(), points_for_pairs(pair_limit));
    let xs: Vec<f64> = keep.iter().map(|&i| xs[i]).collect();
    let vals = f.eval_many(&xs)?;
    let mut out = Vec::with_capacity(xs.len() * (xs.len() + 1) / 2);
    for i in 0..xs.len() {
        for j in i..xs.len() {
            out.push((xs[j] - xs[i]) + vals[i].hausdorff(&vals[j]));
        }
    }
    Ok(DistanceSetSample::from_values(out))
}

fn subsampled_graph(f: &GridSVF, probes: usize, pair_limit: u64) -> Result<Vec<[f64; 2]>> {
    if probes < 2 {
        return Err(Error::Domain("distance sets need probes >= 2".into()));
    }
    let pts = graph_points(f, probes + 1)?;
    let keep = stratified(pts.len(), points_for_pairs(pair_limit));
    Ok(keep.into_iter().map(|i| pts[i]).collect())
}

/// `{|x - x'| + |y - y'|}` over the planar graph cloud.
pub fn distance_set_plain(f: &GridSVF, probes: usize) -> Result<DistanceSetSample> {
    distance_set_plain_with(f, probes, DEFAULT_PAIR_LIMIT)
}

pub fn distance_set_plain_with(f: &GridSVF, probes: usize, pair_limit: u64) -> Result<DistanceSetSample> {
    let pts = subsampled_graph(f, probes, pair_limit)?;
    let mut out = Vec::with_capacity(pts.len() * (pts.len() + 1) / 2);
    for i in 0..pts.len() {
        for j in i..pts.len() {
            out.push((pts[j][0] - pts[i][0]).abs() + (pts[j][1] - pts[i][1]).abs());
        }
    }
    Ok(DistanceSetSample::from_values(out))
}

/// `{(x - x', y - y')}` over the planar graph cloud, both orders.
pub fn difference_set(f: &GridSVF, probes: usize) -> Result<Vec<[f64; 2]>> {
    difference_set_with(f, probes, DEFAULT_PAIR_LIMIT / 2)
}

pub fn difference_set_with(f: &GridSVF, probes: usize, pair_limit: u64) -> Result<Vec<[f64; 2]>> {
    let pts = subsampled_graph(f, probes, pair_limit)?;
    let mut out = Vec::with_capacity(pts.len() * pts.len());
    for p in &pts {
        for q in &pts {
            out.push([p[0] - q[0], p[1] - q[1]]);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct LipschitzSumReport {
    /// largest node difference quotient of `f_lip`
    pub lipschitz: f64,
    pub cloud: GraphCloud,
    pub g: BoxCountReport,
    pub fg: BoxCountReport,
}

impl LipschitzSumReport {
    pub fn slope_g(&self) -> f64 {
        self.g.slope
    }

    pub fn slope_fg(&self) -> f64 {
        self.fg.slope
    }
}

/// Box-counting slopes of the graphs of `g` and `h = f_lip ⊕ g`.
pub fn lipschitz_sum_experiment(
    f_lip: &GridSVF,
    g: &GridSVF,
    res: usize,
    deltas: &[f64],
) -> Result<LipschitzSumReport> {
    let lipschitz = crate::svf::lipschitz_constant(f_lip);
    if !lipschitz.is_finite() {
        return Err(Error::DegenerateInput("f_lip has no finite Lipschitz bound".into()));
    }
    let h = f_lip.pointwise_sum(g)?;
    let (cg, rg) = graph_dimension(g, res, deltas)?;
    let (ch, rh) = graph_dimension(&h, res, deltas)?;
    let cloud = if cg == GraphCloud::Star || ch == GraphCloud::Star {
        GraphCloud::Star
    } else {
        GraphCloud::Planar
    };
    let (rg, rh) = if cg == ch {
        (rg, rh)
    } else {
        (
            box_count(&graph_star_points(g, res)?, deltas)?,
            box_count(&graph_star_points(&h, res)?, deltas)?,
        )
    };
    Ok(LipschitzSumReport {
        lipschitz,
        cloud,
        g: rg,
        fg: rh,
    })
}

/// Points `(k / 3^level, 0)` at the endpoints of the Cantor prefractal.
pub fn cantor_endpoint_cloud(level: u32) -> Result<Vec<[f64; 2]>> {
    let c = crate::compact_set::cantor_prefractal(level)?;
    Ok(c.intervals().iter().flat_map(|iv| [[iv.lo, 0.0], [iv.hi, 0.0]]).collect())
}

/// Singleton-valued grid function from real samples.
pub fn real_grid(xs: &[f64], mut f: impl FnMut(f64) -> f64) -> Result<GridSVF> {
    GridSVF::sample(xs, |x| CompactSet::singleton(f(x)).expect("finite sample"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_grid(n: usize) -> Vec<f64> {
        (0..=n).map(|i| i as f64 / n as f64).collect()
    }

    #[test]
    fn segment_and_square() {
        let seg: Vec<[f64; 2]> = (0..100_000).map(|i| [i as f64 / 99_999.0, 0.0]).collect();
        let r = box_count(&seg, &default_deltas()).unwrap();
        assert!((r.slope - 1.0).abs() < 0.05, "{}", r.slope);
        let n = 2048;
        let sq: Vec<[f64; 2]> = (0..n * n)
            .map(|k| [(k % n) as f64 / (n - 1) as f64, (k / n) as f64 / (n - 1) as f64])
            .collect();
        let r = box_count(&sq, &default_deltas()).unwrap();
        assert!((r.slope - 2.0).abs() < 0.05, "{}", r.slope);
        assert!(r.counts.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn cantor_dimension() {
        let r = box_count(&cantor_endpoint_cloud(10).unwrap(), &default_deltas()).unwrap();
        let want = 2f64.ln() / 3f64.ln();
        assert!((r.slope - want).abs() < 0.05, "{}", r.slope);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(box_count(&[[0.0, 0.0]], &default_deltas()), Err(Error::DegenerateInput(_))));
        assert!(matches!(box_count(&[[1.0, 1.0], [1.0, 1.0]], &default_deltas()), Err(Error::DegenerateInput(_))));
        assert!(matches!(box_count(&[[0.0, 0.0], [1.0, 1.0]], &[0.1, 0.2]), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn weierstrass_graph_dimension() {
        let xs = unit_grid(1 << 14);
        let f = real_grid(&xs, |x| crate::svf::weierstrass_term_sum(0.5, x, 40)).unwrap();
        let r = box_count(&graph_points(&f, 1 << 14).unwrap(), &default_deltas()).unwrap();
        let want = 2.0 - 2f64.ln() / 3f64.ln();
        assert!((r.slope - want).abs() < 0.08, "{}", r.slope);
    }

    #[test]
    fn graph_points_shapes() {
        let f = real_grid(&[0.0, 1.0], |_| 0.5).unwrap();
        assert_eq!(graph_points(&f, 11).unwrap().len(), 11);
        let band = GridSVF::constant(0.0, 1.0, CompactSet::interval(0.0, 1.0).unwrap()).unwrap();
        let pts = graph_points(&band, 11).unwrap();
        assert_eq!(pts.len(), 11 * 11);
    }

    #[test]
    fn lipschitz_star_graph_is_one_dimensional() {
        let xs = unit_grid(64);
        let f = GridSVF::sample(&xs, |x| CompactSet::interval(x * x - 1.0, 2.0 * x + 0.5).unwrap()).unwrap();
        let (cloud, r) = graph_dimension(&f, 4096, &default_deltas()).unwrap();
        assert_eq!(cloud, GraphCloud::Star);
        assert!((r.slope - 1.0).abs() < 0.05, "{}", r.slope);
    }

    #[test]
    fn distance_sets() {
        let c = GridSVF::constant(0.0, 1.0, CompactSet::interval(2.0, 3.0).unwrap()).unwrap();
        let d = distance_set_star(&c, 64).unwrap();
        assert_eq!(d.hull, (0.0, 1.0));
        assert!((d.max_gap - 1.0 / 64.0).abs() < 1e-12);
        let band = GridSVF::constant(0.0, 1.0, CompactSet::interval(0.0, 1.0).unwrap()).unwrap();
        let d = distance_set_plain(&band, 16).unwrap();
        assert_eq!(d.hull, (0.0, 2.0));
        let s = real_grid(&[0.0, 1.0], |_| 0.0).unwrap();
        let d = distance_set_plain(&s, 16).unwrap();
        assert_eq!(d.hull, (0.0, 1.0));
    }

    #[test]
    fn distance_set_two_nodes() {
        let f = GridSVF::new(
            vec![0.0, 1.0],
            vec![CompactSet::singleton(0.0).unwrap(), CompactSet::singleton(3.0).unwrap()],
        )
        .unwrap();
        let d = distance_set_star_with(&f, 2, 3).unwrap();
        assert_eq!(d.values, vec![0.0, 4.0]);
    }

    #[test]
    fn difference_set_symmetry() {
        let xs = unit_grid(8);
        let f = real_grid(&xs, |x| (5.0 * x).sin()).unwrap();
        let g = difference_set(&f, 8).unwrap();
        assert!(g.contains(&[0.0, 0.0]));
        for v in g.iter().step_by(13) {
            assert!(g.contains(&[-v[0], -v[1]]));
        }
    }

    #[test]
    fn subsampling_keeps_budget() {
        assert!(points_for_pairs(10) * (points_for_pairs(10) + 1) / 2 <= 10);
        let k = stratified(100, 7);
        assert_eq!((k[0], k[k.len() - 1], k.len()), (0, 99, 7));
    }

    #[test]
    fn lipschitz_sum_constant_shift() {
        let xs = unit_grid(1 << 12);
        let g = real_grid(&xs, |x| crate::svf::weierstrass_term_sum(0.5, x, 30)).unwrap();
        let f = real_grid(&[0.0, 1.0], |_| 0.25).unwrap();
        let rep = lipschitz_sum_experiment(&f, &g, 1 << 12, &default_deltas()).unwrap();
        assert_eq!(rep.cloud, GraphCloud::Planar);
        assert!((rep.slope_g() - rep.slope_fg()).abs() < 0.02);
    }
}
