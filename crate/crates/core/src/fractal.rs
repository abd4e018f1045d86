//! Set-valued fractal interpolation: the affine IFS
//! `W_n(x, Y) = (L_n(x), Q_n(Y) ⊕ S_n(x))`, its Read-Bajraktarević
//! operator, fixed-point iteration and chaos-game sampling.
//!
//! Data values and the `S_n` are single intervals. On intervals the metric
//! sum with positive weights is endpoint addition, so every iterate stays
//! interval-valued and piecewise-linear evaluation is exact.

use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::compact_set::{CompactSet, Interval};
use crate::error::{Error, Result};
use crate::metric_comb::metric_sum;
use crate::svf::{d_c, GridSVF, PartitionSpec};

/// Tolerance for the endpoint (gluing) conditions.
pub const ENDPOINT_TOL: f64 = 1e-9;
/// Default smallest grid spacing produced by refinement.
pub const DEFAULT_MIN_MESH: f64 = 1e-4;
/// Default chaos-game burn-in.
pub const DEFAULT_BURN: usize = 100;

/// The contraction `Q_n` acting on the set variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QOperator {
    /// `Y ↦ αY`, Lipschitz constant `|α|`.
    ScalarScale(f64),
    /// On an interval with centre `c` and radius `r`: centre `center·c`,
    /// radius `radius·r`. Lipschitz constant `max(|center|, radius)`.
    /// `Split { center: α, radius: |α| }` coincides with `ScalarScale(α)`.
    Split { center: f64, radius: f64 },
}

impl QOperator {
    /// Factor `k` with `𝔥(Q(Y), Q(Y')) ≤ k 𝔥(Y, Y')`.
    pub fn lipschitz(&self) -> f64 {
        match *self {
            QOperator::ScalarScale(a) => a.abs(),
            QOperator::Split { center, radius } => center.abs().max(radius),
        }
    }

    fn apply_interval(&self, iv: Interval) -> Interval {
        match *self {
            QOperator::ScalarScale(a) => iv.affine(a, 0.0),
            QOperator::Split { center, radius } => {
                let c = center * 0.5 * (iv.lo + iv.hi);
                let r = radius * 0.5 * iv.width();
                Interval::new(c - r, c + r)
            }
        }
    }

    pub fn apply(&self, y: &CompactSet) -> Result<CompactSet> {
        match *self {
            QOperator::ScalarScale(a) => Ok(y.scale(a)),
            QOperator::Split { .. } => {
                if !y.is_interval() {
                    return Err(Error::ConvexityRequired { index: 0 });
                }
                let iv = self.apply_interval(y.intervals()[0]);
                CompactSet::interval(iv.lo, iv.hi)
            }
        }
    }
}

/// A validated set-valued IFS over a partition of `I = [x_0, x_N]`.
#[derive(Debug, Clone, PartialEq)]
pub struct IfsSpec {
    partition: PartitionSpec,
    data: Vec<CompactSet>,
    q_ops: Vec<QOperator>,
    s_funcs: Vec<GridSVF>,
    affine: Vec<(f64, f64)>,
}

/// Contraction certificates for scalar-type `Q_n` (so `q_n = 0`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Certificate {
    /// `max_n Lip(Q_n)`; the fixed point exists when this is `< 1`.
    pub contraction: f64,
    pub contraction_ok: bool,
    /// `(1 + N / min|a_n|^σ) max_n Lip(Q_n)`, the Hölder-space bound.
    pub holder_value: f64,
    pub holder_ok: bool,
    /// `1 - holder_value`
    pub holder_margin: f64,
}

/// Outcome of [`fixed_point`].
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub iterations: usize,
    pub successive_dc: Vec<f64>,
    pub final_residual: f64,
    pub certificate_ok: bool,
}

fn single_interval(set: &CompactSet, index: usize) -> Result<Interval> {
    if set.is_interval() {
        Ok(set.intervals()[0])
    } else {
        Err(Error::ConvexityRequired { index })
    }
}

/// `S` with `q ⊕ S = y` for intervals: `[y.lo - q.lo, y.hi - q.hi]`.
fn interval_remainder(y: Interval, q: Interval, branch: usize) -> Result<Interval> {
    let (lo, hi) = (y.lo - q.lo, y.hi - q.hi);
    let slack = ENDPOINT_TOL * 1e-3 * (1.0 + y.lo.abs().max(y.hi.abs()));
    if hi < lo - slack {
        return Err(Error::EndpointInfeasible {
            branch,
            required: q.width(),
            available: y.width(),
        });
    }
    Ok(Interval::new(lo, hi.max(lo)))
}

/// Builds the IFS with `Q_n(Y) = α_n Y`.
pub fn build_ifs(partition: &PartitionSpec, data: &[CompactSet], alphas: &[f64]) -> Result<IfsSpec> {
    let ops: Vec<QOperator> = alphas.iter().map(|&a| QOperator::ScalarScale(a)).collect();
    build_ifs_with(partition, data, &ops)
}

/// Builds the IFS for arbitrary `Q_n`. Each `S_n` is the metric-linear
/// interval function fixed by the two endpoint conditions
/// `Q_n(Y_0) ⊕ S_n(x_0) = Y_{n-1}` and `Q_n(Y_N) ⊕ S_n(x_N) = Y_n`.
pub fn build_ifs_with(partition: &PartitionSpec, data: &[CompactSet], ops: &[QOperator]) -> Result<IfsSpec> {
    let n = partition.cells();
    if data.len() != n + 1 {
        return Err(Error::LengthMismatch {
            weights: n + 1,
            sets: data.len(),
        });
    }
    if ops.len() != n {
        return Err(Error::LengthMismatch {
            weights: ops.len(),
            sets: n,
        });
    }
    for (branch, op) in ops.iter().enumerate() {
        let k = op.lipschitz();
        let bad_split = matches!(op, QOperator::Split { radius, .. } if *radius < 0.0);
        if !(k < 1.0) || bad_split {
            return Err(Error::NotContractive { branch: branch + 1, alpha: k });
        }
    }
    let ivs = data
        .iter()
        .enumerate()
        .map(|(i, d)| single_interval(d, i))
        .collect::<Result<Vec<_>>>()?;
    let xs = partition.points();
    let (x0, xn) = (partition.first(), partition.last());
    let span = xn - x0;
    let mut affine = Vec::with_capacity(n);
    let mut s_funcs = Vec::with_capacity(n);
    for b in 1..=n {
        let a_n = (xs[b] - xs[b - 1]) / span;
        let b_n = (xn * xs[b - 1] - x0 * xs[b]) / span;
        affine.push((a_n, b_n));
        let op = ops[b - 1];
        let s0 = interval_remainder(ivs[b - 1], op.apply_interval(ivs[0]), b)?;
        let s1 = interval_remainder(ivs[b], op.apply_interval(ivs[n]), b)?;
        s_funcs.push(GridSVF::new(
            vec![x0, xn],
            vec![
                CompactSet::interval(s0.lo, s0.hi)?,
                CompactSet::interval(s1.lo, s1.hi)?,
            ],
        )?);
    }
    let ifs = IfsSpec {
        partition: partition.clone(),
        data: data.to_vec(),
        q_ops: ops.to_vec(),
        s_funcs,
        affine,
    };
    ifs.check_endpoints()?;
    Ok(ifs)
}

impl IfsSpec {
    pub fn partition(&self) -> &PartitionSpec {
        &self.partition
    }

    pub fn data(&self) -> &[CompactSet] {
        &self.data
    }

    pub fn q_ops(&self) -> &[QOperator] {
        &self.q_ops
    }

    pub fn s_funcs(&self) -> &[GridSVF] {
        &self.s_funcs
    }

    /// `(a_n, b_n)` with `L_n(x) = a_n x + b_n`.
    pub fn affine(&self) -> &[(f64, f64)] {
        &self.affine
    }

    pub fn branches(&self) -> usize {
        self.q_ops.len()
    }

    pub fn domain(&self) -> Interval {
        Interval::new(self.partition.first(), self.partition.last())
    }

    /// `L_n(x)`, with the partition endpoints returned exactly.
    pub fn l_map(&self, branch: usize, x: f64) -> f64 {
        let pts = self.partition.points();
        if x == self.partition.first() {
            return pts[branch];
        }
        if x == self.partition.last() {
            return pts[branch + 1];
        }
        let (a, b) = self.affine[branch];
        a * x + b
    }

    /// `L_n^{-1}(x)` clamped to `I`.
    pub fn l_inverse(&self, branch: usize, x: f64) -> f64 {
        let pts = self.partition.points();
        if x == pts[branch] {
            return self.partition.first();
        }
        if x == pts[branch + 1] {
            return self.partition.last();
        }
        let (a, b) = self.affine[branch];
        ((x - b) / a).clamp(self.partition.first(), self.partition.last())
    }

    /// `Ω_n(x, Y) = Q_n(Y) ⊕ S_n(x)`.
    pub fn omega(&self, branch: usize, x: f64, y: &CompactSet) -> Result<CompactSet> {
        let q = self.q_ops[branch].apply(y)?;
        let s = self.s_funcs[branch].pl_eval(x)?;
        Ok(metric_sum(1.0, &q, 1.0, &s))
    }

    fn check_endpoints(&self) -> Result<()> {
        let n = self.branches();
        let pts = self.partition.points();
        for b in 0..n {
            for (x, y, target, xt) in [
                (self.partition.first(), &self.data[0], &self.data[b], pts[b]),
                (self.partition.last(), &self.data[n], &self.data[b + 1], pts[b + 1]),
            ] {
                let gap = self.omega(b, x, y)?.hausdorff(target);
                if gap > ENDPOINT_TOL {
                    return Err(Error::Glue { x: xt, gap });
                }
            }
        }
        Ok(())
    }

    /// The metric piecewise-linear interpolant of the data.
    pub fn data_interpolant(&self) -> GridSVF {
        GridSVF::new(self.partition.points().to_vec(), self.data.clone())
            .expect("partition and data were validated")
    }

    /// Largest branch contraction factor.
    pub fn max_lipschitz(&self) -> f64 {
        self.q_ops.iter().map(QOperator::lipschitz).fold(0.0, f64::max)
    }
}

/// Evaluates the contraction certificates at Hölder exponent `sigma`.
pub fn validate_certificate(ifs: &IfsSpec, sigma: f64) -> Certificate {
    let n = ifs.branches() as f64;
    let k = ifs.max_lipschitz();
    let min_a = ifs.affine.iter().map(|p| p.0.abs()).fold(f64::INFINITY, f64::min);
    let holder_value = (1.0 + n / min_a.powf(sigma)) * k;
    Certificate {
        contraction: k,
        contraction_ok: k < 1.0,
        holder_value,
        holder_ok: holder_value < 1.0,
        holder_margin: 1.0 - holder_value,
    }
}

fn glue_into(xs: &mut Vec<f64>, vals: &mut Vec<CompactSet>, x: f64, v: CompactSet) -> Result<()> {
    if let (Some(&last_x), Some(last_v)) = (xs.last(), vals.last()) {
        if x <= last_x {
            let gap = last_v.hausdorff(&v);
            if gap > ENDPOINT_TOL {
                return Err(Error::Glue { x, gap });
            }
            return Ok(());
        }
    }
    xs.push(x);
    vals.push(v);
    Ok(())
}

/// One Read-Bajraktarević step on the refined grid `∪_n L_n(grid(g))`.
pub fn rb_apply(ifs: &IfsSpec, g: &GridSVF) -> Result<GridSVF> {
    check_domain(ifs, g)?;
    let m = g.len();
    let mut xs = Vec::with_capacity(ifs.branches() * (m - 1) + 1);
    let mut vals = Vec::with_capacity(xs.capacity());
    for b in 0..ifs.branches() {
        for (&u, y) in g.xs().iter().zip(g.values()) {
            glue_into(&mut xs, &mut vals, ifs.l_map(b, u), ifs.omega(b, u, y)?)?;
        }
    }
    GridSVF::new(xs, vals)
}

/// One Read-Bajraktarević step sampled on a fixed `grid`.
pub fn rb_apply_on(ifs: &IfsSpec, g: &GridSVF, grid: &[f64]) -> Result<GridSVF> {
    check_domain(ifs, g)?;
    let pts = ifs.partition.points();
    let mut xs = Vec::with_capacity(grid.len());
    let mut vals = Vec::with_capacity(grid.len());
    let mut b = 0;
    for &x in grid {
        while b + 1 < ifs.branches() && x > pts[b + 1] {
            b += 1;
        }
        let u = ifs.l_inverse(b, x);
        let v = ifs.omega(b, u, &g.pl_eval(u)?)?;
        if x == pts[b + 1] && b + 1 < ifs.branches() {
            // shared endpoint: the next branch must agree
            let w = ifs.omega(b + 1, ifs.partition.first(), &g.pl_eval(ifs.partition.first())?)?;
            let gap = v.hausdorff(&w);
            if gap > ENDPOINT_TOL {
                return Err(Error::Glue { x, gap });
            }
        }
        xs.push(x);
        vals.push(v);
    }
    GridSVF::new(xs, vals)
}

fn check_domain(ifs: &IfsSpec, g: &GridSVF) -> Result<()> {
    let (d, e) = (ifs.domain(), g.domain());
    if d.lo != e.lo || d.hi != e.hi {
        return Err(Error::Domain(format!(
            "function lives on [{}, {}], IFS on [{}, {}]",
            e.lo, e.hi, d.lo, d.hi
        )));
    }
    Ok(())
}

/// Iterates the RB operator from the data interpolant until successive
/// iterates are within `tol` in `d_C`.
pub fn fixed_point(ifs: &IfsSpec, tol: f64, max_iter: usize) -> Result<(GridSVF, ConvergenceReport)> {
    fixed_point_with(ifs, tol, max_iter, DEFAULT_MIN_MESH)
}

/// As [`fixed_point`]; the grid is refined while its mesh stays at or above
/// `min_mesh` and is frozen afterwards.
pub fn fixed_point_with(
    ifs: &IfsSpec,
    tol: f64,
    max_iter: usize,
    min_mesh: f64,
) -> Result<(GridSVF, ConvergenceReport)> {
    let cert = validate_certificate(ifs, 1.0);
    if !cert.contraction_ok {
        return Err(Error::NotContractive {
            branch: 0,
            alpha: cert.contraction,
        });
    }
    let min_a = ifs.affine.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let mut g = ifs.data_interpolant();
    let mut steps = Vec::new();
    for it in 1..=max_iter {
        let next = if g.mesh() * min_a >= min_mesh {
            rb_apply(ifs, &g)?
        } else {
            rb_apply_on(ifs, &g, g.xs())?
        };
        let step = d_c(&next, &g, 1)?;
        steps.push(step);
        g = next;
        if step < tol {
            let residual = self_referential_residual(ifs, &g)?;
            return Ok((
                g,
                ConvergenceReport {
                    iterations: it,
                    successive_dc: steps,
                    final_residual: residual,
                    certificate_ok: true,
                },
            ));
        }
    }
    Err(Error::NoConvergence {
        iterations: max_iter,
        last_step: steps.last().copied().unwrap_or(f64::NAN),
    })
}

/// `max 𝔥(f(z), Ω_n(L_n^{-1}(z), f(L_n^{-1}(z))))` over the nodes `z` of `f`,
/// `n` being the branch whose image contains `z`. On a grid produced by
/// [`rb_apply`] every `L_n^{-1}(z)` is again a node, so no interpolation
/// enters.
pub fn self_referential_residual(ifs: &IfsSpec, f: &GridSVF) -> Result<f64> {
    let rf = rb_apply_on(ifs, f, f.xs())?;
    Ok(f.values()
        .iter()
        .zip(rf.values())
        .map(|(a, b)| a.hausdorff(b))
        .fold(0.0, f64::max))
}

/// Distance `|x - x'| + 𝔥(Y, Y')` on `I × 𝒦(ℝ)`.
pub fn star_distance(p: &(f64, CompactSet), q: &(f64, CompactSet)) -> f64 {
    (p.0 - q.0).abs() + p.1.hausdorff(&q.1)
}

/// Directed Hausdorff distance between clouds sorted by `x`, in the
/// [`star_distance`] metric.
fn directed_cloud_gap(from: &[(f64, CompactSet)], to: &[(f64, CompactSet)]) -> f64 {
    let mut worst = 0.0f64;
    for p in from {
        let i = to.partition_point(|q| q.0 < p.0);
        let mut best = f64::INFINITY;
        for q in to[i..].iter() {
            if q.0 - p.0 >= best {
                break;
            }
            best = best.min(star_distance(p, q));
        }
        for q in to[..i].iter().rev() {
            if p.0 - q.0 >= best {
                break;
            }
            best = best.min(star_distance(p, q));
        }
        worst = worst.max(best);
    }
    worst
}

/// Two-sided gap between the graph cloud `G = {(x, f(x))}` on the nodes of
/// `f` and its image `∪_n W_n(G)`.
pub fn attractor_gap(ifs: &IfsSpec, f: &GridSVF) -> Result<f64> {
    let graph: Vec<(f64, CompactSet)> = f.xs().iter().copied().zip(f.values().iter().cloned()).collect();
    let mut image = Vec::with_capacity(graph.len() * ifs.branches());
    for b in 0..ifs.branches() {
        for (x, y) in &graph {
            image.push((ifs.l_map(b, *x), ifs.omega(b, *x, y)?));
        }
    }
    image.sort_by(|p, q| p.0.total_cmp(&q.0));
    Ok(directed_cloud_gap(&graph, &image).max(directed_cloud_gap(&image, &graph)))
}

/// Random-iteration orbit of `W_n(x, Y) = (L_n(x), Ω_n(x, Y))` from
/// `(x_0, Y_0)`. Branch `n` is chosen with probability `p[n]`; the first
/// `burn` points are dropped and `n` are returned.
pub fn chaos_game(ifs: &IfsSpec, p: &[f64], n: usize, seed: u64, burn: usize) -> Result<Vec<(f64, CompactSet)>> {
    if p.len() != ifs.branches() {
        return Err(Error::BadWeights(format!(
            "{} probabilities for {} branches",
            p.len(),
            ifs.branches()
        )));
    }
    if p.iter().any(|&w| !(w >= 0.0) || !w.is_finite()) {
        return Err(Error::BadWeights("entries must be finite and nonnegative".into()));
    }
    let total: f64 = p.iter().sum();
    if (total - 1.0).abs() > 1e-9 {
        return Err(Error::BadWeights(format!("entries sum to {total}, not 1")));
    }
    if n == 0 {
        return Err(Error::Domain("chaos game needs n >= 1".into()));
    }
    let dist = WeightedIndex::new(p).map_err(|e| Error::BadWeights(e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = ifs.partition.first();
    let mut y = ifs.data[0].clone();
    let mut out = Vec::with_capacity(n);
    for t in 0..burn + n {
        let b = dist.sample(&mut rng);
        let next_y = ifs.omega(b, x, &y)?;
        x = ifs.l_map(b, x);
        y = next_y;
        if t >= burn {
            out.push((x, y.clone()));
        }
    }
    Ok(out)
}

/// Branch probabilities `p_n = |a_n|`.
pub fn length_weights(ifs: &IfsSpec) -> Vec<f64> {
    ifs.affine.iter().map(|p| p.0.abs()).collect()
}
