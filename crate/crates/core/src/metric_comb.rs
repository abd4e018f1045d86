//! Metric pairs, metric chains and metric linear combinations of compact sets.
//!
//! `Λ(A, B)` is the set of pairs `(a, b)` where `a` is a nearest point of `A`
//! to `b` or `b` is a nearest point of `B` to `a`. For finite unions of
//! intervals it is a finite union of horizontal, vertical and diagonal
//! segments in the `(a, b)` plane, which [`metric_pairs`] computes exactly.
//!
//! The n-ary combination `⊕ λ_j A_j` sums over chains whose consecutive
//! coordinates are metric pairs. It is not iterated binary `⊕`; see
//! [`metric_combination`].

use std::collections::HashSet;

use crate::compact_set::{CompactSet, Interval};
use crate::error::{Error, Result};

/// Largest tuple count [`metric_chains`] will enumerate.
pub const MAX_CHAIN_TUPLES: u128 = 1_000_000;

/// One piece of `Λ(A, B)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Segment {
    /// `{(t, t) : t in T}`, with `T ⊆ A ∩ B`.
    Diagonal(Interval),
    /// `{(a, b) : b in S}`, `a` an endpoint of an `A` component.
    Vertical { a: f64, b: Interval },
    /// `{(a, b) : a in S}`, `b` an endpoint of a `B` component.
    Horizontal { a: Interval, b: f64 },
}

impl Segment {
    /// Projection onto the first coordinate.
    pub fn a_range(&self) -> Interval {
        match *self {
            Segment::Diagonal(t) => t,
            Segment::Vertical { a, .. } => Interval::point(a),
            Segment::Horizontal { a, .. } => a,
        }
    }

    /// Projection onto the second coordinate.
    pub fn b_range(&self) -> Interval {
        match *self {
            Segment::Diagonal(t) => t,
            Segment::Vertical { b, .. } => b,
            Segment::Horizontal { b, .. } => Interval::point(b),
        }
    }

    /// `{λa + μb}` over the segment.
    pub fn weighted_image(&self, lambda: f64, mu: f64) -> Interval {
        match *self {
            Segment::Diagonal(t) => t.affine(lambda + mu, 0.0),
            Segment::Vertical { a, b } => b.affine(mu, lambda * a),
            Segment::Horizontal { a, b } => a.affine(lambda, mu * b),
        }
    }

    pub fn contains(&self, a: f64, b: f64) -> bool {
        match *self {
            Segment::Diagonal(t) => a == b && t.contains(a),
            Segment::Vertical { a: c, b: s } => a == c && s.contains(b),
            Segment::Horizontal { a: s, b: c } => b == c && s.contains(a),
        }
    }
}

/// Which half of the "or" in the definition of `Λ` produced a segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairSource {
    /// `a` is a nearest point of `A` to `b`.
    NearestInA,
    /// `b` is a nearest point of `B` to `a`.
    NearestInB,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TaggedSegment {
    pub segment: Segment,
    pub source: PairSource,
}

/// Exact segment decomposition of `Λ(A, B)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairGraph {
    pub segments: Vec<TaggedSegment>,
}

impl PairGraph {
    pub fn contains(&self, a: f64, b: f64) -> bool {
        self.segments.iter().any(|s| s.segment.contains(a, b))
    }

    /// The finitely many pairs, when every segment is a single point.
    pub fn point_pairs(&self) -> Option<Vec<(f64, f64)>> {
        let mut out = Vec::new();
        for s in &self.segments {
            let (a, b) = (s.segment.a_range(), s.segment.b_range());
            if !a.is_point() || !b.is_point() {
                return None;
            }
            out.push((a.lo, b.lo));
        }
        out.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.total_cmp(&y.1)));
        out.dedup();
        Some(out)
    }
}

/// Piece of the nearest-point partition of the line induced by a set.
enum NearestPiece {
    /// The set itself is the nearest point.
    Identity(Interval),
    /// Every query in `range` has nearest point `to`.
    Constant { range: Interval, to: f64 },
}

/// Closed pieces of the nearest-point map of `a`, in increasing order. Gap
/// midpoints belong to both adjacent pieces, which reports ties.
fn nearest_partition(a: &CompactSet) -> Vec<NearestPiece> {
    let ivs = a.intervals();
    let mut out = Vec::with_capacity(3 * ivs.len() + 1);
    out.push(NearestPiece::Constant {
        range: Interval::new(f64::NEG_INFINITY, ivs[0].lo),
        to: ivs[0].lo,
    });
    for (i, iv) in ivs.iter().enumerate() {
        out.push(NearestPiece::Identity(*iv));
        if let Some(next) = ivs.get(i + 1) {
            let mid = 0.5 * (iv.hi + next.lo);
            out.push(NearestPiece::Constant {
                range: Interval::new(iv.hi, mid),
                to: iv.hi,
            });
            out.push(NearestPiece::Constant {
                range: Interval::new(mid, next.lo),
                to: next.lo,
            });
        }
    }
    let last = ivs[ivs.len() - 1].hi;
    out.push(NearestPiece::Constant {
        range: Interval::new(last, f64::INFINITY),
        to: last,
    });
    out
}

/// Pairs `(p, q)` with `p` nearest in `from` to `q in over`, expressed with
/// `p` as the first coordinate.
fn directed_pairs(from: &CompactSet, over: &CompactSet) -> Vec<(Interval, Interval)> {
    let mut out = Vec::new();
    for piece in nearest_partition(from) {
        match piece {
            NearestPiece::Identity(iv) => {
                for t in over.clip(&iv) {
                    out.push((t, t));
                }
            }
            NearestPiece::Constant { range, to } => {
                for s in over.clip(&range) {
                    out.push((Interval::point(to), s));
                }
            }
        }
    }
    out
}

fn classify(p: Interval, q: Interval) -> Segment {
    if p == q {
        Segment::Diagonal(p)
    } else if p.is_point() {
        Segment::Vertical { a: p.lo, b: q }
    } else {
        Segment::Horizontal { a: p, b: q.lo }
    }
}

/// `Λ(A, B)` as a list of segments, duplicates removed.
pub fn metric_pairs(a: &CompactSet, b: &CompactSet) -> PairGraph {
    let mut segments = Vec::new();
    let mut seen: HashSet<[u64; 4]> = HashSet::new();
    let mut push = |seg: Segment, source: PairSource| {
        let (ar, br) = (seg.a_range(), seg.b_range());
        let key = [
            ar.lo.to_bits(),
            ar.hi.to_bits(),
            br.lo.to_bits(),
            br.hi.to_bits(),
        ];
        if seen.insert(key) {
            segments.push(TaggedSegment {
                segment: seg,
                source,
            });
        }
    };
    // a ∈ Λ_A(b): first coordinate is the nearest point.
    for (p, q) in directed_pairs(a, b) {
        push(classify(p, q), PairSource::NearestInA);
    }
    // b ∈ Λ_B(a): computed with roles swapped, then transposed.
    for (q, p) in directed_pairs(b, a) {
        let seg = if p == q {
            Segment::Diagonal(p)
        } else if q.is_point() {
            Segment::Horizontal { a: p, b: q.lo }
        } else {
            Segment::Vertical { a: p.lo, b: q }
        };
        push(seg, PairSource::NearestInB);
    }
    PairGraph { segments }
}

/// Binary metric combination `λA ⊕ μB = {λa + μb : (a, b) ∈ Λ(A, B)}`.
pub fn metric_sum(lambda: f64, a: &CompactSet, mu: f64, b: &CompactSet) -> CompactSet {
    let graph = metric_pairs(a, b);
    let ivs = graph
        .segments
        .iter()
        .map(|s| s.segment.weighted_image(lambda, mu))
        .collect();
    CompactSet::from_parts(ivs)
}

/// Exhaustive list of metric chains through finite point sets.
///
/// Pairs are tested straight from the definition of `Λ` via nearest-point
/// queries, so this is independent of the segment sweep and serves as the
/// brute-force reference for [`metric_combination`].
pub fn metric_chains(sets: &[CompactSet]) -> Result<Vec<Vec<f64>>> {
    let mut pts = Vec::with_capacity(sets.len());
    let mut size: u128 = 1;
    for (i, s) in sets.iter().enumerate() {
        let p = s.point_values().ok_or(Error::FiniteOnly { index: i })?;
        size = size.saturating_mul(p.len() as u128);
        pts.push(p);
    }
    if size > MAX_CHAIN_TUPLES {
        return Err(Error::TooLarge {
            size,
            limit: MAX_CHAIN_TUPLES,
        });
    }
    if sets.is_empty() {
        return Ok(Vec::new());
    }
    let is_pair = |j: usize, x: f64, y: f64| {
        sets[j].nearest_points(y).points.contains(&x)
            || sets[j + 1].nearest_points(x).points.contains(&y)
    };
    let mut chains: Vec<Vec<f64>> = pts[0].iter().map(|&x| vec![x]).collect();
    for j in 0..sets.len() - 1 {
        let mut next = Vec::new();
        for c in &chains {
            let x = c[j];
            for &y in &pts[j + 1] {
                if is_pair(j, x, y) {
                    let mut c2 = c.clone();
                    c2.push(y);
                    next.push(c2);
                }
            }
        }
        chains = next;
    }
    Ok(chains)
}

/// Partial-sum state of the chain dynamic program.
///
/// The reachable (current coordinate, partial sum) pairs are exactly
/// `{(t, coeff * t + q) : t ∈ carrier, q ∈ offset}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChainState {
    pub carrier: Interval,
    pub coeff: f64,
    pub offset: Interval,
}

impl ChainState {
    fn new(carrier: Interval, coeff: f64, offset: Interval) -> Self {
        ChainState {
            carrier,
            coeff,
            offset,
        }
    }

    /// Reachable sums once the final weight `lambda` multiplies the carrier.
    fn close(&self, lambda: f64) -> Interval {
        self.carrier.affine(self.coeff + lambda, 0.0).add(&self.offset)
    }

    /// Follow one segment of the next link, folding in weight `lambda` of the
    /// current coordinate.
    fn step(&self, seg: &Segment, lambda: f64) -> Option<ChainState> {
        let c = self.coeff + lambda;
        match *seg {
            Segment::Diagonal(d) => self
                .carrier
                .intersect(&d)
                .map(|t| ChainState::new(t, c, self.offset)),
            Segment::Vertical { a, b } => self
                .carrier
                .contains(a)
                .then(|| ChainState::new(b, 0.0, self.offset.affine(1.0, c * a))),
            Segment::Horizontal { a, b } => self.carrier.intersect(&a).map(|t| {
                ChainState::new(Interval::point(b), 0.0, t.affine(c, 0.0).add(&self.offset))
            }),
        }
    }
}

fn key3(a: f64, b: f64, c: f64) -> [u64; 3] {
    [a.to_bits(), b.to_bits(), c.to_bits()]
}

/// Merge states without changing the reachable set: equal coefficient and
/// carrier with overlapping offsets, or equal coefficient and offset with
/// overlapping carriers.
fn merge_states(states: Vec<ChainState>) -> Vec<ChainState> {
    fn pass(
        mut states: Vec<ChainState>,
        key: impl Fn(&ChainState) -> [u64; 3],
        get: impl Fn(&ChainState) -> Interval,
        set: impl Fn(&mut ChainState, Interval),
    ) -> Vec<ChainState> {
        states.sort_by(|x, y| key(x).cmp(&key(y)).then(get(x).lo.total_cmp(&get(y).lo)));
        let mut out: Vec<ChainState> = Vec::with_capacity(states.len());
        for s in states {
            if let Some(last) = out.last_mut() {
                if key(last) == key(&s) && get(last).overlaps(&get(&s)) {
                    let h = get(last).hull(&get(&s));
                    set(last, h);
                    continue;
                }
            }
            out.push(s);
        }
        out
    }
    let states = pass(
        states,
        |s| key3(s.coeff, s.carrier.lo, s.carrier.hi),
        |s| s.offset,
        |s, iv| s.offset = iv,
    );
    pass(
        states,
        |s| key3(s.coeff, s.offset.lo, s.offset.hi),
        |s| s.carrier,
        |s, iv| s.carrier = iv,
    )
}

/// `⊕_j λ_j A_j` over all metric chains, by dynamic programming over the
/// segments of each link `Λ(A_j, A_{j+1})`.
pub fn metric_combination(lambdas: &[f64], sets: &[CompactSet]) -> Result<CompactSet> {
    if lambdas.len() != sets.len() {
        return Err(Error::LengthMismatch {
            weights: lambdas.len(),
            sets: sets.len(),
        });
    }
    if sets.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut states: Vec<ChainState> = sets[0]
        .intervals()
        .iter()
        .map(|&iv| ChainState::new(iv, 0.0, Interval::point(0.0)))
        .collect();
    for j in 0..sets.len() - 1 {
        let graph = metric_pairs(&sets[j], &sets[j + 1]);
        let mut next = Vec::with_capacity(states.len() * 2);
        for st in &states {
            for seg in &graph.segments {
                if let Some(s) = st.step(&seg.segment, lambdas[j]) {
                    next.push(s);
                }
            }
        }
        states = merge_states(next);
    }
    let last = lambdas[lambdas.len() - 1];
    let ivs = states.iter().map(|s| s.close(last)).collect();
    Ok(CompactSet::from_parts(ivs))
}

/// Left fold `((λ_0A_0 ⊕ λ_1A_1) ⊕ λ_2A_2) ⊕ …` of binary metric sums on
/// the scaled sets. Agrees with [`metric_combination`] only where
/// associativity holds, e.g. single intervals with nonnegative weights.
pub fn binary_fold(lambdas: &[f64], sets: &[CompactSet]) -> Result<CompactSet> {
    if lambdas.len() != sets.len() {
        return Err(Error::LengthMismatch {
            weights: lambdas.len(),
            sets: sets.len(),
        });
    }
    let mut it = lambdas.iter().zip(sets);
    let (l0, a0) = it.next().ok_or(Error::EmptySet)?;
    let mut acc = a0.scale(*l0);
    for (l, a) in it {
        acc = metric_sum(1.0, &acc, 1.0, &a.scale(*l));
    }
    Ok(acc)
}

/// Set of sums `Σ λ_j a_j` over an explicit chain list.
pub fn chain_sums(lambdas: &[f64], chains: &[Vec<f64>]) -> Result<CompactSet> {
    let sums: Vec<f64> = chains
        .iter()
        .map(|c| c.iter().zip(lambdas).map(|(a, l)| a * l).sum())
        .collect();
    CompactSet::points(&sums)
}
