//! Exact computation with compact subsets of the real line under the metric
//! linear combination, set-valued fractal interpolation, and dimension
//! estimators for graphs of set-valued functions.

pub mod compact_set;
pub mod dimension;
pub mod error;
pub mod fractal;
pub mod metric_comb;
pub mod svf;

pub use compact_set::{cantor_prefractal, CompactSet, Interval, NearestResult};
pub use error::{Error, Result};
pub use metric_comb::{metric_combination, metric_pairs, metric_sum, PairGraph, Segment};
pub use svf::{bernstein_metric, d_bv, d_c, extend, holder_quotient, total_variation, weierstrass_svf, GridSVF, PartitionSpec, WeierstrassParams};
pub use fractal::{build_ifs, chaos_game, fixed_point, rb_apply, self_referential_residual, validate_certificate, ConvergenceReport, IfsSpec, QOperator};
pub use dimension::{box_count, distance_set_star, graph_points, BoxCountReport, DistanceSetSample};
