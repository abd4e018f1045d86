//! Built-in inputs: reference samples of the Weierstrass SVF and example IFS data.

use svfrac::CompactSet;

/// Reference samples of `W` at `0, 1/4, 1/2, 3/4, 1`.
pub const W_SAMPLES: [&str; 5] = [
    "[1.0101,2]",
    "[-0.0067179,-0.00097261]",
    "[-1.9532,-1.0101]",
    "[-0.0067179,-0.00097261]",
    "[1.0101,2]",
];

pub fn w_samples() -> Vec<CompactSet> {
    W_SAMPLES.iter().map(|s| s.parse().expect("valid literal")).collect()
}

/// Closed form of the degree-4 metric Bernstein polynomial of the
/// samples above; a single interval `[lo, hi]`.
pub fn bernstein_closed_form(x: f64) -> (f64, f64) {
    let e = (1.0 - x).powi(4) + x.powi(4);
    let q = 4.0 * x * (1.0 - x).powi(3) + 4.0 * x.powi(3) * (1.0 - x);
    let m = x * x * (1.0 - x) * (1.0 - x);
    (
        e * 1.0101 - q * 0.0067179 - 11.7192 * m,
        e * 2.0 - q * 0.00097261 - 6.0606 * m,
    )
}

/// Interval data on `(0, 1/4, 1/2, 3/4, 1)` that is feasible for `Q_n(Y) = 0.3 Y`.
pub const BAND_CONFIG: &str = "# ifs-config v1
partition = [0.0, 0.25, 0.5, 0.75, 1.0]
data = [\"[1,2]\", \"[-0.5,0.2]\", \"[-2,-1]\", \"[-0.3,0.6]\", \"[1,2]\"]
alpha = [0.3, 0.3, 0.3, 0.3]
tol = 1e-8
max_iter = 100
";
