use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};
use svfrac::dimension::{
    box_count, cantor_endpoint_cloud, default_deltas, distance_set_plain, distance_set_star, graph_points, real_grid,
    BoxCountReport, DistanceSetSample,
};
use svfrac::fractal::{
    attractor_gap, chaos_game, fixed_point_with, length_weights, validate_certificate, DEFAULT_BURN,
};
use svfrac::metric_comb::{chain_sums, metric_chains, metric_combination, metric_pairs, metric_sum};
use svfrac::svf::{bernstein_metric, weierstrass_grid, weierstrass_svf, weierstrass_term_sum, GridSVF, WeierstrassParams};
use svfrac::{cantor_prefractal, CompactSet};

use crate::config::{self, IfsConfig};
use crate::output::{Format, Sink};
use crate::presets;
use crate::svg::{range, Plot};
use crate::{BoxPreset, Cli, Command, DemoItem, DistKind, DistPreset};

pub const DEFAULT_SEED: u64 = 1;
const BAND_COLOR: &str = "#4a6fa5";
const CURVE_COLOR: &str = "#c0392b";

/// Runs the selected command; `Ok(false)` means a `--check` failed.
pub fn run(cli: &Cli) -> Result<bool> {
    let g = &cli.global;
    match &cli.command {
        Command::MetricSum { weights, sets, oracle } => metric_sum_cmd(weights, sets, *oracle, g.check, g.format),
        Command::Bernstein { samples, points } => {
            let mut sink = Sink::new(&g.out, g.format)?;
            bernstein_cmd(&mut sink, samples.as_deref(), *points, g.check)
        }
        Command::Weierstrass {
            res,
            a_lo,
            a_hi,
            terms,
            a_samples,
        } => {
            let p = WeierstrassParams {
                a_lo: *a_lo,
                a_hi: *a_hi,
                terms: *terms,
                samples: *a_samples,
            };
            let mut sink = Sink::new(&g.out, g.format)?;
            weierstrass_cmd(&mut sink, *res, &p, g.check)
        }
        Command::Interpolate { config, tol, max_iter } => {
            let mut cfg = config::load(config)?;
            if let Some(t) = tol {
                cfg.tol = *t;
            }
            if let Some(m) = max_iter {
                cfg.max_iter = *m;
            }
            let mut sink = Sink::new(&g.out, g.format)?;
            interpolate_cmd(&mut sink, &cfg, g.check)
        }
        Command::Chaos { config, n, burn } => {
            let cfg = config::load(config)?;
            let n = n.or(cfg.chaos_n).unwrap_or(100_000);
            let burn = burn.or(cfg.chaos_burn).unwrap_or(DEFAULT_BURN);
            let mut sink = Sink::new(&g.out, g.format)?;
            chaos_cmd(&mut sink, &cfg, n, burn, g.seed, g.check)
        }
        Command::Boxdim { preset, input, deltas } => {
            let deltas = match deltas {
                Some(d) => parse_list(d).context("--deltas")?,
                None => default_deltas(),
            };
            let mut sink = Sink::new(&g.out, g.format)?;
            boxdim_cmd(&mut sink, *preset, input.as_deref(), &deltas, g.check)
        }
        Command::Distset {
            preset,
            config,
            probes,
            kind,
        } => {
            let mut sink = Sink::new(&g.out, g.format)?;
            distset_cmd(&mut sink, *preset, config.as_deref(), *probes, *kind, g.check)
        }
        Command::Demo { item } => {
            let mut sink = Sink::new(&g.out, g.format)?;
            demo_cmd(&mut sink, *item, g.check)
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| anyhow!("`{t}`: {e}")))
        .collect()
}

fn parse_set(s: &str) -> Result<CompactSet> {
    s.parse().map_err(|e| anyhow!("{e}"))
}

fn intervals_json(s: &CompactSet) -> Value {
    json!(s.intervals().iter().map(|iv| [iv.lo, iv.hi]).collect::<Vec<_>>())
}

fn metric_sum_cmd(weights: &str, sets: &[String], oracle: bool, check: bool, format: Format) -> Result<bool> {
    let (text, ok) = metric_sum_text(weights, sets, oracle || check, format)?;
    print!("{text}");
    Ok(ok)
}

/// Printed output of `metric-sum` and whether the oracle agreed.
pub fn metric_sum_text(weights: &str, sets: &[String], oracle: bool, format: Format) -> Result<(String, bool)> {
    let w = parse_list(weights).context("--weights")?;
    let sets = sets.iter().map(|s| parse_set(s)).collect::<Result<Vec<_>>>()?;
    if w.len() != sets.len() {
        bail!("{} weights for {} sets", w.len(), sets.len());
    }
    let result = metric_combination(&w, &sets)?;
    let mut ok = true;
    let mut oracle_note = Value::Null;
    if oracle {
        if sets.iter().all(CompactSet::is_finite) {
            let brute = chain_sums(&w, &metric_chains(&sets)?)?;
            ok = brute == result;
            oracle_note = json!(if ok { "agree" } else { "DISAGREE" });
            if !ok {
                eprintln!("oracle: chain enumeration gives {brute}");
            }
        } else {
            oracle_note = json!("not applicable: sets are not finite");
        }
    }
    let text = match format {
        Format::Csv => match oracle_note.as_str() {
            Some(note) => format!("{result}\noracle: {note}\n"),
            None => format!("{result}\n"),
        },
        Format::JsonLines => format!(
            "{}\n",
            json!({"result": result.to_string(), "intervals": intervals_json(&result), "oracle": oracle_note})
        ),
    };
    Ok((text, ok))
}

fn band_plot(title: &str, rows: &[(f64, CompactSet)], max_bands: usize) -> Plot {
    let xr = range(rows.iter().map(|r| r.0));
    let yr = range(rows.iter().flat_map(|r| [r.1.min(), r.1.max()]));
    let mut plot = Plot::new(title, xr, yr);
    let step = rows.len().div_ceil(max_bands).max(1);
    for (x, set) in rows.iter().step_by(step) {
        for iv in set.intervals() {
            plot.band(*x, iv.lo, iv.hi, BAND_COLOR);
        }
    }
    plot
}

fn uniform(n: usize) -> Vec<f64> {
    (0..n).map(|i| i as f64 / (n - 1) as f64).collect()
}

fn bernstein_rows(samples: &[CompactSet], points: usize) -> Result<Vec<(f64, CompactSet)>> {
    uniform(points)
        .into_iter()
        .map(|x| Ok((x, bernstein_metric(samples, x)?)))
        .collect()
}

fn bernstein_cmd(sink: &mut Sink, samples: Option<&str>, points: usize, check: bool) -> Result<bool> {
    if points < 2 {
        bail!("--points must be at least 2");
    }
    let preset = samples.is_none();
    let samples = match samples {
        Some(s) => s.split(';').map(parse_set).collect::<Result<Vec<_>>>()?,
        None => presets::w_samples(),
    };
    let rows = bernstein_rows(&samples, points)?;
    sink.svf_rows("bernstein", &rows)?;
    let k = samples.len() - 1;
    let plot = band_plot(&format!("Metric Bernstein polynomial, k = {k}"), &rows, 400);
    sink.text("bernstein.svg", &plot.finish("x", "value"))?;
    let ends_ok = rows[0].1 == samples[0] && rows[rows.len() - 1].1 == samples[k];
    let mut summary = json!({"k": k, "points": points, "endpoints_reproduced": ends_ok});
    let mut ok = ends_ok;
    if preset {
        let dev = rows
            .iter()
            .map(|(x, s)| {
                let (lo, hi) = presets::bernstein_closed_form(*x);
                if s.is_interval() {
                    (s.min() - lo).abs().max((s.max() - hi).abs())
                } else {
                    f64::INFINITY
                }
            })
            .fold(0.0, f64::max);
        summary["closed_form_max_deviation"] = json!(dev);
        ok &= dev <= 1e-6;
    }
    sink.summary("bernstein", summary)?;
    Ok(!check || ok)
}

fn weierstrass_cmd(sink: &mut Sink, res: usize, p: &WeierstrassParams, check: bool) -> Result<bool> {
    if res < 2 {
        bail!("--res must be at least 2");
    }
    let f = weierstrass_grid(res - 1, p)?;
    let rows: Vec<(f64, CompactSet)> = f.xs().iter().copied().zip(f.values().iter().cloned()).collect();
    sink.svf_rows("weierstrass", &rows)?;
    let plot = weierstrass_plot(&rows, p);
    sink.text("weierstrass.svg", &plot.finish("x", "w_a(x)"))?;
    let tail = p.tail_bound();
    let w0 = weierstrass_svf(0.0, p)?;
    let wh = weierstrass_svf(0.5, p)?;
    let (lo0, hi0) = (1.0 / (1.0 - p.a_lo), 1.0 / (1.0 - p.a_hi));
    let dev = (w0.min() - lo0)
        .abs()
        .max((w0.max() - hi0).abs())
        .max((wh.min() + hi0).abs())
        .max((wh.max() + lo0).abs());
    sink.summary(
        "weierstrass",
        json!({
            "res": res, "a_lo": p.a_lo, "a_hi": p.a_hi, "terms": p.terms, "a_samples": p.samples,
            "tail_bound": tail, "W(0)": w0.to_string(), "W(1/2)": wh.to_string(),
            "analytic_max_deviation": dev,
        }),
    )?;
    Ok(!check || dev <= tail + 1e-12)
}

fn weierstrass_plot(rows: &[(f64, CompactSet)], p: &WeierstrassParams) -> Plot {
    let mut plot = band_plot("Weierstrass set-valued function W", rows, 300);
    for k in 0..6 {
        let a = p.a_lo + (p.a_hi - p.a_lo) * k as f64 / 5.0;
        let curve: Vec<(f64, f64)> = uniform(1025)
            .into_iter()
            .map(|x| (x, weierstrass_term_sum(a, x, p.terms)))
            .collect();
        plot.polyline(&curve, CURVE_COLOR, 0.6);
    }
    plot
}

fn interpolate_cmd(sink: &mut Sink, cfg: &IfsConfig, check: bool) -> Result<bool> {
    let ifs = &cfg.ifs;
    let (f, report) = fixed_point_with(ifs, cfg.tol, cfg.max_iter, cfg.min_mesh)?;
    let rows: Vec<(f64, CompactSet)> = f.xs().iter().copied().zip(f.values().iter().cloned()).collect();
    sink.svf_rows("interpolant", &rows)?;
    let plot = band_plot("Set-valued fractal interpolant", &rows, 1024);
    sink.text("interpolant.svg", &plot.finish("x", "f(x)"))?;
    let node_err = ifs
        .partition()
        .points()
        .iter()
        .zip(ifs.data())
        .map(|(x, y)| f.pl_eval(*x).map(|v| v.hausdorff(y)))
        .collect::<svfrac::Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    let gap = attractor_gap(ifs, &f)?;
    let pitch = f.graph_pitch();
    let cert = validate_certificate(ifs, 1.0);
    sink.summary(
        "interpolate",
        json!({
            "iterations": report.iterations,
            "successive_dc": report.successive_dc,
            "final_residual": report.final_residual,
            "certificate_ok": report.certificate_ok,
            "contraction": cert.contraction,
            "holder_certificate": cert.holder_value,
            "holder_certificate_ok": cert.holder_ok,
            "nodes": f.len(),
            "mesh": f.mesh(),
            "node_error": node_err,
            "attractor_gap": gap,
            "graph_pitch": pitch,
        }),
    )?;
    let ok = node_err < 1e-9 && report.final_residual <= 2.0 * cfg.tol && gap <= 2.0 * pitch;
    Ok(!check || ok)
}

/// Sup distance between the empirical CDF of `xs` and the uniform CDF on `[a, b]`.
pub fn ks_uniform(xs: &mut [f64], a: f64, b: f64) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    xs.iter()
        .enumerate()
        .map(|(i, &x)| {
            let u = ((x - a) / (b - a)).clamp(0.0, 1.0);
            ((i + 1) as f64 / n - u).max(u - i as f64 / n)
        })
        .fold(0.0, f64::max)
}

fn chaos_cmd(sink: &mut Sink, cfg: &IfsConfig, n: usize, burn: usize, seed: u64, check: bool) -> Result<bool> {
    let ifs = &cfg.ifs;
    let lengths = length_weights(ifs);
    let p = cfg.p.clone().unwrap_or_else(|| lengths.clone());
    let orbit = chaos_game(ifs, &p, n, seed, burn)?;
    sink.svf_rows("chaos", &orbit)?;
    let yr = range(orbit.iter().flat_map(|o| [o.1.min(), o.1.max()]));
    let mut plot = Plot::new("Chaos-game orbit", (ifs.domain().lo, ifs.domain().hi), yr);
    for (x, set) in orbit.iter().take(20_000) {
        for iv in set.intervals() {
            plot.dot(*x, iv.lo, BAND_COLOR);
            plot.dot(*x, iv.hi, CURVE_COLOR);
        }
    }
    sink.text("chaos.svg", &plot.finish("x", "Y endpoints"))?;
    let mut xs: Vec<f64> = orbit.iter().map(|o| o.0).collect();
    let ks = ks_uniform(&mut xs, ifs.domain().lo, ifs.domain().hi);
    let length_measure = p.iter().zip(&lengths).all(|(a, b)| (a - b).abs() < 1e-12);
    sink.summary(
        "chaos",
        json!({"n": n, "burn": burn, "seed": seed, "p": p, "ks_uniform": ks, "p_is_length": length_measure}),
    )?;
    let ok = !length_measure || ks <= 0.02_f64.max(2.0 / (n as f64).sqrt());
    Ok(!check || ok)
}

fn read_points(path: &Path) -> Result<Vec<[f64; 2]>> {
    let mut rd = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let mut pts = Vec::new();
    for (i, rec) in rd.records().enumerate() {
        let rec = rec?;
        let get = |k: usize| -> Result<f64> {
            rec.get(k)
                .ok_or_else(|| anyhow!("line {}: expected two columns", i + 2))?
                .parse::<f64>()
                .map_err(|e| anyhow!("line {}: {e}", i + 2))
        };
        pts.push([get(0)?, get(1)?]);
    }
    Ok(pts)
}

pub fn preset_cloud(preset: BoxPreset) -> Result<(Vec<[f64; 2]>, f64, f64)> {
    Ok(match preset {
        BoxPreset::Segment => ((0..100_000).map(|i| [i as f64 / 99_999.0, 0.0]).collect(), 1.0, 0.05),
        BoxPreset::Square => {
            let n = 2048;
            let pts = (0..n * n)
                .map(|k| [(k % n) as f64 / (n - 1) as f64, (k / n) as f64 / (n - 1) as f64])
                .collect();
            (pts, 2.0, 0.05)
        }
        BoxPreset::Cantor10 => (cantor_endpoint_cloud(10)?, 2f64.ln() / 3f64.ln(), 0.05),
        BoxPreset::Weierstrass => {
            let xs = uniform((1 << 14) + 1);
            let f = real_grid(&xs, |x| weierstrass_term_sum(0.5, x, 40))?;
            (graph_points(&f, 1 << 14)?, 2.0 - 2f64.ln() / 3f64.ln(), 0.08)
        }
    })
}

fn boxdim_plot(r: &BoxCountReport) -> Plot {
    let lx: Vec<f64> = r.deltas.iter().map(|d| (1.0 / d).log2()).collect();
    let ly: Vec<f64> = r.counts.iter().map(|&c| (c as f64).log2()).collect();
    let mut plot = Plot::new(
        &format!("Box counting: slope {:.4}, r2 {:.4}", r.slope, r.r2),
        range(lx.iter().copied()),
        range(ly.iter().copied()),
    );
    for (x, y) in lx.iter().zip(&ly) {
        plot.dot(*x, *y, CURVE_COLOR);
    }
    let mx = lx.iter().sum::<f64>() / lx.len() as f64;
    let my = ly.iter().sum::<f64>() / ly.len() as f64;
    let line: Vec<(f64, f64)> = [lx[0], lx[lx.len() - 1]]
        .iter()
        .map(|&x| (x, my + r.slope * (x - mx)))
        .collect();
    plot.polyline(&line, BAND_COLOR, 1.0);
    plot
}

fn boxdim_cmd(
    sink: &mut Sink,
    preset: Option<BoxPreset>,
    input: Option<&Path>,
    deltas: &[f64],
    check: bool,
) -> Result<bool> {
    let (pts, expected) = match (preset, input) {
        (Some(p), _) => {
            let (pts, want, tol) = preset_cloud(p)?;
            (pts, Some((want, tol)))
        }
        (None, Some(path)) => (read_points(path)?, None),
        (None, None) => bail!("give --preset or --input"),
    };
    let r = box_count(&pts, deltas)?;
    let rows: Vec<Vec<f64>> = r.deltas.iter().zip(&r.counts).map(|(d, c)| vec![*d, *c as f64]).collect();
    sink.table("boxdim", &["delta", "count"], &rows)?;
    sink.text("boxdim.svg", &boxdim_plot(&r).finish("log2(1/delta)", "log2 N"))?;
    let mut summary = json!({
        "points": pts.len(), "slope": r.slope, "r2": r.r2, "reliable": r.reliable(),
        "window": [r.window.0, r.window.1],
    });
    let mut ok = true;
    if let Some((want, tol)) = expected {
        summary["expected"] = json!(want);
        summary["tolerance"] = json!(tol);
        ok = (r.slope - want).abs() <= tol;
    }
    sink.summary("boxdim", summary)?;
    Ok(!check || ok)
}

/// Fixed point of the built-in interval IFS.
pub fn band_interpolant() -> Result<GridSVF> {
    let cfg = config::parse(presets::BAND_CONFIG)?;
    Ok(fixed_point_with(&cfg.ifs, cfg.tol, cfg.max_iter, cfg.min_mesh)?.0)
}

fn distset_cmd(
    sink: &mut Sink,
    preset: Option<DistPreset>,
    config: Option<&Path>,
    probes: usize,
    kind: DistKind,
    check: bool,
) -> Result<bool> {
    let f = match (preset, config) {
        (_, Some(path)) => {
            let cfg = config::load(path)?;
            fixed_point_with(&cfg.ifs, cfg.tol, cfg.max_iter, cfg.min_mesh)?.0
        }
        (Some(DistPreset::Constant) | None, None) => GridSVF::constant(0.0, 1.0, parse_set("[2,3]")?)?,
        (Some(DistPreset::Weierstrass), None) => weierstrass_grid(probes, &WeierstrassParams::default())?,
        (Some(DistPreset::Fractal), None) => band_interpolant()?,
    };
    let d: DistanceSetSample = match kind {
        DistKind::Star => distance_set_star(&f, probes)?,
        DistKind::Plain => distance_set_plain(&f, probes)?,
    };
    let rows: Vec<Vec<f64>> = d.values.iter().map(|v| vec![*v]).collect();
    sink.table("distset", &["distance"], &rows)?;
    let step = d.values.len().div_ceil(2000).max(1);
    let curve: Vec<(f64, f64)> = d
        .values
        .iter()
        .enumerate()
        .step_by(step)
        .map(|(i, v)| (i as f64 / (d.values.len() - 1).max(1) as f64, *v))
        .collect();
    let mut plot = Plot::new("Sorted distance values", (0.0, 1.0), d.hull);
    plot.polyline(&curve, BAND_COLOR, 1.0);
    sink.text("distset.svg", &plot.finish("rank / count", "distance"))?;
    let bound = 4.0 / probes as f64 * d.hull_length();
    sink.summary(
        "distset",
        json!({
            "probes": probes, "values": d.values.len(), "max_gap": d.max_gap,
            "hull": [d.hull.0, d.hull.1], "gap_bound": bound,
        }),
    )?;
    Ok(!check || kind == DistKind::Plain || d.max_gap < bound)
}

/// Rows of the finite-set example table: expression, computed, expected.
pub fn example_table() -> Result<Vec<[String; 3]>> {
    let s = |t: &str| parse_set(t);
    let (a, b, c) = (s("{1,2}")?, s("{7,8,9}")?, s("{-1,-10}")?);
    let ab = metric_sum(1.0, &a, 1.0, &b);
    let bc = metric_sum(1.0, &b, 1.0, &c);
    let pairs = metric_pairs(&a, &b).point_pairs().unwrap_or_default();
    let pairs = pairs
        .iter()
        .map(|(x, y)| format!("({x},{y})"))
        .collect::<Vec<_>>()
        .join(" ");
    let c1 = cantor_prefractal(1)?;
    let rows = vec![
        ["Λ(A,B)".into(), pairs, "(1,7) (2,7) (2,8) (2,9)".into()],
        ["A⊕B".into(), ab.to_string(), "{8} u {9} u {10} u {11}".into()],
        ["B⊕C".into(), bc.to_string(), "{-3} u {6} u {7} u {8}".into()],
        [
            "A⊕B⊕C".into(),
            metric_combination(&[1.0; 3], &[a.clone(), b.clone(), c.clone()])?.to_string(),
            "{-2} u {-1} u {7} u {8} u {9} u {10}".into(),
        ],
        [
            "(A⊕B)⊕C".into(),
            metric_sum(1.0, &ab, 1.0, &c).to_string(),
            "{-2} u {7} u {8} u {9} u {10}".into(),
        ],
        [
            "A⊕(B⊕C)".into(),
            metric_sum(1.0, &a, 1.0, &bc).to_string(),
            "{-2} u {8} u {9} u {10}".into(),
        ],
        [
            "(A⊕B)⊕(−B)".into(),
            metric_sum(1.0, &ab, -1.0, &b).to_string(),
            "{0} u {1} u {2}".into(),
        ],
        [
            "A⊕B⊕(−B)".into(),
            metric_combination(&[1.0, 1.0, -1.0], &[a.clone(), b.clone(), b])?.to_string(),
            a.to_string(),
        ],
        [
            "C₁⊕C₁".into(),
            metric_sum(1.0, &c1, 1.0, &c1).to_string(),
            c1.scale(2.0).to_string(),
        ],
        ["C₁+C₁".into(), c1.minkowski_sum(&c1).to_string(), "[0,2]".into()],
    ];
    Ok(rows)
}

fn demo_table(sink: &mut Sink) -> Result<bool> {
    let rows = example_table()?;
    let mut md = String::from("A = {1,2}, B = {7,8,9}, C = {-1,-10}, C₁ = level-1 Cantor prefractal\n\n");
    md.push_str("| expression | computed | expected | match |\n|---|---|---|---|\n");
    let mut all = true;
    let mut records = Vec::new();
    for [e, got, want] in &rows {
        let m = got == want;
        all &= m;
        md.push_str(&format!("| {e} | {got} | {want} | {} |\n", if m { "yes" } else { "NO" }));
        records.push(json!({"expression": e, "computed": got, "expected": want, "match": m}));
    }
    sink.text("examples.md", &md)?;
    match sink.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["expression", "computed", "expected", "match"])?;
            for [e, got, want] in &rows {
                w.write_record([e, got, want, &(got == want).to_string()])?;
            }
            let bytes = w.into_inner().map_err(|e| anyhow!("{e}"))?;
            sink.text("examples.csv", &String::from_utf8(bytes)?)?;
        }
        Format::JsonLines => {
            let body: String = records.iter().map(|r| format!("{r}\n")).collect();
            sink.text("examples.jsonl", &body)?;
        }
    }
    Ok(all)
}

fn demo_cmd(sink: &mut Sink, item: DemoItem, check: bool) -> Result<bool> {
    let mut summary = json!({});
    let mut ok = true;
    if matches!(item, DemoItem::All | DemoItem::Table) {
        let t = demo_table(sink)?;
        summary["table_matches"] = json!(t);
        ok &= t;
    }
    if matches!(item, DemoItem::All | DemoItem::Weierstrass) {
        let p = WeierstrassParams::default();
        let f = weierstrass_grid(1024, &p)?;
        let rows: Vec<(f64, CompactSet)> = f.xs().iter().copied().zip(f.values().iter().cloned()).collect();
        sink.svf_rows("fig1_weierstrass", &rows)?;
        sink.text("fig1_weierstrass.svg", &weierstrass_plot(&rows, &p).finish("x", "w_a(x)"))?;
        summary["fig1_W(0)"] = json!(rows[0].1.to_string());
    }
    if matches!(item, DemoItem::All | DemoItem::Bernstein) {
        let w = presets::w_samples();
        let rows = bernstein_rows(&w, 401)?;
        sink.svf_rows("fig2_bernstein", &rows)?;
        let plot = band_plot("Metric Bernstein polynomial of W, k = 4", &rows, 401);
        sink.text("fig2_bernstein.svg", &plot.finish("x", "value"))?;
        let ends = rows[0].1 == w[0] && rows[rows.len() - 1].1 == w[0];
        summary["fig2_endpoints_equal_W(0)"] = json!(ends);
        ok &= ends;
    }
    sink.summary("demo", summary)?;
    Ok(!check || ok)
}
