//! IFS configuration files.
//!
//! ```toml
//! # ifs-config v1
//! partition = [0.0, 0.25, 0.5, 0.75, 1.0]
//! data = ["[1,2]", "[-0.5,0.2]", "[-2,-1]", "[-0.3,0.6]", "[1,2]"]
//! alpha = [0.3, 0.3, 0.3, 0.3]
//! ```
//!
//! See `docs/ifs-config.md` for every key.

use std::ops::Range;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;
use svfrac::fractal::{build_ifs_with, IfsSpec, QOperator};
use svfrac::svf::PartitionSpec;
use svfrac::CompactSet;
use toml::Spanned;

pub const HEADER: &str = "# ifs-config v1";

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    partition: Spanned<Vec<f64>>,
    data: Vec<Spanned<String>>,
    alpha: Spanned<Vec<f64>>,
    radius: Option<Spanned<Vec<f64>>>,
    p: Option<Spanned<Vec<f64>>>,
    tol: Option<f64>,
    max_iter: Option<usize>,
    min_mesh: Option<f64>,
    chaos: Option<ChaosSection>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChaosSection {
    pub n: Option<usize>,
    pub burn: Option<usize>,
}

/// A parsed and validated IFS configuration.
#[derive(Debug, Clone)]
pub struct IfsConfig {
    pub ifs: IfsSpec,
    pub p: Option<Vec<f64>>,
    pub tol: f64,
    pub max_iter: usize,
    pub min_mesh: f64,
    pub chaos_n: Option<usize>,
    pub chaos_burn: Option<usize>,
}

fn line_of(text: &str, span: &Range<usize>) -> usize {
    text[..span.start.min(text.len())].matches('\n').count() + 1
}

pub fn parse(text: &str) -> Result<IfsConfig> {
    let first = text.lines().next().unwrap_or("").trim_end();
    if first != HEADER {
        bail!("line 1: expected header `{HEADER}`, found `{first}`");
    }
    let raw: RawConfig = toml::from_str(text).map_err(|e| {
        let line = e.span().map(|s| line_of(text, &s)).unwrap_or(0);
        anyhow!("line {line}: {}", e.message())
    })?;
    let at = |span: Range<usize>| line_of(text, &span);

    let partition = PartitionSpec::new(raw.partition.get_ref().clone())
        .map_err(|e| anyhow!("line {}: partition: {e}", at(raw.partition.span())))?;
    let mut data = Vec::with_capacity(raw.data.len());
    for d in &raw.data {
        let set: CompactSet = d
            .get_ref()
            .parse()
            .map_err(|e| anyhow!("line {}: data: {e}", at(d.span())))?;
        data.push(set);
    }
    let alpha = raw.alpha.get_ref();
    let ops: Vec<QOperator> = match &raw.radius {
        None => alpha.iter().map(|&a| QOperator::ScalarScale(a)).collect(),
        Some(r) => {
            if r.get_ref().len() != alpha.len() {
                bail!(
                    "line {}: radius has {} entries but alpha has {}",
                    at(r.span()),
                    r.get_ref().len(),
                    alpha.len()
                );
            }
            alpha
                .iter()
                .zip(r.get_ref())
                .map(|(&center, &radius)| QOperator::Split { center, radius })
                .collect()
        }
    };
    let ifs = build_ifs_with(&partition, &data, &ops)
        .map_err(|e| anyhow!("line {}: {e}", at(raw.alpha.span())))?;
    let p = match raw.p {
        Some(p) => {
            let v = p.get_ref().clone();
            if v.len() != ifs.branches() {
                bail!("line {}: p needs {} entries, found {}", at(p.span()), ifs.branches(), v.len());
            }
            Some(v)
        }
        None => None,
    };
    Ok(IfsConfig {
        ifs,
        p,
        tol: raw.tol.unwrap_or(1e-8),
        max_iter: raw.max_iter.unwrap_or(100),
        min_mesh: raw.min_mesh.unwrap_or(svfrac::fractal::DEFAULT_MIN_MESH),
        chaos_n: raw.chaos.as_ref().and_then(|c| c.n),
        chaos_burn: raw.chaos.as_ref().and_then(|c| c.burn),
    })
}

pub fn load(path: &Path) -> Result<IfsConfig> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse(&text).with_context(|| format!("in {}", path.display()))
}
