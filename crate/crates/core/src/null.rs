//! Random-direction null model.
//!
//! Each undirected edge independently becomes reciprocal with probability
//! `r`, or a basic edge in either direction with probability `(1 - r) / 2`
//! each. Under this model wedge and triangle types have closed-form
//! probabilities, which [`deviation_report`] compares with a graph's own
//! census at the graph's measured reciprocity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::census::{CensusReport, PerTriangle, PerWedge, ReportKind, TriangleType, WedgeType, SCHEMA_VERSION};
use crate::chart::ChartData;
use crate::error::{Error, Result};
use crate::graph::{Digraph, VertexId};

fn check_r(r: f64) -> Result<()> {
    if (0.0..=1.0).contains(&r) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("reciprocity {r} not in [0, 1]")))
    }
}

/// Probability that an undirected wedge becomes each directed wedge type.
pub fn null_wedge_probs(r: f64) -> Result<PerWedge<f64>> {
    check_r(r)?;
    let q = 1.0 - r;
    let mut p = PerWedge::default();
    p[WedgeType::Out] = q * q / 4.0;
    p[WedgeType::Path] = q * q / 2.0;
    p[WedgeType::In] = q * q / 4.0;
    p[WedgeType::RecipIn] = r * q;
    p[WedgeType::RecipOut] = r * q;
    p[WedgeType::RecipTot] = r * r;
    Ok(p)
}

/// Probability that an undirected triangle becomes each directed triangle type.
pub fn null_triangle_probs(r: f64) -> Result<PerTriangle<f64>> {
    check_r(r)?;
    let q = 1.0 - r;
    let loop_ = q * q * q / 4.0;
    let one_recip = r * q * q / 4.0;
    let mut p = PerTriangle::default();
    p[TriangleType::Trans] = 3.0 * loop_;
    p[TriangleType::Loop] = loop_;
    p[TriangleType::OutRecip] = 3.0 * one_recip;
    p[TriangleType::PathRecip] = 6.0 * one_recip;
    p[TriangleType::InRecip] = 3.0 * one_recip;
    p[TriangleType::TwoRecip] = 3.0 * r * r * q;
    p[TriangleType::ThreeRecip] = r * r * r;
    Ok(p)
}

/// Analytic null prediction at one reciprocity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NullPrediction {
    pub r: f64,
    pub wedge_probs: PerWedge<f64>,
    pub triangle_probs: PerTriangle<f64>,
}

impl NullPrediction {
    pub fn new(r: f64) -> Result<Self> {
        Ok(NullPrediction {
            r,
            wedge_probs: null_wedge_probs(r)?,
            triangle_probs: null_triangle_probs(r)?,
        })
    }
}

/// Every adjacent pair once as `(min, max)`, ascending.
pub fn undirect(g: &Digraph) -> Vec<(VertexId, VertexId)> {
    let mut pairs: Vec<(VertexId, VertexId)> = g.edges().map(|(a, b, _)| (a, b)).collect();
    pairs.sort_unstable();
    pairs
}

/// Uniform draw in `[0, 1)` for one vertex pair. Keyed by the ordered
/// `(min, max)` pair, so the outcome does not depend on the order in which
/// pairs are listed.
fn pair_uniform(seed: u64, a: VertexId, b: VertexId) -> f64 {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((u64::from(lo.0) << 32) | u64::from(hi.0));
    rng.random::<f64>()
}

/// Assigns a random relation to every undirected pair: reciprocal with
/// probability `r`, otherwise `min -> max` or `max -> min` with equal odds.
/// The result keeps `n` vertices and the given labels.
pub fn randomize_directions(
    labels: Vec<u64>,
    pairs: &[(VertexId, VertexId)],
    r: f64,
    seed: u64,
) -> Result<Digraph> {
    check_r(r)?;
    let n = labels.len();
    if let Some(&(a, b)) = pairs.iter().find(|(a, b)| a.index() >= n || b.index() >= n) {
        return Err(Error::InvalidArgument(format!("pair ({a}, {b}) out of range for {n} vertices")));
    }
    let directed: Vec<(u32, u32)> = pairs
        .par_iter()
        .flat_map_iter(|&(a, b)| {
            let (lo, hi) = if a <= b { (a.0, b.0) } else { (b.0, a.0) };
            let x = pair_uniform(seed, a, b);
            let edges: &[(u32, u32)] = if x < r {
                &[(lo, hi), (hi, lo)]
            } else if x < r + (1.0 - r) / 2.0 {
                &[(lo, hi)]
            } else {
                &[(hi, lo)]
            };
            edges.to_vec()
        })
        .collect();
    Ok(Digraph::from_dense_edges_labelled(labels, directed).0)
}

/// Same graph with directions and reciprocity reassigned at the graph's own
/// reciprocity.
pub fn randomize_graph(g: &Digraph, seed: u64) -> Result<Digraph> {
    let r = g.reciprocity()?;
    randomize_directions(g.labels().to_vec(), &undirect(g), r, seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TypeDeviation {
    pub tau: TriangleType,
    pub observed: f64,
    pub predicted: f64,
    /// `observed / predicted`; `None` when the model predicts 0.
    pub ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeviationReport {
    pub schema_version: u32,
    pub kind: ReportKind,
    pub reciprocity: f64,
    pub total_triangles: u64,
    pub triangle_types: Vec<TypeDeviation>,
    pub predicted_wedge_fractions: PerWedge<f64>,
    pub observed_wedge_fractions: PerWedge<f64>,
    /// Closure chart of randomized copies of the graph, when computed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub randomized_chart: Option<ChartData>,
}

impl DeviationReport {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Columns: `triangle_type,observed,predicted,ratio`; `ratio` is empty
    /// where the prediction is zero.
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["triangle_type", "observed", "predicted", "ratio"])?;
        for d in &self.triangle_types {
            w.write_record([
                d.tau.key().to_string(),
                d.observed.to_string(),
                d.predicted.to_string(),
                d.ratio.map(|x| x.to_string()).unwrap_or_default(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Observed triangle-type fractions against the null prediction at the
/// graph's measured reciprocity.
pub fn deviation_report(g: &Digraph) -> Result<DeviationReport> {
    deviation_from_census(&CensusReport::exact(g))
}

pub fn deviation_from_census(census: &CensusReport) -> Result<DeviationReport> {
    let total: f64 = census.triangle_values().total();
    if total <= 0.0 {
        return Err(Error::Undefined("deviation report of a graph without triangles".into()));
    }
    let r = census
        .reciprocity
        .ok_or_else(|| Error::Undefined("reciprocity of a graph without edges".into()))?;
    let prediction = NullPrediction::new(r)?;
    let triangle_types = TriangleType::ALL
        .into_iter()
        .map(|tau| {
            let observed = census.triangle_values()[tau] / total;
            let predicted = prediction.triangle_probs[tau];
            TypeDeviation {
                tau,
                observed,
                predicted,
                ratio: (predicted > 0.0).then(|| observed / predicted),
            }
        })
        .collect();
    let wedge_total = census.total_wedges as f64;
    Ok(DeviationReport {
        schema_version: SCHEMA_VERSION,
        kind: census.kind,
        reciprocity: r,
        total_triangles: census.total_triangles,
        triangle_types,
        predicted_wedge_fractions: prediction.wedge_probs,
        observed_wedge_fractions: census
            .wedge_counts
            .map(|_, &w| if wedge_total > 0.0 { w as f64 / wedge_total } else { 0.0 }),
        randomized_chart: None,
    })
}

/// Closure chart of the graph with random directions, averaged over
/// `repeats` assignments using seeds `seed, seed + 1, ...`.
pub fn randomized_chart(g: &Digraph, seed: u64, repeats: u32) -> Result<ChartData> {
    if repeats == 0 {
        return Err(Error::InvalidArgument("repeats must be at least 1".into()));
    }
    let charts = (0..u64::from(repeats))
        .map(|i| {
            let h = randomize_graph(g, seed.wrapping_add(i))?;
            Ok(ChartData::from_report(&CensusReport::exact(&h)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ChartData::average(&charts))
}
