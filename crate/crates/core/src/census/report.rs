use std::collections::BTreeMap;
use std::io::Write;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use super::count::{enumerate_triangle_census, total_wedge_counts};
use super::taxonomy::{chi, closure_pairs, PerTriangle, PerWedge, TriangleCounts, TriangleType, WedgeCounts, WedgeType};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::sampling::EstimationInfo;

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub basic_edges: u64,
    pub reciprocal_edges: u64,
    pub edges: u64,
}

impl GraphSummary {
    pub fn of(g: &Digraph) -> Self {
        GraphSummary {
            vertices: g.vertex_count(),
            basic_edges: g.basic_edge_count(),
            reciprocal_edges: g.reciprocal_edge_count(),
            edges: g.edge_count(),
        }
    }
}

/// `kappa[psi][tau]`, the fraction of `psi` wedges that are `tau`-closed.
/// Zero wherever `chi(psi, tau) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Closures(pub [[f64; 7]; 6]);

impl Closures {
    /// `kappa = chi * |T_tau| / |W_psi|`, or 0 when `|W_psi| = 0`.
    pub fn from_counts(wedges: &WedgeCounts, triangles: &PerTriangle<f64>) -> Self {
        let mut k = Closures::default();
        for (psi, tau) in closure_pairs() {
            let w = wedges[psi];
            if w > 0 {
                k.0[psi.index()][tau.index()] = f64::from(chi(psi, tau)) * triangles[tau] / w as f64;
            }
        }
        k
    }

    #[inline]
    pub fn get(&self, psi: WedgeType, tau: TriangleType) -> f64 {
        self.0[psi.index()][tau.index()]
    }

    #[inline]
    pub fn set(&mut self, psi: WedgeType, tau: TriangleType, value: f64) {
        self.0[psi.index()][tau.index()] = value;
    }

    /// Fraction of `psi` wedges closed into any triangle.
    pub fn total(&self, psi: WedgeType) -> f64 {
        self.0[psi.index()].iter().sum()
    }
}

impl Serialize for Closures {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(15))?;
        for (psi, tau) in closure_pairs() {
            map.serialize_entry(&pair_key(psi, tau), &self.get(psi, tau))?;
        }
        map.end()
    }
}

/// `"path:loop"` style key of a closure pair.
pub fn pair_key(psi: WedgeType, tau: TriangleType) -> String {
    format!("{}:{}", psi.key(), tau.key())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportKind {
    Exact,
    Estimated,
}

/// Wedge and triangle census with all closure statistics.
///
/// For estimated reports `triangle_counts` holds the rounded estimates;
/// the unrounded values and their error bounds sit in `estimation`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusReport {
    pub schema_version: u32,
    pub kind: ReportKind,
    pub graph: GraphSummary,
    pub wedge_counts: WedgeCounts,
    pub triangle_counts: TriangleCounts,
    pub total_wedges: u64,
    pub total_triangles: u64,
    pub reciprocity: Option<f64>,
    pub transitivity: Option<f64>,
    pub closures: Closures,
    /// Closure keys whose wedge class is empty; those closures are reported as 0.
    pub undefined_closures: Vec<String>,
    pub wedge_percentages: PerWedge<f64>,
    pub triangle_percentages: PerTriangle<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub estimation: Option<EstimationInfo>,
    #[serde(skip)]
    triangle_values: PerTriangle<f64>,
}

impl CensusReport {
    /// Exact census of `g`.
    pub fn exact(g: &Digraph) -> Self {
        let wedges = total_wedge_counts(g);
        let triangles = enumerate_triangle_census(g);
        Self::from_exact_counts(g, wedges, triangles)
    }

    pub fn from_exact_counts(g: &Digraph, wedges: WedgeCounts, triangles: TriangleCounts) -> Self {
        let values = triangles.map(|_, &t| t as f64);
        let closures = Closures::from_counts(&wedges, &values);
        Self::assemble(g, ReportKind::Exact, wedges, values, closures, None)
    }

    /// Report from estimated triangle counts and closures.
    pub fn from_estimates(
        g: &Digraph,
        wedges: WedgeCounts,
        triangles: PerTriangle<f64>,
        closures: Closures,
        info: EstimationInfo,
    ) -> Self {
        Self::assemble(g, ReportKind::Estimated, wedges, triangles, closures, Some(info))
    }

    fn assemble(
        g: &Digraph,
        kind: ReportKind,
        wedges: WedgeCounts,
        triangles: PerTriangle<f64>,
        closures: Closures,
        estimation: Option<EstimationInfo>,
    ) -> Self {
        let total_wedges = wedges.total();
        let triangle_total: f64 = triangles.total();
        let undefined_closures = closure_pairs()
            .filter(|&(psi, _)| wedges[psi] == 0)
            .map(|(psi, tau)| pair_key(psi, tau))
            .collect();
        let wedge_percentages = wedges.map(|_, &w| percent(w as f64, total_wedges as f64));
        let triangle_percentages = triangles.map(|_, &t| percent(t, triangle_total));
        let transitivity = (total_wedges > 0).then(|| 3.0 * triangle_total / total_wedges as f64);
        let triangle_counts = triangles.map(|_, &t| t.round().max(0.0) as u64);
        CensusReport {
            schema_version: SCHEMA_VERSION,
            kind,
            graph: GraphSummary::of(g),
            wedge_counts: wedges,
            total_triangles: triangle_counts.total(),
            triangle_counts,
            total_wedges,
            reciprocity: g.reciprocity().ok(),
            transitivity,
            closures,
            undefined_closures,
            wedge_percentages,
            triangle_percentages,
            estimation,
            triangle_values: triangles,
        }
    }

    /// Triangle counts as used for closures: exact counts, or unrounded estimates.
    pub fn triangle_values(&self) -> &PerTriangle<f64> {
        &self.triangle_values
    }

    /// Fraction of wedges with `k` reciprocal edges (0, 1 or 2) that close
    /// into any triangle.
    pub fn group_closure(&self, k: u8) -> Result<f64> {
        if k > 2 {
            return Err(Error::InvalidArgument(format!("reciprocal edge count {k} not in 0..=2")));
        }
        let group: Vec<WedgeType> = WedgeType::ALL
            .into_iter()
            .filter(|t| t.reciprocal_edges() == k)
            .collect();
        let wedges: u64 = group.iter().map(|&psi| self.wedge_counts[psi]).sum();
        if wedges == 0 {
            return Err(Error::Undefined(format!("no wedges with {k} reciprocal edges")));
        }
        let closed: f64 = group
            .iter()
            .flat_map(|&psi| {
                TriangleType::ALL
                    .into_iter()
                    .map(move |tau| f64::from(chi(psi, tau)) * self.triangle_values[tau])
            })
            .sum();
        Ok(closed / wedges as f64)
    }

    /// Share of each cyclic triangle type among all cyclic triangles.
    pub fn cyclic_breakdown(&self) -> Result<BTreeMap<TriangleType, f64>> {
        let total: f64 = TriangleType::CYCLIC.iter().map(|&t| self.triangle_values[t]).sum();
        if total <= 0.0 {
            return Err(Error::Undefined("no triangles containing a cycle".into()));
        }
        Ok(TriangleType::CYCLIC
            .into_iter()
            .map(|t| (t, self.triangle_values[t] / total))
            .collect())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// One row per closure pair.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "wedge_type",
            "triangle_type",
            "chi",
            "wedge_count",
            "triangle_count",
            "closure",
        ])?;
        for (psi, tau) in closure_pairs() {
            w.write_record([
                psi.key().to_string(),
                tau.key().to_string(),
                chi(psi, tau).to_string(),
                self.wedge_counts[psi].to_string(),
                self.triangle_values[tau].to_string(),
                self.closures.get(psi, tau).to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

fn percent(part: f64, whole: f64) -> f64 {
    if whole > 0.0 {
        100.0 * part / whole
    } else {
        0.0
    }
}

/// Exact census and closures of `g`.
pub fn closures(g: &Digraph) -> CensusReport {
    CensusReport::exact(g)
}

/// Exact closure fraction of the wedges with `k` reciprocal edges.
pub fn recip_group_closure(g: &Digraph, k: u8) -> Result<f64> {
    CensusReport::exact(g).group_closure(k)
}

pub fn cyclic_breakdown(g: &Digraph) -> Result<BTreeMap<TriangleType, f64>> {
    CensusReport::exact(g).cyclic_breakdown()
}

/// Reciprocity-grouped closures and cyclic-triangle shares of one census.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupsReport {
    pub schema_version: u32,
    pub kind: ReportKind,
    pub graph: GraphSummary,
    pub reciprocity: Option<f64>,
    /// Keyed by the number of reciprocal edges; `null` for an empty group.
    pub group_closures: BTreeMap<String, Option<f64>>,
    pub cyclic_breakdown: Option<BTreeMap<TriangleType, f64>>,
}

impl GroupsReport {
    pub fn from_census(report: &CensusReport) -> Self {
        let group_closures = (0..=2u8)
            .map(|k| (k.to_string(), report.group_closure(k).ok()))
            .collect();
        GroupsReport {
            schema_version: SCHEMA_VERSION,
            kind: report.kind,
            graph: report.graph,
            reciprocity: report.reciprocity,
            group_closures,
            cyclic_breakdown: report.cyclic_breakdown().ok(),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Columns: `section,key,value`, with sections `group_closure` (keyed
    /// by reciprocal-edge count) and `cyclic` (keyed by triangle type).
    /// Undefined values are empty.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["section", "key", "value"])?;
        for (k, v) in &self.group_closures {
            w.write_record(["group_closure", k, &v.map(|x| x.to_string()).unwrap_or_default()])?;
        }
        for tau in TriangleType::CYCLIC {
            let v = self.cyclic_breakdown.as_ref().and_then(|b| b.get(&tau));
            w.write_record(["cyclic", tau.key(), &v.map(|x| x.to_string()).unwrap_or_default()])?;
        }
        w.flush()?;
        Ok(())
    }
}
