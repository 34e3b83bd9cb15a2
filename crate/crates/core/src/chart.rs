//! Plot-ready closure chart data.
//!
//! One stacked bar per wedge type: the bar's segments are the closures
//! `kappa_{psi,tau}` per triangle type, so its height is the total closure
//! of that wedge type. Each bar carries its share of all wedges, each
//! triangle type its share of all triangles, and the chart carries the
//! undirected transitivity as a reference line.

use std::io::Write;

use serde::Serialize;

use crate::census::{CensusReport, PerTriangle, ReportKind, TriangleType, WedgeType, SCHEMA_VERSION};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WedgeBar {
    pub wedge_type: WedgeType,
    pub numeral: &'static str,
    /// Percentage of all wedges.
    pub percent: f64,
    pub total_closure: f64,
    pub segments: PerTriangle<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TriangleShare {
    pub triangle_type: TriangleType,
    pub letter: &'static str,
    /// Percentage of all triangles.
    pub percent: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChartData {
    pub schema_version: u32,
    pub kind: ReportKind,
    /// Number of charts averaged into this one.
    pub repeats: u32,
    pub transitivity: Option<f64>,
    pub wedges: Vec<WedgeBar>,
    pub triangles: Vec<TriangleShare>,
}

impl ChartData {
    pub fn from_report(report: &CensusReport) -> Self {
        let wedges = WedgeType::ALL
            .into_iter()
            .map(|psi| {
                let segments = PerTriangle::from_fn(|tau| report.closures.get(psi, tau));
                WedgeBar {
                    wedge_type: psi,
                    numeral: psi.numeral(),
                    percent: report.wedge_percentages[psi],
                    total_closure: segments.total(),
                    segments,
                }
            })
            .collect();
        let triangles = TriangleType::ALL
            .into_iter()
            .map(|tau| TriangleShare {
                triangle_type: tau,
                letter: tau.letter(),
                percent: report.triangle_percentages[tau],
            })
            .collect();
        ChartData {
            schema_version: SCHEMA_VERSION,
            kind: report.kind,
            repeats: 1,
            transitivity: report.transitivity,
            wedges,
            triangles,
        }
    }

    /// Element-wise mean of charts of the same layout.
    ///
    /// # Panics
    ///
    /// If `charts` is empty.
    pub fn average(charts: &[ChartData]) -> ChartData {
        assert!(!charts.is_empty(), "cannot average zero charts");
        let n = charts.len() as f64;
        let mut out = charts[0].clone();
        out.repeats = charts.iter().map(|c| c.repeats).sum();
        for (i, bar) in out.wedges.iter_mut().enumerate() {
            bar.percent = charts.iter().map(|c| c.wedges[i].percent).sum::<f64>() / n;
            bar.segments = PerTriangle::from_fn(|tau| {
                charts.iter().map(|c| c.wedges[i].segments[tau]).sum::<f64>() / n
            });
            bar.total_closure = bar.segments.total();
        }
        for (i, share) in out.triangles.iter_mut().enumerate() {
            share.percent = charts.iter().map(|c| c.triangles[i].percent).sum::<f64>() / n;
        }
        let defined: Vec<f64> = charts.iter().filter_map(|c| c.transitivity).collect();
        out.transitivity = (!defined.is_empty()).then(|| defined.iter().sum::<f64>() / defined.len() as f64);
        out
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Columns: `series,type,label,percent`, the seven closure segments,
    /// `total_closure`, `transitivity`. Wedge rows come first; triangle rows
    /// leave the closure columns empty.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec!["series", "type", "label", "percent"];
        header.extend(TriangleType::ALL.iter().map(|t| t.key()));
        header.extend(["total_closure", "transitivity"]);
        w.write_record(&header)?;
        let transitivity = self.transitivity.map(|t| t.to_string()).unwrap_or_default();
        for bar in &self.wedges {
            let mut row = vec![
                "wedge".to_string(),
                bar.wedge_type.key().to_string(),
                bar.numeral.to_string(),
                bar.percent.to_string(),
            ];
            row.extend(bar.segments.0.iter().map(|k| k.to_string()));
            row.push(bar.total_closure.to_string());
            row.push(transitivity.clone());
            w.write_record(&row)?;
        }
        for share in &self.triangles {
            let mut row = vec![
                "triangle".to_string(),
                share.triangle_type.key().to_string(),
                share.letter.to_string(),
                share.percent.to_string(),
            ];
            row.extend(std::iter::repeat_n(String::new(), 8));
            row.push(transitivity.clone());
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }
}
