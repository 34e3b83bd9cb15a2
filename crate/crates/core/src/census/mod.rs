//! Wedge and triangle taxonomy, exact counting, and closure statistics.

mod count;
mod report;
mod taxonomy;

pub use count::{
    brute_force_census, brute_force_census_with_cap, enumerate_triangle_census,
    total_wedge_counts, wedge_counts_at_vertex, BRUTE_FORCE_CAP,
};
pub use report::{
    closures, cyclic_breakdown, pair_key, recip_group_closure, CensusReport, Closures,
    GraphSummary, GroupsReport, ReportKind, SCHEMA_VERSION,
};
pub use taxonomy::{
    chi, classify_triangle, closure_pairs, PerTriangle, PerWedge, TriangleCounts, TriangleType,
    Wedge, WedgeCounts, WedgeType,
};
