//! Uniform wedge sampling and Hoeffding-bounded closure and triangle
//! estimates.
//!
//! A sampler for wedge type `psi` draws a center `v` with probability
//! `|W_{v,psi}| / |W_psi|` (binary search over prefix sums of the per-vertex
//! counts) and then a uniform wedge centered at `v`: two distinct entries of
//! one adjacency list for homogeneous types, or one entry from each of two
//! lists for heterogeneous types. Every `psi` wedge is therefore drawn with
//! probability exactly `1 / |W_psi|`.
//!
//! Samples are split into fixed-size chunks, and chunk `c` of wedge type
//! `psi` reads its own ChaCha stream derived from `(seed, psi, c)`. Counts
//! are summed as integers, so results depend only on the seed and the
//! sample count, never on the thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::census::{
    chi, classify_triangle, total_wedge_counts, wedge_counts_at_vertex, CensusReport, Closures,
    PerTriangle, TriangleType, Wedge, WedgeCounts, WedgeType,
};
use crate::error::{Error, Result};
use crate::graph::{Digraph, EdgeRelation, VertexId};

/// Wedge types sampled by [`full_estimated_census`]. Between them they
/// contain a wedge of every triangle type.
pub const COVERING_WEDGE_TYPES: [WedgeType; 4] = [
    WedgeType::Path,
    WedgeType::RecipIn,
    WedgeType::RecipOut,
    WedgeType::RecipTot,
];

const CHUNK: u64 = 1024;

fn check_delta(delta: f64) -> Result<()> {
    if delta > 0.0 && delta < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("delta {delta} not in (0, 1)")))
    }
}

/// Samples needed so that `Pr[|kappa_hat - kappa| >= eps] <= delta`:
/// `ceil(0.5 * eps^-2 * ln(2 / delta))`.
pub fn hoeffding_k(eps: f64, delta: f64) -> Result<u64> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidArgument(format!("eps {eps} not in (0, 1)")));
    }
    check_delta(delta)?;
    Ok((0.5 * (2.0 / delta).ln() / (eps * eps)).ceil() as u64)
}

/// Half-width guaranteed by `k` samples at confidence `1 - delta`:
/// `sqrt(ln(2 / delta) / (2k))`.
pub fn hoeffding_error(k: u64, delta: f64) -> Result<f64> {
    if k == 0 {
        return Err(Error::InvalidArgument("at least one sample is required".into()));
    }
    check_delta(delta)?;
    Ok(((2.0 / delta).ln() / (2.0 * k as f64)).sqrt())
}

/// Draws uniform random wedges of one type.
#[derive(Debug, Clone)]
pub struct WedgeSampler<'g> {
    graph: &'g Digraph,
    wtype: WedgeType,
    /// Vertices with at least one wedge of `wtype`, ascending.
    centers: Vec<VertexId>,
    /// Inclusive prefix sums of the per-center wedge counts.
    cumulative: Vec<u64>,
}

impl<'g> WedgeSampler<'g> {
    pub fn new(graph: &'g Digraph, wtype: WedgeType) -> Result<Self> {
        WedgeSampler::build_many(graph, &[wtype])
            .1
            .pop()
            .ok_or(Error::NoWedges(wtype))
    }

    /// Samplers for the nonempty classes among `types`, plus `|W_psi|` for
    /// every type, from a single pass over the vertices.
    fn build_many(graph: &'g Digraph, types: &[WedgeType]) -> (WedgeCounts, Vec<WedgeSampler<'g>>) {
        let mut totals = WedgeCounts::default();
        let mut parts: Vec<(Vec<VertexId>, Vec<u64>)> = vec![(Vec::new(), Vec::new()); types.len()];
        for v in graph.vertices() {
            let w = wedge_counts_at_vertex(graph.degrees_unchecked(v));
            for (slot, add) in totals.0.iter_mut().zip(w.0) {
                *slot += add;
            }
            for (&t, (centers, cumulative)) in types.iter().zip(parts.iter_mut()) {
                if w[t] > 0 {
                    centers.push(v);
                    cumulative.push(totals[t]);
                }
            }
        }
        let samplers = types
            .iter()
            .zip(parts)
            .filter(|(&t, _)| totals[t] > 0)
            .map(|(&wtype, (centers, cumulative))| WedgeSampler {
                graph,
                wtype,
                centers,
                cumulative,
            })
            .collect();
        (totals, samplers)
    }

    pub fn wtype(&self) -> WedgeType {
        self.wtype
    }

    /// `|W_psi|`.
    pub fn total(&self) -> u64 {
        *self.cumulative.last().expect("sampler has at least one center")
    }

    /// Probability that [`WedgeSampler::sample_center`] returns `v`.
    pub fn center_probability(&self, v: VertexId) -> f64 {
        match self.centers.binary_search(&v) {
            Ok(i) => {
                let below = if i == 0 { 0 } else { self.cumulative[i - 1] };
                (self.cumulative[i] - below) as f64 / self.total() as f64
            }
            Err(_) => 0.0,
        }
    }

    pub fn sample_center<R: Rng + ?Sized>(&self, rng: &mut R) -> VertexId {
        let x = rng.random_range(0..self.total());
        let i = self.cumulative.partition_point(|&c| c <= x);
        self.centers[i]
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Wedge {
        let g = self.graph;
        let v = self.sample_center(rng);
        let (end1, end2) = match self.wtype {
            WedgeType::Out => distinct_pair(g.out_neighbors(v), rng),
            WedgeType::In => distinct_pair(g.in_neighbors(v), rng),
            WedgeType::RecipTot => distinct_pair(g.rec_neighbors(v), rng),
            WedgeType::Path => (pick(g.in_neighbors(v), rng), pick(g.out_neighbors(v), rng)),
            WedgeType::RecipIn => (pick(g.rec_neighbors(v), rng), pick(g.in_neighbors(v), rng)),
            WedgeType::RecipOut => (pick(g.rec_neighbors(v), rng), pick(g.out_neighbors(v), rng)),
        };
        Wedge {
            center: v,
            end1,
            end2,
            wtype: self.wtype,
        }
    }
}

#[inline]
fn pick<R: Rng + ?Sized>(list: &[VertexId], rng: &mut R) -> VertexId {
    list[rng.random_range(0..list.len())]
}

/// Two distinct positions of `list`, redrawing the second on a collision.
#[inline]
fn distinct_pair<R: Rng + ?Sized>(list: &[VertexId], rng: &mut R) -> (VertexId, VertexId) {
    let d = list.len();
    let i = rng.random_range(0..d);
    loop {
        let j = rng.random_range(0..d);
        if j != i {
            return (list[i], list[j]);
        }
    }
}

/// Relations of `(center, end1)` and `(center, end2)` implied by the wedge's
/// type and endpoint roles.
fn center_relations(wtype: WedgeType) -> (EdgeRelation, EdgeRelation) {
    use EdgeRelation::{Backward, Forward, Reciprocal};
    match wtype {
        WedgeType::Out => (Forward, Forward),
        WedgeType::Path => (Backward, Forward),
        WedgeType::In => (Backward, Backward),
        WedgeType::RecipIn => (Reciprocal, Backward),
        WedgeType::RecipOut => (Reciprocal, Forward),
        WedgeType::RecipTot => (Reciprocal, Reciprocal),
    }
}

/// Type of the triangle closing `w`, or `None` if its endpoints are not
/// adjacent.
pub fn is_closed(g: &Digraph, w: &Wedge) -> Option<TriangleType> {
    let r_ends = g.relation(w.end1, w.end2);
    if !r_ends.is_edge() {
        return None;
    }
    let (r_c1, r_c2) = center_relations(w.wtype);
    classify_triangle(r_c1, r_c2, r_ends).ok()
}

fn chunk_rng(seed: u64, wtype: WedgeType, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((wtype.index() as u64 + 1) << 48) | chunk);
    rng
}

/// Closed-wedge tallies of one sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleTally {
    pub wtype: WedgeType,
    pub samples: u64,
    pub closed: PerTriangle<u64>,
}

impl SampleTally {
    pub fn closed_any(&self) -> u64 {
        self.closed.total()
    }
}

/// Draws `k` wedges with replacement and counts how many close into each
/// triangle type.
pub fn sample_closures(sampler: &WedgeSampler<'_>, k: u64, seed: u64) -> SampleTally {
    let chunks = k.div_ceil(CHUNK);
    let counts = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = chunk_rng(seed, sampler.wtype, c);
            let n = CHUNK.min(k - c * CHUNK);
            let mut acc = [0u64; 7];
            for _ in 0..n {
                let w = sampler.sample(&mut rng);
                if let Some(tau) = is_closed(sampler.graph, &w) {
                    acc[tau.index()] += 1;
                }
            }
            acc
        })
        .reduce(
            || [0u64; 7],
            |mut x, y| {
                for (a, b) in x.iter_mut().zip(y) {
                    *a += b;
                }
                x
            },
        );
    SampleTally {
        wtype: sampler.wtype,
        samples: k,
        closed: PerTriangle(counts),
    }
}

/// Parameters shared by the estimators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SamplingConfig {
    /// Wedges drawn per sampled type.
    pub samples: u64,
    pub delta: f64,
    pub seed: u64,
}

impl SamplingConfig {
    pub fn new(samples: u64, delta: f64, seed: u64) -> Result<Self> {
        if samples == 0 {
            return Err(Error::InvalidArgument("at least one sample is required".into()));
        }
        check_delta(delta)?;
        Ok(SamplingConfig {
            samples,
            delta,
            seed,
        })
    }

    pub fn eps_bound(&self) -> f64 {
        ((2.0 / self.delta).ln() / (2.0 * self.samples as f64)).sqrt()
    }

    fn validate(&self) -> Result<()> {
        SamplingConfig::new(self.samples, self.delta, self.seed).map(|_| ())
    }
}

/// What a closure estimate counts as closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureTarget {
    Triangle(TriangleType),
    /// Closed into a triangle of any type.
    Any,
}

impl Serialize for ClosureTarget {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ClosureTarget::Triangle(t) => t.serialize(s),
            ClosureTarget::Any => s.serialize_str("any"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClosureEstimate {
    pub psi: WedgeType,
    pub tau: ClosureTarget,
    pub k: u64,
    pub k_closed: u64,
    pub kappa_hat: f64,
    pub delta: f64,
    pub eps_bound: f64,
}

/// Estimates `kappa_{psi,tau}` for every `tau` with `chi(psi, tau) > 0`,
/// followed by the total closure of `psi`, all from one shared sample.
pub fn estimate_closures(g: &Digraph, psi: WedgeType, cfg: SamplingConfig) -> Result<Vec<ClosureEstimate>> {
    cfg.validate()?;
    let sampler = WedgeSampler::new(g, psi)?;
    let tally = sample_closures(&sampler, cfg.samples, cfg.seed);
    let eps_bound = cfg.eps_bound();
    let estimate = |tau, k_closed: u64| ClosureEstimate {
        psi,
        tau,
        k: cfg.samples,
        k_closed,
        kappa_hat: k_closed as f64 / cfg.samples as f64,
        delta: cfg.delta,
        eps_bound,
    };
    let mut out: Vec<ClosureEstimate> = TriangleType::ALL
        .into_iter()
        .filter(|&tau| chi(psi, tau) > 0)
        .map(|tau| estimate(ClosureTarget::Triangle(tau), tally.closed[tau]))
        .collect();
    out.push(estimate(ClosureTarget::Any, tally.closed_any()));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TriangleEstimate {
    pub tau: TriangleType,
    pub psi_used: WedgeType,
    /// Wedges drawn; 0 when the estimate is an exact zero.
    pub k: u64,
    pub kappa_hat: f64,
    /// `|W_psi_used|`.
    pub wedges: u64,
    pub t_hat: f64,
    pub abs_error_bound: f64,
}

impl TriangleEstimate {
    fn exact_zero(tau: TriangleType, psi: WedgeType) -> Self {
        TriangleEstimate {
            tau,
            psi_used: psi,
            k: 0,
            kappa_hat: 0.0,
            wedges: 0,
            t_hat: 0.0,
            abs_error_bound: 0.0,
        }
    }

    fn from_tally(tally: &SampleTally, tau: TriangleType, wedges: u64, eps: f64) -> Self {
        let psi = tally.wtype;
        let scale = wedges as f64 / f64::from(chi(psi, tau));
        let kappa_hat = tally.closed[tau] as f64 / tally.samples as f64;
        TriangleEstimate {
            tau,
            psi_used: psi,
            k: tally.samples,
            kappa_hat,
            wedges,
            t_hat: kappa_hat * scale,
            abs_error_bound: eps * scale,
        }
    }
}

/// The eligible wedge type with the smallest `|W_psi| / chi(psi, tau)`,
/// ignoring empty classes. Ties go to the earlier type.
fn best_wedge_type(
    wedges: &WedgeCounts,
    tau: TriangleType,
    candidates: &[WedgeType],
) -> Option<WedgeType> {
    candidates
        .iter()
        .copied()
        .filter(|&psi| chi(psi, tau) > 0 && wedges[psi] > 0)
        .min_by(|&a, &b| {
            let ra = wedges[a] as f64 / f64::from(chi(a, tau));
            let rb = wedges[b] as f64 / f64::from(chi(b, tau));
            ra.total_cmp(&rb)
        })
}

/// Estimates `|T_tau|` from `psi` wedges. With `psi = None` the wedge type
/// with the tightest bound is chosen. An empty wedge class implies no such
/// triangles, which is returned as an exact zero.
pub fn estimate_triangles(
    g: &Digraph,
    tau: TriangleType,
    psi: Option<WedgeType>,
    cfg: SamplingConfig,
) -> Result<TriangleEstimate> {
    cfg.validate()?;
    let wedges = total_wedge_counts(g);
    let psi = match psi {
        Some(p) if chi(p, tau) == 0 => return Err(Error::IncompatibleTypes { psi: p, tau }),
        Some(p) => p,
        None => match best_wedge_type(&wedges, tau, &WedgeType::ALL) {
            Some(p) => p,
            None => {
                let first = WedgeType::ALL.into_iter().find(|&p| chi(p, tau) > 0);
                return Ok(TriangleEstimate::exact_zero(tau, first.expect("every row of chi is nonzero")));
            }
        },
    };
    if wedges[psi] == 0 {
        return Ok(TriangleEstimate::exact_zero(tau, psi));
    }
    let sampler = WedgeSampler::new(g, psi)?;
    let tally = sample_closures(&sampler, cfg.samples, cfg.seed);
    Ok(TriangleEstimate::from_tally(&tally, tau, wedges[psi], cfg.eps_bound()))
}

/// Sampling parameters and per-type triangle estimates attached to an
/// estimated report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EstimationInfo {
    pub k: u64,
    pub delta: f64,
    pub eps_bound: f64,
    pub seed: u64,
    pub wedge_types_used: Vec<WedgeType>,
    pub triangle_estimates: Vec<TriangleEstimate>,
    /// Closure keys that were sampled directly; the rest are derived from
    /// triangle estimates.
    pub sampled_closures: Vec<String>,
}

/// Estimated census from `cfg.samples` wedges of each covering type.
///
/// Closures of sampled wedge types are the direct sample fractions. Each
/// triangle type is estimated from the covering type with the tightest
/// bound, and closures of the unsampled types (out, in) are derived as
/// `chi * T_hat / |W_psi|`, capped so that no wedge type closes more than
/// all of its wedges.
pub fn full_estimated_census(g: &Digraph, cfg: SamplingConfig) -> Result<CensusReport> {
    cfg.validate()?;
    let eps = cfg.eps_bound();
    let (wedges, samplers) = WedgeSampler::build_many(g, &COVERING_WEDGE_TYPES);
    let tallies: Vec<SampleTally> = samplers
        .iter()
        .map(|s| sample_closures(s, cfg.samples, cfg.seed))
        .collect();
    let tally_of = |psi: WedgeType| tallies.iter().find(|t| t.wtype == psi);

    let mut triangle_estimates = Vec::with_capacity(7);
    let mut t_hat = PerTriangle::<f64>::default();
    for tau in TriangleType::ALL {
        let est = match best_wedge_type(&wedges, tau, &COVERING_WEDGE_TYPES) {
            Some(psi) => {
                let tally = tally_of(psi).expect("nonempty covering types are sampled");
                TriangleEstimate::from_tally(tally, tau, wedges[psi], eps)
            }
            None => {
                let first = COVERING_WEDGE_TYPES
                    .into_iter()
                    .find(|&p| chi(p, tau) > 0)
                    .expect("covering types reach every triangle type");
                TriangleEstimate::exact_zero(tau, first)
            }
        };
        t_hat[tau] = est.t_hat;
        triangle_estimates.push(est);
    }

    let mut closures = Closures::default();
    let mut sampled_closures = Vec::new();
    for psi in WedgeType::ALL {
        if wedges[psi] == 0 {
            continue;
        }
        if let Some(tally) = tally_of(psi) {
            for tau in TriangleType::ALL.into_iter().filter(|&t| chi(psi, t) > 0) {
                closures.set(psi, tau, tally.closed[tau] as f64 / tally.samples as f64);
                sampled_closures.push(crate::census::pair_key(psi, tau));
            }
        } else {
            for tau in TriangleType::ALL.into_iter().filter(|&t| chi(psi, t) > 0) {
                let kappa = f64::from(chi(psi, tau)) * t_hat[tau] / wedges[psi] as f64;
                closures.set(psi, tau, kappa.min(1.0));
            }
            let total = closures.total(psi);
            if total > 1.0 {
                for tau in TriangleType::ALL {
                    let k = closures.get(psi, tau);
                    closures.set(psi, tau, k / total);
                }
            }
        }
    }

    let info = EstimationInfo {
        k: cfg.samples,
        delta: cfg.delta,
        eps_bound: eps,
        seed: cfg.seed,
        wedge_types_used: tallies.iter().map(|t| t.wtype).collect(),
        triangle_estimates,
        sampled_closures,
    };
    Ok(CensusReport::from_estimates(g, wedges, t_hat, closures, info))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(k: u64) -> SamplingConfig {
        SamplingConfig::new(k, 0.001, 7).unwrap()
    }

    fn id(g: &Digraph, label: u64) -> VertexId {
        VertexId(g.labels().binary_search(&label).unwrap() as u32)
    }

    fn g1() -> Digraph {
        Digraph::from_pairs([(1, 2), (2, 3), (1, 3), (3, 4), (4, 3)])
    }

    #[test]
    fn hoeffding_reference_values() {
        let e5 = hoeffding_error(5000, 0.001).unwrap();
        assert!((e5 - (2000f64.ln() / 1e4).sqrt()).abs() < 1e-15);
        assert!((e5 - 0.0276).abs() < 5e-5);
        assert!((hoeffding_error(10_000, 0.001).unwrap() - 0.0195).abs() < 5e-5);
        assert!((hoeffding_error(20_000, 0.001).unwrap() - 0.0138).abs() < 5e-5);
    }

    #[test]
    fn hoeffding_k_is_minimal() {
        for &(eps, delta) in &[(0.01, 0.001), (0.05, 0.05), (0.0138, 0.001), (0.2, 0.5)] {
            let k = hoeffding_k(eps, delta).unwrap();
            assert!(hoeffding_error(k, delta).unwrap() <= eps);
            assert!(hoeffding_error(k - 1, delta).unwrap() > eps);
        }
    }

    #[test]
    fn hoeffding_argument_checks() {
        assert!(hoeffding_k(0.0, 0.1).is_err());
        assert!(hoeffding_k(1.0, 0.1).is_err());
        assert!(hoeffding_k(0.1, 0.0).is_err());
        assert!(hoeffding_k(0.1, 1.0).is_err());
        assert!(hoeffding_error(0, 0.1).is_err());
        assert!(SamplingConfig::new(0, 0.1, 0).is_err());
    }

    #[test]
    fn sampler_on_directed_path() {
        let g = Digraph::from_pairs([(1, 2), (2, 3)]);
        let s = WedgeSampler::new(&g, WedgeType::Path).unwrap();
        assert_eq!(s.total(), 1);
        assert_eq!(s.center_probability(id(&g, 2)), 1.0);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let w = s.sample(&mut rng);
            assert_eq!((w.center, w.end1, w.end2), (id(&g, 2), id(&g, 1), id(&g, 3)));
            assert_eq!(is_closed(&g, &w), None);
        }
    }

    #[test]
    fn sampler_mass_on_g1() {
        let g = g1();
        let s = WedgeSampler::new(&g, WedgeType::In).unwrap();
        assert_eq!(s.total(), 1);
        assert_eq!(s.center_probability(id(&g, 3)), 1.0);
    }

    #[test]
    fn sampler_rejects_empty_class() {
        let (g, _) = Digraph::from_dense_edges(3, []);
        for psi in WedgeType::ALL {
            assert!(matches!(WedgeSampler::new(&g, psi), Err(Error::NoWedges(p)) if p == psi));
        }
    }

    #[test]
    fn closure_of_sampled_wedges() {
        let trans = Digraph::from_pairs([(1, 2), (2, 3), (1, 3)]);
        let s = WedgeSampler::new(&trans, WedgeType::Path).unwrap();
        let w = s.sample(&mut ChaCha8Rng::seed_from_u64(3));
        assert_eq!(is_closed(&trans, &w), Some(TriangleType::Trans));

        // 1<->2, 1->3, 2->3: corners 1 and 2 are recip-out wedges
        let in_recip = Digraph::from_pairs([(1, 2), (2, 1), (1, 3), (2, 3)]);
        let s = WedgeSampler::new(&in_recip, WedgeType::RecipOut).unwrap();
        assert_eq!(s.total(), 2);
        let w = s.sample(&mut ChaCha8Rng::seed_from_u64(3));
        assert_eq!(is_closed(&in_recip, &w), Some(TriangleType::InRecip));

        let out_recip = Digraph::from_pairs([(1, 2), (2, 1), (3, 1), (3, 2)]);
        let s = WedgeSampler::new(&out_recip, WedgeType::RecipIn).unwrap();
        let w = s.sample(&mut ChaCha8Rng::seed_from_u64(3));
        assert_eq!(is_closed(&out_recip, &w), Some(TriangleType::OutRecip));
    }

    #[test]
    fn estimate_closures_on_trans_triangle() {
        let g = Digraph::from_pairs([(1, 2), (2, 3), (1, 3)]);
        let est = estimate_closures(&g, WedgeType::Path, cfg(50)).unwrap();
        assert_eq!(est.len(), 4);
        let trans = est
            .iter()
            .find(|e| e.tau == ClosureTarget::Triangle(TriangleType::Trans))
            .unwrap();
        assert_eq!(trans.kappa_hat, 1.0);
        assert_eq!(est.last().unwrap().tau, ClosureTarget::Any);
        assert_eq!(est.last().unwrap().kappa_hat, 1.0);
    }

    #[test]
    fn estimate_closures_open_wedges() {
        let est = estimate_closures(&g1(), WedgeType::RecipIn, cfg(100)).unwrap();
        assert!(est.iter().all(|e| e.kappa_hat == 0.0 && e.k == 100));
        assert!(matches!(
            estimate_closures(&g1(), WedgeType::RecipTot, cfg(10)),
            Err(Error::NoWedges(WedgeType::RecipTot))
        ));
    }

    #[test]
    fn estimate_triangles_small_cases() {
        let g = Digraph::from_pairs([(1, 2), (2, 3), (1, 3)]);
        let e = estimate_triangles(&g, TriangleType::Trans, Some(WedgeType::Out), cfg(10)).unwrap();
        assert_eq!(e.t_hat, 1.0);
        assert!(matches!(
            estimate_triangles(&g, TriangleType::Loop, Some(WedgeType::Out), cfg(10)),
            Err(Error::IncompatibleTypes { .. })
        ));
        let e = estimate_triangles(&g, TriangleType::Loop, None, cfg(10)).unwrap();
        assert_eq!(e.psi_used, WedgeType::Path);
        assert_eq!(e.t_hat, 0.0);
        // no reciprocal wedges at all: exact zero
        let e = estimate_triangles(&g, TriangleType::ThreeRecip, None, cfg(10)).unwrap();
        assert_eq!((e.t_hat, e.k, e.abs_error_bound), (0.0, 0, 0.0));
    }

    #[test]
    fn full_census_of_trans_triangle_is_exact() {
        let g = Digraph::from_pairs([(1, 2), (2, 3), (1, 3)]);
        let est = full_estimated_census(&g, cfg(200)).unwrap();
        let exact = CensusReport::exact(&g);
        assert_eq!(est.triangle_counts, exact.triangle_counts);
        assert_eq!(est.closures, exact.closures);
        assert_eq!(est.transitivity, exact.transitivity);
        let info = est.estimation.as_ref().unwrap();
        assert_eq!(info.wedge_types_used, vec![WedgeType::Path]);
    }

    #[test]
    fn same_seed_same_estimate() {
        let pairs: Vec<(u64, u64)> = (0..200u64).map(|i| (i % 37, (i * 7 + 3) % 41)).collect();
        let g = Digraph::from_pairs(pairs);
        let a = full_estimated_census(&g, cfg(3000)).unwrap();
        let b = full_estimated_census(&g, cfg(3000)).unwrap();
        assert_eq!(a, b);
    }
}
