//! Immutable digraph with reciprocal edges merged.
//!
//! Every unordered vertex pair carries at most one relation: a basic one-way
//! edge or a single reciprocal edge standing for the mutual pair
//! `{(u,w),(w,u)}`. Adjacency is kept in three compressed-sparse-row arrays
//! (basic out, basic in, reciprocal), each row sorted by vertex id so that
//! edge lookup is a binary search.
//!
//! Edge counting convention: `|E| = m_basic + m_rec`. A merged reciprocal
//! edge counts once, which is also the denominator of [`Digraph::reciprocity`].

use std::fmt;
use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};

/// Dense vertex index in `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[repr(transparent)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct DegreeTriple {
    pub din: u64,
    pub dout: u64,
    pub drec: u64,
}

impl DegreeTriple {
    pub fn new(din: u64, dout: u64, drec: u64) -> Self {
        DegreeTriple { din, dout, drec }
    }

    pub fn total(&self) -> u64 {
        self.din + self.dout + self.drec
    }
}

/// Relation of an ordered vertex pair `(u, w)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeRelation {
    None,
    /// Basic edge `u -> w`.
    Forward,
    /// Basic edge `w -> u`.
    Backward,
    Reciprocal,
}

impl EdgeRelation {
    /// The same relation seen from the other endpoint.
    #[inline]
    pub const fn mirror(self) -> Self {
        match self {
            EdgeRelation::Forward => EdgeRelation::Backward,
            EdgeRelation::Backward => EdgeRelation::Forward,
            other => other,
        }
    }

    #[inline]
    pub const fn is_edge(self) -> bool {
        !matches!(self, EdgeRelation::None)
    }
}

/// Counters collected while cleaning raw input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct IngestStats {
    pub pairs_read: u64,
    pub self_loops: u64,
    pub duplicates: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct Csr {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
}

impl Csr {
    fn from_counts(counts: &[usize]) -> Self {
        let mut offsets = Vec::with_capacity(counts.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for &c in counts {
            acc += c;
            offsets.push(acc);
        }
        Csr {
            offsets,
            targets: vec![VertexId(0); acc],
        }
    }

    #[inline]
    fn row(&self, v: usize) -> &[VertexId] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    fn len_of(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out_adj: Csr,
    in_adj: Csr,
    rec_adj: Csr,
    m_basic: u64,
    m_rec: u64,
    labels: Vec<u64>,
}

impl Digraph {
    /// Builds a digraph from labelled ordered pairs, remapping labels densely
    /// in ascending label order. Self-loops are dropped, duplicates merged and
    /// mutual pairs turned into reciprocal edges.
    pub fn from_pairs<I>(pairs: I) -> Digraph
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        Self::from_pairs_with_stats(pairs).0
    }

    pub fn from_pairs_with_stats<I>(pairs: I) -> (Digraph, IngestStats)
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        match Self::try_from_pairs(pairs.into_iter().map(Ok)) {
            Ok(built) => built,
            Err(_) => unreachable!("infallible input"),
        }
    }

    /// Like [`Digraph::from_pairs_with_stats`] but consumes a fallible stream,
    /// such as the one produced by [`crate::io::EdgeListReader`].
    pub fn try_from_pairs<I>(pairs: I) -> Result<(Digraph, IngestStats)>
    where
        I: IntoIterator<Item = Result<(u64, u64)>>,
    {
        let raw: Vec<(u64, u64)> = pairs.into_iter().collect::<Result<_>>()?;
        let mut labels: Vec<u64> = raw.iter().flat_map(|&(a, b)| [a, b]).collect();
        labels.sort_unstable();
        labels.dedup();
        if labels.len() > u32::MAX as usize {
            return Err(Error::InvalidArgument(format!(
                "{} distinct vertices exceed the 32-bit id space",
                labels.len()
            )));
        }
        let dense = |label: u64| -> u32 {
            // labels holds every endpoint, so the search always succeeds
            labels.binary_search(&label).unwrap_or_else(|_| unreachable!()) as u32
        };
        let edges: Vec<(u32, u32)> = raw.iter().map(|&(a, b)| (dense(a), dense(b))).collect();
        drop(raw);
        let n = labels.len();
        Ok(Self::build(n, edges, labels))
    }

    /// Builds a digraph over vertices `0..n` from dense ordered pairs. The
    /// label of each vertex is its index.
    ///
    /// # Panics
    ///
    /// If an endpoint is `>= n`.
    pub fn from_dense_edges<I>(n: usize, edges: I) -> (Digraph, IngestStats)
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let labels = (0..n as u64).collect();
        Self::from_dense_edges_labelled(labels, edges)
    }

    /// Builds over `labels.len()` vertices, keeping the given label table.
    pub fn from_dense_edges_labelled<I>(labels: Vec<u64>, edges: I) -> (Digraph, IngestStats)
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let n = labels.len();
        let edges: Vec<(u32, u32)> = edges.into_iter().collect();
        for &(a, b) in &edges {
            assert!(
                (a as usize) < n && (b as usize) < n,
                "edge ({a}, {b}) out of range for {n} vertices"
            );
        }
        Self::build(n, edges, labels)
    }

    fn build(n: usize, edges: Vec<(u32, u32)>, labels: Vec<u64>) -> (Digraph, IngestStats) {
        let mut stats = IngestStats {
            pairs_read: edges.len() as u64,
            ..IngestStats::default()
        };
        let mut keys: Vec<u64> = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                stats.self_loops += 1;
            } else {
                keys.push(pair_key(a, b));
            }
        }
        keys.sort_unstable();
        let before = keys.len();
        keys.dedup();
        stats.duplicates = (before - keys.len()) as u64;

        let is_mutual = |a: u32, b: u32| keys.binary_search(&pair_key(b, a)).is_ok();

        let mut out_counts = vec![0usize; n];
        let mut in_counts = vec![0usize; n];
        let mut rec_counts = vec![0usize; n];
        let mut m_basic = 0u64;
        let mut rec_entries = 0u64;
        for &key in &keys {
            let (a, b) = split_key(key);
            if is_mutual(a, b) {
                rec_counts[a as usize] += 1;
                rec_entries += 1;
            } else {
                out_counts[a as usize] += 1;
                in_counts[b as usize] += 1;
                m_basic += 1;
            }
        }

        let mut out_adj = Csr::from_counts(&out_counts);
        let mut in_adj = Csr::from_counts(&in_counts);
        let mut rec_adj = Csr::from_counts(&rec_counts);
        let mut out_fill = out_adj.offsets[..n].to_vec();
        let mut in_fill = in_adj.offsets[..n].to_vec();
        let mut rec_fill = rec_adj.offsets[..n].to_vec();
        // keys are sorted by (source, target), so every row fills in ascending order
        for &key in &keys {
            let (a, b) = split_key(key);
            let (ai, bi) = (a as usize, b as usize);
            if is_mutual(a, b) {
                rec_adj.targets[rec_fill[ai]] = VertexId(b);
                rec_fill[ai] += 1;
            } else {
                out_adj.targets[out_fill[ai]] = VertexId(b);
                out_fill[ai] += 1;
                in_adj.targets[in_fill[bi]] = VertexId(a);
                in_fill[bi] += 1;
            }
        }

        let graph = Digraph {
            n,
            out_adj,
            in_adj,
            rec_adj,
            m_basic,
            m_rec: rec_entries / 2,
            labels,
        };
        (graph, stats)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn basic_edge_count(&self) -> u64 {
        self.m_basic
    }

    pub fn reciprocal_edge_count(&self) -> u64 {
        self.m_rec
    }

    /// `m_basic + m_rec`.
    pub fn edge_count(&self) -> u64 {
        self.m_basic + self.m_rec
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n as u32).map(VertexId)
    }

    #[inline]
    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        self.out_adj.row(v.index())
    }

    #[inline]
    pub fn in_neighbors(&self, v: VertexId) -> &[VertexId] {
        self.in_adj.row(v.index())
    }

    #[inline]
    pub fn rec_neighbors(&self, v: VertexId) -> &[VertexId] {
        self.rec_adj.row(v.index())
    }

    /// Original input label of `v`.
    pub fn label(&self, v: VertexId) -> u64 {
        self.labels[v.index()]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn degrees(&self, v: VertexId) -> Result<DegreeTriple> {
        self.check_vertex(v)?;
        Ok(self.degrees_unchecked(v))
    }

    #[inline]
    pub(crate) fn degrees_unchecked(&self, v: VertexId) -> DegreeTriple {
        let i = v.index();
        DegreeTriple {
            din: self.in_adj.len_of(i) as u64,
            dout: self.out_adj.len_of(i) as u64,
            drec: self.rec_adj.len_of(i) as u64,
        }
    }

    /// Fraction of edges that are reciprocal, `m_rec / (m_basic + m_rec)`.
    pub fn reciprocity(&self) -> Result<f64> {
        match self.edge_count() {
            0 => Err(Error::Undefined("reciprocity of a graph without edges".into())),
            m => Ok(self.m_rec as f64 / m as f64),
        }
    }

    pub fn connecting_edge(&self, u: VertexId, w: VertexId) -> Result<EdgeRelation> {
        self.check_vertex(u)?;
        self.check_vertex(w)?;
        if u == w {
            return Err(Error::InvalidArgument(format!(
                "connecting_edge needs two distinct vertices, got {u} twice"
            )));
        }
        Ok(self.relation(u, w))
    }

    /// Relation of `(u, w)` without argument checks. Searches the adjacency
    /// of whichever endpoint has the smaller total degree.
    #[inline]
    pub fn relation(&self, u: VertexId, w: VertexId) -> EdgeRelation {
        let (ui, wi) = (u.index(), w.index());
        let du = self.out_adj.len_of(ui) + self.in_adj.len_of(ui) + self.rec_adj.len_of(ui);
        let dw = self.out_adj.len_of(wi) + self.in_adj.len_of(wi) + self.rec_adj.len_of(wi);
        if dw < du {
            self.relation_from(w, u).mirror()
        } else {
            self.relation_from(u, w)
        }
    }

    #[inline]
    fn relation_from(&self, u: VertexId, w: VertexId) -> EdgeRelation {
        let i = u.index();
        if self.rec_adj.row(i).binary_search(&w).is_ok() {
            EdgeRelation::Reciprocal
        } else if self.out_adj.row(i).binary_search(&w).is_ok() {
            EdgeRelation::Forward
        } else if self.in_adj.row(i).binary_search(&w).is_ok() {
            EdgeRelation::Backward
        } else {
            EdgeRelation::None
        }
    }

    /// Each unordered adjacent pair once, as `(min, max, relation of (min, max))`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, EdgeRelation)> + '_ {
        self.vertices().flat_map(move |v| {
            let out = self
                .out_neighbors(v)
                .iter()
                .filter(move |&&w| w > v)
                .map(move |&w| (v, w, EdgeRelation::Forward));
            let inn = self
                .in_neighbors(v)
                .iter()
                .filter(move |&&w| w > v)
                .map(move |&w| (v, w, EdgeRelation::Backward));
            let rec = self
                .rec_neighbors(v)
                .iter()
                .filter(move |&&w| w > v)
                .map(move |&w| (v, w, EdgeRelation::Reciprocal));
            out.chain(inn).chain(rec)
        })
    }

    /// Writes the graph as a SNAP edge list using the original labels. A
    /// reciprocal edge is written as both ordered pairs.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "# Nodes: {} Edges: {}", self.n, self.edge_count())?;
        for v in self.vertices() {
            let a = self.label(v);
            for &w in self.out_neighbors(v) {
                writeln!(out, "{}\t{}", a, self.label(w))?;
            }
            for &w in self.rec_neighbors(v) {
                writeln!(out, "{}\t{}", a, self.label(w))?;
            }
        }
        out.flush()?;
        Ok(())
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.index() < self.n {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "vertex {v} out of range for {} vertices",
                self.n
            )))
        }
    }
}

#[inline]
fn pair_key(a: u32, b: u32) -> u64 {
    (u64::from(a) << 32) | u64::from(b)
}

#[inline]
fn split_key(key: u64) -> (u32, u32) {
    ((key >> 32) as u32, key as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    /// Dense id of an original label.
    fn id(g: &Digraph, label: u64) -> VertexId {
        VertexId(g.labels().binary_search(&label).unwrap() as u32)
    }

    #[test]
    fn mutual_pair_merges() {
        let g = Digraph::from_pairs([(1, 2), (2, 1)]);
        assert_eq!(g.basic_edge_count(), 0);
        assert_eq!(g.reciprocal_edge_count(), 1);
    }

    #[test]
    fn duplicates_collapse() {
        let (g, stats) = Digraph::from_pairs_with_stats([(1, 2), (1, 2), (2, 3)]);
        assert_eq!(g.basic_edge_count(), 2);
        assert_eq!(g.reciprocal_edge_count(), 0);
        assert_eq!(stats.duplicates, 1);
    }

    #[test]
    fn self_loop_dropped_and_counted() {
        let (g, stats) = Digraph::from_pairs_with_stats([(1, 1), (1, 2), (2, 1), (2, 3)]);
        assert_eq!(stats.self_loops, 1);
        assert_eq!(g.basic_edge_count(), 1);
        assert_eq!(g.reciprocal_edge_count(), 1);
        assert_eq!(g.connecting_edge(id(&g, 2), id(&g, 3)).unwrap(), EdgeRelation::Forward);
        assert_eq!(g.connecting_edge(id(&g, 1), id(&g, 2)).unwrap(), EdgeRelation::Reciprocal);
    }

    #[test]
    fn labels_remap_densely() {
        let g = Digraph::from_pairs([(100, 7), (7, 42)]);
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.labels(), &[7, 42, 100]);
        assert_eq!(g.out_neighbors(id(&g, 100)), &[id(&g, 7)]);
    }

    #[test]
    fn degree_triples() {
        // 1->2, 2->3, 1<->3
        let g = Digraph::from_pairs([(1, 2), (2, 3), (1, 3), (3, 1)]);
        assert_eq!(g.degrees(id(&g, 1)).unwrap(), DegreeTriple::new(0, 1, 1));
        assert_eq!(g.degrees(id(&g, 2)).unwrap(), DegreeTriple::new(1, 1, 0));
        assert_eq!(g.degrees(id(&g, 3)).unwrap(), DegreeTriple::new(1, 0, 1));
        assert!(matches!(g.degrees(v(3)), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn isolated_vertex_has_zero_degrees() {
        let (g, _) = Digraph::from_dense_edges(3, [(0, 1)]);
        assert_eq!(g.degrees(v(2)).unwrap(), DegreeTriple::default());
        assert_eq!(g.degrees(v(2)).unwrap().total(), 0);
    }

    #[test]
    fn reciprocity_counts_merged_edges_once() {
        let g = Digraph::from_pairs([(1, 2), (2, 1), (2, 3)]);
        assert_eq!(g.reciprocity().unwrap(), 0.5);
        let g = Digraph::from_pairs([(1, 2), (2, 1), (2, 3), (3, 2)]);
        assert_eq!(g.reciprocity().unwrap(), 1.0);
        let (empty, _) = Digraph::from_dense_edges(4, []);
        assert!(matches!(empty.reciprocity(), Err(Error::Undefined(_))));
    }

    #[test]
    fn connecting_edge_variants() {
        let g = Digraph::from_pairs([(1, 2)]);
        let (a, b) = (id(&g, 1), id(&g, 2));
        assert_eq!(g.connecting_edge(a, b).unwrap(), EdgeRelation::Forward);
        assert_eq!(g.connecting_edge(b, a).unwrap(), EdgeRelation::Backward);

        let g = Digraph::from_pairs([(1, 2), (2, 1)]);
        assert_eq!(g.connecting_edge(v(0), v(1)).unwrap(), EdgeRelation::Reciprocal);
        assert_eq!(g.connecting_edge(v(1), v(0)).unwrap(), EdgeRelation::Reciprocal);

        let (g, _) = Digraph::from_dense_edges(3, [(0, 1)]);
        assert_eq!(g.connecting_edge(v(0), v(2)).unwrap(), EdgeRelation::None);
        assert!(matches!(g.connecting_edge(v(1), v(1)), Err(Error::InvalidArgument(_))));
        assert!(matches!(g.connecting_edge(v(0), v(9)), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn edges_lists_each_pair_once() {
        let g = Digraph::from_pairs([(1, 2), (3, 2), (3, 1), (1, 3)]);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges.len() as u64, g.edge_count());
        assert!(edges.contains(&(v(0), v(1), EdgeRelation::Forward)));
        assert!(edges.contains(&(v(1), v(2), EdgeRelation::Backward)));
        assert!(edges.contains(&(v(0), v(2), EdgeRelation::Reciprocal)));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Digraph::from_pairs([(5, 9), (9, 5), (9, 11), (2, 5), (11, 2)]);
        let mut buf = Vec::new();
        g.write_edge_list(&mut buf).unwrap();
        let back = crate::io::read_digraph(buf.as_slice()).unwrap().0;
        assert_eq!(g, back);
    }
}
