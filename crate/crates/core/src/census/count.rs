use rayon::prelude::*;

use super::taxonomy::{classify_triangle, TriangleCounts, WedgeCounts, WedgeType};
use crate::error::{Error, Result};
use crate::graph::{DegreeTriple, Digraph, EdgeRelation, VertexId};

/// Default vertex cap for [`brute_force_census`].
pub const BRUTE_FORCE_CAP: usize = 2000;

#[inline]
fn choose2(d: u64) -> u64 {
    d * d.saturating_sub(1) / 2
}

/// Wedges of each type centered at a vertex with the given degrees.
pub fn wedge_counts_at_vertex(d: DegreeTriple) -> WedgeCounts {
    let mut w = WedgeCounts::default();
    w[WedgeType::Out] = choose2(d.dout);
    w[WedgeType::Path] = d.din * d.dout;
    w[WedgeType::In] = choose2(d.din);
    w[WedgeType::RecipIn] = d.din * d.drec;
    w[WedgeType::RecipOut] = d.dout * d.drec;
    w[WedgeType::RecipTot] = choose2(d.drec);
    w
}

/// `|W_psi|` for every wedge type. The grand total is `.total()`.
pub fn total_wedge_counts(g: &Digraph) -> WedgeCounts {
    let mut acc = WedgeCounts::default();
    for v in g.vertices() {
        let w = wedge_counts_at_vertex(g.degrees_unchecked(v));
        for (slot, add) in acc.0.iter_mut().zip(w.0) {
            *slot += add;
        }
    }
    acc
}

/// Edges oriented from lower to higher `(total degree, id)` rank, each row
/// sorted by neighbor id and tagged with the relation seen from the row's
/// vertex.
struct ForwardAdjacency {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
    relations: Vec<EdgeRelation>,
}

impl ForwardAdjacency {
    fn new(g: &Digraph) -> Self {
        let n = g.vertex_count();
        let rank = |v: VertexId| (g.degrees_unchecked(v).total(), v);
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        let mut targets = Vec::with_capacity(g.edge_count() as usize);
        let mut relations = Vec::with_capacity(g.edge_count() as usize);
        let mut row: Vec<(VertexId, EdgeRelation)> = Vec::new();
        for v in g.vertices() {
            let rv = rank(v);
            row.clear();
            let lists = [
                (g.out_neighbors(v), EdgeRelation::Forward),
                (g.in_neighbors(v), EdgeRelation::Backward),
                (g.rec_neighbors(v), EdgeRelation::Reciprocal),
            ];
            for (list, rel) in lists {
                row.extend(list.iter().filter(|&&u| rank(u) > rv).map(|&u| (u, rel)));
            }
            row.sort_unstable_by_key(|&(u, _)| u);
            for &(u, rel) in &row {
                targets.push(u);
                relations.push(rel);
            }
            offsets.push(targets.len());
        }
        ForwardAdjacency {
            offsets,
            targets,
            relations,
        }
    }

    #[inline]
    fn row(&self, v: VertexId) -> (&[VertexId], &[EdgeRelation]) {
        let (a, b) = (self.offsets[v.index()], self.offsets[v.index() + 1]);
        (&self.targets[a..b], &self.relations[a..b])
    }
}

/// Exact triangle census. Each edge is assigned to its endpoint of smaller
/// total degree (ties broken by vertex id) and a vertex only closes wedges
/// made of edges assigned to it, so every triangle is found exactly once, at
/// its lowest-ranked vertex.
///
/// Parallel over vertices; the reduction is an integer sum, so the result
/// does not depend on the number of worker threads.
pub fn enumerate_triangle_census(g: &Digraph) -> TriangleCounts {
    let fwd = ForwardAdjacency::new(g);
    let counts = (0..g.vertex_count() as u32)
        .into_par_iter()
        .fold(
            || [0u64; 7],
            |mut acc, v| {
                let v = VertexId(v);
                let (v_nbrs, v_rels) = fwd.row(v);
                for (i, &u) in v_nbrs.iter().enumerate() {
                    let r_vu = v_rels[i];
                    let (u_nbrs, u_rels) = fwd.row(u);
                    let (mut a, mut b) = (0, 0);
                    while a < v_nbrs.len() && b < u_nbrs.len() {
                        match v_nbrs[a].cmp(&u_nbrs[b]) {
                            std::cmp::Ordering::Less => a += 1,
                            std::cmp::Ordering::Greater => b += 1,
                            std::cmp::Ordering::Equal => {
                                let tau = classify_triangle(r_vu, v_rels[a], u_rels[b])
                                    .unwrap_or_else(|_| unreachable!("all three pairs adjacent"));
                                acc[tau.index()] += 1;
                                a += 1;
                                b += 1;
                            }
                        }
                    }
                }
                acc
            },
        )
        .reduce(
            || [0u64; 7],
            |mut x, y| {
                for (a, b) in x.iter_mut().zip(y) {
                    *a += b;
                }
                x
            },
        );
    TriangleCounts::from_fn(|t| counts[t.index()])
}

/// Triangle census by scanning every vertex triple, with the default cap.
pub fn brute_force_census(g: &Digraph) -> Result<TriangleCounts> {
    brute_force_census_with_cap(g, BRUTE_FORCE_CAP)
}

pub fn brute_force_census_with_cap(g: &Digraph, cap: usize) -> Result<TriangleCounts> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut counts = TriangleCounts::default();
    for i in 0..n as u32 {
        for j in i + 1..n as u32 {
            let r_ij = g.relation(VertexId(i), VertexId(j));
            if !r_ij.is_edge() {
                continue;
            }
            for k in j + 1..n as u32 {
                let r_ik = g.relation(VertexId(i), VertexId(k));
                let r_jk = g.relation(VertexId(j), VertexId(k));
                if let Ok(tau) = classify_triangle(r_ij, r_ik, r_jk) {
                    counts[tau] += 1;
                }
            }
        }
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::TriangleType;

    fn g1() -> Digraph {
        Digraph::from_pairs([(1, 2), (2, 3), (1, 3), (3, 4), (4, 3)])
    }

    #[test]
    fn per_vertex_wedges() {
        let w = wedge_counts_at_vertex(DegreeTriple::new(3, 2, 1));
        assert_eq!(w.0, [1, 6, 3, 3, 2, 0]);
        assert_eq!(wedge_counts_at_vertex(DegreeTriple::default()).0, [0; 6]);
        assert_eq!(wedge_counts_at_vertex(DegreeTriple::new(0, 0, 4)).0, [0, 0, 0, 0, 0, 6]);
    }

    #[test]
    fn total_wedges_small_graphs() {
        let path = Digraph::from_pairs([(1, 2), (2, 3)]);
        assert_eq!(total_wedge_counts(&path).0, [0, 1, 0, 0, 0, 0]);

        let star = Digraph::from_pairs([(0, 1), (1, 0), (0, 2), (2, 0), (0, 3), (3, 0)]);
        assert_eq!(total_wedge_counts(&star)[WedgeType::RecipTot], 3);

        let w = total_wedge_counts(&g1());
        assert_eq!(w.0, [1, 1, 1, 2, 0, 0]);
        assert_eq!(w.total(), 5);
    }

    #[test]
    fn census_of_g1() {
        let g = g1();
        let expected = TriangleCounts::from_fn(|t| u64::from(t == TriangleType::Trans));
        assert_eq!(enumerate_triangle_census(&g), expected);
        assert_eq!(brute_force_census(&g).unwrap(), expected);
    }

    #[test]
    fn census_of_reciprocal_k4() {
        let pairs = (0..4u64).flat_map(|a| (0..4u64).filter(move |&b| b != a).map(move |b| (a, b)));
        let g = Digraph::from_pairs(pairs);
        let c = enumerate_triangle_census(&g);
        assert_eq!(c[TriangleType::ThreeRecip], 4);
        assert_eq!(c.total(), 4);
    }

    #[test]
    fn brute_force_small_cases() {
        let (empty, _) = Digraph::from_dense_edges(5, []);
        assert_eq!(brute_force_census(&empty).unwrap().total(), 0);
        assert_eq!(enumerate_triangle_census(&empty).total(), 0);

        let cycle = Digraph::from_pairs([(1, 2), (2, 3), (3, 1)]);
        let c = brute_force_census(&cycle).unwrap();
        assert_eq!(c[TriangleType::Loop], 1);
        assert_eq!(c.total(), 1);
    }

    #[test]
    fn brute_force_refuses_large_graphs() {
        let (g, _) = Digraph::from_dense_edges(11, [(0, 1)]);
        assert!(matches!(
            brute_force_census_with_cap(&g, 10),
            Err(Error::CapExceeded { n: 11, cap: 10 })
        ));
    }
}
