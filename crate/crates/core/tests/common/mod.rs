//! Test-side oracles that share no code with the library's counting paths.

#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use triadic::census::{TriangleType, WedgeType};
use triadic::graph::Digraph;

/// A digraph as a raw arc set over `0..n`.
#[derive(Debug, Clone)]
pub struct ArcSet {
    pub n: u32,
    pub arcs: HashSet<(u32, u32)>,
}

impl ArcSet {
    /// Random digraph: each pair present with probability `p`, then
    /// reciprocal with probability `r`, else one direction at random. A few
    /// self-loops and duplicate arcs are mixed into `raw`.
    pub fn random(n: u32, p: f64, r: f64, seed: u64) -> (ArcSet, Vec<(u64, u64)>) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut arcs = HashSet::new();
        let mut raw = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.random::<f64>() >= p {
                    continue;
                }
                if rng.random::<f64>() < r {
                    arcs.insert((a, b));
                    arcs.insert((b, a));
                    raw.push((a as u64, b as u64));
                    raw.push((b as u64, a as u64));
                } else if rng.random::<bool>() {
                    arcs.insert((a, b));
                    raw.push((a as u64, b as u64));
                } else {
                    arcs.insert((b, a));
                    raw.push((b as u64, a as u64));
                }
            }
        }
        let extra = raw.len() / 20;
        for _ in 0..extra {
            let i = rng.random_range(0..raw.len());
            raw.push(raw[i]);
        }
        if n > 0 {
            for _ in 0..3 {
                let v = rng.random_range(0..n) as u64;
                raw.push((v, v));
            }
        }
        // labels must cover every vertex so ids line up with 0..n
        for v in 0..n as u64 {
            raw.push((v, v));
        }
        (ArcSet { n, arcs }, raw)
    }

    pub fn digraph(raw: &[(u64, u64)]) -> Digraph {
        Digraph::from_pairs(raw.iter().copied())
    }

    pub fn has(&self, a: u32, b: u32) -> bool {
        self.arcs.contains(&(a, b))
    }

    pub fn adjacent(&self, a: u32, b: u32) -> bool {
        self.has(a, b) || self.has(b, a)
    }

    /// Arcs among `t` as a bit mask over [`LOCAL_ARCS`].
    fn local_mask(&self, t: [u32; 3]) -> usize {
        LOCAL_ARCS
            .iter()
            .enumerate()
            .filter(|(_, &(i, j))| self.has(t[i as usize], t[j as usize]))
            .map(|(bit, _)| 1 << bit)
            .sum()
    }

    pub fn triangle_census(&self) -> [u64; 7] {
        let mut counts = [0u64; 7];
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !self.adjacent(a, b) {
                    continue;
                }
                for c in b + 1..self.n {
                    if self.adjacent(a, c) && self.adjacent(b, c) {
                        let tau = mask_table()[self.local_mask([a, b, c])].expect("three adjacent pairs");
                        counts[tau.index()] += 1;
                    }
                }
            }
        }
        counts
    }

    /// Every wedge as `(type, center, lower end, higher end)`.
    pub fn wedges(&self) -> Vec<(WedgeType, u32, u32, u32)> {
        let mut out = Vec::new();
        for c in 0..self.n {
            let nbrs: Vec<u32> = (0..self.n).filter(|&x| x != c && self.adjacent(c, x)).collect();
            for (i, &x) in nbrs.iter().enumerate() {
                for &y in &nbrs[i + 1..] {
                    out.push((self.wedge_type(c, x, y), c, x, y));
                }
            }
        }
        out
    }

    fn wedge_type(&self, c: u32, x: u32, y: u32) -> WedgeType {
        // (out, in, rec) arcs at the center
        let kind = |e: u32| match (self.has(c, e), self.has(e, c)) {
            (true, true) => 2,
            (true, false) => 0,
            (false, true) => 1,
            (false, false) => unreachable!(),
        };
        let mut k = [kind(x), kind(y)];
        k.sort_unstable();
        match k {
            [0, 0] => WedgeType::Out,
            [0, 1] => WedgeType::Path,
            [1, 1] => WedgeType::In,
            [1, 2] => WedgeType::RecipIn,
            [0, 2] => WedgeType::RecipOut,
            [2, 2] => WedgeType::RecipTot,
            _ => unreachable!(),
        }
    }

    pub fn wedge_counts(&self) -> [u64; 6] {
        let mut counts = [0u64; 6];
        for (t, ..) in self.wedges() {
            counts[t.index()] += 1;
        }
        counts
    }

    /// Wedges of each type whose ends are adjacent.
    pub fn closed_wedge_counts(&self) -> [u64; 6] {
        let mut counts = [0u64; 6];
        for (t, _, x, y) in self.wedges() {
            if self.adjacent(x, y) {
                counts[t.index()] += 1;
            }
        }
        counts
    }
}

/// Representative arc set of each triangle type on vertices `0, 1, 2`.
pub fn canonical_arcs(t: TriangleType) -> Vec<(u8, u8)> {
    use TriangleType::*;
    match t {
        Trans => vec![(0, 1), (0, 2), (1, 2)],
        Loop => vec![(0, 1), (1, 2), (2, 0)],
        OutRecip => vec![(0, 1), (1, 0), (2, 0), (2, 1)],
        PathRecip => vec![(0, 1), (1, 0), (0, 2), (2, 1)],
        InRecip => vec![(0, 1), (1, 0), (0, 2), (1, 2)],
        TwoRecip => vec![(0, 1), (1, 0), (1, 2), (2, 1), (0, 2)],
        ThreeRecip => vec![(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)],
    }
}

const LOCAL_ARCS: [(u8, u8); 6] = [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)];

/// [`classify_arcs`] for every arc mask, `None` where a pair is missing.
fn mask_table() -> &'static [Option<TriangleType>; 64] {
    static TABLE: OnceLock<[Option<TriangleType>; 64]> = OnceLock::new();
    TABLE.get_or_init(|| {
        std::array::from_fn(|mask| {
            let arcs: HashSet<(u8, u8)> =
                LOCAL_ARCS.iter().enumerate().filter(|(bit, _)| mask >> bit & 1 == 1).map(|(_, &a)| a).collect();
            let covered = |a: u8, b: u8| arcs.contains(&(a, b)) || arcs.contains(&(b, a));
            (covered(0, 1) && covered(0, 2) && covered(1, 2)).then(|| classify_arcs(&arcs))
        })
    })
}

const PERMUTATIONS: [[u8; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// The unique type whose representative is isomorphic to `arcs`.
///
/// # Panics
///
/// If no type or more than one type matches.
pub fn classify_arcs(arcs: &HashSet<(u8, u8)>) -> TriangleType {
    let matches: Vec<TriangleType> = TriangleType::ALL
        .into_iter()
        .filter(|&t| {
            PERMUTATIONS.iter().any(|p| {
                let image: HashSet<(u8, u8)> =
                    canonical_arcs(t).into_iter().map(|(a, b)| (p[a as usize], p[b as usize])).collect();
                &image == arcs
            })
        })
        .collect();
    assert_eq!(matches.len(), 1, "arc set {arcs:?} matched {matches:?}");
    matches[0]
}

/// Corner wedge types of a triangle given as an arc set on `0, 1, 2`.
pub fn corner_wedges(arcs: &[(u8, u8)]) -> [u8; 6] {
    let set = ArcSet {
        n: 3,
        arcs: arcs.iter().map(|&(a, b)| (a as u32, b as u32)).collect(),
    };
    let mut out = [0u8; 6];
    for (t, ..) in set.wedges() {
        out[t.index()] += 1;
    }
    out
}
