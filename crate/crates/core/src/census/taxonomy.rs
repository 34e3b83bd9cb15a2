use std::fmt;
use std::ops::{Index, IndexMut};
use std::str::FromStr;

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::error::{Error, Result};
use crate::graph::{EdgeRelation, VertexId};

/// Directed wedge types, named by the center's view of its two edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WedgeType {
    /// (i) two basic out-edges.
    Out,
    /// (ii) one basic in-edge and one basic out-edge.
    Path,
    /// (iii) two basic in-edges.
    In,
    /// (iv) one reciprocal edge and one basic in-edge.
    RecipIn,
    /// (v) one reciprocal edge and one basic out-edge.
    RecipOut,
    /// (vi) two reciprocal edges.
    RecipTot,
}

impl WedgeType {
    pub const ALL: [WedgeType; 6] = [
        WedgeType::Out,
        WedgeType::Path,
        WedgeType::In,
        WedgeType::RecipIn,
        WedgeType::RecipOut,
        WedgeType::RecipTot,
    ];

    #[inline]
    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn numeral(self) -> &'static str {
        ["i", "ii", "iii", "iv", "v", "vi"][self as usize]
    }

    /// Stable snake-case key used in reports.
    pub const fn key(self) -> &'static str {
        ["out", "path", "in", "recip_in", "recip_out", "recip_tot"][self as usize]
    }

    pub const fn name(self) -> &'static str {
        ["out", "path", "in", "recip-in", "recip-out", "recip-tot"][self as usize]
    }

    /// Number of reciprocal edges in the wedge.
    pub const fn reciprocal_edges(self) -> u8 {
        [0, 0, 0, 1, 1, 2][self as usize]
    }

    /// Both edges are of the same kind.
    pub const fn is_homogeneous(self) -> bool {
        matches!(self, WedgeType::Out | WedgeType::In | WedgeType::RecipTot)
    }

    /// Type of a wedge whose center relates to its two ends by `a` and `b`
    /// (each seen from the center). `None` if either relation is absent.
    pub const fn from_relations(a: EdgeRelation, b: EdgeRelation) -> Option<WedgeType> {
        use EdgeRelation as R;
        Some(match (a, b) {
            (R::Forward, R::Forward) => WedgeType::Out,
            (R::Forward, R::Backward) | (R::Backward, R::Forward) => WedgeType::Path,
            (R::Backward, R::Backward) => WedgeType::In,
            (R::Reciprocal, R::Backward) | (R::Backward, R::Reciprocal) => WedgeType::RecipIn,
            (R::Reciprocal, R::Forward) | (R::Forward, R::Reciprocal) => WedgeType::RecipOut,
            (R::Reciprocal, R::Reciprocal) => WedgeType::RecipTot,
            _ => return None,
        })
    }
}

impl fmt::Display for WedgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WedgeType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase().replace('-', "_");
        WedgeType::ALL
            .into_iter()
            .find(|t| t.key() == s || t.numeral() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown wedge type {s:?}")))
    }
}

impl Serialize for WedgeType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.key())
    }
}

/// Directed triangle types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TriangleType {
    /// (a) transitive, no reciprocal edge.
    Trans,
    /// (b) directed 3-cycle.
    Loop,
    /// (c) one reciprocal edge; the third vertex sends both basic edges.
    OutRecip,
    /// (d) one reciprocal edge; the basic edges form a 2-path through the third vertex.
    PathRecip,
    /// (e) one reciprocal edge; the third vertex receives both basic edges.
    InRecip,
    /// (f) two reciprocal edges.
    TwoRecip,
    /// (g) three reciprocal edges.
    ThreeRecip,
}

impl TriangleType {
    pub const ALL: [TriangleType; 7] = [
        TriangleType::Trans,
        TriangleType::Loop,
        TriangleType::OutRecip,
        TriangleType::PathRecip,
        TriangleType::InRecip,
        TriangleType::TwoRecip,
        TriangleType::ThreeRecip,
    ];

    /// Types that contain a directed cycle.
    pub const CYCLIC: [TriangleType; 4] = [
        TriangleType::Loop,
        TriangleType::PathRecip,
        TriangleType::TwoRecip,
        TriangleType::ThreeRecip,
    ];

    #[inline]
    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn letter(self) -> &'static str {
        ["a", "b", "c", "d", "e", "f", "g"][self as usize]
    }

    pub const fn key(self) -> &'static str {
        [
            "trans",
            "loop",
            "out_recip",
            "path_recip",
            "in_recip",
            "two_recip",
            "three_recip",
        ][self as usize]
    }

    pub const fn name(self) -> &'static str {
        [
            "trans",
            "loop",
            "out-recip",
            "path-recip",
            "in-recip",
            "2-recip",
            "3-recip",
        ][self as usize]
    }

    pub const fn reciprocal_edges(self) -> u8 {
        [0, 0, 1, 1, 1, 2, 3][self as usize]
    }

    pub const fn is_cyclic(self) -> bool {
        matches!(
            self,
            TriangleType::Loop | TriangleType::PathRecip | TriangleType::TwoRecip | TriangleType::ThreeRecip
        )
    }
}

impl fmt::Display for TriangleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TriangleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        let alias = match norm.as_str() {
            "2_recip" => "two_recip",
            "3_recip" => "three_recip",
            other => other,
        };
        TriangleType::ALL
            .into_iter()
            .find(|t| t.key() == alias || t.letter() == alias)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown triangle type {s:?}")))
    }
}

impl Serialize for TriangleType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.key())
    }
}

/// Wedges of each type contained in one triangle of each type; rows are
/// triangle types, columns wedge types. Every row sums to 3.
const CHI: [[u8; 6]; 7] = [
    //  i  ii iii iv  v  vi
    [1, 1, 1, 0, 0, 0], // a trans
    [0, 3, 0, 0, 0, 0], // b loop
    [1, 0, 0, 2, 0, 0], // c out-recip
    [0, 1, 0, 1, 1, 0], // d path-recip
    [0, 0, 1, 0, 2, 0], // e in-recip
    [0, 0, 0, 1, 1, 1], // f 2-recip
    [0, 0, 0, 0, 0, 3], // g 3-recip
];

/// Number of `psi` wedges inside one `tau` triangle.
#[inline]
pub const fn chi(psi: WedgeType, tau: TriangleType) -> u8 {
    CHI[tau as usize][psi as usize]
}

/// The 15 `(psi, tau)` pairs with `chi(psi, tau) > 0`, ordered by wedge type
/// then triangle type.
pub fn closure_pairs() -> impl Iterator<Item = (WedgeType, TriangleType)> {
    WedgeType::ALL.into_iter().flat_map(|psi| {
        TriangleType::ALL
            .into_iter()
            .filter(move |&tau| chi(psi, tau) > 0)
            .map(move |tau| (psi, tau))
    })
}

const NO_TYPE: u8 = u8::MAX;

const fn relation_code(r: EdgeRelation) -> usize {
    match r {
        EdgeRelation::None => 0,
        EdgeRelation::Forward => 1,
        EdgeRelation::Backward => 2,
        EdgeRelation::Reciprocal => 3,
    }
}

const fn relation_from_code(c: usize) -> EdgeRelation {
    match c {
        1 => EdgeRelation::Forward,
        2 => EdgeRelation::Backward,
        3 => EdgeRelation::Reciprocal,
        _ => EdgeRelation::None,
    }
}

const fn push_wedge(hist: &mut [u8; 6], a: EdgeRelation, b: EdgeRelation) {
    match WedgeType::from_relations(a, b) {
        Some(t) => hist[t as usize] += 1,
        None => panic!("triangle corner without two edges"),
    }
}

/// Lookup from the three relation codes of a vertex triple to a triangle
/// type. Each pattern is typed by the wedges at its three corners and matched
/// against the rows of `CHI`, so classification and `chi` cannot disagree.
const TRIANGLE_TABLE: [u8; 64] = {
    let mut table = [NO_TYPE; 64];
    let mut c12 = 1;
    while c12 < 4 {
        let mut c13 = 1;
        while c13 < 4 {
            let mut c23 = 1;
            while c23 < 4 {
                let r12 = relation_from_code(c12);
                let r13 = relation_from_code(c13);
                let r23 = relation_from_code(c23);
                let mut hist = [0u8; 6];
                push_wedge(&mut hist, r12, r13);
                push_wedge(&mut hist, r12.mirror(), r23);
                push_wedge(&mut hist, r13.mirror(), r23.mirror());
                let mut found = NO_TYPE;
                let mut tau = 0;
                while tau < 7 {
                    let mut same = true;
                    let mut psi = 0;
                    while psi < 6 {
                        if CHI[tau][psi] != hist[psi] {
                            same = false;
                        }
                        psi += 1;
                    }
                    if same {
                        found = tau as u8;
                    }
                    tau += 1;
                }
                if found == NO_TYPE {
                    panic!("relation pattern matches no triangle type");
                }
                table[c12 * 16 + c13 * 4 + c23] = found;
                c23 += 1;
            }
            c13 += 1;
        }
        c12 += 1;
    }
    table
};

/// Classifies the triangle on vertices `x1, x2, x3` from the relations of
/// `(x1, x2)`, `(x1, x3)` and `(x2, x3)`. The result does not depend on
/// which vertex is called `x1`, as long as the three relations agree on
/// one ordering.
#[inline]
pub fn classify_triangle(
    r12: EdgeRelation,
    r13: EdgeRelation,
    r23: EdgeRelation,
) -> Result<TriangleType> {
    let code = relation_code(r12) * 16 + relation_code(r13) * 4 + relation_code(r23);
    match TRIANGLE_TABLE[code] {
        NO_TYPE => Err(Error::NotATriangle),
        t => Ok(TriangleType::ALL[t as usize]),
    }
}

/// A wedge of a digraph. For `Path` wedges `end1` is the in-neighbor and
/// `end2` the out-neighbor of the center; for `RecipIn` and `RecipOut`
/// `end1` is the reciprocal neighbor. Homogeneous wedges are unordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Wedge {
    pub center: VertexId,
    pub end1: VertexId,
    pub end2: VertexId,
    pub wtype: WedgeType,
}

/// Fixed-size table indexed by [`WedgeType`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PerWedge<T>(pub [T; 6]);

/// Fixed-size table indexed by [`TriangleType`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PerTriangle<T>(pub [T; 7]);

macro_rules! per_type_table {
    ($table:ident, $ty:ty) => {
        impl<T> Index<$ty> for $table<T> {
            type Output = T;
            #[inline]
            fn index(&self, t: $ty) -> &T {
                &self.0[t.index()]
            }
        }

        impl<T> IndexMut<$ty> for $table<T> {
            #[inline]
            fn index_mut(&mut self, t: $ty) -> &mut T {
                &mut self.0[t.index()]
            }
        }

        impl<T> $table<T> {
            pub fn iter(&self) -> impl Iterator<Item = ($ty, &T)> {
                <$ty>::ALL.into_iter().zip(self.0.iter())
            }

            pub fn map<U, F: FnMut($ty, &T) -> U>(&self, mut f: F) -> $table<U> {
                $table(std::array::from_fn(|i| f(<$ty>::ALL[i], &self.0[i])))
            }

            pub fn from_fn<F: FnMut($ty) -> T>(mut f: F) -> Self {
                $table(std::array::from_fn(|i| f(<$ty>::ALL[i])))
            }
        }

        impl<T: Copy + std::iter::Sum<T>> $table<T> {
            pub fn total(&self) -> T {
                self.0.iter().copied().sum()
            }
        }

        impl<T: Serialize> Serialize for $table<T> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = s.serialize_map(Some(self.0.len()))?;
                for (t, v) in self.iter() {
                    map.serialize_entry(t.key(), v)?;
                }
                map.end()
            }
        }
    };
}

per_type_table!(PerWedge, WedgeType);
per_type_table!(PerTriangle, TriangleType);

pub type WedgeCounts = PerWedge<u64>;
pub type TriangleCounts = PerTriangle<u64>;

#[cfg(test)]
mod tests {
    use super::*;
    use EdgeRelation::{Backward as B, Forward as F, None as N, Reciprocal as R};

    #[test]
    fn chi_entries() {
        assert_eq!(chi(WedgeType::Path, TriangleType::Loop), 3);
        assert_eq!(chi(WedgeType::Out, TriangleType::InRecip), 0);
        assert_eq!(chi(WedgeType::RecipTot, TriangleType::ThreeRecip), 3);
        assert_eq!(closure_pairs().count(), 15);
    }

    #[test]
    fn chi_rows_sum_to_three() {
        for tau in TriangleType::ALL {
            let row: u8 = WedgeType::ALL.iter().map(|&psi| chi(psi, tau)).sum();
            assert_eq!(row, 3, "{tau}");
        }
    }

    #[test]
    fn chi_respects_reciprocal_edge_budget() {
        // every edge of a triangle lies in exactly two of its wedges
        for tau in TriangleType::ALL {
            let rec_ends: u8 = WedgeType::ALL
                .iter()
                .map(|&psi| chi(psi, tau) * psi.reciprocal_edges())
                .sum();
            assert_eq!(rec_ends, 2 * tau.reciprocal_edges(), "{tau}");
        }
    }

    #[test]
    fn wedge_type_from_relations() {
        assert_eq!(WedgeType::from_relations(F, F), Some(WedgeType::Out));
        assert_eq!(WedgeType::from_relations(B, F), Some(WedgeType::Path));
        assert_eq!(WedgeType::from_relations(B, B), Some(WedgeType::In));
        assert_eq!(WedgeType::from_relations(B, R), Some(WedgeType::RecipIn));
        assert_eq!(WedgeType::from_relations(R, F), Some(WedgeType::RecipOut));
        assert_eq!(WedgeType::from_relations(R, R), Some(WedgeType::RecipTot));
        assert_eq!(WedgeType::from_relations(N, R), None);
    }

    #[test]
    fn classify_examples() {
        // relations are (1,2), (1,3), (2,3)
        assert_eq!(classify_triangle(F, F, F).unwrap(), TriangleType::Trans);
        assert_eq!(classify_triangle(F, B, F).unwrap(), TriangleType::Loop);
        assert_eq!(classify_triangle(R, R, R).unwrap(), TriangleType::ThreeRecip);
        assert_eq!(classify_triangle(R, F, F).unwrap(), TriangleType::InRecip);
        assert_eq!(classify_triangle(R, B, B).unwrap(), TriangleType::OutRecip);
        assert_eq!(classify_triangle(R, F, B).unwrap(), TriangleType::PathRecip);
        assert_eq!(classify_triangle(R, R, F).unwrap(), TriangleType::TwoRecip);
    }

    #[test]
    fn classify_rejects_missing_edge() {
        assert!(matches!(classify_triangle(N, F, F), Err(Error::NotATriangle)));
        assert!(matches!(classify_triangle(R, R, N), Err(Error::NotATriangle)));
    }

    #[test]
    fn parse_type_names() {
        assert_eq!("recip-in".parse::<WedgeType>().unwrap(), WedgeType::RecipIn);
        assert_eq!("iii".parse::<WedgeType>().unwrap(), WedgeType::In);
        assert_eq!("2-recip".parse::<TriangleType>().unwrap(), TriangleType::TwoRecip);
        assert_eq!("g".parse::<TriangleType>().unwrap(), TriangleType::ThreeRecip);
        assert!("sideways".parse::<WedgeType>().is_err());
    }

    #[test]
    fn per_type_table_serializes_as_map() {
        let mut counts = WedgeCounts::default();
        counts[WedgeType::RecipTot] = 4;
        let json = serde_json::to_string(&counts).unwrap();
        assert_eq!(
            json,
            r#"{"out":0,"path":0,"in":0,"recip_in":0,"recip_out":0,"recip_tot":4}"#
        );
        assert_eq!(counts.total(), 4);
    }
}
