// Incidence counts behind the strong regularity of the quadric-minus-N
// representation, recomputed vertex by vertex and pair by pair.
//
// For a vertex u, π_u is the plane ⟨u, u⊥ ∩ N⟩. A common neighbour w of u
// and v is sorted into one of four cases by whether it lies in π_u or off
// u⊥, and in π_v or off v⊥. Since π_u ⊆ u⊥ the cases are disjoint.

use alloc::vec::Vec;

use super::{canonical_form, in_nuclei_plane, quadric_minus_n_vertices};
use crate::gf2::{self, XorBasis};
use crate::quadform::Gf2Form;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexProofCounts {
    pub vertex: u64,
    /// Totally isotropic lines through the vertex.
    pub isotropic_lines: usize,
    /// Of those, the lines that meet N.
    pub lines_meeting_n: usize,
    /// The points where they meet N are exactly the line `u⊥ ∩ N`.
    pub meeting_points_are_perp_line: bool,
    /// Neighbours `w` with `u + w ∈ N`.
    pub plane_neighbours: usize,
    /// Neighbours on a secant line, `B(u, w) ≠ 0`.
    pub secant_neighbours: usize,
    pub non_neighbours: usize,
    /// `|u⊥ ∩ Q⁺|`, counting u itself.
    pub perp_quadric_points: usize,
    pub plane_points: usize,
    pub plane_points_off_n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairKind {
    /// `u ∈ v⊥ ∖ π_v`.
    NonAdjacent,
    /// `u ∈ π_v`: the third point of `uv` is in N.
    AdjacentInPlane,
    /// `u ∉ v⊥`: the line `uv` is secant to the quadric.
    AdjacentSecant,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CaseTally {
    /// `w ∈ π_u` and `w ∈ π_v`.
    pub both_planes: usize,
    /// `w ∈ π_u` and `w ∉ v⊥`.
    pub plane_u_off_perp_v: usize,
    /// `w ∉ u⊥` and `w ∈ π_v`.
    pub off_perp_u_plane_v: usize,
    /// `w ∉ u⊥` and `w ∉ v⊥`.
    pub off_both_perps: usize,
}

impl CaseTally {
    pub const fn new(a: usize, b: usize, c: usize, d: usize) -> Self {
        CaseTally {
            both_planes: a,
            plane_u_off_perp_v: b,
            off_perp_u_plane_v: c,
            off_both_perps: d,
        }
    }

    pub fn total(&self) -> usize {
        self.both_planes + self.plane_u_off_perp_v + self.off_perp_u_plane_v + self.off_both_perps
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PairProofCounts {
    pub u: u64,
    pub v: u64,
    pub kind: PairKind,
    pub tally: CaseTally,
    /// Common neighbours that fit none of the four cases; always zero.
    pub unclassified: usize,
    /// `|u⊥ ∩ v⊥ ∩ Q⁺|`.
    pub perp_meet_quadric: usize,
    /// `|(u⊥ ∪ v⊥) ∩ Q⁺|`.
    pub perp_union_quadric: usize,
    /// `|(u⊥ ∪ v⊥) ∩ N|`.
    pub perp_union_n: usize,
}

impl PairProofCounts {
    /// The fourth case counted the other way round: the 28 vertices minus
    /// those on `u⊥ ∪ v⊥` (quadric points not in N).
    pub fn off_both_by_complement(&self) -> isize {
        28 - (self.perp_union_quadric as isize - self.perp_union_n as isize)
    }
}

struct Ctx {
    q: Gf2Form,
    vertices: Vec<u64>,
    isotropic: Vec<u64>,
    nuclei: Vec<u64>,
}

impl Ctx {
    fn new() -> Self {
        let q = canonical_form().gf2().expect("GF(2)");
        let isotropic = q.isotropic_points();
        let nuclei = gf2::points(6).filter(|&x| in_nuclei_plane(x)).collect();
        Ctx {
            q,
            vertices: quadric_minus_n_vertices(),
            isotropic,
            nuclei,
        }
    }

    fn perp(&self, u: u64, w: u64) -> bool {
        self.q.polar(u, w) == 0
    }

    fn perp_line_in_n(&self, u: u64) -> Vec<u64> {
        self.nuclei
            .iter()
            .copied()
            .filter(|&n| self.perp(u, n))
            .collect()
    }

    fn plane(&self, u: u64) -> XorBasis {
        let mut b = XorBasis::from_vectors(self.perp_line_in_n(u));
        b.insert(u);
        b
    }

    fn adjacent(&self, u: u64, w: u64) -> bool {
        !self.perp(u, w) || in_nuclei_plane(u ^ w)
    }
}

pub fn vertex_proof_counts() -> Vec<VertexProofCounts> {
    let c = Ctx::new();
    c.vertices
        .iter()
        .map(|&u| {
            let partners: Vec<u64> = c
                .isotropic
                .iter()
                .copied()
                .filter(|&w| w != u && c.perp(u, w))
                .collect();
            let mut meeting: Vec<u64> = partners
                .iter()
                .copied()
                .filter(|&w| in_nuclei_plane(w))
                .collect();
            meeting.sort_unstable();
            // each line {u, w, u+w} holds one point of N at most, and is seen twice
            let lines_meeting_n = meeting.len();
            let plane = c.plane(u).span_points();
            let others = c.vertices.iter().copied().filter(|&w| w != u);
            let plane_neighbours = others
                .clone()
                .filter(|&w| c.perp(u, w) && in_nuclei_plane(u ^ w))
                .count();
            let secant_neighbours = others.clone().filter(|&w| !c.perp(u, w)).count();
            VertexProofCounts {
                vertex: u,
                isotropic_lines: partners.len() / 2,
                lines_meeting_n,
                meeting_points_are_perp_line: meeting == c.perp_line_in_n(u)
                    && meeting.len() == 3
                    && meeting[0] ^ meeting[1] == meeting[2],
                plane_neighbours,
                secant_neighbours,
                non_neighbours: others.filter(|&w| !c.adjacent(u, w)).count(),
                perp_quadric_points: c.isotropic.iter().filter(|&&w| c.perp(u, w)).count(),
                plane_points: plane.len(),
                plane_points_off_n: plane.iter().filter(|&&x| !in_nuclei_plane(x)).count(),
            }
        })
        .collect()
}

pub fn pair_proof_counts() -> Vec<PairProofCounts> {
    let c = Ctx::new();
    let planes: Vec<XorBasis> = c.vertices.iter().map(|&u| c.plane(u)).collect();
    let mut out = Vec::new();
    for (i, &u) in c.vertices.iter().enumerate() {
        for (j, &v) in c.vertices.iter().enumerate().skip(i + 1) {
            let kind = if !c.perp(u, v) {
                PairKind::AdjacentSecant
            } else if planes[j].contains(u) {
                PairKind::AdjacentInPlane
            } else {
                PairKind::NonAdjacent
            };
            let mut tally = CaseTally::default();
            let mut unclassified = 0;
            for &w in &c.vertices {
                if w == u || w == v || !c.adjacent(u, w) || !c.adjacent(v, w) {
                    continue;
                }
                let (pu, pv) = (planes[i].contains(w), planes[j].contains(w));
                let (ou, ov) = (!c.perp(u, w), !c.perp(v, w));
                match (pu, pv, ou, ov) {
                    (true, true, _, _) => tally.both_planes += 1,
                    (true, _, _, true) => tally.plane_u_off_perp_v += 1,
                    (_, true, true, _) => tally.off_perp_u_plane_v += 1,
                    (_, _, true, true) => tally.off_both_perps += 1,
                    _ => unclassified += 1,
                }
            }
            let in_union = |w: u64| c.perp(u, w) || c.perp(v, w);
            out.push(PairProofCounts {
                u,
                v,
                kind,
                tally,
                unclassified,
                perp_meet_quadric: c
                    .isotropic
                    .iter()
                    .filter(|&&w| c.perp(u, w) && c.perp(v, w))
                    .count(),
                perp_union_quadric: c.isotropic.iter().filter(|&&w| in_union(w)).count(),
                perp_union_n: c.nuclei.iter().filter(|&&w| in_union(w)).count(),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn per_vertex() {
        let counts = vertex_proof_counts();
        assert_eq!(counts.len(), 28);
        for c in counts {
            assert_eq!(c.isotropic_lines, 9);
            assert_eq!(c.lines_meeting_n, 3);
            assert!(c.meeting_points_are_perp_line);
            assert_eq!(
                (c.plane_neighbours, c.secant_neighbours, c.non_neighbours),
                (3, 12, 12)
            );
            assert_eq!(c.perp_quadric_points, 19);
            assert_eq!((c.plane_points, c.plane_points_off_n), (7, 4));
        }
    }

    #[test]
    fn per_pair() {
        let pairs = pair_proof_counts();
        assert_eq!(pairs.len(), 378);
        for p in &pairs {
            assert_eq!(p.unclassified, 0);
            let (tally, meet, union_n) = match p.kind {
                PairKind::NonAdjacent => (CaseTally::new(0, 2, 2, 6), 11, 5),
                PairKind::AdjacentInPlane => (CaseTally::new(2, 0, 0, 4), 11, 3),
                PairKind::AdjacentSecant => (CaseTally::new(0, 1, 1, 4), 9, 5),
            };
            assert_eq!(p.tally, tally, "{p:?}");
            assert_eq!(p.perp_meet_quadric, meet);
            assert_eq!(p.perp_union_quadric, 38 - meet);
            assert_eq!(p.perp_union_n, union_n);
            assert_eq!(p.off_both_by_complement(), p.tally.off_both_perps as isize);
        }
        let n = |k| pairs.iter().filter(|p| p.kind == k).count();
        // 28*12/2 non-edges; edges 28*3/2 in-plane and 28*12/2 secant
        assert_eq!(n(PairKind::NonAdjacent), 168);
        assert_eq!(n(PairKind::AdjacentInPlane), 42);
        assert_eq!(n(PairKind::AdjacentSecant), 168);
    }
}
