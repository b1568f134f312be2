//! Every graph the toolkit checks, built from points of PG(2n−1, 2).
//!
//! Vertices are bit-packed points (see [`crate::gf2`]) kept in ascending
//! order, so vertex `i` of a graph is the `i`-th point of the filtered
//! canonical enumeration. Graph labels are the coordinate strings.

mod nm34;
mod proof;
mod table;

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gf2;
use crate::graph::{Graph, SrgParams};
use crate::projgeom::{ProjPoint, ProjSubspace};
use crate::quadform::QuadraticForm;

pub use nm34::{
    build_nm34, lifted_group_automorphisms, nm34_vertices, quadric_minus_n_vertices,
    Nm34Representation,
};
pub use proof::{
    pair_proof_counts, vertex_proof_counts, CaseTally, PairKind, PairProofCounts, VertexProofCounts,
};
pub use table::{
    verify_iso_table, Convention, Direction, IsoTable, NoPlusForm, TableReport, ISO_TABLE_FIXTURE,
};

/// Bit mask of the coordinates X₁, X₂, X₃ in PG(5, 2); a point lies in the
/// nuclei plane N iff it has none of them.
pub const NUCLEI_MASK: u64 = 0b111000;

#[inline]
pub fn in_nuclei_plane(x: u64) -> bool {
    x & NUCLEI_MASK == 0
}

/// The canonical form `X₁X₆ + X₂X₅ + X₃X₄`.
pub fn canonical_form() -> QuadraticForm {
    QuadraticForm::hyperbolic(3, Field::GF2).expect("n = 3")
}

pub(crate) fn labels(vertices: &[u64], len: usize) -> Vec<String> {
    vertices.iter().map(|&v| gf2::to_string(v, len)).collect()
}

pub(crate) fn to_point(v: u64, len: usize) -> ProjPoint {
    ProjPoint::from_bits(v, len).expect("nonzero")
}

/// `(2^{2n−1} − 2^{n−1}, 2^{2n−2} − 1, 2^{2n−3} − 2, 2^{2n−3} + 2^{n−2})`.
pub fn no_plus_expected_params(n: u32) -> SrgParams {
    assert!(n >= 2);
    SrgParams::new(
        (1 << (2 * n - 1)) - (1 << (n - 1)),
        (1 << (2 * n - 2)) - 1,
        (1 << (2 * n - 3)) - 2,
        (1 << (2 * n - 3)) + (1 << (n - 2)),
    )
}

fn check_no_plus_range(n: usize) -> Result<()> {
    if (2..=4).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what: "n",
            value: n,
        })
    }
}

/// Non-isotropic points of a form over GF(2), ascending.
pub fn no_plus_vertices(form: &QuadraticForm) -> Result<Vec<u64>> {
    let g = form
        .gf2()
        .ok_or(Error::UnsupportedModulus(u32::from(form.field().q())))?;
    Ok(g.non_isotropic_points())
}

/// `NO⁺(2n, 2)` for n ∈ {2, 3, 4}: non-isotropic points of the hyperbolic
/// quadric, adjacent when orthogonal.
pub fn build_no_plus(n: usize) -> Result<Graph> {
    check_no_plus_range(n)?;
    build_no_plus_with_form(&QuadraticForm::hyperbolic(n, Field::GF2)?)
}

/// Orthogonality graph on the non-isotropic points of an arbitrary form over
/// GF(2).
pub fn build_no_plus_with_form(form: &QuadraticForm) -> Result<Graph> {
    let g = form
        .gf2()
        .ok_or(Error::UnsupportedModulus(u32::from(form.field().q())))?;
    let vs = g.non_isotropic_points();
    Ok(Graph::from_fn(vs.len(), |i, j| g.polar(vs[i], vs[j]) == 0)
        .with_labels(labels(&vs, form.len())))
}

/// `NO⁺(2n, 2)` with the tangent-line rule: adjacent iff the joining line
/// meets the quadric in exactly one point. Counts points on each line with
/// the general subspace code.
pub fn build_no_plus_tangent(n: usize) -> Result<Graph> {
    check_no_plus_range(n)?;
    let form = QuadraticForm::hyperbolic(n, Field::GF2)?;
    let pts: Vec<ProjPoint> = form
        .gf2()
        .expect("GF(2)")
        .non_isotropic_points()
        .into_iter()
        .map(|v| to_point(v, 2 * n))
        .collect();
    let g = Graph::from_fn(pts.len(), |i, j| {
        let line = ProjSubspace::line_through(&pts[i], &pts[j]).expect("distinct");
        form.line_intersection_count(&line).expect("line") == 1
    });
    let names = pts.iter().map(|p| alloc::format!("{p}")).collect();
    Ok(g.with_labels(names))
}

/// Hat graphs on the non-isotropic points of the canonical form and on
/// `Q⁺(5,2) ∖ N`: adjacent iff the third point of the joining line is in N.
pub fn build_hat_graphs() -> (Graph, Graph) {
    let hat = |vs: Vec<u64>| {
        Graph::from_fn(vs.len(), |i, j| in_nuclei_plane(vs[i] ^ vs[j])).with_labels(labels(&vs, 6))
    };
    let no_plus = no_plus_vertices(&canonical_form()).expect("GF(2)");
    (hat(no_plus), hat(quadric_minus_n_vertices()))
}

/// For each component, the set `{u + v}` over distinct pairs in it, when
/// that set is exactly the three points of a line of N.
pub fn hat_component_lines(g: &Graph) -> Vec<Option<[u64; 3]>> {
    let vs: Vec<u64> = g
        .labels()
        .map(|ls| {
            ls.iter()
                .map(|s| gf2::parse(s).map_or(0, |(v, _)| v))
                .collect()
        })
        .unwrap_or_default();
    g.connected_components()
        .iter()
        .map(|comp| {
            let mut sums: Vec<u64> = comp
                .iter()
                .enumerate()
                .flat_map(|(i, &a)| comp[i + 1..].iter().map(move |&b| (a, b)))
                .map(|(a, b)| vs.get(a).copied().unwrap_or(0) ^ vs.get(b).copied().unwrap_or(0))
                .collect();
            sums.sort_unstable();
            sums.dedup();
            let line: [u64; 3] = sums.try_into().ok()?;
            let is_line =
                line.iter().all(|&x| x != 0 && in_nuclei_plane(x)) && line[0] ^ line[1] == line[2];
            is_line.then_some(line)
        })
        .collect()
}

/// The Kneser graph K(8, 2): 2-subsets of an 8-set, adjacent iff disjoint.
pub fn kneser_oracle() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..8)
        .flat_map(|a| (a + 1..8).map(move |b| (a, b)))
        .collect();
    let names = pairs
        .iter()
        .map(|(a, b)| alloc::format!("{{{a},{b}}}"))
        .collect();
    Graph::from_fn(pairs.len(), |i, j| {
        let (a, b) = (pairs[i], pairs[j]);
        a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
    })
    .with_labels(names)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::srg_params;

    #[test]
    fn formula_values() {
        assert_eq!(no_plus_expected_params(2), SrgParams::new(6, 3, 0, 3));
        assert_eq!(no_plus_expected_params(3), SrgParams::new(28, 15, 6, 10));
        assert_eq!(no_plus_expected_params(4), SrgParams::new(120, 63, 30, 36));
    }

    #[test]
    fn no_plus_small_and_errors() {
        let g = build_no_plus(3).unwrap();
        assert_eq!(g.n(), 28);
        assert_eq!(g.label(0), Some("001100"));
        assert_eq!(srg_params(&g), Ok(SrgParams::new(28, 15, 6, 10)));
        assert_eq!(
            build_no_plus(1),
            Err(Error::OutOfRange {
                what: "n",
                value: 1
            })
        );
        assert_eq!(
            build_no_plus(5),
            Err(Error::OutOfRange {
                what: "n",
                value: 5
            })
        );
        let t = build_no_plus_tangent(3).unwrap();
        assert!(t.same_edges(&g));
        assert_eq!(t.labels(), g.labels());
    }

    #[test]
    fn kneser_basics() {
        let k = kneser_oracle();
        assert_eq!(k.n(), 28);
        assert!(k.degrees().iter().all(|&d| d == 15));
        assert_eq!(k.label(0), Some("{0,1}"));
    }

    #[test]
    fn hat_graph_shape() {
        let (a, b) = build_hat_graphs();
        for g in [&a, &b] {
            assert_eq!(g.n(), 28);
            assert_eq!(g.edge_count(), 42);
            let comps = g.connected_components();
            assert_eq!(comps.len(), 7);
            assert!(comps
                .iter()
                .all(|c| c.len() == 4 && g.induced_is_complete(c)));
            let mut lines: Vec<[u64; 3]> = hat_component_lines(g)
                .into_iter()
                .map(Option::unwrap)
                .collect();
            lines.sort_unstable();
            lines.dedup();
            assert_eq!(lines.len(), 7);
        }
    }
}
