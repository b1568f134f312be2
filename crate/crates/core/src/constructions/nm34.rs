// The graph on the 28 points off the secant variety, in four guises.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{canonical_form, in_nuclei_plane, labels, to_point};
use crate::error::Error;
use crate::field::Field;
use crate::gf2;
use crate::graph::Graph;
use crate::projgeom::ProjSubspace;
use crate::veronese::{general_linear_group, lift, nuclei_plane, SymMatrix3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Nm34Representation {
    /// PG(5,2) minus the cubic `det = 0`; adjacent iff the joining line
    /// meets the cubic in exactly one point.
    OffSecant,
    /// `Q⁺(5,2) ∖ N`; adjacent iff the line meets N in one point or the
    /// quadric in two.
    QuadricMinusN,
    /// Nonsingular symmetric 3×3 matrices; adjacent iff the sum is singular.
    MatrixSum,
    /// `Q⁺(5,2) ∖ N`; adjacent iff `u ∉ v⊥` or `u ∈ ⟨v, v⊥ ∩ N⟩`.
    PerpRule,
}

impl Nm34Representation {
    pub const ALL: [Nm34Representation; 4] = [
        Nm34Representation::OffSecant,
        Nm34Representation::QuadricMinusN,
        Nm34Representation::MatrixSum,
        Nm34Representation::PerpRule,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Nm34Representation::OffSecant => "off-secant",
            Nm34Representation::QuadricMinusN => "quadric-minus-n",
            Nm34Representation::MatrixSum => "matrix-sum",
            Nm34Representation::PerpRule => "perp-rule",
        }
    }
}

impl fmt::Display for Nm34Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Nm34Representation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Self::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Parse(alloc::format!("unknown representation {s:?}")))
    }
}

fn det_bits(x: u64) -> u8 {
    let c: [u8; 6] = gf2::to_coords(x, 6).try_into().expect("length 6");
    SymMatrix3::from_coords(c, Field::GF2).det()
}

/// Points of the canonical hyperbolic quadric outside N.
pub fn quadric_minus_n_vertices() -> Vec<u64> {
    let q = canonical_form().gf2().expect("GF(2)");
    q.isotropic_points()
        .into_iter()
        .filter(|&x| !in_nuclei_plane(x))
        .collect()
}

pub fn nm34_vertices(rep: Nm34Representation) -> Vec<u64> {
    match rep {
        Nm34Representation::OffSecant | Nm34Representation::MatrixSum => {
            gf2::points(6).filter(|&x| det_bits(x) == 1).collect()
        }
        Nm34Representation::QuadricMinusN | Nm34Representation::PerpRule => {
            quadric_minus_n_vertices()
        }
    }
}

pub fn build_nm34(rep: Nm34Representation) -> Graph {
    let vs = nm34_vertices(rep);
    let n = vs.len();
    let g = match rep {
        Nm34Representation::OffSecant => Graph::from_fn(n, |i, j| {
            let line = [vs[i], vs[j], vs[i] ^ vs[j]];
            line.iter().filter(|&&x| det_bits(x) == 0).count() == 1
        }),
        Nm34Representation::MatrixSum => {
            let mats: Vec<SymMatrix3> = vs
                .iter()
                .map(|&x| {
                    SymMatrix3::from_coords(gf2::to_coords(x, 6).try_into().expect("6"), Field::GF2)
                })
                .collect();
            Graph::from_fn(n, |i, j| {
                mats[i].add(&mats[j]).expect("same field").is_singular()
            })
        }
        Nm34Representation::QuadricMinusN => {
            let q = canonical_form().gf2().expect("GF(2)");
            Graph::from_fn(n, |i, j| {
                let line = [vs[i], vs[j], vs[i] ^ vs[j]];
                let on_n = line.iter().filter(|&&x| in_nuclei_plane(x)).count();
                let on_q = line.iter().filter(|&&x| q.eval(x) == 0).count();
                on_n == 1 || on_q == 2
            })
        }
        Nm34Representation::PerpRule => {
            let form = canonical_form();
            let n_plane = nuclei_plane(Field::GF2);
            let pts: Vec<_> = vs.iter().map(|&x| to_point(x, 6)).collect();
            let planes: Vec<(ProjSubspace, ProjSubspace)> = pts
                .iter()
                .map(|v| {
                    let perp = form.perp(v);
                    let pi = ProjSubspace::span(core::slice::from_ref(v))
                        .and_then(|s| s.join(&perp.meet(&n_plane)?))
                        .expect("same ambient space");
                    (perp, pi)
                })
                .collect();
            Graph::from_fn(n, |i, j| {
                let (perp_v, pi_v) = &planes[j];
                !perp_v.contains(&pts[i]) || pi_v.contains(&pts[i])
            })
        }
    };
    g.with_labels(labels(&vs, 6))
}

/// Number of the 168 lifted collineations of PG(2,2) that act as
/// automorphisms of the off-secant graph.
pub fn lifted_group_automorphisms() -> usize {
    let f = Field::GF2;
    let g = build_nm34(Nm34Representation::OffSecant);
    let vs = nm34_vertices(Nm34Representation::OffSecant);
    general_linear_group(f)
        .iter()
        .filter(|a| {
            let b = lift(a, f).expect("invertible");
            let perm: Option<Vec<usize>> = vs
                .iter()
                .map(|&x| {
                    let img = gf2::from_coords(&b.apply_coords(&gf2::to_coords(x, 6)));
                    vs.binary_search(&img).ok()
                })
                .collect();
            perm.is_some_and(|p| g.is_automorphism(&p))
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_counts() {
        for rep in Nm34Representation::ALL {
            assert_eq!(nm34_vertices(rep).len(), 28, "{rep}");
            assert_eq!(build_nm34(rep).n(), 28);
        }
    }

    #[test]
    fn names_round_trip() {
        for rep in Nm34Representation::ALL {
            assert_eq!(rep.name().parse::<Nm34Representation>().unwrap(), rep);
        }
        assert!("klein".parse::<Nm34Representation>().is_err());
    }

    #[test]
    fn off_secant_equals_matrix_sum() {
        let a = build_nm34(Nm34Representation::OffSecant);
        let b = build_nm34(Nm34Representation::MatrixSum);
        assert_eq!(a, b);
        // adjacency is det(x + y) = 0
        let vs = nm34_vertices(Nm34Representation::OffSecant);
        for i in 0..28 {
            for j in i + 1..28 {
                assert_eq!(a.has_edge(i, j), det_bits(vs[i] ^ vs[j]) == 0);
            }
        }
    }

    #[test]
    fn quadric_rules_agree() {
        let a = build_nm34(Nm34Representation::QuadricMinusN);
        let b = build_nm34(Nm34Representation::PerpRule);
        assert!(a.same_edges(&b));
    }

    #[test]
    fn lifted_group_preserves_adjacency() {
        assert_eq!(lifted_group_automorphisms(), 168);
    }
}
