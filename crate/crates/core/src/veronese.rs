//! The Veronese surface of PG(2, q) in PG(5, q), its secant variety, and the
//! lifted collineation group with its four orbits.
//!
//! Points of PG(5, q) are identified with 3×3 symmetric matrices through
//! `(X₁, …, X₆) ↔ [[X₁, X₄, X₅], [X₄, X₂, X₆], [X₅, X₆, X₃]]`. Under this
//! identification the lifted action `x ↦ x·B` is congruence `M ↦ AᵀMA`, so
//! the secant variety is the cubic `det M = 0`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg;
use crate::projgeom::{code, enumerate_points, normalize, point_count, ProjPoint, ProjSubspace};
use crate::quadform::QuadraticForm;
use crate::unionfind::UnionFind;

pub type Matrix3 = [[u8; 3]; 3];
pub type Matrix6 = [[u8; 6]; 6];

pub const IDENTITY3: Matrix3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

/// Row/column pairs addressed by the coordinates X₄, X₅, X₆.
const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

pub fn det3(m: &Matrix3, f: Field) -> u8 {
    let m = m.map(|r| r.map(i64::from));
    let d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    f.reduce(d)
}

pub fn mul3(a: &Matrix3, b: &Matrix3, f: Field) -> Matrix3 {
    let mut out = [[0u8; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).fold(0, |acc, k| f.add(acc, f.mul(a[i][k], b[k][j])));
        }
    }
    out
}

pub fn mul6(a: &Matrix6, b: &Matrix6, f: Field) -> Matrix6 {
    let mut out = [[0u8; 6]; 6];
    for i in 0..6 {
        for j in 0..6 {
            out[i][j] = (0..6).fold(0, |acc, k| f.add(acc, f.mul(a[i][k], b[k][j])));
        }
    }
    out
}

/// `true` iff `b = c·a` for some nonzero scalar `c`.
pub fn is_scalar_multiple(a: &Matrix6, b: &Matrix6, f: Field) -> bool {
    f.elements().skip(1).any(|c| {
        a.iter()
            .flatten()
            .zip(b.iter().flatten())
            .all(|(&x, &y)| f.mul(c, x) == y)
    })
}

/// A 3×3 symmetric matrix over GF(q), viewed as a point of PG(5, q).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SymMatrix3 {
    m: Matrix3,
    field: Field,
}

impl SymMatrix3 {
    pub fn from_coords(x: [u8; 6], field: Field) -> Self {
        let x = x.map(|c| c % field.q());
        SymMatrix3 {
            m: [[x[0], x[3], x[4]], [x[3], x[1], x[5]], [x[4], x[5], x[2]]],
            field,
        }
    }

    pub fn from_point(p: &ProjPoint) -> Result<Self> {
        let c: [u8; 6] = p
            .coords()
            .try_into()
            .map_err(|_| Error::DimensionMismatch {
                expected: 6,
                found: p.coords().len(),
            })?;
        Ok(Self::from_coords(c, p.field()))
    }

    /// Accepts any matrix, erroring when it is not symmetric.
    pub fn from_matrix(m: Matrix3, field: Field) -> Result<Self> {
        let m = m.map(|r| r.map(|c| c % field.q()));
        if (0..3).any(|i| (0..3).any(|j| m[i][j] != m[j][i])) {
            return Err(Error::Parse(alloc::string::String::from(
                "matrix is not symmetric",
            )));
        }
        Ok(SymMatrix3 { m, field })
    }

    pub fn coords(&self) -> [u8; 6] {
        let m = &self.m;
        [m[0][0], m[1][1], m[2][2], m[0][1], m[0][2], m[1][2]]
    }

    pub fn to_point(&self) -> Result<ProjPoint> {
        ProjPoint::new(self.coords().to_vec(), self.field)
    }

    pub fn entries(&self) -> &Matrix3 {
        &self.m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn det(&self) -> u8 {
        det3(&self.m, self.field)
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<u8>> = self.m.iter().map(|r| r.to_vec()).collect();
        linalg::rank(&rows, self.field)
    }

    pub fn is_singular(&self) -> bool {
        self.det() == 0
    }

    /// Zero diagonal; in characteristic 2 these are the alternating forms.
    pub fn has_zero_diagonal(&self) -> bool {
        (0..3).all(|i| self.m[i][i] == 0)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch {
                left: self.field.q(),
                right: other.field.q(),
            });
        }
        let f = self.field;
        let mut m = self.m;
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] = f.add(m[i][j], other.m[i][j]);
            }
        }
        Ok(SymMatrix3 { m, field: f })
    }
}

/// `(x₁, x₂, x₃) ↦ (x₁², x₂², x₃², x₁x₂, x₁x₃, x₂x₃)`.
pub fn veronese_embed(p: &ProjPoint) -> Result<ProjPoint> {
    let x = p.coords();
    if x.len() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: x.len(),
        });
    }
    let f = p.field();
    let v = alloc::vec![
        f.mul(x[0], x[0]),
        f.mul(x[1], x[1]),
        f.mul(x[2], x[2]),
        f.mul(x[0], x[1]),
        f.mul(x[0], x[2]),
        f.mul(x[1], x[2]),
    ];
    ProjPoint::new(v, f)
}

pub fn veronese_surface(f: Field) -> Vec<ProjPoint> {
    let mut out: Vec<ProjPoint> = enumerate_points(2, f)
        .iter()
        .map(|p| veronese_embed(p).expect("plane point"))
        .collect();
    out.sort();
    out
}

pub fn in_secant_variety(p: &ProjPoint) -> Result<bool> {
    Ok(SymMatrix3::from_point(p)?.is_singular())
}

/// Points of PG(5, q) on the determinantal cubic.
pub fn secant_variety(f: Field) -> Vec<ProjPoint> {
    enumerate_points(5, f)
        .into_iter()
        .filter(|p| in_secant_variety(p).expect("PG(5,q) point"))
        .collect()
}

/// `(q² + 1)(q² + q + 1)`.
pub fn expected_secant_count(q: u8) -> usize {
    let q = q as usize;
    (q * q + 1) * (q * q + q + 1)
}

/// The plane `X₁ = X₂ = X₃ = 0`.
pub fn nuclei_plane(f: Field) -> ProjSubspace {
    let rows = (3..6)
        .map(|i| (0..6).map(|j| u8::from(i == j)).collect())
        .collect();
    ProjSubspace::from_vectors(rows, 6, f).expect("unit vectors")
}

/// `X₁² + X₂² + X₃² + X₁X₂ + X₂X₃ + X₁X₃ + X₁X₆ + X₂X₅ + X₃X₄` over GF(2).
pub fn klein_quadric() -> QuadraticForm {
    let terms = [
        (0, 0, 1),
        (1, 1, 1),
        (2, 2, 1),
        (0, 1, 1),
        (1, 2, 1),
        (0, 2, 1),
        (0, 5, 1),
        (1, 4, 1),
        (2, 3, 1),
    ];
    QuadraticForm::from_terms(6, &terms, Field::GF2).expect("indices in range")
}

/// The 6×6 matrix `B` of the collineation of PG(5, q) lifted from `y ↦ yA`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LiftedCollineation {
    source: Matrix3,
    lifted: Matrix6,
    field: Field,
}

/// Lifts an invertible 3×3 matrix. Rows 1–3 hold `a_ik a_il`-type products
/// of a single row of `A`; rows 4–6 mix two rows, with the `2a·a` entries
/// computed over the integers before reduction, so over GF(2) the lower-left
/// block vanishes.
pub fn lift(a: &Matrix3, f: Field) -> Result<LiftedCollineation> {
    let a = a.map(|r| r.map(|c| c % f.q()));
    if det3(&a, f) == 0 {
        return Err(Error::SingularMatrix);
    }
    let ai = a.map(|r| r.map(i64::from));
    let mut b = [[0u8; 6]; 6];
    for i in 0..3 {
        for k in 0..3 {
            b[i][k] = f.reduce(ai[i][k] * ai[i][k]);
        }
        for (c, &(k, l)) in PAIRS.iter().enumerate() {
            b[i][3 + c] = f.reduce(ai[i][k] * ai[i][l]);
        }
    }
    for (r, &(i, j)) in PAIRS.iter().enumerate() {
        for k in 0..3 {
            b[3 + r][k] = f.reduce(2 * ai[i][k] * ai[j][k]);
        }
        for (c, &(k, l)) in PAIRS.iter().enumerate() {
            b[3 + r][3 + c] = f.reduce(ai[i][k] * ai[j][l] + ai[j][k] * ai[i][l]);
        }
    }
    Ok(LiftedCollineation {
        source: a,
        lifted: b,
        field: f,
    })
}

impl LiftedCollineation {
    pub fn source(&self) -> &Matrix3 {
        &self.source
    }

    pub fn matrix(&self) -> &Matrix6 {
        &self.lifted
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `x·B` without normalization.
    pub fn apply_coords(&self, x: &[u8]) -> [u8; 6] {
        let f = self.field;
        let mut out = [0u8; 6];
        for (j, o) in out.iter_mut().enumerate() {
            *o = x
                .iter()
                .zip(&self.lifted)
                .fold(0, |acc, (&xi, row)| f.add(acc, f.mul(xi, row[j])));
        }
        out
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        ProjPoint::new(self.apply_coords(p.coords()).to_vec(), self.field).expect("B is invertible")
    }
}

/// Every invertible 3×3 matrix over GF(q), in lexicographic order of
/// entries. 168 for q = 2, 11232 for q = 3.
pub fn general_linear_group(f: Field) -> Vec<Matrix3> {
    let q = u32::from(f.q());
    let total = q.pow(9);
    let mut out = Vec::new();
    for code in 0..total {
        let mut m = [[0u8; 3]; 3];
        let mut c = code;
        for idx in (0..9).rev() {
            m[idx / 3][idx % 3] = (c % q) as u8;
            c /= q;
        }
        if det3(&m, f) != 0 {
            out.push(m);
        }
    }
    out
}

pub fn gl3_order(q: u8) -> usize {
    let q3 = (q as usize).pow(3);
    (q3 - 1) * (q3 - q as usize) * (q3 - (q as usize).pow(2))
}

/// Elementary transvections `I + E_ij` together with `diag(g, 1, 1)` for a
/// primitive root `g`; these generate GL(3, q) over a prime field.
pub fn gl3_generators(f: Field) -> Vec<Matrix3> {
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let mut m = IDENTITY3;
                m[i][j] = 1;
                gens.push(m);
            }
        }
    }
    let mut d = IDENTITY3;
    d[0][0] = f.primitive_root();
    if d != IDENTITY3 {
        gens.push(d);
    }
    gens
}

/// The orbits of the lifted group on PG(5, q).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitLabel {
    /// Double lines: the Veronese surface itself (rank 1).
    O1,
    /// Pairs of imaginary lines (rank 2). Over GF(2) the nuclei plane.
    O2,
    /// Pairs of intersecting lines (rank 2).
    O3,
    /// Non-degenerate conics (rank 3).
    O4,
}

impl OrbitLabel {
    pub const ALL: [OrbitLabel; 4] = [
        OrbitLabel::O1,
        OrbitLabel::O2,
        OrbitLabel::O3,
        OrbitLabel::O4,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn description(self) -> &'static str {
        match self {
            OrbitLabel::O1 => "double lines (points of the Veronese surface)",
            OrbitLabel::O2 => "pairs of imaginary lines",
            OrbitLabel::O3 => "pairs of intersecting lines",
            OrbitLabel::O4 => "non-degenerate conics",
        }
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O{}", self.index() + 1)
    }
}

/// `[q²+q+1, ½(q²+q+1)(q²−q), ½(q²+q+1)(q²+q), q⁵−q²]`.
pub fn expected_orbit_sizes(q: u8) -> [usize; 4] {
    let q = q as usize;
    let plane = q * q + q + 1;
    [
        plane,
        plane * (q * q - q) / 2,
        plane * (q * q + q) / 2,
        q.pow(5) - q * q,
    ]
}

/// Classifies a point by the rank of its matrix. Rank 2 splits by the
/// alternating test over GF(2), and by the square class of `−det` of a
/// nonsingular principal 2×2 minor in odd characteristic (square: the
/// binary form splits, intersecting lines).
pub fn classify_point(p: &ProjPoint) -> Result<OrbitLabel> {
    let m = SymMatrix3::from_point(p)?;
    let f = m.field();
    Ok(match m.rank() {
        1 => OrbitLabel::O1,
        3 => OrbitLabel::O4,
        _ if f.q() == 2 => {
            if m.has_zero_diagonal() {
                OrbitLabel::O2
            } else {
                OrbitLabel::O3
            }
        }
        _ => {
            let e = m.entries();
            let d = PAIRS
                .iter()
                .map(|&(i, j)| f.sub(f.mul(e[i][i], e[j][j]), f.mul(e[i][j], e[i][j])))
                .find(|&d| d != 0)
                .expect("a rank-2 symmetric matrix has a nonsingular principal 2x2 minor");
            if f.is_square(f.neg(d)) {
                OrbitLabel::O3
            } else {
                OrbitLabel::O2
            }
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitMethod {
    /// Act with every element of GL(3, q).
    FullGroup,
    /// Act with a generating set; same orbits, far fewer elements.
    Generators,
}

/// Orbit partition of PG(5, q) under the lifted group.
#[derive(Clone, Debug)]
pub struct OrbitPartition {
    field: Field,
    method: OrbitMethod,
    points: Vec<ProjPoint>,
    classes: Vec<Vec<usize>>,
    class_labels: Vec<OrbitLabel>,
    class_of: Vec<usize>,
}

impl OrbitPartition {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn method(&self) -> OrbitMethod {
        self.method
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    /// Orbits as point-index lists, ordered by smallest member.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Label of the class containing point index `i`, assigned by
    /// classifying the class's first member.
    pub fn label_of_index(&self, i: usize) -> OrbitLabel {
        self.class_labels[self.class_of[i]]
    }

    pub fn label_of(&self, p: &ProjPoint) -> Option<OrbitLabel> {
        self.points
            .binary_search(p)
            .ok()
            .map(|i| self.label_of_index(i))
    }

    pub fn members(&self, label: OrbitLabel) -> Vec<&ProjPoint> {
        (0..self.points.len())
            .filter(|&i| self.label_of_index(i) == label)
            .map(|i| &self.points[i])
            .collect()
    }

    pub fn sizes(&self) -> [usize; 4] {
        let mut s = [0usize; 4];
        for (class, label) in self.classes.iter().zip(&self.class_labels) {
            s[label.index()] += class.len();
        }
        s
    }

    /// Exactly one orbit per label, and the rank classifier agrees with the
    /// orbit's label on every point.
    pub fn agrees_with_classifier(&self) -> bool {
        let mut seen = [false; 4];
        for l in &self.class_labels {
            if core::mem::replace(&mut seen[l.index()], true) {
                return false;
            }
        }
        self.class_count() == 4
            && self
                .points
                .iter()
                .enumerate()
                .all(|(i, p)| classify_point(p).ok() == Some(self.label_of_index(i)))
    }
}

pub fn compute_orbits(f: Field) -> OrbitPartition {
    let method = if f.q() <= 3 {
        OrbitMethod::FullGroup
    } else {
        OrbitMethod::Generators
    };
    compute_orbits_with(f, method)
}

pub fn compute_orbits_with(f: Field, method: OrbitMethod) -> OrbitPartition {
    let q = f.q();
    let points = enumerate_points(5, f);
    let mut index = alloc::vec![usize::MAX; (q as usize).pow(6)];
    for (i, p) in points.iter().enumerate() {
        index[code(p.coords(), q)] = i;
    }
    let group = match method {
        OrbitMethod::FullGroup => general_linear_group(f),
        OrbitMethod::Generators => gl3_generators(f),
    };
    let mut uf = UnionFind::new(points.len());
    for a in &group {
        let b = lift(a, f).expect("group elements are invertible");
        for (i, p) in points.iter().enumerate() {
            let mut img = b.apply_coords(p.coords());
            normalize(&mut img, f);
            uf.union(i, index[code(&img, q)]);
        }
    }
    let classes = uf.classes();
    let mut class_of = alloc::vec![0usize; points.len()];
    for (c, members) in classes.iter().enumerate() {
        for &i in members {
            class_of[i] = c;
        }
    }
    let class_labels = classes
        .iter()
        .map(|c| classify_point(&points[c[0]]).expect("PG(5,q) point"))
        .collect();
    debug_assert_eq!(points.len(), point_count(5, q));
    OrbitPartition {
        field: f,
        method,
        points,
        classes,
        class_labels,
        class_of,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> ProjPoint {
        ProjPoint::parse(s, Field::GF2).unwrap()
    }

    #[test]
    fn embedding_examples() {
        let f = Field::GF2;
        assert_eq!(
            veronese_embed(&ProjPoint::parse("100", f).unwrap()).unwrap(),
            pt("100000")
        );
        assert_eq!(
            veronese_embed(&ProjPoint::parse("111", f).unwrap()).unwrap(),
            pt("111111")
        );
        assert_eq!(veronese_surface(f).len(), 7);
        for q in [3u32, 5, 7] {
            let f = Field::new(q).unwrap();
            let mut s = veronese_surface(f);
            s.dedup();
            assert_eq!(s.len(), point_count(2, f.q()));
        }
    }

    #[test]
    fn matrix_identification_round_trips() {
        for q in [2u32, 3] {
            let f = Field::new(q).unwrap();
            for p in enumerate_points(5, f) {
                let m = SymMatrix3::from_point(&p).unwrap();
                assert_eq!(m.to_point().unwrap(), p);
                assert_eq!(m.det() == 0, m.rank() <= 2);
                assert!((1..=3).contains(&m.rank()));
            }
        }
        let m = SymMatrix3::from_point(&pt("111000")).unwrap();
        assert_eq!(m.entries(), &IDENTITY3);
        assert_eq!(m.det(), 1);
        assert!(!in_secant_variety(&pt("111000")).unwrap());
    }

    #[test]
    fn secant_counts() {
        // brute-force enumeration, q = 2 and q = 3
        assert_eq!(secant_variety(Field::GF2).len(), 35);
        assert_eq!(secant_variety(Field::GF3).len(), 130);
        assert_eq!(expected_secant_count(2), 35);
        assert_eq!(expected_secant_count(3), 130);
    }

    #[test]
    fn lift_identity_and_zero_block() {
        let id = lift(&IDENTITY3, Field::GF2).unwrap();
        let mut i6 = [[0u8; 6]; 6];
        for (i, row) in i6.iter_mut().enumerate() {
            row[i] = 1;
        }
        assert_eq!(id.matrix(), &i6);
        assert_eq!(lift(&IDENTITY3, Field::GF3).unwrap().matrix(), &i6);
        for a in general_linear_group(Field::GF2) {
            let b = lift(&a, Field::GF2).unwrap();
            for r in 3..6 {
                assert_eq!(b.matrix()[r][..3], [0, 0, 0]);
            }
        }
        assert_eq!(
            lift(&[[1, 1, 0], [1, 1, 0], [0, 0, 1]], Field::GF2),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn group_orders() {
        assert_eq!(general_linear_group(Field::GF2).len(), 168);
        assert_eq!(gl3_order(2), 168);
        assert_eq!(gl3_order(3), 11232);
    }

    #[test]
    fn equivariance_gf3_sample() {
        let f = Field::GF3;
        let plane = enumerate_points(2, f);
        for a in general_linear_group(f).iter().step_by(97) {
            let b = lift(a, f).unwrap();
            for y in &plane {
                let ya: Vec<u8> = (0..3)
                    .map(|k| (0..3).fold(0, |acc, i| f.add(acc, f.mul(y.coords()[i], a[i][k]))))
                    .collect();
                let lhs = veronese_embed(&ProjPoint::new(ya, f).unwrap()).unwrap();
                assert_eq!(lhs, b.apply(&veronese_embed(y).unwrap()));
            }
        }
    }

    #[test]
    fn classifier_examples() {
        assert_eq!(classify_point(&pt("000100")).unwrap(), OrbitLabel::O2);
        assert_eq!(classify_point(&pt("111111")).unwrap(), OrbitLabel::O1);
        assert_eq!(classify_point(&pt("111000")).unwrap(), OrbitLabel::O4);
    }

    #[test]
    fn expected_sizes() {
        assert_eq!(expected_orbit_sizes(2), [7, 7, 21, 28]);
        assert_eq!(expected_orbit_sizes(3), [13, 39, 78, 234]);
        for q in [2u8, 3, 5, 7] {
            assert_eq!(
                expected_orbit_sizes(q).iter().sum::<usize>(),
                point_count(5, q)
            );
        }
    }

    #[test]
    fn orbits_gf2() {
        let o = compute_orbits(Field::GF2);
        assert_eq!(o.method(), OrbitMethod::FullGroup);
        assert_eq!(o.sizes(), [7, 7, 21, 28]);
        assert!(o.agrees_with_classifier());
        let n = nuclei_plane(Field::GF2).points();
        let o2: Vec<ProjPoint> = o.members(OrbitLabel::O2).into_iter().cloned().collect();
        assert_eq!(o2, n);
        let o1: Vec<ProjPoint> = o.members(OrbitLabel::O1).into_iter().cloned().collect();
        assert_eq!(o1, veronese_surface(Field::GF2));
    }

    #[test]
    fn orbits_by_generators_match_full_group_gf3() {
        let full = compute_orbits_with(Field::GF3, OrbitMethod::FullGroup);
        let gens = compute_orbits_with(Field::GF3, OrbitMethod::Generators);
        assert_eq!(full.classes(), gens.classes());
        assert_eq!(full.sizes(), [13, 39, 78, 234]);
        assert!(full.agrees_with_classifier());
    }

    #[test]
    fn klein_quadric_facts() {
        let k = klein_quadric();
        assert_eq!(k.eval_point(&pt("001000")), 1);
        assert!(nuclei_plane(Field::GF2)
            .points()
            .iter()
            .all(|p| k.is_isotropic(p)));
        assert_eq!(k.isotropic_points().len(), 35);
    }
}
