//! Quadratic forms over GF(q), their polar forms and polarity.
//!
//! The polar form is `B(x, y) = Q(x + y) − Q(x) − Q(y)`, which needs no
//! special case in characteristic 2.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gf2;
use crate::projgeom::{enumerate_points, ProjPoint, ProjSubspace};

/// `Q(x) = Σ_{i≤j} c[i][j]·x_i·x_j`, stored upper-triangular.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    coeffs: Vec<Vec<u8>>,
    field: Field,
}

impl QuadraticForm {
    /// Builds a form from a square coefficient matrix. Entries below the
    /// diagonal are folded onto their mirror, since `x_i x_j = x_j x_i`.
    pub fn new(matrix: Vec<Vec<u8>>, field: Field) -> Result<Self> {
        let len = matrix.len();
        if len == 0 {
            return Err(Error::EmptyInput);
        }
        let mut coeffs = vec![vec![0u8; len]; len];
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != len {
                return Err(Error::DimensionMismatch {
                    expected: len,
                    found: row.len(),
                });
            }
            for (j, &c) in row.iter().enumerate() {
                let (a, b) = if i <= j { (i, j) } else { (j, i) };
                coeffs[a][b] = field.add(coeffs[a][b], c % field.q());
            }
        }
        Ok(QuadraticForm { coeffs, field })
    }

    /// Form given as a list of monomials `(i, j, c)` meaning `c·x_i·x_j`.
    pub fn from_terms(len: usize, terms: &[(usize, usize, u8)], field: Field) -> Result<Self> {
        let mut m = vec![vec![0u8; len]; len];
        for &(i, j, c) in terms {
            if i >= len || j >= len {
                return Err(Error::OutOfRange {
                    what: "monomial index",
                    value: i.max(j),
                });
            }
            m[i][j] = field.add(m[i][j], c % field.q());
        }
        Self::new(m, field)
    }

    /// `Σ_{i=1..n} X_i·X_{2n+1−i}` on PG(2n−1, q); for n = 3 this is
    /// `X₁X₆ + X₂X₅ + X₃X₄`.
    pub fn hyperbolic(n: usize, field: Field) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange {
                what: "n",
                value: n,
            });
        }
        let terms: Vec<(usize, usize, u8)> = (0..n).map(|i| (i, 2 * n - 1 - i, 1)).collect();
        Self::from_terms(2 * n, &terms, field)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Vec<u8>] {
        &self.coeffs
    }

    pub fn eval(&self, x: &[u8]) -> u8 {
        let f = self.field;
        let mut acc = 0u8;
        for (i, row) in self.coeffs.iter().enumerate() {
            if x[i] == 0 {
                continue;
            }
            for j in i..row.len() {
                if row[j] != 0 && x[j] != 0 {
                    acc = f.add(acc, f.mul(row[j], f.mul(x[i], x[j])));
                }
            }
        }
        acc
    }

    pub fn polar(&self, x: &[u8], y: &[u8]) -> u8 {
        let f = self.field;
        let sum: Vec<u8> = x.iter().zip(y).map(|(&a, &b)| f.add(a, b)).collect();
        f.sub(f.sub(self.eval(&sum), self.eval(x)), self.eval(y))
    }

    pub fn eval_point(&self, p: &ProjPoint) -> u8 {
        self.eval(p.coords())
    }

    pub fn polar_points(&self, x: &ProjPoint, y: &ProjPoint) -> u8 {
        self.polar(x.coords(), y.coords())
    }

    pub fn is_isotropic(&self, p: &ProjPoint) -> bool {
        self.eval_point(p) == 0
    }

    pub fn isotropic_points(&self) -> Vec<ProjPoint> {
        enumerate_points(self.len() - 1, self.field)
            .into_iter()
            .filter(|p| self.is_isotropic(p))
            .collect()
    }

    /// The polar hyperplane `{y : B(x, y) = 0}`; the whole space when `x` is
    /// in the radical.
    pub fn perp(&self, x: &ProjPoint) -> ProjSubspace {
        let len = self.len();
        let coeffs: Vec<u8> = (0..len)
            .map(|j| {
                let mut e = vec![0u8; len];
                e[j] = 1;
                self.polar(x.coords(), &e)
            })
            .collect();
        ProjSubspace::hyperplane(&coeffs, self.field)
    }

    /// Number of isotropic points on a line, by direct count. `q + 1` means
    /// the line is totally isotropic.
    pub fn line_intersection_count(&self, line: &ProjSubspace) -> Result<usize> {
        if line.rank() != 2 {
            return Err(Error::NotALine { rank: line.rank() });
        }
        Ok(line
            .points()
            .iter()
            .filter(|p| self.is_isotropic(p))
            .count())
    }

    /// Bit-level evaluator for forms over GF(2).
    pub fn gf2(&self) -> Option<Gf2Form> {
        if self.field != Field::GF2 || self.len() > gf2::MAX_LEN {
            return None;
        }
        let len = self.len();
        let mut terms = Vec::new();
        for i in 0..len {
            for j in i..len {
                if self.coeffs[i][j] == 1 {
                    terms.push((gf2::bit(len, i), gf2::bit(len, j)));
                }
            }
        }
        Some(Gf2Form { terms, len })
    }
}

/// A quadratic form over GF(2) evaluated on bit-packed vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Form {
    terms: Vec<(u64, u64)>,
    len: usize,
}

impl Gf2Form {
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn eval(&self, x: u64) -> u8 {
        let mut acc = 0u8;
        for &(a, b) in &self.terms {
            acc ^= u8::from(x & a != 0 && x & b != 0);
        }
        acc
    }

    #[inline]
    pub fn polar(&self, x: u64, y: u64) -> u8 {
        self.eval(x ^ y) ^ self.eval(x) ^ self.eval(y)
    }

    pub fn isotropic_points(&self) -> Vec<u64> {
        gf2::points(self.len)
            .filter(|&x| self.eval(x) == 0)
            .collect()
    }

    pub fn non_isotropic_points(&self) -> Vec<u64> {
        gf2::points(self.len)
            .filter(|&x| self.eval(x) == 1)
            .collect()
    }
}

/// `2^{2n−1} + 2^{n−1} − 1`, the number of points on the hyperbolic quadric
/// of PG(2n−1, 2).
pub fn hyperbolic_point_count(n: u32) -> usize {
    (1usize << (2 * n - 1)) + (1usize << (n - 1)) - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> ProjPoint {
        ProjPoint::parse(s, Field::GF2).unwrap()
    }

    #[test]
    fn canonical_form_values() {
        let q = QuadraticForm::hyperbolic(3, Field::GF2).unwrap();
        assert_eq!(q.eval_point(&pt("101011")), 1);
        assert_eq!(q.eval_point(&pt("000100")), 0);
        assert_eq!(q.isotropic_points().len(), 35);
        let g = q.gf2().unwrap();
        for x in gf2::points(6) {
            assert_eq!(g.eval(x), q.eval(&gf2::to_coords(x, 6)));
        }
    }

    #[test]
    fn isotropic_counts_small_n() {
        // enumeration against 2^{2n-1} + 2^{n-1} - 1
        for (n, expected) in [(2u32, 9usize), (3, 35), (4, 135)] {
            let q = QuadraticForm::hyperbolic(n as usize, Field::GF2).unwrap();
            assert_eq!(q.isotropic_points().len(), expected);
            assert_eq!(hyperbolic_point_count(n), expected);
        }
    }

    #[test]
    fn homogeneity_and_polar_bilinearity() {
        for qq in [2u32, 3, 5] {
            let f = Field::new(qq).unwrap();
            let form =
                QuadraticForm::from_terms(3, &[(0, 0, 1), (0, 1, 2), (1, 2, 1), (2, 2, 3)], f)
                    .unwrap();
            let pts = enumerate_points(2, f);
            for p in &pts {
                for t in f.elements() {
                    let scaled: Vec<u8> = p.coords().iter().map(|&c| f.mul(t, c)).collect();
                    assert_eq!(form.eval(&scaled), f.mul(f.mul(t, t), form.eval_point(p)));
                }
                assert_eq!(
                    form.polar(p.coords(), p.coords()),
                    f.mul(2 % f.q(), form.eval_point(p))
                );
                for r in &pts {
                    assert_eq!(form.polar_points(p, r), form.polar_points(r, p));
                    for s in &pts {
                        let sum: Vec<u8> = r
                            .coords()
                            .iter()
                            .zip(s.coords())
                            .map(|(&a, &b)| f.add(a, b))
                            .collect();
                        let lhs = form.polar(p.coords(), &sum);
                        let rhs = f.add(form.polar_points(p, r), form.polar_points(p, s));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn lower_triangle_folds() {
        let f = Field::GF3;
        let a = QuadraticForm::new(vec![vec![0, 1], vec![1, 0]], f).unwrap();
        let b = QuadraticForm::from_terms(2, &[(0, 1, 2)], f).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn perp_sizes_on_canonical_quadric() {
        let q = QuadraticForm::hyperbolic(3, Field::GF2).unwrap();
        for p in enumerate_points(5, Field::GF2) {
            let h = q.perp(&p);
            assert_eq!(h.dim(), 4);
            let on_quadric = h.points().iter().filter(|x| q.is_isotropic(x)).count();
            // isotropic: cone over Q+(3,2), 1 + 2*9; non-isotropic: parabolic Q(4,2)
            let expected = if q.is_isotropic(&p) { 19 } else { 15 };
            assert_eq!(on_quadric, expected, "{p}");
        }
    }

    #[test]
    fn line_counts() {
        let q = QuadraticForm::hyperbolic(3, Field::GF2).unwrap();
        let n_line = ProjSubspace::line_through(&pt("000100"), &pt("000010")).unwrap();
        assert_eq!(q.line_intersection_count(&n_line).unwrap(), 3);
        let plane = ProjSubspace::span(&[pt("100000"), pt("010000"), pt("001000")]).unwrap();
        assert_eq!(
            q.line_intersection_count(&plane),
            Err(Error::NotALine { rank: 3 })
        );
    }
}
