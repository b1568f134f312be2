//! Points and subspaces of PG(n, q).
//!
//! Points are normalized so the first nonzero coordinate is 1. Subspaces keep
//! a reduced row echelon basis, so equal subspaces compare equal
//! structurally. The canonical enumeration order of points is lexicographic
//! on the normalized tuples; every graph in this crate indexes its vertices
//! by position in a filtered sublist of that order.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gf2;
use crate::linalg;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: Vec<u8>,
    field: Field,
}

/// Scales `coords` so its first nonzero entry is 1. Returns `false` for the
/// zero vector.
pub fn normalize(coords: &mut [u8], f: Field) -> bool {
    let Some(lead) = coords.iter().copied().find(|&c| c != 0) else {
        return false;
    };
    if lead != 1 {
        let inv = f.inv(lead).expect("nonzero");
        for c in coords.iter_mut() {
            *c = f.mul(*c, inv);
        }
    }
    true
}

impl ProjPoint {
    /// Reduces every coordinate mod q and normalizes.
    pub fn new(mut coords: Vec<u8>, field: Field) -> Result<Self> {
        for c in coords.iter_mut() {
            *c %= field.q();
        }
        if !normalize(&mut coords, field) {
            return Err(Error::ZeroVector);
        }
        Ok(ProjPoint { coords, field })
    }

    pub fn from_bits(bits: u64, len: usize) -> Result<Self> {
        if bits == 0 {
            return Err(Error::ZeroVector);
        }
        Ok(ProjPoint {
            coords: gf2::to_coords(bits, len),
            field: Field::GF2,
        })
    }

    /// Parses a digit string such as `"101011"`.
    pub fn parse(s: &str, field: Field) -> Result<Self> {
        let coords = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| d < u32::from(field.q()))
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Parse(alloc::format!("bad coordinate {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<u8>>>()?;
        if coords.is_empty() {
            return Err(Error::Parse(String::from("empty point string")));
        }
        let p = ProjPoint::new(coords.clone(), field)?;
        if p.coords != coords {
            return Err(Error::Parse(alloc::format!("{s:?} is not normalized")));
        }
        Ok(p)
    }

    pub fn coords(&self) -> &[u8] {
        &self.coords
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Projective dimension of the ambient space.
    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// Bit-packed form, only over GF(2).
    pub fn to_bits(&self) -> Option<u64> {
        (self.field == Field::GF2 && self.coords.len() <= gf2::MAX_LEN)
            .then(|| gf2::from_coords(&self.coords))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.coords {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

pub fn point_count(n: usize, q: u8) -> usize {
    let q = q as usize;
    (0..=n).map(|i| q.pow(i as u32)).sum()
}

/// All points of PG(n, q) in lexicographic order of normalized coordinates.
pub fn enumerate_points(n: usize, f: Field) -> Vec<ProjPoint> {
    let len = n + 1;
    let q = f.q();
    let mut out = Vec::with_capacity(point_count(n, q));
    let mut t = alloc::vec![0u8; len];
    loop {
        if t.iter().copied().find(|&c| c != 0) == Some(1) {
            out.push(ProjPoint {
                coords: t.clone(),
                field: f,
            });
        }
        // odometer, last coordinate fastest
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < q {
                break;
            }
            t[i] = 0;
        }
    }
}

/// Dense index of a normalized vector, for O(1) point lookup tables.
pub(crate) fn code(coords: &[u8], q: u8) -> usize {
    coords
        .iter()
        .fold(0usize, |acc, &c| acc * q as usize + c as usize)
}

/// A projective subspace stored by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjSubspace {
    basis: Vec<Vec<u8>>,
    len: usize,
    field: Field,
}

impl ProjSubspace {
    pub fn from_vectors(mut rows: Vec<Vec<u8>>, len: usize, field: Field) -> Result<Self> {
        for r in &mut rows {
            if r.len() != len {
                return Err(Error::DimensionMismatch {
                    expected: len,
                    found: r.len(),
                });
            }
            for c in r.iter_mut() {
                *c %= field.q();
            }
        }
        linalg::rref(&mut rows, field);
        Ok(ProjSubspace {
            basis: rows,
            len,
            field,
        })
    }

    /// The empty subspace of PG(len − 1, q).
    pub fn empty(len: usize, field: Field) -> Self {
        ProjSubspace {
            basis: Vec::new(),
            len,
            field,
        }
    }

    pub fn whole(len: usize, field: Field) -> Self {
        let rows = (0..len)
            .map(|i| (0..len).map(|j| u8::from(i == j)).collect())
            .collect();
        ProjSubspace {
            basis: rows,
            len,
            field,
        }
    }

    pub fn span(points: &[ProjPoint]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyInput)?;
        let (len, field) = (first.coords.len(), first.field);
        for p in points {
            if p.field != field {
                return Err(Error::ModulusMismatch {
                    left: field.q(),
                    right: p.field.q(),
                });
            }
        }
        Self::from_vectors(
            points.iter().map(|p| p.coords.clone()).collect(),
            len,
            field,
        )
    }

    pub fn line_through(p: &ProjPoint, r: &ProjPoint) -> Result<Self> {
        if p == r {
            return Err(Error::DegenerateLine);
        }
        let s = Self::span(&[p.clone(), r.clone()])?;
        debug_assert_eq!(s.rank(), 2);
        Ok(s)
    }

    /// Kernel of the linear functional with the given coefficients; the
    /// whole space when all coefficients vanish.
    pub fn hyperplane(coeffs: &[u8], field: Field) -> Self {
        let len = coeffs.len();
        let row: Vec<u8> = coeffs.iter().map(|c| c % field.q()).collect();
        let basis = linalg::nullspace(&[row], len, field);
        Self::from_vectors(basis, len, field).expect("lengths agree")
    }

    pub fn basis(&self) -> &[Vec<u8>] {
        &self.basis
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Vector-space rank; the projective dimension is `rank − 1`.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Projective dimension; −1 for the empty subspace.
    pub fn dim(&self) -> isize {
        self.basis.len() as isize - 1
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        if p.coords.len() != self.len || p.field != self.field {
            return false;
        }
        let mut rows = self.basis.clone();
        rows.push(p.coords.clone());
        linalg::rank(&rows, self.field) == self.basis.len()
    }

    pub fn point_count(&self) -> usize {
        if self.basis.is_empty() {
            0
        } else {
            point_count(self.basis.len() - 1, self.field.q())
        }
    }

    /// Points of the subspace in canonical order.
    pub fn points(&self) -> Vec<ProjPoint> {
        let k = self.basis.len();
        let f = self.field;
        let mut out = Vec::with_capacity(self.point_count());
        if k == 0 {
            return out;
        }
        // normalized coefficient vectors give each point exactly once
        for c in enumerate_points(k - 1, f) {
            let v = linalg::vec_mul(c.coords(), &self.basis, f);
            out.push(ProjPoint::new(v, f).expect("independent basis"));
        }
        out.sort();
        out
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::from_vectors(rows, self.len, self.field)
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        // U ∩ W = (U⊥ + W⊥)⊥ for the standard dot product
        let mut dual = linalg::nullspace(&self.basis, self.len, self.field);
        dual.extend(linalg::nullspace(&other.basis, self.len, self.field));
        let rows = linalg::nullspace(&dual, self.len, self.field);
        Self::from_vectors(rows, self.len, self.field)
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.len == other.len && other.join(self).is_ok_and(|j| j.rank() == other.rank())
    }
}
