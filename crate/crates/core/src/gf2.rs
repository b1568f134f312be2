//! Bit-packed vectors over GF(2).
//!
//! A vector of length `len ≤ 64` is a `u64` with coordinate `i` (0-based,
//! `X₁` first) stored at bit `len − 1 − i`. With this layout numeric order of
//! the words equals lexicographic order of the coordinate tuples, which is
//! the canonical point order used everywhere else. Over GF(2) every nonzero
//! vector is already a normalized projective point.

use alloc::string::String;
use alloc::vec::Vec;

pub const MAX_LEN: usize = 64;

#[inline]
pub fn bit(len: usize, i: usize) -> u64 {
    1u64 << (len - 1 - i)
}

#[inline]
pub fn coord(v: u64, len: usize, i: usize) -> u8 {
    ((v >> (len - 1 - i)) & 1) as u8
}

pub fn from_coords(coords: &[u8]) -> u64 {
    coords
        .iter()
        .fold(0u64, |acc, &c| (acc << 1) | u64::from(c & 1))
}

pub fn to_coords(v: u64, len: usize) -> Vec<u8> {
    (0..len).map(|i| coord(v, len, i)).collect()
}

pub fn to_string(v: u64, len: usize) -> String {
    (0..len)
        .map(|i| if coord(v, len, i) == 1 { '1' } else { '0' })
        .collect()
}

/// Parses a string of `0`/`1` characters.
pub fn parse(s: &str) -> Option<(u64, usize)> {
    if s.is_empty() || s.len() > MAX_LEN {
        return None;
    }
    let mut v = 0u64;
    for ch in s.bytes() {
        v = (v << 1)
            | match ch {
                b'0' => 0,
                b'1' => 1,
                _ => return None,
            };
    }
    Some((v, s.len()))
}

/// All points of PG(len − 1, 2) in canonical order.
pub fn points(len: usize) -> impl Iterator<Item = u64> {
    debug_assert!((1..MAX_LEN).contains(&len));
    1..(1u64 << len)
}

/// An echelonized XOR basis: each stored vector has a distinct leading bit.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XorBasis {
    rows: Vec<u64>,
}

impl XorBasis {
    pub fn new() -> Self {
        XorBasis { rows: Vec::new() }
    }

    pub fn from_vectors<I: IntoIterator<Item = u64>>(vs: I) -> Self {
        let mut b = XorBasis::new();
        for v in vs {
            b.insert(v);
        }
        b
    }

    fn reduce(&self, mut v: u64) -> u64 {
        for &r in &self.rows {
            v = v.min(v ^ r);
        }
        v
    }

    /// Adds `v`; returns `false` if it was already in the span.
    pub fn insert(&mut self, v: u64) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        let pos = self.rows.partition_point(|&x| x > r);
        self.rows.insert(pos, r);
        true
    }

    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Nonzero vectors of the span, ascending.
    pub fn span_points(&self) -> Vec<u64> {
        let k = self.rows.len();
        let mut out: Vec<u64> = (1u64..(1u64 << k))
            .map(|mask| {
                (0..k)
                    .filter(|i| mask >> i & 1 == 1)
                    .fold(0u64, |acc, i| acc ^ self.rows[i])
            })
            .collect();
        out.sort_unstable();
        out
    }
}

pub fn rank(vs: &[u64]) -> usize {
    XorBasis::from_vectors(vs.iter().copied()).rank()
}
