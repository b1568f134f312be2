// Dense linear algebra over a prime field on row-major `u8` matrices.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::Field;

/// Reduced row echelon form in place; zero rows are dropped. Returns the
/// pivot columns.
pub(crate) fn rref(rows: &mut Vec<Vec<u8>>, f: Field) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let factor = rows[i][c];
                for j in 0..ncols {
                    let t = f.mul(factor, rows[r][j]);
                    rows[i][j] = f.sub(rows[i][j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn rank(rows: &[Vec<u8>], f: Field) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, f).len()
}

/// Basis of `{x : M xᵀ = 0}`.
pub(crate) fn nullspace(rows: &[Vec<u8>], ncols: usize, f: Field) -> Vec<Vec<u8>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, f);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u8; ncols];
            v[fc] = 1;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = f.neg(row[fc]);
            }
            v
        })
        .collect()
}

/// Row vector times matrix.
pub(crate) fn vec_mul(x: &[u8], m: &[Vec<u8>], f: Field) -> Vec<u8> {
    let ncols = m.first().map_or(0, Vec::len);
    (0..ncols)
        .map(|j| {
            x.iter()
                .zip(m)
                .fold(0u8, |acc, (&xi, row)| f.add(acc, f.mul(xi, row[j])))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_nullspace_gf3() {
        let f = Field::GF3;
        let m = vec![vec![1, 2, 0], vec![2, 1, 0]];
        assert_eq!(rank(&m, f), 1);
        let ns = nullspace(&m, 3, f);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &m {
                let dot = row
                    .iter()
                    .zip(v)
                    .fold(0, |a, (&x, &y)| f.add(a, f.mul(x, y)));
                assert_eq!(dot, 0);
            }
        }
    }
}
