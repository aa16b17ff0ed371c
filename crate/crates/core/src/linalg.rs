//! Gaussian elimination over a finite field, on raw coefficient reps.
//!
//! Matrices are `Vec<Vec<u64>>` in row-major order. Reduced row echelon
//! form is canonical (pivots 1, strictly increasing pivot columns, pivot
//! columns cleared elsewhere, zero rows dropped), so two row spaces are
//! equal iff their RREFs are equal.

use crate::field::FieldSpec;

/// Reduce `rows` to canonical RREF. Returns the nonzero rows and pivot columns.
pub(crate) fn rref(field: &FieldSpec, mut rows: Vec<Vec<u64>>, cols: usize) -> (Vec<Vec<u64>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = field.inv_rep(rows[r][c]);
        if inv != 1 {
            for x in rows[r].iter_mut() {
                *x = field.mul_rep(*x, inv);
            }
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..cols {
                    let sub = field.mul_rep(f, rows[r][j]);
                    rows[i][j] = field.sub_rep(rows[i][j], sub);
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
    (rows, pivots)
}

pub(crate) fn rank(field: &FieldSpec, rows: Vec<Vec<u64>>, cols: usize) -> usize {
    rref(field, rows, cols).0.len()
}

/// Basis (canonical RREF) of the right kernel {x : rows · x = 0}.
pub(crate) fn kernel_basis(field: &FieldSpec, rows: Vec<Vec<u64>>, cols: usize) -> Vec<Vec<u64>> {
    let (rr, pivots) = rref(field, rows, cols);
    let pivot_set: Vec<bool> = {
        let mut v = vec![false; cols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let mut basis = Vec::with_capacity(cols - pivots.len());
    for free in 0..cols {
        if pivot_set[free] {
            continue;
        }
        let mut vec = vec![0u64; cols];
        vec[free] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            vec[pc] = field.neg_rep(rr[i][free]);
        }
        basis.push(vec);
    }
    rref(field, basis, cols).0
}

/// Remainder of `vec` after elimination against RREF rows; zero iff `vec`
/// lies in their span.
pub(crate) fn reduce_against(
    field: &FieldSpec,
    rref_rows: &[Vec<u64>],
    pivots: &[usize],
    mut vec: Vec<u64>,
) -> Vec<u64> {
    for (row, &pc) in rref_rows.iter().zip(pivots) {
        if vec[pc] != 0 {
            let f = vec[pc];
            for j in 0..vec.len() {
                let sub = field.mul_rep(f, row[j]);
                vec[j] = field.sub_rep(vec[j], sub);
            }
        }
    }
    vec
}

/// Determinant of a square matrix by elimination.
pub(crate) fn det(field: &FieldSpec, mut rows: Vec<Vec<u64>>) -> u64 {
    let n = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == n));
    let mut acc = 1u64;
    for c in 0..n {
        let Some(piv) = (c..n).find(|&i| rows[i][c] != 0) else {
            return 0;
        };
        if piv != c {
            rows.swap(c, piv);
            acc = field.neg_rep(acc);
        }
        acc = field.mul_rep(acc, rows[c][c]);
        let inv = field.inv_rep(rows[c][c]);
        for i in c + 1..n {
            if rows[i][c] != 0 {
                let f = field.mul_rep(rows[i][c], inv);
                for j in c..n {
                    let sub = field.mul_rep(f, rows[c][j]);
                    rows[i][j] = field.sub_rep(rows[i][j], sub);
                }
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn f2() -> FieldSpec {
        FieldSpec::new(2, 1, None).unwrap()
    }

    fn f3() -> FieldSpec {
        FieldSpec::new(3, 1, None).unwrap()
    }

    #[test]
    fn rref_canonical() {
        let (rr, piv) = rref(&f2(), vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]], 3);
        assert_eq!(rr, vec![vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(piv, vec![0, 1]);
    }

    #[test]
    fn kernel_of_full_rank_is_empty() {
        let id = vec![vec![1, 0], vec![0, 1]];
        assert!(kernel_basis(&f3(), id, 2).is_empty());
    }

    #[test]
    fn kernel_matches_rank_nullity() {
        let rows = vec![vec![1, 2, 0, 1], vec![2, 1, 1, 0]];
        let f = f3();
        let k = kernel_basis(&f, rows.clone(), 4);
        assert_eq!(k.len() + rank(&f, rows.clone(), 4), 4);
        // every kernel vector is annihilated by every row
        for v in &k {
            for row in &rows {
                let dot = row
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| f.add_rep(acc, f.mul_rep(a, b)));
                assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn membership_by_reduction() {
        let f = f2();
        let (rr, piv) = rref(&f, vec![vec![1, 1, 0], vec![0, 0, 1]], 3);
        let inside = reduce_against(&f, &rr, &piv, vec![1, 1, 1]);
        assert!(inside.iter().all(|&x| x == 0));
        let outside = reduce_against(&f, &rr, &piv, vec![1, 0, 0]);
        assert!(outside.iter().any(|&x| x != 0));
    }

    #[test]
    fn det_small() {
        let f = f3();
        assert_eq!(det(&f, vec![vec![1, 2], vec![2, 1]]), 0); // 1-4 = -3 = 0
        assert_eq!(det(&f, vec![vec![1, 2], vec![2, 2]]), 1); // 2-4 = -2 = 1
        assert_eq!(det(&f, vec![vec![0, 1], vec![1, 0]]), 2); // -1 = 2
    }
}
