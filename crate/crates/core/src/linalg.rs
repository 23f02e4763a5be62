//! Dense exact linear algebra over the coefficient field.

use crate::field::{Field, Scalar};

/// Row-reduces `rows` in place to reduced row echelon form and returns the
/// pivot columns.
pub fn rref(field: Field, rows: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(x, &field.mul(&factor, y));
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

pub fn rank(field: Field, rows: &[Vec<Scalar>]) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m).len()
}

/// Basis of `{ v : sum_j v_j * columns[j] = 0 }` where each column is a
/// vector of length `height`.
pub fn column_kernel(field: Field, columns: &[Vec<Scalar>], height: usize) -> Vec<Vec<Scalar>> {
    let n = columns.len();
    let mut rows: Vec<Vec<Scalar>> = (0..height)
        .map(|i| columns.iter().map(|c| c[i].clone()).collect())
        .collect();
    let pivots = rref(field, &mut rows);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); n];
            v[f] = field.one();
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = field.neg(&row[f]);
            }
            v
        })
        .collect()
}

pub fn determinant(field: Field, matrix: &[Vec<Scalar>]) -> Scalar {
    let n = matrix.len();
    let mut m = matrix.to_vec();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !field.is_zero(&m[i][c])) else {
            return field.zero();
        };
        if p != c {
            m.swap(p, c);
            det = field.neg(&det);
        }
        det = field.mul(&det, &m[c][c]);
        let inv = field.inv(&m[c][c]).expect("pivot is nonzero");
        for i in c + 1..n {
            if field.is_zero(&m[i][c]) {
                continue;
            }
            let factor = field.mul(&m[i][c], &inv);
            let (top, rest) = m.split_at_mut(i);
            for (x, p) in rest[0][c..].iter_mut().zip(&top[c][c..]) {
                *x = field.sub(x, &field.mul(&factor, p));
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        let f = Field::Rational;
        rows.iter()
            .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
            .collect()
    }

    #[test]
    fn rank_and_det() {
        let f = Field::Rational;
        let m = q(&[&[1, 2], &[2, 4]]);
        assert_eq!(rank(f, &m), 1);
        assert_eq!(determinant(f, &m), f.zero());
        assert_eq!(determinant(f, &q(&[&[0, 1], &[1, 0]])), f.from_i64(-1));
        assert_eq!(
            determinant(f, &q(&[&[2, 1, 0], &[0, 3, 0], &[1, 0, 1]])),
            f.from_i64(6)
        );
    }

    #[test]
    fn kernel_of_columns() {
        let f = Field::Rational;
        // columns (1,0), (0,1), (1,1): kernel spanned by (-1,-1,1)
        let cols = q(&[&[1, 0], &[0, 1], &[1, 1]]);
        let k = column_kernel(f, &cols, 2);
        assert_eq!(k, q(&[&[-1, -1, 1]]));
    }
}
