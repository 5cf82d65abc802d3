//! Dense Gaussian elimination over `F_q`, row-vector convention.

use crate::finite_field::{Field, FieldElement};

pub type Row = Vec<FieldElement>;

/// Reduced row echelon form. Returns the nonzero rows and their pivot
/// columns; pivots are chosen as the first nonzero column of each step.
pub fn rref(field: &Field, rows: &[Row], ncols: usize) -> (Vec<Row>, Vec<usize>) {
    let mut m: Vec<Row> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(sel) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, sel);
        let inv = field.inv(m[r][col]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col];
            for (x, &pv) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(*x, field.mul(factor, pv));
            }
        }
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(field: &Field, rows: &[Row], ncols: usize) -> usize {
    rref(field, rows, ncols).0.len()
}

/// Basis of `{x : rows · x^T = 0}`, one basis vector per free column.
pub fn nullspace(field: &Field, rows: &[Row], ncols: usize) -> Vec<Row> {
    let (red, pivots) = rref(field, rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![FieldElement::ZERO; ncols];
            v[free] = field.one();
            for (row, &p) in red.iter().zip(&pivots) {
                v[p] = field.neg(row[free]);
            }
            v
        })
        .collect()
}

pub fn dot(field: &Field, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    a.iter().zip(b).fold(field.zero(), |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

/// `Σ coeffs[i] · rows[i]`.
pub fn combine(field: &Field, coeffs: &[FieldElement], rows: &[Row], ncols: usize) -> Row {
    let mut out = vec![field.zero(); ncols];
    for (&c, row) in coeffs.iter().zip(rows) {
        if c.is_zero() {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(row) {
            *o = field.add(*o, field.mul(c, x));
        }
    }
    out
}

pub fn transpose(rows: &[Row], ncols: usize) -> Vec<Row> {
    (0..ncols).map(|c| rows.iter().map(|r| r[c]).collect()).collect()
}

/// Row space equality.
pub fn same_row_space(field: &Field, a: &[Row], b: &[Row], ncols: usize) -> bool {
    rref(field, a, ncols).0 == rref(field, b, ncols).0
}
