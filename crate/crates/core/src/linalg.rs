//! Dense exact linear algebra.

use crate::field::Field;

/// Reduced row-echelon form of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EchelonMatrix<F: Field> {
    rows: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
    ncols: usize,
}

impl<F: Field> EchelonMatrix<F> {
    /// Nonzero rows, one per pivot, in pivot order.
    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }
}

/// Gauss-Jordan elimination to reduced row-echelon form.
pub fn row_reduce<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> EchelonMatrix<F> {
    let mut m: Vec<Vec<F::Elem>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        if next == m.len() {
            break;
        }
        let Some(p) = (next..m.len()).find(|&r| !field.is_zero(&m[r][col])) else {
            continue;
        };
        m.swap(next, p);
        let inv = field.inv(&m[next][col]).expect("pivot is nonzero");
        for v in m[next].iter_mut() {
            *v = field.mul(v, &inv);
        }
        let pivot_row = m[next].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == next || field.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                *v = field.sub_mul(v, &factor, pv);
            }
        }
        pivots.push(col);
        next += 1;
    }
    m.truncate(next);
    EchelonMatrix { rows: m, pivots, ncols }
}

pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> usize {
    row_reduce(field, rows, ncols).rank()
}

/// Row echelon form built one row at a time. The pivot of a row is its first
/// nonzero column; stored rows are kept reduced against each other's pivots
/// only in the forward direction, which is all membership tests need.
#[derive(Clone, Debug)]
pub struct IncrementalEchelon<F: Field> {
    field: F,
    ncols: usize,
    /// `by_pivot[c]` is the index into `rows` of the row with pivot `c`.
    by_pivot: Vec<Option<usize>>,
    rows: Vec<Vec<F::Elem>>,
}

impl<F: Field> IncrementalEchelon<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        IncrementalEchelon { field, ncols, by_pivot: vec![None; ncols], rows: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn has_pivot(&self, col: usize) -> bool {
        self.by_pivot[col].is_some()
    }

    pub fn pivot_row(&self, col: usize) -> Option<&[F::Elem]> {
        self.by_pivot[col].map(|i| self.rows[i].as_slice())
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.ncols).filter(|&c| self.by_pivot[c].is_some())
    }

    /// Reduces `row` in place; returns the first nonzero column left, if any.
    pub fn reduce(&self, row: &mut [F::Elem]) -> Option<usize> {
        let field = &self.field;
        for col in 0..self.ncols {
            if field.is_zero(&row[col]) {
                continue;
            }
            match self.by_pivot[col] {
                None => return Some(col),
                Some(i) => {
                    let factor = row[col].clone();
                    let prow = &self.rows[i];
                    for c in col..self.ncols {
                        if !field.is_zero(&prow[c]) {
                            row[c] = field.sub_mul(&row[c], &factor, &prow[c]);
                        }
                    }
                }
            }
        }
        None
    }

    /// Adds a row to the span. Returns the new pivot column when the row was
    /// independent.
    pub fn insert(&mut self, mut row: Vec<F::Elem>) -> Option<usize> {
        debug_assert_eq!(row.len(), self.ncols);
        let col = self.reduce(&mut row)?;
        let inv = self.field.inv(&row[col]).expect("pivot is nonzero");
        for v in row[col..].iter_mut() {
            *v = self.field.mul(v, &inv);
        }
        self.by_pivot[col] = Some(self.rows.len());
        self.rows.push(row);
        Some(col)
    }

    pub fn contains(&self, row: &[F::Elem]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r).is_none()
    }

    /// Rows in increasing pivot order.
    pub fn into_rows(self) -> Vec<(usize, Vec<F::Elem>)> {
        let mut out: Vec<(usize, Vec<F::Elem>)> = Vec::with_capacity(self.rows.len());
        let mut rows: Vec<Option<Vec<F::Elem>>> = self.rows.into_iter().map(Some).collect();
        for (col, idx) in self.by_pivot.iter().enumerate() {
            if let Some(i) = idx {
                out.push((col, rows[*i].take().expect("each row has one pivot")));
            }
        }
        out
    }
}

/// Basis of the intersection of two row spaces (Zassenhaus).
pub fn intersect_row_spaces<F: Field>(
    field: &F,
    a: &[Vec<F::Elem>],
    b: &[Vec<F::Elem>],
    ncols: usize,
) -> Vec<Vec<F::Elem>> {
    let mut stacked = Vec::with_capacity(a.len() + b.len());
    for r in a {
        let mut row = r.clone();
        row.extend(r.iter().cloned());
        stacked.push(row);
    }
    for r in b {
        let mut row = r.clone();
        row.extend(std::iter::repeat_n(field.zero(), ncols));
        stacked.push(row);
    }
    let ech = row_reduce(field, &stacked, 2 * ncols);
    ech.rows()
        .iter()
        .zip(ech.pivots())
        .filter(|(_, &p)| p >= ncols)
        .map(|(r, _)| r[ncols..].to_vec())
        .collect()
}

/// Basis of the kernel `{x : x * M = 0}` where `M` has the given rows.
pub fn left_kernel<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    let n = rows.len();
    let augmented: Vec<Vec<F::Elem>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            row
        })
        .collect();
    let ech = row_reduce(field, &augmented, ncols + n);
    ech.rows()
        .iter()
        .zip(ech.pivots())
        .filter(|(_, &p)| p >= ncols)
        .map(|(r, _)| r[ncols..].to_vec())
        .collect()
}
