//! Dense exact linear algebra over any [`Field`].
//!
//! Every "basis of a subspace" handed out by this crate is in reduced
//! row-echelon form: leftmost pivots, each pivot scaled to one, zeros above
//! and below. That form is unique for a given subspace, so two bases of the
//! same space compare equal.

use std::fmt;

use crate::field::Field;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn zeros<K: Field<Elem = E>>(k: &K, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, k.zero())
    }

    pub fn identity<K: Field<Elem = E>>(k: &K, n: usize) -> Self {
        let mut m = Self::zeros(k, n, n);
        for i in 0..n {
            m[(i, i)] = k.one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Matrix { rows: r, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [E] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn map<F, T: Clone>(&self, f: F) -> Matrix<T>
    where
        F: FnMut(&E) -> T,
    {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }
}

impl<E> std::ops::Index<(usize, usize)> for Matrix<E> {
    type Output = E;
    fn index(&self, (i, j): (usize, usize)) -> &E {
        &self.data[i * self.cols + j]
    }
}

impl<E> std::ops::IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        &mut self.data[i * self.cols + j]
    }
}

impl<E: fmt::Debug> fmt::Debug for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

pub fn mat_mul<K: Field>(k: &K, a: &Matrix<K::Elem>, b: &Matrix<K::Elem>) -> Matrix<K::Elem> {
    assert_eq!(a.cols, b.rows, "dimension mismatch in product");
    let mut out = Matrix::zeros(k, a.rows, b.cols);
    for i in 0..a.rows {
        for l in 0..a.cols {
            let x = &a[(i, l)];
            if k.is_zero(x) {
                continue;
            }
            for j in 0..b.cols {
                out[(i, j)] = k.mul_add(&out[(i, j)], x, &b[(l, j)]);
            }
        }
    }
    out
}

pub fn mat_vec<K: Field>(k: &K, a: &Matrix<K::Elem>, v: &[K::Elem]) -> Vec<K::Elem> {
    assert_eq!(a.cols, v.len());
    (0..a.rows)
        .map(|i| {
            a.row(i)
                .iter()
                .zip(v)
                .fold(k.zero(), |acc, (x, y)| k.mul_add(&acc, x, y))
        })
        .collect()
}

/// In-place reduction to reduced row-echelon form. Returns the pivot columns.
pub fn rref<K: Field>(k: &K, m: &mut Matrix<K::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !k.is_zero(&m[(i, c)])) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = k.inv(&m[(r, c)]).expect("pivot is nonzero");
        for j in c..m.cols {
            m[(r, j)] = k.mul(&m[(r, j)], &inv);
        }
        for i in 0..m.rows {
            if i == r || k.is_zero(&m[(i, c)]) {
                continue;
            }
            let factor = m[(i, c)].clone();
            for j in c..m.cols {
                let t = k.mul(&factor, &m[(r, j)]);
                m[(i, j)] = k.sub(&m[(i, j)], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank by forward elimination only (no back substitution).
pub fn rank<K: Field>(k: &K, m: &Matrix<K::Elem>) -> usize {
    let mut m = m.clone();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !k.is_zero(&m[(i, c)])) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = k.inv(&m[(r, c)]).expect("pivot is nonzero");
        for i in r + 1..m.rows {
            if k.is_zero(&m[(i, c)]) {
                continue;
            }
            let factor = k.mul(&m[(i, c)], &inv);
            for j in c..m.cols {
                let t = k.mul(&factor, &m[(r, j)]);
                m[(i, j)] = k.sub(&m[(i, j)], &t);
            }
        }
        r += 1;
    }
    r
}

/// Canonical basis of the row space of `rows` (vectors of length `cols`).
pub fn row_space<K: Field>(k: &K, cols: usize, rows: Vec<Vec<K::Elem>>) -> Vec<Vec<K::Elem>> {
    let mut m = Matrix::from_rows(cols, rows);
    let r = rref(k, &mut m).len();
    (0..r).map(|i| m.row(i).to_vec()).collect()
}

/// Basis of the right kernel `{x : m x = 0}`, returned in canonical form.
pub fn kernel<K: Field>(k: &K, m: &Matrix<K::Elem>) -> Vec<Vec<K::Elem>> {
    let mut r = m.clone();
    let pivots = rref(k, &mut r);
    let n = m.cols;
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![k.zero(); n];
        v[free] = k.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = k.neg(&r[(row, free)]);
        }
        basis.push(v);
    }
    row_space(k, n, basis)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution<E> {
    Unique(Vec<E>),
    /// A particular solution together with a basis of the kernel.
    Many(Vec<E>, Vec<Vec<E>>),
    None,
}

/// Solves `m x = b`.
pub fn solve<K: Field>(k: &K, m: &Matrix<K::Elem>, b: &[K::Elem]) -> Solution<K::Elem> {
    assert_eq!(m.rows, b.len());
    let n = m.cols;
    let mut aug = Matrix::from_fn(
        m.rows,
        n + 1,
        |i, j| {
            if j < n {
                m[(i, j)].clone()
            } else {
                b[i].clone()
            }
        },
    );
    let pivots = rref(k, &mut aug);
    if pivots.last() == Some(&n) {
        return Solution::None;
    }
    let mut x = vec![k.zero(); n];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[(row, n)].clone();
    }
    if pivots.len() == n {
        Solution::Unique(x)
    } else {
        Solution::Many(x, kernel(k, m))
    }
}

pub fn inverse<K: Field>(k: &K, m: &Matrix<K::Elem>) -> Option<Matrix<K::Elem>> {
    if m.rows != m.cols {
        return None;
    }
    let n = m.rows;
    let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else if j - n == i {
            k.one()
        } else {
            k.zero()
        }
    });
    let pivots = rref(k, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Matrix::from_fn(n, n, |i, j| aug[(i, j + n)].clone()))
}

pub fn determinant<K: Field>(k: &K, m: &Matrix<K::Elem>) -> K::Elem {
    assert_eq!(m.rows, m.cols);
    let mut m = m.clone();
    let n = m.rows;
    let mut det = k.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !k.is_zero(&m[(i, c)])) else {
            return k.zero();
        };
        if p != c {
            m.swap_rows(p, c);
            det = k.neg(&det);
        }
        det = k.mul(&det, &m[(c, c)]);
        let inv = k.inv(&m[(c, c)]).unwrap();
        for i in c + 1..n {
            if k.is_zero(&m[(i, c)]) {
                continue;
            }
            let factor = k.mul(&m[(i, c)], &inv);
            for j in c..n {
                let t = k.mul(&factor, &m[(c, j)]);
                m[(i, j)] = k.sub(&m[(i, j)], &t);
            }
        }
    }
    det
}
