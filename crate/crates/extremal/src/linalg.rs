//! Dense exact linear algebra: matrices, reduced echelon forms and subspaces.

use crate::scalars::Scalar;

pub fn zero_vec<S: Scalar>(n: usize) -> Vec<S> {
    vec![S::zero(); n]
}

pub fn unit_vec<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    let mut v = zero_vec(n);
    v[i] = S::one();
    v
}

pub fn is_zero_vec<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(|c| c.is_zero())
}

/// `dst += c * src`
pub fn axpy<S: Scalar>(dst: &mut [S], c: &S, src: &[S]) {
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = d.clone() + c.clone() * s.clone();
        }
    }
}

pub fn scaled<S: Scalar>(v: &[S], c: &S) -> Vec<S> {
    v.iter().map(|x| x.clone() * c.clone()).collect()
}

pub fn add_vec<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() + y.clone())
        .collect()
}

pub fn sub_vec<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() - y.clone())
        .collect()
}

pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Index of the first nonzero entry.
pub fn leading<S: Scalar>(v: &[S]) -> Option<usize> {
    v.iter().position(|c| !c.is_zero())
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<S> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = S::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<S>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<S>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let row = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                axpy(dst, a, row);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: add_vec(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: sub_vec(&self.data, &other.data),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: scaled(&self.data, c),
        }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> S {
        (0..self.rows.min(self.cols)).fold(S::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn rank(&self) -> usize {
        Echelon::from_vectors(self.cols, self.row_vecs().iter()).dim()
    }

    /// Basis of `{v : self * v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<S>> {
        let ech = Echelon::from_vectors(self.cols, self.row_vecs().iter());
        let pivots = ech.pivots();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = unit_vec(self.cols, free);
            for (row, &p) in ech.rows().iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Some solution of `self * x = b`.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        let aug: Vec<Vec<S>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let ech = Echelon::from_vectors(self.cols + 1, aug.iter());
        let mut x = zero_vec(self.cols);
        for (row, p) in ech.rows().iter().zip(ech.pivots()) {
            if p == self.cols {
                return None;
            }
            x[p] = row[self.cols].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let aug: Vec<Vec<S>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend(unit_vec::<S>(n, i));
                r
            })
            .collect();
        let ech = Echelon::from_vectors(2 * n, aug.iter());
        if ech
            .pivots()
            .iter()
            .take(n)
            .enumerate()
            .any(|(i, &p)| p != i)
            || ech.dim() < n
        {
            return None;
        }
        let rows: Vec<Vec<S>> = ech.rows().iter().map(|r| r[n..].to_vec()).collect();
        Some(Matrix::from_rows(&rows))
    }

    /// Dimension of the generalized eigenspace of `lambda`.
    pub fn algebraic_multiplicity(&self, lambda: &S) -> usize {
        let shifted = self.sub(&Self::identity(self.rows).scale(lambda));
        let n = self.rows;
        self.rows - shifted.pow(n as u32).rank()
    }
}

/// Incrementally maintained reduced row echelon basis.
///
/// Rows are kept sorted by pivot column, each pivot entry is one and
/// pivot columns vanish in every other row, so the basis is canonical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon<S> {
    n: usize,
    rows: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Echelon<S> {
    pub fn new(n: usize) -> Self {
        Echelon {
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors<'a, I>(n: usize, vs: I) -> Self
    where
        I: IntoIterator<Item = &'a Vec<S>>,
    {
        let mut e = Self::new(n);
        for v in vs {
            e.insert(v.clone());
        }
        e
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.pivots.clone()
    }

    /// Residual of `v` after reduction against the basis.
    pub fn reduce(&self, mut v: Vec<S>) -> Vec<S> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = -v[p].clone();
                axpy(&mut v, &c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[S]) -> bool {
        is_zero_vec(&self.reduce(v.to_vec()))
    }

    /// Coefficients of `v` with respect to the basis rows, if `v` lies in the span.
    pub fn coordinates(&self, v: &[S]) -> Option<Vec<S>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Add `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<S>) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = leading(&r) else { return false };
        let inv = r[p].inv().expect("nonzero pivot");
        r = scaled(&r, &inv);
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -row[p].clone();
                axpy(row, &c, &r);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(pos, r);
        self.pivots.insert(pos, p);
        true
    }
}

/// A subspace of `S^n` held in canonical reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<S> {
    ech: Echelon<S>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(n: usize) -> Self {
        Subspace {
            ech: Echelon::new(n),
        }
    }

    pub fn full(n: usize) -> Self {
        Self::span(n, &(0..n).map(|i| unit_vec(n, i)).collect::<Vec<_>>())
    }

    pub fn span(n: usize, vs: &[Vec<S>]) -> Self {
        Subspace {
            ech: Echelon::from_vectors(n, vs.iter()),
        }
    }

    pub fn from_echelon(ech: Echelon<S>) -> Self {
        Subspace { ech }
    }

    pub fn ambient(&self) -> usize {
        self.ech.ambient()
    }

    pub fn dim(&self) -> usize {
        self.ech.dim()
    }

    pub fn basis(&self) -> &[Vec<S>] {
        self.ech.rows()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.ech.pivots()
    }

    pub fn echelon(&self) -> &Echelon<S> {
        &self.ech
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.ech.contains(v)
    }

    pub fn coordinates(&self, v: &[S]) -> Option<Vec<S>> {
        self.ech.coordinates(v)
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.basis().iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut ech = self.ech.clone();
        for v in other.basis() {
            ech.insert(v.clone());
        }
        Subspace { ech }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let n = self.ambient();
        let k = self.dim();
        let mut cols: Vec<Vec<S>> = self.basis().to_vec();
        cols.extend(other.basis().iter().map(|v| scaled(v, &-S::one())));
        if cols.is_empty() {
            return Self::zero(n);
        }
        let m = Matrix::from_cols(&cols, n);
        let vs: Vec<Vec<S>> = m
            .kernel()
            .into_iter()
            .map(|c| {
                let mut v = zero_vec(n);
                for (a, b) in c.iter().take(k).zip(self.basis()) {
                    axpy(&mut v, a, b);
                }
                v
            })
            .collect();
        Self::span(n, &vs)
    }

    /// Standard basis vectors completing this subspace to the whole space.
    pub fn complement_basis(&self) -> Vec<Vec<S>> {
        let pivots = self.pivots();
        (0..self.ambient())
            .filter(|c| !pivots.contains(c))
            .map(|c| unit_vec(self.ambient(), c))
            .collect()
    }

    /// Image under a linear map given as a matrix.
    pub fn image(&self, m: &Matrix<S>) -> Self {
        Self::span(
            m.rows,
            &self
                .basis()
                .iter()
                .map(|v| m.mul_vec(v))
                .collect::<Vec<_>>(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Gf5, Q};

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    #[test]
    fn kernel_and_rank() {
        let m = Matrix::from_rows(&[vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero_vec(&m.mul_vec(v)));
        }
    }

    #[test]
    fn inverse_and_solve() {
        let m = Matrix::from_rows(&[vec![q(2), q(1)], vec![q(1), q(1)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert_eq!(m.solve(&[q(3), q(2)]).unwrap(), vec![q(1), q(1)]);
        let sing = Matrix::from_rows(&[vec![q(1), q(1)], vec![q(1), q(1)]]);
        assert!(sing.inverse().is_none());
        assert!(sing.solve(&[q(1), q(2)]).is_none());
    }

    #[test]
    fn subspace_lattice() {
        let e = |i| unit_vec::<Gf5>(3, i);
        let a = Subspace::span(3, &[e(0), e(1)]);
        let b = Subspace::span(3, &[e(1), e(2)]);
        assert_eq!(a.intersection(&b), Subspace::span(3, &[e(1)]));
        assert_eq!(a.sum(&b).dim(), 3);
        assert_eq!(a.complement_basis(), vec![e(2)]);
    }

    #[test]
    fn multiplicities() {
        let m = Matrix::from_rows(&[
            vec![q(2), q(1), q(0)],
            vec![q(0), q(2), q(0)],
            vec![q(0), q(0), q(0)],
        ]);
        assert_eq!(m.algebraic_multiplicity(&q(2)), 2);
        assert_eq!(m.algebraic_multiplicity(&q(0)), 1);
        assert_eq!(m.algebraic_multiplicity(&q(1)), 0);
    }
}
