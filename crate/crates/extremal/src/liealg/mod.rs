//! Finite-dimensional Lie algebras given by exact structure constants.
//!
//! An algebra is a labelled basis together with a sparse table holding the
//! coefficient vector of every basis bracket. Elements are dense coefficient
//! vectors. Construction validates antisymmetry and the Jacobi identity on
//! all basis triples.

mod checks;
mod extremal;
mod structure;

pub use checks::*;
pub use extremal::*;
pub use structure::*;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vec, unit_vec, zero_vec, Matrix};
use crate::scalars::Scalar;

/// Sparse vector: `(index, coefficient)` pairs sorted by index, no zeros.
pub type SparseVec<S> = Vec<(usize, S)>;

/// Merge duplicate indices and drop zeros.
pub fn normalize_sparse<S: Scalar>(mut v: SparseVec<S>) -> SparseVec<S> {
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec<S> = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some((j, d)) if *j == i => *d = d.clone() + c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

pub fn sparse_from_dense<S: Scalar>(v: &[S]) -> SparseVec<S> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn dense_from_sparse<S: Scalar>(n: usize, v: &[(usize, S)]) -> Vec<S> {
    let mut out: Vec<S> = zero_vec(n);
    for (i, c) in v {
        out[*i] = out[*i].clone() + c.clone();
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra<S> {
    labels: Vec<String>,
    table: Vec<SparseVec<S>>,
}

impl<S: Scalar> LieAlgebra<S> {
    /// Build from triples `(i, j, k, c)` meaning `[b_i, b_j]` has coefficient `c` at `b_k`.
    ///
    /// Both orders of every pair must be supplied; nothing is inferred.
    pub fn from_constants(
        labels: Vec<String>,
        constants: &[(usize, usize, usize, S)],
    ) -> Result<Self> {
        let n = labels.len();
        let mut raw: Vec<SparseVec<S>> = vec![Vec::new(); n * n];
        for (i, j, k, c) in constants {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::Shape(format!(
                    "index out of range in ({i}, {j}, {k})"
                )));
            }
            raw[i * n + j].push((*k, c.clone()));
        }
        let table = raw.into_iter().map(normalize_sparse).collect();
        let l = LieAlgebra { labels, table };
        l.validate()?;
        Ok(l)
    }

    /// Build from the brackets `[b_i, b_j]` for `i < j`, extended by antisymmetry.
    pub fn from_upper<F>(labels: Vec<String>, mut upper: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> SparseVec<S>,
    {
        let l = Self::from_upper_unchecked(labels, &mut upper);
        l.validate()?;
        Ok(l)
    }

    pub(crate) fn from_upper_unchecked<F>(labels: Vec<String>, upper: &mut F) -> Self
    where
        F: FnMut(usize, usize) -> SparseVec<S>,
    {
        let n = labels.len();
        let mut table: Vec<SparseVec<S>> = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let v = normalize_sparse(upper(i, j));
                table[j * n + i] = v.iter().map(|(k, c)| (*k, -c.clone())).collect();
                table[i * n + j] = v;
            }
        }
        LieAlgebra { labels, table }
    }

    /// The Lie algebra spanned by the given square matrices under the commutator.
    pub fn from_matrices(labels: Vec<String>, basis: &[Matrix<S>]) -> Result<Self> {
        let n = basis.len();
        let flat: Vec<Vec<S>> = basis.iter().map(|m| m.data.clone()).collect();
        let size = flat.first().map_or(0, |v| v.len());
        let coords = Matrix::from_cols(&flat, size);
        if coords.rank() != n {
            return Err(Error::Shape("matrices are linearly dependent".into()));
        }
        let mut failure = None;
        let l = Self::from_upper_unchecked(labels, &mut |i, j| {
            let c = basis[i].mul(&basis[j]).sub(&basis[j].mul(&basis[i]));
            match coords.solve(&c.data) {
                Some(x) => sparse_from_dense(&x),
                None => {
                    failure = Some((i, j));
                    Vec::new()
                }
            }
        });
        if let Some((i, j)) = failure {
            return Err(Error::Shape(format!(
                "commutator of matrices {i} and {j} leaves the span"
            )));
        }
        l.validate()?;
        Ok(l)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `[b_i, b_j]` as a sparse vector.
    pub fn structure(&self, i: usize, j: usize) -> &[(usize, S)] {
        &self.table[i * self.dim() + j]
    }

    /// Check antisymmetry and the Jacobi identity on all basis pairs and triples.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        if self.table.len() != n * n {
            return Err(Error::Shape("table size does not match the basis".into()));
        }
        for i in 0..n {
            if !self.structure(i, i).is_empty() {
                return Err(Error::AntisymmetryViolation(i, i));
            }
            for j in i + 1..n {
                let neg: SparseVec<S> = self
                    .structure(j, i)
                    .iter()
                    .map(|(k, c)| (*k, -c.clone()))
                    .collect();
                if self.structure(i, j) != neg.as_slice() {
                    return Err(Error::AntisymmetryViolation(i, j));
                }
            }
        }
        let bad = (0..n).into_par_iter().find_map_first(|i| {
            for j in i + 1..n {
                for k in j + 1..n {
                    if !self.jacobi_vanishes(i, j, k) {
                        return Some((i, j, k));
                    }
                }
            }
            None
        });
        match bad {
            Some((i, j, k)) => Err(Error::JacobiViolation(i, j, k)),
            None => Ok(()),
        }
    }

    fn jacobi_vanishes(&self, i: usize, j: usize, k: usize) -> bool {
        let mut acc: SparseVec<S> = Vec::new();
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (m, x) in self.structure(b, c) {
                for (t, y) in self.structure(a, *m) {
                    acc.push((*t, x.clone() * y.clone()));
                }
            }
        }
        normalize_sparse(acc).is_empty()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<S> {
        unit_vec(self.dim(), i)
    }

    pub fn zero(&self) -> Vec<S> {
        zero_vec(self.dim())
    }

    pub fn bracket(&self, a: &[S], b: &[S]) -> Vec<S> {
        let n = self.dim();
        let mut out: Vec<S> = zero_vec(n);
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x.clone() * y.clone();
                for (k, c) in self.structure(i, j) {
                    out[*k] = out[*k].clone() + xy.clone() * c.clone();
                }
            }
        }
        out
    }

    /// Columns of `ad_x` as sparse vectors: column `j` is `[x, b_j]`.
    pub fn ad_columns(&self, x: &[S]) -> Vec<SparseVec<S>> {
        let n = self.dim();
        (0..n)
            .map(|j| {
                let mut acc: SparseVec<S> = Vec::new();
                for (i, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    for (k, d) in self.structure(i, j) {
                        acc.push((*k, c.clone() * d.clone()));
                    }
                }
                normalize_sparse(acc)
            })
            .collect()
    }

    /// The matrix of `ad_x` acting on column vectors.
    pub fn ad(&self, x: &[S]) -> Matrix<S> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (j, col) in self.ad_columns(x).into_iter().enumerate() {
            for (k, c) in col {
                m.set(k, j, c);
            }
        }
        m
    }

    /// Whether `[x, y] = 0`.
    pub fn commute(&self, x: &[S], y: &[S]) -> bool {
        is_zero_vec(&self.bracket(x, y))
    }

    /// Check that a linear map (matrix on column vectors) preserves brackets.
    pub fn is_homomorphism_to(&self, target: &LieAlgebra<S>, m: &Matrix<S>) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            let mi = m.col(i);
            (i + 1..n).all(|j| {
                let lhs = m.mul_vec(&dense_from_sparse(n, self.structure(i, j)));
                lhs == target.bracket(&mi, &m.col(j))
            })
        })
    }

    pub fn is_automorphism(&self, m: &Matrix<S>) -> bool {
        self.is_homomorphism_to(self, m) && m.inverse().is_some()
    }

    /// Render an element like `2*x1 - 1/2*[x1,x2]`.
    pub fn format_element(&self, v: &[S]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.labels[i].clone()
                } else {
                    format!("({c})*{}", self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    pub fn to_serialized(&self) -> SerializedAlgebra {
        let n = self.dim();
        let mut constants = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.structure(i, j) {
                    constants.push((i, j, *k, c.to_repr()));
                }
            }
        }
        SerializedAlgebra {
            field: S::field().to_string(),
            labels: self.labels.clone(),
            constants,
        }
    }

    /// Parse and revalidate a serialized algebra.
    pub fn from_serialized(s: &SerializedAlgebra) -> Result<Self> {
        if s.field != S::field().to_string() {
            return Err(Error::Parse(format!(
                "field {} does not match {}",
                s.field,
                S::field()
            )));
        }
        let constants = s
            .constants
            .iter()
            .map(|(i, j, k, v)| S::from_repr(v).map(|c| (*i, *j, *k, c)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_constants(s.labels.clone(), &constants)
    }

    /// Direct sum with basis `self` followed by `other`.
    pub fn direct_sum(&self, other: &LieAlgebra<S>) -> LieAlgebra<S> {
        let n = self.dim();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|l| format!("{l}'")));
        Self::from_upper_unchecked(labels, &mut |i, j| {
            if j < n {
                self.structure(i, j).to_vec()
            } else if i >= n {
                other
                    .structure(i - n, j - n)
                    .iter()
                    .map(|(k, c)| (k + n, c.clone()))
                    .collect()
            } else {
                Vec::new()
            }
        })
    }
}

/// JSON form shared with the cache: constants as `(i, j, k, value)` triples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerializedAlgebra {
    pub field: String,
    pub labels: Vec<String>,
    pub constants: Vec<(usize, usize, usize, String)>,
}

/// Apply a sparse-column matrix to a dense vector.
pub(crate) fn apply_columns<S: Scalar>(cols: &[SparseVec<S>], v: &[S]) -> Vec<S> {
    let mut out: Vec<S> = zero_vec(v.len().max(cols.len()));
    for (j, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (k, c) in &cols[j] {
            out[*k] = out[*k].clone() + x.clone() * c.clone();
        }
    }
    out
}

/// Linear combination helper: `sum c_i v_i`.
pub fn combination<S: Scalar>(n: usize, terms: &[(S, &[S])]) -> Vec<S> {
    let mut out = zero_vec(n);
    for (c, v) in terms {
        axpy(&mut out, c, v);
    }
    out
}

/// The standard `sl2` with basis `e, h, f`.
pub fn sl2<S: Scalar>() -> LieAlgebra<S> {
    let two = S::from_i64(2);
    LieAlgebra::from_upper(vec!["e".into(), "h".into(), "f".into()], |i, j| {
        match (i, j) {
            (0, 1) => vec![(0, -two.clone())],
            (0, 2) => vec![(1, S::one())],
            (1, 2) => vec![(2, -two.clone())],
            _ => Vec::new(),
        }
    })
    .expect("sl2 is a Lie algebra")
}

/// The three-dimensional Heisenberg algebra `[x, y] = z`.
pub fn heisenberg<S: Scalar>() -> LieAlgebra<S> {
    LieAlgebra::from_upper(vec!["x".into(), "y".into(), "z".into()], |i, j| {
        match (i, j) {
            (0, 1) => vec![(2, S::one())],
            _ => Vec::new(),
        }
    })
    .expect("Heisenberg algebra is a Lie algebra")
}

/// The abelian algebra of dimension `n`.
pub fn abelian<S: Scalar>(n: usize) -> LieAlgebra<S> {
    LieAlgebra::from_upper((0..n).map(|i| format!("a{i}")).collect(), |_, _| Vec::new())
        .expect("abelian")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Q;

    #[test]
    fn antisymmetry_violation_detected() {
        let labels = vec!["a".to_string(), "b".to_string()];
        let err =
            LieAlgebra::<Q>::from_constants(labels, &[(1, 1, 0, Q::from_i64(1))]).unwrap_err();
        assert_eq!(err, Error::AntisymmetryViolation(1, 1));
    }

    #[test]
    fn jacobi_violation_detected() {
        // [a,b] = c, [b,c] = a, [c,a] = a breaks Jacobi.
        let l = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        let res = LieAlgebra::<Q>::from_upper(l, |i, j| match (i, j) {
            (0, 1) => vec![(2, Q::from_i64(1))],
            (1, 2) => vec![(0, Q::from_i64(1))],
            (0, 2) => vec![(0, Q::from_i64(-1))],
            _ => vec![],
        });
        assert!(matches!(res, Err(Error::JacobiViolation(..))));
    }

    #[test]
    fn serialization_round_trip() {
        let l = sl2::<Q>();
        let s = l.to_serialized();
        let json = serde_json::to_string(&s).unwrap();
        let back: SerializedAlgebra = serde_json::from_str(&json).unwrap();
        assert_eq!(LieAlgebra::<Q>::from_serialized(&back).unwrap(), l);
    }

    #[test]
    fn sl2_from_matrices() {
        let m = |r: [[i64; 2]; 2]| {
            Matrix::from_rows(
                &r.iter()
                    .map(|row| row.iter().map(|&x| Q::from_i64(x)).collect())
                    .collect::<Vec<_>>(),
            )
        };
        let basis = [
            m([[0, 1], [0, 0]]),
            m([[1, 0], [0, -1]]),
            m([[0, 0], [1, 0]]),
        ];
        let l =
            LieAlgebra::from_matrices(vec!["e".into(), "h".into(), "f".into()], &basis).unwrap();
        assert_eq!(l, sl2::<Q>());
    }
}
