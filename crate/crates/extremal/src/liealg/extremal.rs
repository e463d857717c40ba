//! Extremal elements, the extremal form and the Killing form.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{dot, is_zero_vec, leading, scaled, Echelon, Matrix, Subspace};
use crate::report::Report;
use crate::scalars::Scalar;

use super::{apply_columns, LieAlgebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormKind {
    Extremal,
    Killing,
}

/// A symmetric bilinear form given by its Gram matrix on the algebra basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm<S> {
    pub gram: Matrix<S>,
    pub kind: FormKind,
}

impl<S: Scalar> BilinearForm<S> {
    pub fn eval(&self, a: &[S], b: &[S]) -> S {
        dot(a, &self.gram.mul_vec(b))
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    pub fn is_zero(&self) -> bool {
        self.gram.is_zero()
    }

    /// Vectors orthogonal to everything.
    pub fn radical(&self) -> Subspace<S> {
        Subspace::span(self.gram.rows, &self.gram.kernel())
    }

    /// `f([b_i, b_j], b_k) = f(b_i, [b_j, b_k])` for all basis triples.
    pub fn is_associative(&self, l: &LieAlgebra<S>) -> bool {
        let n = l.dim();
        let side = |i: usize, j: usize, k: usize, left: bool| -> S {
            // left: f([b_i,b_j], b_k); right: f(b_i, [b_j,b_k])
            let (sp, fixed) = if left {
                (l.structure(i, j), k)
            } else {
                (l.structure(j, k), i)
            };
            sp.iter().fold(S::zero(), |acc, (m, c)| {
                acc + c.clone() * self.gram.get(*m, fixed).clone()
            })
        };
        (0..n)
            .into_par_iter()
            .all(|i| (0..n).all(|j| (0..n).all(|k| side(i, j, k, true) == side(i, j, k, false))))
    }

    /// `f(phi a, phi b) = f(a, b)` for a linear map `phi`.
    pub fn is_preserved_by(&self, m: &Matrix<S>) -> bool {
        m.transpose().mul(&self.gram).mul(m) == self.gram
    }
}

/// The functional `f_x` with `[x,[x,y]] = f_x(y) x`, if `x` is extremal.
///
/// Returns `Ok(None)` when the image of `(ad_x)^2` is not inside the line `kx`.
pub fn extremal_functional<S: Scalar>(l: &LieAlgebra<S>, x: &[S]) -> Result<Option<Vec<S>>> {
    let Some(p) = leading(x) else {
        return Err(Error::ZeroElement);
    };
    let ad = l.ad_columns(x);
    let xp_inv = x[p].inv().expect("leading entry is nonzero");
    let mut f = Vec::with_capacity(l.dim());
    for col in &ad {
        let w = apply_columns(&ad, &super::dense_from_sparse(l.dim(), col));
        let c = w[p].clone() * xp_inv.clone();
        if w != scaled(x, &c) {
            return Ok(None);
        }
        f.push(c);
    }
    Ok(Some(f))
}

pub fn is_extremal<S: Scalar>(l: &LieAlgebra<S>, x: &[S]) -> bool {
    matches!(extremal_functional(l, x), Ok(Some(_)))
}

/// Whether `(ad_x)^2 = 0`.
pub fn is_sandwich<S: Scalar>(l: &LieAlgebra<S>, x: &[S]) -> bool {
    matches!(extremal_functional(l, x), Ok(Some(f)) if is_zero_vec(&f))
}

/// The extremal form from a spanning set of extremal elements.
///
/// The Gram matrix is read off on a basis chosen from `spanning`; symmetry,
/// agreement with `f_x` on every spanner and associativity are then checked.
pub fn extremal_form<S: Scalar>(l: &LieAlgebra<S>, spanning: &[Vec<S>]) -> Result<BilinearForm<S>> {
    let n = l.dim();
    let mut funcs = Vec::with_capacity(spanning.len());
    for (i, x) in spanning.iter().enumerate() {
        match extremal_functional(l, x) {
            Ok(Some(f)) => funcs.push(f),
            Ok(None) | Err(Error::ZeroElement) => return Err(Error::NotExtremal(i)),
            Err(e) => return Err(e),
        }
    }
    let mut ech = Echelon::new(n);
    let mut chosen = Vec::new();
    for (i, x) in spanning.iter().enumerate() {
        if ech.insert(x.clone()) {
            chosen.push(i);
        }
    }
    if ech.dim() < n {
        return Err(Error::NotSpanning);
    }
    // Columns of p are the chosen spanners; gram_b[k][l] = f_{b_k}(b_l).
    let p = Matrix::from_cols(
        &chosen
            .iter()
            .map(|&i| spanning[i].clone())
            .collect::<Vec<_>>(),
        n,
    );
    let rows: Vec<Vec<S>> = chosen
        .iter()
        .map(|&k| {
            chosen
                .iter()
                .map(|&m| dot(&funcs[k], &spanning[m]))
                .collect()
        })
        .collect();
    let gram_b = Matrix::from_rows(&rows);
    if gram_b != gram_b.transpose() {
        return Err(Error::WellDefinednessFailure(
            "f_x(y) differs from f_y(x) on a spanning pair".into(),
        ));
    }
    let pinv = p.inverse().expect("chosen spanners form a basis");
    let gram = pinv.transpose().mul(&gram_b).mul(&pinv);
    for (i, x) in spanning.iter().enumerate() {
        if gram.mul_vec(x) != funcs[i] {
            return Err(Error::WellDefinednessFailure(format!(
                "spanner {i} disagrees with the bilinear extension"
            )));
        }
    }
    let form = BilinearForm {
        gram,
        kind: FormKind::Extremal,
    };
    if !form.is_associative(l) {
        return Err(Error::WellDefinednessFailure(
            "form is not associative".into(),
        ));
    }
    Ok(form)
}

/// `kappa(x, y) = tr(ad_x ad_y)`.
pub fn killing_form<S: Scalar>(l: &LieAlgebra<S>) -> BilinearForm<S> {
    let n = l.dim();
    // by_mk[(m, k)] lists (i, c) with [b_i, b_m] having coefficient c at b_k.
    let mut by_mk: HashMap<(usize, usize), Vec<(usize, S)>> = HashMap::new();
    for i in 0..n {
        for m in 0..n {
            for (k, c) in l.structure(i, m) {
                by_mk.entry((m, *k)).or_default().push((i, c.clone()));
            }
        }
    }
    let rows: Vec<Vec<S>> = (0..n)
        .into_par_iter()
        .map(|j| {
            let mut row = vec![S::zero(); n];
            for k in 0..n {
                for (m, c1) in l.structure(j, k) {
                    if let Some(list) = by_mk.get(&(*m, k)) {
                        for (i, c2) in list {
                            row[*i] = row[*i].clone() + c1.clone() * c2.clone();
                        }
                    }
                }
            }
            row
        })
        .collect();
    BilinearForm {
        gram: Matrix::from_rows(&rows).transpose(),
        kind: FormKind::Killing,
    }
}

/// Extremal elements obtained from `seeds` by repeatedly applying
/// `exp(e, 1)` and `exp(e, -1)` for extremal `e` already found, until they
/// span `l` or no new direction appears. The span then contains the
/// subalgebra generated by `seeds`.
pub fn extremal_spanning_closure<S: Scalar>(l: &LieAlgebra<S>, seeds: &[Vec<S>]) -> Vec<Vec<S>> {
    let n = l.dim();
    let mut found: Vec<Vec<S>> = Vec::new();
    let mut ech = Echelon::new(n);
    for s in seeds {
        if is_extremal(l, s) && ech.insert(s.clone()) {
            found.push(s.clone());
        }
    }
    let mut frontier = 0;
    while ech.dim() < n && frontier < found.len() {
        let limit = found.len();
        for a in 0..limit {
            for b in 0..limit {
                if a == b || (a < frontier && b < frontier) {
                    continue;
                }
                for t in [S::one(), -S::one()] {
                    let img = exp_apply(l, &found[a], &t, &found[b]);
                    if ech.insert(img.clone()) {
                        found.push(img);
                    }
                }
            }
        }
        frontier = limit;
    }
    found
}

/// `exp(x, s) v = v + s[x,v] + s^2/2 [x,[x,v]]` for extremal `x`.
pub fn exp_apply<S: Scalar>(l: &LieAlgebra<S>, x: &[S], s: &S, v: &[S]) -> Vec<S> {
    let xv = l.bracket(x, v);
    let xxv = l.bracket(x, &xv);
    let mut out = v.to_vec();
    crate::linalg::axpy(&mut out, s, &xv);
    crate::linalg::axpy(&mut out, &(s.clone() * s.clone() * S::half()), &xxv);
    out
}

/// Spectrum of `phi = ad_x ad_y` for extremal `x`.
///
/// With `f(x,y) = -2` the expected spectrum is `2` twice, `1` with
/// multiplicity `s-2` and `0` elsewhere, where `s = dim [x, L]`, and
/// `kappa(x,y) = s+2`. With `f(x,y) = 0` all eigenvalues vanish and
/// `kappa(x,y) = 0`. Other values of `f(x,y)` are rejected.
pub fn phi_spectrum_check<S: Scalar>(l: &LieAlgebra<S>, x: &[S], y: &[S]) -> Result<Report> {
    let fx = extremal_functional(l, x)?.ok_or(Error::NotExtremal(0))?;
    let fxy = dot(&fx, y);
    let n = l.dim();
    let adx = l.ad(x);
    let ady = l.ad(y);
    let phi = adx.mul(&ady);
    let kappa = phi.trace();
    let s = adx.rank();
    let mut r = Report::new("phi = ad_x ad_y spectrum");
    let two = S::from_i64(2);
    if fxy.is_zero() {
        r.expect(
            "multiplicity of eigenvalue 0",
            n,
            phi.algebraic_multiplicity(&S::zero()),
        );
        r.expect("kappa(x,y)", S::zero(), kappa);
        return Ok(r);
    }
    if fxy != -two.clone() {
        return Err(Error::PreconditionNotMet(format!(
            "f(x,y) = {fxy}, expected -2 or 0"
        )));
    }
    // phi^2 + (1/2) f(x,y) phi maps L into kx + k[x,y].
    let target = Subspace::span(n, &[x.to_vec(), l.bracket(x, y)]);
    let q = phi.mul(&phi).add(&phi.scale(&(fxy.clone() * S::half())));
    let image_ok = (0..n).all(|j| target.contains(&q.col(j)));
    r.assert("phi^2 + f(x,y)/2 phi maps into kx + k[x,y]", image_ok);
    r.expect(
        "multiplicity of eigenvalue 2",
        2,
        phi.algebraic_multiplicity(&two),
    );
    r.expect(
        "multiplicity of eigenvalue 1",
        s.saturating_sub(2),
        phi.algebraic_multiplicity(&S::one()),
    );
    r.expect(
        "multiplicity of eigenvalue 0",
        n - s,
        phi.algebraic_multiplicity(&S::zero()),
    );
    r.expect("kappa(x,y)", S::from_i64(s as i64 + 2), kappa);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::super::{heisenberg, sl2};
    use super::*;
    use crate::scalars::{Gf3, Q};

    #[test]
    fn sl2_extremal_elements() {
        let l = sl2::<Q>();
        let e = l.basis_vector(0);
        let f = extremal_functional(&l, &e).unwrap().unwrap();
        // [e,[e,f]] = [e,h] = -2e
        assert_eq!(f, vec![Q::from_i64(0), Q::from_i64(0), Q::from_i64(-2)]);
        assert!(extremal_functional(&l, &l.basis_vector(1))
            .unwrap()
            .is_none());
        assert_eq!(extremal_functional(&l, &l.zero()), Err(Error::ZeroElement));
    }

    #[test]
    fn heisenberg_center_is_sandwich() {
        let h = heisenberg::<Q>();
        assert!(is_sandwich(&h, &h.basis_vector(2)));
    }

    #[test]
    fn sl2_forms() {
        let l = sl2::<Q>();
        let span = extremal_spanning_closure(&l, &[l.basis_vector(0), l.basis_vector(2)]);
        let f = extremal_form(&l, &span).unwrap();
        assert_eq!(
            f.eval(&l.basis_vector(0), &l.basis_vector(2)),
            Q::from_i64(-2)
        );
        assert_eq!(
            f.eval(&l.basis_vector(0), &l.basis_vector(0)),
            Q::from_i64(0)
        );
        let k = killing_form(&l);
        assert_eq!(
            k.eval(&l.basis_vector(0), &l.basis_vector(2)),
            Q::from_i64(4)
        );
        assert!(k.radical().dim() == 0);
        let k3 = killing_form(&sl2::<Gf3>());
        assert!(k3.is_symmetric());
    }

    #[test]
    fn sl2_phi_spectrum() {
        let l = sl2::<Q>();
        let r = phi_spectrum_check(&l, &l.basis_vector(0), &l.basis_vector(2)).unwrap();
        assert!(r.pass(), "{r}");
    }
}
