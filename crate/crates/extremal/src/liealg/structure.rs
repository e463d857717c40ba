//! Subalgebras, ideals, series and radicals.

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, unit_vec, zero_vec, Echelon, Matrix, Subspace};
use crate::scalars::Scalar;

use super::{killing_form, LieAlgebra};

/// Upper bound on the number of candidate vectors enumerated when searching
/// for abelian ideals over a finite field.
pub const ABELIAN_SEARCH_BUDGET: usize = 200_000;

impl<S: Scalar> LieAlgebra<S> {
    /// Smallest subalgebra containing `gens`.
    pub fn subalgebra_generated(&self, gens: &[Vec<S>]) -> Subspace<S> {
        let multipliers: Vec<Vec<S>> = gens.to_vec();
        self.closure(gens, &multipliers)
    }

    /// Smallest ideal containing `gens`.
    pub fn ideal_generated(&self, gens: &[Vec<S>]) -> Subspace<S> {
        let multipliers: Vec<Vec<S>> = (0..self.dim()).map(|i| self.basis_vector(i)).collect();
        self.closure(gens, &multipliers)
    }

    /// Span of `gens` closed under `ad_m` for every multiplier `m`.
    fn closure(&self, gens: &[Vec<S>], multipliers: &[Vec<S>]) -> Subspace<S> {
        let n = self.dim();
        let ads: Vec<_> = multipliers.iter().map(|m| self.ad_columns(m)).collect();
        let mut ech = Echelon::new(n);
        let mut queue: Vec<Vec<S>> = Vec::new();
        // Queue the unreduced brackets: they stay sparse with small coefficients.
        for g in gens {
            let r = ech.reduce(g.clone());
            if !is_zero_vec(&r) {
                ech.insert(r);
                queue.push(g.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for ad in &ads {
                let w = super::apply_columns(ad, &v);
                let r = ech.reduce(w.clone());
                if !is_zero_vec(&r) {
                    ech.insert(r);
                    queue.push(w);
                    if ech.dim() == n {
                        return Subspace::from_echelon(ech);
                    }
                }
            }
        }
        Subspace::from_echelon(ech)
    }

    /// Span of all `[a, b]` with `a` in `a_sp` and `b` in `b_sp`.
    pub fn bracket_subspaces(&self, a_sp: &Subspace<S>, b_sp: &Subspace<S>) -> Subspace<S> {
        let mut ech = Echelon::new(self.dim());
        for a in a_sp.basis() {
            let ad = self.ad_columns(a);
            for b in b_sp.basis() {
                ech.insert(super::apply_columns(&ad, b));
            }
        }
        Subspace::from_echelon(ech)
    }

    pub fn whole(&self) -> Subspace<S> {
        Subspace::full(self.dim())
    }

    pub fn derived_algebra(&self) -> Subspace<S> {
        let full = self.whole();
        self.bracket_subspaces(&full, &full)
    }

    pub fn is_subalgebra(&self, sp: &Subspace<S>) -> bool {
        self.bracket_subspaces(sp, sp).is_subspace_of(sp)
    }

    pub fn is_ideal(&self, sp: &Subspace<S>) -> bool {
        self.bracket_subspaces(&self.whole(), sp).is_subspace_of(sp)
    }

    /// Elements commuting with every vector of `sp`.
    pub fn centralizer(&self, sp: &Subspace<S>) -> Subspace<S> {
        let n = self.dim();
        let mut rows = Echelon::new(n);
        for y in sp.basis() {
            let ady = self.ad(y);
            for r in ady.row_vecs() {
                rows.insert(r);
            }
        }
        let m = Matrix::from_rows(rows.rows());
        if rows.dim() == 0 {
            return Subspace::full(n);
        }
        Subspace::span(n, &m.kernel())
    }

    pub fn center(&self) -> Subspace<S> {
        self.centralizer(&self.whole())
    }

    /// `L, [L,L], [[L,L],[L,L]], ...` until it stabilizes.
    pub fn derived_series(&self) -> Vec<Subspace<S>> {
        let mut out = vec![self.whole()];
        loop {
            let last = out.last().expect("nonempty");
            let next = self.bracket_subspaces(last, last);
            if next.dim() == last.dim() {
                return out;
            }
            out.push(next);
        }
    }

    /// `L, [L,L], [L,[L,L]], ...` until it stabilizes.
    pub fn lower_central_series(&self) -> Vec<Subspace<S>> {
        let full = self.whole();
        let mut out = vec![full.clone()];
        loop {
            let last = out.last().expect("nonempty");
            let next = self.bracket_subspaces(&full, last);
            if next.dim() == last.dim() {
                return out;
            }
            out.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().expect("nonempty").dim() == 0
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().expect("nonempty").dim() == 0
    }

    /// Whether the subalgebra `sp` is solvable.
    pub fn subspace_is_solvable(&self, sp: &Subspace<S>) -> bool {
        let mut cur = sp.clone();
        while cur.dim() > 0 {
            let next = self.bracket_subspaces(&cur, &cur);
            if next.dim() == cur.dim() {
                return false;
            }
            cur = next;
        }
        true
    }

    /// Quotient by an ideal, with the projection onto it.
    pub fn quotient(&self, ideal: &Subspace<S>) -> Quotient<S> {
        let n = self.dim();
        let pivots = ideal.pivots();
        let kept: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let project = |v: Vec<S>| -> Vec<S> {
            let r = ideal.echelon().reduce(v);
            kept.iter().map(|&c| r[c].clone()).collect()
        };
        let labels = kept.iter().map(|&c| self.labels()[c].clone()).collect();
        let algebra = LieAlgebra::from_upper_unchecked(labels, &mut |a, b| {
            let v = super::dense_from_sparse(n, self.structure(kept[a], kept[b]));
            super::sparse_from_dense(&project(v))
        });
        let projection = Matrix::from_cols(
            &(0..n).map(|i| project(unit_vec(n, i))).collect::<Vec<_>>(),
            kept.len(),
        );
        Quotient {
            algebra,
            kept,
            projection,
        }
    }

    /// Joint eigenspaces of `ad_h` for `h` in `torus`, when all `ad_h` split over the field.
    pub fn weight_spaces(&self, torus: &[Vec<S>]) -> Option<Vec<Subspace<S>>> {
        let n = self.dim();
        let mut spaces = vec![self.whole()];
        let elements = S::elements()?;
        for h in torus {
            let adh = self.ad(h);
            let mut eigen = Vec::new();
            let mut total = 0;
            for lambda in &elements {
                let shifted = adh.sub(&Matrix::identity(n).scale(lambda));
                let k = shifted.kernel();
                if !k.is_empty() {
                    total += k.len();
                    eigen.push(Subspace::span(n, &k));
                }
            }
            if total != n {
                return None;
            }
            spaces = spaces
                .iter()
                .flat_map(|sp| eigen.iter().map(move |e| sp.intersection(e)))
                .filter(|sp| sp.dim() > 0)
                .collect();
        }
        Some(spaces)
    }

    /// Solvable radical, the largest solvable ideal.
    ///
    /// In characteristic 0 this is the Killing-orthogonal of `[L,L]`. Over
    /// GF(p) nonzero abelian ideals are located and factored out one at a
    /// time; minimal ideals are found by enumerating the projective points of
    /// the joint weight spaces of `torus` (an ad-diagonalizable commuting set,
    /// possibly empty).
    pub fn solvable_radical(&self, torus: &[Vec<S>]) -> Result<Subspace<S>> {
        if S::CHARACTERISTIC == 0 {
            let kappa = killing_form(self);
            let derived = self.derived_algebra();
            let rows: Vec<Vec<S>> = derived
                .basis()
                .iter()
                .map(|d| kappa.gram.mul_vec(d))
                .collect();
            if rows.is_empty() {
                return Ok(self.whole());
            }
            return Ok(Subspace::span(
                self.dim(),
                &Matrix::from_rows(&rows).kernel(),
            ));
        }
        let Some(a) = self.find_abelian_ideal(torus)? else {
            return Ok(Subspace::zero(self.dim()));
        };
        let q = self.quotient(&a);
        let torus_q: Vec<Vec<S>> = torus.iter().map(|h| q.projection.mul_vec(h)).collect();
        let rad_q = q.algebra.solvable_radical(&torus_q)?;
        let mut vs: Vec<Vec<S>> = a.basis().to_vec();
        vs.extend(rad_q.basis().iter().map(|v| q.lift(v, self.dim())));
        Ok(Subspace::span(self.dim(), &vs))
    }

    fn find_abelian_ideal(&self, torus: &[Vec<S>]) -> Result<Option<Subspace<S>>> {
        let n = self.dim();
        if n == 0 {
            return Ok(None);
        }
        let z = self.center();
        if z.dim() > 0 {
            return Ok(Some(z));
        }
        let series = self.derived_series();
        if series.last().expect("nonempty").dim() == 0 {
            return Ok(Some(series.into_iter().rev().nth(1).expect("n > 0")));
        }
        let mut spaces = self
            .weight_spaces(torus)
            .unwrap_or_else(|| vec![self.whole()]);
        // An ideal is a sum of its weight components. One meeting only the
        // zero weight space centralizes every other weight space, so only
        // that part of the zero weight space needs searching.
        let is_zero_weight = |sp: &Subspace<S>| {
            let v = &sp.basis()[0];
            torus.iter().all(|h| is_zero_vec(&self.bracket(h, v)))
        };
        if spaces.len() > 1 {
            if let Some(z) = spaces.iter().position(is_zero_weight) {
                let others: Vec<Vec<S>> = spaces
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != z)
                    .flat_map(|(_, sp)| sp.basis().to_vec())
                    .collect();
                let cz = self.centralizer(&Subspace::span(n, &others));
                spaces[z] = spaces[z].intersection(&cz);
                spaces.retain(|sp| sp.dim() > 0);
            }
        }
        let elements = S::elements()
            .ok_or_else(|| Error::Unsupported("enumeration needs a finite field".into()))?;
        let p = elements.len();
        let points: usize = spaces
            .iter()
            .map(|sp| (p.pow(sp.dim() as u32) - 1) / (p - 1))
            .sum();
        if points > ABELIAN_SEARCH_BUDGET {
            return Err(Error::Unsupported(format!(
                "abelian ideal search needs {points} candidates, above the budget of {ABELIAN_SEARCH_BUDGET}"
            )));
        }
        for sp in &spaces {
            for v in projective_points(sp, &elements) {
                let j = self.ideal_generated(&[v]);
                // L itself is not abelian here
                if j.dim() < n && self.bracket_subspaces(&j, &j).dim() == 0 {
                    return Ok(Some(j));
                }
            }
        }
        Ok(None)
    }

    /// Nilpotent radical, the largest nilpotent ideal.
    ///
    /// Uses the solvable radical and, in characteristic 0, the trace criterion
    /// on the associative envelope of `ad L`. Other characteristics are only
    /// handled when the answer is forced (`Rad(L) = 0` or `L` nilpotent).
    pub fn nilradical(&self, torus: &[Vec<S>]) -> Result<Subspace<S>> {
        let rad = self.solvable_radical(torus)?;
        if rad.dim() == 0 {
            return Ok(rad);
        }
        if self.is_nilpotent() {
            return Ok(self.whole());
        }
        if S::CHARACTERISTIC != 0 {
            return Err(Error::Unsupported(
                "nilradical in positive characteristic".into(),
            ));
        }
        let n = self.dim();
        let ads: Vec<Matrix<S>> = (0..n).map(|i| self.ad(&self.basis_vector(i))).collect();
        let envelope = associative_envelope(&ads);
        let rows: Vec<Vec<S>> = ads
            .iter()
            .map(|a| envelope.iter().map(|b| a.mul(b).trace()).collect())
            .collect();
        // x = sum x_i b_i lies in the nilradical iff sum_i x_i tr(ad_i b) = 0 for all b.
        let m = Matrix::from_rows(&rows).transpose();
        let kernel = Subspace::span(n, &m.kernel());
        Ok(kernel.intersection(&rad))
    }
}

/// A quotient algebra together with its projection.
pub struct Quotient<S> {
    pub algebra: LieAlgebra<S>,
    /// Basis indices of the parent kept as quotient basis.
    pub kept: Vec<usize>,
    /// Matrix of the projection on column vectors.
    pub projection: Matrix<S>,
}

impl<S: Scalar> Quotient<S> {
    /// A preimage of a quotient element.
    pub fn lift(&self, v: &[S], parent_dim: usize) -> Vec<S> {
        let mut out = zero_vec(parent_dim);
        for (c, &i) in v.iter().zip(&self.kept) {
            out[i] = c.clone();
        }
        out
    }
}

/// Vectors of `sp` whose first nonzero coordinate is one.
pub(crate) fn projective_points<S: Scalar>(sp: &Subspace<S>, elements: &[S]) -> Vec<Vec<S>> {
    let basis = sp.basis();
    let k = basis.len();
    let p = elements.len();
    let mut out = Vec::new();
    for lead in 0..k {
        let tail = k - lead - 1;
        for code in 0..p.pow(tail as u32) {
            let mut coeffs = vec![S::zero(); k];
            coeffs[lead] = S::one();
            let mut c = code;
            for slot in coeffs.iter_mut().skip(lead + 1) {
                *slot = elements[c % p].clone();
                c /= p;
            }
            let mut v = zero_vec(sp.ambient());
            for (a, b) in coeffs.iter().zip(basis) {
                crate::linalg::axpy(&mut v, a, b);
            }
            out.push(v);
        }
    }
    out
}

/// Basis of the unital associative algebra generated by the given matrices.
pub fn associative_envelope<S: Scalar>(gens: &[Matrix<S>]) -> Vec<Matrix<S>> {
    let n = gens.first().map_or(0, |g| g.rows);
    let mut ech = Echelon::new(n * n);
    let mut basis = Vec::new();
    let mut queue = vec![Matrix::identity(n)];
    while let Some(m) = queue.pop() {
        if !ech.insert(m.data.clone()) {
            continue;
        }
        basis.push(m.clone());
        for g in gens {
            queue.push(g.mul(&m));
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::super::{heisenberg, sl2};
    use crate::scalars::{Gf5, Q};

    #[test]
    fn heisenberg_structure() {
        let h = heisenberg::<Q>();
        assert_eq!(h.center().dim(), 1);
        assert_eq!(h.derived_algebra().dim(), 1);
        assert_eq!(h.solvable_radical(&[]).unwrap().dim(), 3);
        assert!(h.is_nilpotent());
        assert_eq!(h.nilradical(&[]).unwrap().dim(), 3);
    }

    #[test]
    fn sl2_is_semisimple() {
        let l = sl2::<Q>();
        assert_eq!(l.center().dim(), 0);
        assert_eq!(l.solvable_radical(&[]).unwrap().dim(), 0);
        let l5 = sl2::<Gf5>();
        let torus = vec![l5.basis_vector(1)];
        assert_eq!(l5.solvable_radical(&torus).unwrap().dim(), 0);
        assert_eq!(l5.solvable_radical(&[]).unwrap().dim(), 0);
    }

    #[test]
    fn generation() {
        let l = sl2::<Q>();
        assert_eq!(
            l.subalgebra_generated(&[l.basis_vector(0), l.basis_vector(2)])
                .dim(),
            3
        );
        assert_eq!(l.subalgebra_generated(&[l.basis_vector(0)]).dim(), 1);
        assert_eq!(l.ideal_generated(&[l.basis_vector(0)]).dim(), 3);
    }
}
