//! The chain of radicals and related structural checks.

use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, Matrix, Subspace};
use crate::report::Report;
use crate::scalars::Scalar;

use super::{extremal_form, is_extremal, is_sandwich, killing_form, BilinearForm, LieAlgebra};

/// The nested ideals `SanRad <= NilRad <= Rad(L) <= Rad(f) <= Rad(kappa)`.
///
/// `sanrad` is the ideal generated by the supplied sandwich witnesses, a
/// lower bound for the span of all sandwiches.
#[derive(Clone, Debug)]
pub struct RadicalChain<S> {
    pub sanrad: Subspace<S>,
    /// `None` when the nilradical is out of reach (positive characteristic,
    /// radical neither zero nor nilpotent).
    pub nilrad: Option<Subspace<S>>,
    pub rad: Subspace<S>,
    pub rad_f: Subspace<S>,
    pub rad_kappa: Subspace<S>,
}

impl<S: Scalar> RadicalChain<S> {
    /// Compute every member of the chain.
    ///
    /// `spanning` must be extremal and span the algebra (it defines `f`);
    /// `torus` is passed to the radical computations.
    pub fn compute(
        l: &LieAlgebra<S>,
        witnesses: &[Vec<S>],
        spanning: &[Vec<S>],
        torus: &[Vec<S>],
    ) -> Result<Self> {
        for (i, w) in witnesses.iter().enumerate() {
            if is_zero_vec(w) || !is_sandwich(l, w) {
                return Err(Error::NotASandwich(i));
            }
        }
        let f = extremal_form(l, spanning)?;
        Ok(RadicalChain {
            sanrad: l.ideal_generated(witnesses),
            nilrad: match l.nilradical(torus) {
                Ok(n) => Some(n),
                Err(Error::Unsupported(_)) => None,
                Err(e) => return Err(e),
            },
            rad: l.solvable_radical(torus)?,
            rad_f: f.radical(),
            rad_kappa: killing_form(l).radical(),
        })
    }

    fn links(&self) -> Vec<(&'static str, &Subspace<S>, &Subspace<S>)> {
        let mut v = match &self.nilrad {
            Some(n) => vec![
                ("SanRad <= NilRad", &self.sanrad, n),
                ("NilRad <= Rad(L)", n, &self.rad),
            ],
            None => vec![("SanRad <= Rad(L)", &self.sanrad, &self.rad)],
        };
        v.push(("Rad(L) <= Rad(f)", &self.rad, &self.rad_f));
        v.push(("Rad(f) <= Rad(kappa)", &self.rad_f, &self.rad_kappa));
        v
    }

    pub fn report(&self) -> Report {
        let mut r = Report::new("radical chain");
        if self.nilrad.is_none() {
            r.push("NilRad", "", "not computed in this characteristic", true);
        }
        for (name, a, b) in self.links() {
            let rel = if a.dim() == b.dim() {
                "equal"
            } else {
                "strict"
            };
            r.push(
                name,
                "inclusion",
                format!("dims {} <= {} ({rel})", a.dim(), b.dim()),
                a.is_subspace_of(b),
            );
        }
        r
    }
}

/// Witnesses must be sandwiches; their span should be an ideal, and the
/// whole chain of radicals must be nested.
pub fn sandwich_span_check<S: Scalar>(
    l: &LieAlgebra<S>,
    witnesses: &[Vec<S>],
    spanning: &[Vec<S>],
    torus: &[Vec<S>],
) -> Result<(Report, RadicalChain<S>)> {
    let chain = RadicalChain::compute(l, witnesses, spanning, torus)?;
    let mut r = Report::new("sandwich span and radical chain");
    let w = Subspace::span(l.dim(), witnesses);
    r.assert("witness span is an ideal", l.is_ideal(&w));
    r.absorb("chain", chain.report());
    Ok((r, chain))
}

/// `(ad_[x,y])^4 = 0` for extremal `x` outside `Rad(f)` and `y` in `Rad(f)`.
pub fn fourth_power_check<S: Scalar>(
    l: &LieAlgebra<S>,
    f: &BilinearForm<S>,
    x: &[S],
    y: &[S],
) -> Result<Report> {
    if !is_extremal(l, x) {
        return Err(Error::PreconditionNotMet("x is not extremal".into()));
    }
    let rad = f.radical();
    if rad.contains(x) {
        return Err(Error::PreconditionNotMet("x lies in Rad(f)".into()));
    }
    if !rad.contains(y) {
        return Err(Error::PreconditionNotMet("y is not in Rad(f)".into()));
    }
    let z = l.bracket(x, y);
    let adz = l.ad(&z);
    let mut r = Report::new("fourth power of ad_[x,y]");
    r.assert("(ad_[x,y])^4 = 0", adz.pow(4).is_zero());
    Ok(r)
}

/// For `L = L1 + L2` a direct sum of ideals: `f(L1, L2) = 0` and each `L_i` is
/// spanned by the projections of the extremal spanners.
pub fn direct_sum_orthogonality_check<S: Scalar>(
    l: &LieAlgebra<S>,
    l1: &Subspace<S>,
    l2: &Subspace<S>,
    spanning: &[Vec<S>],
) -> Result<Report> {
    let n = l.dim();
    let proper = l1.dim() > 0 && l2.dim() > 0;
    if !proper
        || l1.dim() + l2.dim() != n
        || l1.sum(l2).dim() != n
        || !l.is_ideal(l1)
        || !l.is_ideal(l2)
    {
        return Err(Error::NotADirectSum);
    }
    let f = extremal_form(l, spanning)?;
    let mut r = Report::new("direct sum orthogonality");
    let orth = l1
        .basis()
        .iter()
        .all(|a| l2.basis().iter().all(|b| f.eval(a, b).is_zero()));
    r.assert("f(L1, L2) = 0", orth);
    let mut cols: Vec<Vec<S>> = l1.basis().to_vec();
    cols.extend(l2.basis().iter().cloned());
    let basis = Matrix::from_cols(&cols, n);
    let inv = basis.inverse().expect("direct sum basis");
    let k = l1.dim();
    let (mut p1, mut p2) = (Vec::new(), Vec::new());
    for x in spanning {
        let c = inv.mul_vec(x);
        let mut a = vec![S::zero(); n];
        let mut b = vec![S::zero(); n];
        for (i, ci) in c.iter().enumerate() {
            let target = if i < k { &mut a } else { &mut b };
            crate::linalg::axpy(target, ci, &cols[i]);
        }
        p1.push(a);
        p2.push(b);
    }
    r.expect(
        "dim span of projections to L1",
        l1.dim(),
        Subspace::span(n, &p1).dim(),
    );
    r.expect(
        "dim span of projections to L2",
        l2.dim(),
        Subspace::span(n, &p2).dim(),
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::super::{extremal_spanning_closure, sl2};
    use super::*;
    use crate::linalg::unit_vec;
    use crate::scalars::Q;

    #[test]
    fn sl2_plus_sl2_is_orthogonal() {
        let l = sl2::<Q>().direct_sum(&sl2::<Q>());
        let seeds: Vec<Vec<Q>> = [0, 2, 3, 5].iter().map(|&i| unit_vec(6, i)).collect();
        let span = extremal_spanning_closure(&l, &seeds);
        let l1 = Subspace::span(6, &(0..3).map(|i| unit_vec(6, i)).collect::<Vec<_>>());
        let l2 = Subspace::span(6, &(3..6).map(|i| unit_vec(6, i)).collect::<Vec<_>>());
        let r = direct_sum_orthogonality_check(&l, &l1, &l2, &span).unwrap();
        assert!(r.pass(), "{r}");
        let err = direct_sum_orthogonality_check(&l, &l1, &l1, &span).unwrap_err();
        assert_eq!(err, Error::NotADirectSum);
    }
}
