//! Chevalley Lie algebras, root-element exponentials and minimal extremal generation.
//!
//! The basis is `x_a` for the positive roots, then `x_a` for the negative
//! roots (both in the order of [`RootSystem::roots`]), then `h_1, ..., h_n`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::liealg::{
    associative_envelope, extremal_form, extremal_spanning_closure, fourth_power_check,
    is_extremal, is_sandwich, projective_points, LieAlgebra, RadicalChain, SparseVec,
    ABELIAN_SEARCH_BUDGET,
};
use crate::linalg::{axpy, is_zero_vec, scaled, zero_vec, Matrix, Subspace};
use crate::nilquot::EXPECTED_LR;
use crate::report::Report;
use crate::rootdata::{
    add, chevalley_constants, neg, CartanType, ChevalleyConstants, Root, RootSystem,
};
use crate::scalars::{Field, Scalar};

/// A Lie algebra with a Chevalley basis.
#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra<S> {
    pub algebra: LieAlgebra<S>,
    pub roots: RootSystem,
    pub constants: ChevalleyConstants,
}

impl<S: Scalar> ChevalleyAlgebra<S> {
    pub fn field(&self) -> Field {
        S::field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn name(&self) -> String {
        self.roots.name()
    }

    /// Basis index of `x_r`.
    pub fn root_index(&self, r: &[i64]) -> Result<usize> {
        self.roots.index_of(r).ok_or_else(|| {
            Error::PreconditionNotMet(format!("{r:?} is not a root of {}", self.name()))
        })
    }

    pub fn root_element(&self, r: &[i64]) -> Result<Vec<S>> {
        Ok(self.algebra.basis_vector(self.root_index(r)?))
    }

    /// `h_i` for the simple root `alpha_{i+1}`.
    pub fn cartan_element(&self, i: usize) -> Vec<S> {
        self.algebra.basis_vector(self.roots.roots().len() + i)
    }

    pub fn cartan_basis(&self) -> Vec<Vec<S>> {
        (0..self.roots.rank)
            .map(|i| self.cartan_element(i))
            .collect()
    }
}

/// The algebras whose generation numbers are certified by default; `E_8` is
/// kept apart because it is expensive.
pub const FLEET: [(CartanType, usize); 14] = [
    (CartanType::A, 1),
    (CartanType::A, 2),
    (CartanType::A, 3),
    (CartanType::A, 4),
    (CartanType::B, 3),
    (CartanType::B, 4),
    (CartanType::C, 2),
    (CartanType::C, 3),
    (CartanType::D, 4),
    (CartanType::D, 5),
    (CartanType::G, 2),
    (CartanType::F, 4),
    (CartanType::E, 6),
    (CartanType::E, 7),
];

/// The Chevalley algebra of the given type over `S`.
pub fn chevalley_algebra<S: Scalar>(ty: CartanType, n: usize) -> Result<ChevalleyAlgebra<S>> {
    if S::CHARACTERISTIC == 2 {
        return Err(Error::CharacteristicTwoUnsupported);
    }
    let rs = RootSystem::new(ty, n)?;
    let constants = chevalley_constants(&rs);
    chevalley_algebra_with(rs, constants)
}

/// The Chevalley algebra built from given structure constants; the Jacobi
/// identity is validated.
pub fn chevalley_algebra_with<S: Scalar>(
    rs: RootSystem,
    constants: ChevalleyConstants,
) -> Result<ChevalleyAlgebra<S>> {
    if S::CHARACTERISTIC == 2 {
        return Err(Error::CharacteristicTwoUnsupported);
    }
    let n = rs.rank;
    let roots = rs.roots().to_vec();
    let nr = roots.len();
    let np = rs.num_positive();
    let mut labels: Vec<String> = roots
        .iter()
        .map(|r| format!("x[{}]", rs.root_label(r)))
        .collect();
    labels.extend((1..=n).map(|i| format!("h{i}")));
    let simple: Vec<Root> = (0..n).map(|i| rs.simple_root(i)).collect();
    // h_a = sum_i c_i (a_i, a_i) / (a, a) h_i
    let coroot = |r: &[i64]| -> SparseVec<S> {
        let na = rs.norm(r);
        r.iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| (nr + i, S::from_i64(c * rs.norm(&simple[i]) / na)))
            .collect()
    };
    let algebra = LieAlgebra::from_upper(labels, |i, j| {
        match (i < nr, j < nr) {
            (true, true) => {
                let s = add(&roots[i], &roots[j]);
                if s.iter().all(|c| *c == 0) {
                    // i < j, so i is the positive root
                    debug_assert!(i < np);
                    coroot(&roots[i])
                } else if let Some(k) = rs.index_of(&s) {
                    vec![(k, S::from_i64(constants.get(i, j)))]
                } else {
                    Vec::new()
                }
            }
            // [x_a, h_k] = -<a, a_k^vee> x_a
            (true, false) => {
                vec![(
                    i,
                    S::from_i64(-rs.cartan_integer(&roots[i], &simple[j - nr])),
                )]
            }
            _ => Vec::new(),
        }
    })?;
    Ok(ChevalleyAlgebra {
        algebra,
        roots: rs,
        constants,
    })
}

/// The matrix of an automorphism on the algebra basis (columns are images).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism<S> {
    pub matrix: Matrix<S>,
}

impl<S: Scalar> Automorphism<S> {
    pub fn apply(&self, v: &[S]) -> Vec<S> {
        self.matrix.mul_vec(v)
    }

    pub fn compose(&self, other: &Self) -> Self {
        Automorphism {
            matrix: self.matrix.mul(&other.matrix),
        }
    }
}

/// `exp(x, s) = 1 + s ad_x + s^2/2 ad_x^2` for extremal `x`, checked to preserve brackets.
pub fn exp_automorphism<S: Scalar>(l: &LieAlgebra<S>, x: &[S], s: &S) -> Result<Automorphism<S>> {
    if !is_extremal(l, x) {
        return Err(Error::NotExtremal(0));
    }
    let n = l.dim();
    let ad = l.ad(x);
    let matrix = Matrix::identity(n)
        .add(&ad.scale(s))
        .add(&ad.mul(&ad).scale(&(s.clone() * s.clone() * S::half())));
    assert!(
        l.is_automorphism(&matrix),
        "exp of an extremal element must be an automorphism"
    );
    Ok(Automorphism { matrix })
}

/// `sum_k s^k ad_x^k v / k!` for ad-nilpotent `x`.
///
/// Agrees with [`exp_automorphism`] when `x` is extremal. Fails with
/// `ExpNotDefined(p)` when a nonzero term needs `k >= p` in characteristic `p`.
pub fn nilpotent_exp_apply<S: Scalar>(
    l: &LieAlgebra<S>,
    x: &[S],
    s: &S,
    v: &[S],
) -> Result<Vec<S>> {
    let ad = l.ad_columns(x);
    let mut out = v.to_vec();
    let mut term = v.to_vec();
    let mut k: u64 = 0;
    loop {
        term = crate::liealg::apply_columns(&ad, &term);
        if is_zero_vec(&term) {
            return Ok(out);
        }
        k += 1;
        if k as usize > l.dim() {
            return Err(Error::NotNilpotent);
        }
        let p = S::CHARACTERISTIC;
        if p != 0 && k >= p {
            return Err(Error::ExpNotDefined(p));
        }
        term = scaled(
            &term,
            &(s.clone()
                * S::from_i64(k as i64)
                    .inv()
                    .expect("k below the characteristic")),
        );
        axpy(&mut out, &S::one(), &term);
    }
}

/// Long root elements are extremal; short ones are not.
pub fn long_root_extremality_check<S: Scalar>(c: &ChevalleyAlgebra<S>) -> Report {
    let mut r = Report::new(format!(
        "root element extremality in {} over {}",
        c.name(),
        S::field()
    ));
    let mut long_ok = 0;
    let mut short_fail = 0;
    let (mut nlong, mut nshort) = (0, 0);
    for (k, root) in c.roots.roots().iter().enumerate() {
        let ext = is_extremal(&c.algebra, &c.algebra.basis_vector(k));
        if c.roots.is_long(root) {
            nlong += 1;
            long_ok += usize::from(ext);
        } else {
            nshort += 1;
            short_fail += usize::from(!ext);
        }
    }
    r.expect("long root elements extremal", nlong, long_ok);
    r.expect("short root elements not extremal", nshort, short_fail);
    r
}

/// Short root elements as sums of long root element images in `B_2` and `G_2`.
pub fn short_root_decomposition_check<S: Scalar>(ty: CartanType) -> Result<Report> {
    let c = match ty {
        CartanType::B => chevalley_algebra::<S>(ty, 2)?,
        CartanType::G => chevalley_algebra::<S>(ty, 2)?,
        other => return Err(Error::UnsupportedType(format!("{other}2"))),
    };
    let l = &c.algebra;
    let n = l.dim();
    let mut r = Report::new(format!(
        "short root decomposition in {}2 over {}",
        ty,
        S::field()
    ));
    let one = S::one();
    let (short, longs) = match ty {
        CartanType::B => {
            // e1 = (1,1), e1 - e2 = (1,0), e2 = (0,1), e1 + e2 = (1,2)
            let x_e1 = c.root_element(&[1, 1])?;
            let y = c.root_element(&[-1, 0])?;
            let img = nilpotent_exp_apply(l, &x_e1, &one, &y)?;
            let e2 = c.root_index(&[0, 1])?;
            r.assert(
                "exp(x_e1, 1) x_-(e1-e2) has a nonzero x_e2 coefficient",
                !img[e2].is_zero(),
            );
            let rest = Subspace::span(n, &[y.clone(), c.root_element(&[1, 2])?]);
            r.assert("remaining terms lie in span{x_-(e1-e2), x_e1+e2}", {
                let mut t = img.clone();
                t[e2] = S::zero();
                rest.contains(&t)
            });
            (
                c.root_element(&[0, 1])?,
                vec![y, c.root_element(&[1, 2])?, img],
            )
        }
        _ => {
            // alpha = (1,0) short, beta = (0,1) long, 2 alpha + beta = (2,1)
            let xa = c.root_element(&[1, 0])?;
            let xb = c.root_element(&[0, 1])?;
            let plus = nilpotent_exp_apply(l, &xa, &one, &xb)?;
            let minus = nilpotent_exp_apply(l, &xa, &-one.clone(), &xb)?;
            let sum: Vec<S> = plus
                .iter()
                .zip(&minus)
                .map(|(a, b)| a.clone() + b.clone())
                .collect();
            let x2ab = c.root_element(&[2, 1])?;
            let span = Subspace::span(n, &[xb.clone(), x2ab.clone()]);
            r.assert(
                "exp(x_a,1)x_b + exp(x_a,-1)x_b lies in span{x_b, x_2a+b}",
                span.contains(&sum),
            );
            let k = c.root_index(&[2, 1])?;
            r.assert("the x_2a+b coefficient is nonzero", !sum[k].is_zero());
            (x2ab, vec![xb, plus, minus])
        }
    };
    let all_long = longs.iter().all(|v| is_extremal(l, v));
    r.assert("the three summands are extremal", all_long);
    r.assert(
        "short root element lies in their span",
        Subspace::span(n, &longs).contains(&short),
    );
    let mut long_elems: Vec<Vec<S>> = c
        .roots
        .long_roots()
        .iter()
        .map(|a| c.root_element(a))
        .collect::<Result<_>>()?;
    long_elems.extend(longs);
    r.expect(
        "dimension generated by long root elements and their images",
        n,
        l.subalgebra_generated(&long_elems).dim(),
    );
    Ok(r)
}

/// The simple root elements and `x_{-highest}` generate the algebra.
pub fn simple_plus_lowest_generation_check<S: Scalar>(c: &ChevalleyAlgebra<S>) -> Report {
    let n = c.roots.rank;
    let mut gens: Vec<Vec<S>> = (0..n).map(|i| c.algebra.basis_vector(i)).collect();
    gens.push(
        c.root_element(&neg(&c.roots.highest_root()))
            .expect("lowest root"),
    );
    let mut r = verify_generation(&c.algebra, &gens);
    r.title = format!(
        "{} generated by simple root elements and x_-highest over {}",
        c.name(),
        S::field()
    );
    r
}

/// Whether `gens` generate `l` as a Lie algebra.
pub fn verify_generation<S: Scalar>(l: &LieAlgebra<S>, gens: &[Vec<S>]) -> Report {
    let mut r = Report::new(format!("generation by {} elements", gens.len()));
    r.expect(
        "generated dimension",
        l.dim(),
        l.subalgebra_generated(gens).dim(),
    );
    r
}

/// Lower bound on the number of extremal generators from `dim L_k`.
pub fn dimension_lower_bound(dim: usize) -> usize {
    if dim == 0 {
        return 0;
    }
    1 + EXPECTED_LR.iter().take_while(|&&d| dim > d).count()
}

/// The defining representation of a classical algebra.
#[derive(Clone, Debug)]
pub struct NaturalRepresentation<S> {
    pub ty: CartanType,
    pub rank: usize,
    /// Size of the matrices.
    pub degree: usize,
    pub basis: Vec<Matrix<S>>,
    pub algebra: LieAlgebra<S>,
    /// Image of a long root element.
    pub long_root: Matrix<S>,
    /// Rank of `long_root` as a matrix.
    pub extremal_rank: usize,
    pub irreducible: bool,
    pub long_root_extremal: bool,
}

impl<S> NaturalRepresentation<S> {
    /// `ceil(degree / extremal_rank)`.
    pub fn lower_bound(&self) -> usize {
        self.degree.div_ceil(self.extremal_rank)
    }
}

fn elementary<S: Scalar>(n: usize, i: usize, j: usize) -> Matrix<S> {
    let mut m = Matrix::zeros(n, n);
    m.set(i, j, S::one());
    m
}

/// `sl_{n+1}`, `so_{2n+1}`, `sp_{2n}` or `so_{2n}` as matrices.
pub fn natural_representation<S: Scalar>(
    ty: CartanType,
    n: usize,
) -> Result<NaturalRepresentation<S>> {
    ty.check_rank(n)?;
    let (degree, form) = match ty {
        CartanType::A => (n + 1, None),
        CartanType::B => (2 * n + 1, Some(false)),
        CartanType::C => (2 * n, Some(true)),
        CartanType::D => (2 * n, Some(false)),
        other => {
            return Err(Error::UnsupportedType(format!(
                "{other}{n} has no classical matrix form here"
            )))
        }
    };
    let d = degree;
    let basis: Vec<Matrix<S>> = match form {
        None => {
            let mut b = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    if i != j {
                        b.push(elementary(d, i, j));
                    }
                }
            }
            for i in 0..d - 1 {
                b.push(elementary(d, i, i).sub(&elementary(d, i + 1, i + 1)));
            }
            b
        }
        Some(symplectic) => {
            // antidiagonal Gram matrix J, with signs for the symplectic case
            let mut j = Matrix::zeros(d, d);
            for i in 0..d {
                let sign = if symplectic && i >= d / 2 { -1 } else { 1 };
                j.set(i, d - 1 - i, S::from_i64(sign));
            }
            // X^T J + J X = 0 as a linear system in the entries of X
            let mut rows: Vec<Vec<S>> = Vec::new();
            for r in 0..d {
                for c in 0..d {
                    let mut eq: Vec<S> = zero_vec(d * d);
                    for k in 0..d {
                        // (X^T J)_{rc} = sum_k X_{kr} J_{kc}
                        let jk = j.get(k, c).clone();
                        if !jk.is_zero() {
                            eq[k * d + r] = eq[k * d + r].clone() + jk;
                        }
                        // (J X)_{rc} = sum_k J_{rk} X_{kc}
                        let jr = j.get(r, k).clone();
                        if !jr.is_zero() {
                            eq[k * d + c] = eq[k * d + c].clone() + jr;
                        }
                    }
                    rows.push(eq);
                }
            }
            Matrix::from_rows(&rows)
                .kernel()
                .into_iter()
                .map(|v| Matrix::from_rows(&v.chunks(d).map(<[S]>::to_vec).collect::<Vec<_>>()))
                .collect()
        }
    };
    let labels = (0..basis.len()).map(|i| format!("m{i}")).collect();
    let algebra = LieAlgebra::from_matrices(labels, &basis)?;
    let long_root = match ty {
        CartanType::B | CartanType::D => elementary(d, 0, 1).sub(&elementary(d, d - 2, d - 1)),
        _ => elementary(d, 0, d - 1),
    };
    let flat: Vec<Vec<S>> = basis.iter().map(|m| m.data.clone()).collect();
    let coords = Matrix::from_cols(&flat, d * d)
        .solve(&long_root.data)
        .ok_or_else(|| Error::PreconditionNotMet("long root matrix outside the algebra".into()))?;
    let long_root_extremal = is_extremal(&algebra, &coords);
    let irreducible = associative_envelope(&basis).len() == d * d;
    let extremal_rank = long_root.rank();
    Ok(NaturalRepresentation {
        ty,
        rank: n,
        degree,
        basis,
        algebra,
        long_root,
        extremal_rank,
        irreducible,
        long_root_extremal,
    })
}

/// An element `exp(x_{r_1}, s_1) ... exp(x_{r_k}, s_k) x_target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpWord {
    /// Outermost first.
    pub exps: Vec<(Root, i64)>,
    pub target: Root,
}

impl ExpWord {
    fn root(target: Root) -> Self {
        ExpWord {
            exps: Vec::new(),
            target,
        }
    }

    fn new(exps: Vec<Root>, target: Root) -> Self {
        ExpWord {
            exps: exps.into_iter().map(|r| (r, 1)).collect(),
            target,
        }
    }

    /// Apply a linear map on root coordinates given by the images of the simple roots.
    fn embed(&self, images: &[Root]) -> Self {
        let map = |r: &Root| -> Root {
            let mut out = vec![0; images[0].len()];
            for (c, img) in r.iter().zip(images) {
                for (o, x) in out.iter_mut().zip(img) {
                    *o += c * x;
                }
            }
            out
        };
        ExpWord {
            exps: self.exps.iter().map(|(r, s)| (map(r), *s)).collect(),
            target: map(&self.target),
        }
    }

    pub fn evaluate<S: Scalar>(&self, c: &ChevalleyAlgebra<S>) -> Result<Vec<S>> {
        let mut v = c.root_element(&self.target)?;
        for (r, s) in self.exps.iter().rev() {
            let x = c.root_element(r)?;
            v = nilpotent_exp_apply(&c.algebra, &x, &S::from_i64(*s), &v)?;
        }
        Ok(v)
    }

    pub fn describe(&self, rs: &RootSystem) -> String {
        let mut s = String::new();
        for (r, p) in &self.exps {
            let arg = if *p == 1 {
                String::new()
            } else {
                format!(", {p}")
            };
            s.push_str(&format!("exp(x[{}]{arg}) ", rs.root_label(r)));
        }
        s.push_str(&format!("x[{}]", rs.root_label(&self.target)));
        s
    }
}

fn unit(n: usize, i: usize) -> Root {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn shifted(n: usize, offset: usize, m: usize) -> Vec<Root> {
    (0..m).map(|i| unit(n, i + offset)).collect()
}

/// A root of `rs` from orthonormal coordinates.
fn eps(rs: &RootSystem, coords: &[i64]) -> Root {
    let e: Vec<_> = coords
        .iter()
        .map(|&c| num_rational::Ratio::from_integer(c))
        .collect();
    rs.from_eps(&e)
        .unwrap_or_else(|| panic!("{coords:?} is not a root of {}", rs.name()))
}

/// Root from a digit string such as `"-11121110"`.
fn digits(s: &str) -> Root {
    let (sign, body) = s.strip_prefix('-').map_or((1, s), |b| (-1, b));
    body.bytes().map(|b| sign * i64::from(b - b'0')).collect()
}

/// Root coordinates from pairs `(index, coefficient)`, 1-based.
fn combo(n: usize, terms: &[(usize, i64)]) -> Root {
    let mut v = vec![0; n];
    for &(i, c) in terms {
        v[i - 1] += c;
    }
    v
}

/// Generator recipe in the coordinates of the given root system.
///
/// `C_1` stands for `sl_2` on a long root and is only used inside type C.
pub fn mingen_recipe(ty: CartanType, n: usize) -> Result<Vec<ExpWord>> {
    use CartanType::*;
    if ty == C && n == 1 {
        return Ok(vec![ExpWord::root(vec![1]), ExpWord::root(vec![-1])]);
    }
    let rs = RootSystem::new(ty, n)?;
    let a2_on = |images: Vec<Root>| -> Result<Vec<ExpWord>> {
        Ok(mingen_recipe(A, 2)?
            .iter()
            .map(|w| w.embed(&images))
            .collect())
    };
    let d4_on = |images: Vec<Root>| -> Result<Vec<ExpWord>> {
        Ok(mingen_recipe(D, 4)?
            .iter()
            .map(|w| w.embed(&images))
            .collect())
    };
    let words = match ty {
        A => {
            let mut w: Vec<ExpWord> = (0..n).map(|i| ExpWord::root(unit(n, i))).collect();
            w.push(ExpWord::root(neg(&rs.highest_root())));
            w
        }
        B if n == 2 => {
            let images = vec![unit(2, 1), unit(2, 0)];
            mingen_recipe(C, 2)?
                .iter()
                .map(|w| w.embed(&images))
                .collect()
        }
        B if n == 3 => {
            let mut w = a2_on(shifted(3, 0, 2))?;
            w.push(ExpWord::new(
                vec![eps(&rs, &[-1, -1, 0]), eps(&rs, &[1, 0, 0])],
                eps(&rs, &[-1, 1, 0]),
            ));
            w
        }
        B => {
            let mut images = shifted(n, 0, n - 1);
            images.push(combo(n, &[(n - 1, 1), (n, 2)]));
            let mut w: Vec<ExpWord> = mingen_recipe(D, n)?
                .iter()
                .map(|w| w.embed(&images))
                .collect();
            let e = |i: usize| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            };
            let e2 = eps(&rs, &e(1));
            let e12: Vec<i64> = e(0).iter().zip(e(1)).map(|(a, b)| a - b).collect();
            w.push(ExpWord::new(vec![e2], eps(&rs, &e12)));
            w
        }
        C => {
            let mut w: Vec<ExpWord> = mingen_recipe(C, n - 1)?
                .iter()
                .map(|w| w.embed(&shifted(n, 1, n - 1)))
                .collect();
            let mut p12 = vec![0; n];
            p12[0] = 1;
            p12[1] = 1;
            let mut two1 = vec![0; n];
            two1[0] = 2;
            let (p12, two1) = (eps(&rs, &p12), eps(&rs, &two1));
            w.push(ExpWord::new(vec![neg(&p12)], two1.clone()));
            w.push(ExpWord::new(vec![p12], neg(&two1)));
            w
        }
        D if n == 4 => {
            let mut w = a2_on(shifted(4, 0, 2))?;
            w.push(ExpWord::new(
                vec![
                    eps(&rs, &[1, 0, 0, 1]),
                    eps(&rs, &[0, 0, -1, 1]),
                    eps(&rs, &[-1, 0, -1, 0]),
                ],
                eps(&rs, &[0, 0, 1, -1]),
            ));
            w
        }
        D => {
            let mut w: Vec<ExpWord> = mingen_recipe(D, n - 1)?
                .iter()
                .map(|w| w.embed(&shifted(n, 1, n - 1)))
                .collect();
            w.push(ExpWord::new(vec![neg(&unit(n, 0))], unit(n, 0)));
            w
        }
        E => {
            // D_4 on alpha_3, alpha_4, alpha_5, alpha_2 with alpha_4 central
            let images = vec![unit(n, 2), unit(n, 3), unit(n, 4), unit(n, 1)];
            let mut w = d4_on(images)?;
            let c = |t: &[(usize, i64)]| combo(n, t);
            let d = match n {
                6 => ExpWord::new(
                    vec![
                        neg(&c(&[(1, 1), (3, 1), (4, 1)])),
                        c(&[(3, 1), (4, 1), (5, 1), (6, 1)]),
                        neg(&c(&[(1, 1), (2, 1), (3, 1), (4, 2), (5, 2), (6, 1)])),
                    ],
                    unit(n, 0),
                ),
                7 => ExpWord::new(
                    vec![
                        c(&[(2, 1), (3, 1), (4, 1), (5, 1), (6, 1), (7, 1)]),
                        neg(&c(&[(1, 1), (3, 1)])),
                        neg(&c(&[(1, 1), (2, 1), (3, 1), (4, 2), (5, 1), (6, 1)])),
                        c(&[(3, 1), (4, 1), (5, 1), (6, 1)]),
                        neg(&c(&[
                            (1, 1),
                            (2, 1),
                            (3, 1),
                            (4, 2),
                            (5, 2),
                            (6, 1),
                            (7, 1),
                        ])),
                    ],
                    unit(n, 0),
                ),
                _ => ExpWord::new(
                    [
                        "01111110",
                        "-11121110",
                        "01122111",
                        "-10111111",
                        "12343321",
                        "-23354321",
                    ]
                    .iter()
                    .map(|s| digits(s))
                    .collect(),
                    unit(n, 0),
                ),
            };
            w.push(d);
            w
        }
        F => {
            let images = vec![
                unit(4, 1),
                unit(4, 0),
                combo(4, &[(2, 1), (3, 2)]),
                combo(4, &[(2, 1), (3, 2), (4, 2)]),
            ];
            let mut w = d4_on(images)?;
            w.push(ExpWord::new(
                vec![
                    neg(&combo(4, &[(1, 1), (2, 2), (3, 3), (4, 1)])),
                    unit(4, 3),
                ],
                combo(4, &[(2, 1), (3, 2)]),
            ));
            w
        }
        G => vec![
            ExpWord::root(vec![0, 1]),
            ExpWord::root(vec![3, 1]),
            ExpWord::root(vec![-3, -2]),
            ExpWord::new(vec![vec![-2, -1]], vec![3, 2]),
        ],
    };
    for w in &words {
        for r in w.exps.iter().map(|(r, _)| r).chain([&w.target]) {
            if !rs.is_root(r) {
                return Err(Error::PreconditionNotMet(format!(
                    "recipe root {r:?} is not a root of {}",
                    rs.name()
                )));
            }
        }
    }
    Ok(words)
}

/// The claimed minimal number of extremal generators.
pub fn t_claimed(ty: CartanType, n: usize) -> usize {
    match ty {
        CartanType::A => n + 1,
        CartanType::B if n == 2 => 4,
        CartanType::B => n + 1,
        CartanType::C => 2 * n,
        CartanType::D => n,
        CartanType::E | CartanType::F => 5,
        CartanType::G => 4,
    }
}

/// Generators produced by the recipe, with the sign variant that was used.
#[derive(Clone, Debug)]
pub struct Mingen<S> {
    pub words: Vec<ExpWord>,
    pub elements: Vec<Vec<S>>,
    /// Bit `k` set means the `k`-th exp parameter (in word order) was negated.
    pub sign_variant: u64,
    pub generated_dim: usize,
}

/// Evaluate the recipe; if it does not generate, search sign flips of the exp parameters.
pub fn mingen_generators<S: Scalar>(c: &ChevalleyAlgebra<S>) -> Result<Mingen<S>> {
    let base = mingen_recipe(c.roots.ty, c.roots.rank)?;
    let nexp: usize = base.iter().map(|w| w.exps.len()).sum();
    let limit: u64 = 1 << nexp.min(12);
    let mut first: Option<Mingen<S>> = None;
    for mask in 0..limit {
        let mut words = base.clone();
        let mut bit = 0;
        for w in &mut words {
            for (_, s) in &mut w.exps {
                if mask >> bit & 1 == 1 {
                    *s = -*s;
                }
                bit += 1;
            }
        }
        let elements = words
            .iter()
            .map(|w| w.evaluate(c))
            .collect::<Result<Vec<_>>>()?;
        let generated_dim = c.algebra.subalgebra_generated(&elements).dim();
        let m = Mingen {
            words,
            elements,
            sign_variant: mask,
            generated_dim,
        };
        if generated_dim == c.dim() {
            return Ok(m);
        }
        first.get_or_insert(m);
    }
    Ok(first.expect("at least one variant"))
}

/// One row of the minimal generation table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MingenRow {
    #[serde(rename = "type")]
    pub ty: CartanType,
    pub rank: usize,
    pub char: u64,
    pub t_claimed: usize,
    pub lower_bound: usize,
    pub generation_ok: bool,
    pub dim: usize,
    pub sign_variant: u64,
}

/// The best lower bound available for the type: natural module and dimension.
pub fn lower_bound<S: Scalar>(
    ty: CartanType,
    n: usize,
    dim: usize,
    r: &mut Report,
) -> Result<usize> {
    let mut bound = dimension_lower_bound(dim);
    r.push("dimension bound", "", bound.to_string(), true);
    let natural = match ty {
        CartanType::B if n == 2 => Some((CartanType::C, 2)),
        CartanType::A | CartanType::B | CartanType::C | CartanType::D => Some((ty, n)),
        _ => None,
    };
    if let Some((nt, nn)) = natural {
        let rep = natural_representation::<S>(nt, nn)?;
        r.assert(
            format!("natural {nt}{nn} module is irreducible"),
            rep.irreducible,
        );
        r.assert(
            format!("long root matrix in {nt}{nn} is extremal"),
            rep.long_root_extremal,
        );
        r.push(
            "natural module bound",
            "",
            format!(
                "ceil({}/{}) = {}",
                rep.degree,
                rep.extremal_rank,
                rep.lower_bound()
            ),
            true,
        );
        if rep.irreducible && rep.long_root_extremal {
            bound = bound.max(rep.lower_bound());
        }
    }
    Ok(bound)
}

/// Certify the minimal number of extremal generators for one type over `S`.
pub fn mingen_report<S: Scalar>(c: &ChevalleyAlgebra<S>) -> Result<(MingenRow, Report)> {
    let (ty, n) = (c.roots.ty, c.roots.rank);
    let mut r = Report::new(format!(
        "minimal extremal generation of {} over {}",
        c.name(),
        S::field()
    ));
    let m = mingen_generators(c)?;
    let t = t_claimed(ty, n);
    r.expect("number of generators", t, m.elements.len());
    for (w, e) in m.words.iter().zip(&m.elements) {
        r.assert(
            format!("{} is extremal", w.describe(&c.roots)),
            is_extremal(&c.algebra, e),
        );
    }
    r.expect("generated dimension", c.dim(), m.generated_dim);
    r.push("sign variant", "0", m.sign_variant.to_string(), true);
    let lb = lower_bound::<S>(ty, n, c.dim(), &mut r)?;
    r.expect("lower bound", t, lb);
    let row = MingenRow {
        ty,
        rank: n,
        char: S::CHARACTERISTIC,
        t_claimed: t,
        lower_bound: lb,
        generation_ok: m.generated_dim == c.dim(),
        dim: c.dim(),
        sign_variant: m.sign_variant,
    };
    Ok((row, r))
}

/// Extremal elements spanning the algebra: the closure of the extremal root
/// elements and their images under the exponentials of the remaining root
/// elements. When that falls short over a small field, the extremal points
/// of the positive part `n+` are added as further seeds.
pub fn extremal_spanning_set<S: Scalar>(c: &ChevalleyAlgebra<S>) -> Vec<Vec<S>> {
    let l = &c.algebra;
    let nr = c.roots.roots().len();
    let mut seeds: Vec<Vec<S>> = (0..nr)
        .map(|i| l.basis_vector(i))
        .filter(|v| is_extremal(l, v))
        .collect();
    // images of extremal root elements under exp of the other root elements
    let images: Vec<Vec<S>> = (0..nr)
        .filter(|&i| !is_extremal(l, &l.basis_vector(i)))
        .flat_map(|i| seeds.iter().map(move |x| (i, x)))
        .filter_map(|(i, x)| nilpotent_exp_apply(l, &l.basis_vector(i), &S::one(), x).ok())
        .filter(|v| is_extremal(l, v))
        .collect();
    seeds.extend(images);
    let spanning = extremal_spanning_closure(l, &seeds);
    if spanning.len() == l.dim() {
        return spanning;
    }
    let Some(elements) = S::elements() else {
        return spanning;
    };
    let npos = c.roots.num_positive();
    let points = (elements.len().pow(npos as u32) - 1) / (elements.len() - 1);
    if points > ABELIAN_SEARCH_BUDGET {
        return spanning;
    }
    let pos: Vec<Vec<S>> = (0..npos).map(|i| l.basis_vector(i)).collect();
    let nplus = Subspace::span(l.dim(), &pos);
    seeds.extend(
        projective_points(&nplus, &elements)
            .into_iter()
            .filter(|v| is_extremal(l, v)),
    );
    extremal_spanning_closure(l, &seeds)
}

/// The radical chain of a Chevalley algebra, with `f` defined by
/// [`extremal_spanning_set`].
pub fn radicals_report<S: Scalar>(c: &ChevalleyAlgebra<S>) -> Result<(Report, RadicalChain<S>)> {
    let l = &c.algebra;
    let spanning = extremal_spanning_set(c);
    let witnesses: Vec<Vec<S>> = (0..c.roots.roots().len())
        .map(|i| l.basis_vector(i))
        .filter(|v| is_sandwich(l, v))
        .collect();
    let chain = RadicalChain::compute(l, &witnesses, &spanning, &c.cartan_basis())?;
    let mut r = Report::new(format!("radicals of {} over {}", c.name(), S::field()));
    r.push("dim L", "", l.dim().to_string(), true);
    r.push("dim Rad(L)", "", chain.rad.dim().to_string(), true);
    r.push("dim Rad(f)", "", chain.rad_f.dim().to_string(), true);
    r.push(
        "dim Rad(kappa)",
        "",
        chain.rad_kappa.dim().to_string(),
        true,
    );
    r.absorb("chain", chain.report());
    if S::CHARACTERISTIC == 0 {
        r.assert("Rad(f) = Rad(kappa)", chain.rad_f == chain.rad_kappa);
    }
    if chain.rad_f.dim() > 0 && chain.rad_f.dim() < l.dim() {
        let f = extremal_form(l, &spanning)?;
        let x = c.root_element(&c.roots.highest_root())?;
        let mut ok = true;
        for y in chain.rad_f.basis() {
            ok &= fourth_power_check(l, &f, &x, y)?.pass();
        }
        r.assert(
            "(ad_[x,y])^4 = 0 for x = x_highest, y in a basis of Rad(f)",
            ok,
        );
    }
    Ok((r, chain))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Gf3, Gf5, Q};

    #[test]
    fn dimensions_and_jacobi() {
        for (ty, n, d) in [
            (CartanType::A, 1, 3),
            (CartanType::B, 3, 21),
            (CartanType::C, 3, 21),
            (CartanType::D, 4, 28),
            (CartanType::G, 2, 14),
            (CartanType::F, 4, 52),
        ] {
            assert_eq!(chevalley_algebra::<Q>(ty, n).unwrap().dim(), d);
        }
        assert_eq!(
            chevalley_algebra::<Gf3>(CartanType::G, 2).unwrap().dim(),
            14
        );
        let (r, chain) =
            radicals_report(&chevalley_algebra::<Gf3>(CartanType::G, 2).unwrap()).unwrap();
        assert!(r.pass(), "{r}");
        assert_eq!((chain.rad.dim(), chain.rad_f.dim()), (0, 7));
    }

    #[test]
    fn extremality() {
        for (ty, n) in [(CartanType::A, 3), (CartanType::B, 3), (CartanType::G, 2)] {
            let c = chevalley_algebra::<Gf5>(ty, n).unwrap();
            let r = long_root_extremality_check(&c);
            assert!(r.pass(), "{r}");
        }
    }

    #[test]
    fn decompositions() {
        for ty in [CartanType::B, CartanType::G] {
            let r = short_root_decomposition_check::<Q>(ty).unwrap();
            assert!(r.pass(), "{r}");
        }
    }

    #[test]
    fn exp_composition() {
        let c = chevalley_algebra::<Q>(CartanType::A, 2).unwrap();
        let x = c.algebra.basis_vector(0);
        let a = exp_automorphism(&c.algebra, &x, &Q::from_i64(2)).unwrap();
        let b = exp_automorphism(&c.algebra, &x, &Q::from_i64(3)).unwrap();
        let ab = exp_automorphism(&c.algebra, &x, &Q::from_i64(5)).unwrap();
        assert_eq!(a.compose(&b), ab);
        assert_eq!(
            exp_automorphism(&c.algebra, &x, &Q::from_i64(0))
                .unwrap()
                .matrix,
            Matrix::identity(c.dim())
        );
    }

    #[test]
    fn small_bounds() {
        assert_eq!(dimension_lower_bound(3), 2);
        assert_eq!(dimension_lower_bound(14), 4);
        assert_eq!(dimension_lower_bound(52), 5);
        let rep = natural_representation::<Q>(CartanType::B, 3).unwrap();
        assert_eq!(
            (rep.degree, rep.extremal_rank, rep.lower_bound()),
            (7, 2, 4)
        );
        assert!(rep.irreducible && rep.long_root_extremal);
        assert_eq!(rep.algebra.dim(), 21);
    }

    #[test]
    fn small_mingen() {
        for (ty, n) in [
            (CartanType::A, 2),
            (CartanType::B, 2),
            (CartanType::B, 3),
            (CartanType::C, 3),
            (CartanType::G, 2),
        ] {
            let (row, r) = mingen_report(&chevalley_algebra::<Q>(ty, n).unwrap()).unwrap();
            assert!(r.pass() && row.generation_ok, "{r}");
        }
    }
}
