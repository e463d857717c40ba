//! Lie algebras generated by two or three extremal elements.
//!
//! Three extremal generators `x, y, z` are described by a triangle: the edge
//! labels `f(x,y)`, `f(x,z)`, `f(y,z)` and the central label `f(x,[y,z])`.
//! Exp-transforms and scalings bring the central label to zero and the
//! nonzero edges to `-2`; the universal algebra with those labels is then
//! built on the spanning monomials
//! `x, y, z, [x,y], [x,z], [y,z], [x,[y,z]], [y,[x,z]]`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::liealg::{abelian, extremal_functional, heisenberg, sl2, LieAlgebra};
use crate::linalg::{dot, is_zero_vec, scaled, sub_vec, unit_vec, Matrix, Subspace};
use crate::nilquot::sandwich_algebra;
use crate::report::Report;
use crate::scalars::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TwoGenCase {
    Abelian,
    Heisenberg,
    Sl2,
}

/// An algebra generated by two extremal elements, with the generators.
#[derive(Clone, Debug)]
pub struct TwoGen<S> {
    pub case: TwoGenCase,
    pub algebra: LieAlgebra<S>,
    pub x: Vec<S>,
    pub y: Vec<S>,
}

/// The three possible algebras generated by extremal `x, y` with `f(x,y) = f_xy`.
pub fn two_gen_classify<S: Scalar>(f_xy: &S, bracket_nonzero: bool) -> TwoGen<S> {
    if !f_xy.is_zero() {
        // f(e, f) = -2 in the basis e, h, f
        let l = sl2::<S>();
        let y = scaled(&l.basis_vector(2), &(f_xy.clone() / S::from_i64(-2)));
        return TwoGen {
            case: TwoGenCase::Sl2,
            x: l.basis_vector(0),
            y,
            algebra: l,
        };
    }
    if bracket_nonzero {
        let l = heisenberg::<S>();
        return TwoGen {
            case: TwoGenCase::Heisenberg,
            x: l.basis_vector(0),
            y: l.basis_vector(1),
            algebra: l,
        };
    }
    let l = abelian::<S>(2);
    TwoGen {
        case: TwoGenCase::Abelian,
        x: l.basis_vector(0),
        y: l.basis_vector(1),
        algebra: l,
    }
}

/// Edge and central labels of a triangle of extremal elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleParams<S> {
    pub edge_xy: S,
    pub edge_xz: S,
    pub edge_yz: S,
    /// `f(x,[y,z])`, invariant under cyclic permutations.
    pub central: S,
}

impl<S: Scalar> TriangleParams<S> {
    pub fn new(edge_xy: S, edge_xz: S, edge_yz: S, central: S) -> Self {
        TriangleParams {
            edge_xy,
            edge_xz,
            edge_yz,
            central,
        }
    }

    pub fn from_i64(xy: i64, xz: i64, yz: i64, central: i64) -> Self {
        Self::new(
            S::from_i64(xy),
            S::from_i64(xz),
            S::from_i64(yz),
            S::from_i64(central),
        )
    }

    /// `f(i, j)` for distinct vertices `0, 1, 2`.
    pub fn edge(&self, i: usize, j: usize) -> &S {
        match (i.min(j), i.max(j)) {
            (0, 1) => &self.edge_xy,
            (0, 2) => &self.edge_xz,
            (1, 2) => &self.edge_yz,
            _ => panic!("edge needs two distinct vertices"),
        }
    }

    fn edge_mut(&mut self, i: usize, j: usize) -> &mut S {
        match (i.min(j), i.max(j)) {
            (0, 1) => &mut self.edge_xy,
            (0, 2) => &mut self.edge_xz,
            (1, 2) => &mut self.edge_yz,
            _ => panic!("edge needs two distinct vertices"),
        }
    }

    /// `f(p, [q, r])` for a permutation `(p, q, r)` of the vertices.
    pub fn oriented_central(&self, p: usize, q: usize, r: usize) -> S {
        if is_cyclic(p, q, r) {
            self.central.clone()
        } else {
            -self.central.clone()
        }
    }

    fn set_oriented_central(&mut self, p: usize, q: usize, r: usize, v: S) {
        self.central = if is_cyclic(p, q, r) { v } else { -v };
    }

    pub fn nonzero_edges(&self) -> usize {
        [&self.edge_xy, &self.edge_xz, &self.edge_yz]
            .iter()
            .filter(|e| !e.is_zero())
            .count()
    }

    pub fn to_strings(&self) -> [String; 4] {
        [&self.edge_xy, &self.edge_xz, &self.edge_yz, &self.central].map(|v| v.to_repr())
    }
}

impl<S: Scalar> fmt::Display for TriangleParams<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "edges ({}, {}, {}), central {}",
            self.edge_xy, self.edge_xz, self.edge_yz, self.central
        )
    }
}

fn is_cyclic(p: usize, q: usize, r: usize) -> bool {
    matches!((p, q, r), (0, 1, 2) | (1, 2, 0) | (2, 0, 1))
}

fn third(p: usize, q: usize) -> usize {
    3 - p - q
}

/// Labels of the triple where `target` is replaced by `exp(base, s) target`.
pub fn exp_transform_general<S: Scalar>(
    p: &TriangleParams<S>,
    base: usize,
    target: usize,
    s: &S,
) -> TriangleParams<S> {
    assert!(
        base != target && base < 3 && target < 3,
        "base and target must be distinct vertices"
    );
    let (b, t, o) = (base, target, third(base, target));
    let mut out = p.clone();
    let c = p.oriented_central(b, o, t);
    let half = S::half();
    *out.edge_mut(o, t) = p.edge(o, t).clone() - s.clone() * c.clone()
        + half * s.clone() * s.clone() * p.edge(b, o).clone() * p.edge(b, t).clone();
    out.set_oriented_central(
        b,
        o,
        t,
        c - s.clone() * p.edge(b, t).clone() * p.edge(b, o).clone(),
    );
    out
}

/// Labels of `(x, y, exp(x,s) z)`.
pub fn exp_transform_params<S: Scalar>(p: &TriangleParams<S>, s: &S) -> TriangleParams<S> {
    exp_transform_general(p, 0, 2, s)
}

/// Labels of `(alpha x, beta y, gamma z)`; the central label must be zero.
pub fn scale_params<S: Scalar>(
    p: &TriangleParams<S>,
    alpha: &S,
    beta: &S,
    gamma: &S,
) -> Result<TriangleParams<S>> {
    if !p.central.is_zero() {
        return Err(Error::CentralNotZero);
    }
    if alpha.is_zero() || beta.is_zero() || gamma.is_zero() {
        return Err(Error::ZeroElement);
    }
    Ok(TriangleParams::new(
        alpha.clone() * beta.clone() * p.edge_xy.clone(),
        alpha.clone() * gamma.clone() * p.edge_xz.clone(),
        beta.clone() * gamma.clone() * p.edge_yz.clone(),
        S::zero(),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormStep<S> {
    /// Replace vertex `target` by `exp(base, s) target`.
    Exp {
        base: usize,
        target: usize,
        s: S,
    },
    Scale {
        alpha: S,
        beta: S,
        gamma: S,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationTrace<S> {
    pub steps: Vec<NormStep<S>>,
    pub final_params: TriangleParams<S>,
    /// Number of nonzero edges once the central label is zero.
    pub case: usize,
    /// Set when the scaling needs a square root of this element, which the field lacks.
    pub extension_required: Option<S>,
}

impl<S: Scalar> NormalizationTrace<S> {
    pub fn replay(&self, start: &TriangleParams<S>) -> Result<TriangleParams<S>> {
        let mut p = start.clone();
        for step in &self.steps {
            p = match step {
                NormStep::Exp { base, target, s } => exp_transform_general(&p, *base, *target, s),
                NormStep::Scale { alpha, beta, gamma } => scale_params(&p, alpha, beta, gamma)?,
            };
        }
        Ok(p)
    }
}

/// Bring the central label to zero and the nonzero edges to `-2`.
pub fn normalize<S: Scalar>(start: &TriangleParams<S>) -> NormalizationTrace<S> {
    let mut p = start.clone();
    let mut steps = Vec::new();
    let pairs = [(0, 1), (0, 2), (1, 2)];
    while !p.central.is_zero() {
        // a vertex with both edges nonzero kills the central label in one step
        let hub = (0..3).find(|&v| {
            pairs
                .iter()
                .filter(|(i, j)| (*i == v || *j == v) && !p.edge(*i, *j).is_zero())
                .count()
                == 2
        });
        let (base, target, s) = match hub {
            Some(b) => {
                let t = (b + 1) % 3;
                let o = third(b, t);
                let s = p.oriented_central(b, o, t) / (p.edge(b, t).clone() * p.edge(b, o).clone());
                (b, t, s)
            }
            None => {
                // make the edge opposite to `base` nonzero, keeping the existing one
                let b = match pairs.iter().find(|(i, j)| !p.edge(*i, *j).is_zero()) {
                    Some(&(i, _)) => i,
                    None => 0,
                };
                let t = if p.edge(b, (b + 1) % 3).is_zero() {
                    (b + 1) % 3
                } else {
                    (b + 2) % 3
                };
                (b, t, S::one())
            }
        };
        p = exp_transform_general(&p, base, target, &s);
        steps.push(NormStep::Exp { base, target, s });
    }
    let case = p.nonzero_edges();
    let two = S::from_i64(-2);
    let one = S::one();
    let mut extension_required = None;
    let scale = match case {
        0 => None,
        1 => {
            let (i, j) = pairs
                .iter()
                .copied()
                .find(|(i, j)| !p.edge(*i, *j).is_zero())
                .expect("one edge");
            let mut f = [one.clone(), one.clone(), one.clone()];
            f[i] = two.clone() / p.edge(i, j).clone();
            Some(f)
        }
        2 => {
            let hub = (0..3)
                .find(|&v| {
                    pairs
                        .iter()
                        .all(|(i, j)| (*i != v && *j != v) || !p.edge(*i, *j).is_zero())
                })
                .expect("hub");
            let mut f = [one.clone(), one.clone(), one.clone()];
            for w in (0..3).filter(|&w| w != hub) {
                f[w] = two.clone() / p.edge(hub, w).clone();
            }
            Some(f)
        }
        _ => {
            let (a, b, c) = (p.edge_xy.clone(), p.edge_xz.clone(), p.edge_yz.clone());
            let square = two.clone() * c / (a.clone() * b.clone());
            match square.sqrt() {
                None => {
                    extension_required = Some(square);
                    None
                }
                Some(alpha) => {
                    let beta = two.clone() / (alpha.clone() * a);
                    let gamma = two.clone() / (alpha.clone() * b);
                    Some([alpha, beta, gamma])
                }
            }
        }
    };
    if let Some([alpha, beta, gamma]) = scale {
        if !(alpha.is_one() && beta.is_one() && gamma.is_one()) {
            p = scale_params(&p, &alpha, &beta, &gamma).expect("central label is zero");
            steps.push(NormStep::Scale { alpha, beta, gamma });
        }
    }
    NormalizationTrace {
        steps,
        final_params: p,
        case,
        extension_required,
    }
}

/// Indices of the spanning monomials.
pub mod basis {
    pub const X: usize = 0;
    pub const Y: usize = 1;
    pub const Z: usize = 2;
    pub const XY: usize = 3;
    pub const XZ: usize = 4;
    pub const YZ: usize = 5;
    /// `[x,[y,z]]`
    pub const XYZ: usize = 6;
    /// `[y,[x,z]]`
    pub const YXZ: usize = 7;
    pub const LABELS: [&str; 8] = [
        "x",
        "y",
        "z",
        "[x,y]",
        "[x,z]",
        "[y,z]",
        "[x,[y,z]]",
        "[y,[x,z]]",
    ];
    /// `(u, v)` with `b = [u, v]` and `u` a generator.
    pub const SPLIT: [Option<(usize, usize)>; 8] = [
        None,
        None,
        None,
        Some((X, Y)),
        Some((X, Z)),
        Some((Y, Z)),
        Some((X, YZ)),
        Some((Y, XZ)),
    ];
}

/// Rewriting rule used for an entry of a generator action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Rule {
    Antisymmetry,
    Definition,
    Extremality,
    /// `2[x,[y,[x,z]]] = f_x([y,z])x - f_x(z)[x,y] - f_x(y)[x,z]`
    SecondIdentity,
    Jacobi,
}

type Entry<S> = (Vec<(usize, S)>, Rule);

/// `ad_g b` for a generator `g` and a spanning monomial `b`, in terms of the labels.
fn generator_action<S: Scalar>(p: &TriangleParams<S>, g: usize, b: usize) -> Option<Entry<S>> {
    use basis::*;
    let (a, bb, c, d) = (
        p.edge_xy.clone(),
        p.edge_xz.clone(),
        p.edge_yz.clone(),
        p.central.clone(),
    );
    let h = S::half();
    let one = S::one();
    let m = |v: S| -v;
    Some(match (g, b) {
        (X, X) | (Y, Y) | (Z, Z) => (vec![], Rule::Antisymmetry),
        (X, Y) => (vec![(XY, one)], Rule::Definition),
        (X, Z) => (vec![(XZ, one)], Rule::Definition),
        (Y, Z) => (vec![(YZ, one)], Rule::Definition),
        (Y, X) => (vec![(XY, m(one))], Rule::Antisymmetry),
        (Z, X) => (vec![(XZ, m(one))], Rule::Antisymmetry),
        (Z, Y) => (vec![(YZ, m(one))], Rule::Antisymmetry),
        (X, XY) => (vec![(X, a)], Rule::Extremality),
        (X, XZ) => (vec![(X, bb)], Rule::Extremality),
        (X, YZ) => (vec![(XYZ, one)], Rule::Definition),
        (X, XYZ) => (vec![(X, d)], Rule::Extremality),
        (X, YXZ) => (
            vec![(X, h.clone() * d), (XY, m(h.clone() * bb)), (XZ, m(h * a))],
            Rule::SecondIdentity,
        ),
        (Y, XY) => (vec![(Y, m(a))], Rule::Extremality),
        (Y, XZ) => (vec![(YXZ, one)], Rule::Definition),
        (Y, YZ) => (vec![(Y, c)], Rule::Extremality),
        // f(y,[x,z]) = -d
        (Y, XYZ) => (
            vec![(Y, m(h.clone() * d)), (XY, h.clone() * c), (YZ, m(h * a))],
            Rule::SecondIdentity,
        ),
        (Y, YXZ) => (vec![(Y, m(d))], Rule::Extremality),
        (Z, XY) => (vec![(XYZ, m(one.clone())), (YXZ, one)], Rule::Jacobi),
        (Z, XZ) => (vec![(Z, m(bb))], Rule::Extremality),
        (Z, YZ) => (vec![(Z, m(c))], Rule::Extremality),
        (Z, XYZ) => (
            vec![
                (Z, m(h.clone() * d)),
                (XZ, m(h.clone() * c)),
                (YZ, m(h * bb)),
            ],
            Rule::SecondIdentity,
        ),
        (Z, YXZ) => (
            vec![(Z, h.clone() * d), (YZ, m(h.clone() * bb)), (XZ, m(h * c))],
            Rule::SecondIdentity,
        ),
        _ => return None,
    })
}

/// The universal algebra on three extremal generators with the given labels.
#[derive(Clone, Debug)]
pub struct ThreeGen<S> {
    pub params: TriangleParams<S>,
    pub algebra: LieAlgebra<S>,
    /// Rule used for `ad_g b`, indexed `[g][b]`.
    pub rules: Vec<Vec<Rule>>,
}

fn apply_action<S: Scalar>(act: &[Vec<Vec<(usize, S)>>], g: usize, v: &[S]) -> Vec<S> {
    let mut out: Vec<S> = vec![S::zero(); 8];
    for (b, coef) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (k, c) in &act[g][b] {
            out[*k] = out[*k].clone() + coef.clone() * c.clone();
        }
    }
    out
}

/// `[b, v]` for a spanning monomial `b`, by `[[u,w],v] = [u,[w,v]] - [w,[u,v]]`.
fn monomial_action<S: Scalar>(act: &[Vec<Vec<(usize, S)>>], b: usize, v: &[S]) -> Vec<S> {
    match basis::SPLIT[b] {
        None => apply_action(act, b, v),
        Some((u, w)) => {
            let first = apply_action(act, u, &monomial_action(act, w, v));
            let second = monomial_action(act, w, &apply_action(act, u, v));
            sub_vec(&first, &second)
        }
    }
}

/// Build the 8-dimensional algebra by rewriting every bracket of spanning monomials.
pub fn build_m<S: Scalar>(p: &TriangleParams<S>) -> Result<ThreeGen<S>> {
    if S::CHARACTERISTIC == 2 {
        return Err(Error::CharacteristicTwoUnsupported);
    }
    if !p.central.is_zero() {
        return Err(Error::CentralNotZero);
    }
    let mut act: Vec<Vec<Vec<(usize, S)>>> = vec![Vec::new(); 3];
    let mut rules = vec![Vec::new(); 3];
    for g in 0..3 {
        for b in 0..8 {
            let (v, rule) = generator_action(p, g, b).ok_or_else(|| {
                Error::RewriteIncomplete(basis::LABELS[g].into(), basis::LABELS[b].into())
            })?;
            act[g].push(v);
            rules[g].push(rule);
        }
    }
    let mut failure = None;
    let labels = basis::LABELS.iter().map(|s| s.to_string()).collect();
    let algebra = LieAlgebra::from_upper(labels, |i, j| {
        let fwd = monomial_action(&act, i, &unit_vec(8, j));
        let back = monomial_action(&act, j, &unit_vec(8, i));
        if !is_zero_vec(&crate::linalg::add_vec(&fwd, &back)) {
            failure.get_or_insert((i, j));
        }
        crate::liealg::sparse_from_dense(&fwd)
    });
    if let Some((i, j)) = failure {
        return Err(Error::RewriteIncomplete(
            basis::LABELS[i].into(),
            basis::LABELS[j].into(),
        ));
    }
    Ok(ThreeGen {
        params: p.clone(),
        algebra: algebra?,
        rules,
    })
}

/// The labels of three extremal elements of `l`.
pub fn triangle_params_of<S: Scalar>(
    l: &LieAlgebra<S>,
    x: &[S],
    y: &[S],
    z: &[S],
) -> Result<TriangleParams<S>> {
    let fx = extremal_functional(l, x)?.ok_or(Error::NotExtremal(0))?;
    let fy = extremal_functional(l, y)?.ok_or(Error::NotExtremal(1))?;
    extremal_functional(l, z)?.ok_or(Error::NotExtremal(2))?;
    Ok(TriangleParams::new(
        dot(&fx, y),
        dot(&fx, z),
        dot(&fy, z),
        dot(&fx, &l.bracket(y, z)),
    ))
}

/// The 3x3 matrices generating `sl3` with all edge labels `-2`.
pub fn sl3_example<S: Scalar>() -> [Matrix<S>; 3] {
    let m = |rows: [[i64; 3]; 3]| Matrix::from_rows(&rows.map(|r| r.map(S::from_i64).to_vec()));
    [
        m([[0, 1, 0], [0, 0, 0], [0, 0, 0]]),
        m([[0, 0, 0], [1, 0, 0], [0, 0, 0]]),
        m([[1, 1, 1], [1, 1, 1], [-2, -2, -2]]),
    ]
}

/// The spanning monomials evaluated on three matrices.
pub fn monomial_matrices<S: Scalar>(gens: &[Matrix<S>; 3]) -> Vec<Matrix<S>> {
    let br = |a: &Matrix<S>, b: &Matrix<S>| a.mul(b).sub(&b.mul(a));
    let [x, y, z] = gens;
    let (xy, xz, yz) = (br(x, y), br(x, z), br(y, z));
    let xyz = br(x, &yz);
    let yxz = br(y, &xz);
    vec![x.clone(), y.clone(), z.clone(), xy, xz, yz, xyz, yxz]
}

/// Check the identities of the rewriting system on the built algebra.
pub fn identity_checks<S: Scalar>(t: &ThreeGen<S>) -> Result<Report> {
    let l = &t.algebra;
    let n = l.dim();
    let b = |i: usize| l.basis_vector(i);
    let br = |u: &[S], v: &[S]| l.bracket(u, v);
    let gens = [b(0), b(1), b(2)];
    let mut fs = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        fs.push(extremal_functional(l, g)?.ok_or(Error::NotExtremal(i))?);
    }
    let mut r = Report::new(format!("rewriting identities for {}", t.params));
    let got = triangle_params_of(l, &gens[0], &gens[1], &gens[2])?;
    r.assert(
        "generators are extremal with the prescribed labels",
        got == t.params,
    );
    let comb = |terms: &[(S, Vec<S>)]| {
        let mut out = l.zero();
        for (c, v) in terms {
            crate::linalg::axpy(&mut out, c, v);
        }
        out
    };
    let two = S::from_i64(2);
    let (mut first, mut second) = (true, true);
    for (gi, x) in gens.iter().enumerate() {
        let f = |v: &[S]| dot(&fs[gi], v);
        for i in 0..n {
            for j in 0..n {
                let (y, z) = (b(i), b(j));
                let lhs = scaled(&br(&br(x, &y), &br(x, &z)), &two);
                let rhs = comb(&[
                    (f(&br(&y, &z)), x.clone()),
                    (f(&z), br(x, &y)),
                    (-f(&y), br(x, &z)),
                ]);
                first &= lhs == rhs;
                let lhs = scaled(&br(x, &br(&y, &br(x, &z))), &two);
                let rhs = comb(&[
                    (f(&br(&y, &z)), x.clone()),
                    (-f(&z), br(x, &y)),
                    (-f(&y), br(x, &z)),
                ]);
                second &= lhs == rhs;
            }
        }
    }
    r.assert("2[[x,y],[x,z]] identity on all basis pairs", first);
    r.assert("2[x,[y,[x,z]]] identity on all basis pairs", second);
    let (mut rela, mut relb) = (true, true);
    for xi in 0..3 {
        for yi in (0..3).filter(|&k| k != xi) {
            let (x, y) = (&gens[xi], &gens[yi]);
            let fx = |v: &[S]| dot(&fs[xi], v);
            let fy = |v: &[S]| dot(&fs[yi], v);
            let xy = br(x, y);
            for k in 0..n {
                let z = b(k);
                let yz = br(y, &z);
                let lhs = scaled(&br(&xy, &br(x, &yz)), &two);
                let rhs = comb(&[
                    (fy(&z) * fx(y), x.clone()),
                    (fx(&yz), xy.clone()),
                    (-fx(y), br(x, &yz)),
                ]);
                rela &= lhs == rhs;
                let lhs = scaled(&br(&xy, &br(&xy, &z)), &two);
                let xz = br(x, &z);
                let rhs = comb(&[
                    (fx(&yz) - fy(&xz), xy.clone()),
                    (fx(y) * fx(&z), y.clone()),
                    (fx(y) * fy(&z), x.clone()),
                    (-fx(y), br(y, &xz)),
                    (-fx(y), br(x, &yz)),
                ]);
                relb &= lhs == rhs;
            }
        }
    }
    r.assert("2[[x,y],[x,[y,z]]] identity", rela);
    r.assert("2[[x,y],[[x,y],z]] identity", relb);
    let [x, y, z] = &gens;
    let (fx, fy) = (|v: &[S]| dot(&fs[0], v), |v: &[S]| dot(&fs[1], v));
    let yz = br(y, z);
    let half = S::half();
    let lhs = scaled(&br(&br(x, &yz), &br(y, &br(x, z))), &two);
    let rhs = comb(&[
        (-half.clone() * fy(z) * fx(&yz), x.clone()),
        (-half.clone() * fx(&yz) * fx(z), y.clone()),
        (-half * fx(&yz) * fx(y), z.clone()),
        (-fy(z) * fx(z), br(x, y)),
        (fy(z) * fx(y), br(x, z)),
        (-fx(z) * fx(y), yz.clone()),
    ]);
    r.assert("2[[x,[y,z]],[y,[x,z]]] identity", lhs == rhs);
    r.assert("Jacobi identity on all basis triples", l.validate().is_ok());
    Ok(r)
}

/// A solvable ideal with a perfect 3-dimensional quotient is the solvable radical.
fn radical_report<S: Scalar>(l: &LieAlgebra<S>, rad: &Subspace<S>, r: &mut Report) {
    r.expect("radical dimension", 5, rad.dim());
    r.assert("radical is an ideal", l.is_ideal(rad));
    r.assert("radical is solvable", l.subspace_is_solvable(rad));
    let q = l.quotient(rad);
    r.assert(
        "quotient by the radical is perfect",
        q.algebra.derived_algebra().dim() == q.algebra.dim(),
    );
    if S::CHARACTERISTIC == 0 {
        let computed = l.solvable_radical(&[]).map(|s| s == *rad).unwrap_or(false);
        r.assert("agrees with the computed solvable radical", computed);
    }
}

/// Whether some line in the span of `basis` is invariant under every `ops` element.
fn has_invariant_line<S: Scalar>(l: &LieAlgebra<S>, ops: &[Vec<S>], basis: &[Vec<S>]) -> bool {
    let sp = Subspace::span(l.dim(), basis);
    let restrict = |op: &[S]| -> Option<Matrix<S>> {
        let cols: Option<Vec<Vec<S>>> = sp
            .basis()
            .iter()
            .map(|v| sp.coordinates(&l.bracket(op, v)))
            .collect();
        cols.map(|c| Matrix::from_cols(&c, sp.dim()))
    };
    let mats: Vec<Matrix<S>> = match ops.iter().map(|o| restrict(o)).collect() {
        Some(m) => m,
        None => return false,
    };
    let Some(a) = mats.iter().find(|m| {
        let scalar = Matrix::identity(2).scale(m.get(0, 0));
        **m != scalar
    }) else {
        return true;
    };
    // eigenlines of a non-scalar 2x2 matrix
    let tr = a.trace();
    let det = a.get(0, 0).clone() * a.get(1, 1).clone() - a.get(0, 1).clone() * a.get(1, 0).clone();
    let Some(root) = (tr.clone() * tr.clone() - S::from_i64(4) * det).sqrt() else {
        return false;
    };
    [root.clone(), -root].iter().any(|sq| {
        let lambda = (tr.clone() + sq.clone()) * S::half();
        let k = a.sub(&Matrix::identity(2).scale(&lambda)).kernel();
        k.first().is_some_and(|v| {
            mats.iter().all(|m| {
                let w = m.mul_vec(v);
                Subspace::span(2, std::slice::from_ref(v)).contains(&w)
            })
        })
    })
}

/// Structural claims for the normalized case with the given number of edges.
pub fn verify_3gen_structure<S: Scalar>(t: &ThreeGen<S>, case: usize) -> Result<Report> {
    use basis::*;
    let l = &t.algebra;
    let n = l.dim();
    let b = |i: usize| l.basis_vector(i);
    let span = |vs: &[Vec<S>]| Subspace::span(n, vs);
    let comb = |terms: &[(i64, usize)]| {
        let mut out = l.zero();
        for (c, i) in terms {
            out[*i] = out[*i].clone() + S::from_i64(*c);
        }
        out
    };
    let half_comb = |terms: &[(i64, i64, usize)]| {
        let mut out = l.zero();
        for (p, q, i) in terms {
            out[*i] = out[*i].clone() + S::from_ratio(*p, *q);
        }
        out
    };
    let mut r = Report::new(format!("three-generator case {case}"));
    r.expect("dimension", 8, n);
    r.expect("number of nonzero edges", case, t.params.nonzero_edges());
    let derived = l.derived_algebra();
    let center = l.center();
    let s_alg = span(&[b(X), b(XY), b(Y)]);
    let sl2_check = |r: &mut Report| {
        r.assert(
            "S = kx + k[x,y] + ky is a subalgebra",
            l.is_subalgebra(&s_alg),
        );
        r.assert("S is perfect", l.bracket_subspaces(&s_alg, &s_alg) == s_alg);
    };
    match case {
        0 => {
            let z = span(&[b(XYZ), b(YXZ)]);
            r.assert("nilpotent", l.is_nilpotent());
            r.assert("center is k[x,[y,z]] + k[y,[x,z]]", center == z);
            r.assert(
                "[[M,M],M] equals the center",
                l.bracket_subspaces(&derived, &l.whole()) == z,
            );
            r.assert(
                "[M,M] = k[x,y] + k[x,z] + k[y,z] + Z",
                derived == span(&[b(XY), b(XZ), b(YZ), b(XYZ), b(YXZ)]),
            );
            let lcs: Vec<usize> = l.lower_central_series().iter().map(|s| s.dim()).collect();
            r.expect(
                "lower central series dimensions",
                "[8, 5, 2, 0]".to_string(),
                format!("{lcs:?}"),
            );
        }
        1 => {
            let zc = comb(&[(1, Z), (-1, XYZ), (-1, YXZ)]);
            r.assert(
                "center is k(z - [x,[y,z]] - [y,[x,z]])",
                center == span(std::slice::from_ref(&zc)),
            );
            r.assert(
                "M = Z + [M,M] directly",
                derived.dim() == 7 && !derived.contains(&zc),
            );
            let rad = span(&[b(Z), b(XZ), b(YZ), b(XYZ), b(YXZ)]);
            radical_report(l, &rad, &mut r);
            sl2_check(&mut r);
            r.assert("M = S + R directly", s_alg.sum(&rad).dim() == 8);
            let ops = [b(X), b(Y), b(XY)];
            for (name, pair) in [
                ("k[x,z] + k[y,[x,z]]", [b(XZ), b(YXZ)]),
                ("k[y,z] + k[x,[y,z]]", [b(YZ), b(XYZ)]),
            ] {
                let m = span(&pair);
                let inv = ops
                    .iter()
                    .all(|o| pair.iter().all(|v| m.contains(&l.bracket(o, v))));
                r.assert(format!("{name} is an S-module"), inv);
                r.assert(
                    format!("{name} is irreducible"),
                    !has_invariant_line(l, &ops, &pair),
                );
            }
        }
        2 => {
            let rad = span(&[
                half_comb(&[(1, 1, Y), (-1, 2, YXZ)]),
                half_comb(&[(1, 1, Z), (-1, 2, YXZ)]),
                comb(&[(1, XY), (-1, XZ)]),
                b(YZ),
                b(XYZ),
            ]);
            radical_report(l, &rad, &mut r);
            sl2_check(&mut r);
            r.assert("M = S + R directly", s_alg.sum(&rad).dim() == 8);
            let rr = l.bracket_subspaces(&rad, &rad);
            r.assert(
                "[R,R] = k(y+z-[y,[x,z]]) + k[y,z] + k[x,[y,z]]",
                rr == span(&[comb(&[(1, Y), (1, Z), (-1, YXZ)]), b(YZ), b(XYZ)]),
            );
            r.assert(
                "[R,[R,R]] = k[y,z] + k[x,[y,z]]",
                l.bracket_subspaces(&rad, &rr) == span(&[b(YZ), b(XYZ)]),
            );
            r.expect("center dimension", 0, center.dim());
            r.assert("[M,M] = M", derived.dim() == 8);
            let line = comb(&[(1, Y), (1, Z), (-1, XYZ), (-1, YXZ)]);
            r.assert(
                "k(y+z-[x,[y,z]]-[y,[x,z]]) lies in [R,R]",
                rr.contains(&line),
            );
            let central = s_alg.basis().iter().all(|s| l.commute(s, &line));
            r.assert("that line is centralized by S", central);
        }
        _ => {
            r.expect("center dimension", 0, center.dim());
            r.assert("[M,M] = M", derived.dim() == 8);
            let mats = monomial_matrices(&sl3_example::<S>());
            let labels = basis::LABELS.iter().map(|s| s.to_string()).collect();
            let realized = LieAlgebra::from_matrices(labels, &mats);
            r.assert(
                "monomials of the sl3 matrices match the structure constants",
                realized.is_ok_and(|m| m == *l),
            );
        }
    }
    Ok(r)
}

/// In case 0 the algebra is the universal sandwich algebra on three generators.
pub fn l3_comparison<S: Scalar>(t: &ThreeGen<S>) -> Result<Report> {
    let l3 = sandwich_algebra::<S>(3)?;
    let words: [&[u8]; 8] = [
        &[1],
        &[2],
        &[3],
        &[1, 2],
        &[1, 3],
        &[2, 3],
        &[1, 2, 3],
        &[2, 1, 3],
    ];
    let cols: Vec<Vec<S>> = words.iter().map(|w| l3.monomial(w)).collect();
    let m = Matrix::from_cols(&cols, l3.algebra.dim());
    let mut r = Report::new("case 0 against the universal sandwich algebra");
    r.expect("dimension of the universal algebra", 8, l3.algebra.dim());
    r.assert("monomials form a basis", m.rank() == 8);
    r.assert(
        "monomial map is a homomorphism",
        t.algebra.is_homomorphism_to(&l3.algebra, &m),
    );
    Ok(r)
}

/// Normalize, build, and check everything for one parameter set.
pub fn threegen_report<S: Scalar>(start: &TriangleParams<S>) -> Result<Report> {
    let trace = normalize(start);
    let mut r = Report::new(format!("three extremal generators with {start}"));
    r.assert(
        "replaying the trace gives the final labels",
        trace.replay(start)? == trace.final_params,
    );
    r.expect(
        "central label after normalization",
        S::zero(),
        trace.final_params.central.clone(),
    );
    r.push("case", "", trace.case.to_string(), true);
    if let Some(sq) = &trace.extension_required {
        r.push(
            "scaling",
            "square root in the field",
            format!("extension required for sqrt({sq})"),
            true,
        );
        return Ok(r);
    }
    let t = build_m(&trace.final_params)?;
    r.absorb("identities", identity_checks(&t)?);
    r.absorb("structure", verify_3gen_structure(&t, trace.case)?);
    if trace.case == 0 {
        r.absorb("L3", l3_comparison(&t)?);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Gf7, Q};
    use num_traits::Zero;

    #[test]
    fn four_cases() {
        for (a, b, c) in [(0, 0, 0), (-2, 0, 0), (-2, -2, 0), (-2, -2, -2)] {
            let r = threegen_report(&TriangleParams::<Q>::from_i64(a, b, c, 0)).unwrap();
            assert!(r.pass(), "{r}");
        }
    }

    #[test]
    fn normalization_examples() {
        let t = normalize(&TriangleParams::<Q>::from_i64(-2, -2, -2, 0));
        assert!(t.steps.is_empty() && t.case == 3);
        let t = normalize(&TriangleParams::<Q>::from_i64(-8, -2, -1, 0));
        assert!(t.extension_required.is_some());
        let start = TriangleParams::<Gf7>::from_i64(1, 0, 0, 5);
        let t = normalize(&start);
        assert!(t.case >= 1 && t.final_params.central.is_zero());
        assert_eq!(t.replay(&start).unwrap(), t.final_params);
    }

    #[test]
    fn exp_transform_kills_central() {
        let p = TriangleParams::<Q>::from_i64(-2, -2, 0, 3);
        let s = Q::from_ratio(3, 4);
        assert!(exp_transform_params(&p, &s).central.is_zero());
        let p = TriangleParams::<Q>::from_i64(-2, 0, 0, 1);
        assert_eq!(exp_transform_params(&p, &Q::from_i64(1)).nonzero_edges(), 2);
    }

    #[test]
    fn two_generators() {
        let t = two_gen_classify(&Q::from_i64(-2), true);
        assert_eq!(t.case, TwoGenCase::Sl2);
        let f = extremal_functional(&t.algebra, &t.x).unwrap().unwrap();
        assert_eq!(dot(&f, &t.y), Q::from_i64(-2));
        assert_eq!(
            two_gen_classify(&Q::from_i64(0), true).case,
            TwoGenCase::Heisenberg
        );
        assert_eq!(
            two_gen_classify(&Q::from_i64(0), false).case,
            TwoGenCase::Abelian
        );
    }
}
