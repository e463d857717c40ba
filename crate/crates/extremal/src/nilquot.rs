//! Universal sandwich algebras `L_r` and their associative companions `R_r`.
//!
//! `L_r` is the free Lie algebra on `f_1, ..., f_r` modulo the ideal generated
//! by all `[f_i,[f_i,u]]`. The relations are homogeneous in the multidegree, so
//! the quotient is built one multidegree at a time.
//!
//! The main construction is a graded nilpotent quotient: the component of
//! multidegree `a` is spanned by formal "tails" `[f_i, b]` with `b` running over
//! the basis already found in degree `a - e_i`, cut down by antisymmetry,
//! Jacobi and the sandwich relations. Every basis element therefore carries a
//! definition `[f_i, b]` and is a left-normed monomial. The result is certified
//! by validating the Jacobi identity on the finished table and checking that
//! each `ad_{f_i}` squares to zero; together these make it a quotient of `L_r`
//! that satisfies every defining relation, hence `L_r` itself.
//!
//! A second, independent route eliminates directly inside the free Lie algebra
//! in its Lyndon basis and is used for cross-checking small ranks.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::freelie::{
    left_normed_string, lyndon_basis, FreeLie, FreeLieElement, LyndonWord, MultiDegree,
};
use crate::liealg::{normalize_sparse, LieAlgebra, SparseVec};
use crate::linalg::{is_zero_vec, Echelon, Matrix, Subspace};
use crate::report::Report;
use crate::scalars::Scalar;

/// Total degree beyond which construction gives up.
pub const DEGREE_CAP: usize = 16;

/// Dimensions of the universal algebras as listed in the literature.
pub const EXPECTED_LR: [usize; 5] = [1, 3, 8, 28, 537];
pub const EXPECTED_RR: [usize; 4] = [2, 5, 19, 193];
pub const EXPECTED_R3_LENGTHS: [usize; 5] = [1, 3, 6, 6, 3];
pub const EXPECTED_R4_LENGTHS: [usize; 10] = [1, 4, 12, 24, 36, 40, 36, 24, 12, 4];

/// Construction options for [`sandwich_algebra_with`].
#[derive(Clone, Debug)]
pub struct QuotientOptions {
    pub degree_cap: usize,
    /// Upper bounds on the occurrences of each generator. Multidegrees beyond
    /// them are dropped, which is a quotient by a graded ideal.
    pub max_counts: Option<Vec<usize>>,
    /// Run the full Jacobi validation on the finished table.
    pub validate: bool,
}

impl Default for QuotientOptions {
    fn default() -> Self {
        QuotientOptions {
            degree_cap: DEGREE_CAP,
            max_counts: None,
            validate: true,
        }
    }
}

/// One total-degree slice of the quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeComponent {
    pub degree: usize,
    pub dim: usize,
    /// Rank of the relations imposed on the tails of this degree.
    pub relation_rank: usize,
}

/// A graded quotient of a free Lie algebra, with its basis of left-normed monomials.
#[derive(Clone, Debug)]
pub struct GradedQuotient<S> {
    pub r: usize,
    pub algebra: LieAlgebra<S>,
    /// Letters (1-based) of the left-normed monomial behind each basis element.
    pub words: Vec<Vec<u8>>,
    pub multidegrees: Vec<MultiDegree>,
    pub components: Vec<DegreeComponent>,
    pub multidegree_dims: BTreeMap<MultiDegree, usize>,
}

#[derive(Serialize)]
struct MultiDegreeDim {
    degree: Vec<usize>,
    dim: usize,
}

#[derive(Serialize)]
struct QuotientJson {
    r: usize,
    dims_by_degree: Vec<usize>,
    total: usize,
    multidegree_dims: Vec<MultiDegreeDim>,
}

impl<S: Scalar> GradedQuotient<S> {
    pub fn total_dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Dimensions of the degree `1, 2, ...` components, up to the last nonzero one.
    pub fn dims_by_degree(&self) -> Vec<usize> {
        self.components
            .iter()
            .map(|c| c.dim)
            .filter(|&d| d > 0)
            .collect()
    }

    /// Nilpotency class: the largest degree with a nonzero component.
    pub fn class(&self) -> usize {
        self.components
            .iter()
            .filter(|c| c.dim > 0)
            .map(|c| c.degree)
            .max()
            .unwrap_or(0)
    }

    pub fn dim_of(&self, m: &MultiDegree) -> usize {
        self.multidegree_dims.get(m).copied().unwrap_or(0)
    }

    /// Basis index of a generator (0-based).
    pub fn generator(&self, i: usize) -> Vec<S> {
        self.algebra.basis_vector(i)
    }

    /// Evaluate the left-normed monomial on the given letters (1-based).
    pub fn monomial(&self, word: &[u8]) -> Vec<S> {
        let (&last, rest) = word.split_last().expect("nonempty word");
        let mut acc = self.generator(last as usize - 1);
        for &l in rest.iter().rev() {
            acc = self.algebra.bracket(&self.generator(l as usize - 1), &acc);
        }
        acc
    }

    /// The report schema: `{r, dims_by_degree, total, multidegree_dims}`.
    pub fn to_json(&self) -> serde_json::Value {
        let j = QuotientJson {
            r: self.r,
            dims_by_degree: self.dims_by_degree(),
            total: self.total_dim(),
            multidegree_dims: self
                .multidegree_dims
                .iter()
                .filter(|(_, &d)| d > 0)
                .map(|(m, &d)| MultiDegreeDim {
                    degree: m.0.clone(),
                    dim: d,
                })
                .collect(),
        };
        serde_json::to_value(j).expect("serializable")
    }
}

/// `L_r` over the scalar field `S`, certified.
pub fn sandwich_algebra<S: Scalar>(r: usize) -> Result<GradedQuotient<S>> {
    sandwich_algebra_with(r, &QuotientOptions::default())
}

/// All multidegrees of total degree `d` within the bounds, largest first in lex order.
fn multidegrees(r: usize, d: usize, bounds: &[usize]) -> Vec<MultiDegree> {
    fn rec(
        i: usize,
        left: usize,
        bounds: &[usize],
        cur: &mut Vec<usize>,
        out: &mut Vec<MultiDegree>,
    ) {
        if i + 1 == bounds.len() {
            if left <= bounds[i] {
                cur.push(left);
                out.push(MultiDegree(cur.clone()));
                cur.pop();
            }
            return;
        }
        for c in (0..=left.min(bounds[i])).rev() {
            cur.push(c);
            rec(i + 1, left - c, bounds, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r > 0 {
        rec(0, d, bounds, &mut Vec::with_capacity(r), &mut out);
    }
    out
}

fn sub_unit(m: &MultiDegree, i: usize, k: usize) -> Option<MultiDegree> {
    if m.0[i] < k {
        return None;
    }
    let mut out = m.clone();
    out.0[i] -= k;
    (out.total() > 0).then_some(out)
}

/// Graded quotient state while components are added degree by degree.
struct Builder<S> {
    r: usize,
    words: Vec<Vec<u8>>,
    mdeg: Vec<MultiDegree>,
    /// `(generator, element)` with the basis element equal to `[f_generator, element]`.
    defs: Vec<Option<(usize, usize)>>,
    comps: HashMap<MultiDegree, Vec<usize>>,
    /// Nonzero brackets of basis pairs, both orders.
    table: HashMap<(usize, usize), SparseVec<S>>,
}

/// Outcome of one multidegree before global indices are assigned.
struct ComponentResult<S> {
    alpha: MultiDegree,
    relation_rank: usize,
    /// `(generator, element)` definitions of the new basis elements.
    new: Vec<(usize, usize)>,
    /// `[u, w]` for `u < w`, in local coordinates of the new basis.
    products: Vec<(usize, usize, SparseVec<S>)>,
}

/// The tails of one multidegree and the products already reduced to them.
struct Tails<'a, S> {
    b: &'a Builder<S>,
    index: HashMap<(usize, usize), usize>,
    len: usize,
    memo: std::cell::RefCell<HashMap<(usize, usize), Vec<S>>>,
}

impl<'a, S: Scalar> Tails<'a, S> {
    fn tail_vec(&self, j: usize, w: &[(usize, S)], out: &mut [S]) {
        for (k, c) in w {
            let t = self.index[&(j, *k)];
            out[t] = out[t].clone() + c.clone();
        }
    }

    /// `[u, w]` in the tail space, for a basis element `u` and a homogeneous `w`.
    fn product(&self, u: usize, w: &[(usize, S)]) -> Vec<S> {
        let mut out = vec![S::zero(); self.len];
        for (k, c) in w {
            let p = self.product_basis(u, *k);
            for (o, x) in out.iter_mut().zip(p.iter()) {
                if !x.is_zero() {
                    *o = o.clone() + c.clone() * x.clone();
                }
            }
        }
        out
    }

    fn product_basis(&self, u: usize, w: usize) -> Vec<S> {
        if let Some(hit) = self.memo.borrow().get(&(u, w)) {
            return hit.clone();
        }
        let mut out = vec![S::zero(); self.len];
        match self.b.defs[u] {
            None => self.tail_vec(u, &[(w, S::one())], &mut out),
            // [[f_j, c], w] = [f_j, [c, w]] - [c, [f_j, w]]
            Some((j, c)) => {
                let cw = self.b.bracket_basis(c, w);
                self.tail_vec(j, &cw, &mut out);
                let jw = self.b.bracket_basis(j, w);
                let rest = self.product(c, &jw);
                for (o, x) in out.iter_mut().zip(rest) {
                    *o = o.clone() - x;
                }
            }
        }
        self.memo.borrow_mut().insert((u, w), out.clone());
        out
    }
}

impl<S: Scalar> Builder<S> {
    fn bracket_basis(&self, u: usize, w: usize) -> SparseVec<S> {
        self.table.get(&(u, w)).cloned().unwrap_or_default()
    }

    fn comp(&self, m: &MultiDegree) -> &[usize] {
        self.comps.get(m).map_or(&[], |v| v.as_slice())
    }

    /// Ordered basis pairs `(u, w)`, `u <= w`, whose multidegrees add up to `alpha`.
    fn pairs(&self, alpha: &MultiDegree) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (beta, us) in &self.comps {
            let Some(gamma) = alpha.checked_sub(beta) else {
                continue;
            };
            if gamma.total() == 0 {
                continue;
            }
            for &u in us {
                for &w in self.comp(&gamma) {
                    if u <= w {
                        out.push((u, w));
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn component(&self, alpha: &MultiDegree) -> ComponentResult<S> {
        let r = self.r;
        let mut index = HashMap::new();
        let mut tails = Vec::new();
        for i in 0..r {
            if let Some(beta) = sub_unit(alpha, i, 1) {
                for &g in self.comp(&beta) {
                    index.insert((i, g), tails.len());
                    tails.push((i, g));
                }
            }
        }
        let empty = ComponentResult {
            alpha: alpha.clone(),
            relation_rank: 0,
            new: Vec::new(),
            products: Vec::new(),
        };
        if tails.is_empty() {
            return empty;
        }
        let t = Tails {
            b: self,
            index,
            len: tails.len(),
            memo: Default::default(),
        };
        let mut rel = Echelon::new(tails.len());
        let pairs = self.pairs(alpha);
        for &(u, w) in &pairs {
            let mut v = t.product_basis(u, w);
            for (o, x) in v.iter_mut().zip(t.product_basis(w, u)) {
                *o = o.clone() + x;
            }
            rel.insert(v);
        }
        for i in 0..r {
            // [f_i,[f_i,u]] = 0
            if let Some(gamma) = sub_unit(alpha, i, 2) {
                for &u in self.comp(&gamma) {
                    rel.insert(t.product(i, &self.bracket_basis(i, u)));
                }
            }
            // [f_i,[v,w]] + [v,[w,f_i]] + [w,[f_i,v]] = 0
            if let Some(beta) = sub_unit(alpha, i, 1) {
                for (v, w) in self.pairs(&beta) {
                    if v == w {
                        continue;
                    }
                    let mut j = t.product(i, &self.bracket_basis(v, w));
                    for (o, x) in j.iter_mut().zip(t.product(v, &self.bracket_basis(w, i))) {
                        *o = o.clone() + x;
                    }
                    for (o, x) in j.iter_mut().zip(t.product(w, &self.bracket_basis(i, v))) {
                        *o = o.clone() + x;
                    }
                    rel.insert(j);
                }
            }
        }
        let pivots = rel.pivots();
        let mut local = vec![None; tails.len()];
        let mut new = Vec::new();
        for (k, &(i, g)) in tails.iter().enumerate() {
            if pivots.binary_search(&k).is_err() {
                local[k] = Some(new.len());
                new.push((i, g));
            }
        }
        // A pivot tail equals minus the free part of its row.
        let image = |v: &[S]| -> SparseVec<S> {
            let mut acc = Vec::new();
            for (k, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                match local[k] {
                    Some(n) => acc.push((n, c.clone())),
                    None => {
                        let row = &rel.rows()[pivots.binary_search(&k).expect("pivot")];
                        for (f, x) in row.iter().enumerate() {
                            if let (Some(n), false) = (local[f], x.is_zero()) {
                                acc.push((n, -(c.clone() * x.clone())));
                            }
                        }
                    }
                }
            }
            normalize_sparse(acc)
        };
        let products = if new.is_empty() {
            Vec::new()
        } else {
            pairs
                .iter()
                .filter(|(u, w)| u != w)
                .map(|&(u, w)| (u, w, image(&t.product_basis(u, w))))
                .filter(|(_, _, v)| !v.is_empty())
                .collect()
        };
        ComponentResult {
            alpha: alpha.clone(),
            relation_rank: rel.dim(),
            new,
            products,
        }
    }

    fn absorb(&mut self, res: ComponentResult<S>) {
        let start = self.words.len();
        let mut ids = Vec::new();
        for (i, g) in &res.new {
            let mut w = vec![*i as u8 + 1];
            w.extend_from_slice(&self.words[*g]);
            ids.push(self.words.len());
            self.words.push(w);
            self.mdeg.push(res.alpha.clone());
            self.defs.push(Some((*i, *g)));
        }
        for (u, w, v) in res.products {
            let v: SparseVec<S> = v.into_iter().map(|(k, c)| (start + k, c)).collect();
            self.table
                .insert((w, u), v.iter().map(|(k, c)| (*k, -c.clone())).collect());
            self.table.insert((u, w), v);
        }
        if !ids.is_empty() {
            self.comps.insert(res.alpha, ids);
        }
    }
}

/// `L_r` (or a bounded graded quotient of it) with explicit options.
pub fn sandwich_algebra_with<S: Scalar>(
    r: usize,
    opts: &QuotientOptions,
) -> Result<GradedQuotient<S>> {
    if r == 0 {
        return Err(Error::PreconditionNotMet(
            "at least one generator is required".into(),
        ));
    }
    let bounds = opts
        .max_counts
        .clone()
        .unwrap_or_else(|| vec![usize::MAX; r]);
    if bounds.len() != r {
        return Err(Error::Shape("one bound per generator is required".into()));
    }
    let mut b = Builder {
        r,
        words: Vec::new(),
        mdeg: Vec::new(),
        defs: Vec::new(),
        comps: HashMap::new(),
        table: HashMap::new(),
    };
    let mut components = Vec::new();
    let mut multidegree_dims = BTreeMap::new();
    let gens: Vec<usize> = (0..r).filter(|&i| bounds[i] >= 1).collect();
    for &i in &gens {
        b.words.push(vec![i as u8 + 1]);
        b.mdeg.push(MultiDegree::unit(r, i));
        b.defs.push(None);
        b.comps
            .insert(MultiDegree::unit(r, i), vec![b.words.len() - 1]);
        multidegree_dims.insert(MultiDegree::unit(r, i), 1);
    }
    if gens.len() != r {
        return Err(Error::PreconditionNotMet(
            "every generator must be allowed at least once".into(),
        ));
    }
    components.push(DegreeComponent {
        degree: 1,
        dim: r,
        relation_rank: 0,
    });
    let mut d = 2;
    loop {
        if d > opts.degree_cap {
            return Err(Error::DegreeCapExceeded(opts.degree_cap));
        }
        let alphas = multidegrees(r, d, &bounds);
        let results: Vec<ComponentResult<S>> = alphas.par_iter().map(|a| b.component(a)).collect();
        let (mut dim, mut rank) = (0, 0);
        for res in results {
            dim += res.new.len();
            rank += res.relation_rank;
            multidegree_dims.insert(res.alpha.clone(), res.new.len());
            b.absorb(res);
        }
        components.push(DegreeComponent {
            degree: d,
            dim,
            relation_rank: rank,
        });
        if dim == 0 {
            break;
        }
        d += 1;
    }
    let names: Vec<String> = (1..=r).map(|i| format!("x{i}")).collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let labels = b
        .words
        .iter()
        .map(|w| left_normed_string(w, &name_refs))
        .collect();
    let table = &b.table;
    let algebra = LieAlgebra::from_upper_unchecked(labels, &mut |i, j| {
        table.get(&(i, j)).cloned().unwrap_or_default()
    });
    if opts.validate {
        algebra.validate()?;
    }
    let q = GradedQuotient {
        r,
        algebra,
        words: b.words,
        multidegrees: b.mdeg,
        components,
        multidegree_dims,
    };
    for i in 0..r {
        let x = q.generator(i);
        if !q.algebra.ad(&x).pow(2).is_zero() {
            return Err(Error::PreconditionNotMet(format!(
                "generator x{} is not a sandwich",
                i + 1
            )));
        }
    }
    Ok(q)
}

/// Multidegree dimensions of `L_r` by elimination inside the free Lie algebra.
///
/// The relation space in multidegree `a` is spanned by `[f_i, J_{a-e_i}]` and the
/// new relations `[f_i,[f_i,u]]` with `u` a Lyndon basis element of degree
/// `a - 2e_i`. Practical for `r <= 4`.
pub fn sandwich_dims_free<S: Scalar>(
    r: usize,
    degree_cap: usize,
) -> Result<BTreeMap<MultiDegree, usize>> {
    let lie = FreeLie::<S>::new(r);
    let bounds = vec![usize::MAX; r];
    let mut relations: HashMap<MultiDegree, Vec<FreeLieElement<S>>> = HashMap::new();
    let mut dims = BTreeMap::new();
    for d in 1.. {
        if d > degree_cap {
            return Err(Error::DegreeCapExceeded(degree_cap));
        }
        let words = lyndon_basis(r, d);
        let mut total = 0;
        for alpha in multidegrees(r, d, &bounds) {
            let basis: Vec<&LyndonWord> =
                words.iter().filter(|w| w.multidegree(r) == alpha).collect();
            let pos: HashMap<&LyndonWord, usize> =
                basis.iter().enumerate().map(|(k, w)| (*w, k)).collect();
            let to_vec = |e: &FreeLieElement<S>| {
                let mut v = vec![S::zero(); basis.len()];
                for (w, c) in &e.terms {
                    v[pos[w]] = c.clone();
                }
                v
            };
            let mut ech = Echelon::new(basis.len());
            for i in 0..r {
                let gen = lie.generator(i as u8 + 1);
                if let Some(beta) = sub_unit(&alpha, i, 1) {
                    for rel in relations.get(&beta).into_iter().flatten() {
                        ech.insert(to_vec(&lie.bracket(&gen, rel)));
                    }
                }
                if let Some(gamma) = sub_unit(&alpha, i, 2) {
                    let words_gamma = lyndon_basis(r, gamma.total());
                    for u in words_gamma.iter().filter(|w| w.multidegree(r) == gamma) {
                        let inner = lie.bracket(&gen, &FreeLieElement::basis(u.clone()));
                        ech.insert(to_vec(&lie.bracket(&gen, &inner)));
                    }
                }
            }
            let back = |v: &Vec<S>| {
                let mut e = FreeLieElement::zero();
                for (k, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    e.add_term(basis[k].clone(), c.clone());
                }
                e
            };
            relations.insert(alpha.clone(), ech.rows().iter().map(back).collect());
            let dim = basis.len() - ech.dim();
            total += dim;
            dims.insert(alpha, dim);
        }
        if total == 0 {
            break;
        }
    }
    Ok(dims)
}

/// Dimensions of the associative companion `R_r`, graded by word length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssocDims {
    pub r: usize,
    pub dims_by_length: Vec<usize>,
    pub total_dim: usize,
    /// Whether the profile without the length-0 entry reads the same backwards.
    /// Recorded, not asserted.
    pub palindromic: bool,
}

impl AssocDims {
    fn from_lengths(r: usize, mut dims_by_length: Vec<usize>) -> Self {
        while dims_by_length.last() == Some(&0) {
            dims_by_length.pop();
        }
        let total_dim = dims_by_length.iter().sum();
        let tail = dims_by_length.get(1..).unwrap_or(&[]);
        let palindromic = tail.iter().eq(tail.iter().rev());
        AssocDims {
            r,
            dims_by_length,
            total_dim,
            palindromic,
        }
    }
}

/// `R_r` read off from `L_{r+1}`: the components where the last generator occurs once.
///
/// Only multidegrees with at most one occurrence of the last generator are
/// constructed, which is a graded quotient of `L_{r+1}` containing all of them.
pub fn assoc_dims_via_embedding<S: Scalar>(r: usize) -> Result<AssocDims> {
    let mut bounds = vec![usize::MAX; r + 1];
    bounds[r] = 1;
    let opts = QuotientOptions {
        max_counts: Some(bounds),
        ..Default::default()
    };
    let q = sandwich_algebra_with::<S>(r + 1, &opts)?;
    Ok(assoc_dims_from(&q))
}

/// Length profile of the part of `q` with exactly one occurrence of the last generator.
pub fn assoc_dims_from<S: Scalar>(q: &GradedQuotient<S>) -> AssocDims {
    let last = q.r - 1;
    let mut lengths = Vec::new();
    for (m, &d) in &q.multidegree_dims {
        if m.0[last] == 1 && d > 0 {
            let len = m.total() - 1;
            if lengths.len() <= len {
                lengths.resize(len + 1, 0);
            }
            lengths[len] += d;
        }
    }
    AssocDims::from_lengths(q.r - 1, lengths)
}

/// `R_r` directly: free associative words modulo `y_i y_i` and `y_i w y_i` for Lie
/// bracketings `w`. Practical for `r <= 3`.
pub fn assoc_dims_direct<S: Scalar>(r: usize, max_len: usize) -> Result<AssocDims> {
    type Poly<S> = BTreeMap<Vec<u8>, S>;
    fn lie_poly<S: Scalar>(w: &LyndonWord) -> Poly<S> {
        match w.standard_factorization() {
            None => BTreeMap::from([(w.letters().to_vec(), S::one())]),
            Some((u, v)) => {
                let (pu, pv) = (lie_poly::<S>(&u), lie_poly::<S>(&v));
                let mut out = Poly::new();
                for (a, ca) in &pu {
                    for (b, cb) in &pv {
                        let c = ca.clone() * cb.clone();
                        let ab = [a.as_slice(), b.as_slice()].concat();
                        let ba = [b.as_slice(), a.as_slice()].concat();
                        let e = out.entry(ab).or_insert_with(S::zero);
                        *e = e.clone() + c.clone();
                        let e = out.entry(ba).or_insert_with(S::zero);
                        *e = e.clone() - c;
                    }
                }
                out.retain(|_, c| !c.is_zero());
                out
            }
        }
    }
    fn all_words(r: usize, len: usize) -> Vec<Vec<u8>> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (1..=r as u8).map(move |l| {
                        let mut w = w.clone();
                        w.push(l);
                        w
                    })
                })
                .collect();
        }
        out
    }
    let mut generators: Vec<Poly<S>> = Vec::new();
    for i in 1..=r as u8 {
        generators.push(BTreeMap::from([(vec![i, i], S::one())]));
        for d in 1..=max_len.saturating_sub(2) {
            for w in lyndon_basis(r, d).iter() {
                let p = lie_poly::<S>(w);
                generators.push(
                    p.into_iter()
                        .map(|(m, c)| ([vec![i], m, vec![i]].concat(), c))
                        .collect(),
                );
            }
        }
    }
    let mut lengths = vec![1];
    for len in 1..=max_len {
        let words = all_words(r, len);
        let pos: HashMap<&Vec<u8>, usize> = words.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let mut ech = Echelon::new(words.len());
        for g in &generators {
            let glen = g.keys().next().map_or(0, Vec::len);
            if glen > len {
                continue;
            }
            for left in 0..=len - glen {
                for a in all_words(r, left) {
                    for b in all_words(r, len - glen - left) {
                        let mut v = vec![S::zero(); words.len()];
                        for (m, c) in g {
                            let w = [a.as_slice(), m.as_slice(), b.as_slice()].concat();
                            v[pos[&w]] = c.clone();
                        }
                        ech.insert(v);
                    }
                }
            }
        }
        let dim = words.len() - ech.dim();
        lengths.push(dim);
        if dim == 0 {
            return Ok(AssocDims::from_lengths(r, lengths));
        }
    }
    Err(Error::DegreeCapExceeded(max_len))
}

/// Multidegree components of `L_r` without the last generator agree with `L_{r-1}`.
pub fn check_subalgebra_embedding<S: Scalar>(
    big: &GradedQuotient<S>,
    small: &GradedQuotient<S>,
) -> Report {
    let mut rep = Report::new(format!("L_{} inside L_{}", small.r, big.r));
    let last = big.r - 1;
    let mut total = 0;
    for (m, &d) in &big.multidegree_dims {
        if m.0[last] != 0 {
            continue;
        }
        let sm = MultiDegree(m.0[..last].to_vec());
        let want = small.dim_of(&sm);
        if d == 0 && want == 0 {
            continue;
        }
        total += d;
        rep.expect(format!("multidegree {:?}", sm.0), want, d);
    }
    rep.expect("total dimension", small.total_dim(), total);
    rep
}

/// Letters for the four generators in the spanning-set statements.
const XYZU: [&str; 4] = ["x", "y", "z", "u"];

/// The 28 left-normed monomials claimed to span a 4-generated algebra.
pub const SPANNING_28: [&str; 28] = [
    "x",
    "y",
    "z",
    "u",
    "[x,y]",
    "[x,z]",
    "[x,u]",
    "[y,z]",
    "[y,u]",
    "[z,u]",
    "[x,[y,z]]",
    "[x,[y,u]]",
    "[x,[z,u]]",
    "[y,[x,z]]",
    "[y,[x,u]]",
    "[y,[z,u]]",
    "[z,[x,u]]",
    "[z,[y,u]]",
    "[x,[y,[z,u]]]",
    "[x,[z,[y,u]]]",
    "[y,[x,[z,u]]]",
    "[y,[z,[x,u]]]",
    "[z,[x,[y,u]]]",
    "[z,[y,[x,u]]]",
    "[x,[y,[z,[x,u]]]]",
    "[y,[x,[z,[y,u]]]]",
    "[z,[x,[y,[z,u]]]]",
    "[u,[x,[y,[z,u]]]]",
];

/// Jacobi consequences used to reduce the length-4 monomials, each a signed sum equal to zero.
pub const IDENTITIES_4GEN: [&str; 9] = [
    "[x,[y,[z,u]]] - [x,[z,[y,u]]] + [x,[u,[y,z]]]",
    "[y,[x,[z,u]]] - [y,[z,[x,u]]] + [y,[u,[x,z]]]",
    "[z,[x,[y,u]]] - [z,[y,[x,u]]] + [z,[u,[x,y]]]",
    "[u,[x,[y,z]]] - [x,[u,[y,z]]] + [[y,z],[u,x]]",
    "[u,[y,[x,z]]] - [y,[u,[x,z]]] + [[x,z],[u,y]]",
    "[u,[z,[x,y]]] - [z,[u,[x,y]]] + [[x,y],[u,z]]",
    "[x,[y,[z,u]]] - [y,[x,[z,u]]] + [[z,u],[x,y]]",
    "[x,[z,[y,u]]] - [z,[x,[y,u]]] + [[y,u],[x,z]]",
    "[y,[z,[x,u]]] - [z,[y,[x,u]]] + [[x,u],[y,z]]",
];

/// A bracket expression over named generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bracket {
    Letter(usize),
    Pair(Box<Bracket>, Box<Bracket>),
}

impl Bracket {
    /// Parse `"[a,[b,c]]"` with letters looked up in `names`.
    pub fn parse(s: &str, names: &[&str]) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (b, rest) = Self::parse_at(&s, names)?;
        if !rest.is_empty() {
            return Err(Error::Parse(format!("trailing input in {s}")));
        }
        Ok(b)
    }

    fn parse_at<'a>(s: &'a str, names: &[&str]) -> Result<(Self, &'a str)> {
        if let Some(rest) = s.strip_prefix('[') {
            let (a, rest) = Self::parse_at(rest, names)?;
            let rest = rest
                .strip_prefix(',')
                .ok_or_else(|| Error::Parse(format!("expected ',' in {s}")))?;
            let (b, rest) = Self::parse_at(rest, names)?;
            let rest = rest
                .strip_prefix(']')
                .ok_or_else(|| Error::Parse(format!("expected ']' in {s}")))?;
            return Ok((Bracket::Pair(Box::new(a), Box::new(b)), rest));
        }
        let end = s.find([',', ']']).unwrap_or(s.len());
        let name = &s[..end];
        let i = names
            .iter()
            .position(|n| *n == name)
            .ok_or_else(|| Error::Parse(format!("unknown letter {name}")))?;
        Ok((Bracket::Letter(i), &s[end..]))
    }

    pub fn eval<S: Scalar>(&self, l: &LieAlgebra<S>, letters: &[Vec<S>]) -> Vec<S> {
        match self {
            Bracket::Letter(i) => letters[*i].clone(),
            Bracket::Pair(a, b) => l.bracket(&a.eval(l, letters), &b.eval(l, letters)),
        }
    }
}

/// Evaluate `"t1 - t2 + t3"`, a signed sum of bracket expressions.
pub fn eval_signed_sum<S: Scalar>(
    expr: &str,
    names: &[&str],
    l: &LieAlgebra<S>,
    letters: &[Vec<S>],
) -> Result<Vec<S>> {
    let mut acc = l.zero();
    let mut sign = S::one();
    for tok in expr.split_whitespace() {
        match tok {
            "+" => sign = S::one(),
            "-" => sign = -S::one(),
            t => {
                let v = Bracket::parse(t, names)?.eval(l, letters);
                crate::linalg::axpy(&mut acc, &sign, &v);
                sign = S::one();
            }
        }
    }
    Ok(acc)
}

/// The 28 monomials form a basis of `L_4`, the reduction identities hold,
/// and every monomial of length 6 vanishes.
pub fn spanning_set_check_4gen<S: Scalar>(l4: &GradedQuotient<S>) -> Result<Report> {
    if l4.r != 4 {
        return Err(Error::PreconditionNotMet(
            "expects the four-generator algebra".into(),
        ));
    }
    let l = &l4.algebra;
    let letters: Vec<Vec<S>> = (0..4).map(|i| l4.generator(i)).collect();
    let mut rep = Report::new("28-monomial spanning set of L_4");
    let cols: Vec<Vec<S>> = SPANNING_28
        .iter()
        .map(|m| Bracket::parse(m, &XYZU).map(|b| b.eval(l, &letters)))
        .collect::<Result<_>>()?;
    rep.expect("dim L_4", 28, l.dim());
    rep.expect(
        "rank of the 28 monomials",
        28,
        Matrix::from_cols(&cols, l.dim()).rank(),
    );
    for id in IDENTITIES_4GEN.iter() {
        let v = eval_signed_sum(id, &XYZU, l, &letters)?;
        rep.assert(format!("identity {id} = 0"), is_zero_vec(&v));
    }
    let mut nonzero = 0;
    let mut word = [0u8; 6];
    for code in 0..4usize.pow(6) {
        let mut c = code;
        for w in word.iter_mut() {
            *w = (c % 4) as u8 + 1;
            c /= 4;
        }
        if !is_zero_vec(&l4.monomial(&word)) {
            nonzero += 1;
        }
    }
    rep.expect("nonzero monomials of length 6", 0, nonzero);
    let single_u = SPANNING_28
        .iter()
        .filter(|m| m.matches('u').count() == 1)
        .count();
    rep.expect(
        "monomials with a single u (dim R_3)",
        EXPECTED_RR[2],
        single_u,
    );
    let span = Subspace::span(l.dim(), &cols);
    rep.assert("monomials span L_4", span.dim() == l.dim());
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Q;

    #[test]
    fn small_ranks() {
        for (r, &want) in EXPECTED_LR.iter().enumerate().take(3) {
            let q = sandwich_algebra::<Q>(r + 1).unwrap();
            assert_eq!(q.total_dim(), want);
        }
    }

    #[test]
    fn l3_degrees() {
        let q = sandwich_algebra::<Q>(3).unwrap();
        assert_eq!(q.dims_by_degree(), vec![3, 3, 2]);
        assert_eq!(q.class(), 3);
    }

    #[test]
    fn free_route_agrees_on_l3() {
        let q = sandwich_algebra::<Q>(3).unwrap();
        let free = sandwich_dims_free::<Q>(3, DEGREE_CAP).unwrap();
        for (m, d) in free {
            assert_eq!(q.dim_of(&m), d, "{m:?}");
        }
    }

    #[test]
    fn r2_from_embedding_and_direct() {
        let e = assoc_dims_via_embedding::<Q>(2).unwrap();
        assert_eq!(e.dims_by_length, vec![1, 2, 2]);
        let d = assoc_dims_direct::<Q>(2, 8).unwrap();
        assert_eq!(d, e);
    }

    #[test]
    fn bracket_parser() {
        let b = Bracket::parse("[[x,y],[u, z]]", &XYZU).unwrap();
        let want = Bracket::Pair(
            Box::new(Bracket::Pair(
                Box::new(Bracket::Letter(0)),
                Box::new(Bracket::Letter(1)),
            )),
            Box::new(Bracket::Pair(
                Box::new(Bracket::Letter(3)),
                Box::new(Bracket::Letter(2)),
            )),
        );
        assert_eq!(b, want);
        assert!(Bracket::parse("[x,w]", &XYZU).is_err());
    }
}
