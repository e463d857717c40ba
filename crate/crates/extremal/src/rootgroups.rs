//! Root groups `U_y = { exp(y,t) }` of extremal elements, as exact matrices.
//!
//! Automorphisms act on column vectors and compose as maps, so `gh` means
//! "apply `h`, then `g`", and `(g,h) = g^-1 h^-1 g h`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chevalley::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::liealg::{
    extremal_form, extremal_functional, extremal_spanning_closure, is_extremal, LieAlgebra,
};
use crate::linalg::{add_vec, dot, is_zero_vec, scaled, Matrix, Subspace};
use crate::report::Report;
use crate::rootdata::{add, neg, sub, Root};
use crate::scalars::Scalar;

/// Largest characteristic for which the checks run over every field element.
pub const EXHAUSTIVE_LIMIT: u64 = 11;

/// `exp(y, t)` for all `t`, from the powers of `ad_y`.
#[derive(Clone, Debug)]
pub struct RootGroup<S> {
    pub base: Vec<S>,
    ad: Matrix<S>,
    ad2: Matrix<S>,
}

impl<S: Scalar> RootGroup<S> {
    pub fn new(l: &LieAlgebra<S>, y: &[S]) -> Result<Self> {
        if !is_extremal(l, y) {
            return Err(Error::NotExtremal(0));
        }
        let ad = l.ad(y);
        let ad2 = ad.mul(&ad);
        Ok(RootGroup {
            base: y.to_vec(),
            ad,
            ad2,
        })
    }

    pub fn at(&self, t: &S) -> RootGroupElement<S> {
        let n = self.ad.rows;
        let matrix = Matrix::identity(n)
            .add(&self.ad.scale(t))
            .add(&self.ad2.scale(&(t.clone() * t.clone() * S::half())));
        RootGroupElement {
            base: self.base.clone(),
            parameter: t.clone(),
            matrix,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootGroupElement<S> {
    pub base: Vec<S>,
    pub parameter: S,
    pub matrix: Matrix<S>,
}

/// Parameters used for identity checks: every element of a small prime
/// field, otherwise `{1, -1, 2, -2, 1/2, 3}` plus seeded extras.
pub fn sample_set<S: Scalar>(seed: Option<u64>) -> Vec<S> {
    if S::CHARACTERISTIC != 0 && S::CHARACTERISTIC <= EXHAUSTIVE_LIMIT {
        return S::elements().expect("finite field");
    }
    let mut v: Vec<S> = [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (3, 1)]
        .iter()
        .map(|&(p, q)| S::from_ratio(p, q))
        .collect();
    if let Some(seed) = seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..2 {
            let p = rng.random_range(-9i64..=9);
            let q = rng.random_range(1i64..=9);
            let s = S::from_ratio(p, q);
            if !s.is_zero() && !v.contains(&s) {
                v.push(s);
            }
        }
    }
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PairType {
    /// `y` is a multiple of `x`.
    Equal,
    /// `[x,y] = 0`, different points.
    Commuting,
    /// `f(x,y) = 0`, `[x,y] != 0`.
    Nilpotent,
    /// `f(x,y) != 0`.
    Special,
}

pub fn classify_pair<S: Scalar>(l: &LieAlgebra<S>, x: &[S], y: &[S]) -> Result<PairType> {
    let fx = extremal_functional(l, x)?.ok_or(Error::NotExtremal(0))?;
    extremal_functional(l, y)?.ok_or(Error::NotExtremal(1))?;
    Ok(if Subspace::span(l.dim(), &[x.to_vec()]).contains(y) {
        PairType::Equal
    } else if !dot(&fx, y).is_zero() {
        PairType::Special
    } else if l.commute(x, y) {
        PairType::Commuting
    } else {
        PairType::Nilpotent
    })
}

/// One line of a root group report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootGroupRow {
    pub pair: String,
    pub case: PairType,
    pub property: String,
    pub samples: usize,
    pub pass: bool,
}

fn commutator<S: Scalar>(
    g: &Matrix<S>,
    h: &Matrix<S>,
    ginv: &Matrix<S>,
    hinv: &Matrix<S>,
) -> Matrix<S> {
    ginv.mul(hinv).mul(g).mul(h)
}

/// Check the root group identities that apply to the pair `(x, y)`.
pub fn verify_abstract_root_properties<S: Scalar>(
    l: &LieAlgebra<S>,
    x: &[S],
    y: &[S],
    samples: &[S],
) -> Result<(Report, Vec<RootGroupRow>)> {
    let case = classify_pair(l, x, y)?;
    let n = l.dim();
    let id = Matrix::identity(n);
    let ux = RootGroup::new(l, x)?;
    let uy = RootGroup::new(l, y)?;
    let desc = format!("{} / {}", l.format_element(x), l.format_element(y));
    let mut r = Report::new(format!("root group properties for {desc}"));
    let mut rows = Vec::new();
    let mut record = |r: &mut Report, property: &str, count: usize, pass: bool| {
        r.assert(property.to_string(), pass);
        rows.push(RootGroupRow {
            pair: desc.clone(),
            case,
            property: property.into(),
            samples: count,
            pass,
        });
    };
    let mut zero_and = vec![S::zero()];
    zero_and.extend(samples.iter().filter(|s| !s.is_zero()).cloned());
    let nonzero: Vec<S> = samples.iter().filter(|s| !s.is_zero()).cloned().collect();

    // exp(y,s) exp(y,t) = exp(y,s+t) and exp(cy,t) = exp(y,ct)
    let mut ok = true;
    let mut count = 0;
    for s in &zero_and {
        for t in &zero_and {
            ok &= uy.at(s).matrix.mul(&uy.at(t).matrix) == uy.at(&(s.clone() + t.clone())).matrix;
            count += 1;
        }
    }
    for c in &nonzero {
        let ucy = RootGroup::new(l, &scaled(y, c))?;
        for t in &zero_and {
            ok &= ucy.at(t).matrix == uy.at(&(c.clone() * t.clone())).matrix;
        }
    }
    record(
        &mut r,
        "U_y is a one-parameter group depending only on ky",
        count,
        ok,
    );

    // exp(y,-s) U_x exp(y,s) = U_{exp(y,-s)x}
    let mut ok = true;
    for s in &zero_and {
        let g = uy.at(s).matrix;
        let ginv = uy.at(&-s.clone()).matrix;
        let xs = ginv.mul_vec(x);
        let Ok(uxs) = RootGroup::new(l, &xs) else {
            ok = false;
            continue;
        };
        for t in &zero_and {
            ok &= ginv.mul(&ux.at(t).matrix).mul(&g) == uxs.at(t).matrix;
        }
    }
    record(
        &mut r,
        "conjugate of U_x is U_{exp(y,-s)x}",
        zero_and.len() * zero_and.len(),
        ok,
    );

    match case {
        PairType::Equal | PairType::Commuting => {
            let mut ok = true;
            for s in &zero_and {
                for t in &zero_and {
                    let (g, h) = (ux.at(s), uy.at(t));
                    let (gi, hi) = (ux.at(&-s.clone()), uy.at(&-t.clone()));
                    ok &= commutator(&g.matrix, &h.matrix, &gi.matrix, &hi.matrix) == id;
                }
            }
            record(
                &mut r,
                "(U_x, U_y) = 1",
                zero_and.len() * zero_and.len(),
                ok,
            );
        }
        PairType::Nilpotent => {
            let yx = l.bracket(y, x);
            let uyx = RootGroup::new(l, &yx)?;
            let (mut ok, mut central) = (true, true);
            for s in &zero_and {
                for t in &zero_and {
                    let (g, h) = (uy.at(t), ux.at(s));
                    let (gi, hi) = (uy.at(&-t.clone()), ux.at(&-s.clone()));
                    let c = commutator(&g.matrix, &h.matrix, &gi.matrix, &hi.matrix);
                    ok &= c == uyx.at(&(t.clone() * s.clone())).matrix;
                    central &= c.mul(&g.matrix) == g.matrix.mul(&c)
                        && c.mul(&h.matrix) == h.matrix.mul(&c);
                }
            }
            record(
                &mut r,
                "(exp(y,t), exp(x,s)) = exp([y,x], ts)",
                zero_and.len() * zero_and.len(),
                ok,
            );
            record(
                &mut r,
                "commutators are central: class 2",
                zero_and.len() * zero_and.len(),
                central,
            );
        }
        PairType::Special => {
            let fx = extremal_functional(l, x)?.expect("extremal");
            let c = S::from_i64(-2) / dot(&fx, y);
            let uy = RootGroup::new(l, &scaled(y, &c))?;
            let mut ok = true;
            for s in &nonzero {
                let si = s.inv().expect("nonzero");
                for t in &zero_and {
                    let lhs = uy
                        .at(&-s.clone())
                        .matrix
                        .mul(&ux.at(&(si.clone() * t.clone())).matrix)
                        .mul(&uy.at(s).matrix);
                    let rhs = ux
                        .at(&-si.clone())
                        .matrix
                        .mul(&uy.at(&-(t.clone() * s.clone())).matrix)
                        .mul(&ux.at(&si).matrix);
                    ok &= lhs == rhs;
                }
            }
            record(
                &mut r,
                "special rank one relation with f(x,y) = -2",
                nonzero.len() * zero_and.len(),
                ok,
            );
        }
    }
    Ok((r, rows))
}

/// Which conditions of the strong commutation criterion hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrongComm {
    /// Every `sx + ty` with `s, t` nonzero samples is extremal.
    pub all_combinations: bool,
    /// Some such combination is extremal.
    pub some_combination: bool,
    /// `2[y,[x,z]] = f(x,z)y + f(y,z)x` on the extremal basis vectors.
    pub on_extremal: bool,
    /// The same identity on the whole basis.
    pub on_basis: bool,
}

impl StrongComm {
    pub fn holds(&self) -> bool {
        self.all_combinations
    }

    pub fn consistent(&self) -> bool {
        let v = [
            self.all_combinations,
            self.some_combination,
            self.on_extremal,
            self.on_basis,
        ];
        v.iter().all(|b| *b == v[0])
    }
}

/// Evaluate the equivalent conditions for commuting extremal `x, y` and the product identity.
pub fn strongcomm_check<S: Scalar>(
    l: &LieAlgebra<S>,
    x: &[S],
    y: &[S],
    samples: &[S],
) -> Result<(Report, StrongComm)> {
    if !l.commute(x, y) {
        return Err(Error::PreconditionNotMet("x and y do not commute".into()));
    }
    let fx = extremal_functional(l, x)?.ok_or(Error::NotExtremal(0))?;
    let fy = extremal_functional(l, y)?.ok_or(Error::NotExtremal(1))?;
    let nonzero: Vec<S> = samples.iter().filter(|s| !s.is_zero()).cloned().collect();
    let combo = |s: &S, t: &S| add_vec(&scaled(x, s), &scaled(y, t));
    let mut all = true;
    let mut some = false;
    for s in &nonzero {
        for t in &nonzero {
            let v = combo(s, t);
            let e = !is_zero_vec(&v) && is_extremal(l, &v);
            all &= e;
            some |= e;
        }
    }
    let identity = |z: &[S]| {
        let lhs = scaled(&l.bracket(y, &l.bracket(x, z)), &S::from_i64(2));
        lhs == add_vec(&scaled(y, &dot(&fx, z)), &scaled(x, &dot(&fy, z)))
    };
    let basis: Vec<Vec<S>> = (0..l.dim()).map(|i| l.basis_vector(i)).collect();
    let on_basis = basis.iter().all(|z| identity(z));
    let on_extremal = basis
        .iter()
        .filter(|z| is_extremal(l, z))
        .all(|z| identity(z));
    let sc = StrongComm {
        all_combinations: all,
        some_combination: some,
        on_extremal,
        on_basis,
    };
    let mut r = Report::new(format!(
        "strong commutation of {} and {}",
        l.format_element(x),
        l.format_element(y)
    ));
    r.push("all sx+ty extremal", "", all.to_string(), true);
    r.push("(1') some sx+ty extremal", "", some.to_string(), true);
    r.push(
        "identity on extremal basis vectors",
        "",
        on_extremal.to_string(),
        true,
    );
    r.push("(2') identity on all of L", "", on_basis.to_string(), true);
    r.assert("the four conditions agree", sc.consistent());
    if sc.holds() {
        let ux = RootGroup::new(l, x)?;
        let uy = RootGroup::new(l, y)?;
        let mut ok = true;
        let mut zero_and = vec![S::zero()];
        zero_and.extend(nonzero.iter().cloned());
        for s in &zero_and {
            for t in &zero_and {
                let lhs = uy.at(t).matrix.mul(&ux.at(s).matrix);
                let v = combo(s, t);
                let rhs = if is_zero_vec(&v) {
                    Matrix::identity(l.dim())
                } else {
                    RootGroup::new(l, &v)?.at(&S::one()).matrix
                };
                ok &= lhs == rhs;
            }
        }
        r.assert("exp(y,t) exp(x,s) = exp(sx+ty, 1)", ok);
    }
    Ok((r, sc))
}

/// Points `x + c y` and `y` of the projective line through `x` and `y`.
fn line_points<S: Scalar>(x: &[S], y: &[S], samples: &[S]) -> Vec<Vec<S>> {
    let mut pts: Vec<Vec<S>> = samples.iter().map(|c| add_vec(x, &scaled(y, c))).collect();
    if !samples.iter().any(|c| c.is_zero()) {
        pts.push(x.to_vec());
    }
    pts.push(y.to_vec());
    pts
}

/// Three commuting extremal points on a line force the whole line to be extremal.
pub fn projective_line_check<S: Scalar>(
    l: &LieAlgebra<S>,
    x: &[S],
    y: &[S],
    third: &[S],
    samples: &[S],
) -> Result<Report> {
    let n = l.dim();
    if !(l.commute(x, y) && l.commute(x, third) && l.commute(y, third)) {
        return Err(Error::PreconditionNotMet(
            "points do not commute pairwise".into(),
        ));
    }
    let line = Subspace::span(n, &[x.to_vec(), y.to_vec()]);
    let on_line = line.dim() == 2 && line.contains(third);
    let distinct = [x, y]
        .iter()
        .all(|p| Subspace::span(n, &[p.to_vec(), third.to_vec()]).dim() == 2);
    if !(on_line && distinct) {
        return Err(Error::PreconditionNotMet(
            "third point is not a new point on the line".into(),
        ));
    }
    let hyp = is_extremal(l, x) && is_extremal(l, y) && is_extremal(l, third);
    let pts = line_points(x, y, samples);
    let bad: Vec<String> = pts
        .iter()
        .filter(|p| !is_extremal(l, p))
        .map(|p| l.format_element(p))
        .collect();
    let mut r = Report::new(format!(
        "projective line through {} and {}",
        l.format_element(x),
        l.format_element(y)
    ));
    r.push("three given points extremal", "", hyp.to_string(), true);
    r.push("points checked", "", pts.len().to_string(), true);
    r.push(
        "non-extremal points",
        "",
        if bad.is_empty() {
            "none".into()
        } else {
            bad.join("; ")
        },
        true,
    );
    r.assert(
        "three extremal points imply an extremal line",
        !hyp || bad.is_empty(),
    );
    Ok(r)
}

/// Random search for extremal `x1, x2, x3` with `(x1, x2)` strongly commuting,
/// `[x2, x3] = 0` and `f(x1, x3) != 0`. Returns the number of chains tried
/// and the counterexamples found.
pub fn chain_probe<S: Scalar>(
    c: &ChevalleyAlgebra<S>,
    trials: usize,
    seed: u64,
) -> Result<(usize, usize)> {
    let l = &c.algebra;
    let rs = &c.roots;
    let long = rs.long_roots();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples = sample_set::<S>(None);
    let nonzero: Vec<S> = samples.into_iter().filter(|s| !s.is_zero()).collect();
    // strongly commuting root pairs: alpha + beta not a root, alpha - beta a root
    let pairs: Vec<(Root, Root)> = long
        .iter()
        .flat_map(|a| long.iter().map(move |b| (a.clone(), b.clone())))
        .filter(|(a, b)| {
            a != b
                && !rs.is_root(&add(a, b))
                && add(a, b).iter().any(|v| *v != 0)
                && rs.is_root(&sub(a, b))
        })
        .collect();
    if pairs.is_empty() {
        return Ok((0, 0));
    }
    let mut tried = 0;
    let mut found = 0;
    for _ in 0..trials {
        let (a, b) = &pairs[rng.random_range(0..pairs.len())];
        let x1 = c.root_element(a)?;
        let x2 = c.root_element(b)?;
        // x3 = h x_gamma with h fixing x2 and x_gamma commuting with x2
        let fixers: Vec<&Root> = long
            .iter()
            .filter(|d| !rs.is_root(&add(d, b)) && **d != neg(b))
            .collect();
        let g = fixers[rng.random_range(0..fixers.len())];
        let mut x3 = c.root_element(g)?;
        for _ in 0..3 {
            let d = fixers[rng.random_range(0..fixers.len())];
            let t = &nonzero[rng.random_range(0..nonzero.len())];
            x3 = RootGroup::new(l, &c.root_element(d)?)?
                .at(t)
                .matrix
                .mul_vec(&x3);
        }
        if !l.commute(&x2, &x3) || !is_extremal(l, &x3) {
            continue;
        }
        tried += 1;
        let f1 = extremal_functional(l, &x1)?.expect("root element");
        if !dot(&f1, &x3).is_zero() {
            found += 1;
        }
    }
    Ok((tried, found))
}

/// Representative pairs of root elements of each type, also moved by a seeded automorphism.
pub fn representative_pairs<S: Scalar>(
    c: &ChevalleyAlgebra<S>,
    seed: u64,
) -> Result<Vec<(Vec<S>, Vec<S>)>> {
    let rs = &c.roots;
    let long = rs.long_roots();
    let a = rs.highest_root();
    let find = |pred: &dyn Fn(&Root) -> bool| long.iter().find(|b| pred(b)).cloned();
    let mut pairs = Vec::new();
    let xa = c.root_element(&a)?;
    pairs.push((xa.clone(), scaled(&xa, &S::from_i64(2))));
    if let Some(b) =
        find(&|b| *b != a && !rs.is_root(&add(&a, b)) && add(&a, b).iter().any(|v| *v != 0))
    {
        pairs.push((xa.clone(), c.root_element(&b)?));
    }
    if let Some(b) = find(&|b| rs.is_root(&add(&a, b))) {
        pairs.push((xa.clone(), c.root_element(&b)?));
    }
    pairs.push((xa.clone(), c.root_element(&neg(&a))?));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<S> = sample_set::<S>(None)
        .into_iter()
        .filter(|s| !s.is_zero())
        .collect();
    let mut g = Matrix::identity(c.dim());
    for _ in 0..2 {
        let d = &long[rng.random_range(0..long.len())];
        let t = &samples[rng.random_range(0..samples.len())];
        g = RootGroup::new(&c.algebra, &c.root_element(d)?)?
            .at(t)
            .matrix
            .mul(&g);
    }
    let moved: Vec<_> = pairs
        .iter()
        .map(|(x, y)| (g.mul_vec(x), g.mul_vec(y)))
        .collect();
    pairs.extend(moved);
    Ok(pairs)
}

/// Commuting long root elements whose sum and difference are not roots.
pub fn polar_pair<S: Scalar>(c: &ChevalleyAlgebra<S>) -> Result<Option<(Vec<S>, Vec<S>)>> {
    let rs = &c.roots;
    let long = rs.long_roots();
    for a in &long {
        for b in &long {
            if a != b && *a != neg(b) && !rs.is_root(&add(a, b)) && !rs.is_root(&sub(a, b)) {
                return Ok(Some((c.root_element(a)?, c.root_element(b)?)));
            }
        }
    }
    Ok(None)
}

/// All root group checks on one Chevalley algebra.
pub fn rootgroups_report<S: Scalar>(
    c: &ChevalleyAlgebra<S>,
    seed: u64,
) -> Result<(Report, Vec<RootGroupRow>)> {
    let l = &c.algebra;
    let samples = sample_set::<S>(Some(seed));
    let mut r = Report::new(format!("root groups of {} over {}", c.name(), S::field()));
    let mut rows = Vec::new();
    let mut seen = Vec::new();
    for (x, y) in representative_pairs(c, seed)? {
        let (pr, pr_rows) = verify_abstract_root_properties(l, &x, &y, &samples)?;
        let case = pr_rows[0].case;
        seen.push(case);
        r.absorb(&format!("{case:?}"), pr);
        rows.extend(pr_rows);
        if case == PairType::Nilpotent {
            // x and [x,y] satisfy the strong commutation conditions
            let xy = l.bracket(&x, &y);
            let (sr, sc) = strongcomm_check(l, &x, &xy, &samples)?;
            r.assert("x and [x,y] strongly commute", sc.holds());
            r.absorb("strongcomm", sr);
            let third = add_vec(&x, &xy);
            r.absorb("line", projective_line_check(l, &x, &xy, &third, &samples)?);
        }
    }
    for t in [
        PairType::Equal,
        PairType::Commuting,
        PairType::Nilpotent,
        PairType::Special,
    ] {
        r.assert(format!("pair type {t:?} represented"), seen.contains(&t));
    }
    if let Some((x, y)) = polar_pair(c)? {
        let (sr, sc) = strongcomm_check(l, &x, &y, &samples)?;
        r.assert(
            "orthogonal commuting roots fail strong commutation",
            !sc.holds(),
        );
        r.absorb("polar", sr);
        let third = add_vec(&x, &y);
        let lr = projective_line_check(l, &x, &y, &third, &samples)?;
        r.assert(
            "line through orthogonal roots has a non-extremal point",
            lr.checks
                .iter()
                .any(|c| c.name == "non-extremal points" && c.actual != "none"),
        );
        r.absorb("polar line", lr);
    }
    let gens: Vec<Vec<S>> = c
        .roots
        .long_roots()
        .iter()
        .map(|a| c.root_element(a))
        .collect::<Result<_>>()?;
    let f = extremal_form(l, &extremal_spanning_closure(l, &gens))?;
    let mut preserved = true;
    for a in c.roots.long_roots() {
        let u = RootGroup::new(l, &c.root_element(&a)?)?;
        preserved &= samples.iter().all(|t| f.is_preserved_by(&u.at(t).matrix));
    }
    r.assert("every exp(x_a, t) preserves f", preserved);
    let (tried, found) = chain_probe(c, 200, seed)?;
    r.push("chain probe trials", "> 0", tried.to_string(), tried > 0);
    r.expect("chain counterexamples", 0, found);
    Ok((r, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::chevalley_algebra;
    use crate::liealg::sl2;
    use crate::rootdata::CartanType;
    use crate::scalars::{Gf5, Q};

    #[test]
    fn sl2_special_pair_exhaustive() {
        let l = sl2::<Gf5>();
        let (r, rows) = verify_abstract_root_properties(
            &l,
            &l.basis_vector(0),
            &l.basis_vector(2),
            &sample_set(None),
        )
        .unwrap();
        assert!(r.pass(), "{r}");
        assert_eq!(rows[0].case, PairType::Special);
    }

    #[test]
    fn a2_over_rationals() {
        let (r, _) =
            rootgroups_report(&chevalley_algebra::<Q>(CartanType::A, 2).unwrap(), 1).unwrap();
        assert!(r.pass(), "{r}");
    }

    #[test]
    fn a3_commuting_and_polar() {
        let c = chevalley_algebra::<Gf5>(CartanType::A, 3).unwrap();
        let (x, y) = polar_pair(&c).unwrap().unwrap();
        let (r, rows) =
            verify_abstract_root_properties(&c.algebra, &x, &y, &sample_set(None)).unwrap();
        assert!(r.pass(), "{r}");
        assert_eq!(rows[0].case, PairType::Commuting);
        let (_, sc) = strongcomm_check(&c.algebra, &x, &y, &sample_set(None)).unwrap();
        assert!(sc.consistent() && !sc.holds());
    }
}
