//! Property checks shared by the proptest suite and the acceptance runner.
//! Each returns `Err` with a description of the first counterexample.

#![allow(dead_code)]

use std::collections::BTreeMap;

use extremal_lie::chevalley::{chevalley_algebra, extremal_spanning_set, ChevalleyAlgebra};
use extremal_lie::freelie::{lyndon_basis, witt_dimension, FreeLie, FreeLieElement};
use extremal_lie::liealg::{
    extremal_form, extremal_functional, is_extremal, is_sandwich, LieAlgebra,
};
use extremal_lie::linalg::{dot, is_zero_vec, scaled, Matrix, Subspace};
use extremal_lie::nilquot::sandwich_algebra;
use extremal_lie::rootdata::{add, CartanType};
use extremal_lie::rootgroups::RootGroup;
use extremal_lie::{Scalar, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<(), String>;

/// Lyndon words of length `d` over `r` letters, counted from the definition:
/// strictly smaller than every proper rotation.
pub fn lyndon_count_brute(r: usize, d: usize) -> u64 {
    let mut count = 0;
    let mut w = vec![0usize; d];
    loop {
        let lyndon = (1..d).all(|k| {
            let rot: Vec<usize> = w[k..].iter().chain(&w[..k]).copied().collect();
            w < rot
        });
        if lyndon {
            count += 1;
        }
        let mut i = d;
        loop {
            if i == 0 {
                return count;
            }
            i -= 1;
            w[i] += 1;
            if w[i] < r {
                break;
            }
            w[i] = 0;
        }
    }
}

/// Witt dimensions, the Lyndon basis and the span of `[x_i, L_{d-1}]` agree.
pub fn witt_check(r: usize, d: usize) -> Check {
    let brute = lyndon_count_brute(r, d);
    let witt = witt_dimension(r, d);
    let basis = lyndon_basis(r, d);
    if witt != brute || basis.len() as u64 != brute {
        return Err(format!(
            "r={r} d={d}: witt {witt}, basis {}, brute force {brute}",
            basis.len()
        ));
    }
    if d < 2 {
        return Ok(());
    }
    let f = FreeLie::<Q>::new(r);
    let index: BTreeMap<_, usize> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, w)| (w, i))
        .collect();
    let lower = lyndon_basis(r, d - 1);
    let mut vecs = Vec::new();
    for i in 1..=r {
        for w in lower.iter() {
            let e = f.bracket(&f.generator(i as u8), &FreeLieElement::basis(w.clone()));
            let mut v = vec![Q::from_i64(0); basis.len()];
            for (word, c) in &e.terms {
                v[index[word]] = c.clone();
            }
            vecs.push(v);
        }
    }
    let rank = Subspace::span(basis.len(), &vecs).dim() as u64;
    if rank != brute {
        return Err(format!(
            "r={r} d={d}: [x_i, L_(d-1)] spans {rank}, expected {brute}"
        ));
    }
    Ok(())
}

type Table<S> = BTreeMap<(usize, usize), Vec<(usize, S)>>;

fn table_of<S: Scalar>(l: &LieAlgebra<S>) -> Table<S> {
    let n = l.dim();
    let mut t = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            t.insert((i, j), l.structure(i, j).to_vec());
        }
    }
    t
}

fn bracket_in<S: Scalar>(t: &Table<S>, n: usize, a: &[S], b: &[S]) -> Vec<S> {
    let mut out = vec![S::zero(); n];
    for i in 0..n {
        for j in 0..n {
            if a[i].is_zero() || b[j].is_zero() {
                continue;
            }
            for (k, c) in &t[&(i, j)] {
                out[*k] = out[*k].clone() + a[i].clone() * b[j].clone() * c.clone();
            }
        }
    }
    out
}

fn unit<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); n];
    v[i] = S::one();
    v
}

/// Independent evaluation of antisymmetry and the Jacobi identity on a table.
fn table_is_lie<S: Scalar>(t: &Table<S>, n: usize) -> bool {
    let e: Vec<Vec<S>> = (0..n).map(|i| unit(n, i)).collect();
    for i in 0..n {
        for j in 0..n {
            let a = bracket_in(t, n, &e[i], &e[j]);
            let b = bracket_in(t, n, &e[j], &e[i]);
            if a.iter()
                .zip(&b)
                .any(|(x, y)| !(x.clone() + y.clone()).is_zero())
            {
                return false;
            }
            for k in 0..n {
                let mut s = bracket_in(t, n, &e[i], &bracket_in(t, n, &e[j], &e[k]));
                let s2 = bracket_in(t, n, &e[j], &bracket_in(t, n, &e[k], &e[i]));
                let s3 = bracket_in(t, n, &e[k], &bracket_in(t, n, &e[i], &e[j]));
                for m in 0..n {
                    s[m] = s[m].clone() + s2[m].clone() + s3[m].clone();
                }
                if !is_zero_vec(&s) {
                    return false;
                }
            }
        }
    }
    true
}

/// Perturb one structure constant of `l` (optionally also its mirror) and
/// compare the validator with the independent evaluation.
pub fn validator_check<S: Scalar>(l: &LieAlgebra<S>, seed: u64) -> Check {
    let n = l.dim();
    let mut t = table_of(l);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nonzero: Vec<(usize, usize)> = t
        .iter()
        .filter(|(_, v)| !v.is_empty())
        .map(|(k, _)| *k)
        .collect();
    let (i, j) = nonzero[rng.random_range(0..nonzero.len())];
    let factor = S::from_i64(rng.random_range(2..5));
    let mirror = rng.random_bool(0.5);
    let scale = |v: &mut Vec<(usize, S)>| {
        if let Some(e) = v.first_mut() {
            e.1 = e.1.clone() * factor.clone();
        }
    };
    scale(t.get_mut(&(i, j)).unwrap());
    if mirror && i != j {
        scale(t.get_mut(&(j, i)).unwrap());
    }
    let triples: Vec<(usize, usize, usize, S)> = t
        .iter()
        .flat_map(|(&(a, b), v)| v.iter().map(move |(k, c)| (a, b, *k, c.clone())))
        .collect();
    let labels = l.labels().to_vec();
    let expected = table_is_lie(&t, n);
    let original: Vec<_> = table_of(l)
        .iter()
        .flat_map(|(&(a, b), v)| {
            v.iter()
                .map(move |(k, c)| (a, b, *k, c.clone()))
                .collect::<Vec<_>>()
        })
        .collect();
    if LieAlgebra::from_constants(labels.clone(), &original).is_err() {
        return Err("validator rejects an unperturbed algebra".into());
    }
    let got = LieAlgebra::from_constants(labels, &triples).is_ok();
    if got != expected {
        return Err(format!("perturbing [b{i}, b{j}] (mirror {mirror}): validator {got}, direct evaluation {expected}"));
    }
    Ok(())
}

/// Random conjugate of a root element: apply a seeded product of root group elements.
fn random_automorphism<S: Scalar>(
    c: &ChevalleyAlgebra<S>,
    rng: &mut ChaCha8Rng,
    len: usize,
) -> Matrix<S> {
    let long = c.roots.long_roots();
    let mut g = Matrix::identity(c.dim());
    for _ in 0..len {
        let a = &long[rng.random_range(0..long.len())];
        let t = S::from_i64(rng.random_range(-3..=3));
        let u = RootGroup::new(&c.algebra, &c.root_element(a).unwrap()).unwrap();
        g = u.at(&t).matrix.mul(&g);
    }
    g
}

/// Extremal `x, y` with `f(x,y) = 0` and `[x,y] != 0` give an extremal
/// `[x,y]` with `f_[x,y](z) = (f_x([y,z]) - f_y([x,z])) / 2`.
pub fn cor_bracket_extremal_check<S: Scalar>(ty: CartanType, n: usize, seed: u64) -> Check {
    let c = chevalley_algebra::<S>(ty, n).map_err(|e| e.to_string())?;
    let l = &c.algebra;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let long = c.roots.long_roots();
    let pairs: Vec<_> = long
        .iter()
        .flat_map(|a| long.iter().map(move |b| (a, b)))
        .filter(|(a, b)| c.roots.is_root(&add(a, b)))
        .collect();
    let (a, b) = pairs[rng.random_range(0..pairs.len())];
    let g = random_automorphism(&c, &mut rng, 3);
    let s = S::from_i64(rng.random_range(1..=4));
    let x = g.mul_vec(&c.root_element(a).unwrap());
    let y = scaled(&g.mul_vec(&c.root_element(b).unwrap()), &s);
    let fx = extremal_functional(l, &x)
        .unwrap()
        .ok_or("x not extremal")?;
    let fy = extremal_functional(l, &y)
        .unwrap()
        .ok_or("y not extremal")?;
    let xy = l.bracket(&x, &y);
    if !dot(&fx, &y).is_zero() || is_zero_vec(&xy) {
        return Err("pair does not qualify".into());
    }
    let fxy = extremal_functional(l, &xy)
        .unwrap()
        .ok_or("[x,y] not extremal")?;
    for (k, value) in fxy.iter().enumerate() {
        let z = l.basis_vector(k);
        let rhs = (dot(&fx, &l.bracket(&y, &z)) - dot(&fy, &l.bracket(&x, &z))) * S::half();
        if *value != rhs {
            return Err(format!("f_[x,y] differs at basis vector {k}"));
        }
    }
    Ok(())
}

/// In the sandwich algebra `L_r`, the bracket of a sandwich with an extremal
/// element is zero or a sandwich.
pub fn cor_sandwich_check<S: Scalar>(r: usize, seed: u64) -> Check {
    let q = sandwich_algebra::<S>(r).map_err(|e| e.to_string())?;
    let l = &q.algebra;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens: Vec<Vec<S>> = (0..r).map(|i| q.generator(i)).collect();
    let conj = |v: &[S], rng: &mut ChaCha8Rng| {
        let mut v = v.to_vec();
        for _ in 0..3 {
            let g = &gens[rng.random_range(0..r)];
            let u = RootGroup::new(l, g).unwrap();
            v = u
                .at(&S::from_i64(rng.random_range(-3..=3)))
                .matrix
                .mul_vec(&v);
        }
        v
    };
    let x = conj(&gens[rng.random_range(0..r)], &mut rng);
    let y = conj(&gens[rng.random_range(0..r)], &mut rng);
    if !is_sandwich(l, &x) || !is_extremal(l, &y) {
        return Err("conjugates of generators lost extremality".into());
    }
    let xy = l.bracket(&x, &y);
    if !is_zero_vec(&xy) && !is_sandwich(l, &xy) {
        return Err("[x,y] is not a sandwich".into());
    }
    Ok(())
}

/// `f(g u, g v) = f(u, v)` for `g` a random product of `exp(x_a, t)`.
pub fn form_preservation_check<S: Scalar>(ty: CartanType, n: usize, seed: u64) -> Check {
    let c = chevalley_algebra::<S>(ty, n).map_err(|e| e.to_string())?;
    let f = extremal_form(&c.algebra, &extremal_spanning_set(&c)).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_automorphism(&c, &mut rng, 4);
    if !f.is_preserved_by(&g) {
        return Err(format!("{} form not preserved", c.name()));
    }
    Ok(())
}

/// Small algebras on which validator properties run.
pub fn validator_algebras() -> Vec<LieAlgebra<Q>> {
    vec![
        extremal_lie::liealg::sl2::<Q>(),
        chevalley_algebra::<Q>(CartanType::A, 2).unwrap().algebra,
        chevalley_algebra::<Q>(CartanType::B, 2).unwrap().algebra,
        sandwich_algebra::<Q>(3).unwrap().algebra,
    ]
}
