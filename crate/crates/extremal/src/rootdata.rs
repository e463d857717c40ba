//! Root systems of types A to G and Chevalley structure constants.
//!
//! Roots are integer vectors over the simple roots, labelled as in Bourbaki.
//! The inner product is an integral multiple of the usual one, which leaves
//! Cartan integers and length ratios unchanged.
//!
//! Signs follow the extraspecial-pair method: positive roots are ordered by
//! height, then by coordinates, and `N_{a,b} = +(p+1)` for every extraspecial
//! pair. All other constants are forced by the Jacobi identity.

use std::collections::HashMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Tag written next to every structure-constant export and cache entry.
pub const CONVENTION_VERSION: &str = "extraspecial-height-lex-v1";

pub type Root = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Result<Self> {
        Ok(match c.to_ascii_uppercase() {
            'A' => CartanType::A,
            'B' => CartanType::B,
            'C' => CartanType::C,
            'D' => CartanType::D,
            'E' => CartanType::E,
            'F' => CartanType::F,
            'G' => CartanType::G,
            other => return Err(Error::UnsupportedType(other.to_string())),
        })
    }

    pub fn check_rank(self, n: usize) -> Result<()> {
        let ok = match self {
            CartanType::A => n >= 1,
            CartanType::B | CartanType::C => n >= 2,
            CartanType::D => n >= 4,
            CartanType::E => (6..=8).contains(&n),
            CartanType::F => n == 4,
            CartanType::G => n == 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidRank(self.letter(), n))
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Parse `"G2"`, `"E8"`, or a bare letter with a separate rank.
pub fn parse_type(s: &str, rank: Option<usize>) -> Result<(CartanType, usize)> {
    let s = s.trim();
    let mut chars = s.chars();
    let ty = CartanType::from_letter(
        chars
            .next()
            .ok_or_else(|| Error::Parse("empty type".into()))?,
    )?;
    let rest: String = chars.collect();
    let n = if rest.is_empty() {
        rank.ok_or_else(|| Error::Parse(format!("type {s} needs a rank")))?
    } else {
        let n: usize = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in {s}")))?;
        if let Some(r) = rank {
            if r != n {
                return Err(Error::Parse(format!("rank {r} conflicts with {s}")));
            }
        }
        n
    };
    ty.check_rank(n)?;
    Ok((ty, n))
}

/// The Gram matrix of the simple roots, scaled to integers.
fn gram(ty: CartanType, n: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; n]; n];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match ty {
        CartanType::A | CartanType::D | CartanType::E => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = 2;
            }
            match ty {
                CartanType::A => (0..n - 1).for_each(|i| link(&mut g, i, i + 1, -1)),
                CartanType::D => {
                    (0..n - 2).for_each(|i| link(&mut g, i, i + 1, -1));
                    link(&mut g, n - 3, n - 1, -1);
                }
                _ => {
                    link(&mut g, 0, 2, -1);
                    link(&mut g, 1, 3, -1);
                    (2..n - 1).for_each(|i| link(&mut g, i, i + 1, -1));
                }
            }
        }
        // long 4, short 2
        CartanType::B => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = if i + 1 == n { 2 } else { 4 };
            }
            (0..n - 1).for_each(|i| link(&mut g, i, i + 1, -2));
        }
        // alpha_i = e_i - e_{i+1}, alpha_n = 2 e_n
        CartanType::C => {
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = if i + 1 == n { 4 } else { 2 };
            }
            (0..n - 2).for_each(|i| link(&mut g, i, i + 1, -1));
            link(&mut g, n - 2, n - 1, -2);
        }
        CartanType::F => {
            g = vec![
                vec![4, -2, 0, 0],
                vec![-2, 4, -2, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ];
        }
        CartanType::G => {
            g = vec![vec![2, -3], vec![-3, 6]];
        }
    }
    g
}

/// A reduced irreducible root system with a fixed ordering of its roots.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub ty: CartanType,
    pub rank: usize,
    gram: Vec<Vec<i64>>,
    /// Positive roots in the fixed order, followed by their negatives in the same order.
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn new(ty: CartanType, n: usize) -> Result<Self> {
        ty.check_rank(n)?;
        let gram = gram(ty, n);
        let mut positive: Vec<Root> = (0..n).map(|i| unit(n, i)).collect();
        let mut known: HashMap<Root, ()> = positive.iter().map(|r| (r.clone(), ())).collect();
        let mut layer = positive.clone();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for b in &layer {
                for i in 0..n {
                    let ai = unit(n, i);
                    if *b == ai {
                        continue;
                    }
                    let mut p = 0;
                    let mut down = b.clone();
                    loop {
                        down[i] -= 1;
                        if !known.contains_key(&down) {
                            break;
                        }
                        p += 1;
                    }
                    let cartan = 2 * ip(&gram, b, &ai) / gram[i][i];
                    if p - cartan > 0 {
                        let mut up = b.clone();
                        up[i] += 1;
                        if known.insert(up.clone(), ()).is_none() {
                            next.push(up);
                        }
                    }
                }
            }
            positive.extend(next.iter().cloned());
            layer = next;
        }
        positive.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| a.cmp(b)));
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| neg(r)));
        let index = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        Ok(RootSystem {
            ty,
            rank: n,
            gram,
            roots,
            index,
        })
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.ty, self.rank)
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive()]
    }

    pub fn simple_root(&self, i: usize) -> Root {
        unit(self.rank, i)
    }

    pub fn index_of(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &[i64]) -> bool {
        self.index.contains_key(r)
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        ip(&self.gram, a, b)
    }

    pub fn norm(&self, a: &[i64]) -> i64 {
        self.inner(a, a)
    }

    /// `<a, b^vee> = 2(a,b)/(b,b)`.
    pub fn cartan_integer(&self, a: &[i64], b: &[i64]) -> i64 {
        2 * self.inner(a, b) / self.norm(b)
    }

    /// Rows `i`, columns `j`: `<alpha_i, alpha_j^vee>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.cartan_integer(&unit(n, i), &unit(n, j)))
                    .collect()
            })
            .collect()
    }

    pub fn highest_root(&self) -> Root {
        self.positive_roots().last().expect("nonempty").clone()
    }

    fn max_norm(&self) -> i64 {
        self.roots.iter().map(|r| self.norm(r)).max().unwrap_or(0)
    }

    pub fn is_long(&self, r: &[i64]) -> bool {
        self.norm(r) == self.max_norm()
    }

    pub fn long_roots(&self) -> Vec<Root> {
        self.roots
            .iter()
            .filter(|r| self.is_long(r))
            .cloned()
            .collect()
    }

    pub fn short_roots(&self) -> Vec<Root> {
        self.roots
            .iter()
            .filter(|r| !self.is_long(r))
            .cloned()
            .collect()
    }

    /// Largest `p` with `b - p a` a root.
    pub fn string_down(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut p = 0;
        let mut cur = b.to_vec();
        loop {
            cur = sub(&cur, a);
            if !self.is_root(&cur) {
                return p;
            }
            p += 1;
        }
    }

    /// Simple roots in the orthonormal basis, doubled so that the entries are integers.
    fn simple_eps_doubled(&self) -> Option<Vec<Vec<i64>>> {
        let n = self.rank;
        let e = |i: usize, c: i64| {
            let mut v = vec![0; n];
            v[i] = c;
            v
        };
        let diff = |i: usize, j: usize, s: i64| {
            let mut v = vec![0; n];
            v[i] += 2;
            v[j] += 2 * s;
            v
        };
        let mut out: Vec<Vec<i64>> = (0..n.saturating_sub(1))
            .map(|i| diff(i, i + 1, -1))
            .collect();
        match self.ty {
            CartanType::B => out.push(e(n - 1, 2)),
            CartanType::C => out.push(e(n - 1, 4)),
            CartanType::D => out.push(diff(n - 2, n - 1, 1)),
            CartanType::F => {
                return Some(vec![
                    diff(1, 2, -1),
                    diff(2, 3, -1),
                    e(3, 2),
                    vec![1, -1, -1, -1],
                ]);
            }
            _ => return None,
        }
        Some(out)
    }

    /// Coordinates of a root in the orthonormal basis (types B, C, D, F).
    pub fn to_eps(&self, r: &[i64]) -> Option<Vec<Ratio<i64>>> {
        let s = self.simple_eps_doubled()?;
        let mut v = vec![0i64; self.rank];
        for (c, row) in r.iter().zip(&s) {
            for (x, y) in v.iter_mut().zip(row) {
                *x += c * y;
            }
        }
        Some(v.into_iter().map(|x| Ratio::new(x, 2)).collect())
    }

    /// The root with the given orthonormal coordinates (types B, C, D, F).
    pub fn from_eps(&self, eps: &[Ratio<i64>]) -> Option<Root> {
        let s = self.simple_eps_doubled()?;
        let n = self.rank;
        let target: Vec<Ratio<i64>> = eps.iter().map(|x| x * Ratio::from_integer(2)).collect();
        let mut m: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Ratio::from_integer(s[j][i]))
                    .chain([target[i]])
                    .collect()
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, piv);
            let p = m[col][col];
            for x in m[col].iter_mut() {
                *x /= p;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col];
                    let row = m[col].clone();
                    for (x, y) in m[r].iter_mut().zip(row) {
                        *x -= f * y;
                    }
                }
            }
        }
        let coords: Option<Root> = m
            .iter()
            .map(|row| row[n].is_integer().then(|| row[n].to_integer()))
            .collect();
        coords.filter(|c| self.is_root(c))
    }

    /// `"e1+e2"` style text for types with orthonormal coordinates, else the
    /// simple-root coordinates, e.g. `"-(1,2,2)"`.
    pub fn root_label(&self, r: &[i64]) -> String {
        if let Some(e) = self.to_eps(r) {
            let mut s = String::new();
            for (i, c) in e.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let sign = if c.is_negative() {
                    "-"
                } else if s.is_empty() {
                    ""
                } else {
                    "+"
                };
                let mag = c.abs();
                let coef = if mag == Ratio::from_integer(1) {
                    String::new()
                } else {
                    format!("{mag}")
                };
                s.push_str(&format!("{sign}{coef}e{}", i + 1));
            }
            return s;
        }
        let neg = r.iter().all(|&c| c <= 0);
        let body: Vec<String> = r.iter().map(|c| c.abs().to_string()).collect();
        if neg {
            format!("-({})", body.join(","))
        } else {
            format!("({})", body.join(","))
        }
    }
}

fn unit(n: usize, i: usize) -> Root {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn ip(g: &[Vec<i64>], a: &[i64], b: &[i64]) -> i64 {
    let mut s = 0;
    for (i, ai) in a.iter().enumerate().filter(|(_, x)| **x != 0) {
        for (j, bj) in b.iter().enumerate().filter(|(_, x)| **x != 0) {
            s += ai * bj * g[i][j];
        }
    }
    s
}

pub fn height(r: &[i64]) -> i64 {
    r.iter().sum()
}

pub fn neg(r: &[i64]) -> Root {
    r.iter().map(|x| -x).collect()
}

pub fn add(a: &[i64], b: &[i64]) -> Root {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[i64], b: &[i64]) -> Root {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Constructor shorthand.
pub fn root_system(ty: CartanType, n: usize) -> Result<RootSystem> {
    RootSystem::new(ty, n)
}

/// Structure constants `N_{a,b}` with `[x_a, x_b] = N_{a,b} x_{a+b}`.
#[derive(Clone, Debug)]
pub struct ChevalleyConstants {
    /// Keyed by root indices; only pairs whose sum is a root are present.
    n: HashMap<(usize, usize), i64>,
    pub convention_version: &'static str,
}

impl ChevalleyConstants {
    /// `N_{a,b}` by root indices; zero when `a+b` is not a root.
    pub fn get(&self, a: usize, b: usize) -> i64 {
        self.n.get(&(a, b)).copied().unwrap_or(0)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&(usize, usize), &i64)> {
        self.n.iter()
    }

    /// `(a, b, N_{a,b})` triples in a fixed order, for serialization.
    pub fn sorted_triples(&self) -> Vec<(usize, usize, i64)> {
        let mut v: Vec<_> = self.n.iter().map(|(&(a, b), &c)| (a, b, c)).collect();
        v.sort_unstable();
        v
    }

    pub fn from_triples(triples: &[(usize, usize, i64)]) -> Self {
        ChevalleyConstants {
            n: triples.iter().map(|&(a, b, c)| ((a, b), c)).collect(),
            convention_version: CONVENTION_VERSION,
        }
    }
}

/// Chevalley structure constants by the extraspecial-pair method.
pub fn chevalley_constants(rs: &RootSystem) -> ChevalleyConstants {
    let np = rs.num_positive();
    let roots = rs.roots();
    // positive pairs (a, b) with a < b in the order and a + b a root, keyed by (a, b)
    let mut pos: HashMap<(usize, usize), Ratio<i64>> = HashMap::new();
    let norm = |r: &[i64]| Ratio::from_integer(rs.norm(r));
    let get_pos = |pos: &HashMap<(usize, usize), Ratio<i64>>, a: usize, b: usize| -> Ratio<i64> {
        if a < b {
            pos.get(&(a, b)).copied().unwrap_or_default()
        } else {
            -pos.get(&(b, a)).copied().unwrap_or_default()
        }
    };
    // N_{b,-c} for positive b, c, from positive constants of smaller height
    let mixed = |pos: &HashMap<(usize, usize), Ratio<i64>>, b: usize, c: usize| -> Ratio<i64> {
        let d = sub(&roots[b], &roots[c]);
        match rs.index_of(&d) {
            None => Ratio::zero(),
            Some(k) if k < np => norm(&d) / norm(&roots[b]) * get_pos(pos, k, c),
            Some(k) => {
                let k = k - np;
                norm(&roots[k]) / norm(&roots[c]) * get_pos(pos, k, b)
            }
        }
    };
    for xi in 0..np {
        let mut special: Vec<(usize, usize)> = Vec::new();
        for a in 0..xi {
            let b_root = sub(&roots[xi], &roots[a]);
            if let Some(b) = rs.index_of(&b_root) {
                if b < np && a < b {
                    special.push((a, b));
                }
            }
        }
        let Some(&(g, d)) = special.first() else {
            continue;
        };
        let p = rs.string_down(&roots[g], &roots[d]);
        pos.insert((g, d), Ratio::from_integer(p + 1));
        let xi_norm = norm(&roots[xi]);
        for &(a, b) in &special[1..] {
            // N_{-g,-d} = -N_{g,d}
            let n_gd = pos[&(g, d)];
            let t1 = {
                let diff = sub(&roots[b], &roots[g]);
                if rs.is_root(&diff) {
                    mixed(&pos, b, g) * mixed(&pos, a, d) / norm(&diff)
                } else {
                    Ratio::zero()
                }
            };
            let t2 = {
                let diff = sub(&roots[a], &roots[g]);
                if rs.is_root(&diff) {
                    // N_{-g,a} = -N_{a,-g}
                    -mixed(&pos, a, g) * mixed(&pos, b, d) / norm(&diff)
                } else {
                    Ratio::zero()
                }
            };
            let v = xi_norm / n_gd * (t1 + t2);
            pos.insert((a, b), v);
        }
    }
    let mut n = HashMap::new();
    let total = roots.len();
    for a in 0..total {
        for b in 0..total {
            let s = add(&roots[a], &roots[b]);
            if !rs.is_root(&s) {
                continue;
            }
            let (pa, pb) = (a < np, b < np);
            let v = match (pa, pb) {
                (true, true) => get_pos(&pos, a, b),
                (false, false) => -get_pos(&pos, a - np, b - np),
                (true, false) => mixed(&pos, a, b - np),
                (false, true) => -mixed(&pos, b, a - np),
            };
            assert!(
                v.is_integer() && !v.is_zero(),
                "structure constant {v} for roots {a}, {b}"
            );
            n.insert((a, b), v.to_integer());
        }
    }
    ChevalleyConstants {
        n,
        convention_version: CONVENTION_VERSION,
    }
}

/// Number of roots of an irreducible system, for sanity checks.
pub fn expected_root_count(ty: CartanType, n: usize) -> usize {
    match ty {
        CartanType::A => n * (n + 1),
        CartanType::B | CartanType::C => 2 * n * n,
        CartanType::D => 2 * n * (n - 1),
        CartanType::E => [72, 126, 240][n - 6],
        CartanType::F => 48,
        CartanType::G => 12,
    }
}

/// Pairs violating `|N_{a,b}| = p + 1`, where `b - p a` ends the `a`-string through `b`.
pub fn root_string_violations(rs: &RootSystem, c: &ChevalleyConstants) -> Vec<(usize, usize)> {
    let roots = rs.roots();
    c.pairs()
        .filter(|((a, b), v)| {
            let p = rs.string_down(&roots[*a], &roots[*b]);
            v.abs() != p + 1
        })
        .map(|(k, _)| *k)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        for (ty, n) in [
            (CartanType::A, 3),
            (CartanType::B, 3),
            (CartanType::C, 4),
            (CartanType::D, 5),
            (CartanType::E, 6),
            (CartanType::E, 8),
            (CartanType::F, 4),
            (CartanType::G, 2),
        ] {
            let rs = RootSystem::new(ty, n).unwrap();
            assert_eq!(rs.roots().len(), expected_root_count(ty, n), "{ty}{n}");
        }
    }

    #[test]
    fn g2_lengths() {
        let rs = RootSystem::new(CartanType::G, 2).unwrap();
        assert_eq!(rs.long_roots().len(), 6);
        assert_eq!(rs.highest_root(), vec![3, 2]);
    }

    #[test]
    fn b3_highest_root() {
        let rs = RootSystem::new(CartanType::B, 3).unwrap();
        let h = rs.highest_root();
        assert_eq!(h, vec![1, 2, 2]);
        assert!(rs.is_long(&h));
        assert_eq!(rs.root_label(&h), "e1+e2");
        let e = |v: [i64; 3]| v.map(Ratio::from_integer).to_vec();
        assert_eq!(rs.from_eps(&e([1, 1, 0])), Some(h));
        assert_eq!(rs.from_eps(&e([1, 0, 0])), Some(vec![1, 1, 1]));
    }

    #[test]
    fn invalid_ranks() {
        assert_eq!(
            RootSystem::new(CartanType::D, 3).unwrap_err(),
            Error::InvalidRank('D', 3)
        );
        assert!(RootSystem::new(CartanType::E, 9).is_err());
        assert_eq!(parse_type("g2", None).unwrap(), (CartanType::G, 2));
    }

    #[test]
    fn constants_follow_root_strings() {
        for (ty, n) in [
            (CartanType::A, 2),
            (CartanType::B, 3),
            (CartanType::C, 3),
            (CartanType::F, 4),
            (CartanType::G, 2),
        ] {
            let rs = RootSystem::new(ty, n).unwrap();
            let c = chevalley_constants(&rs);
            assert!(root_string_violations(&rs, &c).is_empty(), "{ty}{n}");
        }
        let rs = RootSystem::new(CartanType::G, 2).unwrap();
        let c = chevalley_constants(&rs);
        assert!(c.pairs().any(|(_, v)| v.abs() == 3));
    }
}
