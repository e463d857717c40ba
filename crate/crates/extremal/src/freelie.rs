//! Free Lie algebras on `r` generators in the Lyndon basis.
//!
//! A Lyndon word stands for its standard bracketing. Brackets of basis
//! elements are rewritten into the basis with the usual recursion on the
//! standard factorization.

use std::cell::RefCell;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::scalars::Scalar;

/// A Lyndon word over the letters `1..=r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LyndonWord(Vec<u8>);

impl LyndonWord {
    /// Accepts `letters` only if it is a nonempty Lyndon word.
    pub fn new(letters: Vec<u8>) -> Option<Self> {
        is_lyndon(&letters).then_some(LyndonWord(letters))
    }

    pub fn letter(i: u8) -> Self {
        LyndonWord(vec![i])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multidegree(&self, r: usize) -> MultiDegree {
        MultiDegree::of_letters(r, &self.0)
    }

    /// Split `w = uv` with `v` the longest proper Lyndon suffix.
    pub fn standard_factorization(&self) -> Option<(LyndonWord, LyndonWord)> {
        if self.0.len() < 2 {
            return None;
        }
        (1..self.0.len())
            .find(|&i| is_lyndon(&self.0[i..]))
            .map(|i| {
                (
                    LyndonWord(self.0[..i].to_vec()),
                    LyndonWord(self.0[i..].to_vec()),
                )
            })
    }
}

impl fmt::Debug for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prints the standard bracketing, e.g. `[x1,[x1,x2]]`.
impl fmt::Display for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.standard_factorization() {
            None => write!(f, "x{}", self.0[0]),
            Some((u, v)) => write!(f, "[{u},{v}]"),
        }
    }
}

pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Occurrence counts of each generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree(pub Vec<usize>);

impl MultiDegree {
    pub fn zero(r: usize) -> Self {
        MultiDegree(vec![0; r])
    }

    pub fn unit(r: usize, i: usize) -> Self {
        let mut m = Self::zero(r);
        m.0[i] = 1;
        m
    }

    pub fn of_letters(r: usize, letters: &[u8]) -> Self {
        let mut m = Self::zero(r);
        for &l in letters {
            m.0[l as usize - 1] += 1;
        }
        m
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other` when nonnegative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiDegree)
    }
}

/// Lyndon words of length `d` on the letters `1..=r`, in lexicographic order.
///
/// Generated with Duval's algorithm and cached per `(r, d)`.
pub fn lyndon_basis(r: usize, d: usize) -> Arc<Vec<LyndonWord>> {
    type Cache = Mutex<HashMap<(usize, usize), Arc<Vec<LyndonWord>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache poisoned").get(&(r, d)) {
        return hit.clone();
    }
    let words = Arc::new(generate_lyndon(r, d));
    cache
        .lock()
        .expect("cache poisoned")
        .insert((r, d), words.clone());
    words
}

fn generate_lyndon(r: usize, d: usize) -> Vec<LyndonWord> {
    let mut out = Vec::new();
    if r == 0 || d == 0 {
        return out;
    }
    let r = r as u8;
    let mut w: Vec<u8> = vec![1];
    loop {
        if w.len() == d {
            out.push(LyndonWord(w.clone()));
        }
        let m = w.len();
        while w.len() < d {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&r) {
            w.pop();
        }
        match w.last_mut() {
            None => break,
            Some(c) => *c += 1,
        }
    }
    out
}

fn mobius(n: usize) -> i64 {
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Dimension of the degree-`d` component of the free Lie algebra on `r` generators.
pub fn witt_dimension(r: usize, d: usize) -> u64 {
    let total: i128 = (1..=d)
        .filter(|e| d.is_multiple_of(*e))
        .map(|e| mobius(e) as i128 * (r as i128).pow((d / e) as u32))
        .sum();
    (total / d as i128) as u64
}

/// A free Lie algebra element in the Lyndon basis, with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeLieElement<S> {
    pub terms: BTreeMap<LyndonWord, S>,
}

impl<S: Scalar> FreeLieElement<S> {
    pub fn zero() -> Self {
        FreeLieElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(w: LyndonWord) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, S::one());
        FreeLieElement { terms }
    }

    pub fn generator(i: u8) -> Self {
        Self::basis(LyndonWord::letter(i))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: LyndonWord, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &S, other: &Self) {
        for (w, v) in &other.terms {
            self.add_term(w.clone(), c.clone() * v.clone());
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        out.add_scaled(c, self);
        out
    }

    /// The common multidegree, when the element is homogeneous and nonzero.
    pub fn multidegree(&self, r: usize) -> Option<MultiDegree> {
        let mut it = self.terms.keys().map(|w| w.multidegree(r));
        let first = it.next()?;
        it.all(|m| m == first).then_some(first)
    }
}

/// Bracket arithmetic on a free Lie algebra with `r` generators.
pub struct FreeLie<S> {
    r: usize,
    memo: RefCell<HashMap<(LyndonWord, LyndonWord), FreeLieElement<S>>>,
}

impl<S: Scalar> FreeLie<S> {
    pub fn new(r: usize) -> Self {
        FreeLie {
            r,
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn generator(&self, i: u8) -> FreeLieElement<S> {
        assert!(
            i >= 1 && (i as usize) <= self.r,
            "generator index out of range"
        );
        FreeLieElement::generator(i)
    }

    pub fn bracket(&self, a: &FreeLieElement<S>, b: &FreeLieElement<S>) -> FreeLieElement<S> {
        let mut out = FreeLieElement::zero();
        for (u, cu) in &a.terms {
            for (v, cv) in &b.terms {
                let t = self.bracket_words(u, v);
                out.add_scaled(&(cu.clone() * cv.clone()), &t);
            }
        }
        out
    }

    fn bracket_words(&self, u: &LyndonWord, v: &LyndonWord) -> FreeLieElement<S> {
        if u == v {
            return FreeLieElement::zero();
        }
        if u > v {
            return self.bracket_words(v, u).scale(&-S::one());
        }
        if let Some(hit) = self.memo.borrow().get(&(u.clone(), v.clone())) {
            return hit.clone();
        }
        let result = match u.standard_factorization() {
            Some((u1, u2)) if u2 < *v => {
                let left = self.bracket(
                    &FreeLieElement::basis(u1.clone()),
                    &self.bracket_words(&u2, v),
                );
                let right = self.bracket(&FreeLieElement::basis(u2), &self.bracket_words(&u1, v));
                let mut out = left;
                out.add_scaled(&-S::one(), &right);
                out
            }
            _ => {
                let mut w = u.0.clone();
                w.extend_from_slice(&v.0);
                FreeLieElement::basis(LyndonWord(w))
            }
        };
        self.memo
            .borrow_mut()
            .insert((u.clone(), v.clone()), result.clone());
        result
    }

    /// The left-normed bracket `[w1,[w2,...[w_{s-1},w_s]...]]` in the Lyndon basis.
    pub fn monomial(&self, word: &[u8]) -> FreeLieElement<S> {
        let (&last, rest) = word
            .split_last()
            .expect("monomial needs at least one letter");
        let mut acc = self.generator(last);
        for &l in rest.iter().rev() {
            acc = self.bracket(&self.generator(l), &acc);
        }
        acc
    }
}

/// Prints a left-normed word as a bracket string, e.g. `[x1,[x2,x3]]`.
pub fn left_normed_string(word: &[u8], names: &[&str]) -> String {
    let name = |l: u8| {
        names
            .get(l as usize - 1)
            .map_or(format!("x{l}"), |s| s.to_string())
    };
    let (&last, rest) = word.split_last().expect("nonempty word");
    let mut s = name(last);
    for &l in rest.iter().rev() {
        s = format!("[{},{}]", name(l), s);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Q;

    #[test]
    fn small_bases() {
        assert_eq!(lyndon_basis(2, 1).len(), 2);
        assert_eq!(
            lyndon_basis(2, 2)
                .iter()
                .map(|w| w.letters().to_vec())
                .collect::<Vec<_>>(),
            vec![vec![1, 2]]
        );
        assert_eq!(lyndon_basis(3, 3).len(), 8);
    }

    #[test]
    fn factorization_and_display() {
        let w = LyndonWord::new(vec![1, 1, 2]).unwrap();
        assert_eq!(w.to_string(), "[x1,[x1,x2]]");
        let w = LyndonWord::new(vec![1, 2, 2]).unwrap();
        assert_eq!(w.to_string(), "[[x1,x2],x2]");
        assert!(LyndonWord::new(vec![2, 1]).is_none());
    }

    #[test]
    fn bracket_basics() {
        let f = FreeLie::<Q>::new(2);
        let x1 = f.generator(1);
        let x2 = f.generator(2);
        assert!(f.bracket(&x1, &x1).is_zero());
        let b = f.bracket(&x1, &x2);
        assert_eq!(
            b,
            FreeLieElement::basis(LyndonWord::new(vec![1, 2]).unwrap())
        );
        let m = f.monomial(&[1, 1, 2]);
        assert!(!m.is_zero());
        assert_eq!(m.multidegree(2), Some(MultiDegree(vec![2, 1])));
    }

    #[test]
    fn left_normed_strings() {
        assert_eq!(left_normed_string(&[1, 2, 3], &[]), "[x1,[x2,x3]]");
        assert_eq!(left_normed_string(&[1, 2], &["x", "y"]), "[x,y]");
    }
}
