//! Pure braid words, their linking numbers, and the delta relator.
//!
//! The generator `p(i,j)` links strands `i < j` by a positive full twist, so
//! its linking number `lk(i,j)` is +1. The `n(n-1)/2` linking numbers are the
//! abelianization of the pure braid group, and two pure braids are related by
//! delta moves exactly when their linking numbers agree. Every decision in
//! this module therefore reduces to linking numbers.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

/// `p(i,j)^exp` with 1-based strands `i < j` and `exp = +-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    i: usize,
    j: usize,
    exp: i8,
}

impl Letter {
    /// The generator linking strands `a` and `b` (in either order) on `n` strands.
    pub fn new(a: usize, b: usize, exp: i64, n: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 || a > n || b > n {
            return Err(Error::StrandIndex(format!("p({a},{b}) on {n} strands")));
        }
        if exp != 1 && exp != -1 {
            return Err(Error::Exponent(exp));
        }
        Ok(Letter { i: a.min(b), j: a.max(b), exp: exp as i8 })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn exp(&self) -> i8 {
        self.exp
    }

    pub fn inverse(self) -> Self {
        Letter { exp: -self.exp, ..self }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PureBraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl PureBraidWord {
    pub fn identity(strands: usize) -> Self {
        PureBraidWord { strands, letters: Vec::new() }
    }

    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::StrandIndex("a pure braid needs at least one strand".into()));
        }
        if let Some(l) = letters.iter().find(|l| l.j > strands) {
            return Err(Error::StrandIndex(format!("p({},{}) on {strands} strands", l.i, l.j)));
        }
        Ok(PureBraidWord { strands, letters })
    }

    /// Builds a word from `(i, j, exp)` triples.
    pub fn from_triples(strands: usize, triples: &[(usize, usize, i64)]) -> Result<Self> {
        let letters = triples
            .iter()
            .map(|&(i, j, e)| Letter::new(i, j, e, strands))
            .collect::<Result<_>>()?;
        Self::new(strands, letters)
    }

    /// The single-letter word `p(i,j)^exp`.
    pub fn generator(strands: usize, i: usize, j: usize, exp: i64) -> Result<Self> {
        Self::from_triples(strands, &[(i, j, exp)])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        PureBraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation `self * other`.
    pub fn concat(&self, other: &PureBraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandCount(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(PureBraidWord { strands: self.strands, letters })
    }

    pub fn push(&mut self, letter: Letter) -> Result<()> {
        if letter.j > self.strands {
            return Err(Error::StrandIndex(format!(
                "p({},{}) on {} strands",
                letter.i, letter.j, self.strands
            )));
        }
        self.letters.push(letter);
        Ok(())
    }

    /// Cancels adjacent `x x^-1` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        PureBraidWord { strands: self.strands, letters: out }
    }

    pub fn linking_matrix(&self) -> LinkingMatrix {
        let mut lk = LinkingMatrix::zeros(self.strands);
        for l in &self.letters {
            lk.add_to(l.i, l.j, l.exp as i64);
        }
        lk
    }
}

/// Pairwise linking numbers `lk(i,j)`, `1 <= i < j <= n`, stored as the
/// strict upper triangle. `lk(j,i) = lk(i,j)` and `lk(i,i) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkingMatrix {
    n: usize,
    values: Vec<i64>,
}

impl LinkingMatrix {
    pub fn zeros(n: usize) -> Self {
        LinkingMatrix { n, values: vec![0; n * n.saturating_sub(1) / 2] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        let (i, j) = (i.min(j) - 1, i.max(j) - 1);
        // rows 0..i hold (n-1) + (n-2) + ... entries
        i * (2 * self.n - i - 1) / 2 + (j - i - 1)
    }

    /// `lk(i,j)` for 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        assert!(i >= 1 && j >= 1 && i <= self.n && j <= self.n, "index out of range");
        if i == j {
            0
        } else {
            self.values[self.slot(i, j)]
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        assert!(i != j, "diagonal linking numbers are fixed at 0");
        let s = self.slot(i, j);
        self.values[s] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: i64) {
        assert!(i != j, "diagonal linking numbers are fixed at 0");
        let s = self.slot(i, j);
        self.values[s] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// `(i, j, lk(i,j))` for all `i < j` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        (1..=self.n).flat_map(move |i| (i + 1..=self.n).map(move |j| (i, j, self.get(i, j))))
    }
}

impl Add for &LinkingMatrix {
    type Output = LinkingMatrix;
    fn add(self, rhs: &LinkingMatrix) -> LinkingMatrix {
        assert_eq!(self.n, rhs.n, "linking matrix size mismatch");
        LinkingMatrix {
            n: self.n,
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &LinkingMatrix {
    type Output = LinkingMatrix;
    fn sub(self, rhs: &LinkingMatrix) -> LinkingMatrix {
        assert_eq!(self.n, rhs.n, "linking matrix size mismatch");
        LinkingMatrix {
            n: self.n,
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for LinkingMatrix {
    type Output = LinkingMatrix;
    fn neg(self) -> LinkingMatrix {
        LinkingMatrix { n: self.n, values: self.values.into_iter().map(|v| -v).collect() }
    }
}

impl Add for LinkingMatrix {
    type Output = LinkingMatrix;
    fn add(self, rhs: LinkingMatrix) -> LinkingMatrix {
        &self + &rhs
    }
}

impl fmt::Display for LinkingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            let row: Vec<String> = (1..=self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

pub fn linking_matrix(w: &PureBraidWord) -> LinkingMatrix {
    w.linking_matrix()
}

/// One instance of the commutator `p(i,j) p(j,k) p(i,j)^-1 p(j,k)^-1`, or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RelatorInstance {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub inverted: bool,
}

impl RelatorInstance {
    pub fn new(i: usize, j: usize, k: usize) -> Self {
        RelatorInstance { i, j, k, inverted: false }
    }

    pub fn inverse(self) -> Self {
        RelatorInstance { inverted: !self.inverted, ..self }
    }

    pub fn word(&self, n: usize) -> Result<PureBraidWord> {
        let w = delta_relator(self.i, self.j, self.k, n)?;
        Ok(if self.inverted { w.inverse() } else { w })
    }
}

/// The commutator `p(i,j) p(j,k) p(i,j)^-1 p(j,k)^-1` on `n` strands.
pub fn delta_relator(i: usize, j: usize, k: usize, n: usize) -> Result<PureBraidWord> {
    if !(1 <= i && i < j && j < k && k <= n) {
        return Err(Error::RelatorIndices { i, j, k, n });
    }
    PureBraidWord::from_triples(n, &[(i, j, 1), (j, k, 1), (i, j, -1), (j, k, -1)])
}

/// All linking numbers vanish, i.e. the braid lies in the commutator
/// subgroup and can be undone by delta moves.
pub fn is_delta_trivial(w: &PureBraidWord) -> bool {
    w.linking_matrix().is_zero()
}

pub fn delta_equivalent(w1: &PureBraidWord, w2: &PureBraidWord) -> Result<bool> {
    if w1.strands != w2.strands {
        return Err(Error::StrandCount(w1.strands, w2.strands));
    }
    Ok(w1.linking_matrix() == w2.linking_matrix())
}

/// Splices `conjugator * relator * conjugator^-1` into `w` before letter
/// `position`. This models a single delta move.
pub fn insert_relator(
    w: &PureBraidWord,
    position: usize,
    relator: RelatorInstance,
    conjugator: &PureBraidWord,
) -> Result<PureBraidWord> {
    if position > w.len() {
        return Err(Error::Position { position, len: w.len() });
    }
    if conjugator.strands != w.strands {
        return Err(Error::StrandCount(w.strands, conjugator.strands));
    }
    let piece = conjugator.concat(&relator.word(w.strands)?)?.concat(&conjugator.inverse())?;
    let mut letters = w.letters[..position].to_vec();
    letters.extend_from_slice(&piece.letters);
    letters.extend_from_slice(&w.letters[position..]);
    Ok(PureBraidWord { strands: w.strands, letters })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(n: usize, t: &[(usize, usize, i64)]) -> PureBraidWord {
        PureBraidWord::from_triples(n, t).unwrap()
    }

    #[test]
    fn linking_examples() {
        assert!(linking_matrix(&PureBraidWord::identity(3)).is_zero());
        let lk = linking_matrix(&word(3, &[(1, 2, 1)]));
        assert_eq!(lk.get(1, 2), 1);
        assert_eq!(lk.get(2, 1), 1);
        assert_eq!(lk.get(1, 3), 0);
        assert_eq!(lk.get(2, 3), 0);
        assert!(linking_matrix(&word(3, &[(1, 2, 1), (2, 3, 1), (1, 2, -1), (2, 3, -1)])).is_zero());
    }

    #[test]
    fn packed_storage_covers_all_pairs() {
        let mut lk = LinkingMatrix::zeros(5);
        let mut v = 1;
        for i in 1..=5 {
            for j in i + 1..=5 {
                lk.set(i, j, v);
                v += 1;
            }
        }
        let got: Vec<i64> = lk.entries().map(|(_, _, x)| x).collect();
        assert_eq!(got, (1..=10).collect::<Vec<_>>());
        assert_eq!(lk.get(4, 2), lk.get(2, 4));
    }

    #[test]
    fn relator_words() {
        assert_eq!(
            delta_relator(1, 2, 3, 3).unwrap(),
            word(3, &[(1, 2, 1), (2, 3, 1), (1, 2, -1), (2, 3, -1)])
        );
        assert_eq!(
            delta_relator(1, 2, 4, 4).unwrap(),
            word(4, &[(1, 2, 1), (2, 4, 1), (1, 2, -1), (2, 4, -1)])
        );
        assert!(linking_matrix(&delta_relator(1, 2, 3, 3).unwrap()).is_zero());
        assert!(delta_relator(2, 1, 3, 3).is_err());
        assert!(delta_relator(1, 2, 4, 3).is_err());
        assert!(delta_relator(0, 2, 3, 3).is_err());
    }

    #[test]
    fn triviality_and_equivalence() {
        assert!(is_delta_trivial(&delta_relator(1, 2, 3, 3).unwrap()));
        assert!(!is_delta_trivial(&word(3, &[(1, 2, 1)])));

        let w = word(4, &[(1, 3, 1), (2, 4, -1), (1, 2, 1)]);
        let r = w.concat(&delta_relator(2, 3, 4, 4).unwrap()).unwrap();
        assert!(delta_equivalent(&w, &r).unwrap());
        assert!(!delta_equivalent(&word(3, &[(1, 2, 1)]), &word(3, &[(1, 2, 1), (1, 3, 1)])).unwrap());
        assert!(delta_equivalent(&word(3, &[(1, 2, 1), (2, 3, 1)]), &word(3, &[(2, 3, 1), (1, 2, 1)]))
            .unwrap());
        assert_eq!(
            delta_equivalent(&PureBraidWord::identity(2), &PureBraidWord::identity(3)),
            Err(Error::StrandCount(2, 3))
        );
    }

    #[test]
    fn relator_insertion() {
        let rel = RelatorInstance::new(1, 2, 3);
        let conj = word(3, &[(1, 3, 1)]);
        let e = PureBraidWord::identity(3);
        let ins = insert_relator(&e, 0, rel, &conj).unwrap();
        let expected = conj.concat(&rel.word(3).unwrap()).unwrap().concat(&conj.inverse()).unwrap();
        assert_eq!(ins, expected);

        let w = word(3, &[(1, 2, 1), (2, 3, -1)]);
        let once = insert_relator(&w, 1, rel, &conj).unwrap();
        assert_eq!(once.linking_matrix(), w.linking_matrix());
        let twice = insert_relator(&once, 1 + 6, rel.inverse(), &conj).unwrap();
        assert_eq!(twice.free_reduce(), w);

        assert_eq!(
            insert_relator(&w, 3, rel, &conj),
            Err(Error::Position { position: 3, len: 2 })
        );
        assert!(insert_relator(&w, 0, RelatorInstance::new(1, 2, 4), &conj).is_err());
    }

    #[test]
    fn letters_are_normalized() {
        let l = Letter::new(3, 1, -1, 3).unwrap();
        assert_eq!((l.i(), l.j(), l.exp()), (1, 3, -1));
        assert!(Letter::new(2, 2, 1, 3).is_err());
        assert!(Letter::new(1, 4, 1, 3).is_err());
        assert_eq!(Letter::new(1, 2, 2, 3), Err(Error::Exponent(2)));
    }
}
