//! Dense bit-indexed vertex subsets.

use std::fmt;

const WORD_BITS: usize = 64;

/// A subset of the vertices `0..n` of a graph, stored as packed 64-bit words.
///
/// Every set remembers the size `n` of its vertex universe, so complements are
/// always taken relative to the owning graph. Binary operations between sets
/// of different universes panic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; word_count(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = VertexSet {
            n,
            words: vec![u64::MAX; word_count(n)],
        };
        s.clear_tail();
        s
    }

    /// Builds a set from vertex indices. Panics if an index is `>= n`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Self {
        let mut s = VertexSet::empty(n);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    /// Builds a set from the low `n` bits of `mask`. Requires `n <= 64`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= WORD_BITS, "from_mask requires n <= 64");
        let mut s = VertexSet::empty(n);
        if n > 0 {
            s.words[0] = mask;
            s.clear_tail();
        }
        s
    }

    /// The set as a bitmask. Requires `n <= 64`.
    pub fn to_mask(&self) -> u64 {
        assert!(self.n <= WORD_BITS, "to_mask requires n <= 64");
        self.words.first().copied().unwrap_or(0)
    }

    /// Size of the vertex universe this set lives in.
    #[inline]
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        let w = &mut self.words[v / WORD_BITS];
        let bit = 1u64 << (v % WORD_BITS);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.n {
            return false;
        }
        let w = &mut self.words[v / WORD_BITS];
        let bit = 1u64 << (v % WORD_BITS);
        let present = *w & bit != 0;
        *w &= !bit;
        present
    }

    pub fn with(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    pub fn without(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.remove(v);
        s
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    pub fn complement(&self) -> Self {
        let mut s = VertexSet {
            n: self.n,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.clear_tail();
        s
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn last(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate().rev() {
            if w != 0 {
                return Some(i * WORD_BITS + 63 - w.leading_zeros() as usize);
            }
        }
        None
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        self.check_universe(other);
        VertexSet {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    #[inline]
    fn check_universe(&self, other: &Self) {
        assert_eq!(self.n, other.n, "vertex sets over different universes");
    }

    fn clear_tail(&mut self) {
        let rem = self.n % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}
