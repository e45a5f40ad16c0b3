//! Column bitsets.
//!
//! Two representations share the [`Bits`] trait: a bare `u64` for the common
//! case `n <= 64`, and [`ColSet`], a fixed multi-word set holding up to
//! [`MAX_COLUMNS`] columns. Hot loops (biclique search, arrowing search) are
//! generic over `Bits` and get monomorphized for both.

use std::cmp::Ordering;
use std::fmt;

const WORDS: usize = 8;

/// Largest supported side of a bipartite graph.
pub const MAX_COLUMNS: usize = WORDS * 64;

pub trait Bits: Copy + Eq + Send + Sync + fmt::Debug + 'static {
    const CAPACITY: usize;

    fn empty() -> Self;
    /// `{lo, lo + 1, ..., hi - 1}`.
    fn range(lo: usize, hi: usize) -> Self;
    fn contains(&self, i: usize) -> bool;
    fn insert(&mut self, i: usize);
    fn and(self, other: Self) -> Self;
    fn or(self, other: Self) -> Self;
    fn and_not(self, other: Self) -> Self;
    fn count(&self) -> usize;
    fn is_empty(&self) -> bool;
    /// Smallest element.
    fn first(&self) -> Option<usize>;
    /// Lexicographic order with column 0 most significant: the set holding the
    /// smallest element of the symmetric difference is the greater one.
    fn lex_cmp(&self, other: &Self) -> Ordering;

    fn prefix(k: usize) -> Self {
        Self::range(0, k)
    }

    fn with(mut self, i: usize) -> Self {
        self.insert(i);
        self
    }

    fn ones(self) -> Ones<Self> {
        Ones { rest: self }
    }
}

/// Iterator over the elements of a bitset in ascending order.
pub struct Ones<B> {
    rest: B,
}

impl<B: Bits> Iterator for Ones<B> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let i = self.rest.first()?;
        self.rest = self.rest.and_not(B::empty().with(i));
        Some(i)
    }
}

impl Bits for u64 {
    const CAPACITY: usize = 64;

    #[inline]
    fn empty() -> Self {
        0
    }

    #[inline]
    fn range(lo: usize, hi: usize) -> Self {
        debug_assert!(lo <= hi && hi <= 64);
        let upto = |k: usize| if k >= 64 { u64::MAX } else { (1u64 << k) - 1 };
        upto(hi) & !upto(lo)
    }

    #[inline]
    fn contains(&self, i: usize) -> bool {
        (self >> i) & 1 == 1
    }

    #[inline]
    fn insert(&mut self, i: usize) {
        *self |= 1 << i;
    }

    #[inline]
    fn and(self, other: Self) -> Self {
        self & other
    }

    #[inline]
    fn or(self, other: Self) -> Self {
        self | other
    }

    #[inline]
    fn and_not(self, other: Self) -> Self {
        self & !other
    }

    #[inline]
    fn count(&self) -> usize {
        self.count_ones() as usize
    }

    #[inline]
    fn is_empty(&self) -> bool {
        *self == 0
    }

    #[inline]
    fn first(&self) -> Option<usize> {
        (*self != 0).then(|| self.trailing_zeros() as usize)
    }

    #[inline]
    fn lex_cmp(&self, other: &Self) -> Ordering {
        let diff = self ^ other;
        if diff == 0 {
            Ordering::Equal
        } else if self & (diff & diff.wrapping_neg()) != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

/// A set of column indices below [`MAX_COLUMNS`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ColSet([u64; WORDS]);

impl ColSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Panics if an element is `>= MAX_COLUMNS`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for i in iter {
            assert!(i < MAX_COLUMNS, "column {i} exceeds capacity {MAX_COLUMNS}");
            s.insert(i);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.count()
    }

    pub fn is_empty(&self) -> bool {
        Bits::is_empty(self)
    }

    pub fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    pub fn iter(&self) -> Ones<Self> {
        self.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Largest element, if any.
    pub fn last(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .rev()
            .find(|(_, w)| **w != 0)
            .map(|(k, w)| k * 64 + 63 - w.leading_zeros() as usize)
    }

    /// Narrows to a single word; `None` if any element is `>= 64`.
    pub fn to_word(&self) -> Option<u64> {
        self.0[1..].iter().all(|w| *w == 0).then_some(self.0[0])
    }

    pub fn from_word(w: u64) -> Self {
        let mut s = Self::new();
        s.0[0] = w;
        s
    }
}

impl Bits for ColSet {
    const CAPACITY: usize = MAX_COLUMNS;

    fn empty() -> Self {
        Self::default()
    }

    fn range(lo: usize, hi: usize) -> Self {
        debug_assert!(lo <= hi && hi <= MAX_COLUMNS);
        let mut s = Self::default();
        for (k, w) in s.0.iter_mut().enumerate() {
            let base = k * 64;
            let a = lo.clamp(base, base + 64) - base;
            let b = hi.clamp(base, base + 64) - base;
            *w = <u64 as Bits>::range(a, b);
        }
        s
    }

    fn contains(&self, i: usize) -> bool {
        i < MAX_COLUMNS && (self.0[i / 64] >> (i % 64)) & 1 == 1
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(mut self, other: Self) -> Self {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            *a &= b;
        }
        self
    }

    fn or(mut self, other: Self) -> Self {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            *a |= b;
        }
        self
    }

    fn and_not(mut self, other: Self) -> Self {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            *a &= !b;
        }
        self
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|w| *w == 0)
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    fn lex_cmp(&self, other: &Self) -> Ordering {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.lex_cmp(b))
            .find(|o| *o != Ordering::Equal)
            .unwrap_or(Ordering::Equal)
    }
}

impl FromIterator<usize> for ColSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_indices(iter)
    }
}

impl fmt::Debug for ColSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Converts rows to the one-word representation when `n <= 64`.
pub(crate) fn narrow(n: usize, rows: &[ColSet]) -> Option<Vec<u64>> {
    if n > u64::CAPACITY {
        return None;
    }
    rows.iter().map(ColSet::to_word).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_spans_words() {
        let s = ColSet::range(60, 130);
        assert_eq!(s.len(), 70);
        assert_eq!(s.first(), Some(60));
        assert_eq!(s.last(), Some(129));
        assert_eq!(<u64 as Bits>::range(0, 64), u64::MAX);
        assert_eq!(<u64 as Bits>::range(3, 3), 0);
    }

    #[test]
    fn lex_order_puts_small_columns_first() {
        let a = ColSet::from_indices([0, 1, 2]);
        let b = ColSet::from_indices([0, 1, 3]);
        let c = ColSet::from_indices([1, 2, 3]);
        assert_eq!(a.lex_cmp(&b), Ordering::Greater);
        assert_eq!(b.lex_cmp(&c), Ordering::Greater);
        assert_eq!(c.lex_cmp(&c), Ordering::Equal);
        let wide = ColSet::from_indices([70]);
        let wider = ColSet::from_indices([200]);
        assert_eq!(wide.lex_cmp(&wider), Ordering::Greater);
        assert_eq!(0b0111u64.lex_cmp(&0b1011), Ordering::Greater);
    }

    #[test]
    fn word_narrowing() {
        let s = ColSet::from_indices([0, 5, 63]);
        assert_eq!(s.to_word(), Some((1 << 63) | (1 << 5) | 1));
        assert_eq!(ColSet::from_indices([64]).to_word(), None);
        assert_eq!(ColSet::from_word(0b101).to_vec(), vec![0, 2]);
    }
}
