//! Fixed-width bit rows backing adjacency storage and vertex sets.

const WORD_BITS: usize = 64;

/// A fixed-length set of vertex indices stored as machine words.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn new(len: usize) -> Self {
        BitRow {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut row = BitRow::new(len);
        for &i in indices {
            row.set(i);
        }
        row
    }

    pub fn full(len: usize) -> Self {
        let mut row = BitRow::new(len);
        for word in row.words.iter_mut() {
            *word = u64::MAX;
        }
        row.trim();
        row
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn subtract(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersects(&self, other: &BitRow) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// True when every bit of `other` is also set in `self`.
    pub fn contains_all(&self, other: &BitRow) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| b & !a == 0)
    }

    /// Equality of two rows ignoring the bits at positions `u` and `v`.
    ///
    /// This is the twin test N(u)\{v} = N(v)\{u} applied to neighbor rows.
    pub fn eq_ignoring(&self, other: &BitRow, u: usize, v: usize) -> bool {
        debug_assert_eq!(self.len, other.len);
        let (wu, bu) = (u / WORD_BITS, 1u64 << (u % WORD_BITS));
        let (wv, bv) = (v / WORD_BITS, 1u64 << (v % WORD_BITS));
        self.words
            .iter()
            .zip(&other.words)
            .enumerate()
            .all(|(i, (a, b))| {
                let mut mask = u64::MAX;
                if i == wu {
                    mask &= !bu;
                }
                if i == wv {
                    mask &= !bv;
                }
                a & mask == b & mask
            })
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    fn trim(&mut self) {
        let extra = self.words.len() * WORD_BITS - self.len;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }
}
