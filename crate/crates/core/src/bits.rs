//! Word-packed Boolean vectors and row-major Boolean matrices.
//!
//! Indices in this module are 0-based. The argumentation-level types built on
//! top of it translate to 1-based argument identifiers and matrix positions.

use std::fmt;

const WORD_BITS: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A fixed-length bit vector packed into `u64` words.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet { len, words: vec![0; words_for(len)] }
    }

    pub fn full(len: usize) -> Self {
        let mut set = BitSet { len, words: vec![!0; words_for(len)] };
        set.clear_tail();
        set
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, idx: usize) -> bool {
        debug_assert!(idx < self.len);
        self.words[idx / WORD_BITS] >> (idx % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, idx: usize) {
        debug_assert!(idx < self.len);
        self.words[idx / WORD_BITS] |= 1 << (idx % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, idx: usize) {
        debug_assert!(idx < self.len);
        self.words[idx / WORD_BITS] &= !(1 << (idx % WORD_BITS));
    }

    pub fn set(&mut self, idx: usize, value: bool) {
        if value {
            self.insert(idx)
        } else {
            self.remove(idx)
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn none(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn all(&self) -> bool {
        self.count_ones() == self.len
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn complement(&self) -> BitSet {
        let mut out = BitSet { len: self.len, words: self.words.iter().map(|w| !w).collect() };
        out.clear_tail();
        out
    }

    /// Indices of set bits in ascending order.
    pub fn ones(&self) -> Ones<'_> {
        Ones { words: &self.words, word_idx: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    /// Highest set index, if any.
    pub fn max(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * WORD_BITS + (WORD_BITS - 1 - w.leading_zeros() as usize))
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.ones()).finish()
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * WORD_BITS + bit);
            }
            self.word_idx += 1;
            self.current = *self.words.get(self.word_idx)?;
        }
    }
}

/// Row-major Boolean matrix, one packed [`BitSet`] per row.
///
/// Zero-extent matrices (no rows, no columns, or both) are valid and are
/// zero by definition.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: Vec<BitSet>,
    cols: usize,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix { rows: vec![BitSet::new(cols); rows], cols }
    }

    /// Builds a matrix from 0/1 rows. Panics if the rows are ragged.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "ragged row {r}");
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.rows.iter().map(|row| (0..self.cols).map(|c| row.get(c) as u8).collect()).collect()
    }

    #[inline]
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn n_cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value)
    }

    pub fn row(&self, r: usize) -> &BitSet {
        &self.rows[r]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        self.rows.swap(a, b);
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for row in &mut self.rows {
            let (va, vb) = (row.get(a), row.get(b));
            row.set(a, vb);
            row.set(b, va);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitSet::none)
    }

    pub fn row_is_zero(&self, r: usize) -> bool {
        self.rows[r].none()
    }

    /// Bitwise OR of all rows: bit `c` is set iff column `c` is non-zero.
    pub fn nonzero_columns(&self) -> BitSet {
        let mut acc = BitSet::new(self.cols);
        for row in &self.rows {
            acc.union_with(row);
        }
        acc
    }

    pub fn column_is_zero(&self, c: usize) -> bool {
        self.rows.iter().all(|row| !row.get(c))
    }

    /// Copies the rows and columns named by the given index lists, in order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(rows.len(), cols.len());
        for (ro, &r) in rows.iter().enumerate() {
            let src = &self.rows[r];
            for (co, &c) in cols.iter().enumerate() {
                if src.get(c) {
                    out.rows[ro].insert(co);
                }
            }
        }
        out
    }

    /// Contiguous window `[row_start, row_end) x [col_start, col_end)`.
    pub fn window(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> BitMatrix {
        let rows: Vec<usize> = rows.collect();
        let cols: Vec<usize> = cols.collect();
        self.select(&rows, &cols)
    }

    /// Assembles `[[top_left, top_right], [bottom_left, bottom_right]]`.
    pub fn assemble(
        top_left: &BitMatrix,
        top_right: &BitMatrix,
        bottom_left: &BitMatrix,
        bottom_right: &BitMatrix,
    ) -> BitMatrix {
        let top = top_left.n_rows();
        let left = top_left.n_cols().max(bottom_left.n_cols());
        let rows = top + bottom_left.n_rows().max(bottom_right.n_rows());
        let cols = left + top_right.n_cols().max(bottom_right.n_cols());
        let mut out = BitMatrix::zeros(rows, cols);
        let mut put = |block: &BitMatrix, r0: usize, c0: usize| {
            for r in 0..block.n_rows() {
                for c in block.rows[r].ones() {
                    out.set(r0 + r, c0 + c, true);
                }
            }
        };
        put(top_left, 0, 0);
        put(top_right, 0, left);
        put(bottom_left, top, 0);
        put(bottom_right, top, left);
        out
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.cols, self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.ones() {
                out.rows[c].insert(r);
            }
        }
        out
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let line: Vec<&str> = (0..self.cols).map(|c| if row.get(c) { "1" } else { "0" }).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix {}x{} {:?}", self.n_rows(), self.cols, self.to_rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitset_across_word_boundary() {
        let mut s = BitSet::new(130);
        for i in [0, 63, 64, 127, 129] {
            s.insert(i);
        }
        assert_eq!(s.ones().collect::<Vec<_>>(), vec![0, 63, 64, 127, 129]);
        assert_eq!(s.max(), Some(129));
        assert_eq!(s.complement().count_ones(), 125);
        assert!(BitSet::full(130).all());
        assert_eq!(BitSet::new(0).max(), None);
    }

    #[test]
    fn subset_and_intersection() {
        let mut a = BitSet::new(70);
        let mut b = BitSet::new(70);
        a.insert(3);
        a.insert(66);
        b.insert(3);
        b.insert(66);
        b.insert(10);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert!(a.intersects(&b));
        b.difference_with(&a);
        assert!(!a.intersects(&b));
    }

    #[test]
    fn column_swap_and_nonzero_columns() {
        let mut m = BitMatrix::from_rows(&[[1, 0, 0], [0, 0, 1]]);
        assert_eq!(m.nonzero_columns().ones().collect::<Vec<_>>(), vec![0, 2]);
        m.swap_cols(1, 2);
        assert_eq!(m.to_rows(), vec![vec![1, 0, 0], vec![0, 1, 0]]);
        assert!(m.column_is_zero(2));
        assert_eq!(m.transpose().to_rows(), vec![vec![1, 0], vec![0, 1], vec![0, 0]]);
    }

    #[test]
    fn zero_extent_matrices_are_zero() {
        let m = BitMatrix::zeros(0, 4);
        assert!(m.is_zero());
        assert_eq!(m.nonzero_columns().count_ones(), 0);
        assert!(BitMatrix::zeros(3, 0).is_zero());
    }
}
