//! Fixed-width bit vectors and GF(2) linear algebra.
//!
//! `BitVec` backs the symplectic Pauli representation and the encoding
//! matrices of the fermion-to-qubit mappings; all the hot operations reduce
//! to word-parallel XOR/AND/popcount. Unused high bits of the last word are
//! kept zero so that equality, ordering, and hashing work on the raw words.

use std::fmt;

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut v = BitVec::zeros(len);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 != 0
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Popcount of the AND of two vectors.
    pub fn and_count(&self, other: &BitVec) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Parity (mod 2) of the AND of two vectors.
    pub fn and_parity(&self, other: &BitVec) -> bool {
        self.and_count(other) % 2 == 1
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    /// Index of the lowest set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// New vector containing the bits at positions where `keep` returns true,
    /// in order. Used when qubits are removed from a register.
    pub fn filtered(&self, keep: impl Fn(usize) -> bool) -> BitVec {
        let kept: Vec<usize> = (0..self.len).filter(|&i| keep(i)).collect();
        let mut out = BitVec::zeros(kept.len());
        for (new, &old) in kept.iter().enumerate() {
            if self.get(old) {
                out.set(new, true);
            }
        }
        out
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // bit 0 rightmost
        for i in (0..self.len).rev() {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// Dense GF(2) matrix with bit-packed rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinMatrix {
    rows: Vec<BitVec>,
    n_cols: usize,
}

impl BinMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        BinMatrix {
            rows: vec![BitVec::zeros(n_cols); n_rows],
            n_cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BinMatrix::zeros(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<BitVec>, n_cols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == n_cols));
        BinMatrix { rows, n_cols }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value);
    }

    pub fn row(&self, r: usize) -> &BitVec {
        &self.rows[r]
    }

    /// Matrix-vector product over GF(2).
    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        debug_assert_eq!(v.len(), self.n_cols);
        let mut out = BitVec::zeros(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            out.set(i, row.and_parity(v));
        }
        out
    }

    /// In-place reduction to reduced row echelon form; returns the pivot
    /// column of each surviving row. Scans columns left to right, so the
    /// result is canonical for a given row span.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.n_cols {
            if row == self.rows.len() {
                break;
            }
            let Some(src) = (row..self.rows.len()).find(|&r| self.rows[r].get(col)) else {
                continue;
            };
            self.rows.swap(row, src);
            let pivot_row = self.rows[row].clone();
            for (r, other) in self.rows.iter_mut().enumerate() {
                if r != row && other.get(col) {
                    other.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            row += 1;
        }
        self.rows.truncate(row);
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the null space {x : M x = 0}, in reduced row echelon form.
    pub fn kernel_basis(&self) -> Vec<BitVec> {
        let mut m = self.clone();
        let pivots = m.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.n_cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.n_cols {
            if is_pivot[free] {
                continue;
            }
            let mut x = BitVec::zeros(self.n_cols);
            x.set(free, true);
            for (r, &p) in pivots.iter().enumerate() {
                if m.rows[r].get(free) {
                    x.set(p, true);
                }
            }
            basis.push(x);
        }
        // free columns ascend, so re-reducing yields the canonical RREF basis
        let mut bm = BinMatrix::from_rows(basis, self.n_cols);
        bm.rref();
        bm.rows
    }

    /// Inverse over GF(2); `None` if singular.
    pub fn inverse(&self) -> Option<BinMatrix> {
        let n = self.rows.len();
        debug_assert_eq!(n, self.n_cols);
        // augment [M | I] and reduce
        let mut aug = BinMatrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, true);
        }
        let pivots = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        let mut inv = BinMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c));
            }
        }
        Some(inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitvec_basics() {
        let mut v = BitVec::zeros(70);
        v.set(0, true);
        v.set(69, true);
        assert!(v.get(0) && v.get(69) && !v.get(35));
        assert_eq!(v.count_ones(), 2);
        assert_eq!(v.first_one(), Some(0));
        assert_eq!(v.iter_ones().collect::<Vec<_>>(), vec![0, 69]);
    }

    #[test]
    fn and_parity() {
        let a = BitVec::from_indices(8, &[1, 3, 5]);
        let b = BitVec::from_indices(8, &[3, 5, 7]);
        assert!(!a.and_parity(&b)); // overlap {3,5}, even
        let c = BitVec::from_indices(8, &[3]);
        assert!(a.and_parity(&c));
    }

    #[test]
    fn filtered_reindexes() {
        let v = BitVec::from_indices(6, &[0, 2, 5]);
        let w = v.filtered(|i| i != 2 && i != 4);
        assert_eq!(w.len(), 4);
        assert_eq!(w.iter_ones().collect::<Vec<_>>(), vec![0, 3]);
    }

    #[test]
    fn rref_and_rank() {
        let rows = vec![
            BitVec::from_indices(4, &[0, 1]),
            BitVec::from_indices(4, &[1, 2]),
            BitVec::from_indices(4, &[0, 2]),
        ];
        let m = BinMatrix::from_rows(rows, 4);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn kernel_of_parity_check() {
        // single row (1,1,1,1): kernel = even-weight vectors, dim 3
        let m = BinMatrix::from_rows(vec![BitVec::from_indices(4, &[0, 1, 2, 3])], 4);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 3);
        for v in &k {
            assert_eq!(v.count_ones() % 2, 0);
        }
    }

    #[test]
    fn inverse_round_trip() {
        let mut m = BinMatrix::identity(5);
        m.set(3, 1, true);
        m.set(4, 0, true);
        m.set(4, 3, true);
        let inv = m.inverse().unwrap();
        // M * M^-1 = I, checked column by column
        for c in 0..5 {
            let mut e = BitVec::zeros(5);
            e.set(c, true);
            let x = inv.mul_vec(&e);
            assert_eq!(m.mul_vec(&x), e);
        }
        let singular = BinMatrix::zeros(3, 3);
        assert!(singular.inverse().is_none());
    }
}
