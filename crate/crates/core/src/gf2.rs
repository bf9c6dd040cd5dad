//! Dense bit-packed linear algebra over the two-element field.
//!
//! Rows are packed into `u64` words; padding bits past `cols` are always
//! zero. Echelon forms are *reduced* with the leading (lowest-index) set bit
//! of each row as its pivot and rows sorted by pivot, which makes every
//! basis, kernel and solution deterministic.

use std::fmt;

use crate::{Error, Result};

const WORD: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

fn first_one(words: &[u64]) -> Option<usize> {
    words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
}

/// A vector over the two-element field.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; words_for(len)] }
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = BitVec::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = BitVec::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    /// Parses a string of `0`/`1` characters, first character = index 0.
    pub fn from_bits(bits: &str) -> Self {
        let chars: Vec<char> = bits.chars().filter(|c| !c.is_whitespace()).collect();
        BitVec::from_indices(chars.len(), chars.iter().enumerate().filter(|(_, &c)| c == '1').map(|(i, _)| i))
    }

    fn from_words(len: usize, words: Vec<u64>) -> Self {
        BitVec { len, words }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch");
        xor_into(&mut self.words, &other.words);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        first_one(&self.words)
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD + b)
                }
            })
        })
    }

    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch");
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum::<u32>() % 2 == 1
    }

    /// Concatenation `self ‖ other`.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        BitVec::from_indices(self.len + other.len, self.ones().chain(other.ones().map(|i| i + self.len)))
    }

    /// The bits in `range`, re-indexed from zero.
    pub fn slice(&self, range: std::ops::Range<usize>) -> BitVec {
        let start = range.start;
        BitVec::from_indices(range.len(), self.ones().filter(|i| range.contains(i)).map(|i| i - start))
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Row-major dense matrix over the two-element field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Gf2Matrix { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Gf2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[BitVec]) -> Self {
        let mut m = Gf2Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row length mismatch");
            m.row_mut(i).copy_from_slice(&r.words);
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[BitVec]) -> Self {
        let mut m = Gf2Matrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for i in c.ones() {
                m.set(i, j, true);
            }
        }
        m
    }

    /// Parses rows written as `0`/`1` strings.
    pub fn from_bit_rows(rows: &[&str]) -> Self {
        let vecs: Vec<BitVec> = rows.iter().map(|r| BitVec::from_bits(r)).collect();
        let cols = vecs.first().map_or(0, BitVec::len);
        Gf2Matrix::from_rows(cols, &vecs)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row_vec(&self, i: usize) -> BitVec {
        BitVec::from_words(self.cols, self.row(i).to_vec())
    }

    pub fn row_vecs(&self) -> Vec<BitVec> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    pub fn column_vec(&self, j: usize) -> BitVec {
        BitVec::from_indices(self.rows, (0..self.rows).filter(|&i| self.get(i, j)))
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.stride + j / WORD] >> (j % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        let w = &mut self.data[i * self.stride + j / WORD];
        let mask = 1u64 << (j % WORD);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        self.data[i * self.stride + j / WORD] ^= 1u64 << (j % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in BitVec::from_words(self.cols, self.row(i).to_vec()).ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.rows });
        }
        let mut out = Gf2Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let row = BitVec::from_words(self.cols, self.row(i).to_vec());
            for k in row.ones() {
                let (src, dst) = (other.row(k).to_vec(), out.row_mut(i));
                xor_into(dst, &src);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &BitVec) -> Result<BitVec> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: x.len() });
        }
        Ok(BitVec::from_indices(
            self.rows,
            (0..self.rows).filter(|&i| {
                self.row(i).iter().zip(x.words()).map(|(a, b)| (a & b).count_ones()).sum::<u32>() % 2 == 1
            }),
        ))
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.cols != below.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: below.cols });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        Ok(Gf2Matrix { rows: self.rows + below.rows, cols: self.cols, stride: self.stride, data })
    }

    /// Sub-block with the given row and column ranges.
    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Gf2Matrix {
        let mut out = Gf2Matrix::zeros(rows.len(), cols.len());
        for (oi, i) in rows.enumerate() {
            let row = BitVec::from_words(self.cols, self.row(i).to_vec());
            for j in row.ones().filter(|j| cols.contains(j)) {
                out.set(oi, j - cols.start, true);
            }
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(row, col)`.
    pub fn place(&mut self, row: usize, col: usize, block: &Gf2Matrix) {
        for i in 0..block.rows {
            for j in block.row_vec(i).ones() {
                self.set(row + i, col + j, true);
            }
        }
    }

    /// In-place forward elimination; returns the pivot columns of the
    /// leading `rank` rows. Only rows below each pivot are cleared unless
    /// `full` is set, in which case the result is the reduced echelon form.
    fn eliminate(&mut self, full: bool) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let (w, mask) = (col / WORD, 1u64 << (col % WORD));
            let Some(p) = (r..self.rows).find(|&i| self.data[i * self.stride + w] & mask != 0) else {
                continue;
            };
            if p != r {
                for k in 0..self.stride {
                    self.data.swap(p * self.stride + k, r * self.stride + k);
                }
            }
            let pivot_row: Vec<u64> = self.row(r)[w..].to_vec();
            let start = if full { 0 } else { r + 1 };
            for i in start..self.rows {
                if i != r && self.data[i * self.stride + w] & mask != 0 {
                    let off = i * self.stride;
                    xor_into(&mut self.data[off + w..off + self.stride], &pivot_row);
                }
            }
            pivots.push(col);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        // eliminate along the shorter side
        if self.cols > self.rows {
            self.transpose().eliminate(false).len()
        } else {
            self.clone().eliminate(false).len()
        }
    }

    /// Reduced row echelon form with zero rows dropped, and its pivots.
    pub fn rref(&self) -> (Gf2Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.eliminate(true);
        m.rows = pivots.len();
        m.data.truncate(m.rows * m.stride);
        (m, pivots)
    }

    /// Basis of `{x : self · x = 0}`.
    pub fn kernel_basis(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let vectors: Vec<BitVec> = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = BitVec::unit(self.cols, f);
                for (i, &p) in pivots.iter().enumerate() {
                    if r.get(i, f) {
                        x.flip(p);
                    }
                }
                x
            })
            .collect();
        Subspace::from_vectors(self.cols, &vectors)
    }

    /// Some `x` with `self · x = b`, free variables set to zero after
    /// reduction to echelon form; `None` when the system is inconsistent.
    pub fn solve(&self, b: &BitVec) -> Result<Option<BitVec>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, got: b.len() });
        }
        let mut aug = Gf2Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in self.row_vec(i).ones() {
                aug.set(i, j, true);
            }
            if b.get(i) {
                aug.set(i, self.cols, true);
            }
        }
        let pivots = aug.eliminate(true);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = BitVec::zeros(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            if aug.get(i, self.cols) {
                x.set(p, true);
            }
        }
        Ok(Some(x))
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {}", self.row_vec(i))?;
        }
        write!(f, "]")
    }
}

/// A linear subspace of `GF(2)^ambient`, stored as a reduced echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Gf2Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Gf2Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::coordinate(ambient, 0..ambient)
    }

    /// Span of the unit vectors with indices in `range`.
    pub fn coordinate(ambient: usize, range: std::ops::Range<usize>) -> Self {
        let vectors: Vec<BitVec> = range.map(|i| BitVec::unit(ambient, i)).collect();
        Subspace::from_vectors(ambient, &vectors)
    }

    pub fn from_vectors(ambient: usize, vectors: &[BitVec]) -> Self {
        Subspace::from_spanning_matrix(&Gf2Matrix::from_rows(ambient, vectors))
    }

    /// Row space of `m`.
    pub fn from_spanning_matrix(m: &Gf2Matrix) -> Self {
        let (basis, pivots) = m.rref();
        Subspace { ambient: m.cols(), basis, pivots }
    }

    /// Column space of `m`.
    pub fn column_space(m: &Gf2Matrix) -> Self {
        Subspace::from_spanning_matrix(&m.transpose())
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &Gf2Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<BitVec> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if n == self.ambient {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.ambient, got: n })
        }
    }

    /// The unique element of `v + self` vanishing on every pivot column.
    pub fn canonical_coset_rep(&self, v: &BitVec) -> Result<BitVec> {
        self.check_ambient(v.len())?;
        let mut out = v.clone();
        for (i, &p) in self.pivots.iter().enumerate() {
            if out.get(p) {
                xor_into(&mut out.words, self.basis.row(i));
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &BitVec) -> Result<bool> {
        Ok(self.canonical_coset_rep(v)?.is_zero())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        other.check_ambient(self.ambient)?;
        for i in 0..self.dim() {
            if !other.contains(&self.basis.row_vec(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        Ok(Subspace::from_spanning_matrix(&self.basis.stack(&other.basis)?))
    }

    /// `self + span{v}`.
    pub fn with_vector(&self, v: &BitVec) -> Result<Subspace> {
        self.check_ambient(v.len())?;
        Ok(Subspace::from_spanning_matrix(
            &self.basis.stack(&Gf2Matrix::from_rows(self.ambient, std::slice::from_ref(v)))?,
        ))
    }

    /// Intersection from the left kernel of the stacked bases: every
    /// relation `Σαᵢaᵢ + Σβⱼbⱼ = 0` yields `Σαᵢaᵢ ∈ A ∩ B`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        let stacked = self.basis.stack(&other.basis)?;
        let relations = stacked.transpose().kernel_basis();
        let a = self.dim();
        let vectors: Vec<BitVec> = relations
            .basis_vectors()
            .iter()
            .map(|rel| {
                let mut w = BitVec::zeros(self.ambient);
                for i in rel.ones().take_while(|&i| i < a) {
                    xor_into(&mut w.words, self.basis.row(i));
                }
                w
            })
            .collect();
        Ok(Subspace::from_vectors(self.ambient, &vectors))
    }

    /// `dim self − dim sub`, requiring `sub ⊆ self`.
    pub fn quotient_dim(&self, sub: &Subspace) -> Result<usize> {
        if !sub.is_subspace_of(self)? {
            return Err(Error::NotASubspace);
        }
        Ok(self.dim() - sub.dim())
    }

    /// Image of the subspace under `m` (a map from the ambient space).
    pub fn image(&self, m: &Gf2Matrix) -> Result<Subspace> {
        self.check_ambient(m.cols())?;
        let images = self.basis_vectors().iter().map(|v| m.mul_vec(v)).collect::<Result<Vec<_>>>()?;
        Ok(Subspace::from_vectors(m.rows(), &images))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}: [", self.dim(), self.ambient)?;
        for (i, v) in self.basis_vectors().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span(ambient: usize, rows: &[&str]) -> Subspace {
        let vecs: Vec<BitVec> = rows.iter().map(|r| BitVec::from_bits(r)).collect();
        Subspace::from_vectors(ambient, &vecs)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Gf2Matrix::identity(3).rank(), 3);
        assert_eq!(Gf2Matrix::zeros(3, 5).rank(), 0);
        assert_eq!(Gf2Matrix::from_bit_rows(&["110", "011", "101"]).rank(), 2);
        assert_eq!(Gf2Matrix::zeros(0, 0).rank(), 0);
    }

    #[test]
    fn rank_across_word_boundary() {
        let mut m = Gf2Matrix::zeros(3, 130);
        m.set(0, 0, true);
        m.set(1, 64, true);
        m.set(2, 129, true);
        m.set(2, 0, true);
        assert_eq!(m.rank(), 3);
        assert_eq!(m.kernel_basis().dim(), 127);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Gf2Matrix::identity(4).kernel_basis().dim(), 0);
        assert_eq!(Gf2Matrix::zeros(2, 3).kernel_basis(), Subspace::full(3));
        let k = Gf2Matrix::from_bit_rows(&["11"]).kernel_basis();
        assert_eq!(k.basis_vectors(), vec![BitVec::from_bits("11")]);
    }

    #[test]
    fn solve_examples() {
        let b = BitVec::from_bits("101");
        assert_eq!(Gf2Matrix::identity(3).solve(&b).unwrap(), Some(b.clone()));
        assert_eq!(Gf2Matrix::zeros(3, 3).solve(&b).unwrap(), None);
        let m = Gf2Matrix::from_bit_rows(&["11"]);
        assert_eq!(m.solve(&BitVec::from_bits("1")).unwrap(), Some(BitVec::from_bits("10")));
        assert!(matches!(m.solve(&BitVec::from_bits("11")), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn subspace_examples() {
        let sum = span(2, &["10"]).sum(&span(2, &["01"])).unwrap();
        assert_eq!(sum, Subspace::full(2));
        let cap = span(2, &["10", "01"]).intersect(&span(2, &["11"])).unwrap();
        assert_eq!(cap, span(2, &["11"]));
        assert_eq!(Subspace::full(3).quotient_dim(&span(3, &["100"])).unwrap(), 2);
        assert_eq!(span(3, &["100"]).quotient_dim(&span(3, &["010"])), Err(Error::NotASubspace));
        assert!(span(3, &["110", "011"]).contains(&BitVec::from_bits("101")).unwrap());
        assert!(!span(3, &["110"]).contains(&BitVec::from_bits("100")).unwrap());
        assert!(span(3, &["110"]).sum(&Subspace::zero(2)).is_err());
    }

    #[test]
    fn coset_representatives() {
        let v = BitVec::from_bits("10");
        assert_eq!(Subspace::zero(2).canonical_coset_rep(&v).unwrap(), v);
        let sub = span(2, &["11"]);
        assert!(sub.canonical_coset_rep(&BitVec::from_bits("11")).unwrap().is_zero());
        // brute force: the coset {10, 01}; pivot of 11 is column 0, so the
        // representative is the element with bit 0 clear
        let rep = sub.canonical_coset_rep(&v).unwrap();
        assert_eq!(rep, BitVec::from_bits("01"));
        assert_eq!(sub.canonical_coset_rep(&BitVec::from_bits("01")).unwrap(), rep);
        assert_eq!(sub.canonical_coset_rep(&rep).unwrap(), rep);
    }

    #[test]
    fn transpose_and_product() {
        let m = Gf2Matrix::from_bit_rows(&["110", "011"]);
        assert_eq!(m.transpose(), Gf2Matrix::from_bit_rows(&["10", "11", "01"]));
        let p = m.mul(&m.transpose()).unwrap();
        assert_eq!(p, Gf2Matrix::from_bit_rows(&["01", "10"]));
        assert!(m.mul(&m).is_err());
    }
}
