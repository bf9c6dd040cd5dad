//! Configurations, the differentials `D` and `d`, and Seifert cohomology.
//!
//! The basis of `SC^q(T, e)` is indexed arithmetically: with `j = e − q` red
//! edges, a basis element is a matching of size `j` (ranked in
//! lexicographic order of its sorted edge list) together with a `q`-subset
//! of the `V − 2j` free vertices (ranked in ascending order of its vertex
//! bitmask, i.e. colexicographically). The index is
//! `matching_rank · C(V − 2j, q) + subset_rank`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

use crate::forest::{Forest, Matching};
use crate::gf2::{BitVec, Gf2Matrix, Subspace};
use crate::par::*;
use crate::poly::BiPolynomial;
use crate::{Error, Result};

/// Mark of a single vertex in a configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mark {
    Plus,
    Minus,
    /// Endpoint of a red edge.
    Matched,
}

/// A pair `(q, e)`: number of minuses, and minuses plus red edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bidegree {
    pub q: usize,
    pub e: usize,
}

impl Bidegree {
    pub const fn new(q: usize, e: usize) -> Self {
        Bidegree { q, e }
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.q, self.e)
    }
}

/// The two commuting differentials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Differential {
    /// `D`: each red edge resolves into `(+, −) + (−, +)`; bidegree `(1, 0)`.
    Resolve,
    /// `d`: each plus becomes a minus; bidegree `(1, 1)`.
    Flip,
}

impl Differential {
    pub fn target(self, source: Bidegree) -> Bidegree {
        match self {
            Differential::Resolve => Bidegree::new(source.q + 1, source.e),
            Differential::Flip => Bidegree::new(source.q + 1, source.e + 1),
        }
    }
}

/// A marking of a forest: a red-edge matching plus a set of minus vertices
/// among the unmatched ones; every other vertex is a plus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    red: Matching,
    minus: u64,
}

impl Configuration {
    /// Validates that `red` is a matching of `forest` and that the minus
    /// vertices are unmatched.
    pub fn new(forest: &Forest, red: &[(usize, usize)], minus: &[usize]) -> Result<Self> {
        let v = forest.vertex_count();
        let mut covered = 0u64;
        let mut edges = Vec::new();
        for &(a, b) in red {
            let (u, w) = (a.min(b), a.max(b));
            if forest.edge_index(u, w).is_none() || covered & (1 << u | 1 << w) != 0 {
                return Err(Error::InvalidConfiguration(format!("({u}, {w}) is not a red edge of a matching")));
            }
            covered |= 1 << u | 1 << w;
            edges.push((u, w));
        }
        let mut mask = 0u64;
        for &m in minus {
            if m >= v {
                return Err(Error::LabelOutOfRange { label: m, vertex_count: v });
            }
            if covered >> m & 1 == 1 {
                return Err(Error::InvalidConfiguration(format!("vertex {m} is both matched and marked")));
            }
            mask |= 1 << m;
        }
        Ok(Configuration { red: matching_from_edges(edges), minus: mask })
    }

    /// Builds from per-vertex marks; `Matched` vertices are paired along
    /// `red`.
    pub fn from_marks(forest: &Forest, marks: &[Mark], red: &[(usize, usize)]) -> Result<Self> {
        let minus: Vec<usize> = marks.iter().enumerate().filter(|(_, m)| **m == Mark::Minus).map(|(i, _)| i).collect();
        let c = Configuration::new(forest, red, &minus)?;
        if c.marks(forest.vertex_count()) != marks {
            return Err(Error::InvalidConfiguration("marks disagree with the red edges".into()));
        }
        Ok(c)
    }

    pub fn all_plus() -> Self {
        Configuration { red: Matching::default(), minus: 0 }
    }

    pub fn red_edges(&self) -> &[(usize, usize)] {
        self.red.edges()
    }

    pub fn minus_mask(&self) -> u64 {
        self.minus
    }

    pub fn bidegree(&self) -> Bidegree {
        let q = self.minus.count_ones() as usize;
        Bidegree::new(q, q + self.red.len())
    }

    pub fn marks(&self, vertex_count: usize) -> Vec<Mark> {
        let matched = self.red.vertex_mask();
        (0..vertex_count)
            .map(|v| {
                if matched >> v & 1 == 1 {
                    Mark::Matched
                } else if self.minus >> v & 1 == 1 {
                    Mark::Minus
                } else {
                    Mark::Plus
                }
            })
            .collect()
    }

    /// Swaps every plus with a minus; red edges are unchanged.
    pub fn star(&self, vertex_count: usize) -> Configuration {
        let full = if vertex_count == 64 { u64::MAX } else { (1u64 << vertex_count) - 1 };
        let free = full & !self.red.vertex_mask();
        Configuration { red: self.red.clone(), minus: free & !self.minus }
    }

    /// Compact rendering: `+`, `-`, and `=` for matched vertices, with the
    /// red edges listed.
    pub fn render(&self, vertex_count: usize) -> String {
        let marks: String = self
            .marks(vertex_count)
            .iter()
            .map(|m| match m {
                Mark::Plus => '+',
                Mark::Minus => '-',
                Mark::Matched => '=',
            })
            .collect();
        if self.red.is_empty() {
            marks
        } else {
            let red: Vec<String> = self.red.edges().iter().map(|(u, v)| format!("{u}{v}")).collect();
            format!("{marks}[{}]", red.join(","))
        }
    }
}

fn matching_from_edges(edges: Vec<(usize, usize)>) -> Matching {
    Matching::from_edges(edges)
}

/// Nonnegative dimensions indexed by bidegree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BigradedTable {
    entries: BTreeMap<Bidegree, usize>,
}

impl BigradedTable {
    pub fn new() -> Self {
        BigradedTable::default()
    }

    pub fn get(&self, q: usize, e: usize) -> usize {
        self.entries.get(&Bidegree::new(q, e)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, q: usize, e: usize, dim: usize) {
        if dim == 0 {
            self.entries.remove(&Bidegree::new(q, e));
        } else {
            self.entries.insert(Bidegree::new(q, e), dim);
        }
    }

    pub fn add(&mut self, q: usize, e: usize, dim: usize) {
        let current = self.get(q, e);
        self.set(q, e, current + dim);
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    /// Nonzero entries sorted by `(e, q)`.
    pub fn entries(&self) -> Vec<(Bidegree, usize)> {
        let mut v: Vec<(Bidegree, usize)> = self.entries.iter().map(|(&b, &d)| (b, d)).collect();
        v.sort_by_key(|(b, _)| (b.e, b.q));
        v
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ q^Q t^E dim`.
    pub fn generating_polynomial(&self) -> BiPolynomial {
        let mut p = BiPolynomial::zero();
        for (&b, &d) in &self.entries {
            p.add_term(d as i64, b.q as u32, b.e as u32);
        }
        p
    }

    /// Entrywise `self ≤ other`.
    pub fn le(&self, other: &BigradedTable) -> bool {
        self.entries.iter().all(|(b, &d)| d <= other.get(b.q, b.e))
    }
}

impl FromIterator<((usize, usize), usize)> for BigradedTable {
    fn from_iter<I: IntoIterator<Item = ((usize, usize), usize)>>(iter: I) -> Self {
        let mut t = BigradedTable::new();
        for ((q, e), d) in iter {
            t.add(q, e, d);
        }
        t
    }
}

/// A vector of `SC^q(T, e)` in the canonical basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainVector {
    pub bidegree: Bidegree,
    pub bits: BitVec,
}

impl ChainVector {
    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }
}

/// Cohomology data of one bidegree.
#[derive(Debug)]
pub struct ShBlock {
    pub kernel: Subspace,
    pub image: Subspace,
    /// Cocycle representatives of a basis of `ker / im`.
    pub representatives: Vec<BitVec>,
    /// Columns: image basis followed by the representatives.
    generators: Gf2Matrix,
}

impl ShBlock {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }
}

struct Memo<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Copy, V> Memo<K, V> {
    fn new() -> Self {
        Memo { map: RwLock::new(HashMap::new()) }
    }

    fn get_or_compute(&self, key: K, compute: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.map.read().expect("memo lock poisoned").get(&key) {
            return Arc::clone(v);
        }
        let value = Arc::new(compute());
        let mut map = self.map.write().expect("memo lock poisoned");
        Arc::clone(map.entry(key).or_insert(value))
    }
}

struct MatchingEntry {
    matching: Matching,
    edge_mask: u64,
    vertex_mask: u64,
}

/// The Seifert complex of a forest, with bases and matrices built lazily
/// per bidegree and cached.
pub struct SeifertComplex {
    forest: Forest,
    by_size: Vec<Vec<MatchingEntry>>,
    rank_of: Vec<HashMap<u64, usize>>,
    binomial: Vec<Vec<u64>>,
    matrices: Memo<(Differential, Bidegree), Gf2Matrix>,
    ranks: Memo<(Differential, Bidegree), usize>,
    blocks: Memo<Bidegree, ShBlock>,
}

impl SeifertComplex {
    pub fn new(forest: Forest) -> Self {
        let v = forest.vertex_count();
        let mut by_size: Vec<Vec<MatchingEntry>> = (0..=v / 2).map(|_| Vec::new()).collect();
        for m in forest.matchings() {
            let edge_mask =
                m.edges().iter().fold(0u64, |acc, &(a, b)| acc | 1 << forest.edge_index(a, b).expect("matching edge"));
            let vertex_mask = m.vertex_mask();
            by_size[m.len()].push(MatchingEntry { matching: m, edge_mask, vertex_mask });
        }
        let rank_of =
            by_size.iter().map(|list| list.iter().enumerate().map(|(i, m)| (m.edge_mask, i)).collect()).collect();
        let mut binomial = vec![vec![0u64; v + 2]; v + 2];
        for n in 0..v + 2 {
            binomial[n][0] = 1;
            for k in 1..=n {
                binomial[n][k] = binomial[n - 1][k - 1] + if k < n { binomial[n - 1][k] } else { 0 };
            }
        }
        SeifertComplex {
            forest,
            by_size,
            rank_of,
            binomial,
            matrices: Memo::new(),
            ranks: Memo::new(),
            blocks: Memo::new(),
        }
    }

    pub fn forest(&self) -> &Forest {
        &self.forest
    }

    pub fn vertex_count(&self) -> usize {
        self.forest.vertex_count()
    }

    fn choose(&self, n: usize, k: usize) -> u64 {
        if k > n {
            0
        } else {
            self.binomial[n][k]
        }
    }

    fn full_mask(&self) -> u64 {
        let v = self.vertex_count();
        if v == 64 {
            u64::MAX
        } else {
            (1u64 << v) - 1
        }
    }

    /// `dim SC^q(T, e)`.
    pub fn dim(&self, q: usize, e: usize) -> usize {
        let v = self.vertex_count();
        if e < q {
            return 0;
        }
        let j = e - q;
        if j >= self.by_size.len() || q + 2 * j > v {
            return 0;
        }
        self.by_size[j].len() * self.choose(v - 2 * j, q) as usize
    }

    /// Every bidegree with `SC ≠ 0`, sorted by `(e, q)`.
    pub fn bidegrees(&self) -> Vec<Bidegree> {
        let v = self.vertex_count();
        let mut out = Vec::new();
        for e in 0..=v {
            for q in 0..=e {
                if self.dim(q, e) > 0 {
                    out.push(Bidegree::new(q, e));
                }
            }
        }
        out
    }

    /// Total number of configurations, `Σ_R 2^(V − 2|R|)`.
    pub fn config_count(&self) -> u128 {
        let v = self.vertex_count();
        self.by_size.iter().enumerate().map(|(j, list)| list.len() as u128 * (1u128 << (v - 2 * j))).sum()
    }

    /// `Σ_{q,e} dim SC^q(T,e)` computed bidegree by bidegree.
    pub fn dims(&self) -> BigradedTable {
        self.bidegrees().into_iter().map(|b| ((b.q, b.e), self.dim(b.q, b.e))).collect()
    }

    fn subset_rank(&self, free: u64, minus: u64) -> usize {
        let mut rank = 0u64;
        let mut bits = minus;
        let mut i = 0;
        while bits != 0 {
            let v = bits.trailing_zeros();
            bits &= bits - 1;
            let pos = (free & ((1u64 << v) - 1)).count_ones() as usize;
            i += 1;
            rank += self.choose(pos, i);
        }
        rank as usize
    }

    fn index_parts(&self, edge_mask: u64, vertex_mask: u64, minus: u64) -> usize {
        let j = edge_mask.count_ones() as usize;
        let free = self.full_mask() & !vertex_mask;
        let q = minus.count_ones() as usize;
        let per = self.choose(self.vertex_count() - 2 * j, q) as usize;
        self.rank_of[j][&edge_mask] * per + self.subset_rank(free, minus)
    }

    /// Position of `c` in the canonical basis of its bidegree.
    pub fn index_of(&self, c: &Configuration) -> Option<usize> {
        let mut edge_mask = 0u64;
        for &(u, v) in c.red_edges() {
            edge_mask |= 1 << self.forest.edge_index(u, v)?;
        }
        let j = c.red_edges().len();
        if j >= self.rank_of.len() || !self.rank_of[j].contains_key(&edge_mask) {
            return None;
        }
        let vertex_mask = c.red.vertex_mask();
        if c.minus & vertex_mask != 0 || c.minus & !self.full_mask() != 0 {
            return None;
        }
        Some(self.index_parts(edge_mask, vertex_mask, c.minus))
    }

    /// Iterates `(matching entry, minus mask)` over the canonical basis of
    /// `(q, e)` in order.
    fn for_each_basis(&self, q: usize, e: usize, mut f: impl FnMut(&MatchingEntry, u64)) {
        if self.dim(q, e) == 0 {
            return;
        }
        let j = e - q;
        let full = self.full_mask();
        for entry in &self.by_size[j] {
            let free = full & !entry.vertex_mask;
            let positions: Vec<u32> = (0..64).filter(|b| free >> b & 1 == 1).collect();
            let width = positions.len();
            if q == 0 {
                f(entry, 0);
                continue;
            }
            // Gosper's hack over position masks enumerates q-subsets in
            // increasing order, which maps monotonically to vertex masks.
            let mut sub: u64 = (1u64 << q) - 1;
            let limit: u64 = if width == 64 { u64::MAX } else { 1u64 << width };
            while sub < limit {
                let mut mask = 0u64;
                let mut s = sub;
                while s != 0 {
                    mask |= 1u64 << positions[s.trailing_zeros() as usize];
                    s &= s - 1;
                }
                f(entry, mask);
                let c = sub & sub.wrapping_neg();
                let r = sub + c;
                if r == 0 {
                    break;
                }
                sub = (((r ^ sub) >> 2) / c) | r;
            }
        }
    }

    /// The ordered canonical basis of `SC^q(T, e)`.
    pub fn enumerate_configs(&self, q: usize, e: usize) -> Vec<Configuration> {
        let mut out = Vec::with_capacity(self.dim(q, e));
        self.for_each_basis(q, e, |entry, minus| out.push(Configuration { red: entry.matching.clone(), minus }));
        out
    }

    /// Applies `D` or `d` to a single configuration, reducing modulo 2.
    pub fn apply(&self, which: Differential, c: &Configuration) -> Vec<Configuration> {
        let mut terms = Vec::new();
        match which {
            Differential::Resolve => {
                for (k, &(u, v)) in c.red_edges().iter().enumerate() {
                    let mut rest = c.red_edges().to_vec();
                    rest.remove(k);
                    let red = Matching::from_edges(rest);
                    terms.push(Configuration { red: red.clone(), minus: c.minus | 1 << v });
                    terms.push(Configuration { red, minus: c.minus | 1 << u });
                }
            }
            Differential::Flip => {
                let free = self.full_mask() & !c.red.vertex_mask() & !c.minus;
                for v in (0..64).filter(|b| free >> b & 1 == 1) {
                    terms.push(Configuration { red: c.red.clone(), minus: c.minus | 1 << v });
                }
            }
        }
        terms.sort();
        let mut reduced: Vec<Configuration> = Vec::with_capacity(terms.len());
        for t in terms {
            if reduced.last() == Some(&t) {
                reduced.pop();
            } else {
                reduced.push(t);
            }
        }
        reduced
    }

    /// Matrix of `which` from `(q, e)` into its target bidegree, in the
    /// canonical bases (rows: target, columns: source).
    pub fn differential_matrix(&self, which: Differential, q: usize, e: usize) -> Arc<Gf2Matrix> {
        let source = Bidegree::new(q, e);
        self.matrices.get_or_compute((which, source), || self.build_matrix(which, source))
    }

    fn build_matrix(&self, which: Differential, source: Bidegree) -> Gf2Matrix {
        let target = which.target(source);
        let mut m = Gf2Matrix::zeros(self.dim(target.q, target.e), self.dim(source.q, source.e));
        if m.rows() == 0 || m.cols() == 0 {
            return m;
        }
        let full = self.full_mask();
        let mut col = 0;
        self.for_each_basis(source.q, source.e, |entry, minus| {
            match which {
                Differential::Resolve => {
                    let mut edges = entry.edge_mask;
                    while edges != 0 {
                        let k = edges.trailing_zeros() as usize;
                        edges &= edges - 1;
                        let (u, v) = self.forest.edges()[k];
                        let em = entry.edge_mask & !(1u64 << k);
                        let vm = entry.vertex_mask & !(1u64 << u | 1u64 << v);
                        m.flip(self.index_parts(em, vm, minus | 1 << u), col);
                        m.flip(self.index_parts(em, vm, minus | 1 << v), col);
                    }
                }
                Differential::Flip => {
                    let mut plus = full & !entry.vertex_mask & !minus;
                    while plus != 0 {
                        let v = plus.trailing_zeros();
                        plus &= plus - 1;
                        m.flip(self.index_parts(entry.edge_mask, entry.vertex_mask, minus | 1 << v), col);
                    }
                }
            }
            col += 1;
        });
        m
    }

    /// Applies a differential to a chain vector.
    pub fn apply_vector(&self, which: Differential, x: &ChainVector) -> ChainVector {
        let target = which.target(x.bidegree);
        let m = self.differential_matrix(which, x.bidegree.q, x.bidegree.e);
        let bits = m.mul_vec(&x.bits).expect("chain vector length matches its bidegree");
        ChainVector { bidegree: target, bits }
    }

    pub fn rank(&self, which: Differential, q: usize, e: usize) -> usize {
        let source = Bidegree::new(q, e);
        *self.ranks.get_or_compute((which, source), || self.differential_matrix(which, q, e).rank())
    }

    /// `dim SH^q(T, e) = dim ker D − rank D_{in}`.
    pub fn cohomology_dim(&self, q: usize, e: usize) -> usize {
        let dim = self.dim(q, e);
        if dim == 0 {
            return 0;
        }
        let incoming = if q == 0 { 0 } else { self.rank(Differential::Resolve, q - 1, e) };
        dim - self.rank(Differential::Resolve, q, e) - incoming
    }

    pub fn cohomology_dims(&self) -> BigradedTable {
        let bidegrees = self.bidegrees();
        let dims: Vec<((usize, usize), usize)> =
            bidegrees.par_iter().map(|b| ((b.q, b.e), self.cohomology_dim(b.q, b.e))).collect();
        dims.into_iter().collect()
    }

    pub fn poincare_polynomial(&self) -> BiPolynomial {
        self.cohomology_dims().generating_polynomial()
    }

    /// Kernel, image and representatives of `SH^q(T, e)`.
    pub fn sh_block(&self, q: usize, e: usize) -> Arc<ShBlock> {
        self.blocks.get_or_compute(Bidegree::new(q, e), || self.build_block(q, e))
    }

    fn build_block(&self, q: usize, e: usize) -> ShBlock {
        let dim = self.dim(q, e);
        let kernel = self.differential_matrix(Differential::Resolve, q, e).kernel_basis();
        let image = if q == 0 {
            Subspace::zero(dim)
        } else {
            Subspace::column_space(&self.differential_matrix(Differential::Resolve, q - 1, e))
        };
        let mut span = image.clone();
        let mut representatives = Vec::new();
        for k in kernel.basis_vectors() {
            let r = span.canonical_coset_rep(&k).expect("same ambient");
            if !r.is_zero() {
                span = span.with_vector(&r).expect("same ambient");
                representatives.push(r);
            }
        }
        debug_assert_eq!(span.dim(), kernel.dim());
        let mut columns = image.basis_vectors();
        columns.extend(representatives.iter().cloned());
        let generators = Gf2Matrix::from_columns(dim, &columns);
        ShBlock { kernel, image, representatives, generators }
    }

    /// Cocycle representatives of a basis of `SH^q(T, e)`: the kernel's
    /// echelon basis, each reduced to its canonical coset representative
    /// modulo the image and the representatives already chosen; zero
    /// reductions are dropped.
    pub fn cohomology_basis(&self, q: usize, e: usize) -> Vec<ChainVector> {
        let block = self.sh_block(q, e);
        block
            .representatives
            .iter()
            .map(|bits| ChainVector { bidegree: Bidegree::new(q, e), bits: bits.clone() })
            .collect()
    }

    /// Coordinates of the class of a `D`-cocycle in the representative basis.
    pub fn sh_coordinates(&self, x: &ChainVector) -> Result<BitVec> {
        let Bidegree { q, e } = x.bidegree;
        if x.bits.len() != self.dim(q, e) {
            return Err(Error::DimensionMismatch { expected: self.dim(q, e), got: x.bits.len() });
        }
        if !self.apply_vector(Differential::Resolve, x).is_zero() {
            return Err(Error::NotClosed { q, e });
        }
        let block = self.sh_block(q, e);
        let solution = block.generators.solve(&x.bits)?.expect("every cocycle lies in image + representatives");
        let skip = block.image.dim();
        Ok(solution.slice(skip..skip + block.dim()))
    }

    /// Whether two cocycles of the same bidegree are cohomologous.
    pub fn cohomologous(&self, a: &ChainVector, b: &ChainVector) -> Result<bool> {
        if a.bidegree != b.bidegree {
            return Ok(false);
        }
        let mut diff = a.bits.clone();
        diff.xor_assign(&b.bits);
        self.sh_block(a.bidegree.q, a.bidegree.e).image.contains(&diff)
    }

    /// Chain vector of a formal sum of configurations, all of one bidegree.
    pub fn chain(&self, bidegree: Bidegree, configs: &[Configuration]) -> Result<ChainVector> {
        let mut bits = BitVec::zeros(self.dim(bidegree.q, bidegree.e));
        for c in configs {
            if c.bidegree() != bidegree {
                return Err(Error::InvalidConfiguration(format!(
                    "configuration at {} in a chain of {bidegree}",
                    c.bidegree()
                )));
            }
            let i = self
                .index_of(c)
                .ok_or_else(|| Error::InvalidConfiguration("configuration not in this forest".into()))?;
            bits.flip(i);
        }
        Ok(ChainVector { bidegree, bits })
    }

    /// Configurations in the support of a chain vector.
    pub fn support(&self, x: &ChainVector) -> Vec<Configuration> {
        let basis = self.enumerate_configs(x.bidegree.q, x.bidegree.e);
        x.bits.ones().map(|i| basis[i].clone()).collect()
    }
}

/// `dim SC^q(T, e)` from matching counts alone.
pub fn sc_dim_from_counts(vertex_count: usize, matching_counts: &[u64], q: usize, e: usize) -> u128 {
    if e < q {
        return 0;
    }
    let j = e - q;
    if j >= matching_counts.len() || q + 2 * j > vertex_count {
        return 0;
    }
    let free = vertex_count - 2 * j;
    let mut c: u128 = 1;
    for i in 0..q {
        c = c * (free - i) as u128 / (i + 1) as u128;
    }
    matching_counts[j] as u128 * c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> Forest {
        Forest::path(n).unwrap()
    }

    fn brute_force_configs(f: &Forest) -> Vec<Configuration> {
        let v = f.vertex_count();
        let mut out = Vec::new();
        for m in f.matchings() {
            let covered = m.vertex_mask();
            for minus in 0u64..1 << v {
                if minus & covered == 0 {
                    out.push(
                        Configuration::new(f, m.edges(), &(0..v).filter(|i| minus >> i & 1 == 1).collect::<Vec<_>>())
                            .unwrap(),
                    );
                }
            }
        }
        out
    }

    #[test]
    fn enumeration_counts() {
        let a2 = SeifertComplex::new(a(2));
        assert_eq!(a2.enumerate_configs(0, 1).len(), 1);
        assert_eq!(brute_force_configs(&a(2)).iter().filter(|c| c.bidegree() == Bidegree::new(0, 1)).count(), 1);
        let d4 = SeifertComplex::new(Forest::dynkin('D', 4).unwrap());
        assert_eq!(d4.enumerate_configs(2, 2).len(), 6);
        assert_eq!(d4.enumerate_configs(1, 2).len(), 6);
        for f in [a(5), Forest::star(5).unwrap(), Forest::dynkin('E', 6).unwrap()] {
            let c = SeifertComplex::new(f.clone());
            assert_eq!(c.enumerate_configs(0, 0), vec![Configuration::all_plus()]);
            let brute = brute_force_configs(&f);
            for b in c.bidegrees() {
                let mut expected: Vec<Configuration> = brute.iter().filter(|x| x.bidegree() == b).cloned().collect();
                expected.sort_by(|x, y| (x.red_edges(), x.minus_mask()).cmp(&(y.red_edges(), y.minus_mask())));
                assert_eq!(c.enumerate_configs(b.q, b.e), expected, "order at {b}");
            }
            assert_eq!(c.dims().total() as u128, c.config_count());
            assert_eq!(brute.len() as u128, c.config_count());
        }
    }

    #[test]
    fn config_counts() {
        assert_eq!(SeifertComplex::new(a(1)).config_count(), 2);
        assert_eq!(SeifertComplex::new(a(2)).config_count(), 5);
        assert_eq!(SeifertComplex::new(Forest::dynkin('D', 4).unwrap()).config_count(), 28);
        assert_eq!(SeifertComplex::new(Forest::empty()).config_count(), 1);
    }

    #[test]
    fn index_round_trip() {
        let c = SeifertComplex::new(Forest::dynkin('E', 7).unwrap());
        for b in c.bidegrees() {
            for (i, x) in c.enumerate_configs(b.q, b.e).iter().enumerate() {
                assert_eq!(c.index_of(x), Some(i));
            }
        }
    }

    #[test]
    fn resolve_on_an_edge() {
        let f = a(2);
        let c = SeifertComplex::new(f.clone());
        let red = Configuration::new(&f, &[(0, 1)], &[]).unwrap();
        let out = c.apply(Differential::Resolve, &red);
        let expected = vec![Configuration::new(&f, &[], &[0]).unwrap(), Configuration::new(&f, &[], &[1]).unwrap()];
        let mut sorted = out.clone();
        sorted.sort();
        let mut exp = expected.clone();
        exp.sort();
        assert_eq!(sorted, exp);
        assert!(c.apply(Differential::Resolve, &Configuration::all_plus()).is_empty());
        let m = c.differential_matrix(Differential::Resolve, 0, 1);
        assert_eq!((m.rows(), m.cols()), (2, 1));
        assert!(m.get(0, 0) && m.get(1, 0));
    }

    #[test]
    fn flip_examples() {
        let f = a(3);
        let c = SeifertComplex::new(f.clone());
        assert_eq!(c.apply(Differential::Flip, &Configuration::all_plus()).len(), 3);
        let all_minus = Configuration::new(&f, &[], &[0, 1, 2]).unwrap();
        assert!(c.apply(Differential::Flip, &all_minus).is_empty());
        let a1 = SeifertComplex::new(a(1));
        let m = a1.differential_matrix(Differential::Flip, 0, 0);
        assert_eq!((m.rows(), m.cols(), m.get(0, 0)), (1, 1, true));
        for q in 0..=3 {
            assert!(c.differential_matrix(Differential::Resolve, q, q).is_zero());
        }
    }

    /// The seven-vertex path configuration `(+ = = − = = +)` with red edges
    /// (1,2) and (4,5).
    #[test]
    fn seven_vertex_example() {
        use Mark::*;
        let f = a(7);
        let c = SeifertComplex::new(f.clone());
        let cfg = |marks: &[Mark], red: &[(usize, usize)]| Configuration::from_marks(&f, marks, red).unwrap();
        let x = cfg(&[Plus, Matched, Matched, Minus, Matched, Matched, Plus], &[(1, 2), (4, 5)]);
        let mut big = c.apply(Differential::Resolve, &x);
        let mut expected = vec![
            cfg(&[Plus, Plus, Minus, Minus, Matched, Matched, Plus], &[(4, 5)]),
            cfg(&[Plus, Minus, Plus, Minus, Matched, Matched, Plus], &[(4, 5)]),
            cfg(&[Plus, Matched, Matched, Minus, Plus, Minus, Plus], &[(1, 2)]),
            cfg(&[Plus, Matched, Matched, Minus, Minus, Plus, Plus], &[(1, 2)]),
        ];
        big.sort();
        expected.sort();
        assert_eq!(big, expected);
        let mut small = c.apply(Differential::Flip, &x);
        let mut expected = vec![
            cfg(&[Minus, Matched, Matched, Minus, Matched, Matched, Plus], &[(1, 2), (4, 5)]),
            cfg(&[Plus, Matched, Matched, Minus, Matched, Matched, Minus], &[(1, 2), (4, 5)]),
        ];
        small.sort();
        expected.sort();
        assert_eq!(small, expected);
        for t in &big {
            assert_eq!(t.bidegree(), Bidegree::new(2, 3));
        }
        for t in &small {
            assert_eq!(t.bidegree(), Bidegree::new(2, 4));
        }
    }

    #[test]
    fn cohomology_small_cases() {
        let a2 = SeifertComplex::new(a(2));
        let expected: BigradedTable = [((0, 0), 1), ((1, 1), 1), ((2, 2), 1)].into_iter().collect();
        assert_eq!(a2.cohomology_dims(), expected);
        let d4 = SeifertComplex::new(Forest::dynkin('D', 4).unwrap());
        let mut expected: BigradedTable = (0..=4).map(|k| ((k, k), 1)).collect();
        expected.set(1, 2, 1);
        assert_eq!(d4.cohomology_dims(), expected);
        let empty = SeifertComplex::new(Forest::empty());
        assert_eq!(empty.poincare_polynomial(), BiPolynomial::one());
    }

    #[test]
    fn basis_representatives() {
        let f = a(2);
        let a2 = SeifertComplex::new(f.clone());
        let reps = a2.cohomology_basis(1, 1);
        assert_eq!(reps.len(), 1);
        let image = &a2.sh_block(1, 1).image;
        assert!(!image.contains(&reps[0].bits).unwrap());
        assert_eq!(a2.cohomology_basis(0, 0)[0].bits, BitVec::from_bits("1"));
        assert_eq!(a2.support(&a2.cohomology_basis(0, 0)[0]), vec![Configuration::all_plus()]);

        // the turbine: every configuration with one red edge, one plus and one minus
        let d4 = SeifertComplex::new(Forest::dynkin('D', 4).unwrap());
        let turbine: Vec<Configuration> = d4.enumerate_configs(1, 2);
        let turbine = d4.chain(Bidegree::new(1, 2), &turbine).unwrap();
        let rep = &d4.cohomology_basis(1, 2)[0];
        assert!(d4.cohomologous(rep, &turbine).unwrap());
        assert_eq!(d4.sh_coordinates(&turbine).unwrap(), BitVec::from_bits("1"));
    }

    #[test]
    fn coordinates_reject_non_cocycles() {
        let f = a(2);
        let a2 = SeifertComplex::new(f.clone());
        let x = a2.chain(Bidegree::new(0, 1), &a2.enumerate_configs(0, 1)).unwrap();
        assert_eq!(a2.sh_coordinates(&x), Err(Error::NotClosed { q: 0, e: 1 }));
    }

    #[test]
    fn dims_from_counts_agree() {
        let f = Forest::dynkin('E', 8).unwrap();
        let c = SeifertComplex::new(f.clone());
        let counts = f.matching_size_counts();
        for b in c.bidegrees() {
            assert_eq!(sc_dim_from_counts(8, &counts, b.q, b.e), c.dim(b.q, b.e) as u128);
        }
    }
}
