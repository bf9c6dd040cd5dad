//! The spectral sequence of the `(D, d)` bicomplex, the `d₂` zig-zag and
//! the `K₂` operator.
//!
//! The total complex is `C^Q = ⊕_E SC^Q(T, E)` with differential `D + d`,
//! filtered by `F^p = span{E ≥ p}`. `D` preserves `E` and `d` raises it by
//! one, so `E_0 = SC`, `E_1 = SH` and `d_r` has bidegree `(1, r)`.

use crate::complex::{Bidegree, BigradedTable, ChainVector, Differential, SeifertComplex};
use crate::gf2::{BitVec, Gf2Matrix, Subspace};
use crate::par::*;
use crate::{Error, Result};

/// Dimensions of one page, indexed by `(Q, E)` with `E` the filtration degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralPage {
    pub r: usize,
    pub dims: BigradedTable,
}

/// Page after which every differential vanishes for a forest on
/// `vertex_count` vertices.
///
/// A nonzero `d_r` out of `(Q, E)` with `j = E − Q` red edges lands on
/// configurations with `j + r − 1` red edges and `Q + 1` minuses, so
/// `Q + 1 + 2(j + r − 1) ≤ V`, forcing `r ≤ (V + 1) / 2`.
pub fn stable_page(vertex_count: usize) -> usize {
    vertex_count.div_ceil(2) + 1
}

/// The filtered total complex, assembled once per forest.
pub struct TotalComplex<'a> {
    complex: &'a SeifertComplex,
    /// `offsets[Q][E]` is where block `SC^Q(E)` starts inside `C^Q`;
    /// `offsets[Q][V + 1] = dim C^Q`.
    offsets: Vec<Vec<usize>>,
    /// `boundary[Q]: C^Q → C^{Q+1}`.
    boundary: Vec<Gf2Matrix>,
}

impl<'a> TotalComplex<'a> {
    pub fn new(complex: &'a SeifertComplex) -> Self {
        let v = complex.vertex_count();
        let offsets: Vec<Vec<usize>> = (0..=v + 1)
            .map(|q| {
                let mut off = Vec::with_capacity(v + 2);
                let mut acc = 0;
                for e in 0..=v + 1 {
                    off.push(acc);
                    acc += complex.dim(q, e);
                }
                off
            })
            .collect();
        let boundary = (0..=v)
            .into_par_iter()
            .map(|q| {
                let mut m = Gf2Matrix::zeros(offsets[q + 1][v + 1], offsets[q][v + 1]);
                for e in 0..=v {
                    if complex.dim(q, e) == 0 {
                        continue;
                    }
                    let big = complex.differential_matrix(Differential::Resolve, q, e);
                    m.place(offsets[q + 1][e], offsets[q][e], &big);
                    let small = complex.differential_matrix(Differential::Flip, q, e);
                    m.place(offsets[q + 1][e + 1], offsets[q][e], &small);
                }
                m
            })
            .collect();
        TotalComplex { complex, offsets, boundary }
    }

    fn v(&self) -> usize {
        self.complex.vertex_count()
    }

    pub fn dim(&self, q: usize) -> usize {
        if q > self.v() {
            0
        } else {
            self.offsets[q][self.v() + 1]
        }
    }

    /// `D + d` out of `C^q`.
    pub fn boundary(&self, q: usize) -> &Gf2Matrix {
        &self.boundary[q]
    }

    /// Start of `F^p` inside `C^q`, clamped to `[0, dim C^q]`.
    fn filtration_start(&self, q: usize, p: isize) -> usize {
        let p = p.clamp(0, self.v() as isize + 1) as usize;
        self.offsets[q][p]
    }

    /// `Z_r^p ⊆ C^q`: elements of `F^p` whose boundary lies in `F^{p+r}`.
    /// For `r ≤ 0` this is `F^p` itself.
    pub fn cycles(&self, q: usize, r: isize, p: isize) -> Subspace {
        let n = self.dim(q);
        let start = self.filtration_start(q, p);
        if r <= 0 || q >= self.v() {
            return Subspace::coordinate(n, start..n);
        }
        let rows = self.filtration_start(q + 1, p)..self.filtration_start(q + 1, p + r);
        let block = self.boundary[q].block(rows, start..n);
        let kernel = block.kernel_basis();
        let prefix = BitVec::zeros(start);
        let vectors: Vec<BitVec> = kernel.basis_vectors().iter().map(|k| prefix.concat(k)).collect();
        Subspace::from_vectors(n, &vectors)
    }

    /// `dim E_r^{p}` in total degree `q`.
    pub fn page_entry(&self, q: usize, r: usize, p: usize) -> usize {
        let (r, p) = (r as isize, p as isize);
        let numerator = self.cycles(q, r, p);
        let mut denominator = self.cycles(q, r - 1, p + 1);
        if q > 0 {
            let lower = self.cycles(q - 1, r - 1, p - r + 1);
            let bounded = lower.image(&self.boundary[q - 1]).expect("boundary matches its source");
            denominator = denominator.sum(&bounded).expect("same ambient");
        }
        numerator.dim() - denominator.dim()
    }

    /// `dim H^q` of the total complex.
    pub fn cohomology_dim(&self, q: usize) -> usize {
        let outgoing = if q <= self.v() { self.boundary[q].rank() } else { 0 };
        let incoming = if q > 0 && q <= self.v() + 1 { self.boundary[q - 1].rank() } else { 0 };
        self.dim(q) - outgoing - incoming
    }
}

/// Dimensions of `E_r`. Pages beyond [`stable_page`] equal it.
pub fn page_dims(complex: &SeifertComplex, r: usize) -> Result<SpectralPage> {
    if r == 0 {
        return Err(Error::InvalidPage);
    }
    let v = complex.vertex_count();
    let effective = r.min(stable_page(v));
    let total = TotalComplex::new(complex);
    let cells: Vec<(usize, usize)> = complex.bidegrees().into_iter().map(|b| (b.q, b.e)).collect();
    let dims: Vec<((usize, usize), usize)> =
        cells.par_iter().map(|&(q, e)| ((q, e), total.page_entry(q, effective, e))).collect();
    Ok(SpectralPage { r, dims: dims.into_iter().collect() })
}

/// Dimensions of `E_1, …, E_{max_page}`, stopping early once stable.
pub fn pages(complex: &SeifertComplex, max_page: usize) -> Result<Vec<SpectralPage>> {
    let last = max_page.min(stable_page(complex.vertex_count()));
    (1..=last.max(1)).map(|r| page_dims(complex, r)).collect()
}

/// `dim H^Q` of the total complex for each `Q`, which is the `E_∞` page
/// collapsed along `E`.
pub fn limit_dims_by_q(complex: &SeifertComplex) -> Vec<usize> {
    let total = TotalComplex::new(complex);
    (0..=complex.vertex_count()).into_par_iter().map(|q| total.cohomology_dim(q)).collect()
}

/// Total dimension of `E_∞`.
pub fn limit_dim(complex: &SeifertComplex) -> usize {
    limit_dims_by_q(complex).iter().sum()
}

/// A global basis of `SH`: every representative, ordered by `(E, Q)` and
/// then by representative index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShBasis {
    pub entries: Vec<(Bidegree, usize)>,
}

impl ShBasis {
    pub fn new(complex: &SeifertComplex) -> Self {
        let dims = complex.cohomology_dims();
        let mut entries = Vec::new();
        for (b, d) in dims.entries() {
            entries.extend((0..d).map(|i| (b, i)));
        }
        ShBasis { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn position(&self, bidegree: Bidegree, index: usize) -> Option<usize> {
        self.entries.iter().position(|&(b, i)| b == bidegree && i == index)
    }

    /// Global position of the first representative at `bidegree`.
    pub fn start(&self, bidegree: Bidegree) -> Option<usize> {
        self.position(bidegree, 0)
    }

    fn place(&self, out: &mut BitVec, bidegree: Bidegree, local: &BitVec) {
        if let Some(start) = self.start(bidegree) {
            for i in local.ones() {
                out.flip(start + i);
            }
        }
    }
}

/// A linear endomorphism of `SH` written in an [`ShBasis`]; column `j` is
/// the image of basis element `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShMap {
    pub basis: ShBasis,
    pub matrix: Gf2Matrix,
}

impl ShMap {
    pub fn squares_to_zero(&self) -> bool {
        self.matrix.mul(&self.matrix).expect("square matrix").is_zero()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// `d₁` on `SH`, induced by `d`.
pub fn d1_on_sh(complex: &SeifertComplex) -> ShMap {
    let basis = ShBasis::new(complex);
    let columns: Vec<BitVec> = basis
        .entries
        .par_iter()
        .map(|&(b, i)| {
            let x = &complex.cohomology_basis(b.q, b.e)[i];
            let y = complex.apply_vector(Differential::Flip, x);
            let coords = complex.sh_coordinates(&y).expect("d maps D-cocycles to D-cocycles");
            let mut col = BitVec::zeros(basis.len());
            basis.place(&mut col, y.bidegree, &coords);
            col
        })
        .collect();
    let matrix = Gf2Matrix::from_columns(basis.len(), &columns);
    ShMap { basis, matrix }
}

/// Output of the `d₂` zig-zag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigzagClass {
    pub source: Bidegree,
    pub target: Bidegree,
    /// Canonical representative: `D`-closed and reduced modulo `im D`.
    pub representative: ChainVector,
    /// Coordinates of the class in the representative basis of `target`.
    pub coordinates: BitVec,
    /// The canonical representative `h` of the class of `d(x)`.
    pub obstruction: ChainVector,
}

impl ZigzagClass {
    pub fn is_zero(&self) -> bool {
        self.coordinates.is_zero()
    }
}

/// The `d₂` zig-zag of a `D`-cocycle `x` at `(q, e)`.
///
/// Writes `d(x) = h + D(y)` with `h` the canonical coset representative of
/// `d(x)` modulo `im D` and `y` from [`Gf2Matrix::solve`]. When `h ≠ 0`,
/// `D(d(y)) = d(h)` need not vanish; since `d₁² = 0` the chain `d(h)` is
/// `D`-exact and the solved `w` with `D(w) = d(h)` is added, so the result
/// is the class of `d(y) + w` at `(q + 1, e + 2)`.
pub fn d2_zigzag(complex: &SeifertComplex, x: &ChainVector) -> Result<ZigzagClass> {
    let Bidegree { q, e } = x.bidegree;
    if x.bits.len() != complex.dim(q, e) {
        return Err(Error::DimensionMismatch { expected: complex.dim(q, e), got: x.bits.len() });
    }
    if !complex.apply_vector(Differential::Resolve, x).is_zero() {
        return Err(Error::NotClosed { q, e });
    }
    let z = complex.apply_vector(Differential::Flip, x);
    let image = &complex.sh_block(z.bidegree.q, z.bidegree.e).image;
    let h = image.canonical_coset_rep(&z.bits)?;
    let mut exact = z.bits.clone();
    exact.xor_assign(&h);

    let y = solve_resolve(complex, Bidegree::new(q, e + 1), &exact)?;
    let target = Bidegree::new(q + 1, e + 2);
    let mut out = complex.apply_vector(Differential::Flip, &y);

    let obstruction = ChainVector { bidegree: z.bidegree, bits: h };
    if !obstruction.is_zero() {
        let dh = complex.apply_vector(Differential::Flip, &obstruction);
        let w = solve_resolve(complex, target, &dh.bits)?;
        out.bits.xor_assign(&w.bits);
    }
    debug_assert_eq!(out.bidegree, target);

    let coordinates = complex.sh_coordinates(&out)?;
    let reduced = complex.sh_block(target.q, target.e).image.canonical_coset_rep(&out.bits)?;
    Ok(ZigzagClass {
        source: x.bidegree,
        target,
        representative: ChainVector { bidegree: target, bits: reduced },
        coordinates,
        obstruction,
    })
}

/// Some `y` at `source` with `D(y) = b`.
fn solve_resolve(complex: &SeifertComplex, source: Bidegree, b: &BitVec) -> Result<ChainVector> {
    let target = Differential::Resolve.target(source);
    if b.is_zero() {
        return Ok(ChainVector { bidegree: source, bits: BitVec::zeros(complex.dim(source.q, source.e)) });
    }
    let m = complex.differential_matrix(Differential::Resolve, source.q, source.e);
    match m.solve(b)? {
        Some(bits) => Ok(ChainVector { bidegree: source, bits }),
        None => Err(Error::Invariant(format!("chain at {target} is not D-exact"))),
    }
}

/// The zero-level class `[m]`, when `SH^m(T, m)` is one-dimensional.
pub fn zero_level_class(complex: &SeifertComplex, m: usize) -> Option<ChainVector> {
    let reps = complex.cohomology_basis(m, m);
    if reps.len() == 1 {
        reps.into_iter().next()
    } else {
        None
    }
}

/// `K₂([m]) = d₂([m − 2])` for `m ≥ 2`, zero on every other basis class.
///
/// `[m]` is only defined where the zero level `SH^m(T, m)` is
/// one-dimensional (always, for trees); on a disconnected forest the
/// higher-dimensional zero-level bidegrees are sent to zero.
pub fn k2_operator(complex: &SeifertComplex) -> Result<ShMap> {
    let basis = ShBasis::new(complex);
    let n = basis.len();
    let v = complex.vertex_count();
    let columns: Vec<(usize, BitVec)> = (2..=v)
        .into_par_iter()
        .filter_map(|m| {
            let source = zero_level_class(complex, m - 2)?;
            zero_level_class(complex, m)?;
            Some((m, source))
        })
        .map(|(m, source)| {
            let zz = d2_zigzag(complex, &source)?;
            let mut col = BitVec::zeros(n);
            basis.place(&mut col, zz.target, &zz.coordinates);
            Ok((basis.start(Bidegree::new(m, m)).expect("zero level present"), col))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut matrix = Gf2Matrix::zeros(n, n);
    for (j, col) in columns {
        for i in col.ones() {
            matrix.set(i, j, true);
        }
    }
    Ok(ShMap { basis, matrix })
}

/// A surviving class of `ker K₂ / im K₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K2Generator {
    pub bidegree: Bidegree,
    /// Coordinates in the representative basis of `SH` at `bidegree`.
    pub coordinates: BitVec,
}

/// `ker K₂ / im K₂`, bidegree by bidegree (`K₂` is homogeneous).
pub fn k2_cohomology(complex: &SeifertComplex) -> Result<Vec<K2Generator>> {
    let k2 = k2_operator(complex)?;
    if !k2.squares_to_zero() {
        return Err(Error::Invariant("K₂ does not square to zero".into()));
    }
    homology_by_bidegree(&k2)
}

/// Homology of a square-zero map on `SH`, split by the bidegree of the
/// basis elements.
pub fn homology_by_bidegree(map: &ShMap) -> Result<Vec<K2Generator>> {
    let mut out = Vec::new();
    let mut start = 0;
    let entries = &map.basis.entries;
    while start < entries.len() {
        let b = entries[start].0;
        let end = start + entries[start..].iter().take_while(|(x, _)| *x == b).count();
        let outgoing = map.matrix.block(0..map.matrix.rows(), start..end);
        let kernel = outgoing.kernel_basis();
        let incoming = map.matrix.block(start..end, 0..map.matrix.cols());
        let image = Subspace::column_space(&incoming);
        let mut span = image.clone();
        for k in kernel.basis_vectors() {
            let r = span.canonical_coset_rep(&k)?;
            if !r.is_zero() {
                span = span.with_vector(&r)?;
                out.push(K2Generator { bidegree: b, coordinates: r });
            }
        }
        debug_assert_eq!(span.dim(), kernel.dim(), "image not inside kernel at {b}");
        start = end;
    }
    Ok(out)
}
