//! The Alexander polynomial of a forest, computed five ways.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::complex::SeifertComplex;
use crate::forest::Forest;
use crate::par::*;
use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// Square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, data: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        let mut m = IntMatrix::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: row.len() });
            }
            m.data[i * n..(i + 1) * n].copy_from_slice(row);
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        self.data[i * self.n + j] = value;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// `self + t · other`.
    pub fn pencil_at(&self, other: &IntMatrix, t: i64) -> Result<IntMatrix> {
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| b.checked_mul(t).and_then(|bt| a.checked_add(bt)).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntMatrix { n: self.n, data })
    }

    pub fn scale(&self, c: i64) -> IntMatrix {
        IntMatrix { n: self.n, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| BigInt::from(self.get(i, j))).collect()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{:?}", self.rows())
    }
}

/// `det(a0 + t · a1)` as a polynomial of degree at most `n`: evaluated at
/// `t = 0, …, n` and interpolated exactly.
pub fn pencil_det(a0: &IntMatrix, a1: &IntMatrix) -> Result<IntPolynomial> {
    let n = a0.size();
    let values =
        (0..=n as i64).into_par_iter().map(|t| Ok(a0.pencil_at(a1, t)?.det())).collect::<Result<Vec<BigInt>>>()?;
    interpolate(&values)
}

/// The polynomial of degree `< values.len()` taking `values[i]` at `t = i`,
/// which must have integer coefficients fitting in `i64`.
pub fn interpolate(values: &[BigInt]) -> Result<IntPolynomial> {
    let n = values.len();
    let mut coeffs = vec![BigRational::zero(); n];
    for (i, y) in values.iter().enumerate() {
        if y.is_zero() {
            continue;
        }
        // basis polynomial Π_{j≠i} (t − j) / (i − j)
        let mut basis = vec![BigRational::one()];
        let mut denominator = BigInt::one();
        for j in (0..n).filter(|&j| j != i) {
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * BigRational::from_integer(BigInt::from(j));
            }
            basis = next;
            denominator *= BigInt::from(i as i64 - j as i64);
        }
        let scale = BigRational::new(y.clone(), denominator);
        for (k, c) in basis.into_iter().enumerate() {
            coeffs[k] += c * &scale;
        }
    }
    let ints = coeffs
        .into_iter()
        .map(|c| if c.is_integer() { c.to_integer().to_i64().ok_or(Error::Overflow) } else { Err(Error::Overflow) })
        .collect::<Result<Vec<i64>>>()?;
    Ok(IntPolynomial::new(ints))
}

/// Upper triangular, `−1` on the diagonal, `1` at `(i, j)` for adjacent
/// `i < j`.
pub fn seifert_matrix(f: &Forest) -> IntMatrix {
    let mut s = IntMatrix::zeros(f.vertex_count());
    for i in 0..f.vertex_count() {
        s.set(i, i, -1);
    }
    for &(u, v) in f.edges() {
        s.set(u, v, 1);
    }
    s
}

/// `det(tS − Sᵀ)`.
pub fn alexander_det(f: &Forest) -> IntPolynomial {
    let s = seifert_matrix(f);
    pencil_det(&s.transpose().scale(-1), &s).expect("entries of tS − Sᵀ stay tiny")
}

/// `Σ_R t^|R| (1 − t)^(V − 2|R|)` over all matchings `R`.
pub fn alexander_matchings(f: &Forest) -> IntPolynomial {
    let v = f.vertex_count();
    f.matching_size_counts()
        .iter()
        .enumerate()
        .map(|(k, &m)| &IntPolynomial::monomial(m as i64, k) * &IntPolynomial::one_minus_t().pow(v - 2 * k))
        .fold(IntPolynomial::zero(), |acc, p| &acc + &p)
}

/// Graded Euler characteristic `Σ_E t^E Σ_Q (−1)^Q dim SH^Q(T, E)`.
pub fn alexander_euler(complex: &SeifertComplex) -> IntPolynomial {
    complex.poincare_polynomial().eval_first(-1)
}

/// `Δ_T = (1 − t) Δ_{T − ℓ} + t Δ_{T − ℓ − p}` for the lowest-labeled leaf
/// `ℓ` with neighbour `p`; components multiply and an isolated vertex
/// contributes `1 − t`.
pub fn alexander_recursive(f: &Forest) -> IntPolynomial {
    let full = if f.vertex_count() == 64 { u64::MAX } else { (1u64 << f.vertex_count()) - 1 };
    let mut memo = HashMap::new();
    recurse(f, full, &mut memo)
}

fn recurse(f: &Forest, alive: u64, memo: &mut HashMap<u64, IntPolynomial>) -> IntPolynomial {
    if alive == 0 {
        return IntPolynomial::one();
    }
    if let Some(p) = memo.get(&alive) {
        return p.clone();
    }
    let component = component_of(f, alive, alive.trailing_zeros() as usize);
    let result = if component != alive {
        &recurse(f, component, memo) * &recurse(f, alive & !component, memo)
    } else if component.count_ones() == 1 {
        IntPolynomial::one_minus_t()
    } else {
        let live_neighbors = |v: usize| f.neighbors(v).iter().copied().filter(move |&w| alive >> w & 1 == 1);
        let leaf = (0..64).find(|&v| alive >> v & 1 == 1 && live_neighbors(v).count() == 1).expect("trees have leaves");
        let parent = live_neighbors(leaf).next().expect("leaf has a neighbour");
        let without_leaf = recurse(f, alive & !(1 << leaf), memo);
        let without_edge = recurse(f, alive & !(1 << leaf) & !(1 << parent), memo);
        &(&IntPolynomial::one_minus_t() * &without_leaf) + &(&IntPolynomial::monomial(1, 1) * &without_edge)
    };
    memo.insert(alive, result.clone());
    result
}

fn component_of(f: &Forest, alive: u64, start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in f.neighbors(v) {
            if alive >> w & 1 == 1 && seen >> w & 1 == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen
}

/// `M = (Sᵀ)⁻¹ S`, by forward substitution against the unitriangular-up-to-sign `Sᵀ`.
pub fn monodromy(f: &Forest) -> IntMatrix {
    let s = seifert_matrix(f);
    let lower = s.transpose();
    let n = s.size();
    let mut m = IntMatrix::zeros(n);
    // lower[i][i] = −1: x_i = −(s_i − Σ_{k<i} lower[i][k] x_k)
    for i in 0..n {
        for j in 0..n {
            let mut acc = s.get(i, j);
            for k in 0..i {
                acc -= lower.get(i, k) * m.get(k, j);
            }
            m.set(i, j, -acc);
        }
    }
    m
}

/// `det(I − tM)`.
pub fn monodromy_charpoly(m: &IntMatrix) -> IntPolynomial {
    pencil_det(&IntMatrix::identity(m.size()), &m.scale(-1)).expect("monodromy entries are small")
}

/// The monodromy matrix together with the check `det(I − tM) = Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monodromy {
    pub matrix: IntMatrix,
    pub charpoly: IntPolynomial,
    pub agrees_with_det: bool,
}

pub fn monodromy_report(f: &Forest) -> Monodromy {
    let matrix = monodromy(f);
    let charpoly = monodromy_charpoly(&matrix);
    let agrees_with_det = charpoly == alexander_det(f);
    Monodromy { matrix, charpoly, agrees_with_det }
}

/// The independent routes to `Δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Det,
    Matchings,
    Euler,
    Recursive,
    Monodromy,
}

impl Method {
    pub const ALL: [Method; 5] = [Method::Det, Method::Matchings, Method::Euler, Method::Recursive, Method::Monodromy];

    pub fn name(self) -> &'static str {
        match self {
            Method::Det => "det",
            Method::Matchings => "matchings",
            Method::Euler => "euler",
            Method::Recursive => "recursive",
            Method::Monodromy => "monodromy",
        }
    }

    pub fn compute(self, f: &Forest) -> IntPolynomial {
        match self {
            Method::Det => alexander_det(f),
            Method::Matchings => alexander_matchings(f),
            Method::Euler => alexander_euler(&SeifertComplex::new(f.clone())),
            Method::Recursive => alexander_recursive(f),
            Method::Monodromy => monodromy_charpoly(&monodromy(f)),
        }
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| format!("unknown method {s:?}"))
    }
}
