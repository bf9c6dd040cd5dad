//! Heegaard–Floer style Poincaré polynomials read off the Alexander
//! polynomial of a knot, and their comparison with `K₂`-cohomology.
//!
//! For a knot, `Δ(t) / (1 − t) = Σ_i t^{α_i}` has 0/1 coefficients. With
//! `P_g = Σ_i q^i t^{α_i}` and `Δ_g = (1 − qt) P_g`, the polynomials are
//! obtained by substituting `q^k → u^{2k}` in `P_g`, and `q^k → u^{2k}`,
//! `−q^k → u^{2k−1}` in `Δ_g`.

use std::fmt;

use crate::complex::{Bidegree, SeifertComplex};
use crate::forest::Forest;
use crate::poly::{BiPolynomial, IntPolynomial};
use crate::spectral::k2_cohomology;
use crate::{alexander, Error, Result};

/// Exponents `α_0 = 0 < α_1 < …` with `α_{i+1} = α_i + 1` for `i ≥ stable_from`.
/// `alpha` is listed up to the degree of `Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapSequence {
    pub alpha: Vec<usize>,
    pub stable_from: usize,
}

impl GapSequence {
    /// The `i`-th exponent, extending the stable tail as needed.
    pub fn get(&self, i: usize) -> usize {
        match self.alpha.get(i) {
            Some(&a) => a,
            None => self.alpha[self.alpha.len() - 1] + (i + 1 - self.alpha.len()),
        }
    }

    /// `(1 − t) Σ_i t^{α_i}`, which telescopes to a polynomial.
    pub fn to_delta(&self) -> IntPolynomial {
        let mut coeffs = vec![0i64; self.alpha[self.stable_from] + 1];
        for &a in &self.alpha[..self.stable_from] {
            coeffs[a] += 1;
            coeffs[a + 1] -= 1;
        }
        coeffs[self.alpha[self.stable_from]] += 1;
        IntPolynomial::new(coeffs)
    }
}

/// Reads the gap exponents from the partial sums of `Δ`'s coefficients.
pub fn gap_exponents(delta: &IntPolynomial) -> Result<GapSequence> {
    let at_one = delta.eval(1);
    if at_one != 1 {
        return Err(Error::Link(at_one));
    }
    let mut alpha = Vec::new();
    let mut last_zero = None;
    let mut sum = 0;
    for (k, &c) in delta.coefficients().iter().enumerate() {
        sum += c;
        match sum {
            0 => last_zero = Some(k),
            1 => alpha.push(k),
            _ => return Err(Error::NotAlgebraic(k)),
        }
    }
    if alpha.first() != Some(&0) {
        return Err(Error::NotAlgebraic(0));
    }
    let tail = last_zero.map_or(0, |z| z + 1);
    let stable_from = alpha.iter().position(|&a| a == tail).expect("partial sums end at 1");
    Ok(GapSequence { alpha, stable_from })
}

/// A power series in `(u, t)` known exactly up to a truncation, after which
/// it continues as `next, next + step, next + 2·step, …` with coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesWithTail {
    pub polynomial: BiPolynomial,
    pub next: (u32, u32),
    pub step: (u32, u32),
}

impl fmt::Display for SeriesWithTail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let next = BiPolynomial::monomial(1, self.next.0, self.next.1);
        let tail = next.display_with("u", "t").to_string();
        write!(f, "{} + {tail} + …", self.polynomial.display_with("u", "t"))
    }
}

/// `P_g` with `q^k → u^{2k}`, truncated at the degree of `Δ`.
pub fn hf_minus_poly(delta: &IntPolynomial) -> Result<SeriesWithTail> {
    let gaps = gap_exponents(delta)?;
    let mut polynomial = BiPolynomial::zero();
    for (i, &a) in gaps.alpha.iter().enumerate() {
        polynomial.add_term(1, 2 * i as u32, a as u32);
    }
    let n = gaps.alpha.len();
    Ok(SeriesWithTail { polynomial, next: (2 * n as u32, gaps.get(n) as u32), step: (2, 1) })
}

/// `Δ_g(q, t) = Σ_{i ≤ s} q^i t^{α_i} − Σ_{i < s} q^{i+1} t^{α_i + 1}` with
/// `s = stable_from`; the stable tail telescopes away.
pub fn delta_g(gaps: &GapSequence) -> BiPolynomial {
    let mut out = BiPolynomial::zero();
    for i in 0..=gaps.stable_from {
        out.add_term(1, i as u32, gaps.alpha[i] as u32);
    }
    for i in 0..gaps.stable_from {
        out.add_term(-1, i as u32 + 1, gaps.alpha[i] as u32 + 1);
    }
    out
}

/// `Δ_g` with `q^k → u^{2k}` and `−q^k → u^{2k−1}`.
pub fn hf_hat_poly(delta: &IntPolynomial) -> Result<BiPolynomial> {
    let g = delta_g(&gap_exponents(delta)?);
    let mut out = BiPolynomial::zero();
    for ((q, t), c) in g.terms() {
        match c {
            1 => out.add_term(1, 2 * q, t),
            -1 if q > 0 => out.add_term(1, 2 * q - 1, t),
            _ => return Err(Error::RecipeViolation { q, t, coefficient: c }),
        }
    }
    Ok(out)
}

/// Evaluates an `hf_hat` polynomial at `u = −1`.
pub fn at_u_minus_one(p: &BiPolynomial) -> IntPolynomial {
    p.eval_first(-1)
}

/// One line of the side-by-side comparison: `K₂` bidegree, `hf_hat` exponents.
pub type Row = (Option<(u32, u32)>, Option<(u32, u32)>);

/// `K₂`-cohomology generators beside the `hf_hat` monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub delta: IntPolynomial,
    pub hf_hat: BiPolynomial,
    /// Bidegrees `(Q, E)` of the `K₂`-cohomology generators, sorted.
    pub k2: Vec<(u32, u32)>,
    /// Exponents `(u, t)` of the `hf_hat` monomials, repeated by coefficient, sorted.
    pub hf: Vec<(u32, u32)>,
}

impl ComparisonReport {
    pub fn matches(&self) -> bool {
        self.k2 == self.hf
    }

    /// Rows pairing the two sorted lists position by position.
    pub fn rows(&self) -> Vec<Row> {
        let n = self.k2.len().max(self.hf.len());
        (0..n).map(|i| (self.k2.get(i).copied(), self.hf.get(i).copied())).collect()
    }
}

/// Compares `K₂`-cohomology of a tree with `hf_hat` of its Alexander
/// polynomial; the grading correspondence is `Q ↔ u`, `E ↔ t`.
pub fn compare_report(f: &Forest) -> Result<ComparisonReport> {
    if !f.is_connected() {
        return Err(Error::Disconnected);
    }
    let delta = alexander::alexander_det(f);
    let hf_hat = hf_hat_poly(&delta)?;
    let complex = SeifertComplex::new(f.clone());
    let mut k2: Vec<(u32, u32)> = k2_cohomology(&complex)?
        .iter()
        .map(|g| {
            let Bidegree { q, e } = g.bidegree;
            (q as u32, e as u32)
        })
        .collect();
    k2.sort_unstable();
    let mut hf = Vec::new();
    for (exps, c) in hf_hat.terms() {
        hf.extend(std::iter::repeat_n(exps, c.max(0) as usize));
    }
    hf.sort_unstable();
    Ok(ComparisonReport { delta, hf_hat, k2, hf })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::new(c.to_vec())
    }

    fn e6_delta() -> IntPolynomial {
        p(&[1, -1, 0, 1, 0, -1, 1])
    }

    #[test]
    fn gaps() {
        assert_eq!(gap_exponents(&e6_delta()).unwrap(), GapSequence { alpha: vec![0, 3, 4, 6], stable_from: 3 });
        assert_eq!(gap_exponents(&p(&[1, -1, 1])).unwrap(), GapSequence { alpha: vec![0, 2], stable_from: 1 });
        assert_eq!(gap_exponents(&IntPolynomial::one()).unwrap(), GapSequence { alpha: vec![0], stable_from: 0 });
        assert_eq!(gap_exponents(&p(&[1, -1])), Err(Error::Link(0)));
        assert_eq!(gap_exponents(&p(&[1, 1, -1])), Err(Error::NotAlgebraic(1)));
        let g = gap_exponents(&e6_delta()).unwrap();
        assert_eq!((g.get(3), g.get(4), g.get(6)), (6, 7, 9));
        assert_eq!(g.to_delta(), e6_delta());
    }

    #[test]
    fn minus_polynomials() {
        let e6 = hf_minus_poly(&e6_delta()).unwrap();
        let mut expected = BiPolynomial::one();
        for (u, t) in [(2, 3), (4, 4), (6, 6)] {
            expected.add_term(1, u, t);
        }
        assert_eq!(e6.polynomial, expected);
        assert_eq!((e6.next, e6.step), ((8, 7), (2, 1)));
        assert_eq!(e6.to_string(), "1 + u^2t^3 + u^4t^4 + u^6t^6 + u^8t^7 + …");
        let unknot = hf_minus_poly(&IntPolynomial::one()).unwrap();
        assert_eq!((unknot.polynomial, unknot.next), (BiPolynomial::one(), (2, 1)));
        let a2 = hf_minus_poly(&p(&[1, -1, 1])).unwrap();
        assert_eq!(a2.polynomial.coefficient(2, 2), 1);
        assert_eq!(a2.next, (4, 3));
    }

    #[test]
    fn hat_polynomials() {
        let e6 = hf_hat_poly(&e6_delta()).unwrap();
        let mut expected = BiPolynomial::zero();
        for (u, t) in [(0, 0), (1, 1), (2, 3), (5, 5), (6, 6)] {
            expected.add_term(1, u, t);
        }
        assert_eq!(e6, expected);
        assert_eq!(at_u_minus_one(&e6), e6_delta());
        let a2 = hf_hat_poly(&p(&[1, -1, 1])).unwrap();
        assert_eq!(a2.to_string(), "1 + qt + q^2t^2");
        assert_eq!(hf_hat_poly(&IntPolynomial::one()).unwrap(), BiPolynomial::one());
    }

    #[test]
    fn comparison_preconditions() {
        assert_eq!(compare_report(&Forest::dynkin('D', 5).unwrap()), Err(Error::Link(0)));
        let two = Forest::path(2).unwrap().disjoint_union(&Forest::path(2).unwrap()).unwrap();
        assert_eq!(compare_report(&two), Err(Error::Disconnected));
        let a4 = compare_report(&Forest::path(4).unwrap()).unwrap();
        assert!(a4.matches());
        assert_eq!(a4.k2, (0..=4).map(|k| (k, k)).collect::<Vec<_>>());
    }
}
