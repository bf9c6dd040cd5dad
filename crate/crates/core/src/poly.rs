//! Exact integer polynomials in one and two variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in `t` with `i64` coefficients, stored ascending and trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        IntPolynomial::new(vec![1])
    }

    /// `c · t^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        IntPolynomial::new(coeffs)
    }

    /// `1 − t`.
    pub fn one_minus_t() -> Self {
        IntPolynomial::new(vec![1, -1])
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * t + c)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(IntPolynomial::one(), |acc, _| &acc * self)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coefficient(k) + rhs.coefficient(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn write_monomial(f: &mut fmt::Formatter<'_>, first: bool, c: i64, vars: &[(&str, u32)]) -> fmt::Result {
    let sign = if c < 0 { "-" } else { "+" };
    if first {
        if c < 0 {
            f.write_str("-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    let vars: Vec<String> = vars
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    let abs = c.unsigned_abs();
    if vars.is_empty() {
        write!(f, "{abs}")
    } else if abs == 1 {
        write!(f, "{}", vars.join(""))
    } else {
        write!(f, "{abs}{}", vars.join(""))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
            write_monomial(f, first, c, &[("t", k as u32)])?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// Polynomial in two variables (`(q, t)` or `(u, t)`), finitely supported.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPolynomial {
    terms: BTreeMap<(u32, u32), i64>,
}

impl BiPolynomial {
    pub fn zero() -> Self {
        BiPolynomial::default()
    }

    pub fn one() -> Self {
        BiPolynomial::monomial(1, 0, 0)
    }

    pub fn monomial(c: i64, a: u32, b: u32) -> Self {
        let mut p = BiPolynomial::zero();
        p.add_term(c, a, b);
        p
    }

    /// `Σ_{k=0}^{n} x^k y^k`.
    pub fn diagonal(n: u32) -> Self {
        let mut p = BiPolynomial::zero();
        for k in 0..=n {
            p.add_term(1, k, k);
        }
        p
    }

    pub fn add_term(&mut self, c: i64, a: u32, b: u32) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&(a, b));
        }
    }

    pub fn coefficient(&self, a: u32, b: u32) -> i64 {
        self.terms.get(&(a, b)).copied().unwrap_or(0)
    }

    /// Nonzero terms `((a, b), c)` in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i64)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies by `x^a y^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        BiPolynomial { terms: self.terms.iter().map(|(&(x, y), &c)| ((x + a, y + b), c)).collect() }
    }

    /// Substitutes a value for the first variable, leaving a polynomial in the second.
    pub fn eval_first(&self, x: i64) -> IntPolynomial {
        let mut coeffs = Vec::new();
        for (&(a, b), &c) in &self.terms {
            let b = b as usize;
            if coeffs.len() <= b {
                coeffs.resize(b + 1, 0);
            }
            coeffs[b] += c * x.pow(a);
        }
        IntPolynomial::new(coeffs)
    }

    /// Formats with the given variable names.
    pub fn display_with<'a>(&'a self, x: &'a str, y: &'a str) -> impl fmt::Display + 'a {
        struct D<'a>(&'a BiPolynomial, &'a str, &'a str);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.is_empty() {
                    return f.write_str("0");
                }
                // order by total degree, then by first exponent
                let mut terms: Vec<_> = self.0.terms().collect();
                terms.sort_by_key(|&((a, b), _)| (a + b, b, a));
                for (i, ((a, b), c)) in terms.into_iter().enumerate() {
                    write_monomial(f, i == 0, c, &[(self.1, a), (self.2, b)])?;
                }
                Ok(())
            }
        }
        D(self, x, y)
    }
}

impl Add for &BiPolynomial {
    type Output = BiPolynomial;
    fn add(self, rhs: &BiPolynomial) -> BiPolynomial {
        let mut out = self.clone();
        for ((a, b), c) in rhs.terms() {
            out.add_term(c, a, b);
        }
        out
    }
}

impl Sub for &BiPolynomial {
    type Output = BiPolynomial;
    fn sub(self, rhs: &BiPolynomial) -> BiPolynomial {
        let mut out = self.clone();
        for ((a, b), c) in rhs.terms() {
            out.add_term(-c, a, b);
        }
        out
    }
}

impl Mul for &BiPolynomial {
    type Output = BiPolynomial;
    fn mul(self, rhs: &BiPolynomial) -> BiPolynomial {
        let mut out = BiPolynomial::zero();
        for ((a1, b1), c1) in self.terms() {
            for ((a2, b2), c2) in rhs.terms() {
                out.add_term(c1 * c2, a1 + a2, b1 + b2);
            }
        }
        out
    }
}

impl fmt::Display for BiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("q", "t"))
    }
}

impl fmt::Debug for BiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = IntPolynomial::one_minus_t();
        let sq = &a * &a;
        assert_eq!(sq.coefficients(), &[1, -2, 1]);
        assert_eq!((&sq + &IntPolynomial::monomial(1, 1)).coefficients(), &[1, -1, 1]);
        assert_eq!((&a - &a), IntPolynomial::zero());
        assert_eq!(a.pow(3).eval(2), -1);
        assert_eq!(IntPolynomial::new(vec![0, 0]).degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::new(vec![1, -1, 0, 2]).to_string(), "1 - t + 2t^3");
        assert_eq!(IntPolynomial::new(vec![0, -1]).to_string(), "-t");
        let p = &BiPolynomial::diagonal(2) + &BiPolynomial::monomial(1, 1, 2);
        assert_eq!(p.to_string(), "1 + qt + qt^2 + q^2t^2");
        assert_eq!(BiPolynomial::monomial(1, 2, 3).display_with("u", "t").to_string(), "u^2t^3");
    }

    #[test]
    fn bivariate() {
        let p = BiPolynomial::diagonal(3);
        assert_eq!(p.len(), 4);
        let q = &p * &BiPolynomial::monomial(1, 1, 2);
        assert_eq!(q.coefficient(4, 5), 1);
        assert_eq!(p.eval_first(-1).coefficients(), &[1, -1, 1, -1]);
        assert!((&p - &p).is_empty());
    }
}
