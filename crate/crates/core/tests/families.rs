//! Closed forms for the standard families, checked against the full
//! computation.

use seifert_core::alexander::{self, Method};
use seifert_core::spectral::{self, d2_zigzag, zero_level_class};
use seifert_core::{BiPolynomial, Bidegree, BigradedTable, Forest, IntPolynomial, SeifertComplex};

fn poincare(f: Forest) -> BiPolynomial {
    SeifertComplex::new(f).poincare_polynomial()
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `q t²` times `p`.
fn shifted(p: &BiPolynomial) -> BiPolynomial {
    p.shift(1, 2)
}

#[test]
fn paths_are_diagonal() {
    for n in 1..=10 {
        assert_eq!(poincare(Forest::path(n).unwrap()), BiPolynomial::diagonal(n as u32), "A_{n}");
    }
}

#[test]
fn d_series() {
    for n in 4..=10 {
        let expected = &BiPolynomial::diagonal(n) + &shifted(&BiPolynomial::diagonal(n - 4));
        assert_eq!(poincare(Forest::dynkin('D', n as usize).unwrap()), expected, "D_{n}");
    }
}

#[test]
fn e_series() {
    for n in 6..=8u32 {
        let one_plus_qt = &BiPolynomial::one() + &BiPolynomial::monomial(1, 1, 1);
        let extra = shifted(&(&one_plus_qt * &BiPolynomial::diagonal(n - 5)));
        let expected = &BiPolynomial::diagonal(n) + &extra;
        assert_eq!(poincare(Forest::dynkin('E', n as usize).unwrap()), expected, "E_{n}");
    }
}

#[test]
fn stars() {
    for n in 4..=10i64 {
        let mut expected = BiPolynomial::diagonal(n as u32);
        for e in 2..=n - 2 {
            let first_level = (n - 1) * binomial(n - 2, e - 1) - binomial(n, e) + 1;
            expected.add_term(first_level, (e - 1) as u32, e as u32);
        }
        assert_eq!(poincare(Forest::star(n as usize).unwrap()), expected, "S_{n}");
    }
}

#[test]
fn alexander_of_d_series() {
    for n in 4..=10usize {
        let sign = |k: usize| if k.is_multiple_of(2) { 1 } else { -1 };
        let mut c = vec![0i64; n + 1];
        c[0] = 1;
        c[1] = -1;
        c[n - 1] += sign(n - 1);
        c[n] += sign(n);
        let expected = IntPolynomial::new(c);
        let f = Forest::dynkin('D', n).unwrap();
        for m in Method::ALL {
            assert_eq!(m.compute(&f), expected, "D_{n} via {}", m.name());
        }
    }
}

#[test]
fn spectral_examples() {
    let d4 = SeifertComplex::new(Forest::dynkin('D', 4).unwrap());
    let e2: BigradedTable = [((0, 0), 1), ((1, 2), 1)].into_iter().collect();
    assert_eq!(spectral::page_dims(&d4, 2).unwrap().dims, e2);
    assert!(spectral::page_dims(&d4, 3).unwrap().dims.is_empty());

    let turbine = d4.chain(Bidegree::new(1, 2), &d4.enumerate_configs(1, 2)).unwrap();
    let zz = d2_zigzag(&d4, &zero_level_class(&d4, 0).unwrap()).unwrap();
    assert!(d4.cohomologous(&zz.representative, &turbine).unwrap());

    assert_eq!(spectral::limit_dim(&SeifertComplex::new(Forest::path(2).unwrap())), 1);
    assert_eq!(spectral::limit_dim(&SeifertComplex::new(Forest::path(3).unwrap())), 0);
    assert_eq!(spectral::limit_dim(&SeifertComplex::new(Forest::dynkin('E', 8).unwrap())), 1);
}

#[test]
fn alexander_matches_matching_count_at_one() {
    for f in [Forest::dynkin('E', 7).unwrap(), Forest::star(6).unwrap(), Forest::path(9).unwrap()] {
        let delta = alexander::alexander_det(&f);
        assert_eq!(delta.eval(1), i64::from(f.perfect_matching().is_some()));
        assert_eq!(delta.coefficient(0), 1);
    }
}
