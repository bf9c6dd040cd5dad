//! The invariant suite behind `seifert check`.

use seifert_core::alexander::{self, Method};
use seifert_core::spectral;
use seifert_core::{BiPolynomial, Differential, Forest, IntPolynomial, SeifertComplex};

/// Outcome of one invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn result(name: &'static str, failure: Option<String>) -> CheckResult {
    match failure {
        None => CheckResult { name, passed: true, detail: String::new() },
        Some(detail) => CheckResult { name, passed: false, detail },
    }
}

/// Runs every invariant on `f`; the Euler cross-check is skipped above
/// `euler_limit` vertices.
pub fn run_checks(f: &Forest, euler_limit: usize) -> Vec<CheckResult> {
    let c = SeifertComplex::new(f.clone());
    let v = f.vertex_count();
    let mut out = Vec::new();

    let squares = |which: Differential, step: usize| {
        c.bidegrees().into_iter().find_map(|b| {
            let first = c.differential_matrix(which, b.q, b.e);
            let second = c.differential_matrix(which, b.q + 1, b.e + step);
            (!second.mul(&first).expect("composable").is_zero()).then(|| format!("nonzero at {b}"))
        })
    };
    out.push(result("D^2 = 0", squares(Differential::Resolve, 0)));
    out.push(result("d^2 = 0", squares(Differential::Flip, 1)));
    out.push(result(
        "Dd = dD",
        c.bidegrees().into_iter().find_map(|b| {
            let big = c.differential_matrix(Differential::Resolve, b.q, b.e);
            let small = c.differential_matrix(Differential::Flip, b.q, b.e);
            let lhs = c.differential_matrix(Differential::Flip, b.q + 1, b.e).mul(&big).expect("composable");
            let rhs = c.differential_matrix(Differential::Resolve, b.q + 1, b.e + 1).mul(&small).expect("composable");
            (lhs != rhs).then(|| format!("differ at {b}"))
        }),
    ));
    out.push(result("grading", grading_failure(&c)));
    out.push(result("duality", duality_failure(&c)));

    let det = alexander::alexander_det(f);
    if v <= euler_limit {
        let euler = alexander::alexander_euler(&c);
        out.push(result("euler = det", (euler != det).then(|| format!("euler {euler}, det {det}"))));
    }
    out.push(result(
        "alexander methods agree",
        [Method::Matchings, Method::Recursive, Method::Monodromy].into_iter().find_map(|m| {
            let p = m.compute(f);
            (p != det).then(|| format!("{} gives {p}, det gives {det}", m.name()))
        }),
    ));
    out.push(result("leaf additivity", additivity_failure(f, &c)));
    let total = c.dims().total() as u128;
    out.push(result(
        "sum of dims = configurations",
        (total != c.config_count()).then(|| format!("{total} vs {}", c.config_count())),
    ));
    out.push(result("d-cohomology", d_cohomology_failure(f, &c)));

    let limit = spectral::limit_dim(&c) as i64;
    let matching = i64::from(f.perfect_matching().is_some());
    out.push(result(
        "limit = Δ(1) = perfect matching",
        (limit != det.eval(1) || limit != matching)
            .then(|| format!("limit {limit}, Δ(1) {}, perfect matching {matching}", det.eval(1))),
    ));
    out.push(result(
        "K2^2 = 0",
        match spectral::k2_operator(&c) {
            Ok(k2) => (!k2.squares_to_zero()).then(|| "K2 does not square to zero".to_string()),
            Err(e) => Some(e.to_string()),
        },
    ));

    let poincare = c.poincare_polynomial();
    let reversed: Vec<usize> = (0..v).rev().collect();
    let relabeled = f.relabel(&reversed).expect("reversal is a permutation");
    let rc = SeifertComplex::new(relabeled.clone());
    out.push(result(
        "relabel invariance",
        (alexander::alexander_det(&relabeled) != det || rc.poincare_polynomial() != poincare)
            .then(|| "P or Δ changed under vertex reversal".to_string()),
    ));
    let point = Forest::path(1).expect("single vertex");
    let union = f.disjoint_union(&point).expect("room for one more vertex");
    let expected_p = &poincare * &BiPolynomial::diagonal(1);
    let expected_delta = &det * &IntPolynomial::one_minus_t();
    let uc = SeifertComplex::new(union.clone());
    out.push(result(
        "disjoint union",
        (uc.poincare_polynomial() != expected_p || alexander::alexander_det(&union) != expected_delta)
            .then(|| "P or Δ not multiplicative under adding a vertex".to_string()),
    ));
    out
}

fn grading_failure(c: &SeifertComplex) -> Option<String> {
    for b in c.bidegrees() {
        for which in [Differential::Resolve, Differential::Flip] {
            let target = which.target(b);
            let m = c.differential_matrix(which, b.q, b.e);
            if m.rows() != c.dim(target.q, target.e) || m.cols() != c.dim(b.q, b.e) {
                return Some(format!("{which:?} matrix at {b} has the wrong shape"));
            }
            for x in c.enumerate_configs(b.q, b.e).iter().take(64) {
                if let Some(bad) = c.apply(which, x).iter().find(|y| y.bidegree() != target) {
                    return Some(format!("{which:?} sends {b} to {}", bad.bidegree()));
                }
            }
        }
    }
    None
}

fn duality_failure(c: &SeifertComplex) -> Option<String> {
    let v = c.vertex_count();
    for b in c.bidegrees() {
        let (q2, e2) = (v + b.q - 2 * b.e, v - b.e);
        if c.cohomology_dim(b.q, b.e) != c.cohomology_dim(q2, e2) {
            return Some(format!("SH at {b} and ({q2}, {e2}) differ"));
        }
        let configs = c.enumerate_configs(b.q, b.e);
        let source: Vec<usize> =
            configs.iter().map(|x| c.index_of(&x.star(v)).expect("star stays in the complex")).collect();
        let target: Vec<usize> = c
            .enumerate_configs(b.q + 1, b.e)
            .iter()
            .map(|x| c.index_of(&x.star(v)).expect("star stays in the complex"))
            .collect();
        let here = c.differential_matrix(Differential::Resolve, b.q, b.e);
        let there = c.differential_matrix(Differential::Resolve, q2, e2);
        for (j, &sj) in source.iter().enumerate() {
            for (i, &ti) in target.iter().enumerate() {
                if here.get(i, j) != there.get(ti, sj) {
                    return Some(format!("star involution does not commute with D at {b}"));
                }
            }
        }
    }
    None
}

fn additivity_failure(f: &Forest, c: &SeifertComplex) -> Option<String> {
    for leaf in (0..f.vertex_count()).filter(|&v| f.degree(v) == 1) {
        let parent = f.neighbors(leaf)[0];
        let t1 = SeifertComplex::new(f.remove_vertices(&[leaf]));
        let t2 = SeifertComplex::new(f.remove_vertices(&[leaf, parent]));
        for n in 0..=f.vertex_count() {
            for k in 0..=n {
                let mut split = t1.dim(k, n);
                if k > 0 && n > 0 {
                    split += t1.dim(k - 1, n - 1);
                }
                if n > 0 {
                    split += t2.dim(k, n - 1);
                }
                if c.dim(k, n) != split {
                    return Some(format!(
                        "leaf {leaf}: SC at ({k}, {n}) is {} but the split gives {split}",
                        c.dim(k, n)
                    ));
                }
            }
        }
    }
    None
}

/// `d`-cohomology is spanned by the all-red configurations, so its total
/// dimension is the number of perfect matchings.
fn d_cohomology_failure(f: &Forest, c: &SeifertComplex) -> Option<String> {
    let total: usize = c
        .bidegrees()
        .into_iter()
        .map(|b| {
            let out = c.rank(Differential::Flip, b.q, b.e);
            let incoming = if b.q == 0 || b.e == 0 { 0 } else { c.rank(Differential::Flip, b.q - 1, b.e - 1) };
            c.dim(b.q, b.e) - out - incoming
        })
        .sum();
    let expected = usize::from(f.perfect_matching().is_some());
    (total != expected).then(|| format!("total dimension {total}, expected {expected}"))
}
