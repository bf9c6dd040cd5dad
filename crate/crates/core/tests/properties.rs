use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use seifert_core::alexander::{self, Method};
use seifert_core::spectral;
use seifert_core::{BitVec, Differential, Forest, Gf2Matrix, SeifertComplex, Subspace};

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Gf2Matrix> {
    proptest::collection::vec(any::<bool>(), rows * cols).prop_map(move |bits| {
        let mut m = Gf2Matrix::zeros(rows, cols);
        for (k, b) in bits.into_iter().enumerate() {
            m.set(k / cols, k % cols, b);
        }
        m
    })
}

fn sized_matrix() -> impl Strategy<Value = Gf2Matrix> {
    (0usize..20, 0usize..80).prop_flat_map(|(r, c)| matrix(r, c))
}

fn bits(len: usize) -> impl Strategy<Value = BitVec> {
    proptest::collection::vec(any::<bool>(), len)
        .prop_map(move |b| BitVec::from_indices(len, b.iter().enumerate().filter(|(_, x)| **x).map(|(i, _)| i)))
}

fn forest(max: usize) -> impl Strategy<Value = Forest> {
    (1..=max, any::<u64>(), 0.6f64..=1.0)
        .prop_map(|(n, seed, keep)| Forest::random_forest(n, keep, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap())
}

proptest! {
    #[test]
    fn rank_is_transpose_invariant(m in sized_matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_nullity(m in sized_matrix()) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(kernel.dim() + m.rank(), m.cols());
        for k in kernel.basis_vectors() {
            prop_assert!(m.mul_vec(&k).unwrap().is_zero());
        }
    }

    #[test]
    fn solve_finds_preimages((m, x) in sized_matrix().prop_flat_map(|m| { let c = m.cols(); (Just(m), bits(c)) })) {
        let b = m.mul_vec(&x).unwrap();
        let y = m.solve(&b).unwrap().expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y).unwrap(), b);
    }

    #[test]
    fn coset_representative_is_a_class_function(
        (m, v, w) in (1usize..10, 1usize..70).prop_flat_map(|(r, c)| (matrix(r, c), bits(c), bits(r)))
    ) {
        let s = Subspace::from_spanning_matrix(&m);
        let mut shifted = v.clone();
        shifted.xor_assign(&m.transpose().mul_vec(&w).unwrap());
        let rep = s.canonical_coset_rep(&v).unwrap();
        prop_assert_eq!(&rep, &s.canonical_coset_rep(&shifted).unwrap());
        for &p in s.pivots() {
            prop_assert!(!rep.get(p));
        }
    }

    #[test]
    fn intersection_dimension((a, b) in (1usize..8, 1usize..8, 1usize..40).prop_flat_map(|(r1, r2, c)| (matrix(r1, c), matrix(r2, c)))) {
        let (a, b) = (Subspace::from_spanning_matrix(&a), Subspace::from_spanning_matrix(&b));
        let meet = a.intersect(&b).unwrap();
        prop_assert_eq!(a.dim() + b.dim(), a.sum(&b).unwrap().dim() + meet.dim());
        prop_assert!(meet.is_subspace_of(&a).unwrap() && meet.is_subspace_of(&b).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn differentials_square_to_zero_and_commute(f in forest(9)) {
        let c = SeifertComplex::new(f);
        for b in c.bidegrees() {
            let (q, e) = (b.q, b.e);
            let big = c.differential_matrix(Differential::Resolve, q, e);
            let small = c.differential_matrix(Differential::Flip, q, e);
            prop_assert!(c.differential_matrix(Differential::Resolve, q + 1, e).mul(&big).unwrap().is_zero());
            prop_assert!(c.differential_matrix(Differential::Flip, q + 1, e + 1).mul(&small).unwrap().is_zero());
            let d_big = c.differential_matrix(Differential::Flip, q + 1, e).mul(&big).unwrap();
            let big_d = c.differential_matrix(Differential::Resolve, q + 1, e + 1).mul(&small).unwrap();
            prop_assert_eq!(d_big, big_d);
        }
    }

    #[test]
    fn star_involution_is_a_chain_isomorphism(f in forest(9)) {
        let c = SeifertComplex::new(f);
        let v = c.vertex_count();
        for b in c.bidegrees() {
            let image = |q: usize, e: usize| -> Vec<usize> {
                c.enumerate_configs(q, e).iter().map(|x| c.index_of(&x.star(v)).unwrap()).collect()
            };
            let (q, e) = (b.q, b.e);
            let (q2, e2) = (v + q - 2 * e, v - e);
            prop_assert_eq!(c.dim(q, e), c.dim(q2, e2));
            let source = image(q, e);
            let target = image(q + 1, e);
            let here = c.differential_matrix(Differential::Resolve, q, e);
            let there = c.differential_matrix(Differential::Resolve, q2, e2);
            for (j, &sj) in source.iter().enumerate() {
                for (i, &ti) in target.iter().enumerate() {
                    prop_assert_eq!(here.get(i, j), there.get(ti, sj));
                }
            }
            prop_assert_eq!(c.cohomology_dim(q, e), c.cohomology_dim(q2, e2));
        }
    }

    #[test]
    fn alexander_methods_agree(f in forest(10)) {
        let det = alexander::alexander_det(&f);
        for m in Method::ALL {
            prop_assert_eq!(&m.compute(&f), &det, "{}", m.name());
        }
        prop_assert_eq!(det.eval(1), i64::from(f.perfect_matching().is_some()));
    }

    #[test]
    fn additivity_at_leaves(f in forest(10)) {
        let c = SeifertComplex::new(f.clone());
        for leaf in (0..f.vertex_count()).filter(|&v| f.degree(v) == 1) {
            let parent = f.neighbors(leaf)[0];
            let t1 = SeifertComplex::new(f.remove_vertices(&[leaf]));
            let t2 = SeifertComplex::new(f.remove_vertices(&[leaf, parent]));
            for n in 0..=f.vertex_count() {
                for k in 0..=n {
                    let lower = |c: &SeifertComplex, k: usize, n: usize| if k == 0 || n == 0 { 0 } else { c.dim(k - 1, n - 1) };
                    let split = t1.dim(k, n) + lower(&t1, k, n) + if n == 0 { 0 } else { t2.dim(k, n - 1) };
                    prop_assert_eq!(c.dim(k, n), split);
                }
            }
        }
    }

    #[test]
    fn disjoint_union_multiplies(f in forest(6), g in forest(5)) {
        let u = f.disjoint_union(&g).unwrap();
        let pf = SeifertComplex::new(f.clone()).poincare_polynomial();
        let pg = SeifertComplex::new(g.clone()).poincare_polynomial();
        prop_assert_eq!(SeifertComplex::new(u.clone()).poincare_polynomial(), &pf * &pg);
        prop_assert_eq!(alexander::alexander_det(&u), &alexander::alexander_det(&f) * &alexander::alexander_det(&g));
    }

    #[test]
    fn relabeling_changes_nothing(f in forest(9), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = (0..f.vertex_count()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let g = f.relabel(&perm).unwrap();
        prop_assert_eq!(alexander::alexander_det(&g), alexander::alexander_det(&f));
        prop_assert_eq!(
            SeifertComplex::new(g).poincare_polynomial(),
            SeifertComplex::new(f).poincare_polynomial()
        );
    }

    #[test]
    fn spectral_sequence_converges_to_delta_at_one(f in forest(8)) {
        let c = SeifertComplex::new(f.clone());
        let pages = spectral::pages(&c, f.vertex_count() + 1).unwrap();
        prop_assert_eq!(&pages[0].dims, &c.cohomology_dims());
        for w in pages.windows(2) {
            prop_assert!(w[1].dims.le(&w[0].dims));
        }
        let last = &pages.last().unwrap().dims;
        let limit = spectral::limit_dim(&c);
        prop_assert_eq!(last.total(), limit);
        prop_assert_eq!(limit as i64, alexander::alexander_det(&f).eval(1));
        let signed: i64 = last.entries().iter().map(|(b, d)| if b.q % 2 == 0 { *d as i64 } else { -(*d as i64) }).sum();
        prop_assert_eq!(signed, limit as i64);
    }

    #[test]
    fn k2_squares_to_zero(f in forest(8)) {
        let c = SeifertComplex::new(f);
        prop_assert!(spectral::k2_operator(&c).unwrap().squares_to_zero());
        prop_assert!(spectral::d1_on_sh(&c).squares_to_zero());
    }

    #[test]
    fn matching_counts_match_enumeration(f in forest(14)) {
        let mut counts = vec![0u64; f.vertex_count() / 2 + 1];
        for m in f.matchings() {
            counts[m.len()] += 1;
        }
        prop_assert_eq!(f.matching_size_counts(), counts);
    }

    #[test]
    fn dimensions_sum_to_configuration_count(f in forest(12)) {
        let c = SeifertComplex::new(f);
        prop_assert_eq!(c.dims().total() as u128, c.config_count());
    }
}
