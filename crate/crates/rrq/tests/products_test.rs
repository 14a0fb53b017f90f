//! q-product building blocks: frozen coefficient prefixes, the pentagonal
//! fast path against the naive factor products, eta quotients, psi and the
//! signed-index products, and R(q^k) coherence — with seeded property checks.

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::Config;
use rrq::products::{
    e_sparse_terms, expand_e, expand_e_mod, expand_e_naive, expand_e_negative,
    expand_eta_quotient, expand_pochhammer, expand_r, negate_odd_exponents, psi, psi_neg,
    EtaExponentMap, PochhammerSpec,
};
use rrq::series::{ModSeries, Series, SeriesError};

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn e1_pentagonal_prefix() {
    // 1 - q - q^2 + q^5 + q^7 - q^12 - q^15 + ...
    let e1 = expand_e(1, 16);
    assert_eq!(
        e1.coeffs(),
        ints(&[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1]).as_slice()
    );
}

#[test]
fn inverse_e1_is_partition_function() {
    let p = expand_e(1, 12).invert().unwrap();
    assert_eq!(p.coeffs(), ints(&[1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56]).as_slice());
}

#[test]
fn pentagonal_vs_naive_deep() {
    for n in [1usize, 2, 3, 5] {
        let fast = expand_e(n, 400);
        let naive = expand_e_naive(n, 400);
        assert_eq!(fast.coeffs(), naive.coeffs(), "E_{n} fast vs naive");
    }
}

#[test]
fn e_n_is_inflated_e_1() {
    for n in [2usize, 3, 4, 5, 15] {
        let direct = expand_e(n, 120);
        let inflated = expand_e(1, 120usize.div_ceil(n)).inflate(n).truncate(120);
        assert_eq!(direct.coeffs(), inflated.coeffs(), "E_{n} vs inflate");
    }
}

#[test]
fn e_sparse_terms_match_series() {
    for n in [1usize, 3, 5] {
        let terms = e_sparse_terms(n, 200);
        let series = expand_e(n, 200);
        let mut dense = vec![BigInt::from(0); 200];
        dense[0] = BigInt::from(1);
        for (e, c) in terms {
            assert!(e >= 1);
            dense[e] += BigInt::from(c);
        }
        assert_eq!(dense.as_slice(), series.coeffs());
    }
}

#[test]
fn e_mod_matches_exact_reduction() {
    for m in [5u64, 25, 125] {
        let exact = expand_e(1, 300).reduce_mod(m).unwrap();
        let kernel = expand_e_mod(1, 300, m).unwrap();
        assert_eq!(kernel.to_series().coeffs(), exact.coeffs());
    }
}

#[test]
fn pochhammer_example() {
    // (q; q^2)_inf = E1 / E2
    let lhs = expand_pochhammer(PochhammerSpec::new(1, 2), 60);
    let rhs = expand_e(1, 60).mul(&expand_e(2, 60).invert().unwrap());
    assert_eq!(lhs.coeffs(), rhs.coeffs());
}

#[test]
fn eta_quotient_map_merges_exponents() {
    let map = EtaExponentMap::new(&[(1, -1), (2, 2), (2, -2), (4, 1)]);
    assert_eq!(map.entries().collect::<Vec<_>>(), vec![(1, -1), (4, 1)]);
    let s = expand_eta_quotient(&map, 40).unwrap();
    let direct = expand_e(4, 40).mul(&expand_e(1, 40).invert().unwrap());
    assert_eq!(s.coeffs(), direct.coeffs());
}

#[test]
fn psi_as_eta_quotient() {
    // psi = E2^2 / E1
    let lhs = psi(80);
    let rhs = expand_e(2, 80)
        .pow(2)
        .unwrap()
        .mul(&expand_e(1, 80).invert().unwrap());
    assert_eq!(lhs.coeffs(), rhs.coeffs());
}

#[test]
fn psi_neg_flips_odd_exponents() {
    let p = psi(20);
    let pn = psi_neg(20);
    for i in 0..20 {
        let expect = if i % 2 == 1 {
            -p.coeff(i).unwrap()
        } else {
            p.coeff(i).unwrap().clone()
        };
        assert_eq!(pn.coeff(i).unwrap(), &expect);
    }
    assert_eq!(negate_odd_exponents(&pn).coeffs(), p.coeffs());
}

#[test]
fn negative_pochhammer_identities() {
    // (-q; -q)_inf = E2^3 / (E1 E4)
    let lhs = expand_e_negative(1, 100).unwrap();
    let rhs = expand_e(2, 100)
        .pow(3)
        .unwrap()
        .mul(&expand_e(1, 100).invert().unwrap())
        .mul(&expand_e(4, 100).invert().unwrap());
    assert_eq!(lhs.coeffs(), rhs.coeffs());
    assert!(matches!(
        expand_e_negative(2, 10),
        Err(SeriesError::EvenNegativeIndex(2))
    ));
}

#[test]
fn r_prefix_and_inflation() {
    let r = expand_r(1, 14);
    assert_eq!(
        r.coeffs(),
        ints(&[1, 1, 0, -1, 0, 1, 1, -1, -2, 0, 2, 2, -1, -3]).as_slice()
    );
    let r3 = expand_r(3, 120);
    let expect = expand_r(1, 40).inflate(3).truncate(120);
    assert_eq!(r3.coeffs(), expect.coeffs());
}

#[test]
fn r_satisfies_defining_product() {
    // R(q) * (q;q^5)(q^4;q^5) = (q^2;q^5)(q^3;q^5)
    let n = 100;
    let lhs = expand_r(1, n)
        .mul(&expand_pochhammer(PochhammerSpec::new(1, 5), n))
        .mul(&expand_pochhammer(PochhammerSpec::new(4, 5), n));
    let rhs = expand_pochhammer(PochhammerSpec::new(2, 5), n)
        .mul(&expand_pochhammer(PochhammerSpec::new(3, 5), n));
    assert_eq!(lhs.coeffs(), rhs.coeffs());
}

proptest! {
    #![proptest_config(Config {
        cases: 32,
        rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha,
        rng_seed: proptest::test_runner::RngSeed::Fixed(0x5eed_0002),
        .. Config::default()
    })]

    #[test]
    fn pentagonal_vs_naive_random(n in 1usize..8, order in 1usize..200) {
        prop_assert_eq!(
            expand_e(n, order).coeffs().to_vec(),
            expand_e_naive(n, order).coeffs().to_vec()
        );
    }

    #[test]
    fn inflate_coherence(n in 1usize..6, k in 1usize..5, order in 2usize..120) {
        let direct = expand_e(n * k, order);
        let via_inflate = expand_e(n, order.div_ceil(k)).inflate(k).truncate(order);
        prop_assert_eq!(direct.coeffs().to_vec(), via_inflate.coeffs().to_vec());
    }

    #[test]
    fn sparse_unit_ops_equal_dense_mod(order in 8usize..160, m in prop::sample::select(vec![5u64, 15, 25, 125])) {
        let terms = e_sparse_terms(1, order);
        let e1 = expand_e_mod(1, order, m).unwrap();
        let a = ModSeries::from_series(
            &Series::from_coeffs((0..order as i64).map(|i| BigInt::from(3 * i - 7)).collect()),
            m,
        ).unwrap();
        prop_assert!(a.mul_sparse_unit(&terms).sub(&a.mul(&e1)).is_zero());
        prop_assert!(a.div_sparse_unit(&terms).mul(&e1).sub(&a).is_zero());
    }
}
