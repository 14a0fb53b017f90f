//! Combinatorial ground truth: partition enumeration, hook numbers, t-core /
//! regular / colored counts, and the beta(q) defining sum — checked against
//! frozen values and against the generating-function engine.

use num_bigint::BigInt;
use rrq::oracle::{
    beta_coefficients, beta_coefficients_mod, count_colored, count_regular, count_t_cores,
    enumerate_partitions, hook_profile, partition_counts,
};
use rrq::products::expand_e;

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn partition_enumeration_counts() {
    let counts: Vec<usize> = (0..=10).map(|n| enumerate_partitions(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    // each partition is non-increasing and sums to n
    for shape in enumerate_partitions(7) {
        assert_eq!(shape.iter().sum::<usize>(), 7);
        assert!(shape.windows(2).all(|w| w[0] >= w[1]));
    }
}

#[test]
fn hook_profile_example() {
    // shape (3,1): hooks row 1 = 4,2,1; row 2 = 1
    let mut hooks = hook_profile(&[3, 1]);
    hooks.sort_unstable();
    assert_eq!(hooks, vec![1, 1, 2, 4]);
}

#[test]
fn three_core_counts_frozen() {
    let a3: Vec<u64> = (0..=20).map(|n| count_t_cores(n, 3)).collect();
    assert_eq!(
        a3,
        vec![1, 1, 2, 0, 2, 1, 2, 0, 1, 2, 2, 0, 2, 0, 2, 0, 3, 2, 0, 0, 2]
    );
}

#[test]
fn four_core_counts_and_the_shape_5_2_1() {
    let a4: Vec<u64> = (0..=12).map(|n| count_t_cores(n, 4)).collect();
    assert_eq!(a4, vec![1, 1, 2, 3, 1, 3, 3, 3, 4, 4, 2, 2, 7]);
    let cores_of_8: Vec<Vec<usize>> = enumerate_partitions(8)
        .into_iter()
        .filter(|s| hook_profile(s).iter().all(|h| h % 4 != 0))
        .collect();
    assert_eq!(cores_of_8.len(), 4);
    assert!(cores_of_8.contains(&vec![5, 2, 1]));
}

#[test]
fn regular_counts_frozen() {
    let b4: Vec<BigInt> = (0..=12).map(|n| count_regular(n, 4)).collect();
    assert_eq!(b4, ints(&[1, 1, 2, 3, 4, 6, 9, 12, 16, 22, 29, 38, 50]));
}

#[test]
fn colored_counts_frozen() {
    let p1131: Vec<BigInt> = (0..=12).map(|n| count_colored(n, 3, 1, 1)).collect();
    assert_eq!(p1131, ints(&[1, 1, 2, 4, 6, 9, 16, 22, 33, 50, 70, 98, 143]));
    let p1232: Vec<BigInt> = (0..=12).map(|n| count_colored(n, 3, 2, 2)).collect();
    assert_eq!(
        p1232,
        ints(&[1, 2, 5, 12, 24, 46, 90, 160, 282, 490, 821, 1352, 2210])
    );
    let p1333: Vec<BigInt> = (0..=12).map(|n| count_colored(n, 3, 3, 3)).collect();
    assert_eq!(
        p1333,
        ints(&[1, 3, 9, 25, 60, 135, 296, 609, 1215, 2362, 4452, 8199, 14829])
    );
}

#[test]
fn partition_counts_match_e1_inverse() {
    let dp = partition_counts(60);
    let gen = expand_e(1, 60).invert().unwrap();
    assert_eq!(dp.as_slice(), gen.coeffs());
}

#[test]
fn counts_match_generating_functions() {
    // a3 <-> E3^3/E1, b4 <-> E4/E1, a4 <-> E4^4/E1 for n <= 25
    let n = 26;
    let inv_e1 = expand_e(1, n).invert().unwrap();
    let a3 = expand_e(3, n).pow(3).unwrap().mul(&inv_e1);
    let a4 = expand_e(4, n).pow(4).unwrap().mul(&inv_e1);
    let b4 = expand_e(4, n).mul(&inv_e1);
    for i in 0..n {
        assert_eq!(a3.coeff(i).unwrap(), &BigInt::from(count_t_cores(i, 3)));
        assert_eq!(a4.coeff(i).unwrap(), &BigInt::from(count_t_cores(i, 4)));
        assert_eq!(b4.coeff(i).unwrap(), &count_regular(i, 4));
    }
}

#[test]
fn beta_coefficients_frozen() {
    let b = beta_coefficients(20);
    assert_eq!(
        b.coeffs(),
        ints(&[0, 1, 1, 2, 2, 3, 3, 5, 5, 7, 7, 10, 11, 14, 15, 19, 21, 26, 28, 35]).as_slice()
    );
}

#[test]
fn beta_progressions_frozen() {
    let b = beta_coefficients(40);
    let on_3n1: Vec<BigInt> = (0..10).map(|k| b.coeff(3 * k + 1).unwrap().clone()).collect();
    assert_eq!(on_3n1, ints(&[1, 2, 5, 7, 14, 21, 35, 50, 77, 110]));
    let on_9n5: Vec<BigInt> = (0..4).map(|k| b.coeff(9 * k + 5).unwrap().clone()).collect();
    assert_eq!(on_9n5, ints(&[3, 15, 60, 177]));
}

#[test]
fn beta_mod_kernel_matches_exact() {
    for m in [5u64, 15, 25, 125] {
        let exact = beta_coefficients(500).reduce_mod(m).unwrap();
        let kernel = beta_coefficients_mod(500, m).unwrap();
        assert_eq!(kernel.to_series().coeffs(), exact.coeffs());
    }
}
