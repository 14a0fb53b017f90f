//! Acceptance gate: twelve criteria, each a test that prints a single
//! pass/fail line. Every comparison is an exact integer comparison —
//! tolerance is zero throughout.

use num_bigint::BigInt;
use num_traits::Zero;
use rrq::expr::{eval_exact, parse};
use rrq::oracle::{
    beta_coefficients_mod, count_colored, count_regular, count_t_cores, enumerate_partitions,
    hook_profile,
};
use rrq::products::{expand_e, expand_e_naive};
use rrq::registry::{
    self, build_c, build_d, check_claim, claim_by_id, evaluate, scan_family, verify,
};
use rrq::series::Series;

fn report(criterion: usize, pass: bool, detail: &str) {
    println!(
        "criterion {criterion:2}: {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

fn verified(id: &str, depth: usize) -> bool {
    match verify(id, Some(depth)) {
        Ok(rep) => rep.pass,
        Err(e) => panic!("{id}: {e}"),
    }
}

#[test]
fn criterion_01_lemma_suite_to_500() {
    let ids = [
        "L-2.1-E1",
        "L-2.1-1byE1",
        "L-2.2-A",
        "L-2.2-B",
        "L-2.3-C1",
        "L-2.3-C2",
        "L-2.3-C3",
        "L-2.4-D1",
        "STEP-2.13",
        "L-2.4-psi",
        "STEP-2.15",
        "STEP-2.16-n1",
        "STEP-2.16-n5",
        "STEP-2.17",
        "L-2.5-F",
    ];
    let failed: Vec<&str> = ids.iter().filter(|id| !verified(id, 500)).copied().collect();
    report(
        1,
        failed.is_empty(),
        &format!("{} lemma records to N=500 ({failed:?})", ids.len()),
    );
}

#[test]
fn criterion_02_derived_suite_both_builds_to_400() {
    let n = 400;
    let mut ok = true;
    // registry records: R-power side vs closed-form side
    for id in [
        "DER-C4", "DER-C4-eta", "DER-C5", "DER-C5-eta", "DER-C6", "DER-C6-eta", "DER-C7",
        "DER-C8", "DER-C9", "DER-C10", "DER-D2", "DER-D2-eta", "DER-D3", "DER-D4", "DER-D5",
        "DER-D6", "DER-D7", "DER-D8",
    ] {
        ok &= verified(id, n);
    }
    // the builder ops must agree with the catalogued definitions
    for i in 4..=10usize {
        let built = build_c(i, n);
        let parsed = eval_exact(&parse(registry::c_definition(i)).unwrap(), n).unwrap();
        ok &= built.coeffs() == parsed.coeffs();
    }
    for i in 2..=8usize {
        let built = build_d(i, n);
        let parsed = eval_exact(&parse(registry::d_definition(i)).unwrap(), n).unwrap();
        ok &= built.coeffs() == parsed.coeffs();
    }
    report(2, ok, "derived combinators to N=400, R-power and closed builds");
}

#[test]
fn criterion_03_three_core_dissection_and_vanishing() {
    let mut ok = verified("THM-1.1", 300);
    for id in ["COR-1.2-r0", "COR-1.2-r2", "COR-1.2-r3", "COR-1.2-r4", "COR-1.2-self"] {
        let mut claim = claim_by_id(id).unwrap();
        ok &= check_claim(&mut claim, 200, 50_000).unwrap().pass;
    }
    report(3, ok, "3-core dissection to 300; vanishing and self-similar classes, n<200");
}

#[test]
fn criterion_04_colored_generating_functions_to_300() {
    let mut ok = true;
    for id in ["THM-1.3a", "THM-1.3b", "THM-1.3c"] {
        ok &= verified(id, 300);
    }
    report(4, ok, "one/two/three-colored extractions exact to 300");
}

#[test]
fn criterion_05_one_colored_congruences() {
    let mut a = claim_by_id("COR-1.4a").unwrap();
    let pa = check_claim(&mut a, 400, 50_000).unwrap().pass;
    let mut b = claim_by_id("COR-1.4b").unwrap();
    let pb = check_claim(&mut b, 20, 50_000).unwrap().pass;
    report(5, pa && pb, "25n+21 mod 5 (n<400); 625n+521 mod 25 (n<20)");
}

#[test]
fn criterion_06_two_and_three_colored_congruences() {
    let mut a = claim_by_id("COR-1.6a").unwrap();
    let pa = check_claim(&mut a, 1000, 50_000).unwrap().pass;
    let mut b = claim_by_id("COR-1.6b").unwrap();
    let pb = check_claim(&mut b, 15, 50_000).unwrap().pass;
    let mut c = claim_by_id("COR-1.6-rem").unwrap();
    let pc = check_claim(&mut c, 500, 50_000).unwrap().pass;
    report(
        6,
        pa && pb && pc,
        "5n+2 mod 5 (n<1000); 625n+417 ≡ 25n+17 mod 25 (n<15); 5n+3 mod 5 (n<500)",
    );
}

#[test]
fn criterion_07_beta_congruences_both_routes() {
    // Route 1: beta from its defining sum (the claims machinery).
    let mut ok = true;
    for id in ["THM-1.7a", "THM-1.7b", "THM-1.7c"] {
        let mut claim = claim_by_id(id).unwrap();
        ok &= check_claim(&mut claim, 200, 50_000).unwrap().pass;
    }
    // Route 2: the eta-quotient windows. 15n+7 = 3(5n+2)+1 so it reads off
    // E3^3/E1^2 at 5n+2; 45n+23 = 9(5n+2)+5 and 45n+41 = 9(5n+4)+5 read off
    // 3*E3^6/E1^5 at 5n+2 and 5n+4.
    let k = 200;
    let on_3n1 = eval_exact(&parse("E3^3/E1^2").unwrap(), 5 * k).unwrap();
    let on_9n5 = eval_exact(&parse("3*E3^6/E1^5").unwrap(), 5 * k).unwrap();
    for n in 0..k {
        ok &= (on_3n1.coeff(5 * n + 2).unwrap() % BigInt::from(5)).is_zero();
        ok &= (on_9n5.coeff(5 * n + 2).unwrap() % BigInt::from(15)).is_zero();
        ok &= (on_9n5.coeff(5 * n + 4).unwrap() % BigInt::from(15)).is_zero();
    }
    // the two routes agree on the raw progression values mod their moduli
    let direct = beta_coefficients_mod(45 * (k - 1) + 42, 15).unwrap();
    for n in 0..k {
        ok &= direct.coeff(45 * n + 23).unwrap()
            == (on_9n5.coeff(5 * n + 2).unwrap() % BigInt::from(15))
                .try_into()
                .unwrap_or(0u64);
    }
    report(7, ok, "beta progressions mod 5/15 (n<200), defining sum and eta routes");
}

#[test]
fn criterion_08_regular_and_core_theorems_with_misprint_resolution() {
    let ok8 = verified("THM-1.8", 300);
    let group = verify("THM-1.9", Some(300)).unwrap();
    let passing: Vec<_> = registry::variants_of("THM-1.9")
        .iter()
        .map(|r| evaluate(r, 300).unwrap())
        .filter(|rep| rep.pass)
        .map(|rep| rep.id)
        .collect();
    let resolved = passing == vec!["THM-1.9@corrected".to_string()];
    let named = group
        .note
        .as_deref()
        .is_some_and(|n| n.contains("`THM-1.9@corrected` holds"));
    report(
        8,
        ok8 && group.pass && resolved && named,
        &format!("4-regular/4-core theorems to 300; sole passing variant {passing:?} named in report"),
    );
}

#[test]
fn criterion_09_proof_step_suite_to_200() {
    let ids = [
        "STEP-3coregeneve1",
        "STEP-colgen1eve1",
        "STEP-p1232",
        "STEP-beta-eq",
        "STEP-b",
        "STEP-b4gen",
        "STEP-c",
        "STEP-100",
        "STEP-Doneinseparate1",
        "STEP-Doneinseparate2",
        "STEP-Doneinseparate3",
        "STEP-Doneinseparate4",
        "STEP-Doneinseparate5",
        "STEP-Reach",
        "STEP-Final",
        "STEP-start",
    ];
    let failed: Vec<&str> = ids.iter().filter(|id| !verified(id, 200)).copied().collect();
    report(
        9,
        failed.is_empty(),
        &format!("{} proof-step records to N=200 ({failed:?})", ids.len()),
    );
}

#[test]
fn criterion_10_oracle_equivalence_to_50() {
    let n = 51;
    let mut ok = true;
    let a3 = registry::family_coefficients("a3", n, None).unwrap();
    let a4 = registry::family_coefficients("a4", n, None).unwrap();
    let b4 = registry::family_coefficients("b4", n, None).unwrap();
    let p1 = registry::family_coefficients("p_1131", n, None).unwrap();
    let p2 = registry::family_coefficients("p_1232", n, None).unwrap();
    let p3 = registry::family_coefficients("p_1333", n, None).unwrap();
    for i in 0..n {
        // enumeration-based core counts are exponential; cap them at 30
        if i <= 30 {
            ok &= a3[i] == BigInt::from(count_t_cores(i, 3));
            ok &= a4[i] == BigInt::from(count_t_cores(i, 4));
        }
        ok &= b4[i] == count_regular(i, 4);
        ok &= p1[i] == count_colored(i, 3, 1, 1);
        ok &= p2[i] == count_colored(i, 3, 2, 2);
        ok &= p3[i] == count_colored(i, 3, 3, 3);
    }
    let cores_of_8: Vec<Vec<usize>> = enumerate_partitions(8)
        .into_iter()
        .filter(|s| hook_profile(s).iter().all(|h| h % 4 != 0))
        .collect();
    ok &= cores_of_8.contains(&vec![5, 2, 1]);
    report(10, ok, "counts match coefficients for n<=50; (5,2,1) among the 4-cores of 8");
}

#[test]
fn criterion_11_conjecture_instances_and_scan_rediscovery() {
    let mut ok = true;
    let instances = registry::conjecture_instances(3);
    let k1 = check_claim(&mut instances[0].clone(), 400, 50_000).unwrap();
    let k2 = check_claim(&mut instances[1].clone(), 20, 50_000).unwrap();
    let k3 = check_claim(&mut instances[2].clone(), 3, 50_000).unwrap();
    ok &= k1.pass && k2.pass && k3.pass;
    // k=3 is evidence-grade and labeled as such
    ok &= instances[2].evidence_only;
    ok &= k3.note.as_deref().is_some_and(|n| n.contains("candidate — verified to 3"));
    // scans re-discover the remark progressions as candidates
    let found: Vec<u64> = scan_family("p_beta", 75, Some(25), 20, 50_000)
        .unwrap()
        .iter()
        .map(|c| c.offset)
        .collect();
    for b in [22, 52, 67] {
        ok &= found.contains(&b);
    }
    let found: Vec<u64> = scan_family("p_beta", 1875, Some(125), 3, 50_000)
        .unwrap()
        .iter()
        .map(|c| c.offset)
        .collect();
    for b in [547, 1297, 1672] {
        ok &= found.contains(&b);
    }
    report(
        11,
        ok,
        "k=1,2 pass; k=3 reported as evidence; scans recover 75n+{22,52,67} and 1875n+{547,1297,1672}",
    );
}

#[test]
fn criterion_12_property_checks_fixed_seed() {
    // Deterministic randomized checks (fixed 64-bit LCG seed) of the core
    // algebraic properties; the full seeded proptest suites live beside the
    // series/products modules.
    let mut state = 0x5eed_cafe_f00d_u64;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((state >> 33) as i64 % 41) - 20
    };
    let mut ok = true;
    for _ in 0..20 {
        let order = 24;
        let rand_series = |next: &mut dyn FnMut() -> i64, unit: bool| {
            let mut v: Vec<BigInt> = (0..order).map(|_| BigInt::from(next())).collect();
            if unit {
                v[0] = BigInt::from(1);
            }
            Series::from_coeffs(v)
        };
        let a = rand_series(&mut next, false);
        let b = rand_series(&mut next, false);
        let c = rand_series(&mut next, false);
        // ring axioms
        ok &= a.mul(&b).coeffs() == b.mul(&a).coeffs();
        ok &= a.mul(&b.add(&c)).coeffs() == a.mul(&b).add(&a.mul(&c)).coeffs();
        // invert round-trip
        let u = rand_series(&mut next, true);
        ok &= u.invert().unwrap().invert().unwrap().coeffs() == u.coeffs();
        // dissection reconstruction
        let m = 3;
        let mut rebuilt = vec![BigInt::zero(); order];
        for r in 0..m {
            for (i, co) in a.dissect(m, r).unwrap().coeffs().iter().enumerate() {
                rebuilt[m * i + r] = co.clone();
            }
        }
        ok &= rebuilt.as_slice() == a.coeffs();
    }
    // pentagonal vs naive; inflate coherence
    for n in [1usize, 2, 3, 7] {
        ok &= expand_e(n, 300).coeffs() == expand_e_naive(n, 300).coeffs();
        ok &= expand_e(2 * n, 200).coeffs()
            == expand_e(n, 100).inflate(2).truncate(200).coeffs();
    }
    report(12, ok, "seeded ring/invert/dissection properties; pentagonal and inflate coherence");
}
