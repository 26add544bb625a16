//! Cross-route integrity of the counting engine: the factored character-sum
//! path against the literal triple loop, and the per-prime sum identities
//! that tie the three traces to their character sums.

use std::collections::BTreeMap;

use kummer7_core::curves::EllipticCurve;
use kummer7_core::fibration;
use kummer7_core::finitefield::{primes_in_range, PrimeField};
use kummer7_core::kummer::{self, CountMethod};

fn curve() -> EllipticCurve {
    EllipticCurve::parse("0,1,-1").unwrap()
}

fn good_primes(hi: u64) -> Vec<u64> {
    primes_in_range(5, hi).into_iter().filter(|&p| p != 7).collect()
}

fn field(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap().build_legendre_table().unwrap()
}

#[test]
fn naive_equals_factored_exhaustively_below_31() {
    let e = curve();
    for p in good_primes(31) {
        let f = field(p);
        assert_eq!(
            kummer::count_x_prime_naive(&f, &e).unwrap(),
            kummer::count_x_prime_factored(&f, &e).unwrap(),
            "p={p}"
        );
    }
}

#[test]
fn character_sums_recover_the_traces() {
    // S_1 = a_p + 1 and S_2 = -c_p, per prime, as exact integers
    let e = curve();
    for p in good_primes(97) {
        let f = field(p);
        let s1 = fibration::p1_character_sum(&f);
        let s2 = e.char_sum(&f).unwrap();
        let surface = fibration::count_surface(&f).unwrap();
        let trace = e.count_points(&f).unwrap();
        assert_eq!(s1, surface.a_p + 1, "p={p}");
        assert_eq!(s2, -trace.c_p, "p={p}");
        assert!(trace.satisfies_hasse_bound(), "p={p}");
        assert!(surface.a_p.unsigned_abs() <= 20 * p, "p={p}");
    }
}

#[test]
fn full_sweep_matches_through_97() {
    let outcome = kummer::verify_range(
        &curve(),
        5,
        97,
        CountMethod::Factored,
        &BTreeMap::new(),
    )
    .unwrap();
    let expected: Vec<u64> = good_primes(97);
    let got: Vec<u64> = outcome.records.iter().map(|r| r.p).collect();
    assert_eq!(got, expected);
    for r in &outcome.records {
        assert!(r.n_match, "n_p mismatch at p={}", r.p);
        assert!(r.a_match, "a_p mismatch at p={}", r.p);
        assert_eq!(r.n_counted, r.terms.total(), "p={}", r.p);
    }
    assert_eq!(outcome.skipped.len(), 1);
    assert_eq!(outcome.skipped[0].p, 7);
}

#[test]
fn naive_method_carries_through_the_full_pipeline() {
    let outcome = kummer::verify_range(
        &curve(),
        5,
        13,
        CountMethod::Naive,
        &BTreeMap::new(),
    )
    .unwrap();
    assert_eq!(outcome.mismatches(), 0);
    assert_eq!(outcome.records.len(), 3);
}

#[test]
fn sweep_skips_bad_reduction_primes_of_the_curve() {
    // roots 0, 1, 6 collide mod 5
    let e = EllipticCurve::parse("0,1,6").unwrap();
    let outcome =
        kummer::verify_range(&e, 5, 13, CountMethod::Factored, &BTreeMap::new()).unwrap();
    let skipped: Vec<u64> = outcome.skipped.iter().map(|b| b.p).collect();
    assert_eq!(skipped, vec![5, 7]);
    assert_eq!(outcome.mismatches(), 0);
    let got: Vec<u64> = outcome.records.iter().map(|r| r.p).collect();
    assert_eq!(got, vec![11, 13]);
}
