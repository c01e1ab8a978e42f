//! Registry-wide properties of the verifier.

use dilogint::identities::{chain_check, registry, Verifier, DEFAULT_SEED};
use dilogint::make_context;

#[test]
fn agreement_scales_with_precision() {
    let low = make_context(50).unwrap();
    let high = make_context(100).unwrap();
    let a = Verifier::new(&low).verify_all();
    let b = Verifier::new(&high).verify_all();
    assert_eq!(a.len(), registry().len());
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.id, y.id);
        assert!(x.passed && y.passed, "{}", x.id);
        assert!(y.agree_digits - x.agree_digits >= 45, "{}: {} -> {}", x.id, x.agree_digits, y.agree_digits);
    }
}

#[test]
fn eq2_sides_match_reference_individually() {
    let ctx = make_context(40).unwrap();
    let r = Verifier::new(&ctx).verify("eq2").unwrap();
    assert!(r.lhs_value.to_fixed(40).starts_with("1.151925470544491"));
    assert!(r.rhs_value.to_fixed(40).starts_with("1.151925470544491"));
}

#[test]
fn six_term_relation_follows_from_its_parts() {
    for digits in [30, 120] {
        let ctx = make_context(digits).unwrap();
        let chain = chain_check(&ctx).unwrap();
        assert!(chain.holds(), "{digits} digits: {chain:?}");
    }
}

#[test]
fn sampled_checks_pass_for_other_seeds() {
    let ctx = make_context(30).unwrap();
    for seed in [1, 2, DEFAULT_SEED + 1] {
        let v = Verifier::new(&ctx).seed(seed);
        for id in ["lemma1a", "lemma1b", "lemma1c", "lemma2", "lemma3a", "lemma3b"] {
            let r = v.verify(id).unwrap();
            assert!(r.passed, "{id} with seed {seed}: {}", r.agree_digits);
            assert_eq!(r.seed, Some(seed));
        }
    }
}

#[test]
fn raising_the_threshold_past_precision_fails() {
    let ctx = make_context(30).unwrap();
    let r = Verifier::new(&ctx).threshold(200).verify("eq5").unwrap();
    assert!(!r.passed);
}
