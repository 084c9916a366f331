//! Exhaustive structural checks of the ring layer at desk scale.

use geh_core::poly::{lift_primitive, BinaryPolynomial};
use geh_core::ring::{RingElement, RingParams};
use proptest::prelude::*;

fn all_elements(params: &RingParams) -> Vec<RingElement> {
    (0..params.size()).map(|i| params.element_from_index(i)).collect()
}

#[test]
fn ring_axioms_gr8_3() {
    let r = RingParams::new(3, 3).unwrap();
    let all = all_elements(&r);
    assert_eq!(all.len(), 512);

    // additive group exact on all pairs
    for a in &all {
        assert!(r.add(a, &r.neg(a)).is_zero());
        for b in &all {
            assert_eq!(r.add(a, b), r.add(b, a));
        }
    }

    // associativity, commutativity, distributivity on a fixed 32-element sample
    let sample: Vec<_> = all.iter().step_by(16).cloned().collect();
    assert_eq!(sample.len(), 32);
    for a in &sample {
        for b in &sample {
            assert_eq!(r.mul(a, b), r.mul(b, a));
            for c in &sample {
                assert_eq!(r.add(&r.add(a, b), c), r.add(a, &r.add(b, c)));
                assert_eq!(r.mul(&r.mul(a, b), c), r.mul(a, &r.mul(b, c)));
                assert_eq!(
                    r.mul(a, &r.add(b, c)),
                    r.add(&r.mul(a, b), &r.mul(a, c))
                );
            }
        }
    }
}

#[test]
fn generator_order_across_params() {
    for n in 1..=4 {
        for m in 2..=6 {
            // construction itself validates xi^N = 1 and minimality
            let r = RingParams::new(n, m).unwrap();
            let xi = r.xi();
            assert_eq!(r.pow(&xi, r.order()), r.one(), "n={n} m={m}");
            let mut cur = r.one();
            for j in 1..r.order() {
                cur = r.mul(&cur, &xi);
                assert_ne!(cur, r.one(), "xi^{j} = 1 early at n={n} m={m}");
            }
        }
    }
}

#[test]
fn frobenius_is_a_ring_automorphism_gr8_3() {
    let r = RingParams::new(3, 3).unwrap();
    let all = all_elements(&r);
    let index = |e: &RingElement| -> usize {
        e.coeffs()
            .iter()
            .rev()
            .fold(0usize, |acc, &c| acc * 8 + c as usize)
    };
    let fro: Vec<RingElement> = all.iter().map(|e| r.frobenius(e)).collect();
    for a in &all {
        for b in &all {
            let sum = r.add(a, b);
            assert_eq!(fro[index(&sum)], r.add(&fro[index(a)], &fro[index(b)]));
            let prod = r.mul(a, b);
            assert_eq!(fro[index(&prod)], r.mul(&fro[index(a)], &fro[index(b)]));
        }
    }
}

#[test]
fn frobenius_iterated_m_times_is_identity() {
    for (n, m) in [(3u32, 3u32), (2, 4)] {
        let r = RingParams::new(n, m).unwrap();
        for e in all_elements(&r) {
            let mut cur = e.clone();
            for _ in 0..m {
                cur = r.frobenius(&cur);
            }
            assert_eq!(cur, e, "n={n} m={m}");
        }
    }
}

#[test]
fn two_adic_roundtrip_exhaustive() {
    // GR(8,3), GR(4,4), and the larger GR(16,4)
    for (n, m) in [(3u32, 3u32), (2, 4), (4, 4)] {
        let r = RingParams::new(n, m).unwrap();
        let teich = r.teichmuller_set();
        for e in all_elements(&r) {
            let digits = r.two_adic_decompose(&e);
            assert_eq!(digits.digits().len(), n as usize);
            for d in digits.digits() {
                assert!(teich.contains(d), "digit outside the Teichmuller set");
            }
            assert_eq!(r.recompose(&digits), e, "n={n} m={m}");
        }
    }
}

#[test]
fn tau_properties_gr8_3() {
    let r = RingParams::new(3, 3).unwrap();
    let teich = r.teichmuller_set();
    for e in all_elements(&r) {
        let t = r.tau(&e);
        assert!(teich.contains(&t));
        assert_eq!(r.tau(&t), t, "tau is idempotent");
        assert_eq!(r.eta(&t), r.eta(&e), "tau preserves the residue image");
    }
}

#[test]
fn eta_equals_iterated_mu_gr8_3() {
    let r = RingParams::new(3, 3).unwrap();
    let lower = r.lower().unwrap();
    for e in all_elements(&r) {
        let via_mu = lower.mu(&r.mu(&e).unwrap()).unwrap();
        assert_eq!(via_mu, r.eta(&e));
    }
}

#[test]
fn unit_inversion_gr8_3() {
    let r = RingParams::new(3, 3).unwrap();
    let mut units = 0;
    for e in all_elements(&r) {
        if r.is_unit(&e) {
            units += 1;
            let inv = r.invert(&e).unwrap();
            assert_eq!(r.mul(&e, &inv), r.one());
        } else {
            assert!(r.eta(&e).is_zero(), "non-units are exactly the radical");
            assert!(r.invert(&e).is_err());
        }
    }
    assert_eq!(units, 448);
}

#[test]
fn lift_tower_compatibility_matches_lower_lifts() {
    for m in [3u32, 4, 5] {
        let h2 = BinaryPolynomial::default_for(m).unwrap();
        for n in 2..=4 {
            let hi = lift_primitive(&h2, n).unwrap();
            let lo = lift_primitive(&h2, n - 1).unwrap();
            assert_eq!(hi.reduce_to(n - 1).unwrap(), lo);
        }
    }
}

proptest! {
    #[test]
    fn roundtrip_random_gr16_4(coeffs in prop::collection::vec(0u64..16, 4)) {
        let r = RingParams::new(4, 4).unwrap();
        let e = r.element(coeffs).unwrap();
        let digits = r.two_adic_decompose(&e);
        prop_assert_eq!(r.recompose(&digits), e);
    }

    #[test]
    fn frobenius_multiplicative_random_gr16_4(
        a in prop::collection::vec(0u64..16, 4),
        b in prop::collection::vec(0u64..16, 4),
    ) {
        let r = RingParams::new(4, 4).unwrap();
        let a = r.element(a).unwrap();
        let b = r.element(b).unwrap();
        prop_assert_eq!(
            r.frobenius(&r.mul(&a, &b)),
            r.mul(&r.frobenius(&a), &r.frobenius(&b))
        );
    }

    #[test]
    fn mu_commutes_with_addition_random(
        a in prop::collection::vec(0u64..8, 3),
        b in prop::collection::vec(0u64..8, 3),
    ) {
        let r = RingParams::new(3, 3).unwrap();
        let lower = r.lower().unwrap();
        let a = r.element(a).unwrap();
        let b = r.element(b).unwrap();
        prop_assert_eq!(
            r.mu(&r.add(&a, &b)).unwrap(),
            lower.add(&r.mu(&a).unwrap(), &r.mu(&b).unwrap())
        );
    }
}
