use macdonald_core::qt::{parse_specialization, ratio, xpoly_from_json, xpoly_to_json, CoeffElem, XPoly};
use macdonald_core::verify::random_xpoly;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn poly(seed: u64, n: usize, laurent: bool) -> XPoly {
    random_xpoly(n, 3, laurent, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn coeff(seed: u64) -> CoeffElem {
    // constant part of a one-variable random polynomial, or 1 when empty
    let f = poly(seed, 1, false);
    let c = f.terms().next().map_or_else(CoeffElem::one, |(_, c)| c.clone());
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in any::<u64>(), b in any::<u64>(), c in any::<u64>(), n in 1usize..4) {
        let (f, g, h) = (poly(a, n, true), poly(b, n, true), poly(c, n, true));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &XPoly::one(n), f.clone());
    }

    #[test]
    fn field_axioms(a in any::<u64>(), b in any::<u64>()) {
        let (x, y) = (coeff(a), coeff(b));
        prop_assume!(!y.is_zero());
        let q = x.checked_div(&y).unwrap();
        prop_assert_eq!(&q * &y, x.clone());
        prop_assert!((&y * &y.inv().unwrap()).is_one());
    }

    #[test]
    fn divide_exact_recovers_factor(a in any::<u64>(), b in any::<u64>(), n in 1usize..4, laurent in any::<bool>()) {
        let (f, g) = (poly(a, n, laurent), poly(b, n, laurent));
        prop_assume!(!g.is_zero());
        let fg = &f * &g;
        if fg.is_polynomial() && g.is_polynomial() && !f.is_polynomial() {
            // polynomial operands ask for a polynomial quotient
            prop_assert!(fg.divide_exact(&g).is_err());
        } else {
            prop_assert_eq!(fg.divide_exact(&g).unwrap(), f);
        }
    }

    #[test]
    fn specialization_is_a_ring_map(a in any::<u64>(), b in any::<u64>(), n in 1usize..4) {
        let (f, g) = (poly(a, n, true), poly(b, n, true));
        let (uq, ut) = (CoeffElem::from_rat(ratio(2, 1)), CoeffElem::from_rat(ratio(3, 2)));
        let s = |p: &XPoly| p.specialize(Some(&uq), Some(&ut)).unwrap();
        prop_assert_eq!(s(&(&f * &g)), &s(&f) * &s(&g));
        prop_assert_eq!(s(&(&f + &g)), &s(&f) + &s(&g));
    }

    #[test]
    fn permutation_action_composes(a in any::<u64>(), n in 2usize..5) {
        let f = poly(a, n, true);
        for i in 1..n {
            prop_assert_eq!(f.swap(i - 1).swap(i - 1), f.clone());
        }
        let cyc: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let mut g = f.clone();
        for _ in 0..n {
            g = g.permute(&cyc);
        }
        prop_assert_eq!(g, f);
    }

    #[test]
    fn json_round_trip(a in any::<u64>(), n in 1usize..5, laurent in any::<bool>()) {
        let f = poly(a, n, laurent);
        let s = xpoly_to_json(&f);
        let g = xpoly_from_json(&s).unwrap();
        prop_assert_eq!(xpoly_to_json(&g), s);
        prop_assert_eq!(g, f);
    }
}

#[test]
fn specialization_grammar() {
    let (uq, ut) = parse_specialization("q=t").unwrap();
    assert_eq!((uq, ut), (Some(CoeffElem::ut()), None));
    let (uq, ut) = parse_specialization("q=0, t=1/4").unwrap();
    assert_eq!(uq, Some(CoeffElem::zero()));
    assert_eq!(ut, Some(CoeffElem::from_rat(ratio(1, 2))));
    assert!(parse_specialization("t=2").is_err());
    assert!(parse_specialization("q").is_err());
}

#[test]
fn inexact_division_is_reported() {
    let x1 = XPoly::var(2, 0);
    let x2 = XPoly::var(2, 1);
    assert!(x1.divide_exact(&x2).is_err());
    assert!(x1.divide_exact(&XPoly::zero(2)).is_err());
}

#[test]
fn monomial_divisor_respects_polynomial_ring() {
    let x = XPoly::var(1, 0);
    let x2 = &x * &x;
    let f = &XPoly::one(1) + &x2;
    assert!(f.divide_exact(&x2).is_err());
    let g = &x2 * &x;
    assert_eq!(g.divide_exact(&x2).unwrap(), x);
}
