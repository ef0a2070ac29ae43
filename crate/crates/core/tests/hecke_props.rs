use macdonald_core::hecke::{apply_partial, apply_ti, e_poly, hall_littlewood, wcf_p, EMemo};
use macdonald_core::qt::{CoeffElem, XPoly};
use macdonald_core::tableaux::{p_tableaux, schur, Partition};
use macdonald_core::verify::random_xpoly;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn poly(seed: u64, n: usize) -> XPoly {
    random_xpoly(n, 4, false, &mut ChaCha8Rng::seed_from_u64(seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn quadratic_relation(a in any::<u64>(), n in 2usize..5) {
        let f = poly(a, n);
        let u = CoeffElem::ut();
        let c = &u - &u.inv().unwrap();
        for i in 1..n {
            let tf = apply_ti(&f, i).unwrap();
            prop_assert_eq!(apply_ti(&tf, i).unwrap(), &tf.scale(&c) + &f);
        }
    }

    #[test]
    fn braid_relation(a in any::<u64>(), n in 3usize..5) {
        let f = poly(a, n);
        let t = |g: &XPoly, i: usize| apply_ti(g, i).unwrap();
        for i in 1..n - 1 {
            prop_assert_eq!(t(&t(&t(&f, i), i + 1), i), t(&t(&t(&f, i + 1), i), i + 1));
        }
    }

    #[test]
    fn divided_difference_kills_symmetric_part(a in any::<u64>(), n in 2usize..5) {
        let f = poly(a, n);
        for i in 1..n {
            let sym = &f + &f.swap(i - 1);
            prop_assert!(apply_partial(&sym, i).unwrap().is_zero());
            // ∂_i f times (x_i - x_{i+1}) is f - s_i f
            let d = &XPoly::var(n, i - 1) - &XPoly::var(n, i);
            prop_assert_eq!(&apply_partial(&f, i).unwrap() * &d, &f - &f.swap(i - 1));
        }
    }

    #[test]
    fn tableau_sum_is_symmetric(size in 0usize..5, n in 1usize..4, pick in any::<prop::sample::Index>()) {
        let parts = Partition::all(size, n);
        let lam = pick.get(&parts);
        prop_assert!(p_tableaux(lam, n).is_symmetric());
        prop_assert!(schur(lam, n).is_symmetric());
    }
}

#[test]
fn wcf_matches_tableaux_small() {
    let mut memo = EMemo::new();
    for n in 2..=3 {
        for s in 0..=3 {
            for lam in Partition::all(s, n) {
                assert_eq!(wcf_p(&lam, n, &mut memo).unwrap(), p_tableaux(&lam, n), "{lam}, n = {n}");
            }
        }
    }
}

#[test]
fn hall_littlewood_at_t_zero_and_one() {
    let zero = CoeffElem::zero();
    let one = CoeffElem::one();
    for lam in Partition::all(3, 3) {
        let hl = hall_littlewood(&lam, 3).unwrap();
        assert_eq!(hl.specialize(None, Some(&zero)).unwrap(), schur(&lam, 3));
        // t = 1 gives the monomial symmetric function: every coefficient is 1
        let m = hl.specialize(None, Some(&one)).unwrap();
        assert!(m.terms().all(|(_, c)| c.is_one()), "{lam}");
    }
}

#[test]
fn e_two_variables() {
    let mut memo = EMemo::new();
    let e = e_poly(&[0, 1], &mut memo);
    assert_eq!(e.to_latex(), r"x_2 + \frac{1-t}{1-qt}x_1");
    assert_eq!(e_poly(&[0, 0], &mut memo), XPoly::one(2));
}

#[test]
fn memo_survives_json() {
    let mut memo = EMemo::new();
    e_poly(&[2, 0, 1], &mut memo);
    let back = EMemo::from_json(&memo.to_json()).unwrap();
    assert_eq!(back.len(), memo.len());
    assert_eq!(back.get(&[2, 0, 1]), memo.get(&[2, 0, 1]));
}
