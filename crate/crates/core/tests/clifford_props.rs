use macdonald_core::clifford::{
    clifford_formula, constructive_clifford, gr, random_generic_config, verify_config, CliffordObject, GaussianRat,
    NLineConfig,
};
use macdonald_core::qt::ratio;
use num_complex::Complex;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn config(seed: u64, n: usize) -> NLineConfig {
    random_generic_config(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn transform(l: &NLineConfig, a: &GaussianRat) -> NLineConfig {
    NLineConfig::new(l.ys().iter().map(|y| y * a).collect()).unwrap()
}

fn transform_obj(o: &CliffordObject, a: &GaussianRat) -> CliffordObject {
    match o {
        CliffordObject::Point(p) => CliffordObject::Point(p * a),
        CliffordObject::Circle(c) => {
            let mut c = c.clone();
            c.center = &c.center * a;
            c.radius_sq = &c.radius_sq * a.norm_sqr();
            CliffordObject::Circle(c)
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn formula_matches_construction(seed in any::<u64>(), n in 2usize..7) {
        let l = config(seed, n);
        for c in verify_config(&l).unwrap() {
            prop_assert!(c.ok, "{}", c.label);
        }
    }

    /// The whole figure is equivariant under z -> a z (rotation and scaling about 0).
    #[test]
    fn similarity_invariance(seed in any::<u64>(), n in 2usize..6, re in -3i64..=3, im in -3i64..=3) {
        prop_assume!(re != 0 || im != 0);
        let a = Complex::new(ratio(re, 2), ratio(im, 1));
        let l = config(seed, n);
        let m = transform(&l, &a);
        prop_assert_eq!(clifford_formula(&m).unwrap(), transform_obj(&clifford_formula(&l).unwrap(), &a));
    }

    #[test]
    fn order_of_lines_is_irrelevant(seed in any::<u64>(), n in 2usize..6) {
        let l = config(seed, n);
        let rev = NLineConfig::new(l.ys().iter().rev().cloned().collect()).unwrap();
        prop_assert_eq!(clifford_formula(&rev).unwrap(), clifford_formula(&l).unwrap());
    }
}

#[test]
fn two_lines_meet_where_expected() {
    let l = NLineConfig::new(vec![gr(2, 0), gr(0, 2)]).unwrap();
    assert_eq!(clifford_formula(&l).unwrap(), CliffordObject::Point(gr(1, 1)));
    assert_eq!(constructive_clifford(&l).unwrap(), CliffordObject::Point(gr(1, 1)));
}

#[test]
fn parallel_lines_are_rejected() {
    assert!(NLineConfig::new(vec![gr(1, 0), gr(2, 0)]).is_err());
    assert!(NLineConfig::new(vec![gr(0, 0), gr(2, 0)]).is_err());
}
