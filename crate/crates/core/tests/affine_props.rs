use macdonald_core::affine::{
    apply_gen, catalog, check_catalog_consistency, orbit_closure, orbit_membership, specialization_path, AffineVector,
    Orbit,
};
use proptest::prelude::*;

fn vector() -> impl Strategy<Value = AffineVector> {
    (1usize..5).prop_flat_map(|n| (prop::collection::vec(-5i64..=5, n), -10i64..=10))
        .prop_map(|(eps, d)| AffineVector::new(eps, d))
}

fn apply_word(v: &AffineVector, word: &[usize]) -> AffineVector {
    word.iter().fold(v.clone(), |acc, &i| apply_gen(&acc, i).unwrap())
}

proptest! {
    #[test]
    fn generators_are_involutions(v in vector()) {
        for i in 0..=v.n() {
            prop_assert_eq!(apply_word(&v, &[i, i]), v.clone());
        }
    }

    #[test]
    fn orbits_are_stable(v in vector()) {
        let o = orbit_membership(&v);
        for i in 0..=v.n() {
            prop_assert_eq!(orbit_membership(&apply_gen(&v, i).unwrap()), o);
        }
    }

    #[test]
    fn coxeter_relations(v in vector()) {
        let n = v.n();
        prop_assume!(n >= 2);
        // type C~_n: m(s_0, s_1) = m(s_{n-1}, s_n) = 4, m(s_i, s_{i+1}) = 3 inside
        prop_assert_eq!(apply_word(&v, &[0, 1, 0, 1, 0, 1, 0, 1]), v.clone());
        prop_assert_eq!(apply_word(&v, &[n - 1, n, n - 1, n, n - 1, n, n - 1, n]), v.clone());
        for i in 1..n - 1 {
            prop_assert_eq!(apply_word(&v, &[i, i + 1, i, i + 1, i, i + 1]), v.clone());
        }
        for i in 0..=n {
            for j in i + 2..=n {
                prop_assert_eq!(apply_word(&v, &[i, j, i, j]), v.clone());
            }
        }
    }

    #[test]
    fn display_parses_back(v in vector()) {
        prop_assert_eq!(AffineVector::parse(&v.to_string(), Some(v.n())).unwrap(), v);
    }
}

#[test]
fn closures_stay_in_one_orbit() {
    let seeds = [
        (AffineVector::new(vec![1, 0, 0], 0), Orbit::O1),
        (AffineVector::new(vec![2, 0, 0], 0), Orbit::O2),
        (AffineVector::new(vec![1, 0, 0], 1), Orbit::O3),
        (AffineVector::new(vec![2, 0, 0], 2), Orbit::O4),
        (AffineVector::new(vec![1, 1, 0], 0), Orbit::O5),
    ];
    for (seed, orbit) in seeds {
        let cl = orbit_closure(&seed, 4);
        assert!(cl.len() > 6);
        assert!(cl.iter().all(|v| orbit_membership(v) == Some(orbit)), "{orbit}");
    }
    assert!(orbit_membership(&AffineVector::new(vec![3, 0], 0)).is_none());
}

#[test]
fn catalog_is_consistent() {
    let cat = catalog();
    assert!(check_catalog_consistency(&cat).is_empty());
    assert!(cat.find("CvC").unwrap().orbits.len() == 5);
    assert!(specialization_path("CvC", "B").unwrap().is_some());
    assert!(specialization_path("B", "CvC").unwrap().is_none());
    assert!(specialization_path("nope", "B").is_err());
}
