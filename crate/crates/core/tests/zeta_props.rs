use macdonald_core::cohomology::cross_check_zeta;
use macdonald_core::qt::rat;
use macdonald_core::zeta::{
    count_by_base_change, count_by_log_derivative, count_points_sym, f_k, functional_eq_check, pointcount, rh_check,
    z_sym, CurveZeta,
};
use proptest::prelude::*;

/// Genus 1 numerators `1 - a t + q t^2` inside the Weil bound.
fn elliptic() -> impl Strategy<Value = CurveZeta> {
    prop::sample::select(vec![2i64, 3, 4, 5, 7, 8, 9]).prop_flat_map(|q| {
        let b = (4.0 * q as f64).sqrt().floor() as i64;
        (-b..=b).prop_map(move |a| CurveZeta::new(q, &[1, -a, q]).unwrap())
    })
}

fn mod_p(a: i64, p: i64) -> i64 {
    a.rem_euclid(p)
}

fn inv_mod(a: i64, p: i64) -> i64 {
    (1..p).find(|x| mod_p(a * x, p) == 1).unwrap()
}

fn trim(mut f: Vec<i64>) -> Vec<i64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn rem_mod(a: &[i64], b: &[i64], p: i64) -> Vec<i64> {
    let mut r = trim(a.to_vec());
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    while r.len() >= b.len() {
        let c = mod_p(r.last().unwrap() * lead_inv, p);
        let shift = r.len() - b.len();
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = mod_p(r[shift + i] - c * bi, p);
        }
        r = trim(r);
    }
    r
}

/// `gcd(f, f') = 1` over `F_p`.
fn squarefree_mod(f: &[i64], p: i64) -> bool {
    let df = trim((1..f.len()).map(|i| mod_p(i as i64 * f[i], p)).collect());
    if df.is_empty() {
        return false;
    }
    let (mut a, mut b) = (trim(f.iter().map(|&c| mod_p(c, p)).collect()), df);
    while !b.is_empty() {
        let r = rem_mod(&a, &b, p);
        a = b;
        b = r;
    }
    a.len() == 1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn counting_routes_agree(c in elliptic(), n in 1usize..4, m in 1usize..4) {
        let a = count_by_log_derivative(&c, n, m).unwrap();
        prop_assert_eq!(&a, &count_by_base_change(&c, n, m));
        prop_assert!(a.is_integer());
        prop_assert!(count_points_sym(&c, n, m).is_ok());
    }

    #[test]
    fn genus_one_weil_statements(c in elliptic(), n in 1usize..4) {
        prop_assert!(c.weil_warning().is_none());
        prop_assert!(functional_eq_check(&c, n).unwrap().printed_holds);
        prop_assert!(rh_check(&c, n, 1e-9).unwrap().ok);
        prop_assert!(cross_check_zeta(1, n.min(2), &c).unwrap().ok);
    }

    /// Brute-force genus 2 curves `y^2 = f(x)`, `deg f = 5`, over small prime fields.
    #[test]
    fn genus_two_brute_force(p in prop::sample::select(vec![3i64, 5, 7]), f in prop::collection::vec(0i64..7, 5)) {
        let mut f = f;
        f.push(1);
        prop_assume!(squarefree_mod(&f, p));
        let (n1, n2) = pointcount::count_hyperelliptic(p, &f);
        let c = pointcount::numerator_from_counts(p, 2, n1, n2).unwrap();
        prop_assert!(c.weil_warning().is_none());
        prop_assert_eq!(count_by_log_derivative(&c, 1, 1).unwrap(), rat(n1 as i64));
        prop_assert_eq!(count_by_log_derivative(&c, 1, 2).unwrap(), rat(n2 as i64));
        for n in 1..=2 {
            prop_assert!(rh_check(&c, n, 1e-9).unwrap().ok);
            prop_assert!(cross_check_zeta(2, n, &c).unwrap().ok);
            prop_assert!(functional_eq_check(&c, n).unwrap().corrected_holds);
        }
    }
}

#[test]
fn supersingular_genus_two() {
    let (n1, n2) = pointcount::count_hyperelliptic(7, &[1, 0, 0, 0, 0, 1]);
    assert_eq!((n1, n2), (8, 50));
    let c = pointcount::numerator_from_counts(7, 2, n1, n2).unwrap();
    assert_eq!(c.numer().to_string(), "1 + 49*t^4");
    // exponent zero at n = 3 makes both forms agree
    let fe = functional_eq_check(&c, 3).unwrap();
    assert!(fe.printed_holds && fe.corrected_holds);
}

#[test]
fn factor_degrees_are_betti_numbers() {
    let c = CurveZeta::new(2, &[1, 0, 2]).unwrap();
    let degs: Vec<usize> = (0..=4).map(|k| f_k(&c, 2, k).degree().unwrap_or(0)).collect();
    assert_eq!(degs, [1, 2, 2, 2, 1]);
    let z = z_sym(&c, 2).unwrap();
    assert_eq!(z.numerator.len(), 2);
    assert_eq!(z.denominator.len(), 3);
}

#[test]
fn counts_for_the_test_curve() {
    let c = CurveZeta::new(2, &[1, 0, 2]).unwrap();
    assert_eq!(count_points_sym(&c, 2, 1).unwrap(), 9.into());
    assert_eq!(count_points_sym(&c, 2, 2).unwrap(), 45.into());
}

#[test]
fn bad_numerators() {
    assert!(CurveZeta::new(2, &[2, 0, 2]).is_err());
    assert!(CurveZeta::new(2, &[1, 0, 0, 2]).is_err());
    assert!(CurveZeta::new(1, &[1]).is_err());
    assert!(CurveZeta::new(2, &[1, -9, 2]).unwrap().weil_warning().is_some());
}
