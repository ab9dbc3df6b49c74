mod common;

use common::{any_matrix, matrix, polynomial, scalar, small_polynomial, small_scalar};
use proptest::prelude::*;
use supertropical::{oracle, spectral, Matrix, Polynomial, Scalar};

proptest! {
    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Scalar>(&json).unwrap(), a);
    }

    #[test]
    fn polynomial_round_trip(f in polynomial(8)) {
        prop_assert_eq!(f.to_string().parse::<Polynomial>().unwrap(), f.clone());
        let json = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<Polynomial>(&json).unwrap(), f);
    }

    #[test]
    fn matrix_round_trip(a in any_matrix(5)) {
        prop_assert_eq!(a.to_string().parse::<Matrix>().unwrap(), a.clone());
        prop_assert_eq!(Matrix::parse_any(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn nu_is_idempotent_and_surpassing(a in scalar()) {
        prop_assert_eq!(a.nu().nu(), a.nu());
        prop_assert!(a.nu().surpasses(&a));
        prop_assert_eq!(&a + &a, a.nu());
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in small_polynomial(5), g in small_polynomial(5), x in small_scalar()) {
        prop_assert_eq!((&f + &g).evaluate(&x), &f.evaluate(&x) + &g.evaluate(&x));
        prop_assert_eq!((&f * &g).evaluate(&x), &f.evaluate(&x) * &g.evaluate(&x));
    }

    #[test]
    fn polynomial_semiring(f in small_polynomial(4), g in small_polynomial(4), h in small_polynomial(4)) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
    }

    #[test]
    fn essential_part_agrees_everywhere(f in polynomial(8).prop_filter("nonzero", |f| !f.is_zero()), seed in any::<u64>()) {
        let e = f.essential().unwrap();
        prop_assert!(oracle::sampled_equiv(&f, &e, 16, seed).holds());
        prop_assert_eq!(e.essential().unwrap(), e.clone());
        prop_assert_eq!(e.roots(), f.roots());
    }

    #[test]
    fn roots_are_roots(f in small_polynomial(6)) {
        let report = f.roots();
        for c in &report.corner_roots {
            prop_assert!(f.is_root(&c.root), "{} at {}", f, c.root);
        }
        if report.is_identically_root {
            prop_assert!(f.is_root(&Scalar::tangible(17)));
        }
    }

    #[test]
    fn matrix_product_is_associative(a in matrix(3), b in matrix(3), c in matrix(3)) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_is_neutral(a in any_matrix(4)) {
        let id = Matrix::identity(a.dim());
        prop_assert_eq!(a.mul(&id).unwrap(), a.clone());
        prop_assert_eq!(id.mul(&a).unwrap(), a);
    }

    #[test]
    fn det_rule_holds(a in matrix(3), b in matrix(3)) {
        prop_assert!(spectral::check_det_rule(&a, &b).unwrap().holds());
    }

    #[test]
    fn charpoly_power_surpasses(a in any_matrix(3), m in 1u32..=3) {
        let v = spectral::check_charpoly_power(&a, m).unwrap();
        prop_assert!(v.holds(), "{}", v);
        prop_assert!(spectral::check_trace_power(&a, m).unwrap().holds());
        prop_assert!(!spectral::check_corner_root_power(&a, m).unwrap().is_violated());
        prop_assert!(!spectral::check_tangible_equality(&a, m).unwrap().is_violated());
    }

    #[test]
    fn charpoly_matches_direct_permanent(a in any_matrix(4)) {
        prop_assert_eq!(a.char_poly().unwrap(), oracle::sym_direct_charpoly(&a).unwrap());
    }

    #[test]
    fn charpoly_has_trace_and_det(a in any_matrix(4)) {
        let f = a.char_poly().unwrap();
        let n = a.dim();
        prop_assert_eq!(f.coeff(n), &Scalar::one());
        prop_assert_eq!(f.coeff(n - 1), &a.trace());
        prop_assert_eq!(f.coeff(0), &a.det().unwrap().value);
    }
}
