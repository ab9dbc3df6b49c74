use supertropical::oracle::{self, OracleBounds, SymMonomial};
use supertropical::{Error, Matrix, Polynomial};

#[test]
fn smallest_census() {
    let c = oracle::census(2, 2, 1).unwrap();
    assert!(c.verdict.holds());
    // tr(A^2) = a11^2 + a12 a21 + a21 a12 + a22^2
    let cross = SymMonomial::var(0, 1).mul(&SymMonomial::var(1, 0));
    assert_eq!(c.coefficient.count(&cross), 2);
    assert_eq!(c.coefficient.count(&SymMonomial::var(0, 0).pow(2)), 1);
    assert_eq!(c.power_monomials.len(), 2);
    assert_eq!(c.coefficient.total(), 4);
}

#[test]
fn determinant_census() {
    let c = oracle::census(2, 2, 2).unwrap();
    assert!(c.verdict.holds());
    assert_eq!(c.coefficient.total(), 8);
    let a11 = SymMonomial::var(0, 0);
    let off = SymMonomial::var(0, 1).mul(&SymMonomial::var(1, 0));
    assert_eq!(c.coefficient.count(&a11.pow(2).mul(&off)), 2);
    assert_eq!(c.coefficient.count(&off.pow(2)), 1);
}

#[test]
fn odd_counts_occur_for_cubes() {
    let c = oracle::census(3, 3, 2).unwrap();
    assert!(c.verdict.holds());
    assert!(c.odd_non_power_counts() > 0);
}

#[test]
fn census_json_is_auditable() {
    let json: serde_json::Value =
        serde_json::from_str(&oracle::census(2, 2, 1).unwrap().to_json()).unwrap();
    assert_eq!(json["holds"], true);
    assert_eq!(json["terms"].as_array().unwrap().len(), 3);
    assert!(json["terms"][0]["monomial"].is_object());
}

#[test]
fn census_bounds() {
    assert!(matches!(
        oracle::census(4, 2, 1),
        Err(Error::BoundExceeded { .. })
    ));
    let wide = OracleBounds { max_n: 4, max_m: 2 };
    assert!(oracle::census_with_bounds(4, 2, 1, wide)
        .unwrap()
        .verdict
        .holds());
    assert!(oracle::census(2, 2, 3).is_err());
}

#[test]
fn all_minor_sizes() {
    for n in 1..=3 {
        assert!(oracle::census_all_k(n, 2).unwrap().holds());
    }
}

#[test]
fn direct_permanent_agrees_on_golden() {
    let a = Matrix::from_tangibles(&[&[0, 0], &[1, 2]]).unwrap();
    assert_eq!(
        oracle::sym_direct_charpoly(&a).unwrap(),
        "x^2 + 2x + 2".parse::<Polynomial>().unwrap()
    );
    assert_eq!(
        oracle::sym_direct_charpoly(&a.pow(2)).unwrap().to_string(),
        "x^2 + 4x + 5g"
    );
    assert!(oracle::check_charpoly_equiv(&a).unwrap().holds());
}

#[test]
fn sampled_equivalence_detects_differences() {
    let f: Polynomial = "x^2 + 0x + 2".parse().unwrap();
    let g: Polynomial = "x^2 + 2".parse().unwrap();
    assert!(oracle::sampled_equiv(&f, &g, 50, 1).holds());
    let h: Polynomial = "x^2 + 2g".parse().unwrap();
    assert!(oracle::sampled_equiv(&f, &h, 50, 1).is_violated());
}
