#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use supertropical::{Matrix, Polynomial, Scalar};

pub fn rational_parts() -> impl Strategy<Value = (i64, i64)> {
    (-24i64..=24, prop_oneof![4 => Just(1i64), 1 => 2i64..=4])
}

pub fn tangible() -> impl Strategy<Value = Scalar> {
    rational_parts().prop_map(|(p, q)| Scalar::tangible_ratio(p, q))
}

pub fn ghost() -> impl Strategy<Value = Scalar> {
    rational_parts().prop_map(|(p, q)| Scalar::ghost_ratio(p, q))
}

/// Mostly tangible, with ghosts and zeros common enough to hit ties.
pub fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        6 => tangible(),
        3 => ghost(),
        1 => Just(Scalar::Zero),
    ]
}

/// Small integer values, so that sums tie often.
pub fn small_scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        6 => (-3i64..=3).prop_map(Scalar::tangible),
        3 => (-3i64..=3).prop_map(Scalar::ghost),
        1 => Just(Scalar::Zero),
    ]
}

pub fn polynomial(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(scalar(), 1..=max_degree + 1).prop_map(Polynomial::new)
}

pub fn small_polynomial(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(small_scalar(), 1..=max_degree + 1).prop_map(Polynomial::new)
}

pub fn matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(small_scalar(), n * n).prop_map(move |entries| {
        let rows = entries.chunks(n).map(<[Scalar]>::to_vec).collect();
        Matrix::from_rows(rows).unwrap()
    })
}

pub fn any_matrix(max_n: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_n).prop_flat_map(matrix)
}

/// A runner with a fixed seed, so case sets are reproducible.
pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}
