mod common;

use common::*;

#[test]
fn homs_from_elementary_and_into_minimal() {
    let (_, pool) = s3_pool();
    assert!(pool.len() >= 20);
    assert_eq!(schur_violations(&pool), Vec::<String>::new());
}

#[test]
fn quotient_by_kernel_is_image() {
    let (_, pool) = s3_pool();
    let (checked, bad) = kernel_image_violations(&pool);
    assert!(checked > pool.len());
    assert_eq!(bad, Vec::<String>::new());
}

#[test]
fn quotients_of_minimal_modules_stay_minimal() {
    let (_, pool) = s3_pool();
    assert_eq!(quotient_minimality_violations(&pool), Vec::<String>::new());
}

#[test]
fn cells_annihilate_all_or_nothing() {
    let (_, pool) = s3_pool();
    assert_eq!(annihilation_violations(&pool), Vec::<String>::new());
}

#[test]
fn cells_in_idempotent_cells_are_incomparable() {
    assert_eq!(incomparability_violations(), Vec::<String>::new());
}

#[test]
fn extreme_proper_classes() {
    let (checked, bad) = extreme_class_violations(&["s3-kl", "dihedral:4", "klhat-s2", "z-s2"]);
    assert!(checked >= 20);
    assert_eq!(bad, Vec::<String>::new());
}
