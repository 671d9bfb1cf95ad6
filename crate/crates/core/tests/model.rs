use invalg::model::{
    blockdiff_cohomology, build_d_dga, diff_cohomology, e2_bruteforce_oracle, e3_zero_column, mt_cohomology,
    ModelParams, PairRule,
};
use invalg::Error;

#[test]
fn parameter_validation() {
    assert!(matches!(ModelParams::minimal(4), Err(Error::BoundViolation(_))));
    assert!(ModelParams::new(6, 3, 4, 3).is_err()); // g must exceed n − 3
    assert!(ModelParams::new(9, 10, 4, 6).is_err()); // 4M ≥ 3n − 5 fails
    assert!(ModelParams::new(7, 6, 4, 5).is_err()); // maxdeg above n − 3
    let p = ModelParams::minimal(9).unwrap();
    assert_eq!(p.m_max, 6);
    assert!(p.g > p.n - 3);
}

#[test]
fn d_model_squares_to_zero() {
    for n in 5..=8 {
        let p = ModelParams::minimal(n).unwrap();
        build_d_dga(&p).unwrap().check_square_zero().unwrap();
    }
}

#[test]
fn e2_oracle_agrees_for_n5() {
    let p = ModelParams::new(5, 3, ModelParams::minimal_m(5), 2).unwrap();
    let r = e2_bruteforce_oracle(&p).unwrap();
    assert!(r.mismatches().is_empty(), "{:?}", r.mismatches());
    r.ensure_match().unwrap();
}

#[test]
fn the_rings_in_low_degree() {
    let p = ModelParams::new(9, 16, ModelParams::minimal_m(9), 6).unwrap();
    let r = diff_cohomology(&p).unwrap();
    assert_eq!(r.dims()[..6], [1, 0, 0, 0, 0, 1]);
    assert!(r.mismatch_degrees().is_empty());
    let b = blockdiff_cohomology(&p.with_maxdeg(5).unwrap(), false, PairRule::default()).unwrap();
    assert_eq!(b.dims, vec![1, 0, 0, 0, 0, 2]);
    assert!(b.discrepancies.is_empty());
}

#[test]
fn e3_column_is_free_on_k() {
    let p = ModelParams::minimal(8).unwrap();
    let col = e3_zero_column(&p).unwrap();
    assert_eq!(col.len() as u32, p.maxdeg + 1);
    assert_eq!(col[0], 1);
    assert_eq!(col[1], 0);
}

#[test]
fn mt_degree_one_by_residue() {
    assert_eq!(mt_cohomology(9, 1).unwrap().dims[1], 1);
    assert_eq!(mt_cohomology(11, 1).unwrap().dims[1], 2);
    assert_eq!(mt_cohomology(10, 1).unwrap().dims[1], 0);
}
