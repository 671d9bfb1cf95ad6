use std::collections::BTreeMap;

use invalg::schur::{
    dim_ext, dim_sym, enumerate_partitions, lr_coefficient, num_standard_tableaux, schur_dim, schur_product_expand,
    Partition, PartitionFilter,
};
use num_bigint::BigUint;
use proptest::prelude::*;

type Poly = BTreeMap<Vec<u32>, i64>;

/// `s_λ(x_1, …, x_k)` as a sum over semistandard tableaux.
fn schur_poly(lambda: &Partition, k: usize) -> Poly {
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut filling = vec![vec![0usize; lambda.row(0) as usize]; lambda.height()];
    let mut out = Poly::new();
    fn fill(
        i: usize,
        cells: &[(usize, usize)],
        filling: &mut Vec<Vec<usize>>,
        k: usize,
        out: &mut Poly,
    ) {
        if i == cells.len() {
            let mut exp = vec![0u32; k];
            for row in filling.iter() {
                for &v in row {
                    if v > 0 {
                        exp[v - 1] += 1;
                    }
                }
            }
            *out.entry(exp).or_default() += 1;
            return;
        }
        let (r, c) = cells[i];
        let lo = if c > 0 { filling[r][c - 1] } else { 1 };
        let lo = if r > 0 { lo.max(filling[r - 1][c] + 1) } else { lo };
        for v in lo.max(1)..=k {
            filling[r][c] = v;
            fill(i + 1, cells, filling, k, out);
        }
        filling[r][c] = 0;
    }
    fill(0, &cells, &mut filling, k, &mut out);
    out
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Expands a symmetric polynomial in Schur functions by peeling off the
/// lexicographically leading monomial.
fn schur_decompose(mut p: Poly, k: usize) -> BTreeMap<Partition, i64> {
    let mut out = BTreeMap::new();
    while let Some((lead, &c)) = p.iter().next_back() {
        let parts: Vec<u32> = lead.iter().copied().filter(|&x| x > 0).collect();
        let kappa = Partition::new(parts).expect("leading exponent is a partition");
        for (e, v) in schur_poly(&kappa, k) {
            *p.entry(e).or_default() -= c * v;
        }
        p.retain(|_, v| *v != 0);
        out.insert(kappa, c);
    }
    out
}

#[test]
fn lr_matches_polynomial_multiplication() {
    for a in 0..=3 {
        for b in 0..=(5 - a).min(3) {
            let k = (a + b) as usize;
            for la in enumerate_partitions(a, PartitionFilter::All) {
                for mu in enumerate_partitions(b, PartitionFilter::All) {
                    let oracle = schur_decompose(poly_mul(&schur_poly(&la, k), &schur_poly(&mu, k)), k);
                    for kappa in enumerate_partitions(a + b, PartitionFilter::All) {
                        let expected = oracle.get(&kappa).copied().unwrap_or(0);
                        assert_eq!(lr_coefficient(&la, &mu, &kappa) as i64, expected, "{la} {mu} {kappa}");
                    }
                }
            }
        }
    }
}

#[test]
fn schur_dim_counts_tableaux() {
    for n in 0..=5 {
        for la in enumerate_partitions(n, PartitionFilter::All) {
            for g in 0..=4u32 {
                let count: i64 = schur_poly(&la, g as usize).values().sum();
                assert_eq!(schur_dim(&la, g), BigUint::from(count as u64), "{la} g={g}");
            }
        }
    }
}

#[test]
fn standard_tableaux_square_sum_is_factorial() {
    for n in 0..=8u32 {
        let total: BigUint = enumerate_partitions(n, PartitionFilter::All)
            .iter()
            .map(|la| {
                let f = num_standard_tableaux(la);
                &f * &f
            })
            .sum();
        let fact: BigUint = (1..=n).map(BigUint::from).product();
        assert_eq!(total, fact, "n={n}");
    }
}

#[test]
fn single_row_and_column_are_sym_and_ext() {
    for d in 0..=5u64 {
        for k in 1..=5u32 {
            let row = Partition::new(vec![k]).unwrap();
            assert_eq!(schur_dim(&row, d as u32), dim_sym(d, k as u64));
            assert_eq!(schur_dim(&row.conjugate(), d as u32), dim_ext(d, k as u64));
        }
    }
}

fn partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1u32..=4, 0..=4).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(la in partition()) {
        prop_assert_eq!(la.conjugate().conjugate(), la.clone());
        prop_assert_eq!(la.conjugate().size(), la.size());
        prop_assert_eq!(la.conjugate().height() as u32, la.row(0));
    }

    #[test]
    fn lr_symmetries(la in partition(), mu in partition()) {
        for (kappa, c) in schur_product_expand(&la, &mu) {
            prop_assert_eq!(lr_coefficient(&mu, &la, &kappa), c);
            prop_assert_eq!(lr_coefficient(&la.conjugate(), &mu.conjugate(), &kappa.conjugate()), c);
        }
    }

    #[test]
    fn product_dimension_is_multiplicative(la in partition(), mu in partition(), g in 1u32..=4) {
        let lhs: BigUint = schur_product_expand(&la, &mu)
            .into_iter()
            .map(|(kappa, c)| schur_dim(&kappa, g) * c)
            .sum();
        prop_assert_eq!(lhs, schur_dim(&la, g) * schur_dim(&mu, g));
    }
}
