use invalg::gca::{
    fgca_dims, koszul_cohomology, quotient_dims, Derivation, Element, FreeGcaPresentation, GeneratorSet,
    KoszulComplexSpec, Monomial,
};
use invalg::invariants::{Group, TensorSpaceSpec};
use invalg::model::{ac_invariant_dims_bruteforce, AcAlgebraSpec, AcVariant};
use invalg::schur::{enumerate_partitions, num_standard_tableaux, PartitionFilter};
use invalg::{Field, Rational, RationalMatrix};
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn gens() -> GeneratorSet {
    GeneratorSet::graded([("a1", 1), ("b2", 2), ("c3", 3), ("d2", 2), ("e1", 1)]).unwrap()
}

fn monomial() -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u32..=2, 5).prop_map(|exps| {
        let g = gens();
        Monomial(
            exps.into_iter()
                .enumerate()
                .filter(|&(i, e)| e > 0 && !(g.get(i).odd && e > 1))
                .map(|(i, e)| (i as u32, e))
                .collect(),
        )
    })
}

fn element() -> impl Strategy<Value = Element<Rational>> {
    proptest::collection::vec((monomial(), -3i64..=3), 0..=3).prop_map(|terms| {
        let mut x = Element::zero();
        for (m, c) in terms {
            x.add_term(m, Rational::from_i64(c));
        }
        x
    })
}

fn homogeneous_parts(g: &GeneratorSet, x: &Element<Rational>) -> Vec<(bool, Element<Rational>)> {
    let mut out: Vec<(bool, Element<Rational>)> = Vec::new();
    for (m, c) in x.terms() {
        let odd = g.monomial_is_odd(m);
        match out.iter_mut().find(|(o, _)| *o == odd) {
            Some((_, e)) => e.add_term(m.clone(), c.clone()),
            None => out.push((odd, Element::monomial(m.clone(), c.clone()))),
        }
    }
    out
}

proptest! {
    #[test]
    fn graded_commutativity(x in element(), y in element()) {
        let g = gens();
        for (ox, px) in homogeneous_parts(&g, &x) {
            for (oy, py) in homogeneous_parts(&g, &y) {
                let xy = g.mul(&px, &py);
                let yx = g.mul(&py, &px);
                let expected = if ox && oy { Element::zero() - yx } else { yx };
                prop_assert_eq!(xy, expected);
            }
        }
    }

    #[test]
    fn associativity(x in element(), y in element(), z in element()) {
        let g = gens();
        prop_assert_eq!(g.mul(&g.mul(&x, &y), &z), g.mul(&x, &g.mul(&y, &z)));
    }

    #[test]
    fn odd_derivation_leibniz(x in element(), y in element(), imgs in proptest::collection::vec(element(), 5)) {
        let g = gens();
        // an odd derivation must flip parity
        let images = imgs
            .iter()
            .enumerate()
            .map(|(i, e)| {
                homogeneous_parts(&g, e)
                    .into_iter()
                    .find(|(o, _)| *o != g.get(i).odd)
                    .map_or(Element::zero(), |(_, part)| part)
            })
            .collect();
        let d = Derivation { images, odd: true };
        for (ox, px) in homogeneous_parts(&g, &x) {
            let lhs = g.apply(&d, &g.mul(&px, &y));
            let second = g.mul(&px, &g.apply(&d, &y));
            let rhs = g.mul(&g.apply(&d, &px), &y) + if ox { Element::zero() - second } else { second };
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn relations_only_shrink_the_quotient(rels in proptest::collection::vec(monomial(), 0..=3)) {
        let g = gens();
        let mut p = FreeGcaPresentation::<Rational>::free(g.clone(), 6);
        let mut prev = quotient_dims(&p).unwrap();
        prop_assert_eq!(&prev, &fgca_dims(&g, 6));
        for m in rels.into_iter().filter(|m| !m.0.is_empty()) {
            p.relations.push(Element::monomial(m, Rational::from_i64(1)));
            let next = quotient_dims(&p).unwrap();
            prop_assert!(next.iter().zip(&prev).all(|(a, b)| a <= b));
            prev = next;
        }
    }

    #[test]
    fn koszul_cohomology_matches_kernel_and_cokernel(
        (r, c, entries) in (1usize..=3, 1usize..=3)
            .prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(-2i64..=2, r * c)))
    ) {
        let rows: Vec<Vec<Rational>> = entries.chunks(c).map(|ch| ch.iter().map(|&v| Rational::from_i64(v)).collect()).collect();
        let spec = KoszulComplexSpec::new(RationalMatrix::from_rows(c, rows));
        prop_assert_eq!(r, spec.f.rows());
        let gens = spec.generators();
        let d = spec.differential();
        for k in 0..gens.len() {
            prop_assert!(gens.apply(&d, &gens.apply(&d, &gens.generator::<Rational>(k))).is_zero());
        }
        prop_assert_eq!(koszul_cohomology(&spec, 6), spec.predicted_dims(6));
    }
}

/// `dim (V^{⊗m} ⊗ V^{∨⊗m})^{GL(V)} = Σ_{λ ⊢ m, ℓ(λ) ≤ g} (f^λ)²`.
#[test]
fn tensor_invariants_match_standard_tableaux() {
    for m in 1..=3usize {
        for g in 1..=3usize {
            let spec = TensorSpaceSpec::new(m, m, g).unwrap();
            let expected: usize = enumerate_partitions(m as u32, PartitionFilter::All)
                .iter()
                .filter(|la| la.height() <= g)
                .map(|la| num_standard_tableaux(la).to_usize().unwrap().pow(2))
                .sum();
            let basis = spec.invariant_basis(Group::GL).unwrap();
            assert_eq!(basis.ncols(), expected, "m={m} g={g}");
            assert_eq!(basis.rank(), expected);
        }
    }
}

#[test]
fn sl_invariants_of_cells_follow_the_weight_rule() {
    for variant in [AcVariant::A, AcVariant::C] {
        for g in 2..=3usize {
            let spec = AcAlgebraSpec::new(variant, g, 1, 2).unwrap();
            for p in 0..=1u32 {
                for q in 0..=2u32 {
                    for r in 0..=4u32 {
                        if 2 * p + q + r > 5 {
                            continue;
                        }
                        let sl = ac_invariant_dims_bruteforce(&spec, p, q, r, Group::SL).unwrap();
                        let diff = (2 * p + q) as i64 - r as i64;
                        if diff % g as i64 != 0 {
                            assert_eq!(sl, 0, "{variant} g={g} ({p},{q},{r})");
                        }
                        if diff == 0 {
                            let gl = ac_invariant_dims_bruteforce(&spec, p, q, r, Group::GL).unwrap();
                            assert_eq!(sl, gl, "{variant} g={g} ({p},{q},{r})");
                        }
                    }
                }
            }
        }
    }
}
