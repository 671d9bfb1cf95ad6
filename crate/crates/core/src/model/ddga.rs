use crate::field::Field;
use crate::error::{Error, Result};
use crate::gca::{fgca_dims, BigradedDga, Element, Generator, GeneratorSet, Monomial};
use crate::Rational;

use super::{build_spaces, ModelParams, GradedSpaces};

/// `D = Λ(V ⊕ W⊗U) ⊗ S(Q[2,0] ⊗ Λ²U)` with `δ = 0` on `V` and on `Λ²U`,
/// and `δ(w_a ⊗ u_b) = S(w_a) ∧ u_b`.
///
/// Generators: `v{m}` in `(0, |v_m|)`, `w{a}u{b}` in `(0, |w_a|+|u_b|)`,
/// and `u{a}^u{b}` (`a < b`) in `(2, |u_a|+|u_b|)`.
pub fn build_d_dga(params: &ModelParams) -> Result<BigradedDga<Rational>> {
    d_dga_of(&build_spaces(params), params.maxdeg)
}

pub(crate) fn d_dga_of(spaces: &GradedSpaces, truncation: u32) -> Result<BigradedDga<Rational>> {
    let mut gens = Vec::new();
    for v in &spaces.v {
        gens.push(Generator {
            name: v.name.clone(),
            degree: vec![0, v.degree],
            odd: true,
        });
    }
    let mut tensors = Vec::new();
    for w in &spaces.w {
        for u in &spaces.u {
            tensors.push((w.index[0], u.index[0]));
            gens.push(Generator {
                name: format!("{}{}", w.name, u.name),
                degree: vec![0, w.degree + u.degree],
                odd: (w.degree + u.degree) % 2 == 1,
            });
        }
    }
    let wedge_start = gens.len();
    let mut wedges = Vec::new();
    for (i, ua) in spaces.u.iter().enumerate() {
        for ub in &spaces.u[i + 1..] {
            wedges.push((ua.index[0], ub.index[0]));
            gens.push(Generator {
                name: format!("{}^{}", ua.name, ub.name),
                degree: vec![2, ua.degree + ub.degree],
                odd: false,
            });
        }
    }
    let set = GeneratorSet::new(gens)?;
    let mut delta = vec![Element::zero(); set.len()];
    let tensor_start = spaces.v.len();
    for (t, &(a, b)) in tensors.iter().enumerate() {
        if spaces.s_map(a).is_none() || a == b {
            continue;
        }
        let (lo, hi, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
        let e = wedges.iter().position(|&p| p == (lo, hi)).expect("wedge generator");
        delta[tensor_start + t] = Element::monomial(Monomial::generator(wedge_start + e), Rational::from_i64(sign));
    }
    BigradedDga::new(set, delta, truncation)
}

/// `dim H^{0,q}(D)` for `q ≤ maxdeg`, after checking that `H^{p,q}(D)`
/// vanishes for `p ≠ 0` in that range and that the column agrees with
/// `Λ(K(n))`.
pub fn e3_zero_column(params: &ModelParams) -> Result<Vec<usize>> {
    let spaces = build_spaces(params);
    let h = d_dga_of(&spaces, params.maxdeg)?.cohomology()?;
    if let Some((p, q)) = h.off_column_witness() {
        return Err(Error::Inconsistent {
            context: "D cohomology off the zero column".into(),
            cell: format!("({p},{q})"),
        });
    }
    let column = h.zero_column();
    let expected = fgca_dims(&spaces.k_generators(), params.maxdeg);
    if let Some(q) = (0..column.len()).find(|&q| column[q] != expected[q]) {
        return Err(Error::Inconsistent {
            context: format!("zero column {} vs Λ(K(n)) {}", column[q], expected[q]),
            cell: format!("(0,{q})"),
        });
    }
    Ok(column)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gca::Monomial;

    #[test]
    fn delta_on_generators() {
        let p = ModelParams::new(5, 4, 4, 2).unwrap();
        let d = build_d_dga(&p).unwrap();
        let gens = d.generators();
        let v3 = gens.index_of("v3").unwrap();
        assert!(d.delta(&gens.generator(v3)).is_zero());
        let t22 = gens.index_of("w2u2").unwrap();
        assert!(d.delta(&gens.generator(t22)).is_zero());
        let t32 = gens.index_of("w3u2").unwrap();
        let e23 = gens.index_of("u2^u3").unwrap();
        assert_eq!(
            d.delta(&gens.generator(t32)),
            Element::monomial(Monomial::generator(e23), Rational::from_i64(-1))
        );
    }

    #[test]
    fn zero_column_examples() {
        let p = ModelParams::new(5, 4, 4, 2).unwrap();
        assert_eq!(e3_zero_column(&p).unwrap(), vec![1, 1, 0]);
        let p = ModelParams::new(6, 4, 4, 3).unwrap();
        let s = build_spaces(&p);
        assert_eq!(e3_zero_column(&p).unwrap(), fgca_dims(&s.k_generators(), 3));
        let p = ModelParams::new(7, 5, 5, 4).unwrap();
        let col = e3_zero_column(&p).unwrap();
        assert_eq!(col, fgca_dims(&build_spaces(&p).k_generators(), 4));
    }

    #[test]
    fn degenerate_slot_has_no_differential() {
        // n = 7: u_2 is absent, so w2 ⊗ u_b are cycles
        let p = ModelParams::new(7, 5, 5, 4).unwrap();
        let d = build_d_dga(&p).unwrap();
        let gens = d.generators();
        for name in ["w2u3", "w2u4", "w2u5"] {
            let i = gens.index_of(name).unwrap();
            assert!(d.delta(&gens.generator(i)).is_zero(), "{name}");
        }
        let i = gens.index_of("w3u4").unwrap();
        assert!(!d.delta(&gens.generator(i)).is_zero());
    }
}
