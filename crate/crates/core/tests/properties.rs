use binform_core::discriminant::{discriminant_det, evectant};
use binform_core::forms::{
    from_linear_factors, generic_form, plethysm_multiplicity, transvectant, BinaryForm,
};
use binform_core::loci::{
    alpha_rank, covariant_a_of, g_f, hilbert_degree, lemma_gf_check, tau_delta_classify,
    FactoredForm, PartitionSpec, Stratum,
};
use binform_core::poly::json::{from_json, to_json};
use binform_core::poly::{gcd_univariate, parse_poly, to_text};
use binform_core::{are_proportional, CoefSymbol, MPoly, Monomial, Pair, Rational, Var};
use proptest::prelude::*;

fn poly_strategy() -> impl Strategy<Value = MPoly> {
    let vars = [Var::X1, Var::X2, Var::a(0), Var::a(1)];
    prop::collection::vec((prop::array::uniform4(0u32..3), -6i64..=6), 0..6).prop_map(
        move |terms| {
            MPoly::from_terms(terms.into_iter().map(|(e, c)| {
                (
                    Monomial::from_pairs(vars.iter().copied().zip(e)),
                    Rational::from(c),
                )
            }))
        },
    )
}

fn form_strategy(max_order: u32) -> impl Strategy<Value = BinaryForm> {
    (0..=max_order).prop_flat_map(|m| {
        prop::collection::vec(-5i64..=5, m as usize + 1).prop_map(move |c| {
            BinaryForm::new(m, Pair::X, c.into_iter().map(MPoly::int).collect()).unwrap()
        })
    })
}

const LINES: [(i64, i64); 7] = [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, -2), (3, 2)];

/// Products of distinct lines with multiplicities, order 2..=6.
fn factored_strategy() -> impl Strategy<Value = FactoredForm> {
    (
        Just(LINES.to_vec()).prop_shuffle(),
        prop::collection::vec(1u32..=3, 1..=6),
    )
        .prop_filter_map("order between 2 and 6", |(lines, mults)| {
            let d: u32 = mults.iter().sum();
            if !(2..=6).contains(&d) {
                return None;
            }
            Some(FactoredForm {
                factors: lines.into_iter().zip(mults).collect(),
            })
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, .. ProptestConfig::default() })]

    #[test]
    fn ring_axioms(p in poly_strategy(), q in poly_strategy(), r in poly_strategy()) {
        prop_assert_eq!(p.add_ref(&q), q.add_ref(&p));
        prop_assert_eq!(p.mul_ref(&q), q.mul_ref(&p));
        prop_assert_eq!(p.mul_ref(&q).mul_ref(&r), p.mul_ref(&q.mul_ref(&r)));
        prop_assert_eq!(p.mul_ref(&q.add_ref(&r)), p.mul_ref(&q).add_ref(&p.mul_ref(&r)));
        prop_assert!(p.sub_ref(&p).is_zero());
        prop_assert_eq!(p.mul_ref(&MPoly::one()), p.clone());
    }

    #[test]
    fn text_and_json_round_trip(p in poly_strategy()) {
        prop_assert_eq!(parse_poly(&to_text(&p)).unwrap(), p.clone());
        prop_assert_eq!(from_json(&to_json(&p)).unwrap(), p);
    }

    #[test]
    fn transvectant_symmetry(a in form_strategy(5), b in form_strategy(5), r in 0u32..=5) {
        prop_assume!(r <= a.order().min(b.order()));
        let ab = transvectant(&a, &b, r).unwrap();
        let ba = transvectant(&b, &a, r).unwrap();
        let sign = Rational::from(if r % 2 == 0 { 1 } else { -1 });
        prop_assert_eq!(ab, ba.scale(&sign));
    }

    #[test]
    fn transvectant_bilinear(a in form_strategy(4), b in form_strategy(4), c in -4i64..=4) {
        let m = a.order();
        prop_assume!(b.order() == m);
        let r = m / 2;
        let sum = transvectant(&a.add(&b).unwrap(), &a, r).unwrap();
        let split = transvectant(&a, &a, r).unwrap().add(&transvectant(&b, &a, r).unwrap()).unwrap();
        prop_assert_eq!(sum, split);
        let k = Rational::from(c);
        prop_assert_eq!(transvectant(&a.scale(&k), &b, r).unwrap(), transvectant(&a, &b, r).unwrap().scale(&k));
    }

    #[test]
    fn proportionality(p in poly_strategy(), n in 1i64..9, den in 1i64..9) {
        prop_assume!(!p.is_zero());
        let c = Rational::new(n, den);
        prop_assert_eq!(are_proportional(&p, &p.scale(&c)), Some(c));
        let shifted = p.add_ref(&MPoly::var_pow(Var::Y1, 7));
        prop_assert_eq!(are_proportional(&shifted, &p), None);
    }

    #[test]
    fn gcd_divides_and_finds_common_factor(f in form_strategy(4), g in form_strategy(4), l in 0usize..LINES.len()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let lin = from_linear_factors(&[(LINES[l], 1)]).to_poly();
        let (p, q) = (f.to_poly().mul_ref(&lin), g.to_poly().mul_ref(&lin));
        let h = gcd_univariate(&p, &q, Pair::X).unwrap();
        prop_assert!(p.div_exact(&h).is_ok());
        prop_assert!(q.div_exact(&h).is_ok());
        prop_assert!(h.div_exact(&lin).is_ok());
    }

    #[test]
    fn hilbert_degree_ignores_order(mut parts in prop::collection::vec(1u32..5, 1..7)) {
        let a = hilbert_degree(&PartitionSpec::new(parts.clone()).unwrap());
        parts.reverse();
        let b = hilbert_degree(&PartitionSpec::new(parts).unwrap());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn membership_agrees_on_random_factorisations(ff in factored_strategy()) {
        let f = ff.form();
        let d = f.order();
        let roots = ff.distinct_roots();
        let g = g_f(&f).unwrap();
        prop_assert_eq!(g.order(), d - roots);
        for n in 1..d {
            let truth = roots <= n;
            prop_assert_eq!(covariant_a_of(&f, n).unwrap().is_zero(), truth);
            prop_assert_eq!(alpha_rank(&f, n).unwrap() < 2 * n as usize, truth);
        }
        if roots >= 2 {
            prop_assert!(lemma_gf_check(&f, roots).unwrap());
        }
        if d >= 4 {
            prop_assert_eq!(tau_delta_classify(&f).unwrap(), ff.expected_stratum());
        }
    }
}

#[test]
fn plethysm_dimension_count() {
    // sum_q mult(S_q) (q + 1) = dim S_m(S_d) = C(m+d, d)
    for m in 1..=30u32 {
        for d in 1..=30 / m {
            let total: u128 = (0..=m * d)
                .map(|q| plethysm_multiplicity(m, d, q) * (q as u128 + 1))
                .sum();
            let mut dim: u128 = 1;
            for k in 0..d as u128 {
                dim = dim * (m as u128 + d as u128 - k) / (k + 1);
            }
            assert_eq!(total, dim, "m={m} d={d}");
        }
    }
}

#[test]
fn evectant_pairs_back() {
    for d in 2..=5 {
        let delta = discriminant_det(d).unwrap();
        let f = generic_form(d, CoefSymbol::A, Pair::X).unwrap();
        let e = evectant(&delta, d).unwrap();
        assert_eq!(transvectant(&e, &f, d).unwrap().coef(0), &delta);
    }
}

#[test]
fn classifier_labels_cover_every_stratum() {
    let seen: std::collections::BTreeSet<&str> = [
        vec![((1, 0), 1), ((0, 1), 1), ((1, 1), 1), ((1, -1), 1)],
        vec![((1, 0), 2), ((0, 1), 1), ((1, 1), 1)],
        vec![((1, 0), 3), ((0, 1), 1)],
        vec![((1, 0), 2), ((0, 1), 2)],
        vec![((1, 0), 4)],
    ]
    .into_iter()
    .map(|factors| tau_delta_classify(&from_linear_factors(&factors)).unwrap())
    .map(Stratum::as_str)
    .collect();
    assert_eq!(seen.len(), 5);
}
