use binform_cli::expr::{parse_expr, Env, ExprError};
use binform_core::discriminant::{catalog, discriminant_det, discriminant_oracle, evectant};
use binform_core::forms::{generic_form, transvectant};
use binform_core::{are_proportional, CoefSymbol, Pair, Rational};

fn eval(d: u32, src: &str) -> binform_core::forms::BinaryForm {
    Env::new(d)
        .unwrap()
        .eval(&parse_expr(src).unwrap())
        .unwrap()
}

#[test]
fn atoms_match_catalog() {
    for d in 2..=5 {
        let c = catalog(d).unwrap();
        for (name, form) in &c.entries {
            let atom = if name == "E_Delta" {
                "E"
            } else {
                name.as_str()
            };
            if binform_cli::expr::ATOMS.contains(&atom) {
                assert_eq!(&eval(d, atom), form, "{atom} at d={d}");
            }
        }
    }
}

#[test]
fn quartic_and_quintic_expressions() {
    let c4 = catalog(4).unwrap();
    let i = c4.get("i").unwrap();
    assert_eq!(eval(4, "i^3"), i.pow(3).unwrap());
    let lhs = eval(4, "i^3 - 6*j^2");
    assert!(are_proportional(lhs.coef(0), &discriminant_oracle(4).unwrap()).is_some());
    assert_eq!(eval(4, "(H,F)_2"), eval(4, "1/6*i*F"));

    let c5 = catalog(5).unwrap();
    let (i5, h5) = (c5.get("i").unwrap(), c5.get("H").unwrap());
    let direct = transvectant(&i5.pow(3).unwrap(), h5, 6).unwrap();
    assert_eq!(eval(5, "(i^3,H)_6"), direct);
    let delta = eval(5, "59*A^2 + 320*(i^3,H)_6");
    assert_eq!(&delta, c5.get("Delta").unwrap());
    assert!(are_proportional(delta.coef(0), &discriminant_oracle(5).unwrap()).is_some());
}

#[test]
fn outside_catalog_range() {
    let f = generic_form(6, CoefSymbol::A, Pair::X).unwrap();
    assert_eq!(eval(6, "(F,F)_2"), transvectant(&f, &f, 2).unwrap());
    assert_eq!(
        eval(6, "E"),
        evectant(&discriminant_det(6).unwrap(), 6).unwrap()
    );
    // (E, F)_d recovers the discriminant
    assert_eq!(eval(6, "(E,F)_6").coef(0), &discriminant_det(6).unwrap());
    let err = Env::new(6)
        .unwrap()
        .eval(&parse_expr("i").unwrap())
        .unwrap_err();
    assert!(matches!(
        err,
        ExprError::UnknownAtom {
            column: 1,
            d: 6,
            ..
        }
    ));
}

#[test]
fn arithmetic() {
    assert_eq!(eval(3, "F - F"), eval(3, "0*F"));
    assert_eq!(eval(3, "-(2*F)"), eval(3, "-2*F"));
    assert_eq!(
        eval(3, "7/3").coef(0).constant_value(),
        Some(Rational::new(7, 3))
    );
    let err = Env::new(3).unwrap().eval(&parse_expr("F + H").unwrap());
    assert!(matches!(err, Err(ExprError::Eval { .. })));
}
