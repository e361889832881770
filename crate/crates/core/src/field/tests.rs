use super::*;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn field(s: &str) -> NumberField {
    NumberField::from_str_poly(s).unwrap()
}

#[test]
fn gaussian_field() {
    let k = field("x^2+1");
    assert_eq!(k.discriminant(), &BigInt::from(-4));
    assert_eq!(k.signature(), (0, 1));
    assert_eq!(k.units().torsion_order, 4);
    let a = k.parse_element("2+t").unwrap();
    assert_eq!(k.norm_trace(&a), (q(5), q(4)));
    assert_eq!(k.class_number(), Some(&BigInt::one()));
}

#[test]
fn reducible_rejected() {
    assert!(matches!(NumberField::from_str_poly("x^2-x"), Err(Error::Reducible(_))));
    assert!(matches!(NumberField::from_str_poly("x^2-4"), Err(Error::Reducible(_))));
    assert!(matches!(NumberField::from_str_poly("x^4+4"), Err(Error::CannotCertify(_))));
}

#[test]
fn real_quadratic_units() {
    let k = field("x^2-3");
    assert_eq!(k.signature(), (2, 0));
    assert_eq!(k.units().fundamental[0], FieldElement::from_i64(&[2, 1]));
    let k = field("x^2-2");
    let e = k.parse_element("1+t").unwrap();
    assert_eq!(k.norm(&e), q(-1));
    assert!(k.is_totally_positive(&k.parse_element("2+t").unwrap()).unwrap());
    assert!(!k.is_totally_positive(&e).unwrap());
}

#[test]
fn nonmonic_basis_for_one_mod_four() {
    let k = field("x^2-x-1");
    assert_eq!(k.discriminant(), &BigInt::from(5));
    let k = field("x^2-5");
    assert_eq!(k.discriminant(), &BigInt::from(5));
    let half = k.parse_element("(1+t)/2").unwrap();
    assert!(half.is_integral());
    let k = field("x^2-12");
    assert_eq!(k.discriminant(), &BigInt::from(12));
}

fn pell_oracle(d: i64) -> (i64, i64) {
    // least k >= 1 admitting a unit h + k*omega; h recovered from the norm equation
    let one_mod_four = d.rem_euclid(4) == 1;
    let sq = |n: i64| (n >= 0).then(|| (n as f64).sqrt().round() as i64).filter(|r| r * r == n);
    for k in 1i64.. {
        let found = [-1i64, 1].iter().find_map(|&s| {
            if one_mod_four {
                // (2h + k)^2 - d k^2 = 4 * (+-1)
                sq(d * k * k + 4 * s).filter(|r| (r - k) % 2 == 0).map(|r| ((r - k) / 2, k))
            } else {
                sq(d * k * k + s).map(|r| (r, k))
            }
        });
        if let Some(u) = found {
            return u;
        }
    }
    unreachable!()
}

#[test]
fn fundamental_units_match_brute_force() {
    for d in [2i64, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 29, 31, 33, 37, 41, 43, 46, 53, 61] {
        let (h, k) = fundamental_unit_coefficients(&BigInt::from(d));
        assert_eq!((h, k), (BigInt::from(pell_oracle(d).0), BigInt::from(pell_oracle(d).1)), "d = {d}");
    }
}

#[test]
fn class_numbers_from_forms() {
    // (discriminant, unit norm, h)
    let cases: &[(i64, i32, i64)] = &[
        (-3, 1, 1),
        (-4, 1, 1),
        (-20, 1, 2),
        (-23, 1, 3),
        (-56, 1, 4),
        (-84, 1, 4),
        (5, -1, 1),
        (8, -1, 1),
        (12, 1, 1),
        (40, -1, 2),
        (60, 1, 2),
        (229, -1, 3),
        (316, 1, 3),
    ];
    for &(disc, n, h) in cases {
        assert_eq!(class_number_from_forms(&BigInt::from(disc), n), BigInt::from(h), "disc {disc}");
    }
    assert_eq!(narrow_class_number_from_forms(&BigInt::from(12)), BigInt::from(2));
}

#[test]
fn field_class_numbers() {
    for (g, h) in [("x^2+5", 2), ("x^2-10", 2), ("x^2-79", 3), ("x^2+23", 3), ("x^2-x+6", 3)] {
        assert_eq!(field(g).class_number(), Some(&BigInt::from(h)), "{g}");
    }
}

#[test]
fn arithmetic_round_trip() {
    let k = field("x^2-x+6");
    let a = k.parse_element("3-2t").unwrap();
    let ai = k.inverse(&a).unwrap();
    assert_eq!(k.mul(&a, &ai), k.one());
    assert_eq!(k.char_poly(&a).degree(), Some(2));
    assert_eq!(k.char_poly(&a).coeff(0), k.norm(&a));
    assert!(matches!(k.inverse(&k.zero()), Err(Error::ZeroElement)));
}

#[test]
fn rationals_and_cubic_sidecar() {
    let k = NumberField::rationals();
    assert_eq!(k.degree(), 1);
    assert_eq!(k.discriminant(), &BigInt::one());
    let g = parse_defining_poly("x^3-2").unwrap();
    assert!(matches!(NumberField::new(g.clone(), FieldData::default()), Err(Error::MissingData(_))));
    let json: serde_json::Value = serde_json::from_str(
        r#"{"integral_basis": [["1","0","0"],["0","1","0"],["0","0","1"]],
            "units": {"torsion": {"element": ["-1","0","0"], "order": 2}, "fundamental": [["-1","1","0"]]},
            "class_number": "1"}"#,
    )
    .unwrap();
    let k = NumberField::new(g, parse_sidecar(&json).unwrap()).unwrap();
    assert_eq!(k.discriminant(), &BigInt::from(-108));
    assert_eq!(k.signature(), (1, 1));
    let bad: serde_json::Value = serde_json::from_str(
        r#"{"integral_basis": [["1","0","0"],["0","1","0"],["0","0","1"]],
            "units": {"torsion": {"element": ["-1","0","0"], "order": 2}, "fundamental": [["2","1","0"]]}}"#,
    )
    .unwrap();
    assert!(matches!(NumberField::new(parse_defining_poly("x^3-2").unwrap(), parse_sidecar(&bad).unwrap()), Err(Error::InvalidData(_))));
}

#[test]
fn quartic_irreducibility() {
    assert!(check_irreducible(&parse_defining_poly("x^4-10x^2+1").unwrap()).is_err());
    assert!(check_irreducible(&parse_defining_poly("x^4+x+1").unwrap()).is_ok());
    assert!(matches!(check_irreducible(&parse_defining_poly("(x^2+1)(x^2+3)").unwrap()), Err(Error::CannotCertify(_))));
}
