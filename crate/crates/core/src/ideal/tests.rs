use super::*;

fn field(s: &str) -> NumberField {
    NumberField::from_str_poly(s).unwrap()
}

fn ideal(k: &NumberField, gens: &[&str]) -> Ideal {
    let xs: Vec<FieldElement> = gens.iter().map(|g| k.parse_element(g).unwrap()).collect();
    from_generators(k, &xs).unwrap()
}

fn z(n: i64) -> BigInt {
    BigInt::from(n)
}

#[test]
fn unit_ideal_is_identity() {
    for g in ["x", "x^2+1", "x^2-5"] {
        let k = field(g);
        let o = ideal(&k, &["1"]);
        assert_eq!(o.basis(), &IntMatrix::identity(k.degree()));
        assert!(o.is_unit());
    }
}

#[test]
fn generators_and_norms() {
    let k = field("x^2+5");
    let p = ideal(&k, &["2", "1+t"]);
    assert_eq!(p.norm_int(), z(2));
    let p2 = mul(&k, &p, &p);
    assert_eq!(p2.norm_int(), z(4));
    assert_eq!(p2, ideal(&k, &["2"]));
    let g = field("x^2+1");
    assert_eq!(ideal(&g, &["2+t"]).basis().det().abs(), z(5));
    assert!(matches!(from_generators(&g, &[g.zero()]), Err(Error::ZeroIdeal)));
}

#[test]
fn products_and_inverses() {
    let k = field("x^2+1");
    assert_eq!(mul(&k, &ideal(&k, &["1+t"]), &ideal(&k, &["1-t"])), ideal(&k, &["2"]));
    let a = ideal(&k, &["5", "2+t"]);
    let ai = inverse(&k, &a);
    assert!(!ai.is_integral());
    assert!(mul(&k, &a, &ai).is_unit());
    assert_eq!(ai.norm(), BigRational::new(z(1), a.norm_int()));
    let half = ideal(&k, &["1/2"]);
    assert_eq!(inverse(&k, &half), ideal(&k, &["2"]));
    assert_eq!(pow(&k, &half, -2), ideal(&k, &["4"]));
}

#[test]
fn fractional_normalization() {
    let k = field("x^2-2");
    let a = ideal(&k, &["2/6", "t/3"]);
    assert_eq!(a.den(), &z(3));
    assert!(a.contains(&k.parse_element("1/3").unwrap()));
    assert!(!a.contains(&k.parse_element("1/6").unwrap()));
}

#[test]
fn factorization_examples() {
    let k = field("x^2+1");
    let f5 = factor_ideal(&k, &ideal(&k, &["5"])).unwrap();
    assert_eq!(f5.len(), 2);
    let mut got: Vec<Ideal> = f5
        .iter()
        .map(|(p, e)| {
            assert_eq!(*e, 1);
            p.ideal.clone()
        })
        .collect();
    got.sort();
    let mut want = vec![ideal(&k, &["2+t"]), ideal(&k, &["2-t"])];
    want.sort();
    assert_eq!(got, want);
    let f2 = factor_ideal(&k, &ideal(&k, &["2"])).unwrap();
    assert_eq!(f2.len(), 1);
    assert_eq!(f2[0].0.ideal, ideal(&k, &["1+t"]));
    assert_eq!((f2[0].1, f2[0].0.e, f2[0].0.f), (2, 2, 1));
    assert!(factor_ideal(&k, &unit_ideal(&k)).unwrap().is_empty());
    let f3 = primes_above(&k, &z(3)).unwrap();
    assert_eq!((f3.len(), f3[0].f, f3[0].e), (1, 2, 1));
}

#[test]
fn factoring_fractional_ideals() {
    let k = field("x^2+5");
    let a = ideal(&k, &["3/2"]);
    let f = factor_ideal(&k, &a).unwrap();
    let mut prod = unit_ideal(&k);
    for (p, e) in &f {
        prod = mul(&k, &prod, &pow(&k, &p.ideal, *e));
    }
    assert_eq!(prod, a);
    assert!(f.iter().any(|(p, e)| p.p == z(2) && *e == -2));
}

#[test]
fn enumeration_examples() {
    let q = field("x");
    let ids = enumerate_ideals(&q, 10).unwrap();
    assert_eq!(ids.len(), 10);
    for (i, a) in ids.iter().enumerate() {
        assert_eq!(a.norm_int(), z(i as i64 + 1));
    }
    let k = field("x^2+1");
    let ids = enumerate_ideals(&k, 5).unwrap();
    let mut want = vec![ideal(&k, &["1"]), ideal(&k, &["1+t"]), ideal(&k, &["2"]), ideal(&k, &["2+t"]), ideal(&k, &["2-t"])];
    want.sort_by_key(|a| (a.norm_int(), a.clone()));
    assert_eq!(ids, want);
    assert_eq!(enumerate_ideals(&k, 1).unwrap(), vec![unit_ideal(&k)]);
}

#[test]
fn divisor_examples() {
    let q = field("x");
    let ds = divisors_of(&q, &ideal(&q, &["6"])).unwrap();
    let norms: Vec<BigInt> = ds.iter().map(Ideal::norm_int).collect();
    assert_eq!(norms, vec![z(1), z(2), z(3), z(6)]);
    let k = field("x^2+1");
    let ds = divisors_of(&k, &ideal(&k, &["2"])).unwrap();
    assert_eq!(ds, vec![unit_ideal(&k), ideal(&k, &["1+t"]), ideal(&k, &["2"])]);
    assert_eq!(divisors_of(&k, &unit_ideal(&k)).unwrap(), vec![unit_ideal(&k)]);
}

#[test]
fn residue_rings() {
    let k = field("x^2+1");
    let r = ResidueRing::new(&ideal(&k, &["2"])).unwrap();
    assert_eq!(r.elements().len(), 4);
    assert_eq!(r.units(&k).len(), 2);
    let r = ResidueRing::new(&ideal(&k, &["3"])).unwrap();
    assert_eq!(r.units(&k).len(), 8);
    let x = k.parse_element("1+t").unwrap().integer_coords().unwrap();
    assert_eq!(r.unit_order(&k, &x).unwrap(), 8);
    let xi = r.inverse(&k, &x).unwrap();
    assert_eq!(r.mul(&k, &x, &xi), r.one(&k));
    assert_eq!(ideal(&k, &["6", "3+3t"]).min_integer(&k), z(6));
    assert_eq!(ideal(&k, &["1+t"]).min_integer(&k), z(2));
}
