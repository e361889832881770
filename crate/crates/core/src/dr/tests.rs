use super::*;
use crate::field::FieldElement;

fn field(s: &str) -> NumberField {
    NumberField::from_str_poly(s).unwrap()
}

fn id(k: &NumberField, gens: &[&str]) -> Ideal {
    let xs: Vec<FieldElement> = gens.iter().map(|g| k.parse_element(g).unwrap()).collect();
    ideal::from_generators(k, &xs).unwrap()
}

fn int(k: &NumberField, n: i64) -> Ideal {
    ideal::from_integer(k, &BigInt::from(n)).unwrap()
}

#[test]
fn relation_examples() {
    let q = field("x");
    let f = int(&q, 6);
    assert!(dr_equivalent(&q, &int(&q, 1), &int(&q, 7), &f).unwrap());
    assert!(dr_relation(&q, &int(&q, 8), &int(&q, 2), &f).unwrap());
    assert!(dr_equivalent(&q, &int(&q, 5), &int(&q, 5), &f).unwrap());
    assert!(!dr_equivalent(&q, &int(&q, 1), &int(&q, 5), &f).unwrap());
    assert!(!dr_equivalent(&q, &int(&q, 2), &int(&q, 3), &f).unwrap());
}

/// Residue oracle: `DR_(n)` over Q is `(Z/n, *)` via `(m) -> m mod n`.
fn check_rational(m: &DRMonoid, n: i64) {
    let q = field("x");
    assert_eq!(m.len() as i64, n);
    let mut to_res = vec![0i64; m.len()];
    for r in 0..n {
        let a = int(&q, if r == 0 { n } else { r });
        to_res[m.classify(&q, &a).unwrap()] = r;
    }
    let mut seen = to_res.clone();
    seen.sort();
    assert_eq!(seen, (0..n).collect::<Vec<_>>());
    for i in 0..m.len() {
        for j in 0..m.len() {
            assert_eq!(to_res[m.mul(i, j)], to_res[i] * to_res[j] % n);
        }
    }
}

#[test]
fn rational_six_all_constructions() {
    let q = field("x");
    let f = int(&q, 6);
    let a = dr_quotient(&q, &f, 1 << 12).unwrap();
    let b = dr_structural(&q, &f).unwrap();
    let c = dr_fiber_product(&q, &f).unwrap();
    for m in [&a, &b, &c] {
        m.check_laws().unwrap();
        check_rational(m, 6);
    }
    let mut sizes: Vec<usize> = b.components().iter().map(|(_, v)| v.len()).collect();
    sizes.sort();
    assert_eq!(sizes, vec![1, 1, 2, 2]);
    isomorphism(&q, &a, &b).unwrap();
    isomorphism(&q, &a, &c).unwrap();
    assert_eq!(a.idempotents().len(), 4);
    let five = a.classify(&q, &int(&q, 5)).unwrap();
    assert_eq!(a.act(&q, &int(&q, 5), a.identity()).unwrap(), five);
    assert_eq!(a.act(&q, &int(&q, 1), five).unwrap(), five);
}

#[test]
fn gaussian_two() {
    let k = field("x^2+1");
    let f = id(&k, &["2"]);
    let a = dr_quotient(&k, &f, 1 << 12).unwrap();
    let b = dr_structural(&k, &f).unwrap();
    let c = dr_fiber_product(&k, &f).unwrap();
    assert_eq!((a.len(), b.len(), c.len()), (3, 3, 3));
    isomorphism(&k, &a, &b).unwrap();
    isomorphism(&k, &a, &c).unwrap();
    let sizes: Vec<usize> = b.components().iter().map(|(_, v)| v.len()).collect();
    assert_eq!(sizes, vec![1, 1, 1]);
}

#[test]
fn trivial_modulus() {
    for g in ["x", "x^2+1", "x^2+5"] {
        let k = field(g);
        let one = int(&k, 1);
        let b = dr_structural(&k, &one).unwrap();
        assert_eq!(BigInt::from(b.len()), ray_class_group_avoiding(&k, &one, true, &one).unwrap().order());
        let c = dr_fiber_product(&k, &one).unwrap();
        assert_eq!(c.len(), b.len());
    }
}

#[test]
fn rational_four_fiber_product() {
    let q = field("x");
    let c = dr_fiber_product(&q, &int(&q, 4)).unwrap();
    check_rational(&c, 4);
    assert_eq!(c.convention(), Some(ActionConvention::Stated));
}

#[test]
fn projections() {
    let q = field("x");
    let d12 = dr_structural(&q, &int(&q, 12)).unwrap();
    let d6 = dr_structural(&q, &int(&q, 6)).unwrap();
    let d3 = dr_structural(&q, &int(&q, 3)).unwrap();
    let d2 = dr_structural(&q, &int(&q, 2)).unwrap();
    let p63 = dr_project(&q, &d6, &d3).unwrap();
    for r in 0..6i64 {
        let x = d6.classify(&q, &int(&q, if r == 0 { 6 } else { r })).unwrap();
        let y = d3.classify(&q, &int(&q, if r % 3 == 0 { 3 } else { r % 3 })).unwrap();
        assert_eq!(p63[x], y);
    }
    let id6 = dr_project(&q, &d6, &d6).unwrap();
    assert_eq!(id6, (0..6).collect::<Vec<_>>());
    let p12_6 = dr_project(&q, &d12, &d6).unwrap();
    let p6_2 = dr_project(&q, &d6, &d2).unwrap();
    let p12_2 = dr_project(&q, &d12, &d2).unwrap();
    for i in 0..d12.len() {
        assert_eq!(p6_2[p12_6[i]], p12_2[i]);
    }
    assert!(matches!(dr_project(&q, &d6, &d12), Err(Error::NotDivisor(..))));
}

#[test]
fn equivalence_is_an_equivalence_relation() {
    let q = field("x");
    let ids = ideal::enumerate_ideals(&q, 30).unwrap();
    for n in [4, 6] {
        let f = int(&q, n);
        let rel: Vec<Vec<bool>> = ids.iter().map(|a| ids.iter().map(|b| dr_relation(&q, a, b, &f).unwrap()).collect()).collect();
        for i in 0..ids.len() {
            assert!(rel[i][i]);
            for j in 0..ids.len() {
                assert_eq!(rel[i][j], rel[j][i]);
                for l in 0..ids.len() {
                    if rel[i][j] && rel[j][l] {
                        assert!(rel[i][l]);
                    }
                }
            }
        }
    }
}

#[test]
fn real_quadratic_structural_matches_quotient() {
    let k = field("x^2-3");
    let f = id(&k, &["2"]);
    let a = dr_quotient(&k, &f, 1 << 12).unwrap();
    let b = dr_structural(&k, &f).unwrap();
    let c = dr_fiber_product(&k, &f).unwrap();
    a.check_laws().unwrap();
    isomorphism(&k, &a, &b).unwrap();
    isomorphism(&k, &a, &c).unwrap();
}
