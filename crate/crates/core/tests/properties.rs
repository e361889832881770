use num_bigint::BigInt;
use proptest::prelude::*;

use bcwitt::field::{FieldElement, NumberField};
use bcwitt::ideal;
use bcwitt::witt::{ghost, unghost, witt_add, witt_mul, Integers, TruncationSet, WittVector};

fn elem(v: &[i64]) -> FieldElement {
    FieldElement::from_i64(v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norm_is_multiplicative(a in prop::collection::vec(-20i64..20, 2), b in prop::collection::vec(-20i64..20, 2), d in prop::sample::select(vec![-5i64, -1, 2, 3, 5, 13])) {
        let k = NumberField::from_str_poly(&format!("x^2{:+}", -d)).unwrap();
        let (x, y) = (elem(&a), elem(&b));
        prop_assert_eq!(k.norm(&k.mul(&x, &y)), k.norm(&x) * k.norm(&y));
    }

    #[test]
    fn ideal_inverse_round_trip(a in prop::collection::vec(-15i64..15, 2), b in prop::collection::vec(-15i64..15, 2)) {
        let k = NumberField::from_str_poly("x^2+5").unwrap();
        prop_assume!(a.iter().any(|&c| c != 0) && b.iter().any(|&c| c != 0));
        let i = ideal::from_generators(&k, &[elem(&a), elem(&b)]).unwrap();
        let back = ideal::mul(&k, &i, &ideal::inverse(&k, &i));
        prop_assert!(back.is_unit());
        prop_assert_eq!(ideal::div(&k, &ideal::mul(&k, &i, &i), &i), i.clone());
    }

    #[test]
    fn ideal_norm_multiplicative(a in 1i64..40, b in prop::collection::vec(-10i64..10, 2)) {
        let k = NumberField::from_str_poly("x^2+1").unwrap();
        prop_assume!(b.iter().any(|&c| c != 0));
        let i = ideal::from_integer(&k, &BigInt::from(a)).unwrap();
        let j = ideal::principal(&k, &elem(&b)).unwrap();
        prop_assert_eq!(ideal::mul(&k, &i, &j).norm(), i.norm() * j.norm());
    }

    #[test]
    fn ghost_round_trip(x in prop::collection::vec(-30i64..30, 6)) {
        let s = TruncationSet::divisors(12);
        let v = WittVector::new(s, x.iter().map(|&c| BigInt::from(c)).collect()).unwrap();
        prop_assert_eq!(unghost(&Integers, &ghost(&Integers, &v)).unwrap(), v);
    }

    #[test]
    fn witt_ring_is_commutative(x in prop::collection::vec(-9i64..9, 4), y in prop::collection::vec(-9i64..9, 4)) {
        let s = TruncationSet::divisors(8);
        let a = WittVector::new(s.clone(), x.iter().map(|&c| BigInt::from(c)).collect()).unwrap();
        let b = WittVector::new(s, y.iter().map(|&c| BigInt::from(c)).collect()).unwrap();
        prop_assert_eq!(witt_add(&Integers, &a, &b).unwrap(), witt_add(&Integers, &b, &a).unwrap());
        prop_assert_eq!(witt_mul(&Integers, &a, &b).unwrap(), witt_mul(&Integers, &b, &a).unwrap());
    }
}

#[test]
fn gaussian_counts_by_lattice_points() {
    // a(n) over Q(i) equals r_2(n) / 4
    let k = NumberField::from_str_poly("x^2+1").unwrap();
    let z = bcwitt::endo::zeta_coefficients(&k, 100, false).unwrap();
    for n in 1..=100i64 {
        let r2 = (-10..=10i64).flat_map(|a| (-10..=10i64).map(move |b| a * a + b * b)).filter(|&m| m == n).count() as u64;
        assert_eq!(z.get(n as u64).unwrap(), r2 / 4, "n = {n}");
    }
}
