use num_bigint::BigInt;

use super::*;
use crate::arith::integers::{divisors_u64, euler_phi, gcd_u64};
use crate::ideal::from_integer;

fn q() -> std::sync::Arc<NumberField> {
    NumberField::rationals()
}

fn modulus(k: &NumberField, n: i64) -> Ideal {
    from_integer(k, &BigInt::from(n)).unwrap()
}

#[test]
fn spectrum_is_regular() {
    let k = q();
    let s = spectrum(&k, &modulus(&k, 4)).unwrap();
    assert_eq!(s.len(), 4);
    assert_eq!(s.action(), s.monoid().table());
    let one = crate::ideal::unit_ideal(&k);
    for x in 0..4 {
        assert_eq!(s.act(&k, &one, x).unwrap(), x);
    }
}

#[test]
fn level_maps_over_q() {
    let k = q();
    let s2 = spectrum(&k, &modulus(&k, 2)).unwrap();
    let s6 = spectrum(&k, &modulus(&k, 6)).unwrap();
    let s12 = spectrum(&k, &modulus(&k, 12)).unwrap();
    let p62 = level_map(&k, &s6, &s2).unwrap();
    let p126 = level_map(&k, &s12, &s6).unwrap();
    let p122 = level_map(&k, &s12, &s2).unwrap();
    for x in 0..s12.len() {
        assert_eq!(p62[p126[x]], p122[x]);
    }
    assert_eq!(level_map(&k, &s6, &s6).unwrap(), (0..6).collect::<Vec<_>>());
    // residues mod 6 reduce to residues mod 2
    for (x, e) in s6.monoid().elements().iter().enumerate() {
        let m = e.repr.min_integer(&k);
        let target = &s2.monoid().elements()[p62[x]].repr.min_integer(&k);
        assert_eq!(&m % 2, target % 2);
    }
    assert!(level_map(&k, &s2, &s6).is_err());
}

#[test]
fn ggc_small_levels() {
    for n in [1u64, 2, 3, 4, 6, 8, 12] {
        let w = ggc_check_q(n).unwrap().expect("bijection");
        let count: u64 = divisors_u64(n).iter().map(|&d| euler_phi(d)).sum();
        assert_eq!(w.homs.len() as u64, count);
        assert_eq!(count, n);
        let mut seen = w.bijection.clone();
        seen.sort_unstable();
        assert_eq!(seen, (0..n as usize).collect::<Vec<_>>());
    }
    assert!(ggc_check_q(31).is_err());
}

#[test]
fn ggc_bijection_respects_orders() {
    // the hom zeta_d -> zeta_d^j corresponds to the residue j n / d mod n
    let k = q();
    let w = ggc_check_q(12).unwrap().unwrap();
    let s = spectrum(&k, &modulus(&k, 12)).unwrap();
    for (&(d, _), &x) in w.homs.iter().zip(&w.bijection) {
        let r = s.monoid().elements()[x].repr.min_integer(&k);
        let r: u64 = r.try_into().unwrap();
        assert_eq!(12 / gcd_u64(r % 12, 12), d);
    }
}

#[test]
fn equivariant_bijection_rejects_mismatch() {
    let k = q();
    let s = spectrum(&k, &modulus(&k, 3)).unwrap();
    let t = DRSet::new(s.monoid().clone(), vec![vec![0, 1, 2]; 3]).unwrap();
    assert!(equivariant_bijection(&t, &s).is_none());
    assert!(equivariant_bijection(&s, &s).is_some());
}

#[test]
fn crossed_relations_hold() {
    let k = q();
    let checks = verify_relations(&k, &modulus(&k, 6), 10).unwrap();
    assert!(checks.len() > 100);
    assert!(checks.iter().all(|c| c.holds), "{:?}", checks.iter().find(|c| !c.holds));
    let g = NumberField::from_str_poly("x^2+1").unwrap();
    let checks = verify_relations(&g, &modulus(&g, 2), 10).unwrap();
    assert!(checks.iter().all(|c| c.holds));
}

#[test]
fn crossed_ops_basics() {
    let k = q();
    let ops = crossed_ops(&k, &modulus(&k, 6), 10).unwrap();
    assert_eq!(ops.len(), 10);
    let id = crate::arith::matrix::IntMatrix::identity(6);
    assert_eq!(ops[0].mu.matrix, id);
    assert_eq!(ops[0].sigma.matrix, id);
    let two = &ops[1];
    assert_eq!(two.e.matrix.mul(&two.e.matrix), two.e.matrix);
    let trace: usize = (0..6).filter(|&i| two.e.matrix[(i, i)] == BigInt::from(1)).count();
    assert_eq!(trace, 3);
}

#[test]
fn sections_can_fail() {
    let k = q();
    assert!(matches!(Endomotive::new(&k, &modulus(&k, 4)), Err(crate::Error::Unsupported(_))));
}

#[test]
fn zeta_examples() {
    let k = q();
    let z = zeta_coefficients(&k, 30, true).unwrap();
    assert!(z.counts.iter().all(|&c| c == 1));
    assert_eq!(z.euler_agrees(), Some(true));
    let g = NumberField::from_str_poly("x^2+1").unwrap();
    let z = zeta_coefficients(&g, 8, false).unwrap();
    assert_eq!(z.counts, vec![1, 1, 0, 1, 2, 0, 0, 1]);
    let m5 = NumberField::from_str_poly("x^2+5").unwrap();
    let z = zeta_coefficients(&m5, 60, true).unwrap();
    assert_eq!((z.get(2), z.get(3), z.get(5)), (Some(1), Some(2), Some(1)));
    assert_eq!(z.euler_agrees(), Some(true));
}

#[test]
fn gaussian_counts_match_character_sum() {
    let g = NumberField::from_str_poly("x^2+1").unwrap();
    let z = zeta_coefficients(&g, 200, false).unwrap();
    for n in 1..=200u64 {
        let chi: i64 = divisors_u64(n)
            .iter()
            .map(|&d| match d % 4 {
                1 => 1,
                3 => -1,
                _ => 0,
            })
            .sum();
        assert_eq!(z.get(n).unwrap() as i64, chi, "n = {n}");
    }
}

#[test]
fn zeta_multiplicative() {
    let k = NumberField::from_str_poly("x^2-3").unwrap();
    let z = zeta_coefficients(&k, 120, true).unwrap();
    assert_eq!(z.euler_agrees(), Some(true));
    for m in 1..=120u64 {
        for n in 1..=120 / m {
            if gcd_u64(m, n) == 1 {
                assert_eq!(z.get(m * n), Some(z.get(m).unwrap() * z.get(n).unwrap()));
            }
        }
    }
}
