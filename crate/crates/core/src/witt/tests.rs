use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use super::*;

fn z(n: i64) -> BigInt {
    BigInt::from(n)
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| z(x)).collect()
}

fn random_witt(rng: &mut ChaCha20Rng, set: &TruncationSet) -> WittVector<BigInt> {
    WittVector::new(set.clone(), (0..set.len()).map(|_| z(rng.gen_range(-5..=5))).collect()).unwrap()
}

#[test]
fn truncation_sets() {
    assert_eq!(TruncationSet::divisors(12).elems(), &[1, 2, 3, 4, 6, 12]);
    assert!(matches!(TruncationSet::new([1, 4]), Err(Error::Truncation(_))));
    assert_eq!(TruncationSet::divisors(8).quotient(2).unwrap().elems(), &[1, 2, 4]);
    assert!(TruncationSet::divisors(8).quotient(3).is_err());
}

#[test]
fn ghost_examples() {
    let s = TruncationSet::divisors(4);
    let t = teichmuller(&Integers, &z(2), &s);
    assert_eq!(ghost(&Integers, &t).w, ints(&[2, 4, 16]));
    let s2 = TruncationSet::divisors(2);
    let w = GhostVector::new(s2.clone(), vec![num_rational::BigRational::from_integer(z(2)); 2]).unwrap();
    let x = unghost(&Rationals, &w).unwrap();
    assert_eq!(x.x, vec![num_rational::BigRational::from_integer(z(2)), num_rational::BigRational::from_integer(z(-1))]);
    let bad = GhostVector::new(s2.clone(), ints(&[0, 1])).unwrap();
    assert_eq!(unghost(&Integers, &bad), Err(Error::NonIntegral(2)));
}

#[test]
fn dwork_examples() {
    let s = TruncationSet::divisors(4);
    assert!(dwork_member(&Integers, &GhostVector::new(s.clone(), ints(&[1, 1, 1])).unwrap()).unwrap());
    assert!(!dwork_member(&Integers, &GhostVector::new(TruncationSet::divisors(2), ints(&[0, 1])).unwrap()).unwrap());
    let x = WittVector::new(s.clone(), ints(&[1, 1, 1])).unwrap();
    let g = ghost(&Integers, &x);
    assert_eq!(g.w, ints(&[1, 3, 7]));
    assert!(dwork_member(&Integers, &g).unwrap());
}

#[test]
fn dwork_matches_integrality() {
    let s = TruncationSet::divisors(24);
    let mut rng = ChaCha20Rng::seed_from_u64(3);
    for _ in 0..200 {
        let w = GhostVector::new(s.clone(), (0..s.len()).map(|_| z(rng.gen_range(-3..=3))).collect()).unwrap();
        assert_eq!(dwork_member(&Integers, &w).unwrap(), unghost(&Integers, &w).is_ok());
    }
}

#[test]
fn ring_examples() {
    let s2 = TruncationSet::divisors(2);
    let one = witt_one(&Integers, &s2);
    assert_eq!(witt_add(&Integers, &one, &one).unwrap().x, ints(&[2, -1]));
    let p = witt_mul(&Integers, &teichmuller(&Integers, &z(2), &s2), &teichmuller(&Integers, &z(3), &s2)).unwrap();
    assert_eq!(p, teichmuller(&Integers, &z(6), &s2));
    assert_eq!(ghost(&Integers, &p).w, ints(&[6, 36]));
    assert!(witt_add(&Integers, &one, &witt_one(&Integers, &TruncationSet::divisors(4))).is_err());
}

#[test]
fn frobenius_and_verschiebung() {
    let s = TruncationSet::divisors(12);
    let mut rng = ChaCha20Rng::seed_from_u64(5);
    for _ in 0..20 {
        let x = random_witt(&mut rng, &s);
        for m in [2u64, 3] {
            let fv = frobenius(&Integers, m, &verschiebung(&Integers, m, &x).unwrap()).unwrap();
            assert_eq!(fv, witt_scale(&Integers, &x, &z(m as i64)).unwrap());
        }
        let f6 = frobenius(&Integers, 6, &x).unwrap();
        let f23 = frobenius(&Integers, 2, &frobenius(&Integers, 3, &x).unwrap()).unwrap();
        assert_eq!(f6, f23);
        let v6 = verschiebung(&Integers, 6, &x).unwrap();
        let v23 = verschiebung(&Integers, 2, &verschiebung(&Integers, 3, &x).unwrap()).unwrap();
        assert_eq!(v6, v23);
    }
    let w = GhostVector::new(TruncationSet::divisors(4), ints(&[5, 6, 7])).unwrap();
    assert_eq!(ghost_frobenius(2, &w).unwrap().w, ints(&[6, 7]));
}

#[test]
fn frobenius_congruence_on_divisors_of_24() {
    let s = TruncationSet::divisors(24);
    let mut rng = ChaCha20Rng::seed_from_u64(11);
    let mut coordinatewise_fails = false;
    for _ in 0..30 {
        let x = random_witt(&mut rng, &s);
        for p in [2u64, 3] {
            assert!(frobenius_congruence(&Integers, p, &x).unwrap());
            let fx = frobenius(&Integers, p, &x).unwrap();
            let xp = witt_pow(&Integers, &x.restrict(&fx.set).unwrap(), p).unwrap();
            let d = witt_sub(&Integers, &fx, &xp).unwrap();
            if d.x.iter().any(|c| !(c % z(p as i64)).is_zero()) {
                coordinatewise_fails = true;
            }
        }
    }
    // the difference lies in p W(Z) but is not coordinatewise divisible by p
    assert!(coordinatewise_fails);
    let s2 = TruncationSet::divisors(2);
    for _ in 0..50 {
        let x = random_witt(&mut rng, &s2);
        let fx = frobenius(&Integers, 2, &x).unwrap();
        let xp = witt_pow(&Integers, &x.restrict(&fx.set).unwrap(), 2).unwrap();
        let d = witt_sub(&Integers, &fx, &xp).unwrap();
        assert!(d.x.iter().all(|c| (c % z(2)).is_zero()));
    }
}

#[test]
fn teichmuller_multiplicative() {
    let s = TruncationSet::divisors(24);
    for (a, b) in [(2, 3), (-1, 5), (0, 7), (4, -4)] {
        let ta = teichmuller(&Integers, &z(a), &s);
        let tb = teichmuller(&Integers, &z(b), &s);
        assert_eq!(witt_mul(&Integers, &ta, &tb).unwrap(), teichmuller(&Integers, &z(a * b), &s));
    }
}

#[test]
fn cyclotomic_rings() {
    assert_eq!(cyclotomic_polynomial(1).coeffs(), &ints(&[-1, 1])[..]);
    assert_eq!(cyclotomic_polynomial(6).coeffs(), &ints(&[1, -1, 1])[..]);
    assert_eq!(cyclotomic_polynomial(12).coeffs(), &ints(&[1, 0, -1, 0, 1])[..]);
    let r = CyclotomicRing::new(5);
    let z5 = r.zeta_pow(1);
    assert_eq!(r.pow(&z5, 5), r.one());
    let s2 = r.sigma(2, &z5).unwrap();
    let s3 = r.sigma(3, &s2).unwrap();
    assert_eq!(s3, r.sigma(2, &r.sigma(3, &z5).unwrap()).unwrap());
    assert!(r.sigma(5, &z5).is_err());
    assert!(cyclotomic_frobenius_check(5, 2, 10, 1).unwrap());
    assert!(cyclotomic_frobenius_check(1, 7, 10, 1).unwrap());
    assert!(cyclotomic_frobenius_check(4, 3, 10, 1).unwrap());
    assert!(cyclotomic_frobenius_check(4, 2, 10, 1).is_err());
}

#[test]
fn periodicity_examples() {
    let s = TruncationSet::divisors(8);
    let c = GhostVector::new(s.clone(), vec![z(3); s.len()]).unwrap();
    let x = unghost(&Integers, &c).unwrap();
    for n in [1, 2, 3, 4, 6] {
        assert!(!matches!(is_periodic(&Integers, &x, n).unwrap(), Periodicity::NotPeriodic { .. }));
    }
    let t = teichmuller(&Integers, &z(-1), &s);
    assert!(matches!(is_periodic(&Integers, &t, 2).unwrap(), Periodicity::Periodic { .. }));
    let s6 = TruncationSet::divisors(6);
    let t2 = teichmuller(&Integers, &z(2), &s6);
    assert_eq!(is_periodic(&Integers, &t2, 2).unwrap(), Periodicity::NotPeriodic { a: 1, b: 3 });
    let tiny = TruncationSet::divisors(1);
    assert_eq!(is_periodic(&Integers, &teichmuller(&Integers, &z(2), &tiny), 5).unwrap(), Periodicity::Vacuous);
}

#[test]
fn periodic_over_cyclotomic() {
    let r = CyclotomicRing::new(3);
    let s = TruncationSet::divisors(12);
    let t = teichmuller(&r, &r.zeta_pow(1), &s);
    assert!(matches!(is_periodic(&r, &t, 3).unwrap(), Periodicity::Periodic { .. }));
    let sum = witt_add(&r, &t, &t).unwrap();
    assert!(matches!(is_periodic(&r, &sum, 3).unwrap(), Periodicity::Periodic { .. }));
    let _ = BigInt::one();
}

#[test]
fn rank_examples() {
    use crate::field::NumberField;
    let q = NumberField::rationals();
    let r = periodic_rank(&q, &crate::ideal::from_integer(&q, &z(6)).unwrap()).unwrap();
    assert_eq!((r.rank.clone(), r.dr_size), (z(6), 6));
    let k = NumberField::from_str_poly("x^2+1").unwrap();
    let r = periodic_rank(&k, &crate::ideal::from_integer(&k, &z(2)).unwrap()).unwrap();
    assert_eq!(r.rank, z(3));
    let k = NumberField::from_str_poly("x^2+5").unwrap();
    let r = periodic_rank(&k, &crate::ideal::from_integer(&k, &z(1)).unwrap()).unwrap();
    assert_eq!(r.rank, z(2));
}
