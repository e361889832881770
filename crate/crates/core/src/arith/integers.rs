//! Integer utilities: primality, factorization, exact square roots.

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

/// Witnesses that make Miller-Rabin deterministic below 3.3 * 10^24, which
/// covers every 64-bit input.
const SMALL_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Additional random rounds above 2^64. Each round errs with probability at
/// most 1/4, so 64 rounds bound the error by 2^-128.
const RANDOM_ROUNDS: usize = 64;

fn miller_rabin_round(n: &BigUint, d: &BigUint, s: u32, a: &BigUint) -> bool {
    let one = BigUint::one();
    let n1 = n - &one;
    let mut x = a.modpow(d, n);
    if x == one || x == n1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n1 {
            return true;
        }
    }
    false
}

/// Primality test. Deterministic for `n < 2^64`; above that the test is
/// probabilistic with error below 2^-128 (the witness stream is seeded from
/// `n`, so results are reproducible).
pub fn is_prime(n: &BigInt) -> bool {
    if n.sign() != Sign::Plus {
        return false;
    }
    let n = n.magnitude();
    if let Some(small) = n.to_u64() {
        if small < 2 {
            return false;
        }
        for p in SMALL_WITNESSES {
            if small == p {
                return true;
            }
            if small % p == 0 {
                return false;
            }
        }
    }
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0) as u32;
    let d = &n1 >> s;
    for a in SMALL_WITNESSES {
        if !miller_rabin_round(n, &d, s, &BigUint::from(a)) {
            return false;
        }
    }
    if n.bits() <= 64 {
        return true;
    }
    let seed = n.iter_u64_digits().fold(0x9e37_79b9_7f4a_7c15u64, |h, w| h.rotate_left(7) ^ w);
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let two = BigUint::from(2u32);
    (0..RANDOM_ROUNDS).all(|_| {
        let a = rng.gen_biguint_range(&two, &n1);
        miller_rabin_round(n, &d, s, &a)
    })
}

pub fn is_prime_u64(n: u64) -> bool {
    is_prime(&BigInt::from(n))
}

/// Sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

fn pollard_rho(n: &BigInt, seed: u64) -> Option<BigInt> {
    let mut c = BigInt::from(seed + 1);
    for _ in 0..32 {
        let f = |x: &BigInt| (x * x + &c).mod_floor(n);
        let (mut x, mut y, mut d) = (BigInt::from(2), BigInt::from(2), BigInt::one());
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return Some(d);
        }
        c += 1;
    }
    None
}

/// Factors a nonzero integer into primes with multiplicities, sorted by prime.
/// The sign is ignored.
pub fn factor_integer(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    if n.is_zero() {
        return out;
    }
    let push = |p: BigInt, out: &mut Vec<(BigInt, u32)>| {
        if let Some(entry) = out.iter_mut().find(|(q, _)| *q == p) {
            entry.1 += 1;
        } else {
            out.push((p, 1));
        }
    };
    let mut p = 2u64;
    while p < 10_000 && !n.is_one() {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        while (&n % &bp).is_zero() {
            n /= &bp;
            push(bp.clone(), &mut out);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            push(m, &mut out);
            continue;
        }
        let d = (0u64..).find_map(|s| pollard_rho(&m, s)).expect("pollard rho terminates on composites");
        stack.push(&m / &d);
        stack.push(d);
    }
    out.sort();
    out
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative integer");
    n.sqrt()
}

/// Smallest integer `s` with `s*s >= n`, for `n >= 0`.
pub fn isqrt_ceil(n: &BigInt) -> BigInt {
    let s = isqrt(n);
    if &(&s * &s) == n {
        s
    } else {
        s + 1
    }
}

/// Squarefree part with sign: returns `(d, f)` with `n = f^2 * d` and `d` squarefree.
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    let mut d = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut f = BigInt::one();
    for (p, e) in factor_integer(n) {
        f *= num_traits::pow(p.clone(), (e / 2) as usize);
        if e % 2 == 1 {
            d *= p;
        }
    }
    (d, f)
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    while !n.is_zero() && (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

pub fn divisors_u64(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_small_agrees_with_sieve() {
        let sieve = primes_up_to(2000);
        for n in 0..2000u64 {
            assert_eq!(is_prime_u64(n), sieve.binary_search(&n).is_ok(), "n = {n}");
        }
    }

    #[test]
    fn primality_large() {
        // 2^89 - 1 is a Mersenne prime, 2^67 - 1 is composite.
        let m89 = (BigInt::one() << 89) - 1;
        let m67 = (BigInt::one() << 67) - 1;
        assert!(is_prime(&m89));
        assert!(!is_prime(&m67));
        // Strong pseudoprime to the first several bases.
        assert!(!is_prime(&BigInt::from(3_215_031_751u64)));
    }

    #[test]
    fn factorization_roundtrip() {
        for n in 1..3000i64 {
            let f = factor_integer(&BigInt::from(n));
            let prod: BigInt = f.iter().map(|(p, e)| num_traits::pow(p.clone(), *e as usize)).product();
            assert_eq!(prod, BigInt::from(n));
            assert!(f.iter().all(|(p, _)| is_prime(p)));
        }
        let big = BigInt::from(1_000_003u64) * BigInt::from(998_244_353u64);
        assert_eq!(factor_integer(&big).len(), 2);
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_decompose(&BigInt::from(-20)), (BigInt::from(-5), BigInt::from(2)));
        assert_eq!(squarefree_decompose(&BigInt::from(12)), (BigInt::from(3), BigInt::from(2)));
        assert_eq!(isqrt_ceil(&BigInt::from(10)), BigInt::from(4));
        assert_eq!(isqrt_ceil(&BigInt::from(9)), BigInt::from(3));
    }
}
