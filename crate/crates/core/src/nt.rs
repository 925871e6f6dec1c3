//! Small number-theoretic helpers shared across modules.

use num_integer::Integer;

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Divisors of `n` in ascending order.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i != n / i {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out.sort_unstable();
    out
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut ps = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            ps.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        ps.push(n);
    }
    ps
}

pub(crate) fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for p in prime_factors(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

pub(crate) fn squarefree_part(n: u64) -> u64 {
    assert!(n > 0);
    let mut n = n;
    let mut out = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            if e % 2 == 1 {
                out *= p;
            }
        }
        p += 1;
    }
    out * n
}

/// Inverse of `a` modulo `m`, if it exists.
pub(crate) fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let e = (a as i128 % m as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

/// Residues in `1..=m` coprime to `m` (so `U(Z_m)`, with `m = 1` giving `{1}`).
pub(crate) fn units(m: u64) -> Vec<u64> {
    if m == 1 {
        return vec![1];
    }
    (1..=m).filter(|a| gcd(*a, m) == 1).collect()
}

/// Lift `a` (coprime to `from`) to a residue `a' = a (mod from)` coprime to
/// `to`, where `from` divides `to`. Used to extend a Galois automorphism of
/// a subfield to the ambient cyclotomic field.
pub(crate) fn lift_coprime(a: u64, from: u64, to: u64) -> u64 {
    debug_assert_eq!(to % from, 0);
    debug_assert_eq!(gcd(a % from + if from == 1 { 1 } else { 0 }, from), 1);
    if from == to {
        return a % to;
    }
    // CRT: a' = a mod from, a' = 1 mod q for every prime power q | to with
    // its prime not dividing `from`.
    let mut extra = 1u64;
    for p in prime_factors(to) {
        if from % p != 0 {
            let mut q = 1;
            let mut t = to;
            while t % p == 0 {
                q *= p;
                t /= p;
            }
            extra *= q;
        }
    }
    if extra == 1 {
        // Same primes: any lift congruent to a mod `from` works; a itself
        // may share a factor with to/from, so search the arithmetic
        // progression (it contains units by Dirichlet, found quickly).
        let mut c = a % to;
        loop {
            if gcd(c, to) == 1 {
                return c;
            }
            c = (c + from) % to;
        }
    }
    // a' = a + from * k = 1 mod extra  =>  k = (1 - a) * from^{-1} mod extra
    let finv = mod_inverse(from % extra, extra).expect("from and extra coprime");
    let k = ((1 + extra as i128 - (a % extra) as i128) % extra as i128) as u64 * finv % extra;
    let modulus = from * extra;
    let cand = (a + from % modulus * k % modulus) % modulus;
    // cand is coprime to from-part and = 1 mod extra; extend to full `to`
    let mut c = cand % to;
    loop {
        if gcd(c, to) == 1 {
            return c;
        }
        c = (c + modulus) % to;
    }
}
