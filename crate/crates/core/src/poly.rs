//! Dense polynomial arithmetic used by the cyclotomic field layer.
//!
//! Polynomials are coefficient vectors indexed by degree with no trailing
//! zeros. Integer polynomials cover the cyclotomic polynomials Phi_m
//! (computed by exact division of x^m - 1 by the Phi_d over proper
//! divisors d of m); rational polynomials cover inversion via the extended
//! Euclidean algorithm modulo Phi_m.

use crate::nt;
use crate::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

pub(crate) fn trim_int(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

pub(crate) fn trim_rat(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim_int(out)
}

/// Exact division of integer polynomials, panicking on a nonzero remainder.
/// The divisor must be monic, which every cyclotomic polynomial is.
fn int_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(!den.is_empty() && den.last().unwrap().is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() < den.len() {
        assert!(trim_int(rem).is_empty(), "inexact polynomial division");
        return vec![];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = std::mem::replace(&mut rem[k], BigInt::zero());
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().take(dd).enumerate() {
            let sub = dj * &c;
            rem[k - dd + j] -= sub;
        }
        quot[k - dd] = c;
    }
    assert!(trim_int(rem).is_empty(), "inexact polynomial division");
    trim_int(quot)
}

/// The m-th cyclotomic polynomial Phi_m as integer coefficients, cached
/// per process. Concurrent reads are safe; writes are idempotent.
pub(crate) fn cyclotomic_polynomial(m: u64) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().unwrap().get(&m) {
        return p.clone();
    }
    let computed = compute_cyclotomic(m);
    let mut w = cache.write().unwrap();
    Arc::clone(w.entry(m).or_insert_with(|| Arc::new(computed)))
}

fn compute_cyclotomic(m: u64) -> Vec<BigInt> {
    assert!(m >= 1);
    if m == 1 {
        return vec![BigInt::from(-1), BigInt::one()];
    }
    // x^m - 1
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    let mut den = vec![BigInt::one()];
    for d in nt::divisors(m) {
        if d < m {
            den = int_mul(&den, &cyclotomic_polynomial(d));
        }
    }
    int_div_exact(&num, &den)
}

/// Quotient and remainder of rational polynomials, `den` nonzero.
pub(crate) fn rat_divrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let den = trim_rat(den.to_vec());
    assert!(!den.is_empty(), "division by zero polynomial");
    let mut rem = trim_rat(num.to_vec());
    let dd = den.len() - 1;
    let lead = den.last().unwrap().clone();
    if rem.len() <= dd {
        return (vec![], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let c = &rem[k] / &lead;
        rem[k] = Rational::zero();
        for (j, dj) in den.iter().take(dd).enumerate() {
            let sub = dj * &c;
            rem[k - dd + j] -= sub;
        }
        quot[k - dd] = c;
    }
    (trim_rat(quot), trim_rat(rem))
}

/// Extended gcd over Q[x]: returns (g, u) with u*a = g (mod b) and g the
/// monic gcd of a and b. Only the cofactor of `a` is tracked since the
/// single caller inverts `a` modulo the cyclotomic polynomial `b`.
pub(crate) fn rat_ext_gcd_mod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0 = trim_rat(a.to_vec());
    let mut r1 = trim_rat(b.to_vec());
    let mut u0 = vec![Rational::one()];
    let mut u1: Vec<Rational> = vec![];
    while !r1.is_empty() {
        let (q, r) = rat_divrem(&r0, &r1);
        let qa = rat_mul(&q, &u1);
        let unew = rat_sub(&u0, &qa);
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = unew;
    }
    // normalize gcd to be monic
    if let Some(lead) = r0.last().cloned() {
        if !lead.is_one() {
            for c in r0.iter_mut() {
                *c /= &lead;
            }
            for c in u0.iter_mut() {
                *c /= &lead;
            }
        }
    }
    (r0, u0)
}

pub(crate) fn rat_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim_rat(out)
}

pub(crate) fn rat_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), Rational::zero());
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    trim_rat(out)
}

/// Size proxy for test assertions: largest absolute coefficient.
#[cfg(test)]
pub(crate) fn max_coeff(p: &[BigInt]) -> BigInt {
    use num_traits::Signed;
    p.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi_vec(m: u64) -> Vec<i64> {
        cyclotomic_polynomial(m)
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn base_cases() {
        assert_eq!(phi_vec(1), vec![-1, 1]);
        assert_eq!(phi_vec(2), vec![1, 1]);
        assert_eq!(phi_vec(4), vec![1, 0, 1]);
    }

    #[test]
    fn phi_6_by_division() {
        // independent route: (x^6 - 1) / (Phi_1 Phi_2 Phi_3) computed inline
        let p1 = vec![BigInt::from(-1), BigInt::from(1)];
        let p2 = vec![BigInt::from(1), BigInt::from(1)];
        let p3 = vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)];
        let mut num = vec![BigInt::zero(); 7];
        num[0] = BigInt::from(-1);
        num[6] = BigInt::from(1);
        let den = int_mul(&int_mul(&p1, &p2), &p3);
        let q = int_div_exact(&num, &den);
        assert_eq!(q, vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]);
        assert_eq!(phi_vec(6), vec![1, -1, 1]);
    }

    #[test]
    fn degree_is_phi_and_divides() {
        for m in 1..=64u64 {
            let p = cyclotomic_polynomial(m);
            assert_eq!(p.len() as u64 - 1, crate::nt::euler_phi(m), "deg Phi_{m}");
            assert!(p.last().unwrap().is_one());
            // Phi_m divides x^m - 1
            let mut xm = vec![BigInt::zero(); m as usize + 1];
            xm[0] = BigInt::from(-1);
            xm[m as usize] = BigInt::from(1);
            let _ = int_div_exact(&xm, &p);
        }
    }

    #[test]
    fn sparse_orders_have_small_coeffs() {
        assert!(max_coeff(&cyclotomic_polynomial(60)) <= BigInt::from(1));
        assert!(max_coeff(&cyclotomic_polynomial(192)) <= BigInt::from(1));
    }
}
