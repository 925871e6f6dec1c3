//! Exact arithmetic in cyclotomic fields Q_M.
//!
//! A [`CycloNum`] is an element of Q_M = Q(zeta_M) stored in the power
//! basis zeta_M^0 .. zeta_M^{phi(M)-1} with arbitrary-precision rational
//! coefficients, fully reduced modulo the M-th cyclotomic polynomial.
//! Canonical form makes equality a coefficient comparison. All operations
//! are pure; per-order reduction tables are cached process-wide behind a
//! lock that tolerates concurrent idempotent writes.
//!
//! The numeric embedding zeta_M -> exp(2*pi*i/M) is provided for display
//! and for locating root-of-unity candidates; every verdict that matters
//! is confirmed by exact comparison.

use crate::nt;
use crate::poly;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

/// Arbitrary-precision rational number, always reduced with positive
/// denominator (guaranteed by the backing implementation).
pub type Rational = num_rational::BigRational;

pub(crate) fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Cached per-order data: the cyclotomic polynomial and the reduction of
/// every power x^k (k up to max(2*phi-2, M-1)) into the power basis.
struct OrderData {
    order: u64,
    phi: usize,
    /// x^k reduced mod Phi_M, integer coefficients, each row of length phi.
    rows: Vec<Vec<BigInt>>,
    /// Phi_M as rational coefficients, for the extended-gcd inverse.
    min_poly_rat: Vec<Rational>,
}

fn order_data(m: u64) -> Arc<OrderData> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<OrderData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(d) = cache.read().unwrap().get(&m) {
        return d.clone();
    }
    let built = Arc::new(build_order_data(m));
    let mut w = cache.write().unwrap();
    Arc::clone(w.entry(m).or_insert(built))
}

fn build_order_data(m: u64) -> OrderData {
    assert!(m >= 1, "field order must be positive");
    let min_poly = poly::cyclotomic_polynomial(m);
    let phi = min_poly.len() - 1;
    // x^phi = -tail
    let neg_tail: Vec<BigInt> = min_poly[..phi].iter().map(|c| -c).collect();
    let count = (2 * phi).saturating_sub(1).max(m as usize);
    let mut rows = Vec::with_capacity(count);
    for k in 0..count {
        if k < phi {
            let mut r = vec![BigInt::zero(); phi];
            r[k] = BigInt::one();
            rows.push(r);
        } else {
            let prev = &rows[k - 1];
            let carry = prev[phi - 1].clone();
            let mut r = vec![BigInt::zero(); phi];
            for i in 1..phi {
                r[i] = prev[i - 1].clone();
            }
            if !carry.is_zero() {
                for i in 0..phi {
                    if !neg_tail[i].is_zero() {
                        r[i] += &neg_tail[i] * &carry;
                    }
                }
            }
            rows.push(r);
        }
    }
    let min_poly_rat = min_poly.iter().map(|c| Rational::from_integer(c.clone())).collect();
    OrderData { order: m, phi, rows, min_poly_rat }
}

/// Element of the cyclotomic field Q_M in canonical (basis-reduced) form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloNum {
    order: u64,
    coeffs: Vec<Rational>,
}

impl CycloNum {
    pub fn zero(m: u64) -> Self {
        let od = order_data(m);
        CycloNum { order: m, coeffs: vec![Rational::zero(); od.phi] }
    }

    pub fn one(m: u64) -> Self {
        Self::from_rational(m, Rational::one())
    }

    pub fn from_int(m: u64, n: i64) -> Self {
        Self::from_rational(m, rat_int(n))
    }

    pub fn from_rational(m: u64, q: Rational) -> Self {
        let od = order_data(m);
        let mut coeffs = vec![Rational::zero(); od.phi];
        coeffs[0] = q;
        // Q_1 and Q_2 have phi = 1, so nothing further to reduce even
        // though zeta itself is rational there.
        CycloNum { order: m, coeffs }
    }

    /// zeta_M^e (any integer exponent).
    pub fn root(m: u64, e: i64) -> Self {
        let od = order_data(m);
        let e = e.rem_euclid(m as i64) as usize;
        let coeffs = od.rows[e].iter().map(|c| Rational::from_integer(c.clone())).collect();
        CycloNum { order: m, coeffs }
    }

    /// Sum of terms coeff * zeta_M^exp, exponents taken mod M, reduced to
    /// canonical form.
    pub fn make(m: u64, terms: &[(i64, Rational)]) -> Self {
        let od = order_data(m);
        let mut coeffs = vec![Rational::zero(); od.phi];
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            let row = &od.rows[e.rem_euclid(m as i64) as usize];
            for i in 0..od.phi {
                if !row[i].is_zero() {
                    coeffs[i] += c * &row[i];
                }
            }
        }
        CycloNum { order: m, coeffs }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Coefficients in the power basis, length phi(M).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Some(q) when the element is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Some(n) when the element is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        let q = self.as_rational()?;
        if q.is_integer() {
            Some(q.to_integer())
        } else {
            None
        }
    }

    fn check_order(&self, other: &CycloNum) {
        assert_eq!(
            self.order, other.order,
            "order mismatch: Q_{} vs Q_{} (promote first)",
            self.order, other.order
        );
    }

    /// Reduce a raw coefficient vector (degree possibly up to 2*phi-2)
    /// into the power basis.
    fn reduce(m: u64, raw: Vec<Rational>) -> Self {
        let od = order_data(m);
        let mut coeffs = vec![Rational::zero(); od.phi];
        for (k, c) in raw.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < od.phi {
                coeffs[k] += c;
            } else {
                let row = &od.rows[k];
                for i in 0..od.phi {
                    if !row[i].is_zero() {
                        coeffs[i] += &c * &row[i];
                    }
                }
            }
        }
        CycloNum { order: m, coeffs }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiply by the root of unity zeta_M^e: a basis shift, cheaper than
    /// a general product.
    pub fn mul_root_exp(&self, e: u64) -> Self {
        let od = order_data(self.order);
        let e = (e % self.order) as usize;
        if e == 0 {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); od.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &od.rows[(k + e) % self.order as usize];
            for i in 0..od.phi {
                if !row[i].is_zero() {
                    coeffs[i] += c * &row[i];
                }
            }
        }
        CycloNum { order: self.order, coeffs }
    }

    pub fn mul_root(&self, r: &RootOfUnity) -> Result<Self> {
        Ok(self.mul_root_exp(r.exponent_in(self.order)?))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// coefficient polynomial and Phi_M over the rationals.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero(self.order));
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(self.order, q.recip()));
        }
        let od = order_data(self.order);
        let a = poly::trim_rat(self.coeffs.clone());
        let (g, u) = poly::rat_ext_gcd_mod(&a, &od.min_poly_rat);
        // Phi_M is irreducible over Q, so the gcd with a nonzero element of
        // smaller degree is a unit; rat_ext_gcd_mod normalizes it to 1.
        debug_assert!(g.len() == 1 && g[0].is_one(), "gcd with irreducible Phi_M");
        let mut coeffs = u;
        coeffs.resize(od.phi, Rational::zero());
        Ok(CycloNum { order: self.order, coeffs })
    }

    pub fn pow(&self, k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn pow_i64(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            Ok(self.pow(k as u64))
        } else {
            Ok(self.inv()?.pow(k.unsigned_abs()))
        }
    }

    /// The ring automorphism sigma_a: zeta_M -> zeta_M^a, for gcd(a, M) = 1.
    /// sigma_{-1} is complex conjugation.
    pub fn galois(&self, a: i64) -> Result<Self> {
        let m = self.order;
        let aa = a.rem_euclid(m as i64) as u64;
        if nt::gcd(aa, m) != 1 {
            return Err(Error::InvalidAutomorphism { a, m });
        }
        if aa == 1 {
            return Ok(self.clone());
        }
        let od = order_data(m);
        let mut coeffs = vec![Rational::zero(); od.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &od.rows[(aa as u128 * k as u128 % m as u128) as usize];
            for i in 0..od.phi {
                if !row[i].is_zero() {
                    coeffs[i] += c * &row[i];
                }
            }
        }
        Ok(CycloNum { order: m, coeffs })
    }

    /// Complex conjugation (sigma_{-1}).
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is always coprime to the order")
    }

    /// Membership in the subfield Q_d (d | M), decided by Galois theory:
    /// the element lies in Q_d iff it is fixed by every sigma_a with
    /// a = 1 (mod d) and gcd(a, M) = 1.
    pub fn in_subfield(&self, d: u64) -> Result<bool> {
        let m = self.order;
        if d == 0 || m % d != 0 {
            return Err(Error::NotSubfieldOrder { d, m });
        }
        if d == m {
            return Ok(true);
        }
        let mut a = 1 + d;
        while a <= m {
            if nt::gcd(a, m) == 1 && self.galois(a as i64)? != *self {
                return Ok(false);
            }
            a += d;
        }
        Ok(true)
    }

    /// Reinterpret in the larger field Q_{M2} (M | M2): zeta_M becomes
    /// zeta_{M2}^{M2/M}.
    pub fn promote(&self, m2: u64) -> Result<Self> {
        let m = self.order;
        if m2 % m != 0 {
            return Err(Error::BadPromotion { from: m, to: m2 });
        }
        if m2 == m {
            return Ok(self.clone());
        }
        let k = m2 / m;
        let od = order_data(m2);
        let mut coeffs = vec![Rational::zero(); od.phi];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &od.rows[(j as u64 * k % m2) as usize];
            for i in 0..od.phi {
                if !row[i].is_zero() {
                    coeffs[i] += c * &row[i];
                }
            }
        }
        Ok(CycloNum { order: m2, coeffs })
    }

    /// Standard embedding zeta_M -> exp(2 pi i / M), double precision.
    /// Display and branch selection only, never an equality decision.
    pub fn numeric(&self) -> Complex64 {
        let m = self.order as f64;
        let mut z = Complex64::new(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let x = rational_to_f64(c);
            let ang = 2.0 * std::f64::consts::PI * (k as f64) / m;
            z += Complex64::new(ang.cos(), ang.sin()) * x;
        }
        z
    }

    /// Recognize the element as a root of unity: locate a candidate
    /// exponent from the numeric embedding, then confirm by exact
    /// comparison. For odd M the value may be minus a power of zeta_M, a
    /// root of order 2M.
    pub fn as_root_of_unity(&self) -> Option<RootOfUnity> {
        let m = self.order;
        let z = self.numeric();
        if !z.re.is_finite() || !z.im.is_finite() || (z.norm() - 1.0).abs() > 1e-6 {
            // Numeric screen: a root of unity of this field always has a
            // well-behaved embedding at desk scale.
            return self.as_root_exhaustive();
        }
        let frac = z.arg() / (2.0 * std::f64::consts::PI);
        let e0 = (frac * m as f64).round() as i64;
        for delta in [0i64, 1, -1] {
            let e = (e0 + delta).rem_euclid(m as i64);
            if *self == CycloNum::root(m, e) {
                return Some(RootOfUnity::new(m, e as u64));
            }
        }
        if m % 2 == 1 {
            // -zeta_M^e has order dividing 2M
            let neg = -self;
            let frac = neg.numeric().arg() / (2.0 * std::f64::consts::PI);
            let e0 = (frac * m as f64).round() as i64;
            for delta in [0i64, 1, -1] {
                let e = (e0 + delta).rem_euclid(m as i64);
                if neg == CycloNum::root(m, e) {
                    return Some(RootOfUnity::new(2 * m, (2 * e as u64 + m) % (2 * m)));
                }
            }
        }
        None
    }

    fn as_root_exhaustive(&self) -> Option<RootOfUnity> {
        let m = self.order;
        for e in 0..m {
            if *self == CycloNum::root(m, e as i64) {
                return Some(RootOfUnity::new(m, e));
            }
        }
        if m % 2 == 1 {
            let neg = -self;
            for e in 0..m {
                if neg == CycloNum::root(m, e as i64) {
                    return Some(RootOfUnity::new(2 * m, (2 * e + m) % (2 * m)));
                }
            }
        }
        None
    }

    /// Canonical term list (numerator, denominator, exponent), sorted by
    /// exponent with zero terms omitted. This is the serialization used by
    /// the file format.
    pub fn terms(&self) -> Vec<(BigInt, BigInt, u64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c.numer().clone(), c.denom().clone(), k as u64))
            .collect()
    }
}

fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        let n = q.numer().to_f64().unwrap_or(f64::NAN);
        let d = q.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = mag.is_one();
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !coeff_is_one {
                    if mag.is_integer() {
                        write!(f, "{mag}*")?;
                    } else {
                        write!(f, "({mag})*")?;
                    }
                }
                if k == 1 {
                    write!(f, "z{}", self.order)?;
                } else {
                    write!(f, "z{}^{}", self.order, k)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum(Q_{}: {})", self.order, self)
    }
}

impl std::ops::Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        self.check_order(rhs);
        CycloNum {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl std::ops::Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        self.check_order(rhs);
        CycloNum {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl std::ops::Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        self.check_order(rhs);
        let n = self.coeffs.len();
        let mut raw = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        CycloNum::reduce(self.order, raw)
    }
}

/// A root of unity zeta_order^exp in canonical form: the stored order is
/// the exact multiplicative order (gcd(exp, order) = 1, with 1 stored as
/// order 1, exponent 0).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RootOfUnity {
    order: u64,
    exp: u64,
}

impl RootOfUnity {
    pub fn new(m: u64, e: u64) -> Self {
        assert!(m >= 1);
        let e = e % m;
        if e == 0 {
            return RootOfUnity { order: 1, exp: 0 };
        }
        let g = nt::gcd(e, m);
        RootOfUnity { order: m / g, exp: e / g }
    }

    pub fn one() -> Self {
        RootOfUnity { order: 1, exp: 0 }
    }

    pub fn minus_one() -> Self {
        RootOfUnity { order: 2, exp: 1 }
    }

    pub fn is_one(&self) -> bool {
        self.order == 1
    }

    /// Exact multiplicative order of the value.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Exponent in the canonical presentation zeta_{order}^{exp}.
    pub fn exponent(&self) -> u64 {
        self.exp
    }

    /// Exponent e such that the value equals zeta_m^e, for any multiple m
    /// of the order.
    pub fn exponent_in(&self, m: u64) -> Result<u64> {
        if m % self.order != 0 {
            return Err(Error::BadPromotion { from: self.order, to: m });
        }
        Ok(self.exp * (m / self.order) % m)
    }

    pub fn mul(&self, rhs: &RootOfUnity) -> RootOfUnity {
        let m = nt::lcm(self.order, rhs.order);
        RootOfUnity::new(
            m,
            (self.exp * (m / self.order) + rhs.exp * (m / rhs.order)) % m,
        )
    }

    pub fn inv(&self) -> RootOfUnity {
        RootOfUnity::new(self.order, (self.order - self.exp) % self.order)
    }

    pub fn div(&self, rhs: &RootOfUnity) -> RootOfUnity {
        self.mul(&rhs.inv())
    }

    pub fn pow(&self, k: i64) -> RootOfUnity {
        let e = (self.exp as i128 * k as i128).rem_euclid(self.order as i128) as u64;
        RootOfUnity::new(self.order, e)
    }

    /// sigma_a applied to the value (requires gcd(a, order) = 1).
    pub fn galois(&self, a: i64) -> Result<RootOfUnity> {
        let aa = a.rem_euclid(self.order as i64) as u64;
        if nt::gcd(aa, self.order) != 1 {
            return Err(Error::InvalidAutomorphism { a, m: self.order });
        }
        Ok(self.pow(aa as i64))
    }

    pub fn to_cyclo(&self, m: u64) -> Result<CycloNum> {
        Ok(CycloNum::root(m, self.exponent_in(m)? as i64))
    }

    pub fn numeric(&self) -> Complex64 {
        let ang = 2.0 * std::f64::consts::PI * self.exp as f64 / self.order as f64;
        Complex64::new(ang.cos(), ang.sin())
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.order, self.exp) {
            (1, _) => write!(f, "1"),
            (2, _) => write!(f, "-1"),
            (_, 1) => write!(f, "z{}", self.order),
            _ => write!(f, "z{}^{}", self.order, self.exp),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn sqrt5(m: u64) -> CycloNum {
        let base = CycloNum::make(
            5,
            &[(1, rat_int(1)), (2, rat_int(-1)), (3, rat_int(-1)), (4, rat_int(1))],
        );
        base.promote(m).unwrap()
    }

    #[test]
    fn make_reduces_mod_phi() {
        // zeta_4^2 = -1
        let z = CycloNum::make(4, &[(2, rat_int(1))]);
        assert_eq!(z, CycloNum::from_int(4, -1));
        assert_eq!(z.coeffs(), &[rat_int(-1), rat_int(0)]);
        // identity in Q_5
        let one = CycloNum::make(5, &[(0, rat_int(1)), (1, rat_int(0))]);
        assert!(one.is_one());
    }

    #[test]
    fn sqrt5_squares_to_five() {
        let r = sqrt5(5);
        assert_eq!(&r * &r, CycloNum::from_int(5, 5));
        // and the numeric embedding agrees with the real square root
        assert!((r.numeric().re - 5f64.sqrt()).abs() < 1e-9);
        assert!(r.numeric().im.abs() < 1e-12);
    }

    #[test]
    fn cube_roots_sum_to_minus_one() {
        let a = CycloNum::root(3, 1);
        let b = CycloNum::root(3, 2);
        assert_eq!(&a + &b, CycloNum::from_int(3, -1));
    }

    #[test]
    fn inverses() {
        assert_eq!(
            CycloNum::from_int(7, 2).inv().unwrap(),
            CycloNum::from_rational(7, q(1, 2))
        );
        // root-of-unity inverse is the complementary power
        for m in [5u64, 12, 16] {
            for e in 1..m {
                let z = CycloNum::root(m, e as i64);
                assert_eq!(z.inv().unwrap(), CycloNum::root(m, (m - e) as i64));
            }
        }
        // 1 + zeta_5 + zeta_5^4 is the golden ratio; its inverse is phi - 1
        let phi = CycloNum::make(5, &[(0, rat_int(1)), (1, rat_int(1)), (4, rat_int(1))]);
        let inv = phi.inv().unwrap();
        assert_eq!(inv, &phi - &CycloNum::one(5));
        assert!((&phi * &inv).is_one());
        assert!(CycloNum::zero(9).inv().is_err());
    }

    #[test]
    fn galois_action() {
        let z = CycloNum::make(12, &[(1, q(2, 3)), (5, q(-1, 2))]);
        assert_eq!(z.galois(1).unwrap(), z);
        // conjugate of i is -i
        let i4 = CycloNum::root(4, 1);
        assert_eq!(i4.galois(-1).unwrap(), -&i4);
        // sigma_7 moves sqrt5 to -sqrt5 in Q_60 (7 = 2 mod 5, a non-residue)
        let r = sqrt5(60);
        assert_eq!(r.galois(7).unwrap(), -&r);
        assert!(r.galois(6).is_err());
        // composition law on a few elements
        for (a, b) in [(7i64, 11), (13, 49), (-1, -1)] {
            let lhs = z.galois(a).unwrap().galois(b).unwrap();
            let rhs = z.galois(a * b).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn subfield_membership() {
        let three_half = CycloNum::from_rational(60, q(3, 2));
        assert!(three_half.in_subfield(1).unwrap());
        let i_in_60 = CycloNum::root(60, 15); // zeta_60^15 = i
        assert!(!i_in_60.in_subfield(2).unwrap());
        assert!(i_in_60.in_subfield(4).unwrap());
        let r = sqrt5(60);
        assert!(r.in_subfield(5).unwrap());
        assert!(!r.in_subfield(3).unwrap());
        assert!(r.in_subfield(7).is_err());
    }

    #[test]
    fn root_recognition() {
        // -1 in an even-order field
        let m = 12;
        let z = CycloNum::from_int(m, -1);
        assert_eq!(z.as_root_of_unity(), Some(RootOfUnity::new(12, 6)));
        // 1 + zeta_5 is not a root of unity
        let nz = CycloNum::make(5, &[(0, rat_int(1)), (1, rat_int(1))]);
        assert_eq!(nz.as_root_of_unity(), None);
        // (1+i)/(1-i) = i
        let num = CycloNum::make(4, &[(0, rat_int(1)), (1, rat_int(1))]);
        let den = CycloNum::make(4, &[(0, rat_int(1)), (1, rat_int(-1))]);
        let quot = &num * &den.inv().unwrap();
        assert_eq!(quot.as_root_of_unity(), Some(RootOfUnity::new(4, 1)));
        // -zeta_5^2 lives in Q_5 but has order 10
        let z = -&CycloNum::root(5, 2);
        let r = z.as_root_of_unity().unwrap();
        assert_eq!(r.order(), 10);
        assert_eq!(z.promote(10).unwrap(), r.to_cyclo(10).unwrap());
    }

    #[test]
    fn recognized_roots_have_exact_order() {
        for m in [5u64, 12, 16, 60] {
            for e in 0..m {
                let z = CycloNum::root(m, e as i64);
                let r = z.as_root_of_unity().expect("every power is a root of unity");
                let ord = r.order();
                assert!(z.pow(ord).is_one());
                for d in nt::divisors(ord) {
                    if d < ord {
                        assert!(!z.pow(d).is_one(), "zeta_{m}^{e} order {ord} divisor {d}");
                    }
                }
            }
        }
    }

    #[test]
    fn numeric_embedding() {
        let i4 = CycloNum::root(4, 1);
        let z = i4.numeric();
        assert!((z.re).abs() < 1e-12 && (z.im - 1.0).abs() < 1e-12);
        assert_eq!(CycloNum::zero(8).numeric(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn promotion() {
        let two = CycloNum::from_int(7, 2);
        assert_eq!(two.promote(21).unwrap(), CycloNum::from_int(21, 2));
        assert_eq!(
            CycloNum::root(5, 1).promote(60).unwrap(),
            CycloNum::root(60, 12)
        );
        // promoted elements are recognized as members of the original field
        let r = sqrt5(60);
        assert!(r.in_subfield(5).unwrap());
        assert_eq!(r.galois(11).unwrap(), r); // 11 = 1 mod 5
        assert!(CycloNum::one(6).promote(8).is_err());
    }

    #[test]
    fn root_of_unity_canonical_form() {
        let r = RootOfUnity::new(60, 24);
        assert_eq!((r.order(), r.exponent()), (5, 2));
        assert_eq!(r.exponent_in(60).unwrap(), 24);
        let one = RootOfUnity::new(7, 7);
        assert!(one.is_one());
        // round trip through the field
        for m in [12u64, 16, 60] {
            for e in 0..m {
                let r = RootOfUnity::new(m, e);
                let z = r.to_cyclo(m).unwrap();
                assert_eq!(z.as_root_of_unity(), Some(r));
            }
        }
    }

    #[test]
    fn display_is_readable() {
        // 1 + zeta_5 + zeta_5^4 reduces to -zeta_5^2 - zeta_5^3 in the power basis
        let phi = CycloNum::make(5, &[(0, rat_int(1)), (1, rat_int(1)), (4, rat_int(1))]);
        assert_eq!(phi.to_string(), "-z5^2 - z5^3");
        assert_eq!(CycloNum::zero(8).to_string(), "0");
        assert_eq!(CycloNum::from_rational(8, q(-3, 2)).to_string(), "-3/2");
        assert_eq!(RootOfUnity::new(60, 7).to_string(), "z60^7");
    }
}
