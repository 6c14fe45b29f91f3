//! Exact arithmetic in the cyclotomic fields Q(zeta_N).
//!
//! Elements are residues modulo the N-th cyclotomic polynomial, with
//! arbitrary-precision rational coefficients.  Two values of the same order
//! are equal iff their coefficient vectors are equal; values of different
//! orders are compared after embedding into the lcm order.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut n = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn poly_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Exact division of integer polynomials, panics if not divisible.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, d) in den.iter().enumerate() {
            let idx = i - dd + j;
            rem[idx] = &rem[idx] - &c * d;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact division");
    quot
}

/// Coefficients of the N-th cyclotomic polynomial, low degree first, monic.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<BigInt>> {
    if let Some(p) = poly_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    let arc = Arc::new(num);
    poly_cache().lock().unwrap().insert(n, arc.clone());
    arc
}

/// An exact element of Q(zeta_N).
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn reduce(order: u64, mut raw: Vec<BigRational>) -> Self {
        let phi = euler_phi(order) as usize;
        let modp = cyclotomic_polynomial(order);
        let deg = modp.len() - 1;
        debug_assert_eq!(deg, phi);
        // polynomial remainder modulo the monic integer polynomial
        for i in (deg..raw.len()).rev() {
            let c = raw[i].clone();
            if c.is_zero() {
                continue;
            }
            for (j, m) in modp.iter().enumerate() {
                let idx = i - deg + j;
                let t = &c * BigRational::from(m.clone());
                raw[idx] -= t;
            }
        }
        raw.truncate(deg);
        raw.resize(deg, BigRational::zero());
        Cyclotomic { order, coeffs: raw }
    }

    pub fn from_coeffs(order: u64, coeffs: Vec<BigRational>) -> Self {
        Self::reduce(order, coeffs)
    }

    pub fn zero(order: u64) -> Self {
        Cyclotomic {
            order,
            coeffs: vec![BigRational::zero(); euler_phi(order) as usize],
        }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from(BigInt::from(n)))
    }

    /// zeta_order^exp.
    pub fn root(order: u64, exp: i64) -> Self {
        let e = exp.rem_euclid(order as i64) as usize;
        let mut raw = vec![BigRational::zero(); e + 1];
        raw[e] = BigRational::one();
        Self::reduce(order, raw)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Embed into Q(zeta_n) for `self.order | n`, by zeta_m -> zeta_n^(n/m).
    pub fn embed(&self, n: u64) -> Result<Cyclotomic> {
        if n == self.order {
            return Ok(self.clone());
        }
        if n % self.order != 0 {
            return Err(Error::OrderMismatch(self.order, n));
        }
        let scale = (n / self.order) as usize;
        let mut raw = vec![BigRational::zero(); euler_phi(self.order) as usize * scale];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                raw[i * scale] = c.clone();
            }
        }
        Ok(Self::reduce(n, raw))
    }

    fn unified(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        if self.order == other.order {
            (self.clone(), other.clone())
        } else {
            let n = self.order.lcm(&other.order);
            (self.embed(n).unwrap(), other.embed(n).unwrap())
        }
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.unified(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.unified(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> Cyclotomic {
        let mut a = self.clone();
        for x in a.coeffs.iter_mut() {
            *x = -x.clone();
        }
        a
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.unified(other);
        let n = a.order;
        let mut raw = vec![BigRational::zero(); 2 * a.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                raw[i + j] += x * y;
            }
        }
        Self::reduce(n, raw)
    }

    pub fn scale(&self, q: &BigRational) -> Cyclotomic {
        let mut a = self.clone();
        for x in a.coeffs.iter_mut() {
            *x *= q;
        }
        a
    }

    pub fn inv(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // extended Euclid in Q[x] against Phi_N
        let modp: Vec<BigRational> = cyclotomic_polynomial(self.order)
            .iter()
            .map(|c| BigRational::from(c.clone()))
            .collect();
        let (mut r0, mut r1) = (modp, trim(self.coeffs.clone()));
        let (mut s0, mut s1) = (vec![], vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 = gcd (a nonzero constant, since Phi_N is irreducible)
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip();
        let inv: Vec<BigRational> = s0.iter().map(|x| x * &c).collect();
        Ok(Self::reduce(self.order, inv))
    }

    pub fn div(&self, other: &Cyclotomic) -> Result<Cyclotomic> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Cyclotomic> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Cyclotomic::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// If this value equals zeta_m^k for the given modulus m, return k.
    pub fn as_root_of_unity(&self, modulus: u64) -> Option<u64> {
        for k in 0..modulus {
            if *self == Cyclotomic::root(modulus, k as i64) {
                return Some(k);
            }
        }
        None
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].recip();
    if rem.len() <= db {
        return (vec![], trim(rem));
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        let c = &rem[i] * &lead;
        if c.is_zero() {
            continue;
        }
        quot[i - db] = c.clone();
        for (j, d) in b.iter().enumerate() {
            let t = &c * d;
            rem[i - db + j] -= t;
        }
    }
    (trim(quot), trim(rem))
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.unified(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{}", q);
        }
        // try +/- a pure power of zeta_order
        for k in 1..self.order {
            let z = Cyclotomic::root(self.order, k as i64);
            if *self == z {
                return write!(f, "\u{3b6}{}^{}", self.order, k);
            }
            if *self == z.neg() {
                return write!(f, "-\u{3b6}{}^{}", self.order, k);
            }
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if i == 0 {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                write!(f, "\u{3b6}{}^{}", self.order, i)?;
            }
            first = false;
        }
        Ok(())
    }
}

/// A root of unity zeta_m^e in exponent form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootOfUnity {
    #[serde(rename = "mod")]
    pub modulus: u64,
    #[serde(rename = "exp")]
    pub exponent: u64,
}

impl RootOfUnity {
    pub fn new(modulus: u64, exponent: i64) -> Self {
        RootOfUnity {
            modulus,
            exponent: exponent.rem_euclid(modulus as i64) as u64,
        }
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        let m = self.modulus.lcm(&other.modulus);
        RootOfUnity::new(
            m,
            (self.exponent * (m / self.modulus) + other.exponent * (m / other.modulus)) as i64,
        )
    }

    /// Embed into Q(zeta_n); requires modulus | n.
    pub fn embed(&self, n: u64) -> Result<Cyclotomic> {
        if n % self.modulus != 0 {
            return Err(Error::OrderMismatch(self.modulus, n));
        }
        Ok(Cyclotomic::root(n, ((n / self.modulus) * self.exponent) as i64))
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        self.embed(self.modulus).unwrap()
    }
}

// JSON encoding: {"order": N, "coeffs": [[num, den], ...]}
impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let coeffs: Vec<(String, String)> = self
            .coeffs
            .iter()
            .map(|c| (c.numer().to_string(), c.denom().to_string()))
            .collect();
        let mut s = serializer.serialize_struct("Cyclotomic", 2)?;
        s.serialize_field("order", &self.order)?;
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            order: u64,
            coeffs: Vec<(String, String)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.order == 0 {
            return Err(D::Error::custom("order must be positive"));
        }
        let coeffs: std::result::Result<Vec<BigRational>, D::Error> = raw
            .coeffs
            .iter()
            .map(|(n, d)| {
                let n: BigInt = n.parse().map_err(D::Error::custom)?;
                let d: BigInt = d.parse().map_err(D::Error::custom)?;
                if d.is_zero() {
                    return Err(D::Error::custom("zero denominator"));
                }
                Ok(BigRational::new(n, d))
            })
            .collect();
        Ok(Cyclotomic::from_coeffs(raw.order, coeffs?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_i_i_is_minus_one() {
        let i = Cyclotomic::root(4, 1);
        assert_eq!(i.mul(&i), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn inv_of_root_negates_exponent() {
        for n in [3u64, 4, 5, 8, 12] {
            for k in 1..n {
                let z = Cyclotomic::root(n, k as i64);
                assert_eq!(z.inv().unwrap(), Cyclotomic::root(n, (n - k) as i64));
            }
        }
    }

    #[test]
    fn add_primitive_cube_roots() {
        let a = Cyclotomic::root(3, 1);
        let b = Cyclotomic::root(3, 2);
        assert_eq!(a.add(&b), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn embed_minus_one_into_order_four() {
        let r = RootOfUnity::new(2, 1);
        assert_eq!(r.embed(4).unwrap(), Cyclotomic::from_integer(-1));
    }

    #[test]
    fn embed_trivial_root() {
        let r = RootOfUnity::new(1, 0);
        for n in [1u64, 2, 6, 9] {
            assert_eq!(r.embed(n).unwrap(), Cyclotomic::one());
        }
    }

    #[test]
    fn embed_scales_exponent() {
        let r = RootOfUnity::new(4, 1);
        assert_eq!(r.embed(8).unwrap(), Cyclotomic::root(8, 2));
    }

    #[test]
    fn embed_rejects_non_divisor() {
        assert!(RootOfUnity::new(4, 1).embed(6).is_err());
    }

    #[test]
    fn inversion_of_zero_fails() {
        assert!(matches!(
            Cyclotomic::zero(4).inv(),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn cross_order_equality() {
        assert_eq!(Cyclotomic::root(2, 1), Cyclotomic::root(6, 3));
        assert_ne!(Cyclotomic::root(6, 1), Cyclotomic::root(6, 5));
    }

    #[test]
    fn display_symbolic() {
        assert_eq!(Cyclotomic::root(8, 3).to_string(), "\u{3b6}8^3");
        assert_eq!(Cyclotomic::from_integer(-1).to_string(), "-1");
        assert_eq!(
            Cyclotomic::from_rational(BigRational::new(1.into(), 2.into())).to_string(),
            "1/2"
        );
    }

    #[test]
    fn json_round_trip() {
        let x = Cyclotomic::root(12, 7).add(&Cyclotomic::from_integer(3));
        let s = serde_json::to_string(&x).unwrap();
        let y: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn known_cyclotomic_polynomials() {
        assert_eq!(
            cyclotomic_polynomial(12).as_slice(),
            &[
                BigInt::from(1),
                BigInt::from(0),
                BigInt::from(-1),
                BigInt::from(0),
                BigInt::from(1)
            ]
        );
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(24), 8);
    }
}
