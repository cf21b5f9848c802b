//! Exact scalar fields: the rationals and prime fields of large odd order.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Converts a detached scalar into `field`. Rationals map into any field
/// where their denominator is invertible; prime-field values only into the
/// same prime field.
pub fn elem_from_scalar<F: Field>(field: &F, s: &Scalar) -> Result<F::Elem> {
    match (s, field.kind()) {
        (Scalar::Rational(q), _) => field
            .from_ratio(q.numer(), q.denom())
            .ok_or_else(|| Error::InvalidParameter(format!("{q} has no image in {}", field.kind()))),
        (Scalar::Prime { value, modulus }, FieldKind::Prime(p)) if *modulus == p => {
            Ok(field.from_ratio(&BigInt::from(*value), &BigInt::from(1)).expect("unit denominator"))
        }
        (Scalar::Prime { modulus, .. }, k) => Err(Error::MixedField(format!("value mod {modulus} used over {k}"))),
    }
}

/// Smallest admissible prime modulus (exclusive).
pub const MIN_PRIME: u64 = 1 << 20;

/// An exact field together with its element representation.
///
/// Field values are contexts: elements never carry their own modulus, so
/// every operation goes through the field.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn kind(&self) -> FieldKind;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Image of `num/den`; `None` when the denominator vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Self::Elem>;
    fn to_scalar(&self, a: &Self::Elem) -> Scalar;
    /// Float rendering, only meaningful in characteristic zero.
    fn to_f64(&self, a: &Self::Elem) -> Option<f64>;
    /// Sign of a nonzero element, when the field is ordered.
    fn sign(&self, a: &Self::Elem) -> Option<i8>;
    /// Draws a "generic" element. Characteristic-zero fields draw an integer
    /// in `[-bound, bound]`; prime fields ignore the bound and draw uniformly.
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, bound: u64) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b).expect("division by zero"))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `acc += a * b`
    fn add_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, &self.mul(a, b));
    }
}

/// Serializable description of a field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldKind {
    Rational,
    Prime(u64),
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "q"),
            FieldKind::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

/// A field element detached from its field, used for exchange and reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn kind(&self) -> FieldKind {
        match self {
            Scalar::Rational(_) => FieldKind::Rational,
            Scalar::Prime { modulus, .. } => FieldKind::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    /// Parses `"p/q"`, `"n"`, or `"v mod p"`.
    pub fn parse(s: &str) -> Result<Scalar> {
        let s = s.trim();
        if let Some((v, p)) = s.split_once(" mod ") {
            let value: u64 = v.trim().parse().map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?;
            let modulus: u64 = p.trim().parse().map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?;
            return Ok(Scalar::Prime { value: value % modulus, modulus });
        }
        parse_rational(s).map(Scalar::Rational)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime { value, modulus } => write!(f, "{value} mod {modulus}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Scalar::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Parses a rational written as `"p/q"` or an integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// The field of rational numbers, exact and unbounded.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn kind(&self) -> FieldKind {
        FieldKind::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<BigRational> {
        (!den.is_zero()).then(|| BigRational::new(num.clone(), den.clone()))
    }
    fn to_scalar(&self, a: &BigRational) -> Scalar {
        Scalar::Rational(a.clone())
    }
    fn to_f64(&self, a: &BigRational) -> Option<f64> {
        a.to_f64().or_else(|| {
            // numerator and denominator overflow f64 separately; shift both
            let shift = a.numer().bits().max(a.denom().bits()).saturating_sub(900);
            let n = (a.numer() >> shift).to_f64()?;
            let d = (a.denom() >> shift).to_f64()?;
            Some(n / d)
        })
    }
    fn sign(&self, a: &BigRational) -> Option<i8> {
        Some(match a.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        })
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, bound: u64) -> BigRational {
        let b = bound.min(i64::MAX as u64) as i64;
        self.from_i64(rng.gen_range(-b..=b))
    }
    fn add_mul_assign(&self, acc: &mut BigRational, a: &BigRational, b: &BigRational) {
        *acc += a * b;
    }
}

/// The prime field F_p for an odd prime p > 2^20.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p <= MIN_PRIME || !is_prime(p) {
            return Err(Error::InvalidParameter(format!(
                "prime field order must be a prime above 2^20, got {p}"
            )));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.p as i128) as u64
    }

    fn reduce_big(&self, v: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        v.mod_floor(&m).to_u64().expect("residue fits in u64")
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn kind(&self) -> FieldKind {
        FieldKind::Prime(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = *a as u128 + *b as u128;
        (s % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        Some(self.pow(a, self.p - 2))
    }
    fn from_i64(&self, v: i64) -> u64 {
        self.reduce_i128(v as i128)
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<u64> {
        let d = self.reduce_big(den);
        let d = self.inv(&d)?;
        Some(self.mul(&self.reduce_big(num), &d))
    }
    fn to_scalar(&self, a: &u64) -> Scalar {
        Scalar::Prime { value: *a, modulus: self.p }
    }
    fn to_f64(&self, _a: &u64) -> Option<f64> {
        None
    }
    fn sign(&self, _a: &u64) -> Option<i8> {
        None
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, _bound: u64) -> u64 {
        rng.gen_range(0..self.p)
    }
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A random prime in `[2^31 - 2^24, 2^31)`.
pub fn random_prime_near_2_31<R: Rng + ?Sized>(rng: &mut R) -> u64 {
    let lo = (1u64 << 31) - (1u64 << 24);
    let hi = 1u64 << 31;
    loop {
        let c = rng.gen_range(lo..hi) | 1;
        if is_prime(c) {
            return c;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn miller_rabin_agrees_with_trial_division() {
        let trial = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        for n in 0..5000u64 {
            assert_eq!(is_prime(n), trial(n), "n = {n}");
        }
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(2_147_483_649));
    }

    #[test]
    fn small_primes_are_rejected() {
        assert!(PrimeField::new(101).is_err());
        assert!(PrimeField::new((1 << 20) + 8).is_err());
        assert!(PrimeField::new(2_147_483_647).is_ok());
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(2_147_483_647).unwrap();
        for a in [1u64, 2, 12345, 2_147_483_646] {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert_eq!(f.from_i64(-1), 2_147_483_646);
        let half = f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(f.add(&half, &half), 1);
    }

    #[test]
    fn scalar_text_round_trip() {
        for s in ["3/4", "-7", "0", "5 mod 2147483647"] {
            assert_eq!(Scalar::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(Scalar::parse("6/8").unwrap().to_string(), "3/4");
        assert!(Scalar::parse("1/0").is_err());
    }
}
