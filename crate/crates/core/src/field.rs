//! Exact coefficient fields: the rationals and prime fields F_p.
//!
//! Rational values are arbitrary-precision and always stored reduced with a
//! positive denominator (num-rational maintains that form). Prime-field
//! residues live in `[0, p)` with `p` validated prime at construction.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Which exact field a ring context works over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    /// Prime-field spec with a primality check on the modulus.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            FieldSpec::Rational => FieldElement::Rational(BigRational::zero()),
            FieldSpec::Prime(p) => FieldElement::Prime { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> FieldElement {
        match self {
            FieldSpec::Rational => FieldElement::Rational(BigRational::one()),
            FieldSpec::Prime(p) => FieldElement::Prime { value: 1 % *p, modulus: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        match self {
            FieldSpec::Rational => FieldElement::Rational(BigRational::from(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let p = *p;
                let r = n.rem_euclid(p as i64) as u64;
                FieldElement::Prime { value: r, modulus: p }
            }
        }
    }

    /// Element from a reduced fraction of integers. Over F_p the denominator
    /// must be invertible.
    pub fn from_ratio(&self, num: BigInt, den: BigInt) -> Result<FieldElement> {
        if den.is_zero() {
            return Err(Error::ZeroArgument("denominator"));
        }
        match self {
            FieldSpec::Rational => Ok(FieldElement::Rational(BigRational::new(num, den))),
            FieldSpec::Prime(p) => {
                let n = big_mod(&num, *p);
                let d = big_mod(&den, *p);
                if d == 0 {
                    return Err(Error::ZeroArgument("denominator (vanishes mod p)"));
                }
                let inv = mod_inverse(d, *p).expect("nonzero residue mod a prime is invertible");
                Ok(FieldElement::Prime { value: mul_mod(n, inv, *p), modulus: *p })
            }
        }
    }

    /// Uniform draw from the configured sample set: integers in `[-bound, bound]`
    /// over the rationals, all residues over F_p.
    pub fn sample<R: Rng>(&self, rng: &mut R, bound: i64) -> FieldElement {
        match self {
            FieldSpec::Rational => self.from_i64(rng.gen_range(-bound..=bound)),
            FieldSpec::Prime(p) => FieldElement::Prime { value: rng.gen_range(0..*p), modulus: *p },
        }
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{}", p),
        }
    }
}

/// One exact field scalar. Mixing variants or moduli in arithmetic is a
/// programming error and panics; ring-context checks happen one level up,
/// on polynomials and ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldElement {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl FieldElement {
    pub fn spec(&self) -> FieldSpec {
        match self {
            FieldElement::Rational(_) => FieldSpec::Rational,
            FieldElement::Prime { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Prime { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                FieldElement::Rational(a + b)
            }
            (
                FieldElement::Prime { value: a, modulus: p },
                FieldElement::Prime { value: b, modulus: q },
            ) => {
                assert_eq!(p, q, "prime field modulus mismatch");
                FieldElement::Prime { value: add_mod(*a, *b, *p), modulus: *p }
            }
            _ => panic!("field variant mismatch"),
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FieldElement {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                FieldElement::Rational(a * b)
            }
            (
                FieldElement::Prime { value: a, modulus: p },
                FieldElement::Prime { value: b, modulus: q },
            ) => {
                assert_eq!(p, q, "prime field modulus mismatch");
                FieldElement::Prime { value: mul_mod(*a, *b, *p), modulus: *p }
            }
            _ => panic!("field variant mismatch"),
        }
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::ZeroArgument("field element to invert"));
        }
        Ok(match self {
            FieldElement::Rational(a) => FieldElement::Rational(a.recip()),
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: mod_inverse(*value, *modulus).expect("nonzero residue"),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(&other.inv()?))
    }

    /// Canonical string form used in certificates: reduced `num/den` over the
    /// rationals, the residue digit string over F_p.
    pub fn canonical_string(&self) -> String {
        match self {
            FieldElement::Rational(r) => format!("{}/{}", r.numer(), r.denom()),
            FieldElement::Prime { value, .. } => value.to_string(),
        }
    }

    /// Inverse of [`canonical_string`](Self::canonical_string).
    pub fn from_canonical_string(spec: &FieldSpec, s: &str) -> Result<FieldElement> {
        let bad = || Error::Certificate(format!("malformed coefficient `{s}`"));
        match spec {
            FieldSpec::Rational => {
                let (n, d) = s.split_once('/').ok_or_else(bad)?;
                let num: BigInt = n.parse().map_err(|_| bad())?;
                let den: BigInt = d.parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(bad());
                }
                Ok(FieldElement::Rational(BigRational::new(num, den)))
            }
            FieldSpec::Prime(p) => {
                let v: u64 = s.parse().map_err(|_| bad())?;
                if v >= *p {
                    return Err(bad());
                }
                Ok(FieldElement::Prime { value: v, modulus: *p })
            }
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElement::Prime { value, .. } => write!(f, "{}", value),
        }
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn big_mod(n: &BigInt, p: u64) -> u64 {
    let m = n % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    let (_, digits) = m.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return None;
    }
    // extended Euclid over i128
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(p as i128) as u64)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    fn q(n: i64, d: i64) -> FieldElement {
        FieldElement::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    #[test]
    fn rational_normalization() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(1, -2), q(-1, 2));
        assert_eq!(q(-3, -6).canonical_string(), "1/2");
    }

    #[test]
    fn prime_field_basics() {
        let f7 = FieldSpec::prime(7).unwrap();
        let three = f7.from_i64(3);
        let five = f7.from_i64(-2);
        assert_eq!(five, f7.from_i64(5));
        assert_eq!(three.add(&five), f7.from_i64(1));
        assert_eq!(three.mul(&five), f7.from_i64(1));
        assert_eq!(three.inv().unwrap(), f7.from_i64(5));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(FieldSpec::prime(6).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(101).is_ok());
    }

    #[test]
    fn canonical_string_round_trip() {
        let spec = FieldSpec::Rational;
        for e in [q(0, 1), q(-5, 3), q(22, 7)] {
            let s = e.canonical_string();
            assert_eq!(FieldElement::from_canonical_string(&spec, &s).unwrap(), e);
        }
        let f101 = FieldSpec::prime(101).unwrap();
        let e = f101.from_i64(-1);
        assert_eq!(
            FieldElement::from_canonical_string(&f101, &e.canonical_string()).unwrap(),
            e
        );
    }

    // Field axioms on 1000 fuzzed triples, both fields.
    #[test]
    fn field_axioms_fuzzed() {
        let mut rng = ChaCha20Rng::seed_from_u64(7);
        for spec in [FieldSpec::Rational, FieldSpec::prime(101).unwrap()] {
            for _ in 0..1000 {
                let a = spec.sample(&mut rng, 50);
                let b = spec.sample(&mut rng, 50);
                let c = spec.sample(&mut rng, 50);
                assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
                assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                assert_eq!(a.add(&b), b.add(&a));
                assert_eq!(a.mul(&b), b.mul(&a));
                assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                assert_eq!(a.add(&spec.zero()), a);
                assert_eq!(a.mul(&spec.one()), a);
                assert_eq!(a.add(&a.neg()), spec.zero());
                if !a.is_zero() {
                    assert_eq!(a.mul(&a.inv().unwrap()), spec.one());
                }
            }
        }
    }
}
