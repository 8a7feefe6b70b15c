use crate::error::Error;
use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Modulus cap so products of residues fit in `u64` without widening tricks.
const MAX_PRIME: u64 = (1 << 31) - 1;

/// Coefficient field descriptor: the rationals or a prime field GF(p).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// Validates that `p` is prime (and within the supported range).
    pub fn prime_field(p: u64) -> Result<Self, Error> {
        if p < 2 || p > MAX_PRIME || !is_prime(p) {
            return Err(Error::ZeroInput("prime modulus"));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Exact field element: a reduced rational or a residue in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Mod { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::PrimeField(p) => Scalar::Mod { value: 0, modulus: p },
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::PrimeField(p) => Scalar::Mod {
                value: if p == 1 { 0 } else { 1 },
                modulus: p,
            },
        }
    }

    pub fn from_i64(field: FieldSpec, n: i64) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from(BigInt::from(n))),
            FieldSpec::PrimeField(p) => Scalar::Mod {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_rational(num: BigInt, den: BigInt) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::ZeroInput("denominator"));
        }
        Ok(Scalar::Rat(BigRational::new(num, den)))
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Mod { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, Error> {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a + b)),
            (
                Scalar::Mod { value: a, modulus: p },
                Scalar::Mod { value: b, modulus: q },
            ) if p == q => Ok(Scalar::Mod {
                value: (a + b) % p,
                modulus: *p,
            }),
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, Error> {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a * b)),
            (
                Scalar::Mod { value: a, modulus: p },
                Scalar::Mod { value: b, modulus: q },
            ) if p == q => Ok(Scalar::Mod {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                modulus: *p,
            }),
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Scalar::one(self.field());
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::ZeroInput("divisor"));
        }
        match self {
            Scalar::Rat(r) => Ok(Scalar::Rat(r.recip())),
            Scalar::Mod { value, modulus } => Ok(Scalar::Mod {
                value: mod_inverse(*value, *modulus),
                modulus: *modulus,
            }),
        }
    }

    /// `(is_negative, absolute_value)` for rendering; residues are never negative.
    pub fn sign_split(&self) -> (bool, Scalar) {
        match self {
            Scalar::Rat(r) if r.is_negative() => (true, Scalar::Rat(-r)),
            _ => (false, self.clone()),
        }
    }

    pub fn to_display_string(&self) -> String {
        self.to_string()
    }

    /// Parses the canonical string form (`-3/4`, `7`) back into a scalar of
    /// `field`; in GF(p) a fraction is interpreted via the inverse.
    pub fn parse(field: FieldSpec, s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num: BigInt = num_str
            .parse()
            .map_err(|_| Error::ZeroInput("numeric literal"))?;
        let den: BigInt = match den_str {
            Some(d) => d.parse().map_err(|_| Error::ZeroInput("numeric literal"))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::ZeroInput("denominator"));
        }
        match field {
            FieldSpec::Rationals => Ok(Scalar::Rat(BigRational::new(num, den))),
            FieldSpec::PrimeField(p) => {
                let n = Scalar::Mod {
                    value: bigint_mod(&num, p),
                    modulus: p,
                };
                let d = Scalar::Mod {
                    value: bigint_mod(&den, p),
                    modulus: p,
                };
                n.checked_mul(&d.inv()?)
            }
        }
    }
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    use num_traits::ToPrimitive;
    let m = n % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    m.to_u64().expect("reduced residue fits in u64")
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Extended Euclid; p prime and a != 0 mod p.
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of non-unit");
    t.rem_euclid(p as i128) as u64
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, other: Scalar) -> Scalar {
        self.checked_add(&other).expect("scalar field mismatch")
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, other: Scalar) -> Scalar {
        self.checked_add(&(-other)).expect("scalar field mismatch")
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, other: Scalar) -> Scalar {
        self.checked_mul(&other).expect("scalar field mismatch")
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: if value == 0 { 0 } else { modulus - value },
                modulus,
            },
        }
    }
}

// Ratio<BigInt> prints `n/d` (or just `n` when the denominator is 1), which
// is exactly the canonical scalar form.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_normalization() {
        let a = Scalar::from_rational(BigInt::from(2), BigInt::from(-4)).unwrap();
        assert_eq!(a.to_display_string(), "-1/2");
        let b = Scalar::parse(FieldSpec::Rationals, "-1/2").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn string_round_trip() {
        for s in ["0", "1", "-7", "3/4", "-22/7", "123456789123456789/2"] {
            let a = Scalar::parse(FieldSpec::Rationals, s).unwrap();
            assert_eq!(a.to_display_string(), *s);
        }
        let gf7 = FieldSpec::prime_field(7).unwrap();
        for s in ["0", "1", "5"] {
            let a = Scalar::parse(gf7, s).unwrap();
            assert_eq!(a.to_display_string(), *s);
        }
    }

    #[test]
    fn prime_field_arithmetic() {
        let gf5 = FieldSpec::prime_field(5).unwrap();
        let a = Scalar::from_i64(gf5, 3);
        let b = Scalar::from_i64(gf5, 4);
        assert_eq!((a.clone() * b.clone()).to_display_string(), "2");
        assert_eq!((a.clone() + b).to_display_string(), "2");
        assert!((a.clone() * a.inv().unwrap()).is_one());
    }

    #[test]
    fn gf_fraction_parse() {
        let gf7 = FieldSpec::prime_field(7).unwrap();
        // 1/2 = 4 mod 7
        let a = Scalar::parse(gf7, "1/2").unwrap();
        assert_eq!(a.to_display_string(), "4");
    }

    #[test]
    fn non_prime_modulus_rejected() {
        assert!(FieldSpec::prime_field(1).is_err());
        assert!(FieldSpec::prime_field(4).is_err());
        assert!(FieldSpec::prime_field(91).is_err());
        assert!(FieldSpec::prime_field(97).is_ok());
    }

    #[test]
    fn zero_inverse_rejected() {
        assert!(Scalar::zero(FieldSpec::Rationals).inv().is_err());
    }
}
