//! Exact field elements over ℚ and 𝔽_p.
//!
//! Every structure in the crate belongs to exactly one [`Field`]; scalars of
//! different fields are never mixed, and doing so is treated as a bug.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest prime modulus accepted for 𝔽_p.
pub const MAX_PRIME: u64 = 1 << 32;

/// The coefficient field of an object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rationals, characteristic 0.
    Rational,
    /// The prime field 𝔽_p.
    Prime(u64),
}

impl Field {
    /// Validated prime field constructor.
    pub fn prime(p: u64) -> Result<Self> {
        if (2..MAX_PRIME).contains(&p) && is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::InvalidField(format!("{p} is not a supported prime")))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Mod {
                value: n.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
        }
    }

    /// `num / den`, or `None` when the denominator vanishes in this field.
    pub fn from_ratio(&self, num: i64, den: i64) -> Option<Scalar> {
        self.from_int(num).checked_div(&self.from_int(den))
    }

    /// Maps an exact rational into this field (reduction mod p for 𝔽_p).
    pub fn from_rational(&self, q: &BigRational) -> Option<Scalar> {
        match self {
            Field::Rational => Some(Scalar::Rat(q.clone())),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let num = q.numer().mod_floor(&pb).to_u64()?;
                let den = q.denom().mod_floor(&pb).to_u64()?;
                let n = Scalar::Mod { value: num, modulus: *p };
                n.checked_div(&Scalar::Mod { value: den, modulus: *p })
            }
        }
    }

    /// Parses a scalar literal: `3`, `-3/2`, or `5 mod 7` (the modulus must match).
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let bad = || Error::Parse(format!("invalid scalar `{text}`"));
        if let Some((value, modulus)) = text.split_once("mod") {
            let modulus: u64 = modulus.trim().parse().map_err(|_| bad())?;
            if *self != Field::Prime(modulus) {
                return Err(Error::Parse(format!(
                    "scalar `{text}` does not belong to field {self}"
                )));
            }
            let value: i64 = value.trim().parse().map_err(|_| bad())?;
            return Ok(self.from_int(value));
        }
        let q = match text.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(BigInt::from_str(text).map_err(|_| bad())?),
        };
        self.from_rational(&q).ok_or_else(bad)
    }

    /// Every element of a prime field, in residue order.
    pub fn elements(&self) -> Option<impl Iterator<Item = Scalar> + '_> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some((0..*p).map(move |v| Scalar::Mod { value: v, modulus: *p })),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "p:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q" || s == "Q" {
            return Ok(Field::Rational);
        }
        match s.strip_prefix("p:") {
            Some(p) => Field::prime(
                p.parse()
                    .map_err(|_| Error::InvalidField(format!("bad prime `{p}`")))?,
            ),
            None => Err(Error::InvalidField(format!("unknown field `{s}`"))),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Rationals are kept in lowest terms with a
/// positive denominator, residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rat(q) => Scalar::Rat(q.recip()),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|i| self * &i)
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(q) => Some(q),
            Scalar::Mod { .. } => None,
        }
    }

    /// Weight used when ordering candidate elements by "height".
    pub fn height(&self) -> u64 {
        match self {
            Scalar::Rat(q) => {
                let n = q.numer().abs().to_u64().unwrap_or(u64::MAX);
                let d = q.denom().to_u64().unwrap_or(u64::MAX);
                n.max(d)
            }
            Scalar::Mod { value, .. } => *value,
        }
    }

    fn assert_same(&self, other: &Scalar) {
        if let (Scalar::Mod { modulus: a, .. }, Scalar::Mod { modulus: b, .. }) = (self, other) {
            assert_eq!(a, b, "scalars from different prime fields");
        } else {
            assert_eq!(self.field(), other.field(), "scalars from different fields");
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Mod { value, modulus } => write!(f, "{value} mod {modulus}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.assert_same(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { value: a, modulus }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.assert_same(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Mod { value: a, modulus }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: ((*a as u128 + *modulus as u128 - *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.assert_same(rhs);
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { value: a, modulus }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: mul_mod(*a, *b, *modulus),
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

/// Integer-valued helper used by fraction-free elimination.
pub(crate) fn big_content(row: &[BigInt]) -> BigInt {
    row.iter()
        .fold(BigInt::zero(), |g, x| if x.is_zero() { g } else { g.gcd(x) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_lowest_terms() {
        let f = Field::Rational;
        let a = f.from_ratio(6, -4).unwrap();
        assert_eq!(a.to_string(), "-3/2");
        assert_eq!(f.parse_scalar("-3/2").unwrap(), a);
    }

    #[test]
    fn residues_stay_in_range() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.from_int(-1), f.from_int(6));
        let three = f.from_int(3);
        assert!((&three * &three.inv().unwrap()).is_one());
        assert_eq!(f.parse_scalar("5 mod 7").unwrap(), f.from_int(5));
        assert_eq!(f.parse_scalar("1/2").unwrap(), f.from_int(4));
        assert!(f.parse_scalar("1 mod 5").is_err());
    }

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("p:13".parse::<Field>().unwrap(), Field::Prime(13));
        assert!("p:12".parse::<Field>().is_err());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(Field::Rational.zero().inv().is_none());
        assert!(Field::Prime(5).zero().inv().is_none());
    }
}
