//! Exact fields: the rationals and prime fields of odd characteristic.
//!
//! The rest of the crate is generic over [`Scalar`]. Prime fields are
//! const-generic, so a characteristic chosen at run time is dispatched to
//! one of the compiled-in moduli listed in [`SUPPORTED_PRIMES`].

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

use crate::error::{Error, Result};

/// Prime moduli with a concrete [`Gf`] instantiation exposed to run-time dispatch.
pub const SUPPORTED_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

/// A field handle: the rationals or GF(p) for an odd prime p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    pub kind: FieldKind,
    pub characteristic: u64,
}

/// Requested field, before validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// Characteristic 0 means the rationals.
    pub fn from_characteristic(c: u64) -> Self {
        if c == 0 {
            FieldSpec::Rationals
        } else {
            FieldSpec::Prime(c)
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Validate a field request. Characteristic 2 and composite moduli are rejected.
pub fn field_create(spec: FieldSpec) -> Result<Field> {
    match spec {
        FieldSpec::Rationals => Ok(Field {
            kind: FieldKind::Rationals,
            characteristic: 0,
        }),
        FieldSpec::Prime(2) => Err(Error::CharacteristicTwoUnsupported),
        FieldSpec::Prime(p) if !is_prime(p) => Err(Error::NotPrime(p)),
        FieldSpec::Prime(p) => Ok(Field {
            kind: FieldKind::PrimeField,
            characteristic: p,
        }),
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::PrimeField => write!(f, "GF({})", self.characteristic),
        }
    }
}

/// An exact field element.
pub trait Scalar:
    Clone + fmt::Debug + fmt::Display + Eq + Hash + Send + Sync + Num + Neg<Output = Self> + 'static
{
    const CHARACTERISTIC: u64;

    fn from_i64(n: i64) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// A square root when one exists in the field.
    ///
    /// GF(p) returns the smaller residue of the two roots; the rationals
    /// return the nonnegative root of a perfect square.
    fn sqrt(&self) -> Option<Self>;

    /// Every element of a finite field, in increasing residue order.
    fn elements() -> Option<Vec<Self>>;

    /// `"n/d"` for rationals, the decimal residue for GF(p).
    fn to_repr(&self) -> String;

    fn from_repr(s: &str) -> Result<Self>;

    fn field() -> Field {
        if Self::CHARACTERISTIC == 0 {
            Field {
                kind: FieldKind::Rationals,
                characteristic: 0,
            }
        } else {
            Field {
                kind: FieldKind::PrimeField,
                characteristic: Self::CHARACTERISTIC,
            }
        }
    }

    fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_i64(n)
            * Self::from_i64(d)
                .inv()
                .expect("denominator vanishes in the field")
    }

    fn half() -> Self {
        Self::from_ratio(1, 2)
    }
}

pub type Q = BigRational;
pub type Gf3 = Gf<3>;
pub type Gf5 = Gf<5>;
pub type Gf7 = Gf<7>;
pub type Gf11 = Gf<11>;
pub type Gf13 = Gf<13>;

impl Scalar for BigRational {
    const CHARACTERISTIC: u64 = 0;

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &n * &n == *self.numer() && &d * &d == *self.denom() {
            Some(BigRational::new(n, d))
        } else {
            None
        }
    }

    fn elements() -> Option<Vec<Self>> {
        None
    }

    fn to_repr(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn from_repr(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse =
            |t: &str| BigInt::from_str(t.trim()).map_err(|e| Error::Parse(format!("{t}: {e}")));
        match s.split_once('/') {
            Some((n, d)) => {
                let d = parse(d)?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("{s}: zero denominator")));
                }
                Ok(BigRational::new(parse(n)?, d))
            }
            None => Ok(BigRational::from_integer(parse(s)?)),
        }
    }
}

/// The prime field GF(P).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf<const P: u64>(u64);

impl<const P: u64> Gf<P> {
    const VALID: () = assert!(
        P > 2 && P < (1 << 31),
        "modulus must be an odd prime below 2^31"
    );

    pub fn new(v: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::VALID;
        Gf(v.rem_euclid(P as i64) as u64)
    }

    pub fn residue(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Gf(acc)
    }
}

impl<const P: u64> fmt::Debug for Gf<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Gf<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Gf<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Gf((self.0 + o.0) % P)
    }
}

impl<const P: u64> Sub for Gf<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Gf((self.0 + P - o.0) % P)
    }
}

impl<const P: u64> Mul for Gf<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Gf(self.0 * o.0 % P)
    }
}

impl<const P: u64> Div for Gf<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.inv().expect("division by zero in GF(p)")
    }
}

/// Field remainder: always zero for a nonzero divisor.
impl<const P: u64> Rem for Gf<P> {
    type Output = Self;
    fn rem(self, o: Self) -> Self {
        assert!(!o.is_zero(), "remainder by zero in GF(p)");
        Gf(0)
    }
}

impl<const P: u64> Neg for Gf<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Gf((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Gf<P> {
    fn zero() -> Self {
        Gf(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Gf<P> {
    fn one() -> Self {
        Gf(1)
    }
}

impl<const P: u64> Num for Gf<P> {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> std::result::Result<Self, Self::FromStrRadixErr> {
        i64::from_str_radix(s, radix).map(Gf::new)
    }
}

impl<const P: u64> Scalar for Gf<P> {
    const CHARACTERISTIC: u64 = P;

    fn from_i64(n: i64) -> Self {
        Gf::new(n)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn sqrt(&self) -> Option<Self> {
        (0..P).map(Gf).find(|r| *r * *r == *self)
    }

    fn elements() -> Option<Vec<Self>> {
        Some((0..P).map(Gf).collect())
    }

    fn to_repr(&self) -> String {
        self.0.to_string()
    }

    fn from_repr(s: &str) -> Result<Self> {
        s.trim()
            .parse::<i64>()
            .map(Gf::new)
            .map_err(|e| Error::Parse(format!("{s}: {e}")))
    }
}

/// Run `$body` with `$s` bound to the scalar type of characteristic `$c`.
///
/// Evaluates to `Result<_, Error>`; unsupported characteristics produce the
/// matching [`Error`] from [`field_create`] or `UnsupportedCharacteristic`.
#[macro_export]
macro_rules! with_field {
    ($c:expr, $s:ident => $body:expr) => {{
        match $crate::scalars::field_create($crate::scalars::FieldSpec::from_characteristic($c)) {
            Err(e) => Err(e),
            Ok(field) => match field.characteristic {
                0 => {
                    type $s = $crate::scalars::Q;
                    Ok($body)
                }
                3 => {
                    type $s = $crate::scalars::Gf3;
                    Ok($body)
                }
                5 => {
                    type $s = $crate::scalars::Gf5;
                    Ok($body)
                }
                7 => {
                    type $s = $crate::scalars::Gf7;
                    Ok($body)
                }
                11 => {
                    type $s = $crate::scalars::Gf11;
                    Ok($body)
                }
                13 => {
                    type $s = $crate::scalars::Gf13;
                    Ok($body)
                }
                p => Err($crate::error::Error::UnsupportedCharacteristic(
                    p,
                    format!("0 and {:?}", $crate::scalars::SUPPORTED_PRIMES),
                )),
            },
        }
    }};
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_requests() {
        assert_eq!(
            field_create(FieldSpec::Rationals).unwrap().characteristic,
            0
        );
        assert_eq!(field_create(FieldSpec::Prime(7)).unwrap().characteristic, 7);
        assert_eq!(
            field_create(FieldSpec::Prime(2)),
            Err(Error::CharacteristicTwoUnsupported)
        );
        assert_eq!(field_create(FieldSpec::Prime(9)), Err(Error::NotPrime(9)));
    }

    #[test]
    fn repr_round_trip() {
        let q = Q::from_ratio(-3, 4);
        assert_eq!(q.to_repr(), "-3/4");
        assert_eq!(Q::from_repr("-3/4").unwrap(), q);
        assert_eq!(Q::from_repr("5").unwrap(), Q::from_i64(5));
        assert_eq!(Gf7::from_i64(-1).to_repr(), "6");
        assert_eq!(Gf7::from_repr("13").unwrap(), Gf7::from_i64(6));
    }

    #[test]
    fn dispatch() {
        let c = with_field!(5, S => S::CHARACTERISTIC).unwrap();
        assert_eq!(c, 5);
        assert!(with_field!(17, S => S::CHARACTERISTIC).is_err());
        assert_eq!(
            with_field!(2, S => S::CHARACTERISTIC),
            Err(Error::CharacteristicTwoUnsupported)
        );
    }
}
