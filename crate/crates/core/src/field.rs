//! Scalar fields used by the linear algebra and algebra engines.
//!
//! Everything downstream is generic over [`Field`]. The exact rationals are
//! the field every reported number is computed in; the prime field [`Fp`] is
//! used for cheap cross-checks of ranks.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, NumRef, One, Signed, Zero};

/// A commutative field of characteristic zero or a prime field.
pub trait Field:
    Clone + PartialEq + Debug + Display + Send + Sync + NumRef + Neg<Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn from_i64(v: i64) -> Self;

    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self) {
        let prod = a.clone() * b;
        let cur = std::mem::replace(self, Self::zero());
        *self = cur + prod;
    }
}

impl Field for BigRational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// Integers modulo the prime `P` (must be below 2^63).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + P - o.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self * o.inverse().expect("division by zero in Fp")
    }
}

impl<const P: u64> Rem for Fp<P> {
    type Output = Self;
    fn rem(self, _o: Self) -> Self {
        Fp(0)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

macro_rules! fp_ref_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<'a, const P: u64> $tr<&'a Fp<P>> for Fp<P> {
            type Output = Fp<P>;
            fn $m(self, o: &'a Fp<P>) -> Fp<P> {
                $tr::$m(self, *o)
            }
        }
    )*};
}
fp_ref_ops!(Add add, Sub sub, Mul mul, Div div, Rem rem);

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Num for Fp<P> {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        u64::from_str_radix(s, radix).map(Fp::new)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn from_i64(v: i64) -> Self {
        let r = v.rem_euclid(P as i64);
        Fp(r as u64)
    }
}

/// Reconstructs a rational `a/b` with `|a|, b <= sqrt(P/2)` from its residue.
pub fn rational_reconstruct<const P: u64>(x: Fp<P>) -> Option<BigRational> {
    let bound = ((P / 2) as f64).sqrt() as i128;
    let (mut r0, mut r1) = (P as i128, x.value() as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > bound {
        return None;
    }
    let (num, den) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
    let q = BigRational::new(BigInt::from(num), BigInt::from(den));
    // round-trip check
    let back = Fp::<P>::from_i64((num.rem_euclid(P as i128)) as i64)
        * Fp::<P>::from_i64((den.rem_euclid(P as i128)) as i64)
            .inverse()?;
    if back == x && !q.denom().is_negative() {
        Some(q)
    } else {
        None
    }
}
