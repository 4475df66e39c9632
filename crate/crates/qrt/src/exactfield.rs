//! Exact scalars over the rationals and prime fields.
//!
//! A [`Scalar`] carries its field with it, so mixing fields is a programming
//! error and panics. Rationals are arbitrary precision and always reduced;
//! prime-field residues live in `[0, p)` with `p < 2^31`, so a product of two
//! residues fits in a `u64`.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::Field(format!("modulus {p} is not below 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::Field(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    /// Number of elements, `None` for the rationals.
    pub fn size(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(*p as u64),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p as u64,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let p = *p as i64;
                Scalar::Mod(n.rem_euclid(p) as u32, p as u32)
            }
        }
    }

    pub fn bigint(&self, n: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p)).to_u32().unwrap();
                Scalar::Mod(r, *p)
            }
        }
    }

    /// `num / den` as a field element.
    pub fn fraction(&self, num: i64, den: i64) -> Result<Scalar> {
        self.int(num).div(&self.int(den))
    }

    /// The element with index `k` in a fixed enumeration: residues `0..p` for
    /// prime fields, `0, 1, -1, 2, -2, ...` for the rationals.
    pub fn element(&self, k: u64) -> Scalar {
        match self {
            FieldSpec::Prime(p) => Scalar::Mod((k % *p as u64) as u32, *p),
            FieldSpec::Rationals => {
                let v = k.div_ceil(2) as i64;
                self.int(if k % 2 == 1 { v } else { -v })
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            FieldSpec::Rationals => "Q".into(),
            FieldSpec::Prime(p) => format!("F{p}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    /// Residue and modulus.
    Mod(u32, u32),
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Mod(_, p) => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod(v, _) => *v == 1,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Mod(v, p) => Scalar::Mod(pow_mod(*v as u64, *p as u64 - 2, *p as u64) as u32, *p),
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
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

    /// Integer power, negative exponents allowed for nonzero scalars.
    pub fn powi(&self, e: i64) -> Result<Scalar> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// Residue for prime fields; panics on rationals.
    pub fn residue(&self) -> u32 {
        match self {
            Scalar::Mod(v, _) => *v,
            Scalar::Rat(_) => panic!("residue of a rational scalar"),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Mod(..) => None,
        }
    }

    /// Balanced integer representative in `(-p/2, p/2]`; for rationals the
    /// integer value if the scalar is integral.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rat(r) if r.is_integer() => r.to_integer().to_i64(),
            Scalar::Rat(_) => None,
            Scalar::Mod(v, p) => {
                let (v, p) = (*v as i64, *p as i64);
                Some(if 2 * v > p { v - p } else { v })
            }
        }
    }

    /// Canonical text: `n` or `n/d` for rationals, the residue for prime fields.
    pub fn render(&self) -> String {
        match self {
            Scalar::Rat(r) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod(v, _) => v.to_string(),
        }
    }

    fn check(&self, other: &Scalar) {
        if self.field() != other.field() {
            panic!("mixed fields {} and {}", self.field(), other.field());
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod(a, p), Scalar::Mod(b, _)) => {
                self.check(o);
                Scalar::Mod(((*a as u64 + *b as u64) % *p as u64) as u32, *p)
            }
            _ => {
                self.check(o);
                unreachable!()
            }
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Mod(a, p), Scalar::Mod(b, _)) => {
                self.check(o);
                Scalar::Mod(((*a as u64 + *p as u64 - *b as u64) % *p as u64) as u32, *p)
            }
            _ => {
                self.check(o);
                unreachable!()
            }
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod(a, p), Scalar::Mod(b, _)) => {
                self.check(o);
                Scalar::Mod(((*a as u64 * *b as u64) % *p as u64) as u32, *p)
            }
            _ => {
                self.check(o);
                unreachable!()
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod(a, p) => Scalar::Mod((*p - *a) % *p, *p),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Parses `-?[0-9]+(/[0-9]+)?` into an element of `field`.
pub fn parse_scalar(text: &str, field: FieldSpec) -> Result<Scalar> {
    let t = text.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || !den.is_none_or(digits) {
        return Err(Error::Parse(format!("malformed scalar {text:?}")));
    }
    let mut n: BigInt = num.parse().map_err(|_| Error::Parse(format!("malformed scalar {text:?}")))?;
    if neg {
        n = -n;
    }
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| Error::Parse(format!("malformed scalar {text:?}")))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    match field {
        FieldSpec::Rationals => Ok(Scalar::Rat(BigRational::new(n, d))),
        FieldSpec::Prime(p) => {
            let dm = field.bigint(&d);
            if dm.is_zero() {
                return Err(Error::Parse(format!("denominator of {text:?} divisible by {p}")));
            }
            field.bigint(&n).div(&dm)
        }
    }
}

pub fn field_inverse(x: &Scalar) -> Result<Scalar> {
    x.inv()
}

/// Absolute value of a rational scalar; prime-field scalars are returned as is.
pub fn abs(x: &Scalar) -> Scalar {
    match x {
        Scalar::Rat(r) => Scalar::Rat(r.abs()),
        other => other.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let q = FieldSpec::Rationals;
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(parse_scalar("1/2", q).unwrap(), q.fraction(1, 2).unwrap());
        assert_eq!(parse_scalar("3/2", f5).unwrap(), f5.int(4));
        assert_eq!(parse_scalar("-0", q).unwrap(), q.zero());
        assert_eq!(parse_scalar("-6/4", q).unwrap().render(), "-3/2");
    }

    #[test]
    fn parse_errors() {
        let q = FieldSpec::Rationals;
        let f5 = FieldSpec::prime(5).unwrap();
        assert!(matches!(parse_scalar("1/0", q), Err(Error::Parse(_))));
        assert!(matches!(parse_scalar("1/10", f5), Err(Error::Parse(_))));
        for bad in ["", "-", "1/", "/2", "1.5", "+3", "1/-2", "a"] {
            assert!(parse_scalar(bad, q).is_err(), "{bad}");
        }
    }

    #[test]
    fn inverses() {
        let q = FieldSpec::Rationals;
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(field_inverse(&q.int(2)).unwrap(), q.fraction(1, 2).unwrap());
        assert_eq!(field_inverse(&f5.int(2)).unwrap(), f5.int(3));
        assert_eq!(field_inverse(&f5.one()).unwrap(), f5.one());
        assert_eq!(field_inverse(&q.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn primality_is_checked() {
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(2_147_483_647).is_ok());
        assert!(FieldSpec::prime(2_147_483_659).is_err());
    }

    #[test]
    fn balanced_representatives() {
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.int(6).to_i64(), Some(-1));
        assert_eq!(f7.int(3).to_i64(), Some(3));
        assert_eq!(FieldSpec::Rationals.element(3).to_i64(), Some(2));
        assert_eq!(FieldSpec::Rationals.element(4).to_i64(), Some(-2));
    }
}
