use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficient domain of a scalar: the integers, the rationals, or a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Domain {
    Integer,
    Rational,
    Prime(u64),
}

impl Domain {
    /// The prime field with `p` elements; `p` must be prime.
    pub fn prime(p: u64) -> Result<Domain> {
        if is_prime(p) {
            Ok(Domain::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Domain::Integer)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Domain::Prime(p) => p,
            _ => 0,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Domain::Integer => Scalar::Int(BigInt::from(n)),
            Domain::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Domain::Prime(p) => Scalar::Mod {
                value: (n as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            Domain::Integer => Scalar::Int(n.clone()),
            Domain::Rational => Scalar::Rat(BigRational::from_integer(n.clone())),
            Domain::Prime(p) => Scalar::Mod {
                value: reduce_bigint(n, p),
                modulus: p,
            },
        }
    }

    pub(crate) fn require_field(self) -> Result<()> {
        if self.is_field() {
            Ok(())
        } else {
            Err(Error::WrongDomain {
                expected: "a field (Q or F_p)",
                found: self,
            })
        }
    }

    pub(crate) fn require_same(self, other: Domain) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::DomainMismatch(self, other))
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Integer => write!(f, "Z"),
            Domain::Rational => write!(f, "Q"),
            Domain::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Domain {
    type Err = Error;

    /// Accepts `Z`, `Q`, `F<p>` and `Fp <p>`.
    fn from_str(s: &str) -> Result<Domain> {
        let s = s.trim();
        match s {
            "Z" => Ok(Domain::Integer),
            "Q" => Ok(Domain::Rational),
            _ => {
                let rest = s
                    .strip_prefix("Fp")
                    .or_else(|| s.strip_prefix('F'))
                    .ok_or_else(|| Error::parse(format!("unknown coefficient domain `{s}`")))?;
                let p: u64 = rest
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(format!("bad prime in domain `{s}`")))?;
                Domain::prime(p)
            }
        }
    }
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// An exact scalar. Rationals are kept normalized (positive denominator,
/// coprime numerator) and residues are kept in `0..modulus`.
///
/// Arithmetic operators panic when the operands live in different domains;
/// container types check domains at their own boundaries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    Mod { value: u64, modulus: u64 },
}

impl Scalar {
    /// A residue modulo the prime `p`.
    pub fn residue(value: i64, p: u64) -> Result<Scalar> {
        Ok(Domain::prime(p)?.from_i64(value))
    }

    /// The rational `num/den`, normalized.
    pub fn rational(num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::invalid("zero denominator"));
        }
        Ok(Scalar::Rat(BigRational::new(num.into(), den.into())))
    }

    pub fn domain(&self) -> Domain {
        match self {
            Scalar::Int(_) => Domain::Integer,
            Scalar::Rat(_) => Domain::Rational,
            Scalar::Mod { modulus, .. } => Domain::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(n) => n.is_zero(),
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Int(n) => n.is_one(),
            Scalar::Rat(q) => q.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse in a field; `None` for zero or for integers
    /// other than ±1.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Int(n) => {
                if n.abs().is_one() {
                    Some(self.clone())
                } else {
                    None
                }
            }
            Scalar::Rat(q) => Some(Scalar::Rat(q.recip())),
            Scalar::Mod { value, modulus } => Some(Scalar::Mod {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            }),
        }
    }

    /// Exact division; over the integers only when the quotient is integral.
    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => {
                if b.is_zero() {
                    return None;
                }
                let (q, r) = a.div_rem(b);
                r.is_zero().then_some(Scalar::Int(q))
            }
            _ => rhs.inverse().map(|inv| self * &inv),
        }
    }

    /// Converts into `domain`: integers embed everywhere, rationals map into
    /// prime fields when the denominator is invertible, residues only stay
    /// in their own field.
    pub fn coerce(&self, domain: Domain) -> Result<Scalar> {
        if self.domain() == domain {
            return Ok(self.clone());
        }
        match (self, domain) {
            (Scalar::Int(n), d) => Ok(d.from_bigint(n)),
            (Scalar::Rat(q), Domain::Integer) => {
                if q.is_integer() {
                    Ok(Scalar::Int(q.to_integer()))
                } else {
                    Err(Error::invalid(format!("{self} is not an integer")))
                }
            }
            (Scalar::Rat(q), Domain::Prime(p)) => {
                let num = domain.from_bigint(q.numer());
                let den = domain.from_bigint(q.denom());
                den.inverse()
                    .map(|inv| &num * &inv)
                    .ok_or_else(|| Error::invalid(format!("denominator of {self} vanishes mod {p}")))
            }
            _ => Err(Error::DomainMismatch(self.domain(), domain)),
        }
    }

    /// The value as a small integer, when it is one.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Int(n) => n.to_i64(),
            Scalar::Rat(q) if q.is_integer() => q.to_integer().to_i64(),
            Scalar::Rat(_) => None,
            Scalar::Mod { value, .. } => i64::try_from(*value).ok(),
        }
    }

    /// Integer value; panics outside the integer domain.
    pub fn as_bigint(&self) -> &BigInt {
        match self {
            Scalar::Int(n) => n,
            other => panic!("expected an integer scalar, got {other}"),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Int(n) => n.is_negative(),
            Scalar::Rat(q) => q.is_negative(),
            Scalar::Mod { .. } => false,
        }
    }

    /// Textual form without the `mod p` suffix, for contexts where the field
    /// is already known.
    pub fn to_plain_string(&self) -> String {
        match self {
            Scalar::Mod { value, .. } => value.to_string(),
            other => other.to_string(),
        }
    }

    /// Parses `-?[0-9]+`, `p/q` or `r mod p`. Bare integers are placed in
    /// `domain` when given, otherwise they are integers; `p/q` is rational
    /// unless `domain` is a prime field.
    pub fn parse_in(text: &str, domain: Option<Domain>) -> Result<Scalar> {
        let t = text.trim();
        let bad = || Error::parse(format!("bad scalar `{t}`"));
        if let Some((r, p)) = t.split_once("mod") {
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            let r: BigInt = r.trim().parse().map_err(|_| bad())?;
            let d = Domain::prime(p)?;
            let s = d.from_bigint(&r);
            return match domain {
                Some(want) if want != d => Err(Error::DomainMismatch(d, want)),
                _ => Ok(s),
            };
        }
        let value = if let Some((n, m)) = t.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let m: BigInt = m.trim().parse().map_err(|_| bad())?;
            if m.is_zero() {
                return Err(Error::parse(format!("zero denominator in `{t}`")));
            }
            Scalar::Rat(BigRational::new(n, m))
        } else {
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Scalar::Int(n)
        };
        match domain {
            Some(d) => value.coerce(d),
            None => Ok(value),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(n) => write!(f, "{n}"),
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

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scalar> {
        Scalar::parse_in(s, None)
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar domain mismatch: {} vs {}", a.domain(), b.domain())
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a + b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => {
                let s = a + b;
                Scalar::Mod {
                    value: if s >= *p { s - p } else { s },
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a - b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => Scalar::Mod {
                value: if a >= b { a - b } else { p - (b - a) },
                modulus: *p,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a * b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) if p == q => Scalar::Mod {
                value: mul_mod(*a, *b, *p),
                modulus: *p,
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Int(a) => Scalar::Int(-a),
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_normalized() {
        let a = Scalar::rational(2, -4).unwrap();
        assert_eq!(a.to_string(), "-1/2");
        let b = &a + &Scalar::rational(1, 2).unwrap();
        assert!(b.is_zero());
        assert_eq!(Scalar::rational(6, 3).unwrap(), Domain::Rational.from_i64(2));
    }

    #[test]
    fn residues_stay_reduced() {
        let a = Scalar::residue(-1, 7).unwrap();
        assert_eq!(a, Scalar::Mod { value: 6, modulus: 7 });
        let inv = Scalar::residue(3, 7).unwrap().inverse().unwrap();
        assert_eq!(inv, Scalar::residue(5, 7).unwrap());
        assert_eq!(Domain::Prime(5).from_i64(-12), Scalar::residue(3, 5).unwrap());
    }

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(Domain::prime(9), Err(Error::NotPrime(9)));
        assert_eq!(Domain::prime(1), Err(Error::NotPrime(1)));
        assert!(Domain::prime(2).is_ok());
    }

    #[test]
    fn parses_scalar_syntax() {
        assert_eq!("-12".parse::<Scalar>().unwrap(), Domain::Integer.from_i64(-12));
        assert_eq!("3/6".parse::<Scalar>().unwrap(), Scalar::rational(1, 2).unwrap());
        assert_eq!("8 mod 5".parse::<Scalar>().unwrap(), Scalar::residue(3, 5).unwrap());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
        assert!("1 mod 4".parse::<Scalar>().is_err());
        let s = Scalar::parse_in("1/2", Some(Domain::Prime(3))).unwrap();
        assert_eq!(s, Scalar::residue(2, 3).unwrap());
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "-7", "5/3", "-1/9", "4 mod 11"] {
            let v: Scalar = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
    }

    #[test]
    fn integer_division_is_exact_only() {
        let six = Domain::Integer.from_i64(6);
        let four = Domain::Integer.from_i64(4);
        assert_eq!(
            six.checked_div(&Domain::Integer.from_i64(3)),
            Some(Domain::Integer.from_i64(2))
        );
        assert_eq!(six.checked_div(&four), None);
    }
}
