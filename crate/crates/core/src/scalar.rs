//! Exact arithmetic over the Gaussian rationals `Q(i)`.
//!
//! A scalar is stored as `(re + im·i) / den` with `den > 0` and the three
//! integers coprime, so every value has exactly one representation and a
//! product costs a single gcd normalization. There is no floating point
//! anywhere in the crate.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed scalar {text:?}: {reason}")]
    Parse { text: String, reason: &'static str },
}

/// A Gaussian rational.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigInt,
    im: BigInt,
    den: BigInt,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar { re: BigInt::zero(), im: BigInt::zero(), den: BigInt::one() }
    }
}

impl Scalar {
    /// Brings `(re + im·i)/den` to lowest terms with a positive denominator.
    fn normalized(mut re: BigInt, mut im: BigInt, mut den: BigInt) -> Scalar {
        debug_assert!(!den.is_zero());
        if den.is_negative() {
            re = -re;
            im = -im;
            den = -den;
        }
        if re.is_zero() && im.is_zero() {
            return Scalar::zero();
        }
        if !den.is_one() {
            let g = re.gcd(&im).gcd(&den);
            if !g.is_one() {
                re /= &g;
                im /= &g;
                den /= &g;
            }
        }
        Scalar { re, im, den }
    }

    pub fn new(re: BigRational, im: BigRational) -> Self {
        let den = re.denom().lcm(im.denom());
        let scale = |q: &BigRational| q.numer() * (&den / q.denom());
        Scalar::normalized(scale(&re), scale(&im), den)
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn i() -> Self {
        Scalar { re: BigInt::zero(), im: BigInt::one(), den: BigInt::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { re: n.into(), im: BigInt::zero(), den: BigInt::one() }
    }

    /// `num/den`, panicking on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::normalized(num.into(), BigInt::zero(), den.into())
    }

    /// `(re_num/re_den) + (im_num/im_den)·i`.
    pub fn gaussian(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        assert!(re_den != 0 && im_den != 0, "zero denominator");
        Scalar::new(
            BigRational::new(re_num.into(), re_den.into()),
            BigRational::new(im_num.into(), im_den.into()),
        )
    }

    pub fn re(&self) -> BigRational {
        BigRational::new(self.re.clone(), self.den.clone())
    }

    pub fn im(&self) -> BigRational {
        BigRational::new(self.im.clone(), self.den.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero() && self.den.is_one()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True for elements of `Z[i]`.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn conj(&self) -> Scalar {
        Scalar { re: self.re.clone(), im: -&self.im, den: self.den.clone() }
    }

    /// `|z|²`, a non-negative rational.
    pub fn norm_sqr(&self) -> BigRational {
        BigRational::new(&self.re * &self.re + &self.im * &self.im, &self.den * &self.den)
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = &self.re * &self.re + &self.im * &self.im;
        Ok(Scalar::normalized(&self.den * &self.re, -(&self.den * &self.im), n))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn square(&self) -> Scalar {
        self * self
    }

    /// True when `self` lies in the open upper half-plane or on the
    /// positive real axis. Exactly one of `z` and `-z` satisfies this for
    /// every nonzero `z`.
    pub fn is_principal_root(&self) -> bool {
        self.im.is_positive() || (self.im.is_zero() && self.re.is_positive())
    }

    /// An exact square root inside `Q(i)`, when one exists. The returned root
    /// is normalized with [`Scalar::is_principal_root`] (zero for zero).
    pub fn sqrt_exact(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        // (u + v i)^2 = p + q i  with  u^2 = (n + p)/2,  v^2 = (n - p)/2,  n = |z|.
        let (p, q) = (self.re(), self.im());
        let n = rational_sqrt(&self.norm_sqr())?;
        let two = BigRational::from_integer(2.into());
        let u = rational_sqrt(&((&n + &p) / &two))?;
        let mut v = rational_sqrt(&((&n - &p) / &two))?;
        if (&u * &v * &two) != q {
            v = -v;
        }
        let root = Scalar::new(u, v);
        debug_assert_eq!(&root.square(), self);
        Some(if root.is_principal_root() { root } else { -root })
    }

    /// Largest absolute value among the numerators and the common
    /// denominator. Used as a coefficient-height measure.
    pub fn height(&self) -> BigInt {
        [self.re.abs(), self.im.abs(), self.den.clone()].into_iter().max().expect("three entries")
    }

    pub fn render(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str) -> Result<Scalar, ScalarError> {
        text.parse()
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::new(q, BigRational::zero())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

fn add_scaled(a: &Scalar, b: &Scalar, negate_b: bool) -> Scalar {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let (bre, bim) = if negate_b { (-&b.re, -&b.im) } else { (b.re.clone(), b.im.clone()) };
    if a.den == b.den {
        return Scalar::normalized(&a.re + bre, &a.im + bim, a.den.clone());
    }
    Scalar::normalized(&a.re * &b.den + bre * &a.den, &a.im * &b.den + bim * &a.den, &a.den * &b.den)
}

fn mul(a: &Scalar, b: &Scalar) -> Scalar {
    if a.is_zero() || b.is_zero() {
        return Scalar::zero();
    }
    let den = &a.den * &b.den;
    if a.im.is_zero() {
        return Scalar::normalized(&a.re * &b.re, &a.re * &b.im, den);
    }
    if b.im.is_zero() {
        return Scalar::normalized(&a.re * &b.re, &a.im * &b.re, den);
    }
    Scalar::normalized(&a.re * &b.re - &a.im * &b.im, &a.re * &b.im + &a.im * &b.re, den)
}

forward_binop!(Add, add, |a, b| add_scaled(a, b, false));
forward_binop!(Sub, sub, |a, b| add_scaled(a, b, true));
forward_binop!(Mul, mul, mul);
// Panics on a zero divisor; use `checked_div` where the divisor is untrusted.
forward_binop!(Div, div, |a, b| a.checked_div(b).expect("division by zero scalar"));

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im, den: self.den }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -&self.re, im: -&self.im, den: self.den.clone() }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = add_scaled(self, rhs, false);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = add_scaled(self, rhs, true);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (self.re(), self.im());
        if im.is_zero() {
            return write_rational(f, &re);
        }
        if !re.is_zero() {
            write_rational(f, &re)?;
            if im.is_positive() {
                f.write_str("+")?;
            }
        }
        if im.is_one() {
            f.write_str("i")
        } else if (-&im).is_one() {
            f.write_str("-i")
        } else {
            write_rational(f, &im)?;
            f.write_str("i")
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

fn parse_rational(text: &str, whole: &str) -> Result<BigRational, ScalarError> {
    let err = |reason| ScalarError::Parse { text: whole.to_string(), reason };
    let digits = |s: &str| -> Result<BigInt, ScalarError> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("expected an unsigned integer"));
        }
        s.parse::<BigInt>().map_err(|_| err("expected an unsigned integer"))
    };
    match text.split_once('/') {
        None => Ok(BigRational::from_integer(digits(text)?)),
        Some((n, d)) => {
            let (n, d) = (digits(n)?, digits(d)?);
            if d.is_zero() {
                return Err(err("zero denominator"));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

fn split_sign(text: &str) -> (bool, &str) {
    match text.as_bytes().first() {
        Some(b'-') => (true, &text[1..]),
        Some(b'+') => (false, &text[1..]),
        _ => (false, text),
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;

    fn from_str(raw: &str) -> Result<Self, Self::Err> {
        let text: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(ScalarError::Parse { text: raw.to_string(), reason: "empty" });
        }
        let signed = |s: &str, allow_unit: bool| -> Result<BigRational, ScalarError> {
            let (neg, body) = split_sign(s);
            let q = if body.is_empty() && allow_unit {
                BigRational::one()
            } else {
                parse_rational(body, raw)?
            };
            Ok(if neg { -q } else { q })
        };
        let Some(body) = text.strip_suffix('i') else {
            return Ok(Scalar::from(signed(&text, false)?));
        };
        // The real/imaginary split is the last sign that is not the leading one.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        match split {
            None => Ok(Scalar::new(BigRational::zero(), signed(body, true)?)),
            Some(k) => Ok(Scalar::new(signed(&body[..k], false)?, signed(&body[k..], true)?)),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(i64),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
            Raw::Int(n) => Ok(Scalar::from_int(n)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(s("1/2+i") * s("1/2-i"), Scalar::frac(5, 4));
        assert_eq!(Scalar::zero() + s("3-2/7i"), s("3-2/7i"));
        assert_eq!(Scalar::frac(3, 4) / Scalar::frac(-3, 2), Scalar::frac(-1, 2));
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
        assert!(Scalar::one().checked_div(&Scalar::zero()).is_err());
    }

    #[test]
    fn parse_examples() {
        assert_eq!(s("3/2-1/2i"), Scalar::gaussian(3, 2, -1, 2));
        assert_eq!(s("0"), Scalar::zero());
        assert_eq!(s("i"), Scalar::i());
        assert_eq!(s("-i"), -Scalar::i());
        assert_eq!(s(" 1 + i "), Scalar::gaussian(1, 1, 1, 1));
        assert_eq!(s("-4/6"), Scalar::frac(-2, 3));
        assert_eq!(s("+2i"), Scalar::gaussian(0, 1, 2, 1));
        assert_eq!(s("-1/2+3i"), Scalar::gaussian(-1, 2, 3, 1));
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "1/0", "1//2", "abc", "1+", "i+1", "1.5", "--1", "1+2", "ii", "1/-2"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn render_is_canonical() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::gaussian(3, 2, -1, 2).to_string(), "3/2-1/2i");
        assert_eq!(Scalar::i().to_string(), "i");
        assert_eq!((-Scalar::i()).to_string(), "-i");
        assert_eq!(Scalar::gaussian(1, 1, 1, 1).to_string(), "1+i");
        assert_eq!(Scalar::gaussian(0, 1, 2, 4).to_string(), "1/2i");
        assert_eq!(Scalar::frac(-6, 4).to_string(), "-3/2");
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(Scalar::frac(1, 4).sqrt_exact(), Some(Scalar::frac(1, 2)));
        assert_eq!(Scalar::from_int(-1).sqrt_exact(), Some(Scalar::i()));
        assert_eq!(s("2i").sqrt_exact(), Some(s("1+i")));
        assert_eq!(s("-2i").sqrt_exact(), Some(s("-1+i")));
        assert_eq!(Scalar::from_int(-4).sqrt_exact(), Some(s("2i")));
        assert_eq!(Scalar::from_int(2).sqrt_exact(), None);
        assert_eq!(s("1+4i").sqrt_exact(), None);
        assert_eq!(s("5+4i").sqrt_exact(), None);
    }

    #[test]
    fn principal_root_convention() {
        assert!(Scalar::one().is_principal_root());
        assert!(Scalar::i().is_principal_root());
        assert!(s("-3+i").is_principal_root());
        assert!(!Scalar::from_int(-1).is_principal_root());
        assert!(!s("5-i").is_principal_root());
        assert!(!Scalar::zero().is_principal_root());
    }
}
