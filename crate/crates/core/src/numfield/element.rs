use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::parse;

pub type Rational = num_rational::BigRational;

/// Parses a rational written as `a` or `a/b`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Element of K = Q(i, sqrt2), stored as coordinates on the ordered basis
/// `{1, i, sqrt2, i*sqrt2}`.
///
/// `BigRational` keeps every coordinate reduced, so the representation is
/// canonical and derived equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FieldElement {
    c: [Rational; 4],
}

impl FieldElement {
    pub fn new(one: Rational, i: Rational, sqrt2: Rational, isqrt2: Rational) -> Self {
        Self {
            c: [one, i, sqrt2, isqrt2],
        }
    }

    pub fn from_coeffs(c: [Rational; 4]) -> Self {
        Self { c }
    }

    /// Integer coordinates, mainly for literals.
    pub fn from_ints(one: i64, i: i64, sqrt2: i64, isqrt2: i64) -> Self {
        let r = |v: i64| Rational::from_integer(BigInt::from(v));
        Self::new(r(one), r(i), r(sqrt2), r(isqrt2))
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_ints(v, 0, 0, 0)
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::new(q, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn sqrt2() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn isqrt2() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    /// The coordinate on `1` if the element is rational.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.c[0])
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    /// In the real subfield Q(sqrt2).
    pub fn is_real(&self) -> bool {
        self.c[1].is_zero() && self.c[3].is_zero()
    }

    /// Complex conjugation: `i -> -i`, `sqrt2 -> sqrt2`.
    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.c;
        Self::new(a.clone(), -b, c.clone(), -d)
    }

    /// The Galois automorphism `sqrt2 -> -sqrt2` fixing `i`.
    pub fn sqrt2_flip(&self) -> Self {
        let [a, b, c, d] = &self.c;
        Self::new(a.clone(), b.clone(), -c, -d)
    }

    /// All four images under Gal(K/Q), identity first.
    pub fn galois_orbit(&self) -> [FieldElement; 4] {
        let s = self.sqrt2_flip();
        [self.clone(), self.conj(), s.conj(), s]
    }

    /// Real part `(a + conj a)/2`, an element of Q(sqrt2).
    pub fn re(&self) -> Self {
        let [a, _, c, _] = &self.c;
        Self::new(a.clone(), Rational::zero(), c.clone(), Rational::zero())
    }

    /// Imaginary part `(a - conj a)/(2i)`, an element of Q(sqrt2).
    pub fn im(&self) -> Self {
        let [_, b, _, d] = &self.c;
        Self::new(b.clone(), Rational::zero(), d.clone(), Rational::zero())
    }

    /// `|a|^2 = a * conj(a)`.
    pub fn norm_sq(&self) -> Self {
        self * &self.conj()
    }

    /// Absolute norm N_{K/Q}.
    pub fn norm(&self) -> Rational {
        let u = self.norm_sq();
        let n = &u * &u.sqrt2_flip();
        debug_assert!(n.is_rational());
        n.c[0].clone()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // a * conj(a) = u in Q(sqrt2); u * flip(u) = n in Q.
        let a_bar = self.conj();
        let u = self * &a_bar;
        let v = u.sqrt2_flip();
        let n = (&u * &v).c[0].clone();
        Ok((&a_bar * &v).scale(&n.recip()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self {
            c: [
                &self.c[0] * q,
                &self.c[1] * q,
                &self.c[2] * q,
                &self.c[3] * q,
            ],
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&Rational::from_integer(k.into()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Sign of a real element under the embedding with `sqrt2 > 0`.
    pub fn real_sign(&self) -> Result<Ordering> {
        if !self.is_real() {
            return Err(Error::NotReal(self.to_string()));
        }
        let (x, y) = (&self.c[0], &self.c[2]);
        let sx = x.cmp(&Rational::zero());
        let sy = y.cmp(&Rational::zero());
        Ok(match (sx, sy) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (a, b) if a == b => a,
            // opposite signs: compare x^2 against 2 y^2
            (sx, _) => {
                let lhs = x * x;
                let rhs = y * y * Rational::from_integer(2.into());
                match lhs.cmp(&rhs) {
                    Ordering::Greater => sx,
                    Ordering::Less => sx.reverse(),
                    Ordering::Equal => unreachable!("sqrt2 is irrational"),
                }
            }
        })
    }

    /// Floating-point image under the embedding `i -> i`, `sqrt2 -> 1.414..`.
    /// Diagnostics only.
    pub fn to_complex(&self) -> (f64, f64) {
        let f = |q: &Rational| q.to_f64().unwrap_or(f64::NAN);
        let s2 = std::f64::consts::SQRT_2;
        (
            f(&self.c[0]) + s2 * f(&self.c[2]),
            f(&self.c[1]) + s2 * f(&self.c[3]),
        )
    }

    /// Human-oriented form, e.g. `-7/5 + 86/5 i + 17/5 √2 + 9/5 i√2`.
    pub fn pretty(&self) -> String {
        const BASIS: [&str; 4] = ["", "i", "√2", "i√2"];
        let mut out = String::new();
        for (q, b) in self.c.iter().zip(BASIS) {
            if q.is_zero() {
                continue;
            }
            let neg = q.is_negative();
            let mag = q.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if b.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(b);
            } else {
                out.push_str(&format!("{mag} {b}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for FieldElement {
    /// Canonical form `(p1 + p2*i + p3*s2 + p4*i*s2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.c;
        write!(f, "({a} + {b}*i + {c}*s2 + {d}*i*s2)")
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl FromStr for FieldElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse::parse_element(s)
    }
}

impl From<i64> for FieldElement {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<Rational> for FieldElement {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

fn mul_coeffs(x: &[Rational; 4], y: &[Rational; 4]) -> [Rational; 4] {
    let [a, b, c, d] = x;
    let [e, f, g, h] = y;
    let two = Rational::from_integer(2.into());
    // i^2 = -1, s^2 = 2, (is)^2 = -2, i*s = is, i*is = -s, s*is = 2i
    [
        a * e - b * f + &two * (c * g - d * h),
        a * f + b * e + &two * (c * h + d * g),
        a * g + c * e - b * h - d * f,
        a * h + d * e + b * g + c * f,
    ]
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                let f: fn(&FieldElement, &FieldElement) -> FieldElement = $body;
                f(self, rhs)
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
        impl $tr<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |x, y| FieldElement {
    c: std::array::from_fn(|k| &x.c[k] + &y.c[k]),
});
forward_binop!(Sub, sub, |x, y| FieldElement {
    c: std::array::from_fn(|k| &x.c[k] - &y.c[k]),
});
forward_binop!(Mul, mul, |x, y| FieldElement {
    c: mul_coeffs(&x.c, &y.c),
});

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            *a += b;
        }
    }
}

impl SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, rhs: &FieldElement) {
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            *a -= b;
        }
    }
}

impl MulAssign<&FieldElement> for FieldElement {
    fn mul_assign(&mut self, rhs: &FieldElement) {
        self.c = mul_coeffs(&self.c, &rhs.c);
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            c: std::array::from_fn(|k| -&self.c[k]),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl std::iter::Sum for FieldElement {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    one: String,
    i: String,
    sqrt2: String,
    isqrt2: String,
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let [a, b, c, d] = &self.c;
        ElementJson {
            one: a.to_string(),
            i: b.to_string(),
            sqrt2: c.to_string(),
            isqrt2: d.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = ElementJson::deserialize(d)?;
        let p = |s: &str| {
            parse_rational(s).ok_or_else(|| D::Error::custom(format!("bad rational `{s}`")))
        };
        Ok(Self::new(p(&j.one)?, p(&j.i)?, p(&j.sqrt2)?, p(&j.isqrt2)?))
    }
}
