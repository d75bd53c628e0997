//! 2x2 matrices over K acting on the Riemann sphere by Möbius maps.
//!
//! Conjugation follows the exponent convention `X^g = g X g^-1` throughout
//! (note: the opposite of the common right-action convention `g^-1 X g`).

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numfield::FieldElement;

/// Point of `K ∪ {∞}` on the boundary of hyperbolic space.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ProjPoint {
    Finite(FieldElement),
    Infinity,
}

impl ProjPoint {
    pub fn finite(z: impl Into<FieldElement>) -> Self {
        ProjPoint::Finite(z.into())
    }

    pub fn as_finite(&self) -> Option<&FieldElement> {
        match self {
            ProjPoint::Finite(z) => Some(z),
            ProjPoint::Infinity => None,
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            ProjPoint::Finite(z) => ProjPoint::Finite(z.conj()),
            ProjPoint::Infinity => ProjPoint::Infinity,
        }
    }

    pub fn pretty(&self) -> String {
        match self {
            ProjPoint::Finite(z) => z.pretty(),
            ProjPoint::Infinity => "∞".into(),
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(z) => write!(f, "{z}"),
            ProjPoint::Infinity => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ProjPoint::Finite(z) => z.serialize(s),
            ProjPoint::Infinity => s.serialize_str("inf"),
        }
    }
}

/// Invertible 2x2 matrix `[[a, b], [c, d]]` over K.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix")]
pub struct Matrix {
    a: FieldElement,
    b: FieldElement,
    c: FieldElement,
    d: FieldElement,
}

#[derive(Deserialize)]
struct RawMatrix {
    a: FieldElement,
    b: FieldElement,
    c: FieldElement,
    d: FieldElement,
}

impl TryFrom<RawMatrix> for Matrix {
    type Error = Error;
    fn try_from(r: RawMatrix) -> Result<Self> {
        Matrix::new(r.a, r.b, r.c, r.d)
    }
}

impl Matrix {
    /// Rejects singular matrices.
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Result<Self> {
        let m = Self { a, b, c, d };
        if m.det().is_zero() {
            Err(Error::SingularMatrix)
        } else {
            Ok(m)
        }
    }

    /// Integer entries; panics on a singular literal.
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into()).expect("nonsingular literal")
    }

    pub fn identity() -> Self {
        Self::from_ints(1, 0, 0, 1)
    }

    pub fn entries(&self) -> [&FieldElement; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn a(&self) -> &FieldElement {
        &self.a
    }
    pub fn b(&self) -> &FieldElement {
        &self.b
    }
    pub fn c(&self) -> &FieldElement {
        &self.c
    }
    pub fn d(&self) -> &FieldElement {
        &self.d
    }

    pub fn det(&self) -> FieldElement {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> FieldElement {
        &self.a + &self.d
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().is_one()
    }

    pub fn adjugate(&self) -> Self {
        Self {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    pub fn inverse(&self) -> Self {
        let k = self.det().inv().expect("nonsingular by construction");
        self.adjugate().scale(&k)
    }

    pub fn scale(&self, k: &FieldElement) -> Self {
        Self {
            a: &self.a * k,
            b: &self.b * k,
            c: &self.c * k,
            d: &self.d * k,
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&FieldElement::from_int(-1))
    }

    /// Entrywise complex conjugation.
    pub fn bar(&self) -> Self {
        Self {
            a: self.a.conj(),
            b: self.b.conj(),
            c: self.c.conj(),
            d: self.d.conj(),
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity();
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// `by * self * by^-1`, via the adjugate and one exact division by `det(by)`.
    pub fn conjugate_by(&self, by: &Matrix) -> Self {
        let k = by.det().inv().expect("nonsingular by construction");
        (&(by * self) * &by.adjugate()).scale(&k)
    }

    pub fn is_scalar(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    /// `m1 = κ m2` for some nonzero κ in K.
    pub fn eq_projective(&self, other: &Matrix) -> bool {
        let x = self.entries();
        let y = other.entries();
        (0..4).all(|i| (i + 1..4).all(|j| x[i] * y[j] == x[j] * y[i]))
    }

    /// Lower-left entry vanishes.
    pub fn is_upper_triangular(&self) -> bool {
        self.c.is_zero()
    }

    /// `tr^2 = 4 det` and not a scalar matrix.
    pub fn is_parabolic(&self) -> bool {
        let t = self.trace();
        &t * &t == self.det().scale_int(4) && !self.is_scalar()
    }

    pub fn parabolic_fixed_point(&self) -> Result<ProjPoint> {
        if !self.is_parabolic() {
            return Err(Error::NotParabolic);
        }
        if self.c.is_zero() {
            Ok(ProjPoint::Infinity)
        } else {
            let num = &self.a - &self.d;
            Ok(ProjPoint::Finite(num.div(&self.c.scale_int(2))?))
        }
    }

    /// `(a z + b)/(c z + d)` with the usual conventions at ∞.
    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        match p {
            ProjPoint::Infinity => {
                if self.c.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(self.a.div(&self.c).expect("c nonzero"))
                }
            }
            ProjPoint::Finite(z) => {
                let num = &self.a * z + &self.b;
                let den = &self.c * z + &self.d;
                if den.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(num.div(&den).expect("den nonzero"))
                }
            }
        }
    }

    pub fn commutes_projectively(&self, other: &Matrix) -> bool {
        (self * other).eq_projective(&(other * self))
    }

    /// `[[a, b], [c, d]]` with entries in the pretty element form.
    pub fn pretty(&self) -> String {
        format!(
            "[[{}, {}], [{}, {}]]",
            self.a.pretty(),
            self.b.pretty(),
            self.c.pretty(),
            self.d.pretty()
        )
    }
}

impl fmt::Display for Matrix {
    /// Literal form accepted by the word parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, o: &Matrix) -> Matrix {
        Matrix {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }
}

impl Mul for Matrix {
    type Output = Matrix;
    fn mul(self, o: Matrix) -> Matrix {
        &self * &o
    }
}

/// `by * x * by^-1`.
pub fn conjugate(x: &Matrix, by: &Matrix) -> Matrix {
    x.conjugate_by(by)
}

pub fn eq_projective(m1: &Matrix, m2: &Matrix) -> bool {
    m1.eq_projective(m2)
}

pub fn mobius_apply(m: &Matrix, p: &ProjPoint) -> ProjPoint {
    m.apply(p)
}
