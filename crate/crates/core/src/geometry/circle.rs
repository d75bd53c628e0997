use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::moebius::{Matrix, ProjPoint};
use crate::numfield::FieldElement;

/// Circle or line `A|z|^2 + conj(B) z + B conj(z) + C = 0` on the Riemann
/// sphere, i.e. the Hermitian form `[[A, B], [conj B, C]]`.
///
/// `A` and `C` lie in the real subfield and `|B|^2 - AC > 0`. Lines have
/// `A = 0` and pass through ∞.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtendedCircle {
    a: FieldElement,
    b: FieldElement,
    c: FieldElement,
}

/// Relative position of two circles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Inversive {
    Orthogonal,
    Tangent,
    Other,
}

impl ExtendedCircle {
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement) -> Result<Self> {
        if !a.is_real() || !c.is_real() {
            return Err(Error::InvalidCircle("A and C must be real".into()));
        }
        let circle = Self { a, b, c };
        if circle.discriminant().real_sign()? != Ordering::Greater {
            return Err(Error::InvalidCircle(format!(
                "|B|^2 - AC = {} is not positive",
                circle.discriminant().pretty()
            )));
        }
        Ok(circle)
    }

    /// The extended real line `R ∪ {∞}`.
    pub fn real_axis() -> Self {
        Self::new(
            FieldElement::zero(),
            FieldElement::i(),
            FieldElement::zero(),
        )
        .expect("valid")
    }

    /// The horizontal line `Im z = t` for real `t`.
    pub fn horizontal_line(t: &FieldElement) -> Result<Self> {
        if !t.is_real() {
            return Err(Error::NotReal(t.to_string()));
        }
        Self::new(FieldElement::zero(), FieldElement::i(), t.scale_int(-2))
    }

    /// `|z - center|^2 = radius_sq`.
    pub fn from_center(center: &FieldElement, radius_sq: &FieldElement) -> Result<Self> {
        Self::new(FieldElement::one(), -center, center.norm_sq() - radius_sq)
    }

    /// The unique circle or line through three distinct points.
    pub fn through_points(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> Result<Self> {
        if p == q || q == r || p == r {
            return Err(Error::InvalidCircle("points are not distinct".into()));
        }
        let one = FieldElement::one;
        let zero = FieldElement::zero;
        // Möbius map sending 0, 1, ∞ to p, q, r
        let m = match (p, q, r) {
            (ProjPoint::Finite(p), ProjPoint::Finite(q), ProjPoint::Infinity) => {
                Matrix::new(q - p, p.clone(), zero(), one())?
            }
            (ProjPoint::Infinity, ProjPoint::Finite(q), ProjPoint::Finite(r)) => {
                Matrix::new(r.clone(), q - r, one(), zero())?
            }
            (ProjPoint::Finite(p), ProjPoint::Infinity, ProjPoint::Finite(r)) => {
                Matrix::new(r.clone(), -p, one(), -one())?
            }
            (ProjPoint::Finite(p), ProjPoint::Finite(q), ProjPoint::Finite(r)) => {
                let k = (q - p).div(&(r - q))?;
                Matrix::new(r * &k, p.clone(), k, one())?
            }
            _ => unreachable!("at most one point is ∞"),
        };
        Ok(image_circle(&m, &Self::real_axis()))
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

    pub fn is_line(&self) -> bool {
        self.a.is_zero()
    }

    /// `|B|^2 - AC`.
    pub fn discriminant(&self) -> FieldElement {
        self.b.norm_sq() - &self.a * &self.c
    }

    /// Value of the form at a finite point.
    pub fn eval(&self, z: &FieldElement) -> FieldElement {
        &self.a * &z.norm_sq() + &self.b.conj() * z + &self.b * &z.conj() + &self.c
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        match p {
            ProjPoint::Infinity => self.is_line(),
            ProjPoint::Finite(z) => self.eval(z).is_zero(),
        }
    }

    /// Scales by a nonzero real so that the first nonzero of
    /// `A, Re B, Im B, C` is 1; two forms define the same circle iff their
    /// normalizations agree.
    pub fn normalized(&self) -> Self {
        let pivot = [&self.a, &self.b.re(), &self.b.im(), &self.c]
            .into_iter()
            .find(|x| !x.is_zero())
            .expect("nonzero form")
            .inv()
            .expect("nonzero pivot");
        Self {
            a: &self.a * &pivot,
            b: &self.b * &pivot,
            c: &self.c * &pivot,
        }
    }

    pub fn same_circle(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    pub fn pretty(&self) -> String {
        format!(
            "(A: {}, B: {}, C: {})",
            self.a.pretty(),
            self.b.pretty(),
            self.c.pretty()
        )
    }
}

/// Image of a circle under a Möbius map: the form `adj(m)^* H adj(m)`,
/// normalized.
pub fn image_circle(m: &Matrix, circle: &ExtendedCircle) -> ExtendedCircle {
    let adj = m.adjugate();
    let [p, q, r, s] = adj.entries();
    let (a, b, c) = (&circle.a, &circle.b, &circle.c);
    let bb = b.conj();
    // H * adj
    let h11 = a * p + b * r;
    let h12 = a * q + b * s;
    let h21 = &bb * p + c * r;
    let h22 = &bb * q + c * s;
    // adj^* * (H adj)
    let (pc, qc, rc, sc) = (p.conj(), q.conj(), r.conj(), s.conj());
    let na = &pc * &h11 + &rc * &h21;
    let nb = &pc * &h12 + &rc * &h22;
    let nc = &qc * &h12 + &sc * &h22;
    ExtendedCircle {
        a: na,
        b: nb,
        c: nc,
    }
    .normalized()
}

/// With `Δ = 2 Re(B1 conj B2) - A1 C2 - A2 C1`: orthogonal iff `Δ = 0`,
/// tangent iff `Δ^2 = 4 D1 D2` where `Di` are the discriminants.
pub fn inversive_test(c1: &ExtendedCircle, c2: &ExtendedCircle) -> Inversive {
    let delta = (&c1.b * &c2.b.conj()).re().scale_int(2) - &c1.a * &c2.c - &c2.a * &c1.c;
    if delta.is_zero() {
        Inversive::Orthogonal
    } else if &delta * &delta == (&c1.discriminant() * &c2.discriminant()).scale_int(4) {
        Inversive::Tangent
    } else {
        Inversive::Other
    }
}

impl fmt::Display for ExtendedCircle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(A: {}, B: {}, C: {})", self.a, self.b, self.c)
    }
}

impl fmt::Debug for ExtendedCircle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

#[derive(Serialize, Deserialize)]
struct RawCircle {
    #[serde(rename = "A")]
    a: String,
    #[serde(rename = "B")]
    b: String,
    #[serde(rename = "C")]
    c: String,
}

/// Serialized as `{"A": .., "B": .., "C": ..}` with element expressions.
impl Serialize for ExtendedCircle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawCircle {
            a: self.a.to_string(),
            b: self.b.to_string(),
            c: self.c.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExtendedCircle {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawCircle::deserialize(d)?;
        let e = |s: &str| s.parse::<FieldElement>().map_err(D::Error::custom);
        ExtendedCircle::new(e(&raw.a)?, e(&raw.b)?, e(&raw.c)?).map_err(D::Error::custom)
    }
}
