use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::moebius::{Matrix, ProjPoint};
use crate::numfield::{FieldElement, Rational};

/// A point of `K ∪ {∞}` up to the Möbius action of `PGL_2(Q)`.
///
/// Equality is decided by [`moduli_equivalent`], not by comparing representatives.
#[derive(Clone, Serialize)]
pub struct ModulusClass {
    pub representative: ProjPoint,
}

impl ModulusClass {
    pub fn new(representative: ProjPoint) -> Self {
        Self { representative }
    }

    pub fn equivalent(&self, other: &ModulusClass) -> bool {
        moduli_equivalent(&self.representative, &other.representative)
    }
}

impl PartialEq for ModulusClass {
    fn eq(&self, other: &Self) -> bool {
        self.equivalent(other)
    }
}

impl Eq for ModulusClass {}

impl fmt::Display for ModulusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.representative.pretty())
    }
}

impl fmt::Debug for ModulusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Translation length of a parabolic fixing ∞.
fn translation(m: &Matrix) -> Result<FieldElement> {
    debug_assert!(m.c().is_zero());
    m.b().div(m.d())
}

/// Modulus `[t_beta / t_alpha]` of the rank-two parabolic group `<alpha, beta>`.
///
/// The common fixed point `p` is moved to ∞ by `[[0, 1], [1, -p]]`.
pub fn cusp_modulus(alpha: &Matrix, beta: &Matrix) -> Result<ModulusClass> {
    if !alpha.is_parabolic() || !beta.is_parabolic() {
        return Err(Error::NotParabolic);
    }
    if !alpha.commutes_projectively(beta) {
        return Err(Error::NotCommuting);
    }
    let normalizer = match alpha.parabolic_fixed_point()? {
        ProjPoint::Infinity => Matrix::identity(),
        ProjPoint::Finite(p) => Matrix::new(
            FieldElement::zero(),
            FieldElement::one(),
            FieldElement::one(),
            -p,
        )?,
    };
    let a = alpha.conjugate_by(&normalizer);
    let b = beta.conjugate_by(&normalizer);
    if !b.c().is_zero() {
        return Err(Error::NotCommuting);
    }
    let ratio = translation(&b)?.div(&translation(&a)?)?;
    Ok(ModulusClass::new(ProjPoint::Finite(ratio)))
}

fn is_rational_point(p: &ProjPoint) -> bool {
    match p {
        ProjPoint::Infinity => true,
        ProjPoint::Finite(z) => z.is_rational(),
    }
}

/// Rational `(a, b, c, d)` with `ad - bc != 0`.
pub type RationalMobius = [Rational; 4];

fn qdet(v: &[Rational]) -> Rational {
    &v[0] * &v[3] - &v[1] * &v[2]
}

/// A map in `PGL_2(Q)` between two rational points of the projective line.
fn rational_witness(z: &ProjPoint, w: &ProjPoint) -> RationalMobius {
    let q = |k: i64| Rational::from_integer(k.into());
    let coord = |p: &ProjPoint| {
        p.as_finite()
            .map(|x| x.as_rational().expect("rational").clone())
    };
    match (coord(z), coord(w)) {
        (None, None) => [q(1), q(0), q(0), q(1)],
        (None, Some(t)) => [t, q(1), q(1), q(0)],
        (Some(s), None) => [q(0), q(1), q(1), -s],
        (Some(s), Some(t)) => [q(1), t - s, q(0), q(1)],
    }
}

/// Some `(a, b, c, d)` in `GL_2(Q)` with `w = (a z + b) / (c z + d)`, if any.
///
/// For irrational `z` the linear conditions `c z w + d w - a z - b = 0` cut out
/// a subspace `S` of `Q^4`; a witness exists iff `ad - bc` is not identically
/// zero on `S`, which polarization reduces to basis vectors and their pairwise
/// sums. `cz + d` cannot vanish on `S` for irrational `z` unless `c = d = 0`,
/// which forces `a = b = 0` as well.
pub fn equivalence_witness(z: &ProjPoint, w: &ProjPoint) -> Option<RationalMobius> {
    match (is_rational_point(z), is_rational_point(w)) {
        (true, true) => return Some(rational_witness(z, w)),
        (false, false) => {}
        _ => return None,
    }
    let (z, w) = (z.as_finite()?, w.as_finite()?);
    let zw = z * w;
    let cols = [-z.clone(), -FieldElement::one(), zw, w.clone()];
    let rows: Vec<Vec<Rational>> = (0..4)
        .map(|i| cols.iter().map(|c| c.coeffs()[i].clone()).collect())
        .collect();
    let basis = linalg::kernel(&rows, 4);
    let candidates = basis.iter().cloned().chain(
        (0..basis.len())
            .flat_map(|i| (i + 1..basis.len()).map(move |j| (i, j)))
            .map(|(i, j)| {
                basis[i]
                    .iter()
                    .zip(&basis[j])
                    .map(|(x, y)| x + y)
                    .collect::<Vec<_>>()
            }),
    );
    for v in candidates {
        if !qdet(&v).is_zero() {
            let [a, b, c, d]: [Rational; 4] = v.try_into().expect("four coordinates");
            return Some([a, b, c, d]);
        }
    }
    None
}

/// Whether `w` lies in the `PGL_2(Q)`-orbit of `z`.
pub fn moduli_equivalent(z: &ProjPoint, w: &ProjPoint) -> bool {
    equivalence_witness(z, w).is_some()
}

/// Applies a rational Möbius map to a point.
pub fn apply_rational(m: &RationalMobius, z: &ProjPoint) -> ProjPoint {
    let e = |q: &Rational| FieldElement::from_rational(q.clone());
    let mat = Matrix::new(e(&m[0]), e(&m[1]), e(&m[2]), e(&m[3])).expect("invertible witness");
    mat.apply(z)
}
