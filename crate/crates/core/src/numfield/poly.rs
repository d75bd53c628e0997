use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::{FieldElement, Rational};
use crate::linalg;

/// Primitive integer polynomial with positive leading coefficient.
/// Coefficients are stored in ascending degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Normalizes to content 1 and positive leading coefficient.
    /// Returns `None` for the zero polynomial.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Option<Self> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.last()?.clone();
        let content = coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let content = if lead.is_negative() {
            -content
        } else {
            content
        };
        Some(Self {
            coeffs: coeffs.iter().map(|c| c / &content).collect(),
        })
    }

    /// Clears denominators of a rational polynomial (ascending).
    pub fn from_rationals(coeffs: &[Rational]) -> Option<Self> {
        let lcm = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
                .collect(),
        )
    }

    pub fn from_i64(coeffs: &[i64]) -> Option<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    /// Horner evaluation in K.
    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::zero(), |acc, c| {
                &acc * x + FieldElement::from_rational(Rational::from_integer(c.clone()))
            })
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as the coefficient list in ascending degree.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

/// Minimal polynomial over Q of an element of K.
///
/// Finds the first Q-linear dependence among `1, a, a^2, ...`; the kernel is
/// one-dimensional at the first dependent power.
pub fn minimal_polynomial(a: &FieldElement) -> IntPolynomial {
    let mut powers = vec![FieldElement::one()];
    loop {
        let next = powers.last().unwrap() * a;
        powers.push(next);
        // columns are powers, rows are coordinates
        let rows: Vec<Vec<Rational>> = (0..4)
            .map(|k| powers.iter().map(|p| p.coeffs()[k].clone()).collect())
            .collect();
        let ker = linalg::kernel(&rows, powers.len());
        if let Some(v) = ker.first() {
            debug_assert_eq!(ker.len(), 1);
            return IntPolynomial::from_rationals(v).expect("nonzero kernel vector");
        }
        assert!(powers.len() <= 5, "degree of an element of K exceeds 4");
    }
}

/// True iff the minimal polynomial is monic.
pub fn is_algebraic_integer(a: &FieldElement) -> bool {
    minimal_polynomial(a).is_monic()
}
