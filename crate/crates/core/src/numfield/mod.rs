//! Exact arithmetic in the biquadratic field K = Q(i, sqrt2).

mod element;
mod poly;
mod subfield;

pub use element::{parse_rational, FieldElement, Rational};
pub use poly::{is_algebraic_integer, minimal_polynomial, IntPolynomial};
pub use subfield::{compositum, subfield_generated, Subfield};

/// Field operation selector for [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn field_arith(a: &FieldElement, b: &FieldElement, op: FieldOp) -> crate::Result<FieldElement> {
    Ok(match op {
        FieldOp::Add => a + b,
        FieldOp::Sub => a - b,
        FieldOp::Mul => a * b,
        FieldOp::Div => a.div(b)?,
    })
}

pub fn complex_conjugate(a: &FieldElement) -> FieldElement {
    a.conj()
}
