use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::Namespace;
use crate::error::Result;
use crate::moebius::Matrix;

/// A word over named generators.
///
/// `Conj(outer, inner)` evaluates to `outer * inner * outer^-1` and
/// `Bar(inner)` to the entrywise complex conjugate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordExpr {
    Name(String),
    Literal(Matrix),
    Product(Vec<WordExpr>),
    Power(Box<WordExpr>, i64),
    Conj(Box<WordExpr>, Box<WordExpr>),
    Bar(Box<WordExpr>),
}

impl WordExpr {
    pub fn name(s: impl Into<String>) -> Self {
        WordExpr::Name(s.into())
    }

    pub fn parse(src: &str) -> Result<Self> {
        crate::parse::parse_word(src)
    }

    /// Builds a product, flattening nested products and dropping empty ones.
    pub fn product<I: IntoIterator<Item = WordExpr>>(factors: I) -> Self {
        let mut out = Vec::new();
        for f in factors {
            match f {
                WordExpr::Product(inner) => out.extend(inner),
                other => out.push(other),
            }
        }
        if out.len() == 1 {
            out.pop().unwrap()
        } else {
            WordExpr::Product(out)
        }
    }

    pub fn pow(self, e: i64) -> Self {
        if e == 1 {
            self
        } else {
            WordExpr::Power(Box::new(self), e)
        }
    }

    pub fn inv(self) -> Self {
        self.pow(-1)
    }

    pub fn bar(self) -> Self {
        WordExpr::Bar(Box::new(self))
    }

    /// `by * self * by^-1`.
    pub fn conj_by(self, by: WordExpr) -> Self {
        WordExpr::Conj(Box::new(by), Box::new(self))
    }

    pub fn evaluate(&self, ns: &Namespace) -> Result<Matrix> {
        Ok(match self {
            WordExpr::Name(n) => ns.get(n)?.clone(),
            WordExpr::Literal(m) => m.clone(),
            WordExpr::Product(fs) => {
                let mut acc = Matrix::identity();
                for f in fs {
                    acc = &acc * &f.evaluate(ns)?;
                }
                acc
            }
            WordExpr::Power(b, e) => b.evaluate(ns)?.pow(*e),
            WordExpr::Conj(outer, inner) => inner.evaluate(ns)?.conjugate_by(&outer.evaluate(ns)?),
            WordExpr::Bar(inner) => inner.evaluate(ns)?.bar(),
        })
    }

    /// Number of generator occurrences, counting powers with multiplicity.
    pub fn len(&self) -> usize {
        match self {
            WordExpr::Name(_) | WordExpr::Literal(_) => 1,
            WordExpr::Product(fs) => fs.iter().map(WordExpr::len).sum(),
            WordExpr::Power(b, e) => b.len() * e.unsigned_abs() as usize,
            WordExpr::Conj(o, i) => 2 * o.len() + i.len(),
            WordExpr::Bar(i) => i.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for WordExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordExpr::Name(n) => f.write_str(n),
            WordExpr::Literal(m) => write!(f, "{m}"),
            WordExpr::Product(fs) => {
                if fs.is_empty() {
                    return f.write_str("id");
                }
                for (k, x) in fs.iter().enumerate() {
                    if k > 0 {
                        f.write_str("*")?;
                    }
                    match x {
                        WordExpr::Product(_) => write!(f, "({x})")?,
                        _ => write!(f, "{x}")?,
                    }
                }
                Ok(())
            }
            WordExpr::Power(b, e) => match **b {
                WordExpr::Product(_) | WordExpr::Power(..) => write!(f, "({b})^{e}"),
                _ => write!(f, "{b}^{e}"),
            },
            WordExpr::Conj(o, i) => write!(f, "Conj({o}, {i})"),
            WordExpr::Bar(i) => write!(f, "Bar({i})"),
        }
    }
}

impl FromStr for WordExpr {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        WordExpr::parse(s)
    }
}

impl Serialize for WordExpr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> WordExpr {
        s.parse().unwrap()
    }

    #[test]
    fn display_round_trips() {
        for src in [
            "r*s*r*s^-2",
            "(s*r*s)*r^-1*(s*r*s)^-1",
            "Conj(c^2, delta3^-1)",
            "Bar((s*r*s)^-1)*s",
            "(r^2)^3",
        ] {
            let parsed = w(src);
            assert_eq!(w(&parsed.to_string()), parsed, "{src}");
        }
        assert_eq!(w("r*s*r*s^-2").to_string(), "r*s*r*s^-2");
        let lit = w("[[16, -25], [9, -14]]");
        assert_eq!(w(&lit.to_string()), lit);
    }

    #[test]
    fn builders() {
        let x = WordExpr::name("s").conj_by(WordExpr::name("m")).inv();
        assert_eq!(x.to_string(), "Conj(m, s)^-1");
        let p = WordExpr::product([w("r*s"), w("r"), WordExpr::name("s").pow(-2)]);
        assert_eq!(p, w("r*s*r*s^-2"));
        assert_eq!(p.len(), 5);
    }

    #[test]
    fn evaluation() {
        let ns = Namespace::links();
        let m = w("r*s*r*s^-2").evaluate(&ns).unwrap();
        assert!(m.eq_projective(&Matrix::from_ints(-1, 5, 0, -1)));
        let s = ns.get("s").unwrap().clone();
        assert_eq!(w("Bar(Bar(s))").evaluate(&ns).unwrap(), s);
        assert_eq!(w("r*r^-1").evaluate(&ns).unwrap(), Matrix::identity());
        let err = w("r*q").evaluate(&ns).unwrap_err();
        assert!(matches!(err, crate::Error::UnknownName { .. }));
    }
}
