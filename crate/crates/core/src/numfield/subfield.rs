use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::FieldElement;

/// One of the five subfields of K = Q(i, sqrt2).
///
/// Gal(K/Q) is the Klein four-group, so besides Q and K there are exactly the
/// three quadratic fields Q(i), Q(sqrt2) and Q(i sqrt2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Subfield {
    #[serde(rename = "Q")]
    Q,
    #[serde(rename = "Q_i")]
    QI,
    #[serde(rename = "Q_sqrt2")]
    QSqrt2,
    #[serde(rename = "Q_isqrt2")]
    QISqrt2,
    #[serde(rename = "Q_i_sqrt2")]
    QISqrt2Full,
}

impl Subfield {
    pub const ALL: [Subfield; 5] = [
        Subfield::Q,
        Subfield::QI,
        Subfield::QSqrt2,
        Subfield::QISqrt2,
        Subfield::QISqrt2Full,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Subfield::Q => "Q",
            Subfield::QI => "Q_i",
            Subfield::QSqrt2 => "Q_sqrt2",
            Subfield::QISqrt2 => "Q_isqrt2",
            Subfield::QISqrt2Full => "Q_i_sqrt2",
        }
    }

    pub fn pretty(self) -> &'static str {
        match self {
            Subfield::Q => "ℚ",
            Subfield::QI => "ℚ(i)",
            Subfield::QSqrt2 => "ℚ(√2)",
            Subfield::QISqrt2 => "ℚ(i√2)",
            Subfield::QISqrt2Full => "ℚ(i,√2)",
        }
    }

    pub fn degree(self) -> u32 {
        match self {
            Subfield::Q => 1,
            Subfield::QISqrt2Full => 4,
            _ => 2,
        }
    }

    /// Membership by vanishing coordinates.
    pub fn contains(self, a: &FieldElement) -> bool {
        let [_, i, s, is] = a.coeffs();
        use num_traits::Zero;
        match self {
            Subfield::Q => i.is_zero() && s.is_zero() && is.is_zero(),
            Subfield::QI => s.is_zero() && is.is_zero(),
            Subfield::QSqrt2 => i.is_zero() && is.is_zero(),
            Subfield::QISqrt2 => i.is_zero() && s.is_zero(),
            Subfield::QISqrt2Full => true,
        }
    }

    pub fn is_subfield_of(self, other: Subfield) -> bool {
        self == other || self == Subfield::Q || other == Subfield::QISqrt2Full
    }

    /// Join in the subfield lattice.
    pub fn compositum(self, other: Subfield) -> Subfield {
        if self.is_subfield_of(other) {
            other
        } else if other.is_subfield_of(self) {
            self
        } else {
            Subfield::QISqrt2Full
        }
    }

    /// Smallest subfield containing `a`.
    pub fn of(a: &FieldElement) -> Subfield {
        Subfield::ALL
            .into_iter()
            .find(|f| f.contains(a))
            .expect("K contains everything")
    }
}

/// Smallest of the five subfields containing all inputs.
pub fn subfield_generated<'a, I>(elements: I) -> Subfield
where
    I: IntoIterator<Item = &'a FieldElement>,
{
    let mut acc = Subfield::Q;
    for a in elements {
        acc = acc.compositum(Subfield::of(a));
        if acc == Subfield::QISqrt2Full {
            break;
        }
    }
    acc
}

/// Join of two subfields.
pub fn compositum(f1: Subfield, f2: Subfield) -> Subfield {
    f1.compositum(f2)
}

impl fmt::Display for Subfield {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Subfield {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Subfield::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| format!("unknown subfield tag `{s}`"))
    }
}
