use std::fmt;

use serde::Serialize;

use super::{Namespace, NamespaceKind, WordExpr};
use crate::error::{Error, Result};
use crate::moebius::Matrix;

fn name(s: &str) -> WordExpr {
    WordExpr::name(s)
}

fn c_pow(k: u32) -> WordExpr {
    name("c").pow(k as i64)
}

/// `x` conjugated by `c^k`, left bare when `k = 0`.
fn by_c_pow(x: WordExpr, k: u32) -> WordExpr {
    if k == 0 {
        x
    } else {
        x.conj_by(c_pow(k))
    }
}

fn parse(s: &str) -> WordExpr {
    s.parse().expect("builder word")
}

/// Peripheral element commuting with `p1` in the links namespace:
/// `Bar((srs)^-1) * prod_{k<n} Conj(c^2k, delta3^-1) * Conj(c^2n, srs) * prod_{k=n-1..0} Conj(c^2k, delta1)`.
pub fn lambda1_word(n: u32) -> WordExpr {
    let srs = parse("s*r*s");
    let mut f = vec![srs.clone().inv().bar()];
    f.extend((0..n).map(|k| by_c_pow(parse("delta3^-1"), 2 * k)));
    f.push(by_c_pow(srs, 2 * n));
    f.extend((0..n).rev().map(|k| by_c_pow(name("delta1"), 2 * k)));
    WordExpr::product(f)
}

/// Peripheral element commuting with `p2` in the links namespace.
pub fn lambda2_word(n: u32) -> WordExpr {
    let sris = parse("s*r*s^-1");
    let mut f = vec![sris.clone().inv().bar()];
    f.extend((0..n).map(|k| by_c_pow(parse("delta4^-1"), 2 * k)));
    f.push(by_c_pow(sris, 2 * n));
    WordExpr::product(f)
}

/// Peripheral element commuting with `mu` in the one-cusped namespace:
/// `Conj(c, y^-1) * prod_{k=2..n} Conj(c^k, alpha) * Conj(c^n*m, beta) * gamma`.
pub fn lambda_onecusped_word(n: u32) -> WordExpr {
    let mut f = vec![by_c_pow(parse("y^-1"), 1)];
    f.extend((2..=n).map(|k| by_c_pow(name("alpha"), k)));
    f.push(name("beta").conj_by(WordExpr::product([c_pow(n), name("m")])));
    f.push(name("gamma"));
    WordExpr::product(f)
}

/// The three generator families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Two-component links, `n >= 0`.
    Links,
    /// Their mutants along the separating four-punctured sphere, `n >= 0`.
    Mutant,
    /// One-cusped manifolds, `n >= 1`.
    Onecusped,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Links => "links",
            Family::Mutant => "mutant",
            Family::Onecusped => "onecusped",
        }
    }

    pub fn namespace(self) -> NamespaceKind {
        match self {
            Family::Links | Family::Mutant => NamespaceKind::Links,
            Family::Onecusped => NamespaceKind::Onecusped,
        }
    }

    pub fn min_n(self) -> u32 {
        match self {
            Family::Onecusped => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub label: WordExpr,
    pub matrix: Matrix,
}

/// A finitely generated subgroup of `SL_2(K)` given by labelled generators.
#[derive(Debug, Clone, Serialize)]
pub struct GroupSpec {
    pub name: String,
    pub generators: Vec<Generator>,
}

impl GroupSpec {
    /// Every generator must have determinant exactly 1.
    pub fn new(name: impl Into<String>, generators: Vec<Generator>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Config("group has no generators".into()));
        }
        if let Some(g) = generators.iter().find(|g| !g.matrix.is_unimodular()) {
            return Err(Error::NotUnimodular(g.label.to_string()));
        }
        Ok(Self {
            name: name.into(),
            generators,
        })
    }

    /// Labels are words in `ns`.
    pub fn from_words(name: impl Into<String>, ns: &Namespace, words: &[&str]) -> Result<Self> {
        let generators = words
            .iter()
            .map(|w| {
                let label = WordExpr::parse(w)?;
                let matrix = label.evaluate(ns)?;
                Ok(Generator { label, matrix })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(name, generators)
    }

    pub fn matrices(&self) -> impl Iterator<Item = &Matrix> {
        self.generators.iter().map(|g| &g.matrix)
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Generator words for the requested family member.
pub fn family_words(family: Family, n: u32) -> Result<Vec<WordExpr>> {
    if n < family.min_n() {
        return Err(Error::InvalidN {
            what: format!("family {family}"),
            n: n as i64,
            reason: format!("n must be at least {}", family.min_n()),
        });
    }
    let mut out = Vec::new();
    match family {
        Family::Links | Family::Mutant => {
            for g in ["r", "s"] {
                let g = if family == Family::Mutant {
                    name(g).conj_by(name("m"))
                } else {
                    name(g)
                };
                out.push(by_c_pow(g, 2 * n));
            }
            for k in (0..n).rev() {
                for g in ["f", "g", "h"] {
                    out.push(by_c_pow(name(g), 2 * k + 2));
                }
                for g in ["f", "g", "h"] {
                    out.push(by_c_pow(name(g).bar(), 2 * k));
                }
            }
            out.push(name("r").bar());
            out.push(name("s").bar());
        }
        Family::Onecusped => {
            let cap = WordExpr::product([c_pow(n), name("m")]);
            out.push(name("a").conj_by(cap.clone()));
            out.push(name("b").conj_by(cap));
            for i in (1..=n).rev() {
                for g in ["x", "y", "z"] {
                    out.push(by_c_pow(name(g), i));
                }
            }
            out.push(name("a").bar());
            out.push(name("b").bar());
        }
    }
    Ok(out)
}

/// Explicit generators: conjugates of the building-block groups by powers of
/// `c` (and by `m` for mutants), with complex-conjugated caps.
pub fn family_generators(family: Family, n: u32) -> Result<GroupSpec> {
    let words = family_words(family, n)?;
    let ns = Namespace::for_kind(family.namespace(), 1);
    let generators = words
        .into_iter()
        .map(|label| {
            let matrix = label.evaluate(&ns)?;
            Ok(Generator { label, matrix })
        })
        .collect::<Result<Vec<_>>>()?;
    GroupSpec::new(format!("{family}[{n}]"), generators)
}
