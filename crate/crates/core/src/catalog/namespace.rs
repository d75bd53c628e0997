use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::families::{lambda1_word, lambda2_word, lambda_onecusped_word};
use super::WordExpr;
use crate::error::{Error, Result};
use crate::moebius::Matrix;
use crate::parse::parse_element;

/// Which set of symbol bindings a word is evaluated in.
///
/// The two constructions reuse the letters `m`, `c`, `tau`, `gamma` and
/// `p1..p4` for different matrices, so they never share a namespace.
#[derive(
    Debug,
    Clone,
    Copy,
    PartialEq,
    Eq,
    Hash,
    PartialOrd,
    Ord,
    Serialize,
    Deserialize,
    clap::ValueEnum,
)]
#[serde(rename_all = "lowercase")]
pub enum NamespaceKind {
    Links,
    Onecusped,
}

impl NamespaceKind {
    pub fn tag(self) -> &'static str {
        match self {
            NamespaceKind::Links => "links",
            NamespaceKind::Onecusped => "onecusped",
        }
    }
}

impl fmt::Display for NamespaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for NamespaceKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "links" => Ok(NamespaceKind::Links),
            "onecusped" => Ok(NamespaceKind::Onecusped),
            _ => Err(Error::UnknownName {
                name: s.into(),
                namespace: "namespaces".into(),
            }),
        }
    }
}

/// Named matrices available to word evaluation.
#[derive(Debug, Clone)]
pub struct Namespace {
    kind: NamespaceKind,
    n: u32,
    bindings: BTreeMap<String, Matrix>,
}

/// Entries given as element expressions; all literals here are nonsingular.
fn mat(a: &str, b: &str, c: &str, d: &str) -> Matrix {
    let e = |s: &str| parse_element(s).expect("catalog literal");
    Matrix::new(e(a), e(b), e(c), e(d)).expect("catalog literal")
}

const GREEK: [(&str, &str); 9] = [
    ("σ", "sigma"),
    ("τ", "tau"),
    ("ω", "omega"),
    ("α", "alpha"),
    ("β", "beta"),
    ("γ", "gamma"),
    ("δ", "delta"),
    ("λ", "lambda"),
    ("μ", "mu"),
];

fn canonical_name(name: &str) -> String {
    for (greek, latin) in GREEK {
        if let Some(rest) = name.strip_prefix(greek) {
            return format!("{latin}{rest}");
        }
    }
    name.to_string()
}

impl Namespace {
    /// Two-component link construction with `lambda1`, `lambda2` built for `n = 1`.
    pub fn links() -> Self {
        Self::links_with_n(1)
    }

    pub fn links_with_n(n: u32) -> Self {
        let mut ns = Namespace {
            kind: NamespaceKind::Links,
            n,
            bindings: BTreeMap::new(),
        };
        ns.bind("id", Matrix::identity());
        ns.bind("r", Matrix::from_ints(1, 0, -1, 1));
        ns.bind("s", mat("2i", "2-i", "i", "1-i"));
        ns.bind("f", Matrix::from_ints(1, 0, -1, 1));
        ns.bind("g", mat("-1+i*s2", "1-2i*s2", "-2", "3-i*s2"));
        ns.bind("h", mat("2i*s2", "-3-i*s2", "-3+i*s2", "-3i*s2"));
        ns.bind("sigma", mat("i", "i-s2", "0", "-i"));
        ns.bind("c", mat("1", "i*s2", "0", "1"));
        ns.bind("m", Matrix::from_ints(0, 5, -1, 0));
        ns.bind("tau", mat("0", "i", "i", "0"));
        ns.bind("omega", Matrix::from_ints(1, 0, 0, -5));
        ns.define("p1", "r^-1");
        ns.define("p2", "r*s*r*s^-2");
        ns.define("p3", "(s*r*s)*r^-1*(s*r*s)^-1");
        ns.define("p4", "p1*p2*p3^-1");
        ns.define("gamma1", "g^-1*h*(h*g)^-1");
        ns.define("gamma2", "id");
        ns.define("gamma3", "f*h^-1*f*g");
        ns.define("gamma4", "g^-1*f*g");
        for j in 1..=4 {
            ns.define(
                &format!("delta{j}"),
                &format!("Conj(c^2, gamma{j}^-1)*Bar(gamma{j})"),
            );
        }
        if n >= 1 {
            ns.define_word("lambda1", &lambda1_word(n));
            ns.define_word("lambda2", &lambda2_word(n));
        }
        ns
    }

    /// One-cusped construction with `lambda` built for `n = 1`.
    pub fn onecusped() -> Self {
        Self::onecusped_with_n(1)
    }

    pub fn onecusped_with_n(n: u32) -> Self {
        let mut ns = Namespace {
            kind: NamespaceKind::Onecusped,
            n,
            bindings: BTreeMap::new(),
        };
        ns.bind("id", Matrix::identity());
        ns.bind("a", mat("i", "-i", "1-i", "-1"));
        ns.bind("b", mat("2i", "2-i", "i", "1-i"));
        ns.bind("x", mat("i", "-i", "-i-s2", "s2"));
        ns.bind("y", mat("1-2i*s2", "2+i*s2", "1-i*s2", "1+i*s2"));
        ns.bind("z", mat("4i", "-3i-2s2", "i-2s2", "s2-3i"));
        ns.bind("m", Matrix::from_ints(1, 1, 0, 1));
        ns.bind("c", mat("1", "i*s2", "0", "1"));
        ns.bind("tau", Matrix::from_ints(0, 1, -3, 0));
        ns.define("p1", "a*b*a");
        ns.define("p2", "b^2*a^-1");
        ns.define("p3", "a^-2*b^-1");
        ns.define("p4", "p3*p2*p1");
        ns.define("q1", "x*y^-1*z^-1");
        ns.define("q2", "y*z*x^-1");
        ns.define("q3", "z^2*y^-1");
        ns.define("q4", "q3*q2*q1");
        ns.define("alpha", "y*z^-1*c^-1*x^-1*c*y^-1");
        ns.define("beta", "a^-1*m^-1*x^-1*m*a*b^-1");
        ns.define("gamma", "Bar(b*a^-1)*c*(x*y^-1)*c^-1*Bar(b*a)");
        ns.define("mu", "Bar(a*b*a)");
        if n >= 1 {
            ns.define_word("lambda", &lambda_onecusped_word(n));
        }
        ns
    }

    pub fn for_kind(kind: NamespaceKind, n: u32) -> Self {
        match kind {
            NamespaceKind::Links => Self::links_with_n(n),
            NamespaceKind::Onecusped => Self::onecusped_with_n(n),
        }
    }

    /// Adds or replaces a binding.
    pub fn with(mut self, name: &str, m: Matrix) -> Self {
        self.bind(name, m);
        self
    }

    fn bind(&mut self, name: &str, m: Matrix) {
        self.bindings.insert(name.to_string(), m);
    }

    fn define(&mut self, name: &str, word: &str) {
        let w: WordExpr = word.parse().expect("catalog word");
        self.define_word(name, &w);
    }

    fn define_word(&mut self, name: &str, w: &WordExpr) {
        let m = w.evaluate(self).expect("catalog word evaluates");
        self.bind(name, m);
    }

    pub fn kind(&self) -> NamespaceKind {
        self.kind
    }

    /// The family index the `lambda` bindings were built for.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Accepts Greek aliases such as `σ` or `λ1`.
    pub fn get(&self, name: &str) -> Result<&Matrix> {
        self.bindings
            .get(name)
            .or_else(|| self.bindings.get(&canonical_name(name)))
            .ok_or_else(|| Error::UnknownName {
                name: name.into(),
                namespace: self.kind.tag().into(),
            })
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.bindings.keys().map(String::as_str)
    }

    /// Conjugators stored as `GL_2(K)` representatives of a projective class.
    pub fn is_projective(&self, name: &str) -> bool {
        let name = canonical_name(name);
        match self.kind {
            NamespaceKind::Links => matches!(name.as_str(), "m" | "omega"),
            NamespaceKind::Onecusped => name == "tau",
        }
    }

    pub fn evaluate(&self, word: &str) -> Result<Matrix> {
        WordExpr::parse(word)?.evaluate(self)
    }
}
