use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::{Namespace, NamespaceKind, WordExpr};
use crate::error::Result;
use crate::moebius::ProjPoint;
use crate::numfield::FieldElement;
use crate::parse::{parse_element, parse_point};

/// Groups of catalog checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Octahedron block: r, s and the parabolics p1..p4.
    Section2,
    /// Cuboctahedron block: f, g, h, sigma and c.
    Section3,
    /// Link family: delta and lambda elements.
    Section4,
    /// Mutation m and the traces of the mutant base group.
    Section5,
    /// One-cusped family.
    Section6,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Section2,
        Suite::Section3,
        Suite::Section4,
        Suite::Section5,
        Suite::Section6,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Suite::Section2 => "section2",
            Suite::Section3 => "section3",
            Suite::Section4 => "section4",
            Suite::Section5 => "section5",
            Suite::Section6 => "section6",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// What a check asserts about evaluated words.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CheckKind {
    /// Projective equality of two words.
    Identity { lhs: WordExpr, rhs: WordExpr },
    /// The word is parabolic with the given fixed point.
    FixedPoint { word: WordExpr, point: ProjPoint },
    /// The Möbius action sends `from` to `to`.
    MapsPoint {
        word: WordExpr,
        from: ProjPoint,
        to: ProjPoint,
    },
    /// Trace of the unimodular word equals `value` up to sign.
    Trace { word: WordExpr, value: FieldElement },
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteCheck {
    pub id: String,
    pub description: String,
    pub namespace: NamespaceKind,
    /// Family index used for the `lambda` bindings.
    pub n: u32,
    #[serde(flatten)]
    pub kind: CheckKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub passed: bool,
    pub details: String,
}

/// Memoizes namespaces per `(kind, n)`.
#[derive(Default)]
pub struct NamespaceCache {
    cache: HashMap<(NamespaceKind, u32), Namespace>,
}

impl NamespaceCache {
    pub fn get(&mut self, kind: NamespaceKind, n: u32) -> &Namespace {
        self.cache
            .entry((kind, n))
            .or_insert_with(|| Namespace::for_kind(kind, n))
    }
}

impl SuiteCheck {
    pub fn run(&self, cache: &mut NamespaceCache) -> CheckOutcome {
        let ns = cache.get(self.namespace, self.n);
        match self.try_run(ns) {
            Ok(o) => o,
            Err(e) => CheckOutcome {
                passed: false,
                details: format!("evaluation error: {e}"),
            },
        }
    }

    fn try_run(&self, ns: &Namespace) -> Result<CheckOutcome> {
        let (passed, details) = match &self.kind {
            CheckKind::Identity { lhs, rhs } => {
                let l = lhs.evaluate(ns)?;
                let r = rhs.evaluate(ns)?;
                let ok = l.eq_projective(&r);
                (ok, format!("{} ≅ {}", l.pretty(), r.pretty()))
            }
            CheckKind::FixedPoint { word, point } => {
                let m = word.evaluate(ns)?;
                match m.parabolic_fixed_point() {
                    Ok(fp) => (fp == *point, format!("fixed point {}", fp.pretty())),
                    Err(e) => (false, e.to_string()),
                }
            }
            CheckKind::MapsPoint { word, from, to } => {
                let img = word.evaluate(ns)?.apply(from);
                (img == *to, format!("{} ↦ {}", from.pretty(), img.pretty()))
            }
            CheckKind::Trace { word, value } => {
                let m = word.evaluate(ns)?;
                let t = m.trace();
                let ok = m.is_unimodular() && (t == *value || t == -value);
                (ok, format!("trace {}", t.pretty()))
            }
        };
        Ok(CheckOutcome { passed, details })
    }
}

struct Builder {
    suite: Suite,
    namespace: NamespaceKind,
    n: u32,
    out: Vec<SuiteCheck>,
}

fn w(s: &str) -> WordExpr {
    s.parse()
        .unwrap_or_else(|e| panic!("suite word `{s}`: {e}"))
}

fn pt(s: &str) -> ProjPoint {
    parse_point(s).unwrap_or_else(|e| panic!("suite point `{s}`: {e}"))
}

impl Builder {
    fn new(suite: Suite, namespace: NamespaceKind) -> Self {
        Self {
            suite,
            namespace,
            n: 1,
            out: Vec::new(),
        }
    }

    fn push(&mut self, id: &str, description: String, kind: CheckKind) {
        self.out.push(SuiteCheck {
            id: format!("{}.{id}", self.suite),
            description,
            namespace: self.namespace,
            n: self.n,
            kind,
        });
    }

    fn eq(&mut self, id: &str, lhs: &str, rhs: &str) {
        self.push(
            id,
            format!("{lhs} = {rhs}"),
            CheckKind::Identity {
                lhs: w(lhs),
                rhs: w(rhs),
            },
        );
    }

    fn commutes(&mut self, id: &str, a: &str, b: &str) {
        self.push(
            id,
            format!("{a} commutes with {b}"),
            CheckKind::Identity {
                lhs: w(&format!("{a}*{b}")),
                rhs: w(&format!("{b}*{a}")),
            },
        );
    }

    fn fixed(&mut self, id: &str, word: &str, point: &str) {
        self.push(
            id,
            format!("{word} is parabolic fixing {point}"),
            CheckKind::FixedPoint {
                word: w(word),
                point: pt(point),
            },
        );
    }

    fn maps(&mut self, id: &str, word: &str, from: &str, to: &str) {
        self.push(
            id,
            format!("{word}({from}) = {to}"),
            CheckKind::MapsPoint {
                word: w(word),
                from: pt(from),
                to: pt(to),
            },
        );
    }

    fn trace(&mut self, id: &str, word: &str, value: &str) {
        self.push(
            id,
            format!("Tr({word}) = {value}"),
            CheckKind::Trace {
                word: w(word),
                value: parse_element(value).expect("suite trace"),
            },
        );
    }
}

/// Largest family index exercised by the lambda checks.
pub const LAMBDA_MAX_N: u32 = 8;

fn section2() -> Vec<SuiteCheck> {
    let mut b = Builder::new(Suite::Section2, NamespaceKind::Links);
    b.eq("p1", "r^-1", "[[1, 0], [1, 1]]");
    b.eq("p2", "r*s*r*s^-2", "[[-1, 5], [0, -1]]");
    b.eq("p3", "(s*r*s)*r^-1*(s*r*s)^-1", "[[-14, 25], [-9, 16]]");
    b.eq("p4", "p1*p2*p3^-1", "[[29, -45], [20, -31]]");
    b.eq("rho_v", "Conj(s*r*s, r^-1)^-1", "[[16, -25], [9, -14]]");
    b.eq("rho_v_p3", "[[16, -25], [9, -14]]", "p3^-1");
    b.eq("rho_e", "[[-1, 5], [0, -1]]", "p2");
    b.fixed("p1_fix", "p1", "0");
    b.fixed("p2_fix", "p2", "inf");
    b.fixed("p4_fix", "p4", "3/2");
    b.trace("tr_r", "r", "2");
    b.trace("tr_s", "s", "1 + i");
    b.trace("tr_rs", "r*s", "-1 + 2i");
    b.out
}

fn section3() -> Vec<SuiteCheck> {
    let mut b = Builder::new(Suite::Section3, NamespaceKind::Links);
    b.eq("f_eq_r", "f", "r");
    b.eq("p1_f", "p1", "f^-1");
    b.eq("p2_h", "p2", "f*g^-1*f^-1*h^-1*g");
    b.eq("p3_h", "p3", "(g^-1*f^-1*h)*g^-1*(h^-1*f*g)");
    b.eq("sigma_f", "Conj(sigma, f)", "f*g*f^-1");
    b.eq("sigma_g", "Conj(sigma, g)", "(f*g^-1)*f*(g*f^-1)");
    b.eq("sigma_h", "Conj(sigma, h)", "(f*g^-1)*h^-1*(g*f^-1)");
    b.eq("sigma_fgf", "Conj(sigma, f*g*f^-1)", "f");
    b.eq("sigma_p2", "Conj(sigma, p2)", "p2^-1");
    b.eq("c_bar", "Bar(c)", "c^-1");
    b.maps("c_boundary", "c", "-i*s2", "0");
    b.trace("tr_h", "h", "-i*s2");
    b.out
}

fn section4() -> Vec<SuiteCheck> {
    let mut b = Builder::new(Suite::Section4, NamespaceKind::Links);
    for j in 1..=4 {
        b.eq(
            &format!("delta{j}"),
            &format!("Conj(delta{j}, p{j})"),
            &format!("Conj(c^2, p{j})"),
        );
    }
    b.eq("p1_tau", "Conj(tau, p1)", "[[1, 1], [0, 1]]");
    b.eq("p2_omega", "Conj(omega, p2)", "[[1, 1], [0, 1]]");
    for n in 1..=LAMBDA_MAX_N {
        b.n = n;
        b.commutes(&format!("lambda1_commutes[{n}]"), "lambda1", "p1");
        b.commutes(&format!("lambda2_commutes[{n}]"), "lambda2", "p2");
        b.eq(
            &format!("lambda1_tau[{n}]"),
            "Conj(tau, lambda1)",
            &format!("[[1, 2i(1 + 2*{n}*s2)], [0, 1]]"),
        );
        b.eq(
            &format!("lambda2_omega[{n}]"),
            "Conj(omega, lambda2)",
            &format!("[[1, (2i/5)(1 + 2*{n}*s2)], [0, 1]]"),
        );
    }
    b.out
}

/// Words whose traces span the trace field of the mutant base group.
pub const MUTANT_SPANNING_TRACES: [(&str, &str); 7] = [
    ("r", "2"),
    ("m*s*m^-1", "1 + i"),
    ("Bar(s)", "1 - i"),
    ("r*m*s*m^-1", "1 + 6i"),
    ("r*Bar(s)", "-1 - 2i"),
    ("m*s*m^-1*Bar(s)", "-10"),
    ("r*m*s*m^-1*Bar(s)", "-18 + 6i"),
];

fn section5() -> Vec<SuiteCheck> {
    let mut b = Builder::new(Suite::Section5, NamespaceKind::Links);
    b.fixed("p1_fix", "p1", "0");
    b.fixed("p2_fix", "p2", "inf");
    b.fixed("p3_fix", "p3", "5/3");
    b.maps("m_swaps_0", "m", "0", "inf");
    b.eq("m_p1", "Conj(m, p1)", "p2");
    b.eq("m_p2", "Conj(m, p2)", "p1");
    b.eq("m_p3", "Conj(m, p3)", "Conj(p1^-1, p4)");
    b.eq(
        "msm_g",
        "m*s*m^-1*g",
        "[[-1 + s2 + 11i + i*s2, 1 - 7s2 - 16i - 2i*s2], \
          [(2 - s2 - 21i - 2i*s2)/5, (-2 + 12s2 + 31i + 4i*s2)/5]]",
    );
    for (k, (word, value)) in MUTANT_SPANNING_TRACES.iter().enumerate() {
        b.trace(&format!("span_trace{}", k + 1), word, value);
    }
    b.out
}

fn section6() -> Vec<SuiteCheck> {
    let mut b = Builder::new(Suite::Section6, NamespaceKind::Onecusped);
    b.eq("p1_g", "a*b*a", "[[1, 0], [-3, 1]]");
    b.eq("p1_h", "x*y*x", "[[1, 0], [-3, 1]]");
    b.eq("p2_g", "b^2*a^-1", "[[-1, -3], [0, -1]]");
    b.eq("p2_h", "y*z*x^-1", "[[-1, -3], [0, -1]]");
    b.eq("p3_g", "a^-2*b^-1", "[[-2, 3], [-3, 4]]");
    b.eq("p3_h", "x^-2*y^-1", "[[-2, 3], [-3, 4]]");
    b.eq("p4", "p3*p2*p1", "[[-7, 3], [-12, 5]]");
    b.eq("p4_g", "p4", "a^-2*b^2*a");
    b.eq("p4_h", "p4", "x^-2*z*y*x");
    b.fixed("p1_fix", "p1", "0");
    b.fixed("p2_fix", "p2", "inf");
    b.fixed("p3_fix", "p3", "1");
    b.fixed("p4_fix", "p4", "1/2");
    b.eq("m_p1", "Conj(m, p1)", "p3");
    b.eq("m_p2", "Conj(m, p2)", "p2");
    b.eq("m_p3", "Conj(m, p3)", "Conj(p3^-1, p4^-1)");
    b.maps("q1_fix", "q1", "-i*s2", "-i*s2");
    b.maps("q2_fix", "q2", "inf", "inf");
    b.maps("q3_fix", "q3", "1 - i*s2", "1 - i*s2");
    b.eq("q4", "q4", "z^3*y^-1*z^-1");
    for i in 1..=4 {
        b.eq(
            &format!("c_q{i}"),
            &format!("Conj(c, q{i})"),
            &format!("p{i}"),
        );
    }
    b.maps("a_vertex", "a", "(1 + i)/2", "inf");
    b.maps("b_vertex", "b", "1 + i", "inf");
    b.maps("x_vertex", "x", "0", "-i*s2/2");
    b.maps("y_vertex", "y", "(1 - 2i*s2)/3", "inf");
    b.maps("z_vertex", "z", "(1 - i*s2)/2", "(2 - 2i*s2)/3");
    b.trace("tr_a", "a", "-1 + i");
    b.trace("tr_b", "b", "1 + i");
    b.eq("mu_tau", "Conj(tau, mu)", "[[1, 1], [0, 1]]");
    for n in 1..=LAMBDA_MAX_N {
        b.n = n;
        b.commutes(&format!("lambda_commutes[{n}]"), "lambda", "mu");
        b.eq(
            &format!("lambda_tau[{n}]"),
            "Conj(tau, lambda)",
            &format!("[[1, (1 + 4i({n}*s2 + 1))/3], [0, 1]]"),
        );
    }
    b.out
}

/// Every check of a suite, in a fixed order.
pub fn suite_checks(suite: Suite) -> Vec<SuiteCheck> {
    match suite {
        Suite::Section2 => section2(),
        Suite::Section3 => section3(),
        Suite::Section4 => section4(),
        Suite::Section5 => section5(),
        Suite::Section6 => section6(),
    }
}

/// A named matrix identity `lhs ≅ rhs`.
#[derive(Debug, Clone, Serialize)]
pub struct NamedIdentity {
    pub description: String,
    pub namespace: NamespaceKind,
    pub n: u32,
    pub lhs: WordExpr,
    pub rhs: WordExpr,
}

/// The identity checks of a suite.
pub fn named_identities(suite: Suite) -> Vec<NamedIdentity> {
    suite_checks(suite)
        .into_iter()
        .filter_map(|c| match c.kind {
            CheckKind::Identity { lhs, rhs } => Some(NamedIdentity {
                description: c.description,
                namespace: c.namespace,
                n: c.n,
                lhs,
                rhs,
            }),
            _ => None,
        })
        .collect()
}
