use std::sync::OnceLock;

use proptest::prelude::*;

use tracefield::catalog::{Generator, GroupSpec, Namespace, WordExpr};
use tracefield::geometry::{image_circle, inversive_test, ExtendedCircle, PolyhedronData};
use tracefield::invariants::{
    apply_rational, cusp_modulus, equivalence_witness, homology_report, integral_traces,
    moduli_equivalent, search_nonintegral_trace, IntegralityReport, ModulusClass,
};
use tracefield::moebius::{Matrix, ProjPoint};
use tracefield::numfield::{
    is_algebraic_integer, minimal_polynomial, FieldElement, Rational, Subfield,
};
use tracefield::parse::{parse_element, parse_point};

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(1000)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn element() -> impl Strategy<Value = FieldElement> {
    [rational(), rational(), rational(), rational()].prop_map(FieldElement::from_coeffs)
}

fn nonzero() -> impl Strategy<Value = FieldElement> {
    element().prop_filter("nonzero", |a| !a.is_zero())
}

fn integral_element() -> impl Strategy<Value = FieldElement> {
    (-9i64..=9, -9i64..=9, -9i64..=9, -9i64..=9)
        .prop_map(|(a, b, c, d)| FieldElement::from_ints(a, b, c, d))
}

fn irrational() -> impl Strategy<Value = FieldElement> {
    element().prop_filter("irrational", |a| !a.is_rational())
}

fn matrix() -> impl Strategy<Value = Matrix> {
    (element(), element(), element(), element())
        .prop_filter_map("singular", |(a, b, c, d)| Matrix::new(a, b, c, d).ok())
}

fn rational_matrix() -> impl Strategy<Value = [Rational; 4]> {
    [rational(), rational(), rational(), rational()]
        .prop_filter("singular", |m| &m[0] * &m[3] != &m[1] * &m[2])
}

fn point() -> impl Strategy<Value = ProjPoint> {
    prop_oneof![
        1 => Just(ProjPoint::Infinity),
        8 => element().prop_map(ProjPoint::Finite),
    ]
}

fn three_points() -> impl Strategy<Value = (ProjPoint, ProjPoint, ProjPoint)> {
    (point(), point(), point()).prop_filter("distinct", |(p, q, r)| p != q && q != r && p != r)
}

fn circle() -> impl Strategy<Value = ExtendedCircle> {
    three_points().prop_map(|(p, q, r)| ExtendedCircle::through_points(&p, &q, &r).unwrap())
}

/// Elementary unimodular matrix with integral off-diagonal entry.
fn elementary() -> impl Strategy<Value = Matrix> {
    (integral_element(), any::<bool>()).prop_map(|(x, upper)| {
        let (one, zero) = (FieldElement::one(), FieldElement::zero());
        if upper {
            Matrix::new(one.clone(), x, zero, one).unwrap()
        } else {
            Matrix::new(one.clone(), zero, x, one).unwrap()
        }
    })
}

fn integral_unimodular() -> impl Strategy<Value = Matrix> {
    prop::collection::vec(elementary(), 1..4)
        .prop_map(|ms| ms.iter().fold(Matrix::identity(), |p, m| &p * m))
}

fn zeta8() -> FieldElement {
    parse_element("(s2 + i*s2)/2").unwrap()
}

fn links() -> &'static Namespace {
    static LINKS: OnceLock<Namespace> = OnceLock::new();
    LINKS.get_or_init(Namespace::links)
}

/// Carrier pairs from the polyhedron data, covering all three inversive classes.
fn carrier_pairs() -> &'static [(ExtendedCircle, ExtendedCircle)] {
    static PAIRS: OnceLock<Vec<(ExtendedCircle, ExtendedCircle)>> = OnceLock::new();
    PAIRS.get_or_init(|| {
        let mut out = Vec::new();
        for data in PolyhedronData::builtin() {
            let faces: Vec<_> = data.faces().map(|f| f.carrier.clone()).collect();
            for (i, f) in faces.iter().enumerate() {
                for g in &faces[i + 1..] {
                    out.push((f.clone(), g.clone()));
                }
            }
        }
        out
    })
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn ring_axioms(a in element(), b in element(), c in element()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, FieldElement::zero());
        prop_assert_eq!(&a * &FieldElement::one(), a.clone());
    }

    #[test]
    fn inverses(a in nonzero(), b in nonzero()) {
        prop_assert!((&a * &a.inv().unwrap()).is_one());
        prop_assert_eq!(a.div(&b).unwrap(), &a * &b.inv().unwrap());
        prop_assert_eq!((&a * &b).inv().unwrap(), &a.inv().unwrap() * &b.inv().unwrap());
    }

    #[test]
    fn galois_maps_are_automorphisms(a in element(), b in element()) {
        let (x, y) = (&a * &b, &a + &b);
        prop_assert_eq!(x.conj(), &a.conj() * &b.conj());
        prop_assert_eq!(y.conj(), &a.conj() + &b.conj());
        prop_assert_eq!(x.sqrt2_flip(), &a.sqrt2_flip() * &b.sqrt2_flip());
        prop_assert_eq!(y.sqrt2_flip(), &a.sqrt2_flip() + &b.sqrt2_flip());
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert!(a.norm_sq().is_real());
    }

    #[test]
    fn display_round_trip(a in element()) {
        prop_assert_eq!(parse_element(&a.to_string()).unwrap(), a.clone());
        let p = ProjPoint::Finite(a);
        prop_assert_eq!(parse_point(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn minimal_polynomial_vanishes(a in element()) {
        let p = minimal_polynomial(&a);
        prop_assert!(p.eval(&a).is_zero());
        prop_assert!(matches!(p.degree(), 1 | 2 | 4));
        prop_assert_eq!(p.degree() as u32, Subfield::of(&a).degree());
        for g in a.galois_orbit() {
            prop_assert!(p.eval(&g).is_zero());
            prop_assert_eq!(minimal_polynomial(&g), p.clone());
        }
    }

    #[test]
    fn subfields_are_monotone(a in element(), b in element()) {
        let (fa, fb) = (Subfield::of(&a), Subfield::of(&b));
        prop_assert!(fa.contains(&a));
        let joint = fa.compositum(fb);
        prop_assert!(fa.is_subfield_of(joint) && fb.is_subfield_of(joint));
        prop_assert!(joint.contains(&(&a + &b)) && joint.contains(&(&a * &b)));
    }

    #[test]
    fn integrality_is_closed(a in integral_element(), b in integral_element(), k in 0u32..8) {
        let z = zeta8().pow(k);
        prop_assert!(is_algebraic_integer(&(&a * &z)));
        prop_assert!(is_algebraic_integer(&(&(&a * &z) + &b)));
        prop_assert!(is_algebraic_integer(&(&(&a * &z) * &(&b * &z))));
        prop_assert_eq!(is_algebraic_integer(&(&a * &z)), minimal_polynomial(&(&a * &z)).is_monic());
    }

    #[test]
    fn trace_is_conjugation_invariant(m in matrix(), g in matrix()) {
        prop_assert_eq!(m.conjugate_by(&g).trace(), m.trace());
        prop_assert_eq!(m.conjugate_by(&g).det(), m.det());
        let w = WordExpr::product([WordExpr::Literal(m.clone()), WordExpr::Literal(g.clone())]);
        prop_assert_eq!(w.evaluate(links()).unwrap(), &m * &g);
    }

    #[test]
    fn image_circle_is_functorial(c in circle(), m1 in matrix(), m2 in matrix()) {
        let composed = image_circle(&(&m1 * &m2), &c);
        let stepwise = image_circle(&m1, &image_circle(&m2, &c));
        prop_assert!(composed.same_circle(&stepwise));
        prop_assert!(image_circle(&Matrix::identity(), &c).same_circle(&c));
        prop_assert!(image_circle(&m1.inverse(), &image_circle(&m1, &c)).same_circle(&c));
    }

    #[test]
    fn incidence_is_preserved((p, q, r) in three_points(), m in matrix(), x in point()) {
        let c = ExtendedCircle::through_points(&p, &q, &r).unwrap();
        prop_assert!(c.contains(&p) && c.contains(&q) && c.contains(&r));
        let image = image_circle(&m, &c);
        prop_assert!(image.contains(&m.apply(&p)));
        prop_assert_eq!(c.contains(&x), image.contains(&m.apply(&x)));
    }

    #[test]
    fn inversive_class_is_invariant(idx in any::<prop::sample::Index>(), m in matrix(), c1 in circle(), c2 in circle()) {
        let pairs = carrier_pairs();
        let (a, b) = &pairs[idx.index(pairs.len())];
        for (a, b) in [(a, b), (&c1, &c2)] {
            let before = inversive_test(a, b);
            let after = inversive_test(&image_circle(&m, a), &image_circle(&m, b));
            prop_assert_eq!(before, after);
            prop_assert_eq!(inversive_test(b, a), before);
        }
    }

    #[test]
    fn moduli_equivalence_relation(z in irrational(), m1 in rational_matrix(), m2 in rational_matrix()) {
        let z = ProjPoint::Finite(z);
        let w1 = apply_rational(&m1, &z);
        let w2 = apply_rational(&m2, &w1);
        prop_assert!(moduli_equivalent(&z, &z));
        prop_assert!(moduli_equivalent(&z, &w1) && moduli_equivalent(&w1, &z));
        prop_assert!(moduli_equivalent(&z, &w2));
        let witness = equivalence_witness(&w2, &z).unwrap();
        prop_assert_eq!(apply_rational(&witness, &w2), z.clone());
        let q = ProjPoint::Finite(FieldElement::from_rational(m1[0].clone()));
        prop_assert!(!moduli_equivalent(&z, &q));
    }

    #[test]
    fn cusp_modulus_ignores_conjugation(t1 in nonzero(), t2 in nonzero(), g in matrix()) {
        let (one, zero) = (FieldElement::one, FieldElement::zero);
        let alpha = Matrix::new(one(), t1.clone(), zero(), one()).unwrap().conjugate_by(&g);
        let beta = Matrix::new(one(), t2.clone(), zero(), one()).unwrap().conjugate_by(&g);
        let class = cusp_modulus(&alpha, &beta).unwrap();
        prop_assert_eq!(class, ModulusClass::new(ProjPoint::Finite(t2.div(&t1).unwrap())));
    }

    #[test]
    fn homology_matches_rank_formula(n in 1u32..=8) {
        let r = homology_report(n).unwrap();
        prop_assert_eq!(r.generators, 3 * n as usize + 4);
        prop_assert_eq!(r.rank, 2 * n as usize + 3);
        prop_assert_eq!(r.dimension, n as usize + 1);
    }

    #[test]
    fn integral_certificate_agrees_with_search(g1 in integral_unimodular(), g2 in integral_unimodular()) {
        let gens = [g1, g2]
            .into_iter()
            .enumerate()
            .map(|(k, m)| Generator { label: WordExpr::name(format!("g{k}")), matrix: m })
            .collect();
        let spec = GroupSpec::new("random", gens).unwrap();
        let certified = matches!(integral_traces(&spec, 2), IntegralityReport::IntegralCertificate { .. });
        prop_assert!(certified);
        prop_assert!(search_nonintegral_trace(&spec, 2).0.is_none());
    }
}

#[test]
fn certificate_and_search_agree_on_link_groups() {
    for n in 0..=1 {
        let spec =
            tracefield::catalog::family_generators(tracefield::catalog::Family::Links, n).unwrap();
        assert!(matches!(
            integral_traces(&spec, 3),
            IntegralityReport::IntegralCertificate { .. }
        ));
        let (witness, checked) = search_nonintegral_trace(&spec, 3);
        assert!(witness.is_none());
        let k = 2 * spec.len();
        assert_eq!(checked, k + k * (k - 1) + k * (k - 1) * (k - 1));
    }
}
