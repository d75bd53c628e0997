use std::ops::ControlFlow;

use itertools::Itertools;
use num_traits::One;
use serde::Serialize;

use crate::catalog::GroupSpec;
use crate::moebius::Matrix;
use crate::numfield::{
    is_algebraic_integer, minimal_polynomial, FieldElement, IntPolynomial, Subfield,
};

/// Trace field from the traces of `g_i`, `g_i g_j` (i < j), `g_i g_j g_k`, ...
/// over all nonempty index-ordered subsets of the generators.
///
/// Stops as soon as the whole of K is reached; a group that never saturates
/// costs `2^k` products for `k` generators.
pub fn trace_field(spec: &GroupSpec) -> Subfield {
    let gens: Vec<&Matrix> = spec.matrices().collect();
    let mut acc = Subfield::Q;
    for size in 1..=gens.len() {
        for subset in gens.iter().combinations(size) {
            let product = subset.into_iter().fold(Matrix::identity(), |p, g| &p * *g);
            acc = acc.compositum(Subfield::of(&product.trace()));
            if acc == Subfield::QISqrt2Full {
                return acc;
            }
        }
    }
    acc
}

/// Walks freely reduced words of length `1..=radius` over the generators and
/// their inverses, shortest first, in a fixed order.
///
/// The callback receives the word as symbol indices (`2k` is generator `k`,
/// `2k + 1` its inverse) and the evaluated matrix.
pub fn for_each_word<F>(spec: &GroupSpec, radius: usize, mut visit: F)
where
    F: FnMut(&[usize], &Matrix) -> ControlFlow<()>,
{
    let symbols: Vec<Matrix> = spec
        .matrices()
        .flat_map(|g| [g.clone(), g.inverse()])
        .collect();
    let mut layer: Vec<(Vec<usize>, Matrix)> = vec![(Vec::new(), Matrix::identity())];
    for len in 1..=radius {
        let mut next = Vec::new();
        for (word, m) in &layer {
            for (k, g) in symbols.iter().enumerate() {
                if word.last().is_some_and(|&l| l ^ 1 == k) {
                    continue;
                }
                let mut w = word.clone();
                w.push(k);
                let p = m * g;
                if visit(&w, &p).is_break() {
                    return;
                }
                if len < radius {
                    next.push((w, p));
                }
            }
        }
        layer = next;
    }
}

/// Renders a symbol word from [`for_each_word`] using generator labels.
pub fn word_label(spec: &GroupSpec, word: &[usize]) -> String {
    if let [k] = word {
        if k % 2 == 0 {
            return spec.generators[k / 2].label.to_string();
        }
    }
    word.iter()
        .map(|&k| {
            let label = spec.generators[k / 2].label.to_string();
            let atomic = label.chars().all(|c| c.is_alphanumeric() || c == '_');
            match (k % 2 == 1, atomic) {
                (false, true) => label,
                (false, false) => format!("({label})"),
                (true, true) => format!("{label}^-1"),
                (true, false) => format!("({label})^-1"),
            }
        })
        .join("*")
}

/// Field generated by `tr(w^2) = tr(w)^2 - 2` over words of length at most
/// `radius`: a lower bound for the invariant trace field.
pub fn invariant_trace_field_lower(spec: &GroupSpec, radius: usize) -> Subfield {
    let two = FieldElement::from_int(2);
    let mut acc = Subfield::Q;
    for_each_word(spec, radius.max(1), |_, m| {
        let t = m.trace();
        acc = acc.compositum(Subfield::of(&(&t * &t - &two)));
        if acc == Subfield::QISqrt2Full {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonintegralWitness {
    pub word: String,
    pub trace: FieldElement,
    pub minpoly: IntPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum IntegralityReport {
    /// Every generator entry is an algebraic integer, so every trace is.
    IntegralCertificate {
        generators: usize,
    },
    NonintegralWitness(NonintegralWitness),
    /// No nonintegral trace among words up to `radius`; not a proof of integrality.
    Inconclusive {
        radius: usize,
        words_checked: usize,
    },
}

fn integral(a: &FieldElement) -> bool {
    a.coeffs().iter().all(|c| c.denom().is_one()) || is_algebraic_integer(a)
}

/// First word (shortest, then in enumeration order) with a nonintegral trace.
pub fn search_nonintegral_trace(
    spec: &GroupSpec,
    radius: usize,
) -> (Option<NonintegralWitness>, usize) {
    let mut found = None;
    let mut count = 0;
    for_each_word(spec, radius.max(1), |w, m| {
        count += 1;
        let t = m.trace();
        if integral(&t) {
            return ControlFlow::Continue(());
        }
        found = Some(NonintegralWitness {
            word: word_label(spec, w),
            minpoly: minimal_polynomial(&t),
            trace: t,
        });
        ControlFlow::Break(())
    });
    (found, count)
}

pub fn integral_traces(spec: &GroupSpec, radius: usize) -> IntegralityReport {
    let entries_integral = spec
        .matrices()
        .all(|m| m.entries().into_iter().all(integral));
    if entries_integral {
        return IntegralityReport::IntegralCertificate {
            generators: spec.len(),
        };
    }
    match search_nonintegral_trace(spec, radius) {
        (Some(w), _) => IntegralityReport::NonintegralWitness(w),
        (None, words_checked) => IntegralityReport::Inconclusive {
            radius,
            words_checked,
        },
    }
}
