//! Circles and lines on the sphere at infinity, and the two ideal polyhedra.

mod circle;
mod polyhedron;

pub use circle::{image_circle, inversive_test, ExtendedCircle, Inversive};
pub use polyhedron::{
    verify_polyhedron, Face, GeometryCheck, Pairing, PolyhedronData, PolyhedronReport, Vertex,
    FORMAT_VERSION,
};

use crate::catalog::Namespace;
use crate::numfield::FieldElement;

fn preserves(
    id: String,
    ns: &Namespace,
    word: &str,
    circle: &ExtendedCircle,
    target: &ExtendedCircle,
) -> GeometryCheck {
    match ns.evaluate(word) {
        Ok(m) => {
            let image = image_circle(&m, circle);
            GeometryCheck::new(
                id,
                image.same_circle(target),
                format!("{word}: {}", image.pretty()),
            )
        }
        Err(e) => GeometryCheck::new(id, false, e.to_string()),
    }
}

/// Truncation planes: `c` carries `Im z = -√2` to the real axis, the cusp
/// parabolics preserve the real axis and their `σ`- or `c`-conjugates preserve
/// `Im z = -√2`.
pub fn boundary_checks() -> Vec<GeometryCheck> {
    let axis = ExtendedCircle::real_axis();
    let low = ExtendedCircle::horizontal_line(&-FieldElement::sqrt2()).expect("real");
    let links = Namespace::links();
    let onecusped = Namespace::onecusped();
    let mut out = vec![preserves(
        "boundary.links.c".into(),
        &links,
        "c",
        &low,
        &axis,
    )];
    for j in 1..=4 {
        out.push(preserves(
            format!("boundary.links.p{j}"),
            &links,
            &format!("p{j}"),
            &axis,
            &axis,
        ));
        out.push(preserves(
            format!("boundary.links.sigma_p{j}"),
            &links,
            &format!("Conj(sigma, p{j})"),
            &low,
            &low,
        ));
    }
    out.push(preserves(
        "boundary.onecusped.c".into(),
        &onecusped,
        "c",
        &low,
        &axis,
    ));
    for j in 1..=4 {
        out.push(preserves(
            format!("boundary.onecusped.p{j}"),
            &onecusped,
            &format!("p{j}"),
            &axis,
            &axis,
        ));
        out.push(preserves(
            format!("boundary.onecusped.q{j}"),
            &onecusped,
            &format!("q{j}"),
            &low,
            &low,
        ));
    }
    out
}

/// Both polyhedra followed by the boundary checks.
pub fn geometry_suite() -> Vec<GeometryCheck> {
    let mut out = Vec::new();
    for data in PolyhedronData::builtin() {
        match verify_polyhedron(&data) {
            Ok(report) => out.extend(report.checks),
            Err(e) => out.push(GeometryCheck::new(
                format!("{}.load", data.name),
                false,
                e.to_string(),
            )),
        }
    }
    out.extend(boundary_checks());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_planes() {
        let failed: Vec<_> = boundary_checks()
            .into_iter()
            .filter(|c| !c.passed)
            .collect();
        assert!(failed.is_empty(), "{failed:#?}");
    }

    #[test]
    fn suite_ids_are_unique() {
        let suite = geometry_suite();
        let mut ids: Vec<_> = suite.iter().map(|c| &c.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), suite.len());
        assert!(suite.iter().all(|c| c.passed));
    }
}
