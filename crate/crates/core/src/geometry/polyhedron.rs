use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::circle::{image_circle, inversive_test, ExtendedCircle, Inversive};
use crate::catalog::{Namespace, NamespaceKind};
use crate::error::{Error, Result};
use crate::moebius::{Matrix, ProjPoint};

pub const FORMAT_VERSION: u32 = 1;

mod point_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::moebius::ProjPoint;

    pub fn serialize<S: Serializer>(p: &ProjPoint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(p)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<ProjPoint, D::Error> {
        let s = String::deserialize(d)?;
        crate::parse::parse_point(&s).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub label: String,
    #[serde(with = "point_str")]
    pub point: ProjPoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub label: String,
    pub vertices: Vec<String>,
    pub carrier: ExtendedCircle,
}

/// A face pairing given by a catalog element name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pairing {
    pub map: String,
    pub namespace: NamespaceKind,
    pub source: String,
    pub target: String,
    /// `(source vertex, image vertex)` label pairs.
    pub vertices: Vec<(String, String)>,
}

/// Ideal polyhedron: vertices, carriers of internal and external faces, and
/// face pairings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyhedronData {
    pub format_version: u32,
    pub name: String,
    #[serde(default)]
    pub note: String,
    pub vertices: Vec<Vertex>,
    pub internal_faces: Vec<Face>,
    pub external_faces: Vec<Face>,
    pub pairings: Vec<Pairing>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeometryCheck {
    pub id: String,
    pub passed: bool,
    pub details: String,
}

impl GeometryCheck {
    pub(crate) fn new(id: String, passed: bool, details: String) -> Self {
        Self {
            id,
            passed,
            details,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyhedronReport {
    pub name: String,
    pub checks: Vec<GeometryCheck>,
}

impl PolyhedronReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &GeometryCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

const OCTAHEDRON_JSON: &str = include_str!("../../data/octahedron.json");
const CUBOCTAHEDRON_JSON: &str = include_str!("../../data/cuboctahedron.json");

impl PolyhedronData {
    pub fn from_json(src: &str) -> Result<Self> {
        let data: PolyhedronData =
            serde_json::from_str(src).map_err(|e| Error::Config(e.to_string()))?;
        data.validate()?;
        Ok(data)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn octahedron() -> Self {
        Self::from_json(OCTAHEDRON_JSON).expect("bundled octahedron data")
    }

    pub fn cuboctahedron() -> Self {
        Self::from_json(CUBOCTAHEDRON_JSON).expect("bundled cuboctahedron data")
    }

    pub fn builtin() -> [Self; 2] {
        [Self::octahedron(), Self::cuboctahedron()]
    }

    pub fn faces(&self) -> impl Iterator<Item = &Face> {
        self.internal_faces.iter().chain(&self.external_faces)
    }

    pub fn face(&self, label: &str) -> Option<&Face> {
        self.faces().find(|f| f.label == label)
    }

    pub fn vertex(&self, label: &str) -> Option<&ProjPoint> {
        self.vertices
            .iter()
            .find(|v| v.label == label)
            .map(|v| &v.point)
    }

    /// Structural checks: version, unique labels, resolvable references.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(format!("{}: {msg}", self.name)));
        if self.format_version != FORMAT_VERSION {
            return bad(format!(
                "unsupported format_version {}",
                self.format_version
            ));
        }
        let mut labels = BTreeSet::new();
        for v in &self.vertices {
            if !labels.insert(v.label.as_str()) {
                return bad(format!("duplicate vertex `{}`", v.label));
            }
        }
        let mut faces = BTreeSet::new();
        for f in self.faces() {
            if !faces.insert(f.label.as_str()) {
                return bad(format!("duplicate face `{}`", f.label));
            }
            if let Some(v) = f.vertices.iter().find(|v| !labels.contains(v.as_str())) {
                return bad(format!("face `{}` names unknown vertex `{v}`", f.label));
            }
        }
        let internal: BTreeSet<_> = self
            .internal_faces
            .iter()
            .map(|f| f.label.as_str())
            .collect();
        let mut namespaces = BTreeMap::new();
        for p in &self.pairings {
            for face in [&p.source, &p.target] {
                if !internal.contains(face.as_str()) {
                    return bad(format!(
                        "pairing `{}` names unknown internal face `{face}`",
                        p.map
                    ));
                }
            }
            for (u, v) in &p.vertices {
                if !labels.contains(u.as_str()) || !labels.contains(v.as_str()) {
                    return bad(format!(
                        "pairing `{}` names unknown vertex `{u}` or `{v}`",
                        p.map
                    ));
                }
            }
            let ns = namespaces
                .entry(p.namespace)
                .or_insert_with(|| Namespace::for_kind(p.namespace, 1));
            if let Err(e) = ns.get(&p.map) {
                return bad(e.to_string());
            }
        }
        Ok(())
    }
}

fn shared_vertices<'a>(f: &'a Face, g: &Face) -> Vec<&'a str> {
    f.vertices
        .iter()
        .filter(|v| g.vertices.contains(v))
        .map(String::as_str)
        .collect()
}

fn pairing_checks(data: &PolyhedronData, p: &Pairing, m: &Matrix, out: &mut Vec<GeometryCheck>) {
    let name = &data.name;
    let (src, dst) = match (data.face(&p.source), data.face(&p.target)) {
        (Some(s), Some(t)) => (s, t),
        _ => unreachable!("validated"),
    };
    let image = image_circle(m, &src.carrier);
    out.push(GeometryCheck::new(
        format!("{name}.pairing.{}.carrier", p.map),
        image.same_circle(&dst.carrier),
        format!(
            "{}({}) = {}, {} = {}",
            p.map,
            p.source,
            image.pretty(),
            p.target,
            dst.carrier.normalized().pretty()
        ),
    ));
    let mut wrong = Vec::new();
    for (u, v) in &p.vertices {
        let (pu, pv) = (
            data.vertex(u).expect("validated"),
            data.vertex(v).expect("validated"),
        );
        let got = m.apply(pu);
        if got != *pv {
            wrong.push(format!("{u} -> {} (expected {v})", got.pretty()));
        }
    }
    let details = if wrong.is_empty() {
        p.vertices
            .iter()
            .map(|(u, v)| format!("{u}->{v}"))
            .collect::<Vec<_>>()
            .join(", ")
    } else {
        wrong.join("; ")
    };
    out.push(GeometryCheck::new(
        format!("{name}.pairing.{}.vertices", p.map),
        wrong.is_empty(),
        details,
    ));
}

/// Exact checks on a polyhedron:
///
/// * every vertex of a face lies on its carrier;
/// * each pairing sends the source carrier to the target carrier and realizes
///   the stated vertex correspondence;
/// * internal and external faces sharing an edge meet at right angles;
/// * faces meeting in a single ideal vertex are tangent there.
pub fn verify_polyhedron(data: &PolyhedronData) -> Result<PolyhedronReport> {
    data.validate()?;
    let name = &data.name;
    let mut checks = Vec::new();
    for f in data.faces() {
        let off: Vec<&str> = f
            .vertices
            .iter()
            .filter(|v| !f.carrier.contains(data.vertex(v).expect("validated")))
            .map(String::as_str)
            .collect();
        checks.push(GeometryCheck::new(
            format!("{name}.incidence.{}", f.label),
            off.is_empty(),
            if off.is_empty() {
                format!("{} on {}", f.vertices.join(", "), f.carrier.pretty())
            } else {
                format!("off carrier: {}", off.join(", "))
            },
        ));
    }
    let mut namespaces = BTreeMap::new();
    for p in &data.pairings {
        let ns = namespaces
            .entry(p.namespace)
            .or_insert_with(|| Namespace::for_kind(p.namespace, 1));
        let m = ns.get(&p.map)?.clone();
        pairing_checks(data, p, &m, &mut checks);
    }
    for f in &data.internal_faces {
        for g in &data.external_faces {
            if shared_vertices(f, g).len() >= 2 {
                let rel = inversive_test(&f.carrier, &g.carrier);
                checks.push(GeometryCheck::new(
                    format!("{name}.right_angle.{}.{}", f.label, g.label),
                    rel == Inversive::Orthogonal,
                    format!("{rel:?}").to_lowercase(),
                ));
            }
        }
    }
    let faces: Vec<&Face> = data.faces().collect();
    for (i, f) in faces.iter().enumerate() {
        for g in &faces[i + 1..] {
            if let [v] = shared_vertices(f, g)[..] {
                let rel = inversive_test(&f.carrier, &g.carrier);
                checks.push(GeometryCheck::new(
                    format!("{name}.tangent.{}.{}", f.label, g.label),
                    rel == Inversive::Tangent,
                    format!("at {v}: {}", format!("{rel:?}").to_lowercase()),
                ));
            }
        }
    }
    Ok(PolyhedronReport {
        name: name.clone(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_point;

    fn assert_all_pass(report: &PolyhedronReport) {
        let failed: Vec<_> = report.failures().collect();
        assert!(failed.is_empty(), "{failed:#?}");
    }

    #[test]
    fn octahedron_passes() {
        let data = PolyhedronData::octahedron();
        let report = verify_polyhedron(&data).unwrap();
        assert_all_pass(&report);
        let r = report
            .checks
            .iter()
            .find(|c| c.id == "octahedron.pairing.r.vertices")
            .unwrap();
        assert!(r.details.contains("0->0"));
        assert!(report.checks.iter().any(|c| c.id.contains("right_angle")));
        assert!(report.checks.iter().any(|c| c.id.contains("tangent")));
    }

    #[test]
    fn cuboctahedron_passes() {
        let data = PolyhedronData::cuboctahedron();
        assert_all_pass(&verify_polyhedron(&data).unwrap());
        for p in ["0", "1", "inf", "-i*s2/2", "-i*s2", "1-i*s2", "1-i*s2/2"] {
            let p = parse_point(p).unwrap();
            assert!(data.vertices.iter().any(|v| v.point == p));
        }
    }

    #[test]
    fn corrupted_carrier_is_reported() {
        let mut data = PolyhedronData::octahedron();
        data.internal_faces[0].carrier =
            ExtendedCircle::from_center(&"1/2".parse().unwrap(), &"1/2".parse().unwrap()).unwrap();
        let report = verify_polyhedron(&data).unwrap();
        let failed: Vec<_> = report.failures().map(|c| c.id.as_str()).collect();
        assert!(failed.contains(&"octahedron.incidence.X1"));
        assert!(failed.contains(&"octahedron.pairing.r.carrier"));
    }

    #[test]
    fn identity_pairing_is_trivial() {
        let mut data = PolyhedronData::octahedron();
        data.pairings = vec![Pairing {
            map: "id".into(),
            namespace: NamespaceKind::Links,
            source: "X1".into(),
            target: "X1".into(),
            vertices: vec![("h".into(), "h".into())],
        }];
        assert_all_pass(&verify_polyhedron(&data).unwrap());
    }

    #[test]
    fn validation_errors() {
        let mut data = PolyhedronData::octahedron();
        data.pairings[0].map = "nope".into();
        assert!(matches!(data.validate(), Err(Error::Config(_))));
        let mut data = PolyhedronData::octahedron();
        data.internal_faces[0].vertices.push("q".into());
        assert!(data.validate().is_err());
        assert!(PolyhedronData::from_json("{}").is_err());
    }

    #[test]
    fn json_round_trip() {
        let data = PolyhedronData::cuboctahedron();
        let back = PolyhedronData::from_json(&data.to_json()).unwrap();
        assert_eq!(back, data);
    }
}
