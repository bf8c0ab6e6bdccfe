use std::collections::BTreeMap;
use std::fmt::Write;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::IoError;
use crate::geometry::{Coord, CoordMode, Drawing, Polyline};
use crate::graph::{Graph, SubgraphSpec};

pub const GRAPH_VERSION: &str = "crossfree-graph/1";
pub const DRAWING_VERSION: &str = "crossfree-drawing/1";

/// A graph `G` with the edge indices of its spanning subgraph `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub version: String,
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    pub subgraph: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
}

impl GraphDocument {
    pub fn from_instance(g: &Graph, s: &SubgraphSpec) -> Self {
        GraphDocument {
            version: GRAPH_VERSION.into(),
            vertices: g.vertex_count(),
            edges: g.edges().to_vec(),
            subgraph: s.edges().to_vec(),
            root: s.root(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn to_instance(&self) -> Result<(Graph, SubgraphSpec), IoError> {
        if self.version != GRAPH_VERSION {
            return Err(IoError::Validation(format!("unsupported version {:?}", self.version)));
        }
        let g = Graph::new(self.vertices, self.edges.clone()).map_err(|e| IoError::Validation(e.to_string()))?;
        let s = SubgraphSpec::new(&g, self.subgraph.clone(), self.root).map_err(|e| IoError::Validation(e.to_string()))?;
        Ok((g, s))
    }
}

/// Parses and validates a graph document.
pub fn parse_graph(bytes: &[u8]) -> Result<(Graph, SubgraphSpec), IoError> {
    let doc: GraphDocument = serde_json::from_slice(bytes)?;
    doc.to_instance()
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

/// JSON text with one edge per line.
pub fn emit_graph(doc: &GraphDocument) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"version\": {},", json(&doc.version));
    let _ = writeln!(out, "  \"vertices\": {},", doc.vertices);
    out.push_str("  \"edges\": [");
    for (i, &(u, v)) in doc.edges.iter().enumerate() {
        out.push_str(if i == 0 { "\n" } else { ",\n" });
        let _ = write!(out, "    [{u}, {v}]");
        if i + 1 == doc.edges.len() {
            out.push_str("\n  ");
        }
    }
    out.push_str("],\n");
    let _ = write!(out, "  \"subgraph\": {}", json(&doc.subgraph));
    if let Some(r) = doc.root {
        let _ = write!(out, ",\n  \"root\": {r}");
    }
    if !doc.metadata.is_empty() {
        let _ = write!(out, ",\n  \"metadata\": {}", json(&doc.metadata));
    }
    out.push_str("\n}\n");
    out
}

/// A coordinate value: exact rationals as `"num/den"` strings, floats as JSON numbers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Exact(String),
    Float(f64),
}

impl Number {
    fn from_rational(r: &BigRational) -> Self {
        if r.is_integer() {
            Number::Exact(r.numer().to_string())
        } else {
            Number::Exact(format!("{}/{}", r.numer(), r.denom()))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveDocument {
    pub u: usize,
    pub v: usize,
    pub bends: Vec<[Number; 2]>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Provenance {
    pub algorithm: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub parameters: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DrawingDocument {
    pub version: String,
    pub mode: CoordMode,
    pub vertices: Vec<[Number; 2]>,
    pub curves: Vec<CurveDocument>,
    #[serde(default)]
    pub provenance: Provenance,
}

fn number_pair(c: &Coord) -> [Number; 2] {
    match c {
        Coord::Exact { x, y } => [Number::from_rational(x), Number::from_rational(y)],
        Coord::Float { x, y } => [Number::Float(*x), Number::Float(*y)],
    }
}

fn coord_of(p: &[Number; 2], mode: CoordMode) -> Result<Coord, IoError> {
    let bad = |what: &str| IoError::Validation(format!("coordinate {what} does not match mode {mode:?}"));
    match (mode, &p[0], &p[1]) {
        (CoordMode::Exact, Number::Exact(x), Number::Exact(y)) => {
            let parse = |s: &str| BigRational::from_str(s).map_err(|_| IoError::Validation(format!("bad rational {s:?}")));
            Ok(Coord::exact_rational(parse(x)?, parse(y)?))
        }
        (CoordMode::Float, Number::Float(x), Number::Float(y)) => Ok(Coord::float(*x, *y)),
        _ => Err(bad("type")),
    }
}

impl DrawingDocument {
    pub fn from_drawing(d: &Drawing, provenance: Provenance) -> Self {
        DrawingDocument {
            version: DRAWING_VERSION.into(),
            mode: d.mode,
            vertices: d.positions.iter().map(number_pair).collect(),
            curves: d
                .curves
                .iter()
                .map(|c| CurveDocument { u: c.u, v: c.v, bends: c.bends.iter().map(number_pair).collect() })
                .collect(),
            provenance,
        }
    }

    pub fn to_drawing(&self) -> Result<Drawing, IoError> {
        if self.version != DRAWING_VERSION {
            return Err(IoError::Validation(format!("unsupported version {:?}", self.version)));
        }
        let positions = self.vertices.iter().map(|p| coord_of(p, self.mode)).collect::<Result<Vec<_>, _>>()?;
        let curves = self
            .curves
            .iter()
            .map(|c| {
                let bends = c.bends.iter().map(|p| coord_of(p, self.mode)).collect::<Result<Vec<_>, _>>()?;
                Ok(Polyline::new(c.u, c.v, bends))
            })
            .collect::<Result<Vec<_>, IoError>>()?;
        Ok(match self.mode {
            CoordMode::Exact => Drawing::exact(positions, curves),
            CoordMode::Float => Drawing::float(positions, curves),
        })
    }
}

pub fn parse_drawing(bytes: &[u8]) -> Result<DrawingDocument, IoError> {
    Ok(serde_json::from_slice(bytes)?)
}

/// JSON text with one vertex or curve per line.
pub fn emit_drawing(doc: &DrawingDocument) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"version\": {},", json(&doc.version));
    let _ = writeln!(out, "  \"mode\": {},", json(&doc.mode));
    let list = |out: &mut String, items: Vec<String>| {
        out.push('[');
        for (i, item) in items.iter().enumerate() {
            out.push_str(if i == 0 { "\n    " } else { ",\n    " });
            out.push_str(item);
        }
        out.push_str(if items.is_empty() { "]" } else { "\n  ]" });
    };
    out.push_str("  \"vertices\": ");
    list(&mut out, doc.vertices.iter().map(json).collect());
    out.push_str(",\n  \"curves\": ");
    list(&mut out, doc.curves.iter().map(json).collect());
    let _ = write!(out, ",\n  \"provenance\": {}\n}}\n", json(&doc.provenance));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::ratio;
    use crate::harness::{fixture, Fixture};

    #[test]
    fn minimal_path_document() {
        let text = br#"{"version": "crossfree-graph/1", "vertices": 2, "edges": [[0, 1]], "subgraph": [0]}"#;
        let (g, s) = parse_graph(text).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(s.edges(), &[0]);
    }

    #[test]
    fn non_spanning_subgraph_is_a_validation_error() {
        let text = br#"{"version": "crossfree-graph/1", "vertices": 3, "edges": [[0, 1], [1, 2]], "subgraph": [0]}"#;
        match parse_graph(text) {
            Err(IoError::Validation(m)) => assert!(m.contains("subgraph not spanning"), "{m}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_a_position() {
        let text = b"{\n  \"version\": \n}";
        assert!(matches!(parse_graph(text), Err(IoError::Parse { line: 3, .. })));
    }

    #[test]
    fn graph_round_trip() {
        let (g, s) = fixture(Fixture::K13Ternary);
        let mut doc = GraphDocument::from_instance(&g, &s);
        doc.metadata.insert("name".into(), "K13_TERNARY".into());
        let text = emit_graph(&doc);
        let back: GraphDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        let (g2, s2) = parse_graph(text.as_bytes()).unwrap();
        assert_eq!((g2.edges(), s2.edges()), (g.edges(), s.edges()));
    }

    #[test]
    fn drawing_round_trip_is_bit_exact() {
        let exact = Drawing::exact(
            vec![Coord::exact_rational(ratio(-7, 3), ratio(5, 1)), Coord::exact(2, 0)],
            vec![Polyline::new(0, 1, vec![Coord::exact_rational(ratio(1, 1 << 40), ratio(3, 2))])],
        );
        let float = Drawing::float(
            vec![Coord::float(0.1, -1e-300), Coord::float(std::f64::consts::PI, 2.0)],
            vec![Polyline::new(0, 1, vec![Coord::float(1.0 / 3.0, 5e20)])],
        );
        for d in [exact, float] {
            let prov = Provenance { algorithm: "tree1".into(), parameters: BTreeMap::new(), seed: Some(4) };
            let doc = DrawingDocument::from_drawing(&d, prov);
            let text = emit_drawing(&doc);
            let back = parse_drawing(text.as_bytes()).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.to_drawing().unwrap(), d);
        }
    }

    #[test]
    fn mixed_coordinates_are_rejected() {
        let text = br#"{"version": "crossfree-drawing/1", "mode": "exact", "vertices": [["1", 2.0]], "curves": []}"#;
        let doc = parse_drawing(text).unwrap();
        assert!(matches!(doc.to_drawing(), Err(IoError::Validation(_))));
    }
}
