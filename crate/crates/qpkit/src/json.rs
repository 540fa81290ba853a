//! JSON serialization of QPs and embeddings.
//!
//! Schema:
//! ```json
//! {
//!   "vertices": ["1", "2"],
//!   "arrows": [{"id": "a", "src": "1", "tgt": "2"}],
//!   "potential": [{"coef": "1", "cycle": ["a", "b"]}],
//!   "embedding": {
//!     "rotations": {"1": [["a", "out"], ["b", "in"]]},
//!     "outer": {"arrow": "a", "side": "left"}
//!   }
//! }
//! ```
//! Coefficients are exact fractions written `p/q` (or a plain integer).
//! Cycle lists are in composition order, first arrow first. The embedding
//! block is optional and only present for planar QPs.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{QpError, Result};
use crate::planar::{Dart, PlanarQP, RotationSystem, Side};
use crate::potential::{CyclicWord, Potential, QP};
use crate::quiver::Quiver;

#[derive(Serialize, Deserialize)]
struct ArrowJson {
    id: String,
    src: String,
    tgt: String,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coef: String,
    cycle: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct OuterJson {
    arrow: String,
    side: String,
}

#[derive(Serialize, Deserialize)]
struct EmbeddingJson {
    rotations: BTreeMap<String, Vec<(String, String)>>,
    outer: OuterJson,
}

#[derive(Serialize, Deserialize)]
struct QpJson {
    vertices: Vec<String>,
    arrows: Vec<ArrowJson>,
    potential: Vec<TermJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    embedding: Option<EmbeddingJson>,
}

fn qp_to_json(qp: &QP) -> QpJson {
    let q = &qp.quiver;
    QpJson {
        vertices: q.vertices().map(|v| q.vertex_name(v).to_string()).collect(),
        arrows: q
            .arrow_ids()
            .map(|a| ArrowJson {
                id: q.arrow_name(a).to_string(),
                src: q.vertex_name(q.source(a)).to_string(),
                tgt: q.vertex_name(q.target(a)).to_string(),
            })
            .collect(),
        potential: qp
            .potential
            .terms()
            .map(|(w, c)| TermJson {
                coef: c.to_string(),
                cycle: w.arrows().iter().map(|&a| q.arrow_name(a).to_string()).collect(),
            })
            .collect(),
        embedding: None,
    }
}

pub fn serialize_qp(qp: &QP) -> String {
    serde_json::to_string_pretty(&qp_to_json(qp)).expect("serializable")
}

pub fn serialize_planar(pqp: &PlanarQP) -> String {
    let mut j = qp_to_json(&pqp.qp());
    let q = pqp.quiver();
    let rot = pqp.rotation();
    let rotations = q
        .vertices()
        .map(|v| {
            let darts = rot
                .order_at(v)
                .iter()
                .map(|d| {
                    (
                        q.arrow_name(d.arrow).to_string(),
                        if d.outgoing { "out" } else { "in" }.to_string(),
                    )
                })
                .collect();
            (q.vertex_name(v).to_string(), darts)
        })
        .collect();
    let outer = rot.outer_face_marker();
    j.embedding = Some(EmbeddingJson {
        rotations,
        outer: OuterJson {
            arrow: q.arrow_name(outer.0).to_string(),
            side: match outer.1 {
                Side::Left => "left".to_string(),
                Side::Right => "right".to_string(),
            },
        },
    });
    serde_json::to_string_pretty(&j).expect("serializable")
}

fn parse_coeff(s: &str) -> Result<BigRational> {
    let c = BigRational::from_str(s.trim())
        .map_err(|e| QpError::Parse(format!("bad coefficient {s:?}: {e}")))?;
    if c.is_zero() {
        return Err(QpError::ZeroCoefficient(s.to_string()));
    }
    Ok(c)
}

fn quiver_from_json(j: &QpJson) -> Result<(Quiver, Potential)> {
    let mut q = Quiver::new();
    for v in &j.vertices {
        q.add_vertex(v)?;
    }
    for a in &j.arrows {
        q.add_arrow_by_names(&a.id, &a.src, &a.tgt)?;
    }
    let mut w = Potential::zero();
    for t in &j.potential {
        let c = parse_coeff(&t.coef)?;
        let arrows = t
            .cycle
            .iter()
            .map(|n| {
                q.arrow_by_name(n)
                    .ok_or_else(|| QpError::Parse(format!("unknown arrow {n} in potential")))
            })
            .collect::<Result<Vec<_>>>()?;
        let cw = CyclicWord::from_arrow_cycle(&q, arrows)?;
        w.add_term(cw, c)?;
    }
    Ok((q, w))
}

pub fn parse_qp(text: &str) -> Result<QP> {
    let j: QpJson =
        serde_json::from_str(text).map_err(|e| QpError::Parse(format!("invalid JSON: {e}")))?;
    let (q, w) = quiver_from_json(&j)?;
    QP::new(q, w)
}

/// Parses a QP together with its embedding block.
pub fn parse_planar(text: &str) -> Result<PlanarQP> {
    let j: QpJson =
        serde_json::from_str(text).map_err(|e| QpError::Parse(format!("invalid JSON: {e}")))?;
    let (q, w) = quiver_from_json(&j)?;
    let emb = j
        .embedding
        .as_ref()
        .ok_or_else(|| QpError::Parse("missing embedding block".into()))?;
    let mut orders = Vec::new();
    for v in q.vertices() {
        let name = q.vertex_name(v);
        let list = emb
            .rotations
            .get(name)
            .ok_or_else(|| QpError::Parse(format!("no rotation for vertex {name}")))?;
        let mut darts = Vec::new();
        for (arrow, dir) in list {
            let a = q
                .arrow_by_name(arrow)
                .ok_or_else(|| QpError::Parse(format!("unknown arrow {arrow} in rotation")))?;
            let outgoing = match dir.as_str() {
                "out" => true,
                "in" => false,
                other => return Err(QpError::Parse(format!("bad dart direction {other:?}"))),
            };
            darts.push(Dart { arrow: a, outgoing });
        }
        orders.push(darts);
    }
    let outer_arrow = q
        .arrow_by_name(&emb.outer.arrow)
        .ok_or_else(|| QpError::Parse(format!("unknown outer arrow {}", emb.outer.arrow)))?;
    let side = match emb.outer.side.as_str() {
        "left" => Side::Left,
        "right" => Side::Right,
        other => return Err(QpError::Parse(format!("bad face side {other:?}"))),
    };
    let rot = RotationSystem::new(&q, orders, (outer_arrow, side))?;
    let qp = QP::new(q, w)?;
    PlanarQP::from_parts(qp, rot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trip() {
        let qp = fixtures::example_a();
        let text = serialize_qp(&qp);
        let back = parse_qp(&text).unwrap();
        assert_eq!(serialize_qp(&back), text);
        assert_eq!(back, qp);
    }

    #[test]
    fn non_cyclic_term_rejected() {
        let text = r#"{
            "vertices": ["1", "2"],
            "arrows": [{"id": "a", "src": "1", "tgt": "2"}],
            "potential": [{"coef": "1", "cycle": ["a"]}]
        }"#;
        match parse_qp(text) {
            Err(QpError::NonCyclicTerm(_)) => {}
            other => panic!("expected NonCyclicTerm, got {other:?}"),
        }
    }

    #[test]
    fn zero_coefficient_rejected() {
        let text = r#"{
            "vertices": ["1", "2"],
            "arrows": [{"id": "a", "src": "1", "tgt": "2"}, {"id": "b", "src": "2", "tgt": "1"}],
            "potential": [{"coef": "0", "cycle": ["a", "b"]}]
        }"#;
        match parse_qp(text) {
            Err(QpError::ZeroCoefficient(_)) => {}
            other => panic!("expected ZeroCoefficient, got {other:?}"),
        }
    }

    #[test]
    fn planar_round_trip() {
        let pqp = crate::families::triangle_qp(3).unwrap();
        let text = serialize_planar(&pqp);
        let back = parse_planar(&text).unwrap();
        assert_eq!(back.qp(), pqp.qp());
        assert_eq!(serialize_planar(&back), text);
    }

    #[test]
    fn fractional_coefficients() {
        let text = r#"{
            "vertices": ["1", "2"],
            "arrows": [{"id": "a", "src": "1", "tgt": "2"}, {"id": "b", "src": "2", "tgt": "1"}],
            "potential": [{"coef": "3/2", "cycle": ["a", "b"]}]
        }"#;
        let qp = parse_qp(text).unwrap();
        assert_eq!(qp.potential.num_terms(), 1);
    }
}
