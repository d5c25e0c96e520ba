//! The JSON graph document: schema 1, vertices with structured labels,
//! edges by vertex ordinal, optional coloring keyed by vertex ordinal.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, VertexLabel};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDocument {
    pub schema: u32,
    pub vertices: Vec<VertexLabel>,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<BTreeMap<String, u32>>,
}

pub const SCHEMA_VERSION: u32 = 1;

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> GraphDocument {
        GraphDocument {
            schema: SCHEMA_VERSION,
            vertices: g.labels().to_vec(),
            edges: g.edges().to_vec(),
            coloring: None,
        }
    }

    pub fn from_colored(g: &Graph, c: &Coloring) -> GraphDocument {
        let mut doc = GraphDocument::from_graph(g);
        doc.coloring =
            Some((0..g.n()).map(|v| (v.to_string(), c.color(v))).collect());
        doc
    }

    pub fn to_graph(&self) -> Result<Graph> {
        if self.schema != SCHEMA_VERSION {
            return Err(Error::InvalidParameter(format!(
                "unsupported schema version {}",
                self.schema
            )));
        }
        Graph::from_ordinals(self.vertices.clone(), &self.edges)
    }

    /// Reconstructs the coloring against `g`; k is one more than the
    /// largest color id and the assignment must be surjective onto it.
    pub fn coloring_for(&self, g: &Graph) -> Result<Option<Coloring>> {
        let Some(map) = &self.coloring else { return Ok(None) };
        let mut colors = vec![u32::MAX; g.n()];
        for (key, &color) in map {
            let ordinal: usize = key
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad vertex ordinal {key:?}")))?;
            if ordinal >= g.n() {
                return Err(Error::DomainMismatch { got: ordinal + 1, want: g.n() });
            }
            colors[ordinal] = color;
        }
        if colors.iter().any(|&c| c == u32::MAX) {
            return Err(Error::DomainMismatch { got: map.len(), want: g.n() });
        }
        let k = colors.iter().max().copied().unwrap_or(0) + 1;
        Ok(Some(Coloring::new(colors, k)?))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn parse(text: &str) -> Result<GraphDocument> {
        serde_json::from_str(text)
            .map_err(|e| Error::InvalidParameter(format!("invalid graph document: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn round_trip_with_coloring() {
        let labels = vec![
            VertexLabel::new(Family::U, 1),
            VertexLabel::new(Family::U, 2),
            VertexLabel::z(),
        ];
        let g = Graph::from_ordinals(labels, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let c = Coloring::new(vec![0, 1, 2], 3).unwrap();
        let doc = GraphDocument::from_colored(&g, &c);
        let text = doc.to_json();
        let parsed = GraphDocument::parse(&text).unwrap();
        let g2 = parsed.to_graph().unwrap();
        assert_eq!(g, g2);
        let c2 = parsed.coloring_for(&g2).unwrap().unwrap();
        assert_eq!(c, c2);
    }

    #[test]
    fn serialization_is_deterministic() {
        let g = Graph::complete(4);
        let c = Coloring::new(vec![0, 1, 2, 3], 4).unwrap();
        let a = GraphDocument::from_colored(&g, &c).to_json();
        let b = GraphDocument::from_colored(&g, &c).to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn bad_schema_rejected() {
        let mut doc = GraphDocument::from_graph(&Graph::complete(3));
        doc.schema = 2;
        assert!(doc.to_graph().is_err());
    }

    #[test]
    fn partial_coloring_rejected() {
        let g = Graph::complete(3);
        let mut doc = GraphDocument::from_graph(&g);
        doc.coloring = Some([("0".to_string(), 0u32)].into_iter().collect());
        assert!(matches!(doc.coloring_for(&g), Err(Error::DomainMismatch { .. })));
    }
}
