//! JSON documents for every instance format the tool reads and writes.
//!
//! Graphs: `{"vertices": n, "edges": [[u, v], ...]}` with optional
//! `"matching"` (edge indices), `"transitions"` (per vertex, allowed
//! incident-edge pairs) and `"pairs"` (paired edges, `[e, f]` or
//! `[e, f, anchor]`). Nets: `{"links": [{"id": k, "kind": "ax"|"tensor"|
//! "par"}], "edges": [[src, tgt], ...]}`. Derivations and matching-side
//! derivations are tagged trees.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Matching};
use crate::matching::UpmDerivation;
use crate::proofnet::{EdgePair, LinkKind, PairedGraph, ProofStructure};
use crate::seq::Derivation;
use crate::transitions::TransitionSystem;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("invalid instance: {0}")]
    Invalid(String),
}

fn invalid(e: impl std::fmt::Display) -> JsonError {
    JsonError::Invalid(e.to_string())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matching: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transitions: Option<Vec<Vec<(usize, usize)>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<Vec<usize>>>,
}

impl GraphDoc {
    pub fn plain(g: &Graph) -> Self {
        GraphDoc {
            vertices: g.vertex_count(),
            edges: g.edges().to_vec(),
            matching: None,
            transitions: None,
            pairs: None,
        }
    }

    pub fn with_matching(g: &Graph, m: &Matching) -> Self {
        let mut doc = GraphDoc::plain(g);
        doc.matching = Some(m.iter().collect());
        doc
    }

    pub fn to_graph(&self) -> Result<Graph, JsonError> {
        Graph::from_edges(self.vertices, self.edges.iter().copied()).map_err(invalid)
    }

    pub fn to_matching(&self, g: &Graph) -> Result<Option<Matching>, JsonError> {
        match &self.matching {
            None => Ok(None),
            Some(ids) => Matching::new(g, ids.iter().copied())
                .map(Some)
                .map_err(invalid),
        }
    }

    pub fn to_transitions(&self, g: &Graph) -> Result<Option<TransitionSystem>, JsonError> {
        match &self.transitions {
            None => Ok(None),
            Some(lists) => {
                if lists.len() != g.vertex_count() {
                    return Err(JsonError::Invalid(format!(
                        "expected {} per-vertex transition lists, found {}",
                        g.vertex_count(),
                        lists.len()
                    )));
                }
                TransitionSystem::from_allowed(g, lists.clone())
                    .map(Some)
                    .map_err(invalid)
            }
        }
    }

    pub fn to_paired(&self) -> Result<Option<PairedGraph>, JsonError> {
        let Some(raw_pairs) = &self.pairs else {
            return Ok(None);
        };
        let g = self.to_graph()?; // rejects loops/parallel edges for paired inputs
        let mut pairs = Vec::new();
        let mut used = std::collections::BTreeSet::new();
        for raw in raw_pairs {
            let (e, f, anchor) = match raw.as_slice() {
                [e, f] => {
                    let shared = shared_vertex(&g, *e, *f)?;
                    (*e, *f, shared)
                }
                [e, f, anchor] => (*e, *f, *anchor),
                _ => {
                    return Err(JsonError::Invalid(
                        "pairs must be [e, f] or [e, f, anchor]".into(),
                    ))
                }
            };
            for edge in [e, f] {
                if edge >= g.edge_count() {
                    return Err(JsonError::Invalid(format!("pair edge {edge} out of range")));
                }
                if !used.insert(edge) {
                    return Err(JsonError::Invalid(format!(
                        "edge {edge} appears in two pairs"
                    )));
                }
                let (a, b) = g.endpoints(edge);
                if a != anchor && b != anchor {
                    return Err(JsonError::Invalid(format!(
                        "pair anchor {anchor} is not an endpoint of edge {edge}"
                    )));
                }
            }
            pairs.push(EdgePair {
                first: e.min(f),
                second: e.max(f),
                anchor,
            });
        }
        Ok(Some(PairedGraph {
            vertices: g.vertex_count(),
            edges: g.edges().to_vec(),
            pairs,
        }))
    }
}

fn shared_vertex(g: &Graph, e: usize, f: usize) -> Result<usize, JsonError> {
    if e >= g.edge_count() || f >= g.edge_count() {
        return Err(JsonError::Invalid("pair edge out of range".into()));
    }
    let (a, b) = g.endpoints(e);
    let (c, d) = g.endpoints(f);
    match (a == c || a == d, b == c || b == d) {
        (true, false) => Ok(a),
        (false, true) => Ok(b),
        (true, true) => Err(JsonError::Invalid(format!(
            "pair [{e}, {f}] is ambiguous; give an explicit anchor"
        ))),
        (false, false) => Err(JsonError::Invalid(format!(
            "paired edges {e} and {f} share no vertex"
        ))),
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum KindDoc {
    Ax,
    Tensor,
    Par,
}

impl From<LinkKind> for KindDoc {
    fn from(kind: LinkKind) -> Self {
        match kind {
            LinkKind::Ax => KindDoc::Ax,
            LinkKind::Tensor => KindDoc::Tensor,
            LinkKind::Par => KindDoc::Par,
        }
    }
}

impl From<KindDoc> for LinkKind {
    fn from(kind: KindDoc) -> Self {
        match kind {
            KindDoc::Ax => LinkKind::Ax,
            KindDoc::Tensor => LinkKind::Tensor,
            KindDoc::Par => LinkKind::Par,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LinkDoc {
    pub id: usize,
    pub kind: KindDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NetDoc {
    pub links: Vec<LinkDoc>,
    pub edges: Vec<(usize, usize)>,
}

impl NetDoc {
    pub fn from_structure(ps: &ProofStructure) -> Self {
        NetDoc {
            links: ps
                .kinds()
                .iter()
                .enumerate()
                .map(|(id, &kind)| LinkDoc {
                    id,
                    kind: kind.into(),
                })
                .collect(),
            edges: ps.edges().to_vec(),
        }
    }

    pub fn to_structure(&self) -> Result<ProofStructure, JsonError> {
        let mut kinds = vec![None; self.links.len()];
        for link in &self.links {
            if link.id >= self.links.len() || kinds[link.id].is_some() {
                return Err(JsonError::Invalid(format!(
                    "link ids must be the dense range 0..{}",
                    self.links.len()
                )));
            }
            kinds[link.id] = Some(LinkKind::from(link.kind));
        }
        let kinds: Vec<LinkKind> = kinds.into_iter().map(Option::unwrap).collect();
        ProofStructure::new(kinds, self.edges.clone()).map_err(invalid)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "lowercase")]
pub enum DerivationDoc {
    Ax {
        link: usize,
    },
    Tensor {
        link: usize,
        left: Box<DerivationDoc>,
        right: Box<DerivationDoc>,
    },
    Par {
        link: usize,
        premise: Box<DerivationDoc>,
    },
    Mix {
        left: Box<DerivationDoc>,
        right: Box<DerivationDoc>,
    },
}

impl DerivationDoc {
    pub fn from_derivation(d: &Derivation) -> Self {
        match d {
            Derivation::Ax { link } => DerivationDoc::Ax { link: *link },
            Derivation::Tensor { link, left, right } => DerivationDoc::Tensor {
                link: *link,
                left: Box::new(Self::from_derivation(left)),
                right: Box::new(Self::from_derivation(right)),
            },
            Derivation::Par { link, premise } => DerivationDoc::Par {
                link: *link,
                premise: Box::new(Self::from_derivation(premise)),
            },
            Derivation::Mix { left, right } => DerivationDoc::Mix {
                left: Box::new(Self::from_derivation(left)),
                right: Box::new(Self::from_derivation(right)),
            },
        }
    }

    pub fn to_derivation(&self) -> Derivation {
        match self {
            DerivationDoc::Ax { link } => Derivation::Ax { link: *link },
            DerivationDoc::Tensor { link, left, right } => Derivation::Tensor {
                link: *link,
                left: Box::new(left.to_derivation()),
                right: Box::new(right.to_derivation()),
            },
            DerivationDoc::Par { link, premise } => Derivation::Par {
                link: *link,
                premise: Box::new(premise.to_derivation()),
            },
            DerivationDoc::Mix { left, right } => Derivation::Mix {
                left: Box::new(left.to_derivation()),
                right: Box::new(right.to_derivation()),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "lowercase")]
pub enum UpmDoc {
    Empty,
    Union {
        left: Box<UpmDoc>,
        right: Box<UpmDoc>,
    },
    Join {
        bridge: usize,
        attach_left: Vec<usize>,
        attach_right: Vec<usize>,
        left: Box<UpmDoc>,
        right: Box<UpmDoc>,
    },
}

impl UpmDoc {
    pub fn from_upm(d: &UpmDerivation) -> Self {
        match d {
            UpmDerivation::Empty => UpmDoc::Empty,
            UpmDerivation::Union(left, right) => UpmDoc::Union {
                left: Box::new(Self::from_upm(left)),
                right: Box::new(Self::from_upm(right)),
            },
            UpmDerivation::Join {
                bridge,
                attach_left,
                attach_right,
                left,
                right,
            } => UpmDoc::Join {
                bridge: *bridge,
                attach_left: attach_left.clone(),
                attach_right: attach_right.clone(),
                left: Box::new(Self::from_upm(left)),
                right: Box::new(Self::from_upm(right)),
            },
        }
    }

    pub fn to_upm(&self) -> UpmDerivation {
        match self {
            UpmDoc::Empty => UpmDerivation::Empty,
            UpmDoc::Union { left, right } => {
                UpmDerivation::Union(Box::new(left.to_upm()), Box::new(right.to_upm()))
            }
            UpmDoc::Join {
                bridge,
                attach_left,
                attach_right,
                left,
                right,
            } => UpmDerivation::Join {
                bridge: *bridge,
                attach_left: attach_left.clone(),
                attach_right: attach_right.clone(),
                left: Box::new(left.to_upm()),
                right: Box::new(right.to_upm()),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn graph_document_roundtrip() {
        let (g, m) = fixtures::linked_triangles();
        let doc = GraphDoc::with_matching(&g, &m);
        let text = serde_json::to_string(&doc).unwrap();
        let parsed: GraphDoc = serde_json::from_str(&text).unwrap();
        let g2 = parsed.to_graph().unwrap();
        assert_eq!(g2, g);
        assert_eq!(parsed.to_matching(&g2).unwrap(), Some(m));
    }

    #[test]
    fn net_document_roundtrip() {
        let ps = fixtures::double_par_net();
        let doc = NetDoc::from_structure(&ps);
        let text = serde_json::to_string(&doc).unwrap();
        let parsed: NetDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.to_structure().unwrap(), ps);
    }

    #[test]
    fn net_kind_strings_are_lowercase() {
        let ps = fixtures::double_par_net();
        let text = serde_json::to_string(&NetDoc::from_structure(&ps)).unwrap();
        assert!(text.contains("\"ax\""));
        assert!(text.contains("\"tensor\""));
        assert!(text.contains("\"par\""));
    }

    #[test]
    fn derivation_document_roundtrip() {
        let ps = fixtures::double_par_net();
        let d = crate::seq::mix_sequentialize(&ps).unwrap();
        let doc = DerivationDoc::from_derivation(&d);
        let text = serde_json::to_string(&doc).unwrap();
        assert!(text.contains("\"rule\""));
        let parsed: DerivationDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.to_derivation(), d);
    }

    #[test]
    fn upm_document_roundtrip() {
        let (g, m) = fixtures::linked_triangles();
        let d = crate::matching::upm_sequentialize(&g, &m).unwrap();
        let doc = UpmDoc::from_upm(&d);
        let text = serde_json::to_string(&doc).unwrap();
        assert!(text.contains("\"join\""));
        let parsed: UpmDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.to_upm(), d);
    }

    #[test]
    fn paired_graph_doc_resolves_anchors() {
        let doc = GraphDoc {
            vertices: 5,
            edges: vec![(1, 3), (0, 2), (1, 4), (3, 4), (0, 4), (2, 4)],
            matching: None,
            transitions: None,
            pairs: Some(vec![vec![2, 3], vec![4, 5]]),
        };
        let pg = doc.to_paired().unwrap().unwrap();
        assert_eq!(pg, fixtures::star_with_pairs());
    }

    #[test]
    fn disjointness_of_pairs_is_enforced() {
        let doc = GraphDoc {
            vertices: 3,
            edges: vec![(0, 1), (1, 2), (0, 2)],
            matching: None,
            transitions: None,
            pairs: Some(vec![vec![0, 1], vec![1, 2]]),
        };
        assert!(doc.to_paired().is_err());
    }

    #[test]
    fn bad_matchings_are_rejected() {
        let doc = GraphDoc {
            vertices: 3,
            edges: vec![(0, 1), (1, 2)],
            matching: Some(vec![0, 1]),
            transitions: None,
            pairs: None,
        };
        let g = doc.to_graph().unwrap();
        assert!(doc.to_matching(&g).is_err());
    }
}
