//! Co-authorship co-occurrence graph and its top-n author subgraph.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::corpus::PaperRecord;
use crate::error::AnalyticsError;

/// Default number of authors shown in the network view.
pub const DEFAULT_TOP_AUTHORS: usize = 20;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct NodeMetrics {
    /// Distinct co-authors.
    pub collaborator_count: u64,
    /// Sum of incident edge weights.
    pub weighted_degree: u64,
}

/// Undirected pair key with `first < second`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AuthorPair {
    first: String,
    second: String,
}

impl AuthorPair {
    /// `None` for a self pair.
    pub fn new(a: &str, b: &str) -> Option<Self> {
        match a.cmp(b) {
            Ordering::Less => Some(AuthorPair {
                first: a.to_string(),
                second: b.to_string(),
            }),
            Ordering::Greater => Some(AuthorPair {
                first: b.to_string(),
                second: a.to_string(),
            }),
            Ordering::Equal => None,
        }
    }

    pub fn first(&self) -> &str {
        &self.first
    }

    pub fn second(&self) -> &str {
        &self.second
    }
}

/// Weighted undirected co-authorship graph. Edge weight is the number of
/// papers two authors share.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoGraph {
    nodes: BTreeMap<String, NodeMetrics>,
    edges: BTreeMap<AuthorPair, u64>,
}

impl CoGraph {
    pub fn nodes(&self) -> &BTreeMap<String, NodeMetrics> {
        &self.nodes
    }

    pub fn edges(&self) -> &BTreeMap<AuthorPair, u64> {
        &self.edges
    }

    pub fn edge_weight(&self, a: &str, b: &str) -> Option<u64> {
        AuthorPair::new(a, b).and_then(|p| self.edges.get(&p).copied())
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Authors in display order: collaborator count desc, weighted degree desc, name asc.
    pub fn ranked_authors(&self) -> Vec<(&str, NodeMetrics)> {
        let mut ranked: Vec<_> = self.nodes.iter().map(|(n, m)| (n.as_str(), *m)).collect();
        ranked.sort_by(|(na, a), (nb, b)| {
            b.collaborator_count
                .cmp(&a.collaborator_count)
                .then(b.weighted_degree.cmp(&a.weighted_degree))
                .then_with(|| na.cmp(nb))
        });
        ranked
    }
}

/// Every unordered pair of co-authors on a paper gains +1; authors with no
/// co-authors still appear as isolated nodes.
pub fn build_cooccurrence(records: &[PaperRecord]) -> CoGraph {
    let mut graph = CoGraph::default();
    for record in records {
        let authors: BTreeSet<&str> = record.authors.iter().map(String::as_str).collect();
        for a in &authors {
            graph.nodes.entry((*a).to_string()).or_default();
        }
        let authors: Vec<&str> = authors.into_iter().collect();
        for (i, a) in authors.iter().enumerate() {
            for b in &authors[i + 1..] {
                let pair = AuthorPair::new(a, b).expect("distinct authors");
                *graph.edges.entry(pair).or_insert(0) += 1;
            }
        }
    }
    for (pair, weight) in &graph.edges {
        for end in [&pair.first, &pair.second] {
            let m = graph.nodes.get_mut(end).expect("edge endpoint registered");
            m.collaborator_count += 1;
            m.weighted_degree += weight;
        }
    }
    graph
}

/// Induced subgraph on the `n` highest-ranked authors. Node metrics are
/// carried over from the full graph; only edges inside the selection remain.
pub fn top_n_subgraph(graph: &CoGraph, n: usize) -> Result<CoGraph, AnalyticsError> {
    if n < 1 {
        return Err(AnalyticsError::InvalidN(n));
    }
    let nodes: BTreeMap<String, NodeMetrics> = graph
        .ranked_authors()
        .into_iter()
        .take(n)
        .map(|(name, m)| (name.to_string(), m))
        .collect();
    let edges = graph
        .edges
        .iter()
        .filter(|(p, _)| nodes.contains_key(&p.first) && nodes.contains_key(&p.second))
        .map(|(p, w)| (p.clone(), *w))
        .collect();
    Ok(CoGraph { nodes, edges })
}

#[derive(Serialize)]
struct NodeOut<'a> {
    name: &'a str,
    collaborator_count: u64,
    weighted_degree: u64,
}

#[derive(Serialize)]
struct EdgeOut<'a> {
    source: &'a str,
    target: &'a str,
    weight: u64,
}

/// `{ nodes: [{name, collaborator_count, weighted_degree}], edges: [{source, target, weight}] }`
/// with nodes in ranking order and edges ordered by endpoint names.
impl Serialize for CoGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let nodes: Vec<NodeOut> = self
            .ranked_authors()
            .into_iter()
            .map(|(name, m)| NodeOut {
                name,
                collaborator_count: m.collaborator_count,
                weighted_degree: m.weighted_degree,
            })
            .collect();
        let edges: Vec<EdgeOut> = self
            .edges
            .iter()
            .map(|(p, w)| EdgeOut {
                source: &p.first,
                target: &p.second,
                weight: *w,
            })
            .collect();
        let mut s = serializer.serialize_struct("CoGraph", 2)?;
        s.serialize_field("nodes", &nodes)?;
        s.serialize_field("edges", &edges)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use chrono::NaiveDate;

    fn paper(authors: &[&str]) -> PaperRecord {
        PaperRecord {
            id: authors.join(","),
            title: "t".into(),
            authors: authors.iter().map(|s| s.to_string()).collect(),
            abstract_text: String::new(),
            pub_date: NaiveDate::from_ymd_opt(2020, 1, 1).unwrap(),
            citation_count: 0,
            venue: "V".into(),
            fields_of_study: vec![],
        }
    }

    #[test]
    fn single_author_is_isolated() {
        let g = build_cooccurrence(&[paper(&["X"])]);
        assert_eq!(g.nodes()["X"], NodeMetrics::default());
        assert!(g.edges().is_empty());
    }

    #[test]
    fn one_pair() {
        let g = build_cooccurrence(&[paper(&["X", "Y"])]);
        assert_eq!(g.edge_weight("Y", "X"), Some(1));
        for n in ["X", "Y"] {
            assert_eq!(
                g.nodes()[n],
                NodeMetrics {
                    collaborator_count: 1,
                    weighted_degree: 1
                }
            );
        }
    }

    #[test]
    fn self_pair_is_never_an_edge() {
        assert!(AuthorPair::new("A", "A").is_none());
        let g = build_cooccurrence(&[paper(&["A", "A", "B"])]);
        assert_eq!(g.edges().len(), 1);
        assert_eq!(g.edge_weight("A", "B"), Some(1));
    }

    #[test]
    fn zero_n_is_invalid() {
        assert_eq!(top_n_subgraph(&CoGraph::default(), 0), Err(AnalyticsError::InvalidN(0)));
        assert_eq!(top_n_subgraph(&CoGraph::default(), 3).unwrap(), CoGraph::default());
    }

    #[test]
    fn isolated_prolific_author_stays_as_isolated_node() {
        let g = build_cooccurrence(&[paper(&["Solo"]), paper(&["A", "B"])]);
        let sub = top_n_subgraph(&g, 3).unwrap();
        assert_eq!(sub.node_count(), 3);
        assert_eq!(sub.nodes()["Solo"], NodeMetrics::default());
    }

    #[test]
    fn serializes_in_rank_order() {
        let g = build_cooccurrence(&[paper(&["Z", "Y"]), paper(&["Z", "X"])]);
        let json = serde_json::to_value(&g).unwrap();
        assert_eq!(json["nodes"][0]["name"], "Z");
        assert_eq!(json["nodes"][1]["name"], "X");
        assert_eq!(json["edges"][0]["source"], "X");
        assert_eq!(json["edges"][0]["target"], "Z");
    }
}
