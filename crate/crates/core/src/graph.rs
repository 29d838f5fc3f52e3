//! Graphs read off groupoids, and groupoids built from graphs.
//!
//! A pair `{x, y}` is an edge when it forms a left-zero subtable. Building a
//! groupoid from a graph goes the other way, with non-edges becoming
//! right-zero pairs, so the result is always locally-zero.
//!
//! For groupoids with the orientation property `x•y = x` is read as an arc
//! `x → y`. The opposite reading is equally natural; this crate fixes the
//! first one.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupoid::Groupoid;

/// An undirected graph on `0..order` without loops.
#[derive(Debug, Clone, Serialize)]
pub struct SimpleGraph {
    order: usize,
    edges: BTreeSet<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl SimpleGraph {
    /// Edges are normalized to `(min, max)`; loops and out-of-range vertices
    /// are rejected.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (x, y) in edges {
            if x >= order || y >= order {
                return Err(Error::BadShape(format!(
                    "edge ({x}, {y}) leaves a graph of order {order}"
                )));
            }
            if x == y {
                return Err(Error::BadShape(format!("self-loop at vertex {x}")));
            }
            set.insert((x.min(y), x.max(y)));
        }
        Ok(SimpleGraph {
            order,
            edges: set,
            labels: None,
        })
    }

    pub fn complete(order: usize) -> Self {
        let edges = (0..order).flat_map(|x| (x + 1..order).map(move |y| (x, y)));
        SimpleGraph::new(order, edges).expect("complete graph is simple")
    }

    pub fn edgeless(order: usize) -> Self {
        SimpleGraph::new(order, []).expect("no edges")
    }

    pub fn with_labels(mut self, labels: Option<Vec<String>>) -> Result<Self> {
        if let Some(l) = &labels {
            // reuse the groupoid label rules
            Groupoid::left_zero(self.order).with_labels(Some(l.clone()))?;
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.edges.contains(&(x.min(y), x.max(y)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        self.labels
            .as_ref()
            .map_or_else(|| x.to_string(), |l| l[x].clone())
    }
}

impl PartialEq for SimpleGraph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.edges == other.edges
    }
}

impl Eq for SimpleGraph {}

/// A directed graph on `0..order` without loops.
#[derive(Debug, Clone, Serialize)]
pub struct Digraph {
    order: usize,
    arcs: BTreeSet<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl Digraph {
    pub fn new(order: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (x, y) in arcs {
            if x >= order || y >= order {
                return Err(Error::BadShape(format!(
                    "arc ({x}, {y}) leaves a digraph of order {order}"
                )));
            }
            if x == y {
                return Err(Error::BadShape(format!("self-arc at vertex {x}")));
            }
            set.insert((x, y));
        }
        Ok(Digraph {
            order,
            arcs: set,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Option<Vec<String>>) -> Result<Self> {
        if let Some(l) = &labels {
            Groupoid::left_zero(self.order).with_labels(Some(l.clone()))?;
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn has_arc(&self, x: usize, y: usize) -> bool {
        self.arcs.contains(&(x, y))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        self.labels
            .as_ref()
            .map_or_else(|| x.to_string(), |l| l[x].clone())
    }

    /// No pair of opposite arcs.
    pub fn is_antisymmetric(&self) -> bool {
        self.arcs.iter().all(|&(x, y)| !self.arcs.contains(&(y, x)))
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs.iter().all(|&(x, y)| self.arcs.contains(&(y, x)))
    }
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.arcs == other.arcs
    }
}

impl Eq for Digraph {}

/// Edge `{x, y}` iff `x•y = x` and `y•x = y`. Defined for every groupoid,
/// though only locally-zero ones round-trip through [`from_graph`].
pub fn to_graph(g: &Groupoid) -> SimpleGraph {
    let n = g.order();
    let edges = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .filter(|&(x, y)| g.get(x, y) == x && g.get(y, x) == y);
    let graph = SimpleGraph::new(n, edges).expect("pairs are in range");
    SimpleGraph {
        labels: g.labels().map(<[String]>::to_vec),
        ..graph
    }
}

/// The locally-zero groupoid of a graph: idempotent diagonal, left-zero
/// pairs on edges, right-zero pairs elsewhere.
pub fn from_graph(graph: &SimpleGraph) -> Groupoid {
    let g = Groupoid::from_fn(graph.order(), |x, y| {
        if x == y || graph.has_edge(x, y) {
            x
        } else {
            y
        }
    });
    g.with_labels(graph.labels().map(<[String]>::to_vec))
        .expect("graph labels follow the groupoid rules")
}

/// Arc `x → y` iff `x ≠ y` and `x•y = x`. Needs the orientation property.
pub fn to_digraph(g: &Groupoid) -> Result<Digraph> {
    if !g.has_orientation() {
        return Err(Error::NotOrientation);
    }
    let n = g.order();
    let arcs = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y && g.get(x, y) == x);
    let d = Digraph::new(n, arcs).expect("pairs are in range");
    Ok(Digraph {
        labels: g.labels().map(<[String]>::to_vec),
        ..d
    })
}

/// Every simple graph on `order` vertices, ordered by edge bitmask.
pub fn all_graphs(order: usize) -> impl Iterator<Item = SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..order)
        .flat_map(|x| (x + 1..order).map(move |y| (x, y)))
        .collect();
    assert!(pairs.len() < 64, "order {order} has too many vertex pairs");
    (0..1u64 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p);
        SimpleGraph::new(order, edges).expect("pairs are in range")
    })
}
