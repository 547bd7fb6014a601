//! Simple undirected graphs over the dense vertex range `0..n`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

/// An undirected edge stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Canonicalizes `{a, b}`. Self-loops are rejected.
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        match a.cmp(&b) {
            core::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            core::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            core::cmp::Ordering::Equal => Err(GraphError::SelfLoop { vertex: a }),
        }
    }

    /// Smaller endpoint.
    pub fn u(&self) -> usize {
        self.u
    }

    /// Larger endpoint.
    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
    SelfLoop {
        vertex: usize,
    },
    DuplicateEdge {
        edge: Edge,
    },
    MissingEdge {
        edge: Edge,
    },
    EdgeOutOfRange {
        edge: Edge,
        n: usize,
    },
    /// The query needs at least two vertices.
    TooFewVertices {
        n: usize,
        required: usize,
    },
    /// A vertex pair query was given the same vertex twice.
    SameVertex {
        vertex: usize,
    },
    /// The brute-force oracle refuses graphs with too many edges.
    OracleTooLarge {
        edges: usize,
        limit: usize,
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { edge } => write!(f, "duplicate edge {edge}"),
            GraphError::MissingEdge { edge } => write!(f, "edge {edge} is not in the graph"),
            GraphError::EdgeOutOfRange { edge, n } => {
                write!(f, "edge {edge} has an endpoint outside 0..{n}")
            }
            GraphError::TooFewVertices { n, required } => {
                write!(f, "graph has {n} vertices, at least {required} required")
            }
            GraphError::SameVertex { vertex } => {
                write!(f, "vertex pair must be distinct, got {vertex} twice")
            }
            GraphError::OracleTooLarge { edges, limit } => {
                write!(
                    f,
                    "brute-force oracle refuses {edges} edges (limit {limit})"
                )
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Simple undirected graph. Adjacency is symmetric and loop-free.
///
/// Two graphs are equal when they have the same vertex count and the same
/// edge set.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    adjacency: Vec<BTreeSet<usize>>,
    edge_count: usize,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: alloc::vec![BTreeSet::new(); n],
            edge_count: 0,
        }
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for a in 0..n {
            for b in a + 1..n {
                g.insert(a, b);
            }
        }
        g
    }

    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Graph::empty(n);
        for e in edges {
            if e.v >= n {
                return Err(GraphError::EdgeOutOfRange { edge: e, n });
            }
            if !g.insert(e.u, e.v) {
                return Err(GraphError::DuplicateEdge { edge: e });
            }
        }
        Ok(g)
    }

    /// Builds from raw endpoint pairs, canonicalizing each.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let edges = pairs
            .iter()
            .map(|&(a, b)| Edge::new(a, b))
            .collect::<Result<Vec<_>, _>>()?;
        Graph::from_edge_list(n, edges)
    }

    /// All edges in canonical sorted order.
    pub fn to_edge_list(&self) -> Vec<Edge> {
        self.edges().collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.range(u + 1..).map(move |&v| Edge { u, v }))
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v].len())
    }

    /// Degrees of all vertices, indexed by id.
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(BTreeSet::len).collect()
    }

    pub fn neighbors(&self, v: usize) -> Result<&BTreeSet<usize>, GraphError> {
        self.check_vertex(v)?;
        Ok(&self.adjacency[v])
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency.get(a).is_some_and(|nbrs| nbrs.contains(&b))
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    /// A copy of the graph without `e`.
    pub fn remove_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.delete_edge(e)?;
        Ok(g)
    }

    /// A copy of the graph with `e` added.
    pub fn add_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        if e.v >= self.vertex_count() {
            return Err(GraphError::EdgeOutOfRange {
                edge: e,
                n: self.vertex_count(),
            });
        }
        let mut g = self.clone();
        if !g.insert(e.u, e.v) {
            return Err(GraphError::DuplicateEdge { edge: e });
        }
        Ok(g)
    }

    /// Whether every pair of vertices in `vertices` is adjacent.
    pub fn is_clique<'a, I>(&self, vertices: I) -> bool
    where
        I: IntoIterator<Item = &'a usize>,
        I::IntoIter: Clone,
    {
        let iter = vertices.into_iter();
        for (i, &a) in iter.clone().enumerate() {
            for &b in iter.clone().skip(i + 1) {
                if a == b || !self.has_edge(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Vertices reachable from `start`, as a membership mask.
    pub fn component_of(&self, start: usize) -> Vec<bool> {
        let mut seen = alloc::vec![false; self.vertex_count()];
        if start >= self.vertex_count() {
            return seen;
        }
        let mut stack = alloc::vec![start];
        seen[start] = true;
        while let Some(x) = stack.pop() {
            for &y in &self.adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.component_of(0).iter().all(|&b| b)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.vertex_count(),
            })
        }
    }

    pub(crate) fn delete_edge(&mut self, e: Edge) -> Result<(), GraphError> {
        if !self.contains_edge(e) {
            return Err(GraphError::MissingEdge { edge: e });
        }
        self.adjacency[e.u].remove(&e.v);
        self.adjacency[e.v].remove(&e.u);
        self.edge_count -= 1;
        Ok(())
    }

    /// Returns false if the edge was already present.
    pub(crate) fn insert(&mut self, a: usize, b: usize) -> bool {
        debug_assert!(a != b);
        if self.adjacency[a].insert(b) {
            self.adjacency[b].insert(a);
            self.edge_count += 1;
            true
        } else {
            false
        }
    }

    /// Drops every edge touching `v`, leaving it isolated.
    pub(crate) fn isolate(&mut self, v: usize) {
        let nbrs = core::mem::take(&mut self.adjacency[v]);
        for &w in &nbrs {
            self.adjacency[w].remove(&v);
        }
        self.edge_count -= nbrs.len();
    }
}
