//! k-tree construction traces, recognition and clique census.
//!
//! A k-tree is either the complete graph on `k + 1` vertices, or a k-tree
//! with one extra vertex joined to every vertex of some k-clique. A
//! [`KTreeTrace`] records one such construction: the base clique followed by
//! the attachments in insertion order.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Edge, Graph};

/// One recursive step: `vertex` joined to the k-clique `attach`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Addition {
    pub vertex: usize,
    pub attach: Vec<usize>,
}

/// Construction recipe witnessing that a graph is a k-tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTreeTrace {
    pub k: usize,
    pub base: Vec<usize>,
    pub additions: Vec<Addition>,
}

impl KTreeTrace {
    pub fn new(k: usize, base: Vec<usize>, additions: Vec<Addition>) -> Self {
        KTreeTrace { k, base, additions }
    }

    /// `(k + 1) + |additions|`.
    pub fn vertex_count(&self) -> usize {
        self.base.len() + self.additions.len()
    }

    /// Edge count forced by the construction.
    pub fn edge_count(&self) -> usize {
        self.k * (self.k + 1) / 2 + self.k * self.additions.len()
    }

    /// The `(k + 1)`-cliques read straight off the construction: the base,
    /// plus one per addition. Each returned clique is sorted.
    ///
    /// For a valid trace there are exactly `n - k` of them.
    pub fn max_cliques(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(self.additions.len() + 1);
        let mut base = self.base.clone();
        base.sort_unstable();
        out.push(base);
        for add in &self.additions {
            let mut c = add.attach.clone();
            c.push(add.vertex);
            c.sort_unstable();
            out.push(c);
        }
        out
    }
}

/// Why a trace does not describe a k-tree. `step` indexes `additions`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceError {
    InvalidK,
    BaseSize {
        expected: usize,
        found: usize,
    },
    VertexOutOfRange {
        step: Option<usize>,
        vertex: usize,
        n: usize,
    },
    DuplicateVertex {
        step: Option<usize>,
        vertex: usize,
    },
    AttachSize {
        step: usize,
        expected: usize,
        found: usize,
    },
    AttachNotPresent {
        step: usize,
        vertex: usize,
    },
    AttachNotClique {
        step: usize,
        u: usize,
        v: usize,
    },
}

impl fmt::Display for TraceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = |step: &Option<usize>| match step {
            Some(s) => alloc::format!("addition {s}"),
            None => alloc::string::String::from("base"),
        };
        match self {
            TraceError::InvalidK => write!(f, "k must be at least 1"),
            TraceError::BaseSize { expected, found } => {
                write!(f, "base has {found} vertices, expected {expected}")
            }
            TraceError::VertexOutOfRange { step, vertex, n } => {
                write!(f, "{}: vertex {vertex} outside 0..{n}", at(step))
            }
            TraceError::DuplicateVertex { step, vertex } => {
                write!(f, "{}: vertex {vertex} introduced twice", at(step))
            }
            TraceError::AttachSize {
                step,
                expected,
                found,
            } => {
                write!(
                    f,
                    "addition {step}: attach set has {found} vertices, expected {expected}"
                )
            }
            TraceError::AttachNotPresent { step, vertex } => {
                write!(f, "addition {step}: attach vertex {vertex} not yet present")
            }
            TraceError::AttachNotClique { step, u, v } => {
                write!(
                    f,
                    "addition {step}: attach vertices {u} and {v} are not adjacent"
                )
            }
        }
    }
}

impl core::error::Error for TraceError {}

/// Builds the graph a trace describes, checking every step.
pub fn build_ktree(trace: &KTreeTrace) -> Result<Graph, TraceError> {
    let k = trace.k;
    if k == 0 {
        return Err(TraceError::InvalidK);
    }
    if trace.base.len() != k + 1 {
        return Err(TraceError::BaseSize {
            expected: k + 1,
            found: trace.base.len(),
        });
    }
    let n = trace.vertex_count();
    let mut present = alloc::vec![false; n];
    let mut introduce = |step: Option<usize>, vertex: usize| {
        if vertex >= n {
            Err(TraceError::VertexOutOfRange { step, vertex, n })
        } else if core::mem::replace(&mut present[vertex], true) {
            Err(TraceError::DuplicateVertex { step, vertex })
        } else {
            Ok(())
        }
    };
    for &b in &trace.base {
        introduce(None, b)?;
    }

    let mut g = Graph::empty(n);
    for (i, &a) in trace.base.iter().enumerate() {
        for &b in &trace.base[i + 1..] {
            g.insert(a, b);
        }
    }

    let mut seen = present.clone();
    for (step, add) in trace.additions.iter().enumerate() {
        if add.attach.len() != k {
            return Err(TraceError::AttachSize {
                step,
                expected: k,
                found: add.attach.len(),
            });
        }
        for &a in &add.attach {
            if a >= n || !seen[a] {
                return Err(TraceError::AttachNotPresent { step, vertex: a });
            }
        }
        for (i, &a) in add.attach.iter().enumerate() {
            for &b in &add.attach[i + 1..] {
                if a == b || !g.has_edge(a, b) {
                    return Err(TraceError::AttachNotClique { step, u: a, v: b });
                }
            }
        }
        if add.vertex >= n {
            return Err(TraceError::VertexOutOfRange {
                step: Some(step),
                vertex: add.vertex,
                n,
            });
        }
        if seen[add.vertex] {
            return Err(TraceError::DuplicateVertex {
                step: Some(step),
                vertex: add.vertex,
            });
        }
        seen[add.vertex] = true;
        for &a in &add.attach {
            g.insert(add.vertex, a);
        }
    }
    Ok(g)
}

/// How far recognition got before giving up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecognitionFailure {
    InvalidK,
    TooFewVertices {
        n: usize,
        k: usize,
    },
    /// A k-tree on `n` vertices has exactly `k(k+1)/2 + k(n-k-1)` edges.
    EdgeCount {
        expected: usize,
        found: usize,
    },
    /// No simplicial vertex of degree k was left while `remaining` vertices
    /// were still present.
    NoSimplicialVertex {
        remaining: usize,
    },
    /// Elimination reached `k + 1` vertices that do not form a clique.
    BaseNotComplete {
        base: Vec<usize>,
    },
}

impl fmt::Display for RecognitionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecognitionFailure::InvalidK => write!(f, "k must be at least 1"),
            RecognitionFailure::TooFewVertices { n, k } => {
                write!(f, "{n} vertices is fewer than k + 1 = {}", k + 1)
            }
            RecognitionFailure::EdgeCount { expected, found } => {
                write!(f, "{found} edges, a k-tree of this size has {expected}")
            }
            RecognitionFailure::NoSimplicialVertex { remaining } => write!(
                f,
                "no simplicial vertex of degree k remains ({remaining} vertices left)"
            ),
            RecognitionFailure::BaseNotComplete { base } => {
                write!(f, "remaining vertices {base:?} do not form a clique")
            }
        }
    }
}

impl core::error::Error for RecognitionFailure {}

/// Decides whether `g` is a k-tree, producing a trace over `g`'s own ids.
///
/// Repeatedly deletes the smallest-id simplicial vertex of degree exactly
/// `k` until `k + 1` vertices remain, then checks that they form a clique.
/// The additions are the deletions in reverse order.
pub fn recognize_ktree(g: &Graph, k: usize) -> Result<KTreeTrace, RecognitionFailure> {
    if k == 0 {
        return Err(RecognitionFailure::InvalidK);
    }
    let n = g.vertex_count();
    if n < k + 1 {
        return Err(RecognitionFailure::TooFewVertices { n, k });
    }
    let expected = k * (k + 1) / 2 + k * (n - k - 1);
    if g.edge_count() != expected {
        return Err(RecognitionFailure::EdgeCount {
            expected,
            found: g.edge_count(),
        });
    }

    let mut work = g.clone();
    let eligible_at = |w: &Graph, v: usize| {
        let nbrs = &w.adjacency_of(v);
        nbrs.len() == k && w.is_clique(nbrs.iter())
    };
    let mut eligible: BTreeSet<usize> = (0..n).filter(|&v| eligible_at(&work, v)).collect();
    let mut alive = alloc::vec![true; n];
    let mut remaining = n;
    let mut eliminated = Vec::with_capacity(n - k - 1);

    while remaining > k + 1 {
        let Some(v) = eligible.pop_first() else {
            return Err(RecognitionFailure::NoSimplicialVertex { remaining });
        };
        let attach: Vec<usize> = work.adjacency_of(v).iter().copied().collect();
        work.isolate(v);
        alive[v] = false;
        remaining -= 1;
        for &w in &attach {
            if eligible_at(&work, w) {
                eligible.insert(w);
            } else {
                eligible.remove(&w);
            }
        }
        eliminated.push(Addition { vertex: v, attach });
    }

    let base: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    if !work.is_clique(base.iter()) {
        return Err(RecognitionFailure::BaseNotComplete { base });
    }
    eliminated.reverse();
    Ok(KTreeTrace {
        k,
        base,
        additions: eliminated,
    })
}

/// Vertices whose neighborhood induces a complete subgraph.
pub fn simplicial_vertices(g: &Graph) -> BTreeSet<usize> {
    (0..g.vertex_count())
        .filter(|&v| g.is_clique(g.adjacency_of(v).iter()))
        .collect()
}

/// All vertex sets of the given size that induce complete subgraphs, each
/// sorted, in lexicographic order. Size 0 yields the single empty set.
///
/// Cliques are grown one vertex at a time from the common higher-id
/// neighborhood, so the cost follows the number of cliques rather than the
/// number of vertex subsets.
pub fn enumerate_cliques(g: &Graph, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if size == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut current = Vec::with_capacity(size);
    for v in 0..g.vertex_count() {
        let cands: Vec<usize> = g.adjacency_of(v).range(v + 1..).copied().collect();
        current.push(v);
        grow(g, size, &mut current, &cands, &mut out);
        current.pop();
    }
    out
}

fn grow(
    g: &Graph,
    size: usize,
    current: &mut Vec<usize>,
    cands: &[usize],
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == size {
        out.push(current.clone());
        return;
    }
    if current.len() + cands.len() < size {
        return;
    }
    for (i, &c) in cands.iter().enumerate() {
        let next: Vec<usize> = cands[i + 1..]
            .iter()
            .copied()
            .filter(|&d| g.has_edge(c, d))
            .collect();
        current.push(c);
        grow(g, size, current, &next, out);
        current.pop();
    }
}

/// Number of `(k + 1)`-cliques through each edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCliqueIndex {
    pub k: usize,
    /// Every edge of the source graph, including those in no clique.
    pub counts: BTreeMap<Edge, usize>,
    pub clique_count: usize,
}

impl EdgeCliqueIndex {
    pub fn count(&self, e: Edge) -> Option<usize> {
        self.counts.get(&e).copied()
    }

    /// Edges lying in more than one `(k + 1)`-clique, in canonical order.
    pub fn shared_edges(&self) -> Vec<Edge> {
        self.counts
            .iter()
            .filter(|&(_, &c)| c > 1)
            .map(|(&e, _)| e)
            .collect()
    }

    /// Sum of all counts; equals `clique_count * C(k+1, 2)`.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

pub fn edge_clique_index(g: &Graph, k: usize) -> EdgeCliqueIndex {
    let mut counts: BTreeMap<Edge, usize> = g.edges().map(|e| (e, 0)).collect();
    let cliques = enumerate_cliques(g, k + 1);
    for c in &cliques {
        for (i, &a) in c.iter().enumerate() {
            for &b in &c[i + 1..] {
                // cliques are sorted, so (a, b) is already canonical
                if let Some(slot) = counts.get_mut(&Edge::new(a, b).expect("distinct")) {
                    *slot += 1;
                }
            }
        }
    }
    EdgeCliqueIndex {
        k,
        counts,
        clique_count: cliques.len(),
    }
}

impl Graph {
    pub(crate) fn adjacency_of(&self, v: usize) -> &BTreeSet<usize> {
        self.neighbors(v).expect("vertex in range")
    }
}
