//! Edge connectivity with cut certificates.
//!
//! Global edge connectivity is the minimum over `t != 0` of the unit-capacity
//! maximum flow between vertex 0 and `t`. Every reported value comes with a
//! [`CutCertificate`] taken from the residual graph of the last flow, so a
//! caller can check the claim without trusting the flow code.
//!
//! [`brute_force_edge_connectivity`] is an exhaustive oracle over edge
//! subsets and shares no code with the flow path.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::graph::{Edge, Graph, GraphError};

/// A vertex bipartition and the edges crossing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutCertificate {
    pub side: BTreeSet<usize>,
    pub cut_edges: Vec<Edge>,
}

impl CutCertificate {
    /// Computes the crossing edges of `side`.
    pub fn from_side(g: &Graph, side: BTreeSet<usize>) -> Self {
        let cut_edges = g
            .edges()
            .filter(|e| side.contains(&e.u()) != side.contains(&e.v()))
            .collect();
        CutCertificate { side, cut_edges }
    }

    pub fn size(&self) -> usize {
        self.cut_edges.len()
    }

    /// Checks the certificate against `g` from scratch: `side` is a proper
    /// nonempty subset, `cut_edges` are exactly the crossing edges, and
    /// deleting them leaves no path out of `side`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        if self.side.is_empty() || self.side.len() >= n || self.side.iter().any(|&v| v >= n) {
            return false;
        }
        let crossing: BTreeSet<Edge> = g
            .edges()
            .filter(|e| self.side.contains(&e.u()) != self.side.contains(&e.v()))
            .collect();
        let claimed: BTreeSet<Edge> = self.cut_edges.iter().copied().collect();
        if crossing != claimed || claimed.len() != self.cut_edges.len() {
            return false;
        }
        let mut rest = g.clone();
        for &e in &self.cut_edges {
            if rest.delete_edge(e).is_err() {
                return false;
            }
        }
        let start = *self.side.iter().next().expect("nonempty");
        let reach = rest.component_of(start);
        (0..n).all(|v| !reach[v] || self.side.contains(&v))
    }
}

/// Global edge connectivity of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConnectivityVerdict {
    /// Fewer than two vertices: no disconnecting set exists.
    Unbounded,
    Finite {
        lambda: usize,
        witness: CutCertificate,
    },
}

impl ConnectivityVerdict {
    /// `None` for [`ConnectivityVerdict::Unbounded`].
    pub fn lambda(&self) -> Option<usize> {
        match self {
            ConnectivityVerdict::Unbounded => None,
            ConnectivityVerdict::Finite { lambda, .. } => Some(*lambda),
        }
    }

    pub fn witness(&self) -> Option<&CutCertificate> {
        match self {
            ConnectivityVerdict::Unbounded => None,
            ConnectivityVerdict::Finite { witness, .. } => Some(witness),
        }
    }
}

/// Answer to "is this graph k-edge-connected?".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KEdgeConnectivity {
    Holds,
    /// A cut with fewer than k edges.
    Fails(CutCertificate),
}

impl KEdgeConnectivity {
    pub fn holds(&self) -> bool {
        matches!(self, KEdgeConnectivity::Holds)
    }
}

/// Outcome of the minimality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Minimality {
    Minimal,
    NotKEdgeConnected(CutCertificate),
    /// The graph is k-edge-connected but these edges can be deleted without
    /// losing that.
    InsensitiveEdges(Vec<Edge>),
}

impl Minimality {
    pub fn is_minimal(&self) -> bool {
        matches!(self, Minimality::Minimal)
    }

    pub fn insensitive_edges(&self) -> &[Edge] {
        match self {
            Minimality::InsensitiveEdges(es) => es,
            _ => &[],
        }
    }
}

/// Unit-capacity flow network with paired arcs: arc `i ^ 1` reverses arc `i`.
struct FlowNetwork {
    head: Vec<usize>,
    residual: Vec<u8>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut net = FlowNetwork {
            head: Vec::with_capacity(2 * g.edge_count()),
            residual: Vec::with_capacity(2 * g.edge_count()),
            out: alloc::vec![Vec::new(); n],
        };
        for e in g.edges() {
            let (a, b) = e.endpoints();
            net.out[a].push(net.head.len());
            net.head.push(b);
            net.residual.push(1);
            net.out[b].push(net.head.len());
            net.head.push(a);
            net.residual.push(1);
        }
        net
    }

    /// Pushes up to `limit` units from `s` to `t` along shortest augmenting
    /// paths. If fewer than `limit` units fit, the flow is maximum and the
    /// vertices still reachable from `s` form a minimum cut side.
    fn run(&mut self, s: usize, t: usize, limit: usize) -> (usize, Option<Vec<bool>>) {
        let n = self.out.len();
        let mut flow = 0;
        let mut via = alloc::vec![usize::MAX; n];
        loop {
            if flow >= limit {
                return (flow, None);
            }
            via.iter_mut().for_each(|x| *x = usize::MAX);
            let mut seen = alloc::vec![false; n];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                if x == t {
                    break;
                }
                for &arc in &self.out[x] {
                    let y = self.head[arc];
                    if self.residual[arc] > 0 && !seen[y] {
                        seen[y] = true;
                        via[y] = arc;
                        queue.push_back(y);
                    }
                }
            }
            if !seen[t] {
                return (flow, Some(seen));
            }
            let mut x = t;
            while x != s {
                let arc = via[x];
                self.residual[arc] -= 1;
                self.residual[arc ^ 1] += 1;
                x = self.head[arc ^ 1];
            }
            flow += 1;
        }
    }
}

fn side_from_mask(mask: &[bool]) -> BTreeSet<usize> {
    mask.iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(v, _)| v)
        .collect()
}

pub fn edge_connectivity(g: &Graph) -> ConnectivityVerdict {
    let n = g.vertex_count();
    if n < 2 {
        return ConnectivityVerdict::Unbounded;
    }
    let mut best: Option<(usize, Vec<bool>)> = None;
    for t in 1..n {
        let limit = best.as_ref().map_or(usize::MAX, |(b, _)| *b);
        let (flow, side) = FlowNetwork::new(g).run(0, t, limit);
        if let Some(side) = side {
            if flow < limit {
                best = Some((flow, side));
            }
        }
        if best.as_ref().is_some_and(|(b, _)| *b == 0) {
            break;
        }
    }
    let (lambda, mask) = best.expect("n >= 2 gives at least one flow");
    let witness = CutCertificate::from_side(g, side_from_mask(&mask));
    debug_assert_eq!(witness.size(), lambda);
    ConnectivityVerdict::Finite { lambda, witness }
}

/// Rejects graphs with fewer than two vertices.
pub fn is_k_edge_connected(g: &Graph, k: usize) -> Result<KEdgeConnectivity, GraphError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(GraphError::TooFewVertices { n, required: 2 });
    }
    for t in 1..n {
        let (flow, side) = FlowNetwork::new(g).run(0, t, k);
        if flow < k {
            let side = side.expect("flow below limit is maximum");
            return Ok(KEdgeConnectivity::Fails(CutCertificate::from_side(
                g,
                side_from_mask(&side),
            )));
        }
    }
    Ok(KEdgeConnectivity::Holds)
}

/// Maximum number of pairwise edge-disjoint paths between `u` and `v`.
pub fn local_edge_connectivity(g: &Graph, u: usize, v: usize) -> Result<usize, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(GraphError::SameVertex { vertex: u });
    }
    Ok(FlowNetwork::new(g).run(u, v, usize::MAX).0)
}

/// Whether `g` minus `e` is still k-edge-connected.
pub fn is_insensitive(g: &Graph, e: Edge, k: usize) -> Result<bool, GraphError> {
    let rest = g.remove_edge(e)?;
    Ok(is_k_edge_connected(&rest, k)?.holds())
}

pub fn is_minimally_k_edge_connected(g: &Graph, k: usize) -> Result<Minimality, GraphError> {
    if let KEdgeConnectivity::Fails(cut) = is_k_edge_connected(g, k)? {
        return Ok(Minimality::NotKEdgeConnected(cut));
    }
    let mut insensitive = Vec::new();
    for e in g.edges() {
        if is_insensitive(g, e, k)? {
            insensitive.push(e);
        }
    }
    if insensitive.is_empty() {
        Ok(Minimality::Minimal)
    } else {
        Ok(Minimality::InsensitiveEdges(insensitive))
    }
}

/// Largest edge count the exhaustive oracle accepts.
pub const BRUTE_FORCE_EDGE_LIMIT: usize = 16;

/// Size of the smallest disconnecting edge set, by trying every subset of
/// edges in increasing size.
pub fn brute_force_edge_connectivity(g: &Graph) -> Result<usize, GraphError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(GraphError::TooFewVertices { n, required: 2 });
    }
    let edges = g.to_edge_list();
    let m = edges.len();
    if m > BRUTE_FORCE_EDGE_LIMIT {
        return Err(GraphError::OracleTooLarge {
            edges: m,
            limit: BRUTE_FORCE_EDGE_LIMIT,
        });
    }
    for size in 0..=m {
        let mut found = false;
        for_each_subset(m, size, |mask| {
            if !connected_without(n, &edges, mask) {
                found = true;
            }
            found
        });
        if found {
            return Ok(size);
        }
    }
    unreachable!("removing every edge disconnects a graph on two or more vertices")
}

/// Calls `f` on each `size`-subset of `0..m` as a bitmask until it returns
/// true.
fn for_each_subset(m: usize, size: usize, mut f: impl FnMut(u32) -> bool) {
    if size == 0 {
        f(0);
        return;
    }
    let end = 1u64 << m;
    let mut mask: u64 = (1u64 << size) - 1;
    while mask < end {
        if f(mask as u32) {
            return;
        }
        // next mask with the same popcount
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
}

fn connected_without(n: usize, edges: &[Edge], removed: u32) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for (i, e) in edges.iter().enumerate() {
        if removed & (1 << i) != 0 {
            continue;
        }
        let (a, b) = (find(&mut parent, e.u()), find(&mut parent, e.v()));
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    components == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_pairs(n, &pairs).unwrap()
    }

    fn two_tree_4() -> Graph {
        Graph::from_pairs(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap()
    }

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    fn k33() -> Graph {
        let mut pairs = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                pairs.push((a, b));
            }
        }
        Graph::from_pairs(6, &pairs).unwrap()
    }

    #[test]
    fn global_connectivity_examples() {
        let v = edge_connectivity(&cycle(5));
        assert_eq!(v.lambda(), Some(2));
        assert!(v.witness().unwrap().is_valid_for(&cycle(5)));
        let k5 = Graph::complete(5);
        let v = edge_connectivity(&k5);
        assert_eq!(v.lambda(), Some(4));
        assert!(v.witness().unwrap().is_valid_for(&k5));
    }

    #[test]
    fn single_vertex_is_unbounded() {
        assert_eq!(
            edge_connectivity(&Graph::empty(1)),
            ConnectivityVerdict::Unbounded
        );
        assert_eq!(
            is_k_edge_connected(&Graph::empty(1), 1),
            Err(GraphError::TooFewVertices { n: 1, required: 2 })
        );
    }

    #[test]
    fn disconnected_graph_witness_is_a_component() {
        let g = Graph::from_pairs(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let v = edge_connectivity(&g);
        assert_eq!(v.lambda(), Some(0));
        let w = v.witness().unwrap();
        assert_eq!(w.side, BTreeSet::from([0, 1, 2]));
        assert!(w.cut_edges.is_empty());
        assert!(w.is_valid_for(&g));
    }

    #[test]
    fn k_edge_connected_examples() {
        assert!(is_k_edge_connected(&cycle(4), 2).unwrap().holds());
        match is_k_edge_connected(&cycle(4), 3).unwrap() {
            KEdgeConnectivity::Fails(cut) => {
                assert_eq!(cut.size(), 2);
                assert!(cut.is_valid_for(&cycle(4)));
            }
            KEdgeConnectivity::Holds => panic!("C_4 is not 3-edge-connected"),
        }
        let c4 = two_tree_4().remove_edge(e(0, 1)).unwrap();
        assert!(is_k_edge_connected(&c4, 2).unwrap().holds());
    }

    #[test]
    fn local_connectivity_examples() {
        let k4 = Graph::complete(4);
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    assert_eq!(local_edge_connectivity(&k4, u, v), Ok(3));
                }
            }
        }
        let path = Graph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(local_edge_connectivity(&path, 0, 3), Ok(1));
        assert_eq!(local_edge_connectivity(&two_tree_4(), 0, 1), Ok(3));
        assert_eq!(
            local_edge_connectivity(&path, 2, 2),
            Err(GraphError::SameVertex { vertex: 2 })
        );
    }

    #[test]
    fn insensitive_examples() {
        assert_eq!(is_insensitive(&two_tree_4(), e(0, 1), 2), Ok(true));
        for edge in cycle(4).edges() {
            assert_eq!(is_insensitive(&cycle(4), edge, 2), Ok(false));
        }
        assert_eq!(is_insensitive(&two_tree_4(), e(0, 2), 2), Ok(false));
        assert_eq!(
            is_insensitive(&cycle(4), e(0, 2), 2),
            Err(GraphError::MissingEdge { edge: e(0, 2) })
        );
    }

    #[test]
    fn minimality_examples() {
        for n in 3..9 {
            assert_eq!(
                is_minimally_k_edge_connected(&cycle(n), 2),
                Ok(Minimality::Minimal)
            );
        }
        assert_eq!(
            is_minimally_k_edge_connected(&two_tree_4(), 2),
            Ok(Minimality::InsensitiveEdges(alloc::vec![e(0, 1)]))
        );
        assert_eq!(
            is_minimally_k_edge_connected(&k33(), 3),
            Ok(Minimality::Minimal)
        );
        let path = Graph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        match is_minimally_k_edge_connected(&path, 2).unwrap() {
            Minimality::NotKEdgeConnected(cut) => assert_eq!(cut.size(), 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_edge_connectivity(&Graph::complete(3)), Ok(2));
        let path = Graph::from_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(brute_force_edge_connectivity(&path), Ok(1));
        let chorded = Graph::from_pairs(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        assert_eq!(brute_force_edge_connectivity(&chorded), Ok(2));
        assert_eq!(brute_force_edge_connectivity(&Graph::empty(3)), Ok(0));
    }

    #[test]
    fn brute_force_guard() {
        let k7 = Graph::complete(7);
        assert_eq!(
            brute_force_edge_connectivity(&k7),
            Err(GraphError::OracleTooLarge {
                edges: 21,
                limit: 16
            })
        );
        assert!(brute_force_edge_connectivity(&Graph::empty(1)).is_err());
    }

    #[test]
    fn subset_enumeration_counts() {
        let mut count = 0;
        for_each_subset(6, 3, |mask| {
            assert_eq!(mask.count_ones(), 3);
            count += 1;
            false
        });
        assert_eq!(count, 20);
    }
}
