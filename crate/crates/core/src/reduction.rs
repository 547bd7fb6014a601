//! Reducing k-trees to minimally k-edge-connected graphs.
//!
//! [`reduce_two_tree`] deletes, in one batch, every edge that lies in more
//! than one triangle of a 2-tree.
//!
//! [`reduce_k_tree`] works for any `k >= 2`:
//!
//! 1. order the vertices by (initial degree, id), ascending;
//! 2. walk pairs `(s, t)`, `s < t`, of that order restricted to vertices of
//!    initial degree at least `k + 1`, and list the pairs that are edges;
//! 3. walk the list and delete an edge when both endpoints *currently* have
//!    degree at least `k + 1`.
//!
//! In [`Mode::Verified`] step 3 additionally refuses any deletion that would
//! leave the graph short of k-edge-connectivity and records the cut that
//! proves it.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::connectivity::{
    is_k_edge_connected, is_minimally_k_edge_connected, CutCertificate, KEdgeConnectivity,
    Minimality,
};
use crate::graph::{Edge, Graph, GraphError};
use crate::ktree::{edge_clique_index, recognize_ktree, RecognitionFailure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Deletes every listed edge whose endpoints still have high degree.
    PaperFaithful,
    /// Also checks that each deletion keeps the graph k-edge-connected.
    Verified,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::PaperFaithful => "paper-faithful",
            Mode::Verified => "verified",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl core::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper-faithful" => Ok(Mode::PaperFaithful),
            "verified" => Ok(Mode::Verified),
            other => Err(alloc::format!("unknown mode `{other}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Triangle multiplicity, 2-trees only.
    Triangle,
    /// Endpoint degrees, any k >= 2.
    Degree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SkipReason {
    /// An endpoint had dropped below degree k + 1 by the time the edge came
    /// up. Degrees are as of that moment.
    DegreeDropped { degree_u: usize, degree_v: usize },
    /// Verified mode only: deleting the edge would open this cut.
    WouldDisconnect(CutCertificate),
}

/// An edge the paper-faithful and verified runs treat differently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deviation {
    pub edge: Edge,
    /// The mode that deleted the edge.
    pub removed_by: Mode,
    /// When the paper-faithful run deleted the edge and was left short of
    /// k-edge-connectivity right after, the cut that shows it.
    pub certificate: Option<CutCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub k: usize,
    pub algorithm: Algorithm,
    pub mode: Mode,
    pub input_n: usize,
    pub input_m: usize,
    /// The deleted set F, in deletion order.
    pub removed: Vec<Edge>,
    pub skipped: Vec<(Edge, SkipReason)>,
    pub final_m: usize,
    /// Set by [`ReductionReport::record_minimality`].
    pub final_minimal: Option<bool>,
    /// Re-checked at the end of every verified run.
    pub final_k_edge_connected: Option<bool>,
    /// Populated in verified mode only.
    pub deviations: Vec<Deviation>,
    pub notes: Vec<String>,
}

impl ReductionReport {
    fn new(g: &Graph, k: usize, algorithm: Algorithm, mode: Mode) -> Self {
        ReductionReport {
            k,
            algorithm,
            mode,
            input_n: g.vertex_count(),
            input_m: g.edge_count(),
            removed: Vec::new(),
            skipped: Vec::new(),
            final_m: g.edge_count(),
            final_minimal: None,
            final_k_edge_connected: None,
            deviations: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Runs the minimality oracle on `output` and stores the verdict.
    pub fn record_minimality(&mut self, output: &Graph) -> Result<Minimality, GraphError> {
        let verdict = is_minimally_k_edge_connected(output, self.k)?;
        self.final_minimal = Some(verdict.is_minimal());
        Ok(verdict)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionError {
    InvalidK {
        k: usize,
    },
    NotKTree {
        k: usize,
        failure: RecognitionFailure,
    },
    Graph(GraphError),
}

impl fmt::Display for ReductionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionError::InvalidK { k } => write!(f, "reduction needs k >= 2, got {k}"),
            ReductionError::NotKTree { k, failure } => {
                write!(f, "input is not a {k}-tree: {failure}")
            }
            ReductionError::Graph(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for ReductionError {}

impl From<GraphError> for ReductionError {
    fn from(e: GraphError) -> Self {
        ReductionError::Graph(e)
    }
}

/// `1 <= f_size <= n - 3`.
pub fn check_f_bounds(n: usize, f_size: usize) -> bool {
    n >= 4 && (1..=n - 3).contains(&f_size)
}

/// Deletes every edge of a 2-tree that lies in more than one triangle.
///
/// Triangle counts are taken once on the input. Inputs with fewer than four
/// vertices come back unchanged with a note in the report.
pub fn reduce_two_tree(g: &Graph) -> Result<(Graph, ReductionReport), ReductionError> {
    recognize_ktree(g, 2).map_err(|failure| ReductionError::NotKTree { k: 2, failure })?;
    let mut report = ReductionReport::new(g, 2, Algorithm::Triangle, Mode::PaperFaithful);
    if g.vertex_count() < 4 {
        report.notes.push(small_input_note(g.vertex_count(), 2));
        return Ok((g.clone(), report));
    }
    let shared = edge_clique_index(g, 2).shared_edges();
    let mut out = g.clone();
    for &e in &shared {
        out.delete_edge(e)?;
    }
    report.removed = shared;
    report.final_m = out.edge_count();
    Ok((out, report))
}

/// Degree-based reduction with the default tie-break by vertex id.
pub fn reduce_k_tree(
    g: &Graph,
    k: usize,
    mode: Mode,
) -> Result<(Graph, ReductionReport), ReductionError> {
    let rank: Vec<usize> = (0..g.vertex_count()).collect();
    reduce_k_tree_ranked(g, k, mode, &rank)
}

/// Degree-based reduction where vertices of equal initial degree are ordered
/// by `rank[v]` instead of by id. `rank` must be a permutation of `0..n`.
pub fn reduce_k_tree_ranked(
    g: &Graph,
    k: usize,
    mode: Mode,
    rank: &[usize],
) -> Result<(Graph, ReductionReport), ReductionError> {
    if k < 2 {
        return Err(ReductionError::InvalidK { k });
    }
    assert_eq!(rank.len(), g.vertex_count(), "rank must cover every vertex");
    recognize_ktree(g, k).map_err(|failure| ReductionError::NotKTree { k, failure })?;
    let mut report = ReductionReport::new(g, k, Algorithm::Degree, mode);
    if g.vertex_count() < k + 2 {
        report.notes.push(small_input_note(g.vertex_count(), k));
        if mode == Mode::Verified {
            report.final_k_edge_connected = Some(is_k_edge_connected(g, k)?.holds());
        }
        return Ok((g.clone(), report));
    }

    let list = high_degree_edges(g, k, rank);
    let pass = degree_pass(g, k, &list, mode == Mode::Verified)?;

    if mode == Mode::Verified {
        report.final_k_edge_connected = Some(is_k_edge_connected(&pass.graph, k)?.holds());
        let faithful = degree_pass(g, k, &list, false)?;
        report.deviations = deviations(g, k, &faithful.removed, &pass.removed)?;
    }
    report.removed = pass.removed;
    report.skipped = pass.skipped;
    report.final_m = pass.graph.edge_count();
    Ok((pass.graph, report))
}

fn small_input_note(n: usize, k: usize) -> String {
    alloc::format!("n={n} is below k+2={}; input returned unchanged", k + 2)
}

/// Steps 1 and 2: edges between vertices of initial degree >= k + 1, in the
/// nested-loop order over the degree-sorted vertex sequence.
fn high_degree_edges(g: &Graph, k: usize, rank: &[usize]) -> Vec<Edge> {
    let degrees = g.degrees();
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (degrees[v], rank[v]));
    let first_high = order.partition_point(|&v| degrees[v] < k + 1);
    let high = &order[first_high..];

    let mut list = Vec::new();
    for (s, &a) in high.iter().enumerate() {
        for &b in &high[s + 1..] {
            if g.has_edge(a, b) {
                list.push(Edge::new(a, b).expect("distinct vertices"));
            }
        }
    }
    list
}

struct Pass {
    graph: Graph,
    removed: Vec<Edge>,
    skipped: Vec<(Edge, SkipReason)>,
}

/// Step 3.
fn degree_pass(g: &Graph, k: usize, list: &[Edge], verify: bool) -> Result<Pass, GraphError> {
    let mut graph = g.clone();
    let mut removed = Vec::new();
    let mut skipped = Vec::new();
    for &e in list {
        let (du, dv) = (graph.degree(e.u())?, graph.degree(e.v())?);
        if du < k + 1 || dv < k + 1 {
            skipped.push((
                e,
                SkipReason::DegreeDropped {
                    degree_u: du,
                    degree_v: dv,
                },
            ));
            continue;
        }
        graph.delete_edge(e)?;
        if verify {
            if let KEdgeConnectivity::Fails(cut) = is_k_edge_connected(&graph, k)? {
                graph.insert(e.u(), e.v());
                skipped.push((e, SkipReason::WouldDisconnect(cut)));
                continue;
            }
        }
        removed.push(e);
    }
    Ok(Pass {
        graph,
        removed,
        skipped,
    })
}

fn deviations(
    g: &Graph,
    k: usize,
    faithful: &[Edge],
    verified: &[Edge],
) -> Result<Vec<Deviation>, GraphError> {
    let mut out = Vec::new();
    // Replay the faithful deletions so each deviation can be checked against
    // the graph as it stood right after that deletion.
    let mut state = g.clone();
    for &e in faithful {
        state.delete_edge(e)?;
        if !verified.contains(&e) {
            let certificate = match is_k_edge_connected(&state, k)? {
                KEdgeConnectivity::Fails(cut) => Some(cut),
                KEdgeConnectivity::Holds => None,
            };
            out.push(Deviation {
                edge: e,
                removed_by: Mode::PaperFaithful,
                certificate,
            });
        }
    }
    for &e in verified {
        if !faithful.contains(&e) {
            out.push(Deviation {
                edge: e,
                removed_by: Mode::Verified,
                certificate: None,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{book_two_tree, path_two_tree};
    use crate::ktree::{build_ktree, Addition, KTreeTrace};
    use alloc::vec;

    fn e(a: usize, b: usize) -> Edge {
        Edge::new(a, b).unwrap()
    }

    fn two_tree_4() -> Graph {
        Graph::from_pairs(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap()
    }

    fn cycle_on(order: &[usize]) -> Graph {
        let n = order.len();
        let pairs: Vec<_> = (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
        Graph::from_pairs(n, &pairs).unwrap()
    }

    fn three_tree_6() -> Graph {
        Graph::from_pairs(
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 4),
                (1, 4),
                (2, 4),
                (0, 5),
                (1, 5),
                (2, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn triangle_reduction_examples() {
        let (out, report) = reduce_two_tree(&two_tree_4()).unwrap();
        assert_eq!(out, cycle_on(&[0, 2, 1, 3]));
        assert_eq!(report.removed, [e(0, 1)]);

        let book = build_ktree(&book_two_tree(6).unwrap()).unwrap();
        let (out, report) = reduce_two_tree(&book).unwrap();
        assert_eq!(report.removed, [e(0, 1)]);
        let mut k24 = Vec::new();
        for a in 0..2 {
            for b in 2..6 {
                k24.push((a, b));
            }
        }
        assert_eq!(out, Graph::from_pairs(6, &k24).unwrap());

        let path = build_ktree(&path_two_tree(5).unwrap()).unwrap();
        let (out, report) = reduce_two_tree(&path).unwrap();
        assert_eq!(report.removed, [e(1, 2), e(2, 3)]);
        assert_eq!(out, cycle_on(&[0, 1, 3, 4, 2]));
    }

    #[test]
    fn triangle_reduction_preconditions() {
        let c4 = cycle_on(&[0, 1, 2, 3]);
        assert!(matches!(
            reduce_two_tree(&c4),
            Err(ReductionError::NotKTree { k: 2, .. })
        ));

        let (out, report) = reduce_two_tree(&Graph::complete(3)).unwrap();
        assert_eq!(out, Graph::complete(3));
        assert!(report.removed.is_empty());
        assert_eq!(report.notes.len(), 1);
    }

    #[test]
    fn degree_reduction_on_two_tree_4() {
        for mode in [Mode::PaperFaithful, Mode::Verified] {
            let (out, report) = reduce_k_tree(&two_tree_4(), 2, mode).unwrap();
            assert_eq!(report.removed, [e(0, 1)]);
            assert_eq!(out, cycle_on(&[0, 2, 1, 3]));
            assert!(report.deviations.is_empty());
        }
    }

    #[test]
    fn degree_reduction_three_tree_gives_k33() {
        for mode in [Mode::PaperFaithful, Mode::Verified] {
            let (out, mut report) = reduce_k_tree(&three_tree_6(), 3, mode).unwrap();
            assert_eq!(report.removed, [e(0, 1), e(0, 2), e(1, 2)]);
            assert!(report.skipped.is_empty());
            let mut k33 = Vec::new();
            for a in 0..3 {
                for b in 3..6 {
                    k33.push((a, b));
                }
            }
            assert_eq!(out, Graph::from_pairs(6, &k33).unwrap());
            assert!(report.record_minimality(&out).unwrap().is_minimal());
            assert_eq!(report.final_minimal, Some(true));
            assert_eq!(report.final_m + report.removed.len(), report.input_m);
        }
    }

    #[test]
    fn degree_reduction_below_threshold_is_identity() {
        for k in 2..5 {
            let kk = Graph::complete(k + 1);
            let (out, report) = reduce_k_tree(&kk, k, Mode::PaperFaithful).unwrap();
            assert_eq!(out, kk);
            assert!(report.removed.is_empty());
        }
    }

    #[test]
    fn degree_reduction_rejects_bad_input() {
        assert_eq!(
            reduce_k_tree(&two_tree_4(), 1, Mode::PaperFaithful).unwrap_err(),
            ReductionError::InvalidK { k: 1 }
        );
        assert!(matches!(
            reduce_k_tree(&two_tree_4(), 3, Mode::Verified),
            Err(ReductionError::NotKTree { k: 3, .. })
        ));
    }

    #[test]
    fn skipped_edges_carry_degrees() {
        // Book with three pages: (0,1) in every triangle. After it goes, no
        // other listed edge remains high on both ends.
        let book = build_ktree(&book_two_tree(5).unwrap()).unwrap();
        let (_, report) = reduce_k_tree(&book, 2, Mode::PaperFaithful).unwrap();
        assert_eq!(report.removed, [e(0, 1)]);
        assert!(report.skipped.is_empty());

        // Path 2-tree on 6: initial degrees 2,3,4,4,3,2.
        let path = build_ktree(&path_two_tree(6).unwrap()).unwrap();
        let (_, report) = reduce_k_tree(&path, 2, Mode::PaperFaithful).unwrap();
        // order (deg, id): 0,5,1,4,2,3; high part 1,4,2,3
        // list: (1,2),(1,3),(2,4),(3,4),(2,3)
        assert_eq!(report.removed, [e(1, 2), e(2, 4)]);
        assert_eq!(
            report.skipped,
            vec![
                (
                    e(1, 3),
                    SkipReason::DegreeDropped {
                        degree_u: 2,
                        degree_v: 4
                    }
                ),
                (
                    e(3, 4),
                    SkipReason::DegreeDropped {
                        degree_u: 4,
                        degree_v: 2
                    }
                ),
                (
                    e(2, 3),
                    SkipReason::DegreeDropped {
                        degree_u: 2,
                        degree_v: 4
                    }
                ),
            ]
        );
    }

    #[test]
    fn triangle_reduction_can_leave_an_insensitive_edge() {
        // Triangle 012 with two pages on (0,2) and two on (0,1). Both shared
        // edges go, and what is left is two 4-cycles through vertex 0 plus
        // the edge (1,2), which is not needed for 2-edge-connectivity.
        let trace = KTreeTrace::new(
            2,
            vec![0, 1, 2],
            vec![
                Addition {
                    vertex: 3,
                    attach: vec![0, 2],
                },
                Addition {
                    vertex: 4,
                    attach: vec![0, 2],
                },
                Addition {
                    vertex: 5,
                    attach: vec![0, 1],
                },
                Addition {
                    vertex: 6,
                    attach: vec![0, 1],
                },
            ],
        );
        let g = build_ktree(&trace).unwrap();
        let (out, report) = reduce_two_tree(&g).unwrap();
        assert_eq!(report.removed, [e(0, 1), e(0, 2)]);
        assert_eq!(
            is_minimally_k_edge_connected(&out, 2),
            Ok(Minimality::InsensitiveEdges(vec![e(1, 2)]))
        );
    }

    #[test]
    fn paper_faithful_degree_reduction_can_disconnect() {
        let trace = KTreeTrace::new(
            2,
            vec![0, 1, 2],
            vec![
                Addition {
                    vertex: 3,
                    attach: vec![1, 2],
                },
                Addition {
                    vertex: 4,
                    attach: vec![2, 3],
                },
                Addition {
                    vertex: 5,
                    attach: vec![3, 4],
                },
                Addition {
                    vertex: 6,
                    attach: vec![1, 2],
                },
                Addition {
                    vertex: 7,
                    attach: vec![3, 5],
                },
            ],
        );
        let g = build_ktree(&trace).unwrap();

        let (out, report) = reduce_k_tree(&g, 2, Mode::PaperFaithful).unwrap();
        assert_eq!(report.removed, [e(4, 5), e(1, 2), e(1, 3), e(2, 3)]);
        match is_k_edge_connected(&out, 2).unwrap() {
            KEdgeConnectivity::Fails(cut) => assert_eq!(cut.cut_edges, [e(2, 4)]),
            KEdgeConnectivity::Holds => panic!("expected a bridge"),
        }

        let (out, mut report) = reduce_k_tree(&g, 2, Mode::Verified).unwrap();
        assert_eq!(report.removed, [e(4, 5), e(1, 2), e(1, 3)]);
        assert!(matches!(
            report.skipped.last(),
            Some((edge, SkipReason::WouldDisconnect(cut))) if *edge == e(2, 3) && cut.cut_edges == [e(2, 4)]
        ));
        assert_eq!(report.deviations.len(), 1);
        let dev = &report.deviations[0];
        assert_eq!((dev.edge, dev.removed_by), (e(2, 3), Mode::PaperFaithful));
        assert!(dev
            .certificate
            .as_ref()
            .unwrap()
            .is_valid_for(&out.remove_edge(e(2, 3)).unwrap()));
        assert!(report.record_minimality(&out).unwrap().is_minimal());
    }

    #[test]
    fn f_bounds() {
        assert!(check_f_bounds(4, 1));
        assert!(check_f_bounds(10, 7));
        assert!(!check_f_bounds(10, 0));
        assert!(!check_f_bounds(10, 8));
        assert!(!check_f_bounds(3, 0));
    }
}
