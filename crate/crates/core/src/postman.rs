//! Eulerian walks and shortest edge-covering walks (route inspection).

use mwmatching::Matching;
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::walk::Walk;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PostmanError {
    #[error("graph has no Eulerian circuit or trail")]
    NotEulerian,
    #[error("graph has no edges to cover")]
    EmptyEdgeSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerClass {
    /// No odd-degree vertices.
    Circuit,
    /// Exactly two odd-degree vertices.
    Trail,
    None,
}

/// Whether the covering walk must return to its start.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverMode {
    Closed,
    FreeEndpoints,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringWalkResult {
    pub walk: Walk,
    /// Number of steps, `walk.len() - 1`.
    pub length_edges: usize,
    /// Extra traversals beyond the first, one entry per repeat, as `(u, v)`
    /// with `u < v`.
    pub duplicated: Vec<(Vertex, Vertex)>,
}

pub fn euler_class(g: &Graph) -> EulerClass {
    match g.odd_vertices().len() {
        0 => EulerClass::Circuit,
        2 => EulerClass::Trail,
        _ => EulerClass::None,
    }
}

/// Eulerian circuit (from vertex 0) or trail (from the lower odd vertex).
/// Ties go to the lowest-indexed neighbor.
pub fn eulerian_walk(g: &Graph) -> Result<Walk, PostmanError> {
    let start = match euler_class(g) {
        EulerClass::Circuit => 0,
        EulerClass::Trail => g.odd_vertices()[0],
        EulerClass::None => return Err(PostmanError::NotEulerian),
    };
    let seq = euler_tour(g.order(), g.edges(), start);
    Ok(Walk::new(seq).expect("tour is non-empty"))
}

/// Shortest walk traversing every edge at least once.
///
/// Odd-degree vertices are paired by an exact minimum-weight perfect
/// matching on shortest-path distances; in free-endpoint mode two odd
/// vertices stay unpaired and become the walk's ends. Each matched pair's
/// shortest path is duplicated and an Euler tour of the result is taken.
pub fn shortest_covering_walk(g: &Graph, mode: CoverMode) -> Result<CoveringWalkResult, PostmanError> {
    if g.size() == 0 {
        return Err(PostmanError::EmptyEdgeSet);
    }
    let odd = g.odd_vertices();
    let pairs = match (mode, odd.len()) {
        (_, 0) | (CoverMode::FreeEndpoints, 2) => Vec::new(),
        (CoverMode::Closed, _) => min_weight_pairing(g, &odd, false),
        (CoverMode::FreeEndpoints, _) => min_weight_pairing(g, &odd, true),
    };

    let mut duplicated = Vec::new();
    for (a, b) in pairs {
        duplicated.extend(shortest_path_edges(g, a, b));
    }
    duplicated.sort_unstable();

    let mut edges = g.edges().to_vec();
    edges.extend_from_slice(&duplicated);
    let mut degree = vec![0usize; g.order()];
    for &(u, v) in &edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    let start = match mode {
        CoverMode::Closed => 0,
        CoverMode::FreeEndpoints => degree.iter().position(|d| d % 2 == 1).unwrap_or(0),
    };
    let seq = euler_tour(g.order(), &edges, start);
    debug_assert_eq!(seq.len(), edges.len() + 1);
    let length_edges = seq.len() - 1;
    Ok(CoveringWalkResult {
        walk: Walk::new(seq).expect("tour is non-empty"),
        length_edges,
        duplicated,
    })
}

/// Minimum total distance pairing of `odd` (even count). With `leave_two`,
/// exactly two vertices are left out: two dummy vertices joined to every odd
/// vertex at zero cost absorb them.
fn min_weight_pairing(g: &Graph, odd: &[Vertex], leave_two: bool) -> Vec<(Vertex, Vertex)> {
    let k = odd.len();
    let big = g.diameter() as i32 + 1;
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            edges.push((i, j, big - g.dist(odd[i], odd[j]) as i32));
        }
    }
    if leave_two {
        for i in 0..k {
            edges.push((i, k, big));
            edges.push((i, k + 1, big));
        }
    }
    let mate = Matching::new(edges).max_cardinality().solve();
    let mut pairs = Vec::new();
    for i in 0..k {
        let j = mate[i];
        assert!(j != mwmatching::SENTINEL, "complete graph has a perfect matching");
        if i < j && j < k {
            pairs.push((odd[i], odd[j]));
        }
    }
    pairs
}

/// Edges of the shortest `a`-`b` path that always steps to the
/// lowest-indexed neighbor closer to `b`.
fn shortest_path_edges(g: &Graph, a: Vertex, b: Vertex) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    let mut cur = a;
    while cur != b {
        let next = *g
            .neighbors(cur)
            .iter()
            .find(|&&x| g.dist(x, b) + 1 == g.dist(cur, b))
            .expect("connected graph");
        out.push((cur.min(next), cur.max(next)));
        cur = next;
    }
    out
}

/// Hierholzer's algorithm on a multigraph given by its edge list. Every
/// edge is used once; the caller guarantees the degree conditions and that
/// all edges are reachable from `start`. Adjacent edges are tried in order of
/// the neighbor's index, then edge position.
pub(crate) fn euler_tour(nodes: usize, edges: &[(usize, usize)], start: usize) -> Vec<usize> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nodes];
    for (id, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, id));
        adj[v].push((u, id));
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut used = vec![false; edges.len()];
    let mut next = vec![0usize; nodes];
    let mut stack = vec![start];
    let mut tour = Vec::with_capacity(edges.len() + 1);
    while let Some(&v) = stack.last() {
        while next[v] < adj[v].len() && used[adj[v][next[v]].1] {
            next[v] += 1;
        }
        match adj[v].get(next[v]) {
            Some(&(w, id)) => {
                used[id] = true;
                stack.push(w);
            }
            None => {
                tour.push(v);
                stack.pop();
            }
        }
    }
    tour.reverse();
    tour
}

/// Length of a shortest edge-covering walk in `K_n` (free endpoints):
/// `(n² - n) / 2` for odd `n`, `(n² - 2) / 2` for even `n`.
pub fn complete_graph_cover_length(n: usize) -> usize {
    if n % 2 == 1 {
        (n * n - n) / 2
    } else {
        (n * n - 2) / 2
    }
}
