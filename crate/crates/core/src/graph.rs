//! Simple connected graphs with precomputed hop distances, plus the small
//! families, parsers and constructions the span engines are exercised on.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Vertex index, `0..n`.
pub type Vertex = usize;

/// Largest supported order. Neighbor sets are stored as `u64` masks.
pub const MAX_ORDER: usize = 64;

/// Largest order accepted by the graph6 codec (single-byte size prefix).
pub const MAX_GRAPH6_ORDER: usize = 62;

/// Largest order for which [`Graph::canonical_code`] is defined.
pub const MAX_CANONICAL_ORDER: usize = 11;

const NO_EDGE: u32 = u32::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph is disconnected")]
    DisconnectedInput,
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("graph must have at least one vertex")]
    EmptyVertexSet,
    #[error("order {0} exceeds the supported maximum")]
    TooLarge(usize),
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("edge {0} {1} is not present")]
    EdgeNotPresent(Vertex, Vertex),
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
}

/// A finite, simple, connected, undirected graph.
///
/// Immutable after construction. Edges are stored as sorted `(u, v)` pairs
/// with `u < v`; the position of a pair in [`Graph::edges`] is its edge id.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    nbr_mask: Vec<u64>,
    edge_ids: Vec<u32>,
    dist: Vec<u32>,
    radius: u32,
}

impl Graph {
    /// Builds a graph from an edge list, validating simplicity and
    /// connectivity. Edge endpoints may be given in either order.
    pub fn new(n: usize, edge_list: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let mut edge_ids = vec![NO_EDGE; n * n];
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::IndexOutOfRange { index: x, order: n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if edge_ids[u * n + v] != NO_EDGE {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            edge_ids[u * n + v] = 0;
            edges.push((u, v));
        }
        edges.sort_unstable();
        for (id, &(u, v)) in edges.iter().enumerate() {
            edge_ids[u * n + v] = id as u32;
            edge_ids[v * n + u] = id as u32;
        }

        let mut adj = vec![Vec::new(); n];
        let mut nbr_mask = vec![0u64; n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
            nbr_mask[u] |= 1 << v;
            nbr_mask[v] |= 1 << u;
        }
        for list in &mut adj {
            list.sort_unstable();
        }

        let mut dist = vec![u32::MAX; n * n];
        for s in 0..n {
            bfs_fill(&adj, s, &mut dist[s * n..(s + 1) * n]);
        }
        if dist.contains(&u32::MAX) {
            return Err(GraphError::DisconnectedInput);
        }
        let radius = (0..n)
            .map(|u| *dist[u * n..(u + 1) * n].iter().max().unwrap())
            .min()
            .unwrap();

        Ok(Graph {
            n,
            edges,
            adj,
            nbr_mask,
            edge_ids,
            dist,
            radius,
        })
    }

    /// Parses the plain edge-list format: the first non-comment line holds
    /// the order `n`, every following non-comment line holds `u v` with
    /// `0 <= u < v < n`. Lines starting with `#` and blank lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut order: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim_end_matches('\r').trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse = |tok: &str| {
                tok.parse::<usize>().map_err(|_| GraphError::Parse {
                    line: line_no,
                    msg: format!("expected a non-negative integer, found {tok:?}"),
                })
            };
            let toks: Vec<&str> = line.split_whitespace().collect();
            match (order, toks.as_slice()) {
                (None, [n]) => order = Some(parse(n)?),
                (None, _) => {
                    return Err(GraphError::Parse {
                        line: line_no,
                        msg: "expected the vertex count on the first line".into(),
                    })
                }
                (Some(n), [a, b]) => {
                    let (u, v) = (parse(a)?, parse(b)?);
                    for x in [u, v] {
                        if x >= n {
                            return Err(GraphError::IndexOutOfRange { index: x, order: n });
                        }
                    }
                    edges.push((u, v));
                }
                (Some(_), _) => {
                    return Err(GraphError::Parse {
                        line: line_no,
                        msg: "expected an edge \"u v\"".into(),
                    })
                }
            }
        }
        let n = order.ok_or(GraphError::Parse {
            line: 0,
            msg: "missing vertex count".into(),
        })?;
        Graph::new(n, &edges)
    }

    /// Renders the graph in the edge-list format accepted by
    /// [`Graph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Decodes a graph6 string (orders up to 62).
    pub fn from_graph6(s: &str) -> Result<Self, GraphError> {
        let bytes = s.trim().as_bytes();
        let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
        let (&first, rest) = bytes
            .split_first()
            .ok_or_else(|| GraphError::Graph6("empty input".into()))?;
        if !(63..=126).contains(&first) {
            return Err(GraphError::Graph6(format!("invalid size byte {first}")));
        }
        if first == 126 {
            return Err(GraphError::Graph6(format!(
                "orders above {MAX_GRAPH6_ORDER} are not supported"
            )));
        }
        let n = (first - 63) as usize;
        let nbits = n * n.saturating_sub(1) / 2;
        let need = nbits.div_ceil(6);
        if rest.len() != need {
            return Err(GraphError::Graph6(format!(
                "expected {need} data bytes for order {n}, found {}",
                rest.len()
            )));
        }
        let mut bits = Vec::with_capacity(need * 6);
        for &b in rest {
            if !(63..=126).contains(&b) {
                return Err(GraphError::Graph6(format!("invalid data byte {b}")));
            }
            let x = b - 63;
            for k in (0..6).rev() {
                bits.push((x >> k) & 1 == 1);
            }
        }
        let mut edges = Vec::new();
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if bits[k] {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Graph::new(n, &edges)
    }

    /// Encodes the graph as graph6.
    pub fn to_graph6(&self) -> String {
        assert!(self.n <= MAX_GRAPH6_ORDER, "graph6 encoding limited to order 62");
        let mut out = String::new();
        out.push((self.n as u8 + 63) as char);
        let mut acc = 0u8;
        let mut filled = 0;
        for v in 1..self.n {
            for u in 0..v {
                acc = (acc << 1) | self.is_adjacent(u, v) as u8;
                filled += 1;
                if filled == 6 {
                    out.push((acc + 63) as char);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(((acc << (6 - filled)) + 63) as char);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Edges as `(u, v)` with `u < v`, sorted; the index is the edge id.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn neighbor_mask(&self, v: Vertex) -> u64 {
        self.nbr_mask[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.nbr_mask[u] >> v & 1 == 1
    }

    /// Id of the edge `{u, v}`, if present.
    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<usize> {
        match self.edge_ids[u * self.n + v] {
            NO_EDGE => None,
            id => Some(id as usize),
        }
    }

    pub fn dist(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn eccentricity(&self, v: Vertex) -> u32 {
        *self.dist[v * self.n..(v + 1) * self.n].iter().max().unwrap()
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn diameter(&self) -> u32 {
        *self.dist.iter().max().unwrap()
    }

    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.n
    }

    pub fn is_bipartite(&self) -> bool {
        // Connected, so a graph is bipartite iff no edge joins two vertices
        // at the same distance parity from vertex 0.
        self.edges
            .iter()
            .all(|&(u, v)| self.dist(0, u) % 2 != self.dist(0, v) % 2)
    }

    /// Vertices of odd degree, ascending.
    pub fn odd_vertices(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.degree(v) % 2 == 1).collect()
    }

    /// Replaces `{u, v}` with a path `u w v` through a new vertex `w = n`.
    pub fn subdivide_edge(&self, u: Vertex, v: Vertex) -> Result<Graph, GraphError> {
        if u >= self.n || v >= self.n || self.edge_id(u, v).is_none() {
            return Err(GraphError::EdgeNotPresent(u, v));
        }
        let w = self.n;
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .filter(|&e| e != (u.min(v), u.max(v)))
            .collect();
        edges.push((u, w));
        edges.push((v, w));
        Graph::new(self.n + 1, &edges)
    }

    /// Line graph: one vertex per edge id, adjacent iff the edges share an
    /// endpoint.
    pub fn line_graph(&self) -> Result<Graph, GraphError> {
        if self.edges.is_empty() {
            return Err(GraphError::EmptyEdgeSet);
        }
        let m = self.edges.len();
        let mut edges = Vec::new();
        for i in 0..m {
            let (a, b) = self.edges[i];
            for j in i + 1..m {
                let (c, d) = self.edges[j];
                if a == c || a == d || b == c || b == d {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(m, &edges)
    }

    /// Canonical isomorphism code for orders up to [`MAX_CANONICAL_ORDER`].
    ///
    /// The code is the maximum, over all relabelings that list vertices by a
    /// fixed isomorphism-invariant refinement (degree, then the sorted degrees
    /// of the neighbors), of the upper-triangle adjacency bit string read
    /// position by position. Two graphs are isomorphic iff their codes agree.
    pub fn canonical_code(&self) -> Option<CanonicalCode> {
        if self.n > MAX_CANONICAL_ORDER {
            return None;
        }
        let n = self.n;
        let invariant = |v: Vertex| {
            let mut nd: Vec<usize> = self.adj[v].iter().map(|&u| self.degree(u)).collect();
            nd.sort_unstable();
            (self.degree(v), nd)
        };
        let mut order: Vec<Vertex> = self.vertices().collect();
        order.sort_by_key(|&v| std::cmp::Reverse(invariant(v)));
        // cell[p] = index of the refinement class that position p draws from
        let mut cell = vec![0usize; n];
        for p in 1..n {
            cell[p] = cell[p - 1] + (invariant(order[p]) != invariant(order[p - 1])) as usize;
        }
        let mut classes: Vec<Vec<Vertex>> = vec![Vec::new(); cell.last().map_or(0, |c| c + 1)];
        for p in 0..n {
            classes[cell[p]].push(order[p]);
        }

        let mut search = CanonSearch {
            g: self,
            cell: &cell,
            classes,
            placed: Vec::with_capacity(n),
            used: 0,
            best: None,
        };
        search.run(0);
        Some(CanonicalCode {
            order: n as u8,
            bits: search.best.unwrap_or(0),
        })
    }

    /// Isomorphism test via canonical codes; `None` above the canonical order
    /// limit.
    pub fn is_isomorphic(&self, other: &Graph) -> Option<bool> {
        if self.n != other.n || self.size() != other.size() {
            return Some(false);
        }
        Some(self.canonical_code()? == other.canonical_code()?)
    }

    /// Graph produced by a family generator.
    pub fn generate(spec: &FamilySpec) -> Result<Graph, GraphError> {
        spec.validate()?;
        let (n, edges) = match *spec {
            FamilySpec::Path(n) => (n, (1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()),
            FamilySpec::Cycle(n) => (n, (0..n).map(|i| (i, (i + 1) % n)).collect()),
            FamilySpec::Complete(n) => (n, complete_edges(n)),
            FamilySpec::CompleteBipartite(a, b) => (
                a + b,
                (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect(),
            ),
            FamilySpec::Star(k) => (k + 1, (1..=k).map(|v| (0, v)).collect()),
            FamilySpec::KnPlus(n) => {
                let mut edges: Vec<_> = complete_edges(n)
                    .into_iter()
                    .filter(|&e| e != (0, n - 1))
                    .collect();
                edges.push((0, n));
                edges.push((n - 1, n));
                (n + 1, edges)
            }
        };
        Graph::new(n, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

fn complete_edges(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn bfs_fill(adj: &[Vec<Vertex>], s: Vertex, row: &mut [u32]) {
    let mut queue = VecDeque::new();
    row[s] = 0;
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if row[v] == u32::MAX {
                row[v] = row[u] + 1;
                queue.push_back(v);
            }
        }
    }
}

/// Canonical form of a small graph; equal codes mean isomorphic graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    pub order: u8,
    pub bits: u64,
}

struct CanonSearch<'a> {
    g: &'a Graph,
    cell: &'a [usize],
    classes: Vec<Vec<Vertex>>,
    placed: Vec<Vertex>,
    used: u64,
    best: Option<u64>,
}

impl CanonSearch<'_> {
    fn run(&mut self, code: u64) {
        let p = self.placed.len();
        if p == self.g.n {
            if self.best.is_none_or(|b| code > b) {
                self.best = Some(code);
            }
            return;
        }
        let candidates = self.classes[self.cell[p]].clone();
        for v in candidates {
            if self.used >> v & 1 == 1 {
                continue;
            }
            // Pairs (q, p) for q < p, appended most significant first.
            let mut next = code;
            for &u in &self.placed {
                next = (next << 1) | self.g.is_adjacent(u, v) as u64;
            }
            self.placed.push(v);
            self.used |= 1 << v;
            self.run(next);
            self.used &= !(1 << v);
            self.placed.pop();
        }
    }
}

/// A named graph family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `P_n`, vertices `0..n` in path order.
    Path(usize),
    /// `C_n`, vertices `0..n` in cyclic order.
    Cycle(usize),
    /// `K_n`.
    Complete(usize),
    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    CompleteBipartite(usize, usize),
    /// `K_{1,k}` with center 0.
    Star(usize),
    /// `K_n` with edge `{0, n-1}` subdivided through the new vertex `n`.
    KnPlus(usize),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), GraphError> {
        let ok = match *self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) => n >= 1,
            FamilySpec::Cycle(n) => n >= 3,
            FamilySpec::CompleteBipartite(a, b) => a >= 1 && b >= 1,
            FamilySpec::Star(k) => k >= 1,
            FamilySpec::KnPlus(n) => n >= 4,
        };
        let order = match *self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) | FamilySpec::Cycle(n) => n,
            FamilySpec::CompleteBipartite(a, b) => a.saturating_add(b),
            FamilySpec::Star(k) | FamilySpec::KnPlus(k) => k.saturating_add(1),
        };
        if !ok {
            return Err(GraphError::InvalidParams(self.to_string()));
        }
        if order > MAX_ORDER {
            return Err(GraphError::TooLarge(order));
        }
        Ok(())
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::CompleteBipartite(..) => "complete_bipartite",
            FamilySpec::Star(_) => "star",
            FamilySpec::KnPlus(_) => "kn_plus",
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::CompleteBipartite(a, b) => write!(f, "{}:{a},{b}", self.name()),
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Star(n)
            | FamilySpec::KnPlus(n) => write!(f, "{}:{n}", self.name()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    /// Parses `NAME:PARAMS`, e.g. `kn_plus:5` or `complete_bipartite:2,3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::InvalidParams(s.to_string());
        let (name, params) = s.split_once(':').ok_or_else(bad)?;
        let params: Vec<usize> = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        let spec = match (name.trim(), params.as_slice()) {
            ("path", [n]) => FamilySpec::Path(*n),
            ("cycle", [n]) => FamilySpec::Cycle(*n),
            ("complete", [n]) => FamilySpec::Complete(*n),
            ("complete_bipartite", [a, b]) => FamilySpec::CompleteBipartite(*a, *b),
            ("star", [k]) => FamilySpec::Star(*k),
            ("kn_plus", [n]) => FamilySpec::KnPlus(*n),
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(spec: FamilySpec) -> Graph {
        Graph::generate(&spec).unwrap()
    }

    fn bfs_dist(g: &Graph, s: Vertex) -> Vec<u32> {
        let mut d = vec![u32::MAX; g.order()];
        let mut q = VecDeque::from([s]);
        d[s] = 0;
        while let Some(u) = q.pop_front() {
            for v in g.vertices().filter(|&v| g.is_adjacent(u, v)) {
                if d[v] == u32::MAX {
                    d[v] = d[u] + 1;
                    q.push_back(v);
                }
            }
        }
        d
    }

    /// Removes vertex `w` of degree two and joins its neighbors.
    fn smooth(g: &Graph, w: Vertex) -> Graph {
        let nb = g.neighbors(w).to_vec();
        assert_eq!(nb.len(), 2);
        let relabel = |x: Vertex| if x > w { x - 1 } else { x };
        let mut edges: Vec<_> = g
            .edges()
            .iter()
            .filter(|&&(u, v)| u != w && v != w)
            .map(|&(u, v)| (relabel(u), relabel(v)))
            .collect();
        edges.push((relabel(nb[0]), relabel(nb[1])));
        Graph::new(g.order() - 1, &edges).unwrap()
    }

    #[test]
    fn parse_path() {
        let g = Graph::parse_edge_list("3\n0 1\n1 2\n").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.dist(0, 2), 2);
        assert_eq!(g.radius(), 1);
    }

    #[test]
    fn parse_single_vertex() {
        let g = Graph::parse_edge_list("1").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.size(), 0);
        assert_eq!(g.radius(), 0);
    }

    #[test]
    fn parse_comments_and_crlf() {
        let g = Graph::parse_edge_list("# triangle\r\n3\r\n# edges\r\n0 1\r\n1 2\r\n0 2\r\n").unwrap();
        assert_eq!(g.size(), 3);
        assert_eq!(g.radius(), 1);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Graph::parse_edge_list("4\n0 1\n2 3\n"),
            Err(GraphError::DisconnectedInput)
        );
        assert_eq!(
            Graph::parse_edge_list("2\n1 1\n"),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            Graph::parse_edge_list("2\n0 1\n0 1\n"),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::parse_edge_list("2\n0 2\n"),
            Err(GraphError::IndexOutOfRange { index: 2, order: 2 })
        );
        assert!(matches!(
            Graph::parse_edge_list("2\n0 x\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("# nothing\n"),
            Err(GraphError::Parse { .. })
        ));
        assert_eq!(Graph::parse_edge_list("0\n"), Err(GraphError::EmptyVertexSet));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = gen(FamilySpec::KnPlus(5));
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn graph6_known_strings() {
        // Standard examples: K_4 is "C~", P_3 (0-1-2) is "Bg" and the
        // petgraph sample (0-2, 0-4, 1-3, 3-4) is "DQc".
        assert_eq!(gen(FamilySpec::Complete(4)).to_graph6(), "C~");
        assert_eq!(gen(FamilySpec::Path(3)).to_graph6(), "Bg");
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(g.to_graph6(), "DQc");
        assert_eq!(Graph::from_graph6("DQc").unwrap(), g);
        assert_eq!(Graph::from_graph6(">>graph6<<C~").unwrap(), gen(FamilySpec::Complete(4)));
        assert_eq!(Graph::from_graph6("@").unwrap().order(), 1);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(Graph::from_graph6(""), Err(GraphError::Graph6(_))));
        assert!(matches!(Graph::from_graph6("C"), Err(GraphError::Graph6(_))));
        assert!(matches!(Graph::from_graph6("~???"), Err(GraphError::Graph6(_))));
        assert_eq!(Graph::from_graph6("C?"), Err(GraphError::DisconnectedInput));
    }

    #[test]
    fn kn_plus_shape() {
        let g = gen(FamilySpec::KnPlus(5));
        // K_5 has 10 edges; subdividing one removes it and adds two.
        let k5_edges = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).count();
        assert_eq!(g.order(), 6);
        assert_eq!(g.size(), k5_edges - 1 + 2);
        assert_eq!(g.size(), 11);
        assert_eq!(g.neighbors(5), &[0, 4]);
        assert!(!g.is_adjacent(0, 4));
        assert_eq!(gen(FamilySpec::KnPlus(6)).radius(), 2);
    }

    #[test]
    fn small_families() {
        let c3 = gen(FamilySpec::Cycle(3));
        assert_eq!(c3, gen(FamilySpec::Complete(3)));
        assert_eq!(c3.radius(), 1);
        let k23 = gen(FamilySpec::CompleteBipartite(2, 3));
        assert_eq!((k23.order(), k23.size()), (5, 6));
        assert!(k23.is_bipartite());
        assert!(!c3.is_bipartite());
        let star = gen(FamilySpec::Star(3));
        assert_eq!((star.order(), star.size(), star.radius()), (4, 3, 1));
    }

    #[test]
    fn family_spec_parsing() {
        assert_eq!("kn_plus:5".parse::<FamilySpec>().unwrap(), FamilySpec::KnPlus(5));
        assert_eq!(
            "complete_bipartite:2,3".parse::<FamilySpec>().unwrap(),
            FamilySpec::CompleteBipartite(2, 3)
        );
        assert_eq!(FamilySpec::CompleteBipartite(2, 3).to_string(), "complete_bipartite:2,3");
        for bad in ["kn_plus:3", "cycle:2", "path:0", "path", "torus:3", "path:x", "star:0"] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
        }
        assert!(Graph::generate(&FamilySpec::Cycle(2)).is_err());
    }

    #[test]
    fn radius_closed_forms() {
        for n in 1..=12 {
            assert_eq!(gen(FamilySpec::Path(n)).radius() as usize, n / 2, "P_{n}");
            if n >= 3 {
                assert_eq!(gen(FamilySpec::Cycle(n)).radius() as usize, n / 2, "C_{n}");
            }
            if n >= 2 {
                assert_eq!(gen(FamilySpec::Complete(n)).radius(), 1, "K_{n}");
            }
        }
    }

    #[test]
    fn stored_distances_match_bfs() {
        let mut specs = Vec::new();
        for n in 1..=9 {
            specs.push(FamilySpec::Path(n));
            specs.push(FamilySpec::Complete(n));
            specs.push(FamilySpec::Star(n));
            if n >= 3 {
                specs.push(FamilySpec::Cycle(n));
            }
            if n >= 4 {
                specs.push(FamilySpec::KnPlus(n));
            }
            specs.push(FamilySpec::CompleteBipartite(n.div_ceil(2), n / 2 + 1));
        }
        for spec in specs {
            let g = gen(spec);
            for s in g.vertices() {
                let d = bfs_dist(&g, s);
                for t in g.vertices() {
                    assert_eq!(g.dist(s, t), d[t], "{spec} {s} {t}");
                    assert_eq!(g.dist(s, t), g.dist(t, s));
                    assert_eq!(g.dist(s, t) == 0, s == t);
                    for u in g.vertices() {
                        assert!(g.dist(s, u) <= g.dist(s, t) + g.dist(t, u));
                    }
                }
            }
        }
    }

    #[test]
    fn subdivide_examples() {
        let k4 = gen(FamilySpec::Complete(4));
        let s = k4.subdivide_edge(0, 3).unwrap();
        assert_eq!(s, gen(FamilySpec::KnPlus(4)));
        let p3 = gen(FamilySpec::Path(2)).subdivide_edge(1, 0).unwrap();
        assert_eq!(p3.is_isomorphic(&gen(FamilySpec::Path(3))), Some(true));
        let c3 = gen(FamilySpec::Cycle(3));
        for &(u, v) in c3.edges() {
            assert_eq!(c3.subdivide_edge(u, v).unwrap().is_isomorphic(&gen(FamilySpec::Cycle(4))), Some(true));
        }
        assert_eq!(k4.subdivide_edge(0, 0), Err(GraphError::EdgeNotPresent(0, 0)));
        assert_eq!(
            gen(FamilySpec::Path(3)).subdivide_edge(0, 2),
            Err(GraphError::EdgeNotPresent(0, 2))
        );
    }

    #[test]
    fn line_graph_examples() {
        let c5 = gen(FamilySpec::Cycle(5));
        assert_eq!(c5.line_graph().unwrap().is_isomorphic(&c5), Some(true));
        assert_eq!(
            gen(FamilySpec::Path(4)).line_graph().unwrap().is_isomorphic(&gen(FamilySpec::Path(3))),
            Some(true)
        );
        assert_eq!(
            gen(FamilySpec::Star(3)).line_graph().unwrap().is_isomorphic(&gen(FamilySpec::Complete(3))),
            Some(true)
        );
        assert_eq!(gen(FamilySpec::Path(1)).line_graph(), Err(GraphError::EmptyEdgeSet));
    }

    #[test]
    fn canonical_code_is_labeling_invariant() {
        let g = gen(FamilySpec::KnPlus(5));
        let code = g.canonical_code().unwrap();
        // relabel by a rotation
        let n = g.order();
        let edges: Vec<_> = g.edges().iter().map(|&(u, v)| ((u + 2) % n, (v + 2) % n)).collect();
        let h = Graph::new(n, &edges).unwrap();
        assert_eq!(h.canonical_code().unwrap(), code);
        // same degree sequence, different graphs: C_6 vs two triangles joined? (disconnected)
        // so use the 3-prism vs K_{3,3}
        let prism = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        let k33 = gen(FamilySpec::CompleteBipartite(3, 3));
        assert_eq!(prism.is_isomorphic(&k33), Some(false));
    }

    #[test]
    fn subdivide_then_smooth_recovers_original() {
        // every connected graph on up to 5 vertices, every edge
        for n in 2..=5 {
            let all = complete_edges(n);
            for mask in 0u32..(1 << all.len()) {
                let edges: Vec<_> = (0..all.len()).filter(|&i| mask >> i & 1 == 1).map(|i| all[i]).collect();
                let Ok(g) = Graph::new(n, &edges) else { continue };
                for &(u, v) in g.edges() {
                    let s = g.subdivide_edge(u, v).unwrap();
                    assert_eq!((s.order(), s.size()), (n + 1, g.size() + 1));
                    assert_eq!(s.neighbors(n), &[u, v]);
                    assert_eq!(smooth(&s, n).is_isomorphic(&g), Some(true));
                }
            }
        }
    }
}
