//! Span computation through distance-thresholded product graphs.
//!
//! A pair of walks keeping distance at least `k` is a walk in the product of
//! the graph with itself, restricted to ordered pairs `(u, v)` with
//! `d(u, v) >= k`. The product's edges depend on the movement rule: strong
//! product for the traditional rule, tensor product for the active rule and
//! Cartesian product for the lazy rule. Any closed walk inside one connected
//! component can traverse every product edge of that component, so a
//! distance `k` is achievable iff some component's projections already cover
//! the target set for both players.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::postman::euler_tour;
use crate::walk::Walk;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpanError {
    #[error("threshold {k} exceeds the radius {radius}")]
    ThresholdOutOfRange { k: u32, radius: u32 },
}

/// How the two players may move in one step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MovementRule {
    /// Each player moves or stays; strong product, strong span.
    #[serde(rename = "strong")]
    Traditional,
    /// Both players move; tensor product, direct span.
    #[serde(rename = "direct")]
    Active,
    /// Exactly one player moves; Cartesian product, Cartesian span.
    #[serde(rename = "cartesian")]
    Lazy,
}

impl MovementRule {
    pub const ALL: [MovementRule; 3] = [
        MovementRule::Traditional,
        MovementRule::Active,
        MovementRule::Lazy,
    ];

    /// Name of the span this rule defines.
    pub fn span_name(self) -> &'static str {
        match self {
            MovementRule::Traditional => "strong",
            MovementRule::Active => "direct",
            MovementRule::Lazy => "cartesian",
        }
    }

    /// Whether a step `(u, v) -> (u2, v2)` is allowed, ignoring distances.
    pub fn allows(self, g: &Graph, (u, v): (Vertex, Vertex), (u2, v2): (Vertex, Vertex)) -> bool {
        let f_moves = g.is_adjacent(u, u2);
        let g_moves = g.is_adjacent(v, v2);
        match self {
            MovementRule::Traditional => {
                (f_moves || u == u2) && (g_moves || v == v2) && (f_moves || g_moves)
            }
            MovementRule::Active => f_moves && g_moves,
            MovementRule::Lazy => (f_moves && v == v2) || (u == u2 && g_moves),
        }
    }
}

impl fmt::Display for MovementRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.span_name())
    }
}

impl FromStr for MovementRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strong" | "traditional" => Ok(MovementRule::Traditional),
            "direct" | "active" => Ok(MovementRule::Active),
            "cartesian" | "lazy" => Ok(MovementRule::Lazy),
            _ => Err(format!("unknown movement rule {s:?}")),
        }
    }
}

/// What both players have to cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Vertices,
    Edges,
}

impl Target {
    pub const ALL: [Target; 2] = [Target::Vertices, Target::Edges];
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Vertices => "vertices",
            Target::Edges => "edges",
        })
    }
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vertices" => Ok(Target::Vertices),
            "edges" => Ok(Target::Edges),
            _ => Err(format!("unknown target {s:?}")),
        }
    }
}

const NO_STATE: u32 = u32::MAX;

/// The product graph restricted to ordered pairs at distance `>= k`.
///
/// States are numbered in increasing order of `u * n + v`. Components are
/// numbered in increasing order of their lowest state.
#[derive(Debug, Clone)]
pub struct ProductGraph<'g> {
    base: &'g Graph,
    rule: MovementRule,
    k: u32,
    states: Vec<(Vertex, Vertex)>,
    index: Vec<u32>,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    component: Vec<usize>,
    components: Vec<Vec<usize>>,
}

impl<'g> ProductGraph<'g> {
    pub fn build(g: &'g Graph, rule: MovementRule, k: u32) -> Result<Self, SpanError> {
        if k > g.radius() {
            return Err(SpanError::ThresholdOutOfRange { k, radius: g.radius() });
        }
        let n = g.order();
        let mut states = Vec::new();
        let mut index = vec![NO_STATE; n * n];
        for u in g.vertices() {
            for v in g.vertices() {
                if g.dist(u, v) >= k {
                    index[u * n + v] = states.len() as u32;
                    states.push((u, v));
                }
            }
        }

        let closed_nbhd = |x: Vertex| std::iter::once(x).chain(g.neighbors(x).iter().copied());
        let mut adj = vec![Vec::new(); states.len()];
        let mut edges = Vec::new();
        for (s, &(u, v)) in states.iter().enumerate() {
            for u2 in closed_nbhd(u) {
                for v2 in closed_nbhd(v) {
                    let t = index[u2 * n + v2];
                    if t == NO_STATE || !rule.allows(g, (u, v), (u2, v2)) {
                        continue;
                    }
                    let t = t as usize;
                    adj[s].push(t);
                    if s < t {
                        edges.push((s, t));
                    }
                }
            }
            adj[s].sort_unstable();
        }
        edges.sort_unstable();

        let mut component = vec![usize::MAX; states.len()];
        let mut components = Vec::new();
        for root in 0..states.len() {
            if component[root] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = vec![root];
            component[root] = id;
            let mut i = 0;
            while i < members.len() {
                let s = members[i];
                for &t in &adj[s] {
                    if component[t] == usize::MAX {
                        component[t] = id;
                        members.push(t);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            components.push(members);
        }

        Ok(ProductGraph {
            base: g,
            rule,
            k,
            states,
            index,
            adj,
            edges,
            component,
            components,
        })
    }

    pub fn base(&self) -> &'g Graph {
        self.base
    }

    pub fn rule(&self) -> MovementRule {
        self.rule
    }

    pub fn threshold(&self) -> u32 {
        self.k
    }

    pub fn states(&self) -> &[(Vertex, Vertex)] {
        &self.states
    }

    /// State number of `(u, v)`, if it is at distance `>= k`.
    pub fn state_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        match self.index[u * self.base.order() + v] {
            NO_STATE => None,
            s => Some(s as usize),
        }
    }

    pub fn neighbors(&self, s: usize) -> &[usize] {
        &self.adj[s]
    }

    /// Product edges as state pairs `(s, t)` with `s < t`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn component_of(&self, s: usize) -> usize {
        self.component[s]
    }

    /// Member states of each component, ascending.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Base-graph edge traversed by each player on the product edge `s - t`.
    pub fn realized_edges(&self, s: usize, t: usize) -> (Option<usize>, Option<usize>) {
        let (u, v) = self.states[s];
        let (u2, v2) = self.states[t];
        (self.base.edge_id(u, u2), self.base.edge_id(v, v2))
    }

    /// What each player can cover inside each component.
    pub fn component_coverage(&self) -> Vec<Coverage> {
        let m = self.base.size();
        let mut cov: Vec<Coverage> = (0..self.components.len())
            .map(|_| Coverage {
                first_vertices: 0,
                second_vertices: 0,
                first_edges: FixedBitSet::with_capacity(m),
                second_edges: FixedBitSet::with_capacity(m),
            })
            .collect();
        for (s, &(u, v)) in self.states.iter().enumerate() {
            let c = &mut cov[self.component[s]];
            c.first_vertices |= 1 << u;
            c.second_vertices |= 1 << v;
        }
        for &(s, t) in &self.edges {
            let c = &mut cov[self.component[s]];
            let (a, b) = self.realized_edges(s, t);
            if let Some(e) = a {
                c.first_edges.insert(e);
            }
            if let Some(e) = b {
                c.second_edges.insert(e);
            }
        }
        cov
    }

    /// Lowest-numbered component whose projections cover `target` for both
    /// players.
    pub fn covering_component(&self, target: Target) -> Option<usize> {
        let all_vertices = if self.base.order() == 64 {
            u64::MAX
        } else {
            (1u64 << self.base.order()) - 1
        };
        let m = self.base.size();
        self.component_coverage().iter().position(|c| match target {
            Target::Vertices => c.first_vertices == all_vertices && c.second_vertices == all_vertices,
            Target::Edges => c.first_edges.count_ones(..) == m && c.second_edges.count_ones(..) == m,
        })
    }

    /// A pair of walks traversing every product edge of `component` twice,
    /// starting and ending at its lowest state.
    pub fn component_tour(&self, component: usize) -> (Walk, Walk) {
        let members = &self.components[component];
        let local = |s: usize| members.binary_search(&s).expect("state in component");
        let mut doubled = Vec::new();
        for &(s, t) in &self.edges {
            if self.component[s] == component {
                doubled.push((local(s), local(t)));
                doubled.push((local(s), local(t)));
            }
        }
        let tour = euler_tour(members.len(), &doubled, 0);
        let (first, second) = tour.iter().map(|&i| self.states[members[i]]).unzip();
        (
            Walk::new(first).expect("non-empty"),
            Walk::new(second).expect("non-empty"),
        )
    }
}

/// Vertex masks and edge sets reachable by each player within a component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coverage {
    pub first_vertices: u64,
    pub second_vertices: u64,
    pub first_edges: FixedBitSet,
    pub second_edges: FixedBitSet,
}

/// Builds the product graph for `rule` at threshold `k`.
pub fn build_product(g: &Graph, rule: MovementRule, k: u32) -> Result<ProductGraph<'_>, SpanError> {
    ProductGraph::build(g, rule, k)
}

/// Whether both players can cover `target` while always keeping distance
/// at least `k`.
pub fn feasible(g: &Graph, rule: MovementRule, target: Target, k: u32) -> Result<bool, SpanError> {
    Ok(build_product(g, rule, k)?.covering_component(target).is_some())
}

/// Result of a span computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanReport {
    pub rule: MovementRule,
    pub target: Target,
    pub value: u32,
    /// Covering component at threshold `value`, as numbered by
    /// [`ProductGraph`].
    pub witness_component: usize,
    /// Lowest state of the witness component.
    pub component_root: (Vertex, Vertex),
    pub witness: Option<(Walk, Walk)>,
}

fn span_search(g: &Graph, rule: MovementRule, target: Target, with_witness: bool) -> SpanReport {
    for k in (0..=g.radius()).rev() {
        let product = build_product(g, rule, k).expect("k within radius");
        if let Some(c) = product.covering_component(target) {
            return SpanReport {
                rule,
                target,
                value: k,
                witness_component: c,
                component_root: product.states()[product.components()[c][0]],
                witness: with_witness.then(|| product.component_tour(c)),
            };
        }
    }
    // At k = 0 the diagonal component lets both players follow one covering
    // walk together.
    unreachable!("threshold 0 is always feasible")
}

/// Largest `k` such that both players can cover `target` under `rule` while
/// keeping distance at least `k`.
pub fn span(g: &Graph, rule: MovementRule, target: Target) -> SpanReport {
    span_search(g, rule, target, false)
}

/// [`span`] together with a witness pair.
pub fn span_with_witness(g: &Graph, rule: MovementRule, target: Target) -> SpanReport {
    span_search(g, rule, target, true)
}

/// A pair of walks achieving the span: doubled-edge Euler tour of the
/// witness component, projected onto each player.
pub fn witness_sweeps(g: &Graph, rule: MovementRule, target: Target) -> (Walk, Walk) {
    span_with_witness(g, rule, target)
        .witness
        .expect("witness requested")
}

/// All six spans of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpanTable {
    pub vertices: [u32; 3],
    pub edges: [u32; 3],
}

impl SpanTable {
    pub fn compute(g: &Graph) -> Self {
        let row = |target| MovementRule::ALL.map(|rule| span(g, rule, target).value);
        SpanTable {
            vertices: row(Target::Vertices),
            edges: row(Target::Edges),
        }
    }

    pub fn get(&self, rule: MovementRule, target: Target) -> u32 {
        let row = match target {
            Target::Vertices => &self.vertices,
            Target::Edges => &self.edges,
        };
        row[rule as usize]
    }
}
