//! Minimal walk lengths achieving a span.
//!
//! Breadth-first search over `(product state, first coverage, second
//! coverage)` where coverage is a bitset of visited vertices or traversed
//! edges. Steps follow the product graph at the span threshold, so every
//! reachable state keeps the players at distance at least the span; since
//! the span is the maximum achievable distance, any covering pair found
//! keeps it exactly. The first layer containing a fully covered state gives
//! the minimal number of steps.

use std::collections::HashMap;

use crate::graph::Graph;
use crate::span::{build_product, span, MovementRule, ProductGraph, Target};
use crate::walk::Walk;

/// Default cap on stored search states.
pub const DEFAULT_BUDGET: u64 = 1 << 27;

const UNSEEN: u8 = u8::MAX;
const MAX_DEPTH: u8 = UNSEEN - 1;

/// Outcome of a minimal-length search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinLenReport {
    pub rule: MovementRule,
    pub target: Target,
    pub span_value: u32,
    /// Minimal number of entries when `capped` is false; otherwise the best
    /// proven lower bound.
    pub length: usize,
    /// A pair of walks with exactly `length` entries, absent when capped.
    pub witness: Option<(Walk, Walk)>,
    pub explored_states: u64,
    pub capped: bool,
}

/// Counting lower bound on the minimal length: `n` (vertices) or `m + 1`
/// (edges); under the lazy rule each player needs its own moves, giving
/// `2n - 1` and `2m + 1`.
pub fn length_lower_bound(g: &Graph, rule: MovementRule, target: Target) -> usize {
    let (n, m) = (g.order(), g.size());
    match (rule, target) {
        (MovementRule::Lazy, Target::Vertices) => 2 * n - 1,
        (MovementRule::Lazy, Target::Edges) => 2 * m + 1,
        (_, Target::Vertices) => n,
        (_, Target::Edges) => m + 1,
    }
}

/// Minimal length of a walk pair achieving the span of `g` for `rule` and
/// `target`, storing at most `budget` search states.
pub fn min_length(g: &Graph, rule: MovementRule, target: Target, budget: u64) -> MinLenReport {
    let value = span(g, rule, target).value;
    min_length_at(g, rule, target, value, budget)
}

/// Minimal length of a covering walk pair keeping distance at least
/// `threshold` (which must not exceed the radius). Reports `capped` if no
/// pair exists within the budget, including when none exists at all.
pub fn min_length_at(
    g: &Graph,
    rule: MovementRule,
    target: Target,
    threshold: u32,
    budget: u64,
) -> MinLenReport {
    let product = build_product(g, rule, threshold).expect("threshold within radius");
    let lower = length_lower_bound(g, rule, target);
    let capped = |explored, depth_done: usize| MinLenReport {
        rule,
        target,
        span_value: threshold,
        length: lower.max(depth_done + 1),
        witness: None,
        explored_states: explored,
        capped: true,
    };

    let Some(total) = space_size(&product, target) else {
        return capped(0, 0);
    };
    let search = Search::new(&product, target);
    let mut store = if total <= budget {
        Store::Dense(vec![UNSEEN; total as usize])
    } else {
        Store::Sparse(HashMap::new())
    };

    let mut visited = 0u64;
    let mut layer = Vec::new();
    for s in 0..product.states().len() {
        let key = search.encode(s, search.initial_first[s], search.initial_second[s]);
        if store.get(key) == UNSEEN {
            store.set(key, 0);
            visited += 1;
            layer.push(key);
        }
    }
    let mut depth = 0u8;
    loop {
        if let Some(&goal) = layer.iter().find(|&&k| search.is_goal(k)) {
            let (first, second) = search.reconstruct(&store, goal, depth);
            return MinLenReport {
                rule,
                target,
                span_value: threshold,
                length: depth as usize + 1,
                witness: Some((first, second)),
                explored_states: visited,
                capped: false,
            };
        }
        if layer.is_empty() || depth == MAX_DEPTH {
            // Either every reachable state was explored without covering
            // everything, or depths no longer fit the store.
            return capped(visited, depth as usize + 1);
        }
        let mut next = Vec::new();
        for &key in &layer {
            let (s, fc, gc) = search.decode(key);
            for &(t, fa, ga) in &search.transitions[s] {
                let nk = search.encode(t, fc | fa, gc | ga);
                if store.get(nk) == UNSEEN {
                    store.set(nk, depth + 1);
                    visited += 1;
                    next.push(nk);
                }
            }
            if visited > budget {
                return capped(visited, depth as usize + 1);
            }
        }
        layer = next;
        depth += 1;
    }
}

fn coverage_width(g: &Graph, target: Target) -> u32 {
    match target {
        Target::Vertices => g.order() as u32,
        Target::Edges => g.size() as u32,
    }
}

/// Number of encodable search keys, if they fit in a `u64`.
fn space_size(product: &ProductGraph<'_>, target: Target) -> Option<u64> {
    let bits = 2 * coverage_width(product.base(), target);
    if bits >= 63 {
        return None;
    }
    (product.states().len() as u64)
        .checked_mul(1u64 << bits)
        .filter(|&t| t < 1 << 63)
}

enum Store {
    Dense(Vec<u8>),
    Sparse(HashMap<u64, u8>),
}

impl Store {
    fn get(&self, key: u64) -> u8 {
        match self {
            Store::Dense(v) => v[key as usize],
            Store::Sparse(m) => m.get(&key).copied().unwrap_or(UNSEEN),
        }
    }

    fn set(&mut self, key: u64, depth: u8) {
        match self {
            Store::Dense(v) => v[key as usize] = depth,
            Store::Sparse(m) => {
                m.insert(key, depth);
            }
        }
    }
}

struct Search<'a> {
    product: &'a ProductGraph<'a>,
    target: Target,
    width: u32,
    full: u64,
    initial_first: Vec<u64>,
    initial_second: Vec<u64>,
    /// Per state: `(next state, first player's new bits, second's new bits)`.
    transitions: Vec<Vec<(usize, u64, u64)>>,
}

impl<'a> Search<'a> {
    fn new(product: &'a ProductGraph<'a>, target: Target) -> Self {
        let width = coverage_width(product.base(), target);
        let full = (1u64 << width) - 1;
        let states = product.states();
        let (initial_first, initial_second) = match target {
            Target::Vertices => states.iter().map(|&(u, v)| (1u64 << u, 1u64 << v)).unzip(),
            Target::Edges => (vec![0; states.len()], vec![0; states.len()]),
        };
        let mut search = Search {
            product,
            target,
            width,
            full,
            initial_first,
            initial_second,
            transitions: Vec::new(),
        };
        search.transitions = (0..states.len())
            .map(|s| {
                product
                    .neighbors(s)
                    .iter()
                    .map(|&t| {
                        let (fa, ga) = search.gained(s, t);
                        (t, fa, ga)
                    })
                    .collect()
            })
            .collect();
        search
    }

    /// Bits each player gains on the step `s -> t`.
    fn gained(&self, s: usize, t: usize) -> (u64, u64) {
        match self.target {
            Target::Vertices => {
                let (u, v) = self.product.states()[t];
                (1 << u, 1 << v)
            }
            Target::Edges => {
                let (a, b) = self.product.realized_edges(s, t);
                (a.map_or(0, |e| 1 << e), b.map_or(0, |e| 1 << e))
            }
        }
    }

    fn encode(&self, s: usize, fc: u64, gc: u64) -> u64 {
        ((s as u64) << (2 * self.width)) | (fc << self.width) | gc
    }

    fn decode(&self, key: u64) -> (usize, u64, u64) {
        (
            (key >> (2 * self.width)) as usize,
            (key >> self.width) & self.full,
            key & self.full,
        )
    }

    fn is_goal(&self, key: u64) -> bool {
        let (_, fc, gc) = self.decode(key);
        fc == self.full && gc == self.full
    }

    /// Walks back from `goal` through states one layer shallower each time,
    /// preferring the lowest-numbered predecessor.
    fn reconstruct(&self, store: &Store, goal: u64, depth: u8) -> (Walk, Walk) {
        let mut path = vec![self.decode(goal).0];
        let mut key = goal;
        for d in (0..depth).rev() {
            let (s, fc, gc) = self.decode(key);
            let prev = self
                .product
                .neighbors(s)
                .iter()
                .find_map(|&t| {
                    let (fa, ga) = self.gained(t, s);
                    let firsts = [fc, fc & !fa];
                    let seconds = [gc, gc & !ga];
                    firsts.iter().find_map(|&pf| {
                        seconds.iter().find_map(|&pg| {
                            let k = self.encode(t, pf, pg);
                            (pf | fa == fc && pg | ga == gc && store.get(k) == d).then_some(k)
                        })
                    })
                })
                .expect("every non-initial state has a predecessor one layer up");
            key = prev;
            path.push(self.decode(key).0);
        }
        path.reverse();
        let (first, second) = path.iter().map(|&s| self.product.states()[s]).unzip();
        (Walk::new(first).unwrap(), Walk::new(second).unwrap())
    }
}
