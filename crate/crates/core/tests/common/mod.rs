//! Brute-force oracles shared by the integration tests. None of them go
//! through the product-graph or coverage-search code they are checked against.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use graph_spans::family::enumerate_connected;
use graph_spans::walk::Walk;
use graph_spans::{Graph, MovementRule, Target};
use rand::Rng;

pub fn corpus(max_n: usize) -> Vec<Graph> {
    enumerate_connected(max_n, usize::MAX).unwrap()
}

/// Moves available to one player from `v`: stay first, then neighbors.
fn options(g: &Graph, v: usize) -> Vec<(usize, bool)> {
    let mut out = vec![(v, false)];
    out.extend(g.neighbors(v).iter().map(|&w| (w, true)));
    out
}

fn step_allowed(rule: MovementRule, f_moves: bool, g_moves: bool) -> bool {
    match rule {
        MovementRule::Traditional => f_moves || g_moves,
        MovementRule::Active => f_moves && g_moves,
        MovementRule::Lazy => f_moves != g_moves,
    }
}

fn mark(g: &Graph, target: Target, from: usize, to: usize) -> u64 {
    match target {
        Target::Vertices => 1 << to,
        Target::Edges if from == to => 0,
        Target::Edges => 1 << g.edge_id(from, to).unwrap(),
    }
}

/// Fewest entries of a pair of walks obeying `rule`, keeping distance at
/// least `k` and each covering `target`, searched up to `cap` entries.
pub fn min_pair_length(g: &Graph, rule: MovementRule, target: Target, k: u32, cap: usize) -> Option<usize> {
    let n = g.order();
    let full: u64 = match target {
        Target::Vertices => (1 << n) - 1,
        Target::Edges => (1 << g.size()) - 1,
    };
    let start = |v: usize| match target {
        Target::Vertices => 1u64 << v,
        Target::Edges => 0,
    };
    let mut seen = HashSet::new();
    let mut layer = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if g.dist(u, v) >= k {
                let s = (u, v, start(u), start(v));
                if seen.insert(s) {
                    layer.push(s);
                }
            }
        }
    }
    for len in 1..=cap {
        if layer.iter().any(|&(_, _, a, b)| a == full && b == full) {
            return Some(len);
        }
        let mut next = Vec::new();
        for &(u, v, a, b) in &layer {
            for (u2, fm) in options(g, u) {
                for (v2, gm) in options(g, v) {
                    if !step_allowed(rule, fm, gm) || g.dist(u2, v2) < k {
                        continue;
                    }
                    let s = (u2, v2, a | mark(g, target, u, u2), b | mark(g, target, v, v2));
                    if seen.insert(s) {
                        next.push(s);
                    }
                }
            }
        }
        if next.is_empty() {
            return None;
        }
        layer = next;
    }
    None
}

pub fn length_cap(g: &Graph) -> usize {
    2 * g.order() * (g.size() + 1)
}

/// Span by scanning thresholds from the radius down.
pub fn oracle_span(g: &Graph, rule: MovementRule, target: Target) -> u32 {
    let cap = length_cap(g);
    (0..=g.radius())
        .rev()
        .find(|&k| min_pair_length(g, rule, target, k, cap).is_some())
        .unwrap()
}

/// Shortest edge-covering walk length by BFS over (vertex, covered edges).
pub fn postman_oracle(g: &Graph, closed: bool) -> usize {
    let full: u64 = (1 << g.size()) - 1;
    let bfs = |sources: &[usize], goal: &dyn Fn(usize, u64) -> bool| -> usize {
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        for &s in sources {
            seen.insert((s, 0u64));
            queue.push_back((s, 0u64, 0usize));
        }
        while let Some((v, mask, d)) = queue.pop_front() {
            if goal(v, mask) {
                return d;
            }
            for &w in g.neighbors(v) {
                let m2 = mask | 1 << g.edge_id(v, w).unwrap();
                if seen.insert((w, m2)) {
                    queue.push_back((w, m2, d + 1));
                }
            }
        }
        unreachable!("connected graph")
    };
    if closed {
        g.vertices()
            .map(|s| bfs(&[s], &|v, m| v == s && m == full))
            .min()
            .unwrap()
    } else {
        let all: Vec<_> = g.vertices().collect();
        bfs(&all, &|_, m| m == full)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Size of the automorphism group, by trying every permutation.
pub fn automorphisms(g: &Graph) -> usize {
    permutations(g.order())
        .into_iter()
        .filter(|p| g.edges().iter().all(|&(u, v)| g.is_adjacent(p[u], p[v])))
        .count()
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Connected graphs on the labeled vertex set `0..n`, by testing every edge
/// subset.
pub fn labeled_connected(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .filter(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(n, &edges).is_ok()
        })
        .count()
}

/// Random strict walk visiting every vertex, padded with extra random steps
/// to exactly `len` entries (or longer if coverage needs it).
pub fn random_track(g: &Graph, rng: &mut impl Rng, len: usize) -> Vec<usize> {
    let n = g.order();
    let mut cur = rng.random_range(0..n);
    let mut seq = vec![cur];
    let mut seen = 1u64 << cur;
    while seen.count_ones() as usize != n || seq.len() < len {
        let nb = g.neighbors(cur);
        cur = nb[rng.random_range(0..nb.len())];
        seen |= 1 << cur;
        seq.push(cur);
    }
    seq
}

/// Pads the shorter walk by repeating a back-and-forth step at its end so
/// both are strict walks of equal length.
pub fn equalize(g: &Graph, a: &mut Vec<usize>, b: &mut Vec<usize>) {
    let target = a.len().max(b.len());
    for w in [a, b] {
        while w.len() < target {
            let last = *w.last().unwrap();
            let prev = if w.len() >= 2 { w[w.len() - 2] } else { g.neighbors(last)[0] };
            w.push(prev);
        }
    }
}

pub fn walk(seq: Vec<usize>) -> Walk {
    Walk::new(seq).unwrap()
}
