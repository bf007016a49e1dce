//! Walks of two players and the track/sweep classification.
//!
//! A walk is a non-empty vertex sequence; its length `l` is the number of
//! entries. Strict walks move along an edge at every step, lazy walks may
//! also stay put. A (lazy) track visits every vertex, a (lazy) sweep also
//! traverses every edge in one direction or the other.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WalkError {
    #[error("walk must contain at least one vertex")]
    Empty,
    #[error("walk entry {position} is vertex {vertex}, outside a graph of order {order}")]
    InvalidVertex {
        position: usize,
        vertex: Vertex,
        order: usize,
    },
    #[error("walks have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("walk is not a track on the graph")]
    NotATrack,
    #[error("cannot parse walk: {0}")]
    Parse(String),
}

/// A finite vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk(Vec<Vertex>);

impl Walk {
    pub fn new(seq: Vec<Vertex>) -> Result<Self, WalkError> {
        if seq.is_empty() {
            return Err(WalkError::Empty);
        }
        Ok(Walk(seq))
    }

    /// Constant walk of `len` entries at `v`.
    pub fn constant(v: Vertex, len: usize) -> Self {
        assert!(len >= 1);
        Walk(vec![v; len])
    }

    /// Number of entries.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    /// Consecutive pairs `(f(i), f(i+1))`.
    pub fn steps(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }

    /// Checks that every entry is a vertex of `g`.
    pub fn check_vertices(&self, g: &Graph) -> Result<(), WalkError> {
        match self.0.iter().position(|&v| v >= g.order()) {
            Some(position) => Err(WalkError::InvalidVertex {
                position,
                vertex: self.0[position],
                order: g.order(),
            }),
            None => Ok(()),
        }
    }

    /// Edge ids traversed by moving steps. Stay-steps and non-edges are
    /// ignored.
    pub fn covered_edges(&self, g: &Graph) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(g.size());
        for (a, b) in self.steps() {
            if let Some(id) = g.edge_id(a, b) {
                set.insert(id);
            }
        }
        set
    }

    pub fn visited_mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | 1 << v)
    }
}

impl fmt::Display for Walk {
    /// Comma separated, 1-based: `v1,v2,v3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "v{}", v + 1)?;
        }
        Ok(())
    }
}

impl FromStr for Walk {
    type Err = WalkError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let seq = s
            .trim()
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.strip_prefix('v')
                    .and_then(|num| num.parse::<usize>().ok())
                    .filter(|&k| k >= 1)
                    .map(|k| k - 1)
                    .ok_or_else(|| WalkError::Parse(format!("bad vertex name {tok:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Walk::new(seq)
    }
}

/// Which of the four walk classes a walk belongs to on a given graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WalkClass {
    pub is_track: bool,
    pub is_lazy_track: bool,
    pub is_sweep: bool,
    pub is_lazy_sweep: bool,
}

/// Classifies `w` on `g`.
pub fn classify(g: &Graph, w: &Walk) -> Result<WalkClass, WalkError> {
    w.check_vertices(g)?;
    let strict = w.steps().all(|(a, b)| g.is_adjacent(a, b));
    let lazy = w.steps().all(|(a, b)| a == b || g.is_adjacent(a, b));
    let all_vertices = (1u128 << g.order()) - 1;
    let surjective = w.visited_mask() as u128 == all_vertices;
    let all_edges = w.covered_edges(g).count_ones(..) == g.size();

    let is_lazy_track = lazy && surjective;
    let is_track = strict && surjective;
    Ok(WalkClass {
        is_track,
        is_lazy_track,
        is_sweep: is_track && all_edges,
        is_lazy_sweep: is_lazy_track && all_edges,
    })
}

fn same_len(f: &Walk, h: &Walk) -> Result<(), WalkError> {
    if f.len() != h.len() {
        return Err(WalkError::LengthMismatch(f.len(), h.len()));
    }
    Ok(())
}

/// Minimum graph distance between simultaneous positions of the two walks.
pub fn pair_distance(g: &Graph, f: &Walk, h: &Walk) -> Result<u32, WalkError> {
    same_len(f, h)?;
    f.check_vertices(g)?;
    h.check_vertices(g)?;
    Ok(f.0
        .iter()
        .zip(&h.0)
        .map(|(&a, &b)| g.dist(a, b))
        .min()
        .unwrap())
}

/// True iff at every step exactly one of the walks moves along an edge and
/// the other stays.
pub fn is_opposite_lazy(g: &Graph, f: &Walk, h: &Walk) -> Result<bool, WalkError> {
    same_len(f, h)?;
    f.check_vertices(g)?;
    h.check_vertices(g)?;
    Ok(f.steps().zip(h.steps()).all(|((a, b), (c, d))| {
        (g.is_adjacent(a, b) && c == d) || (a == b && g.is_adjacent(c, d))
    }))
}

/// Opposite lazy pair of length `2l - 1` induced by two tracks of length `l`:
/// the first player moves on even steps, the second on odd steps, each
/// replaying its own track.
pub fn induce_opposite(g: &Graph, f: &Walk, h: &Walk) -> Result<(Walk, Walk), WalkError> {
    same_len(f, h)?;
    if !classify(g, f)?.is_track || !classify(g, h)?.is_track {
        return Err(WalkError::NotATrack);
    }
    let l = f.len();
    let first = (0..2 * l - 1).map(|i| f.0[i.div_ceil(2)]).collect();
    let second = (0..2 * l - 1).map(|i| h.0[i / 2]).collect();
    Ok((Walk(first), Walk(second)))
}
