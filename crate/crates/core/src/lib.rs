//! Spans of graphs: how far apart two players can stay while both of them
//! visit every vertex, or traverse every edge, of a connected graph.
//!
//! Three movement rules are supported. Under the strong (traditional) rule
//! each player moves or stays independently, under the direct (active) rule
//! both move at every step, and under the Cartesian (lazy) rule exactly one
//! of them moves. Each rule gives a vertex span and an edge span.

pub mod cli;
pub mod family;
pub mod fixtures;
pub mod graph;
pub mod minlen;
pub mod postman;
pub mod span;
pub mod walk;

pub use minlen::{MinLenReport, DEFAULT_BUDGET};
pub use graph::{FamilySpec, Graph, GraphError, Vertex};
pub use span::{MovementRule, SpanReport, SpanTable, Target};
pub use walk::{Walk, WalkClass, WalkError};
