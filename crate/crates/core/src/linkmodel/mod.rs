//! Links and surface loops, plus the topological integers every other
//! subsystem consumes: linking number, intersection number and writhe.

mod braid;
mod io;
mod pd;
mod torus;

pub use braid::{parse_braid, parse_braid_with_strands, BraidWord};
pub use io::{parse_link_json, parse_torus_loop_json};
pub use pd::{braid_closure, disjoint_union, Crossing, LinkingMatrix, PDCode};
pub use torus::{intersection_number, TorusLoop};

pub(crate) use pd::UnionFind;

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum LinkError {
    #[error("malformed braid token `{0}`")]
    MalformedToken(String),
    #[error("zero generator index")]
    ZeroIndex,
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: i64, strands: usize },
    #[error("arc {0} appears {1} times in crossings, expected 2")]
    ArcMultiplicity(usize, usize),
    #[error("components do not partition the arc set")]
    BadComponents,
    #[error("crossing sign must be +1 or -1, got {0}")]
    BadSign(i64),
    #[error("component index {0} out of range")]
    ComponentOutOfRange(usize),
    #[error("self-linking requires framing")]
    SelfLinkingWithoutFraming,
    #[error("inter-component crossing signs do not sum to an even integer")]
    OddCrossingSum,
    #[error("loops not in generic position: perturb basepoint")]
    NonGenericPosition,
    #[error("torus loop path does not close up to its winding vector")]
    OpenPath,
    #[error("degenerate segment in torus loop path")]
    DegenerateSegment,
    #[error("intersection routes disagree: determinant {det}, segment count {count}")]
    IntersectionMismatch { det: i64, count: i64 },
    #[error("invalid link JSON: {0}")]
    BadJson(String),
}
