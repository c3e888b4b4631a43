//! Legendrian links in grid position and their realization on Milnor-fibre
//! pages.

mod bridge;
mod front;
mod grid;
mod page;

use thiserror::Error;

pub use bridge::{square_bridge, square_bridge_of, ComponentSegments, SquareBridgeData};
pub use front::{component_segments, crossing_sign, front_invariants, linking_matrix, FrontInvariants, Segment};
pub use grid::{ComponentLabel, GridComponent, GridDiagram, Role};
pub use page::{
    embed_on_page, embed_on_page_with, puncture_page, puncture_page_at, suspend_component, EmbeddedComponent,
    FiberEmbedding, PunctureSite,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbedError {
    #[error("malformed grid: {0}")]
    MalformedGrid(String),
    #[error("grid parse error at line {line}: {msg}")]
    GridParse { line: usize, msg: String },
    #[error("component {component}: page framing {page_framing} differs from tb {tb}")]
    FramingMismatch {
        component: usize,
        tb: i64,
        page_framing: i64,
    },
    #[error("component {component} cannot be suspended: {reason}")]
    NotDiskBounding { component: usize, reason: String },
    #[error("puncture collides with the link: {0}")]
    PlacementCollision(String),
    #[error("no component with id {0}")]
    UnknownComponent(usize),
}
