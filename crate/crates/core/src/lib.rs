//! Morsified Brieskorn Lefschetz fibrations, vanishing-cycle monodromy,
//! Legendrian links on Milnor-fibre pages and relative Stein diagram
//! compilation.

pub mod brieskorn;
pub mod compiler;
pub mod cycle_graph;
pub mod legendrian;
pub mod matrix;

pub use brieskorn::{
    critical_locus, default_critical_locus, milnor_numbers, suspend, BrieskornError, CriticalLocus, CriticalPoint,
    MilnorNumbers, MorsifiedBrieskornMap,
};
pub use compiler::{
    compile, parse_diagram, validate_fibration, CompileError, RelativeFibrationDescriptor, RelativeSteinDiagram,
};
pub use cycle_graph::{
    build_graph, monodromy_matrix, transvection, CycleError, DimMode, Letter, TwistWord, VanishingCycleGraph,
};
pub use legendrian::{embed_on_page, front_invariants, EmbedError, FiberEmbedding, GridDiagram};
pub use matrix::{char_poly, CharPoly, IntMatrix};
