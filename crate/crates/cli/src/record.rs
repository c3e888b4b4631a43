use brieskorn_core::brieskorn::{CriticalPoint, MilnorNumbers, MorsifiedBrieskornMap};
use brieskorn_core::compiler::ValidationReport;
use brieskorn_core::cycle_graph::VanishingCycleGraph;
use brieskorn_core::legendrian::FrontInvariants;
use brieskorn_core::{CharPoly, DimMode, FiberEmbedding, IntMatrix, RelativeFibrationDescriptor};
use serde::{Deserialize, Serialize};

/// One line of json-lines output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "snake_case")]
pub enum Record {
    Map {
        map: MorsifiedBrieskornMap,
        epsilon: f64,
        milnor: MilnorNumbers,
    },
    CriticalPoint {
        index: usize,
        point: CriticalPoint,
    },
    /// Rationals as `n/d` strings.
    ExactPoint {
        root_index: (usize, usize),
        coords: [String; 2],
        value: String,
    },
    Mode {
        mode: DimMode,
        graph: VanishingCycleGraph,
        monodromy: IntMatrix,
        char_poly: CharPoly,
    },
    Embedding {
        grid_file: String,
        embedding: FiberEmbedding,
        fronts: Vec<FrontInvariants>,
        linking: Vec<Vec<i64>>,
    },
    Descriptor(Box<RelativeFibrationDescriptor>),
    Validation(ValidationReport),
    Note {
        text: String,
    },
}

pub(crate) fn to_json_lines(records: &[Record]) -> Result<String, serde_json::Error> {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r)?);
        out.push('\n');
    }
    Ok(out)
}

pub fn parse_json_lines(text: &str) -> Result<Vec<Record>, serde_json::Error> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(serde_json::from_str)
        .collect()
}
