use serde::{Deserialize, Serialize};

use super::grid::GridDiagram;

/// Square bridge position read off a grid: each column gives one vertical
/// segment and each row one horizontal segment. Verticals pass over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareBridgeData {
    pub horizontal_segments: usize,
    pub vertical_segments: usize,
    pub components: Vec<ComponentSegments>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSegments {
    pub id: usize,
    /// `(column, low row, high row)`, rows from the bottom.
    pub vertical: Vec<(usize, usize, usize)>,
    /// `(row, left column, right column)`, rows from the bottom.
    pub horizontal: Vec<(usize, usize, usize)>,
}

fn segments_of(grid: &GridDiagram, ids: Option<&[usize]>) -> SquareBridgeData {
    let n = grid.size();
    let up = |r: usize| n - 1 - r;
    let mut components = Vec::new();
    for comp in grid.components() {
        if ids.is_some_and(|ids| !ids.contains(&comp.id)) {
            continue;
        }
        let k = comp.corners.len();
        let mut vertical = Vec::new();
        let mut horizontal = Vec::new();
        for i in (0..k).step_by(2) {
            let (xr, c) = comp.corners[i];
            let (or, _) = comp.corners[i + 1];
            vertical.push((c, up(xr).min(up(or)), up(xr).max(up(or))));
            let (_, c_next) = comp.corners[(i + 2) % k];
            horizontal.push((up(or), c.min(c_next), c.max(c_next)));
        }
        components.push(ComponentSegments {
            id: comp.id,
            vertical,
            horizontal,
        });
    }
    SquareBridgeData {
        horizontal_segments: components.iter().map(|c| c.horizontal.len()).sum(),
        vertical_segments: components.iter().map(|c| c.vertical.len()).sum(),
        components,
    }
}

pub fn square_bridge(grid: &GridDiagram) -> SquareBridgeData {
    segments_of(grid, None)
}

/// Square bridge data restricted to some components; rows and columns used
/// only by the others are empty and not counted.
pub fn square_bridge_of(grid: &GridDiagram, ids: &[usize]) -> SquareBridgeData {
    segments_of(grid, Some(ids))
}
