//! Grid to Legendrian front.
//!
//! The grid is rotated 45° counterclockwise. Vertical segments pass over
//! horizontal ones, and the corners whose two segments leave towards north
//! and west, or towards south and east, become cusps.

use serde::{Deserialize, Serialize};

use super::grid::GridDiagram;

/// Segment in plane coordinates (x = column, y = row counted from the bottom).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub from: (i64, i64),
    pub to: (i64, i64),
}

impl Segment {
    pub fn is_vertical(&self) -> bool {
        self.from.0 == self.to.0
    }

    fn direction(&self) -> (i64, i64) {
        ((self.to.0 - self.from.0).signum(), (self.to.1 - self.from.1).signum())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrontInvariants {
    pub tb: i64,
    pub writhe: i64,
    pub cusps: i64,
}

/// Oriented closed polygon of every component, X→O vertically, O→X
/// horizontally.
pub fn component_segments(grid: &GridDiagram) -> Vec<Vec<Segment>> {
    let n = grid.size() as i64;
    grid.components()
        .iter()
        .map(|comp| {
            let pts: Vec<(i64, i64)> = comp
                .corners
                .iter()
                .map(|&(r, c)| (c as i64, n - 1 - r as i64))
                .collect();
            (0..pts.len())
                .map(|k| Segment {
                    from: pts[k],
                    to: pts[(k + 1) % pts.len()],
                })
                .collect()
        })
        .collect()
}

/// Sign of the crossing where vertical `over` passes above horizontal
/// `under`, or 0 when they do not cross.
pub fn crossing_sign(over: &Segment, under: &Segment) -> i64 {
    if !over.is_vertical() || under.is_vertical() {
        return 0;
    }
    let x = over.from.0;
    let y = under.from.1;
    let inside = |v: i64, a: i64, b: i64| a.min(b) < v && v < a.max(b);
    if !inside(x, under.from.0, under.to.0) || !inside(y, over.from.1, over.to.1) {
        return 0;
    }
    let (ox, oy) = over.direction();
    let (ux, uy) = under.direction();
    ox * uy - oy * ux
}

fn mixed_crossings(a: &[Segment], b: &[Segment]) -> i64 {
    let mut s = 0;
    for u in a {
        for v in b {
            s += crossing_sign(u, v) + crossing_sign(v, u);
        }
    }
    s
}

fn count_cusps(segs: &[Segment]) -> i64 {
    let m = segs.len();
    let mut cusps = 0;
    for k in 0..m {
        let incoming = segs[(k + m - 1) % m];
        let outgoing = segs[k];
        let p = outgoing.from;
        let away = |q: (i64, i64)| ((q.0 - p.0).signum(), (q.1 - p.1).signum());
        let dirs = [away(incoming.from), away(outgoing.to)];
        let has = |d: (i64, i64)| dirs.contains(&d);
        let (north, south, east, west) = ((0, 1), (0, -1), (1, 0), (-1, 0));
        if (has(north) && has(west)) || (has(south) && has(east)) {
            cusps += 1;
        }
    }
    cusps
}

pub fn front_invariants(grid: &GridDiagram) -> Vec<FrontInvariants> {
    component_segments(grid)
        .iter()
        .map(|segs| {
            let writhe: i64 = segs
                .iter()
                .map(|u| segs.iter().map(|v| crossing_sign(u, v)).sum::<i64>())
                .sum();
            let cusps = count_cusps(segs);
            debug_assert!(cusps % 2 == 0, "a closed front has an even number of cusps");
            FrontInvariants {
                tb: writhe - cusps / 2,
                writhe,
                cusps,
            }
        })
        .collect()
}

/// Pairwise linking numbers; the diagonal holds 0.
pub fn linking_matrix(grid: &GridDiagram) -> Vec<Vec<i64>> {
    let segs = component_segments(grid);
    let k = segs.len();
    let mut lk = vec![vec![0; k]; k];
    for a in 0..k {
        for b in a + 1..k {
            let s = mixed_crossings(&segs[a], &segs[b]);
            debug_assert!(s % 2 == 0);
            lk[a][b] = s / 2;
            lk[b][a] = s / 2;
        }
    }
    lk
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(x: &[usize], o: &[usize]) -> GridDiagram {
        GridDiagram::new(x.to_vec(), o.to_vec(), Vec::new()).unwrap()
    }

    #[test]
    fn unknots_have_tb_minus_one() {
        for g in [grid(&[0, 1], &[1, 0]), grid(&[1, 0], &[0, 1])] {
            let inv = front_invariants(&g);
            assert_eq!(inv.len(), 1);
            assert_eq!(inv[0].tb, -1);
            assert_eq!(inv[0].writhe, 0);
            assert_eq!(inv[0].cusps, 2);
        }
    }

    #[test]
    fn split_unknots() {
        let g = grid(&[0, 1, 2, 3], &[1, 0, 3, 2]);
        let inv = front_invariants(&g);
        assert_eq!(inv.iter().map(|i| i.tb).collect::<Vec<_>>(), vec![-1, -1]);
        assert_eq!(linking_matrix(&g), vec![vec![0, 0], vec![0, 0]]);
    }

    #[test]
    fn trefoil_grid() {
        // 5×5 grid of a right-handed trefoil: tb = 1
        let g = grid(&[0, 1, 2, 3, 4], &[2, 3, 4, 0, 1]);
        let inv = front_invariants(&g);
        assert_eq!(inv.len(), 1);
        assert_eq!(inv[0].writhe.abs(), 3);
        let m = front_invariants(&g.mirror());
        assert_eq!(m[0].writhe, -inv[0].writhe);
    }
}
