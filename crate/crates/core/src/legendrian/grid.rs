use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::EmbedError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Dotted,
    Dashed,
    Solid,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Dotted => "dotted",
            Role::Dashed => "dashed",
            Role::Solid => "solid",
        }
    }
}

impl FromStr for Role {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dotted" => Ok(Role::Dotted),
            "dashed" => Ok(Role::Dashed),
            "solid" => Ok(Role::Solid),
            other => Err(format!("unknown role {other:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComponentLabel {
    pub id: usize,
    pub role: Role,
    /// Declared to bound a Lagrangian disk.
    pub disk: bool,
}

/// Grid diagram. `x_markers[c]` is the row of the X in column `c`, rows
/// counted from the top; likewise for O.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridDiagram {
    n: usize,
    x_markers: Vec<usize>,
    o_markers: Vec<usize>,
    labels: Vec<ComponentLabel>,
}

/// One link component as its cyclic list of corners `(row, column)`:
/// X of a column, O of the same column, X of the next column, ...
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridComponent {
    pub id: usize,
    pub corners: Vec<(usize, usize)>,
}

impl GridComponent {
    pub fn columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.corners.iter().step_by(2).map(|&(_, c)| c)
    }

    pub fn rows(&self) -> impl Iterator<Item = usize> + '_ {
        self.corners.iter().skip(1).step_by(2).map(|&(r, _)| r)
    }
}

fn is_permutation(v: &[usize]) -> bool {
    let mut seen = vec![false; v.len()];
    for &x in v {
        if x >= v.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

impl GridDiagram {
    pub fn new(x_markers: Vec<usize>, o_markers: Vec<usize>, labels: Vec<ComponentLabel>) -> Result<Self, EmbedError> {
        let n = x_markers.len();
        if o_markers.len() != n {
            return Err(EmbedError::MalformedGrid(format!(
                "{n} X markers but {} O markers",
                o_markers.len()
            )));
        }
        if !is_permutation(&x_markers) || !is_permutation(&o_markers) {
            return Err(EmbedError::MalformedGrid(
                "each row and column needs exactly one X and one O".into(),
            ));
        }
        if let Some(c) = (0..n).find(|&c| x_markers[c] == o_markers[c]) {
            return Err(EmbedError::MalformedGrid(format!("X and O share a cell in column {c}")));
        }
        let mut g = GridDiagram {
            n,
            x_markers,
            o_markers,
            labels: Vec::new(),
        };
        let count = g.component_count();
        for l in &labels {
            if l.id >= count {
                return Err(EmbedError::UnknownComponent(l.id));
            }
        }
        for (k, l) in labels.iter().enumerate() {
            if labels[..k].iter().any(|m| m.id == l.id) {
                return Err(EmbedError::MalformedGrid(format!("component {} labelled twice", l.id)));
            }
        }
        g.labels = labels;
        Ok(g)
    }

    pub fn empty() -> Self {
        GridDiagram {
            n: 0,
            x_markers: Vec::new(),
            o_markers: Vec::new(),
            labels: Vec::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn x_markers(&self) -> &[usize] {
        &self.x_markers
    }

    pub fn o_markers(&self) -> &[usize] {
        &self.o_markers
    }

    pub fn labels(&self) -> &[ComponentLabel] {
        &self.labels
    }

    pub fn label(&self, id: usize) -> Option<&ComponentLabel> {
        self.labels.iter().find(|l| l.id == id)
    }

    pub fn with_labels(&self, labels: Vec<ComponentLabel>) -> Result<Self, EmbedError> {
        GridDiagram::new(self.x_markers.clone(), self.o_markers.clone(), labels)
    }

    /// Components ordered by their lowest column.
    pub fn components(&self) -> Vec<GridComponent> {
        let mut x_in_row = vec![0; self.n];
        for (c, &r) in self.x_markers.iter().enumerate() {
            x_in_row[r] = c;
        }
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut corners = Vec::new();
            let mut c = start;
            loop {
                seen[c] = true;
                corners.push((self.x_markers[c], c));
                corners.push((self.o_markers[c], c));
                c = x_in_row[self.o_markers[c]];
                if c == start {
                    break;
                }
            }
            out.push(GridComponent { id: out.len(), corners });
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Left-right reflection.
    pub fn mirror(&self) -> Self {
        let flip = |v: &[usize]| v.iter().rev().copied().collect::<Vec<_>>();
        let mut g = GridDiagram {
            n: self.n,
            x_markers: flip(&self.x_markers),
            o_markers: flip(&self.o_markers),
            labels: Vec::new(),
        };
        // component ids follow lowest column, which reflection reverses
        let old = self.components();
        let new = g.components();
        g.labels = self
            .labels
            .iter()
            .map(|l| {
                let probe = self.n - 1 - old[l.id].columns().next().expect("nonempty component");
                let id = new
                    .iter()
                    .position(|nc| nc.columns().any(|c| c == probe))
                    .expect("reflected");
                ComponentLabel { id, ..*l }
            })
            .collect();
        g.labels.sort_by_key(|l| l.id);
        g
    }

    /// Cyclic shift of columns by `dc` and rows by `dr`.
    pub fn translate(&self, dc: usize, dr: usize) -> Self {
        let n = self.n;
        let mut x = vec![0; n];
        let mut o = vec![0; n];
        for c in 0..n {
            x[(c + dc) % n] = (self.x_markers[c] + dr) % n;
            o[(c + dc) % n] = (self.o_markers[c] + dr) % n;
        }
        GridDiagram::new(x, o, Vec::new()).expect("translation preserves validity")
    }

    /// Grid with one component removed and its rows and columns deleted.
    pub fn delete_component(&self, id: usize) -> Result<Self, EmbedError> {
        let comps = self.components();
        let comp = comps.get(id).ok_or(EmbedError::UnknownComponent(id))?;
        let cols: Vec<usize> = comp.columns().collect();
        let rows: Vec<usize> = comp.rows().collect();
        let keep_cols: Vec<usize> = (0..self.n).filter(|c| !cols.contains(c)).collect();
        let row_map = |r: usize| r - rows.iter().filter(|&&d| d < r).count();
        let x = keep_cols.iter().map(|&c| row_map(self.x_markers[c])).collect();
        let o = keep_cols.iter().map(|&c| row_map(self.o_markers[c])).collect();
        let mut g = GridDiagram::new(x, o, Vec::new())?;
        // surviving ids shift down past the deleted one, order is kept
        g.labels = self
            .labels
            .iter()
            .filter(|l| l.id != id)
            .map(|l| ComponentLabel {
                id: if l.id > id { l.id - 1 } else { l.id },
                ..*l
            })
            .collect();
        Ok(g)
    }

    /// Block-diagonal union; later grids sit below and to the right.
    pub fn split_union(grids: &[GridDiagram]) -> Self {
        let mut x = Vec::new();
        let mut o = Vec::new();
        let mut labels = Vec::new();
        let mut offset = 0;
        let mut id_offset = 0;
        for g in grids {
            x.extend(g.x_markers.iter().map(|r| r + offset));
            o.extend(g.o_markers.iter().map(|r| r + offset));
            labels.extend(g.labels.iter().map(|l| ComponentLabel {
                id: l.id + id_offset,
                ..*l
            }));
            offset += g.n;
            id_offset += g.component_count();
        }
        GridDiagram::new(x, o, labels).expect("block union of valid grids")
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for GridDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "grid {}", self.n)?;
        for r in 0..self.n {
            let line: String = (0..self.n)
                .map(|c| {
                    if self.x_markers[c] == r {
                        'X'
                    } else if self.o_markers[c] == r {
                        'O'
                    } else {
                        '.'
                    }
                })
                .collect();
            writeln!(f, "{line}")?;
        }
        for l in &self.labels {
            writeln!(f, "component {} role={} disk={}", l.id, l.role.as_str(), l.disk)?;
        }
        Ok(())
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> EmbedError {
    EmbedError::GridParse { line, msg: msg.into() }
}

fn parse_label(lineno: usize, line: &str) -> Result<ComponentLabel, EmbedError> {
    let mut it = line.split_whitespace();
    if it.next() != Some("component") {
        return Err(parse_err(lineno, format!("expected a component line, got {line:?}")));
    }
    let id = it
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| parse_err(lineno, "component id must be a nonnegative integer"))?;
    let mut role = None;
    let mut disk = None;
    for kv in it {
        match kv.split_once('=') {
            Some(("role", v)) if role.is_none() => role = Some(v.parse::<Role>().map_err(|e| parse_err(lineno, e))?),
            Some(("disk", v)) if disk.is_none() => {
                disk = Some(
                    v.parse::<bool>()
                        .map_err(|_| parse_err(lineno, format!("disk must be true or false, got {v:?}")))?,
                )
            }
            _ => return Err(parse_err(lineno, format!("unexpected field {kv:?}"))),
        }
    }
    Ok(ComponentLabel {
        id,
        role: role.ok_or_else(|| parse_err(lineno, "missing role="))?,
        disk: disk.ok_or_else(|| parse_err(lineno, "missing disk="))?,
    })
}

impl FromStr for GridDiagram {
    type Err = EmbedError;

    fn from_str(text: &str) -> Result<Self, EmbedError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty grid file"))?;
        let n: usize = header
            .strip_prefix("grid ")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| parse_err(1, format!("expected \"grid <n>\", got {header:?}")))?;
        let mut x = vec![None; n];
        let mut o = vec![None; n];
        for r in 0..n {
            let (lineno, row) = lines.next().ok_or_else(|| parse_err(r + 2, "missing grid row"))?;
            let cells: Vec<char> = row.chars().collect();
            if cells.len() != n {
                return Err(parse_err(
                    lineno,
                    format!("row has {} cells, expected {n}", cells.len()),
                ));
            }
            for (c, ch) in cells.into_iter().enumerate() {
                let slot = match ch {
                    'X' => &mut x[c],
                    'O' => &mut o[c],
                    '.' => continue,
                    other => return Err(parse_err(lineno, format!("unexpected character {other:?}"))),
                };
                if slot.replace(r).is_some() {
                    return Err(parse_err(lineno, format!("column {c} has two {ch} markers")));
                }
            }
        }
        let mut labels = Vec::new();
        for (lineno, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            labels.push(parse_label(lineno, line)?);
        }
        let collect = |v: Vec<Option<usize>>, what: char| -> Result<Vec<usize>, EmbedError> {
            v.into_iter()
                .enumerate()
                .map(|(c, m)| m.ok_or_else(|| EmbedError::MalformedGrid(format!("column {c} has no {what} marker"))))
                .collect()
        };
        GridDiagram::new(collect(x, 'X')?, collect(o, 'O')?, labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const UNKNOT: &str = "grid 2\nXO\nOX\ncomponent 0 role=solid disk=true\n";

    #[test]
    fn parse_unknot() {
        let g: GridDiagram = UNKNOT.parse().unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(g.x_markers(), &[0, 1]);
        assert_eq!(g.o_markers(), &[1, 0]);
        assert_eq!(g.component_count(), 1);
        assert_eq!(g.label(0).unwrap().role, Role::Solid);
        assert_eq!(g.to_string(), UNKNOT);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            "grid 2\nXO\nXO\n".parse::<GridDiagram>(),
            Err(EmbedError::GridParse { .. })
        ));
        assert!(matches!(
            "grid 2\nX.\n.X\n".parse::<GridDiagram>(),
            Err(EmbedError::MalformedGrid(_))
        ));
        assert!(matches!(
            "grid 2\nXO\n".parse::<GridDiagram>(),
            Err(EmbedError::GridParse { line: 3, .. })
        ));
        assert!(matches!(
            "grid two\n".parse::<GridDiagram>(),
            Err(EmbedError::GridParse { line: 1, .. })
        ));
        assert!(matches!(
            "grid 2\nXO\nOX\ncomponent 0 role=solid\n".parse::<GridDiagram>(),
            Err(EmbedError::GridParse { line: 4, .. })
        ));
        assert!(matches!(
            "grid 2\nXO\nOX\ncomponent 3 role=solid disk=true\n".parse::<GridDiagram>(),
            Err(EmbedError::UnknownComponent(3))
        ));
        assert!(matches!(
            "grid 2\nXO\nOX\ncomponent 0 role=loose disk=true\n".parse::<GridDiagram>(),
            Err(EmbedError::GridParse { line: 4, .. })
        ));
    }

    #[test]
    fn split_union_and_delete() {
        let u: GridDiagram = UNKNOT.parse().unwrap();
        let two = GridDiagram::split_union(&[u.clone(), u.clone()]);
        assert_eq!(two.size(), 4);
        assert_eq!(two.component_count(), 2);
        assert_eq!(two.labels().len(), 2);
        assert_eq!(two.labels()[1].id, 1);
        let one = two.delete_component(0).unwrap();
        assert_eq!(one, u);
    }

    #[test]
    fn empty_grid() {
        let g: GridDiagram = "grid 0\n".parse().unwrap();
        assert_eq!(g, GridDiagram::empty());
        assert_eq!(g.component_count(), 0);
        assert_eq!(g.to_string(), "grid 0\n");
    }
}
