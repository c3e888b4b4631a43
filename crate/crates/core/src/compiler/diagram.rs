use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::CompileError;
use crate::legendrian::{front_invariants, GridDiagram, Role};

pub const DIAGRAM_HEADER: &str = "rel-stein-diagram v1";

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComponentRef {
    /// Grid file as written in the diagram.
    pub grid_file: String,
    /// Component id inside that grid.
    pub component: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DashedEntry {
    pub component: ComponentRef,
    pub framing: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelativeSteinDiagram {
    pub r: usize,
    pub dashed: Vec<DashedEntry>,
    pub solid: Vec<ComponentRef>,
    /// Distinct grid files in order of first reference.
    pub grids: Vec<(String, GridDiagram)>,
    pub handle_decomposition_tag: String,
}

impl RelativeSteinDiagram {
    pub fn grid(&self, file: &str) -> Option<&GridDiagram> {
        self.grids.iter().find(|(f, _)| f == file).map(|(_, g)| g)
    }

    pub fn is_empty(&self) -> bool {
        self.r == 0 && self.dashed.is_empty() && self.solid.is_empty()
    }
}

impl fmt::Display for RelativeSteinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{DIAGRAM_HEADER}")?;
        writeln!(f, "dots {}", self.r)?;
        for d in &self.dashed {
            writeln!(
                f,
                "dashed {} component {} framing {}",
                d.component.grid_file, d.component.component, d.framing
            )?;
        }
        for s in &self.solid {
            writeln!(f, "solid {} component {}", s.grid_file, s.component)?;
        }
        Ok(())
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> CompileError {
    CompileError::Parse { line, msg: msg.into() }
}

enum Entry {
    Dashed(ComponentRef, i64),
    Solid(ComponentRef),
}

fn parse_entry(lineno: usize, line: &str) -> Result<Entry, CompileError> {
    let words: Vec<&str> = line.split_whitespace().collect();
    let component = |file: &str, kw: &str, id: &str| -> Result<ComponentRef, CompileError> {
        if kw != "component" {
            return Err(parse_err(lineno, format!("expected \"component\", got {kw:?}")));
        }
        Ok(ComponentRef {
            grid_file: file.to_string(),
            component: id
                .parse()
                .map_err(|_| parse_err(lineno, format!("bad component id {id:?}")))?,
        })
    };
    match words.as_slice() {
        ["dashed", file, kw, id, "framing", fr] => {
            let framing = fr
                .parse()
                .map_err(|_| parse_err(lineno, format!("bad framing {fr:?}")))?;
            Ok(Entry::Dashed(component(file, kw, id)?, framing))
        }
        ["solid", file, kw, id] => Ok(Entry::Solid(component(file, kw, id)?)),
        _ => Err(parse_err(lineno, format!("unrecognized line {line:?}"))),
    }
}

/// Parses diagram text. `load` returns the text of a grid file named in
/// the diagram; it is called once per distinct file.
pub fn parse_diagram_with<F>(text: &str, mut load: F) -> Result<RelativeSteinDiagram, CompileError>
where
    F: FnMut(&str) -> Result<String, CompileError>,
{
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    match lines.next() {
        Some((_, DIAGRAM_HEADER)) => {}
        Some((n, other)) => return Err(parse_err(n, format!("expected {DIAGRAM_HEADER:?}, got {other:?}"))),
        None => return Err(parse_err(1, "empty diagram file")),
    }
    let (n, dots) = lines.next().ok_or_else(|| parse_err(2, "missing \"dots <r>\" line"))?;
    let r = dots
        .strip_prefix("dots ")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| parse_err(n, format!("expected \"dots <r>\", got {dots:?}")))?;

    let mut dashed = Vec::new();
    let mut solid = Vec::new();
    let mut grids: Vec<(String, GridDiagram)> = Vec::new();
    let mut seen: Vec<(ComponentRef, usize)> = Vec::new();
    for (lineno, line) in lines {
        let entry = parse_entry(lineno, line)?;
        let cref = match &entry {
            Entry::Dashed(c, _) | Entry::Solid(c) => c.clone(),
        };
        if let Some((_, first)) = seen.iter().find(|(c, _)| *c == cref) {
            return Err(parse_err(
                lineno,
                format!(
                    "component {} of {} already used on line {first}",
                    cref.component, cref.grid_file
                ),
            ));
        }
        seen.push((cref.clone(), lineno));
        if !grids.iter().any(|(f, _)| *f == cref.grid_file) {
            let text = load(&cref.grid_file)?;
            let grid: GridDiagram = text.parse().map_err(|source| CompileError::Grid {
                file: cref.grid_file.clone(),
                source,
            })?;
            grids.push((cref.grid_file.clone(), grid));
        }
        let grid = &grids.iter().find(|(f, _)| *f == cref.grid_file).expect("loaded").1;
        if cref.component >= grid.component_count() {
            return Err(parse_err(
                lineno,
                format!("{} has no component {}", cref.grid_file, cref.component),
            ));
        }
        let want = match entry {
            Entry::Dashed(_, _) => Role::Dashed,
            Entry::Solid(_) => Role::Solid,
        };
        match grid.label(cref.component) {
            Some(l) if l.role == want => {}
            found => {
                return Err(CompileError::RoleMismatch(format!(
                    "line {lineno}: component {} of {} is listed as {} but labelled {}",
                    cref.component,
                    cref.grid_file,
                    want.as_str(),
                    found.map_or("nothing", |l| l.role.as_str())
                )))
            }
        }
        match entry {
            Entry::Dashed(c, framing) => {
                let tb = front_invariants(grid)[c.component].tb;
                if framing != tb - 1 {
                    return Err(CompileError::FramingViolation {
                        component: c.component,
                        grid_file: c.grid_file,
                        framing,
                        tb,
                    });
                }
                dashed.push(DashedEntry { component: c, framing });
            }
            Entry::Solid(c) => solid.push(c),
        }
    }

    // roles written in the grids must be accounted for by the diagram
    let mut dotted_in_grids = 0;
    for (file, grid) in &grids {
        for l in grid.labels() {
            match l.role {
                Role::Dotted => dotted_in_grids += 1,
                role => {
                    let cref = ComponentRef {
                        grid_file: file.clone(),
                        component: l.id,
                    };
                    if !seen.iter().any(|(c, _)| *c == cref) {
                        return Err(CompileError::RoleMismatch(format!(
                            "component {} of {file} is labelled {} but not listed",
                            l.id,
                            role.as_str()
                        )));
                    }
                }
            }
        }
    }
    if dotted_in_grids > 0 && dotted_in_grids != r {
        return Err(CompileError::RoleMismatch(format!(
            "grids carry {dotted_in_grids} dotted components but the diagram declares {r} dots"
        )));
    }

    Ok(RelativeSteinDiagram {
        r,
        handle_decomposition_tag: format!("H(r={r},dashed={})", dashed.len()),
        dashed,
        solid,
        grids,
    })
}

/// Reads a diagram file; grid paths resolve against its directory.
pub fn parse_diagram(path: &Path) -> Result<RelativeSteinDiagram, CompileError> {
    let io = |p: &Path, e: std::io::Error| CompileError::Io {
        path: p.display().to_string(),
        msg: e.to_string(),
    };
    let text = std::fs::read_to_string(path).map_err(|e| io(path, e))?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    parse_diagram_with(&text, |file| {
        let p = base.join(file);
        std::fs::read_to_string(&p).map_err(|e| io(&p, e))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const UNKNOT_SOLID: &str = "grid 2\nXO\nOX\ncomponent 0 role=solid disk=true\n";
    const UNKNOT_DASHED: &str = "grid 2\nXO\nOX\ncomponent 0 role=dashed disk=false\n";

    fn loader(files: &'static [(&'static str, &'static str)]) -> impl FnMut(&str) -> Result<String, CompileError> {
        move |name| {
            files
                .iter()
                .find(|(n, _)| *n == name)
                .map(|(_, t)| t.to_string())
                .ok_or(CompileError::Io {
                    path: name.into(),
                    msg: "missing".into(),
                })
        }
    }

    #[test]
    fn empty_diagram() {
        let d = parse_diagram_with("rel-stein-diagram v1\ndots 0\n", loader(&[])).unwrap();
        assert!(d.is_empty());
        assert_eq!(d.handle_decomposition_tag, "H(r=0,dashed=0)");
        assert_eq!(d.to_string(), "rel-stein-diagram v1\ndots 0\n");
    }

    #[test]
    fn framing_checked() {
        let files = &[("u.grid", UNKNOT_DASHED)];
        let ok = parse_diagram_with(
            "rel-stein-diagram v1\ndots 1\ndashed u.grid component 0 framing -2\n",
            loader(files),
        )
        .unwrap();
        assert_eq!(ok.dashed[0].framing, -2);
        let bad = parse_diagram_with(
            "rel-stein-diagram v1\ndots 1\ndashed u.grid component 0 framing -1\n",
            loader(files),
        );
        assert!(matches!(
            bad,
            Err(CompileError::FramingViolation {
                tb: -1,
                framing: -1,
                ..
            })
        ));
    }

    #[test]
    fn roles_checked() {
        let files = &[("u.grid", UNKNOT_SOLID)];
        let listed_wrong = parse_diagram_with(
            "rel-stein-diagram v1\ndots 0\ndashed u.grid component 0 framing -2\n",
            loader(files),
        );
        assert!(matches!(listed_wrong, Err(CompileError::RoleMismatch(_))));
        let unlisted = parse_diagram_with("rel-stein-diagram v1\ndots 0\n", loader(files));
        assert!(unlisted.is_ok(), "grids that are never referenced are not loaded");
    }

    #[test]
    fn parse_errors() {
        for text in [
            "",
            "rel-stein-diagram v2\ndots 0\n",
            "rel-stein-diagram v1\n",
            "rel-stein-diagram v1\ndots x\n",
            "rel-stein-diagram v1\ndots 0\nsolid u.grid comp 0\n",
            "rel-stein-diagram v1\ndots 0\nsolid u.grid component 0\nsolid u.grid component 0\n",
            "rel-stein-diagram v1\ndots 0\nsolid u.grid component 5\n",
            "rel-stein-diagram v1\ndots 0\nhandle u.grid component 0\n",
        ] {
            let r = parse_diagram_with(text, loader(&[("u.grid", UNKNOT_SOLID)]));
            assert!(matches!(r, Err(CompileError::Parse { .. })), "{text:?} gave {r:?}");
        }
    }
}
