use std::fmt::Write as _;
use std::path::Path;

use brieskorn_core::compiler::class_string;
use brieskorn_core::legendrian::linking_matrix;
use brieskorn_core::{default_critical_locus, embed_on_page, front_invariants, DimMode, GridDiagram};

use crate::record::{to_json_lines, Record};
use crate::{file_name, numfmt, read_input, CliError, Format};

pub fn embed_output(path: &Path, seed: u64, format: Format) -> Result<String, CliError> {
    let grid: GridDiagram = read_input(path)?.parse()?;
    let embedding = embed_on_page(&grid)?;
    let fronts = front_invariants(&grid);
    let linking = linking_matrix(&grid);
    let (p, q) = (embedding.p(), embedding.q());
    let curve = embedding.graph(DimMode::Curve);

    Ok(match format {
        Format::Report => {
            let eps = default_critical_locus(p, q, 0, seed)?.epsilon();
            let mut out = String::new();
            let _ = writeln!(
                out,
                "grid: {} (size {}, components: {})",
                file_name(path),
                grid.size(),
                grid.component_count()
            );
            let _ = writeln!(
                out,
                "page: V_{}({p},{q}), chi = {}",
                numfmt::real(eps),
                embedding.euler_characteristic()
            );
            for (c, f) in embedding.components().iter().zip(&fronts) {
                let label = match &c.label {
                    Some(l) => format!(" [{}{}]", l.role.as_str(), if l.disk { ", disk" } else { "" }),
                    None => String::new(),
                };
                let verdict = if c.page_framing == c.tb { "OK" } else { "MISMATCH" };
                let _ = writeln!(
                    out,
                    "component {}{label}: tb={}, page=({p},{q}), page_framing={}, {verdict}",
                    c.id, c.tb, c.page_framing
                );
                let _ = writeln!(out, "  writhe {}, cusps {}", f.writhe, f.cusps);
                let _ = writeln!(out, "  class: {}", class_string(&curve, &c.homology_class));
            }
            if linking.len() > 1 {
                let _ = writeln!(out, "linking matrix:");
                for row in &linking {
                    let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                    let _ = writeln!(out, "  [{}]", cells.join(" "));
                }
            }
            out
        }
        Format::Dot => {
            let mut out = String::new();
            let _ = writeln!(out, "graph page_{p}_{q} {{");
            for k in 0..curve.len() {
                let _ = writeln!(out, "  {};", curve.label(k));
            }
            for (a, b, sign) in curve.edges() {
                let _ = writeln!(out, "  {} -- {} [sign={sign}];", curve.label(a), curve.label(b));
            }
            for c in embedding.components() {
                let node = format!("\"K{}\"", c.id);
                let _ = writeln!(out, "  {node} [shape=box, tb={}];", c.tb);
                for (k, &v) in c.homology_class.iter().enumerate() {
                    if v != 0 {
                        let _ = writeln!(out, "  {node} -- {} [coefficient={v}, style=dashed];", curve.label(k));
                    }
                }
            }
            out.push_str("}\n");
            out
        }
        Format::JsonLines => to_json_lines(&[Record::Embedding {
            grid_file: file_name(path),
            embedding,
            fronts,
            linking,
        }])?,
    })
}
