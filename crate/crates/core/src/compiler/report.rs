use std::fmt::Write as _;

use super::compile::RelativeFibrationDescriptor;
use super::validate::validate_fibration;
use crate::cycle_graph::{TwistWord, VanishingCycleGraph};
use crate::matrix::IntMatrix;

/// `c_1_1 + 2 c_2_1 - c_3_3`
pub fn class_string(graph: &VanishingCycleGraph, class: &[i64]) -> String {
    let mut out = String::new();
    for (k, &v) in class.iter().enumerate() {
        if v == 0 {
            continue;
        }
        let sign = if v < 0 { "-" } else { "+" };
        let mag = v.abs();
        if out.is_empty() {
            if v < 0 {
                out.push('-');
            }
        } else {
            let _ = write!(out, " {sign} ");
        }
        if mag != 1 {
            let _ = write!(out, "{mag} ");
        }
        out.push_str(&graph.label(k));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn word_line(word: &TwistWord) -> String {
    word.letter_names().join(" ")
}

fn word_shape(word: &TwistWord, prefix: &str) -> String {
    let mut parts = vec![prefix.to_string()];
    parts.extend(word.extra_cycles().iter().map(|x| format!("tau({})", x.name)));
    parts.join(" · ")
}

fn write_matrix(out: &mut String, m: &IntMatrix) {
    for row in m.to_rows() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        let _ = writeln!(out, "    [{}]", cells.join(" "));
    }
}

/// Deterministic plain-text report, validation included.
pub fn render_report(d: &RelativeFibrationDescriptor) -> String {
    let mut s = String::new();
    let (up, down) = &d.monodromy_pair;
    let (pu, pd) = &d.page_pair;
    let _ = writeln!(s, "relative fibration descriptor");
    let _ = writeln!(s, "stein pair: {}", d.stein_pair);
    let _ = writeln!(s, "boundary pair: {}", d.boundary_pair);
    let _ = writeln!(s, "handle decomposition: {}", d.handle_decomposition_tag);
    let _ = writeln!(s, "page pair: {}", d.page_pair_label());
    let _ = writeln!(s, "torus link: ({},{})", d.p, d.q);
    let _ = writeln!(s, "punctures: {}", d.punctures);
    let _ = writeln!(
        s,
        "sphere page: {}, punctures: {}, 2-handles: {}, chi = {}",
        pu.label, pu.punctures, pu.handles, pu.euler_characteristic
    );
    let _ = writeln!(
        s,
        "curve page: {}, punctures: {}, 1-handles: {}, chi = {}",
        pd.label, pd.punctures, pd.handles, pd.euler_characteristic
    );
    let _ = writeln!(s, "word length: {} / {}", up.len(), down.len());
    let _ = writeln!(
        s,
        "word shape (upstairs): {}",
        word_shape(up, &format!("phi~({},{})", d.p, d.q))
    );
    let _ = writeln!(
        s,
        "word shape (downstairs): {}",
        word_shape(down, &format!("phi({},{})", d.p, d.q))
    );
    let _ = writeln!(s, "word (upstairs): {}", word_line(up));
    let _ = writeln!(s, "word (downstairs): {}", word_line(down));
    if !up.extra_cycles().is_empty() {
        let _ = writeln!(s, "letter classes:");
        for (a, b) in up.extra_cycles().iter().zip(down.extra_cycles()) {
            let _ = writeln!(s, "  {} / {} = {}", a.name, b.name, class_string(up.graph(), &a.class));
        }
    }
    if !d.dashed_handles.is_empty() {
        let _ = writeln!(s, "dashed handles:");
        for h in &d.dashed_handles {
            let _ = writeln!(
                s,
                "  {}: {} component {}, framing {}, class {}",
                h.name,
                h.component.grid_file,
                h.component.component,
                h.framing,
                class_string(up.graph(), &h.class)
            );
        }
    }
    let _ = writeln!(s, "monodromy (upstairs):");
    write_matrix(&mut s, &d.monodromy_matrices.0);
    let _ = writeln!(s, "char poly (upstairs): {}", d.char_polys.0);
    let _ = writeln!(s, "monodromy (downstairs):");
    write_matrix(&mut s, &d.monodromy_matrices.1);
    let _ = writeln!(s, "char poly (downstairs): {}", d.char_polys.1);
    if !d.notes.is_empty() {
        let _ = writeln!(s, "notes:");
        for n in &d.notes {
            let _ = writeln!(s, "  - {n}");
        }
    }
    let report = validate_fibration(d);
    let _ = writeln!(s, "validation: {}", if report.passed() { "OK" } else { "FAILED" });
    for c in &report.checks {
        let _ = writeln!(
            s,
            "  [{}] {}: {}",
            if c.passed { "ok" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    s
}

/// Basis cycles with their signed edges, plus one box per extra letter
/// joined to the basis cycles in its class.
pub fn render_dot(d: &RelativeFibrationDescriptor) -> String {
    let (up, _) = &d.monodromy_pair;
    let g = up.graph();
    let mut s = String::new();
    let _ = writeln!(s, "graph relative_fibration_{}_{} {{", d.p, d.q);
    for k in 0..g.len() {
        let _ = writeln!(s, "  {};", g.label(k));
    }
    for (a, b, sign) in g.edges() {
        let _ = writeln!(s, "  {} -- {} [sign={sign}];", g.label(a), g.label(b));
    }
    for x in up.extra_cycles() {
        let node = format!("\"{}\"", x.name);
        let _ = writeln!(s, "  {node} [shape=box];");
        for (k, &v) in x.class.iter().enumerate() {
            if v != 0 {
                let _ = writeln!(s, "  {node} -- {} [coefficient={v}, style=dashed];", g.label(k));
            }
        }
    }
    s.push_str("}\n");
    s
}
