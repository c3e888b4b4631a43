use serde::{Deserialize, Serialize};

use super::diagram::{ComponentRef, RelativeSteinDiagram};
use super::CompileError;
use crate::brieskorn::{default_critical_locus, milnor_numbers};
use crate::cycle_graph::{build_graph, monodromy_matrix, CycleError, DimMode, TwistWord};
use crate::legendrian::{embed_on_page, puncture_page, suspend_component, EmbedError, GridDiagram};
use crate::matrix::{char_poly, CharPoly, IntMatrix};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PageDescription {
    pub mode: DimMode,
    /// e.g. `V_1(2,2,2)`
    pub label: String,
    pub p: u32,
    pub q: u32,
    pub punctures: usize,
    /// 2-handles on the sphere page, 1-handles on the curve page.
    pub handles: usize,
    pub euler_characteristic: i64,
}

/// A relative 2-handle: its diagram position, framing and attaching class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HandleRecord {
    pub name: String,
    pub component: ComponentRef,
    pub framing: i64,
    pub class: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelativeFibrationDescriptor {
    pub p: u32,
    pub q: u32,
    pub epsilon: f64,
    pub punctures: usize,
    pub stein_pair: String,
    pub boundary_pair: String,
    pub handle_decomposition_tag: String,
    /// `(sphere page of W, curve page of X)`
    pub page_pair: (PageDescription, PageDescription),
    /// `(word for W, word for X)`
    pub monodromy_pair: (TwistWord, TwistWord),
    pub monodromy_matrices: (IntMatrix, IntMatrix),
    pub char_polys: (CharPoly, CharPoly),
    pub dashed_handles: Vec<HandleRecord>,
    pub solid_count: usize,
    pub notes: Vec<String>,
}

impl RelativeFibrationDescriptor {
    pub fn page_pair_label(&self) -> String {
        format!("({}, {})", self.page_pair.0.label, self.page_pair.1.label)
    }
}

fn fmt_eps(eps: f64) -> String {
    format!("{eps}")
}

fn boundary_names(d: &RelativeSteinDiagram, single_unknot: bool) -> (String, String) {
    let r = d.r;
    let sum = |body: &str| match r {
        0 => unreachable!(),
        1 => body.to_string(),
        _ => format!("#_{r} {body}"),
    };
    let bound = |body: &str| match r {
        1 => body.to_string(),
        _ => format!("♮_{r} {body}"),
    };
    if d.dashed.is_empty() && d.solid.is_empty() {
        if r == 0 {
            return ("(D^6, D^4)".into(), "(S^5, S^3)".into());
        }
        return (
            format!("({}, {})", bound("S^1×D^5"), bound("S^1×D^3")),
            format!("({}, {})", sum("S^1×S^4"), sum("S^1×S^2")),
        );
    }
    if r == 0 && d.dashed.is_empty() && single_unknot {
        return ("(D(T*S^3), D(T*S^2))".into(), "(ST*S^3, ST*S^2)".into());
    }
    let base = if r == 0 {
        "(S^5, S^3)".to_string()
    } else {
        format!("({}, {})", sum("S^1×S^4"), sum("S^1×S^2"))
    };
    let pair = format!(
        "(D^6, D^4) with {r} 1-handle pairs, {} 2-handle pairs, {} 3-handle pairs",
        d.dashed.len(),
        d.solid.len()
    );
    (
        pair,
        format!(
            "surgery on {base} along dashed: {}, solid: {}",
            d.dashed.len(),
            d.solid.len()
        ),
    )
}

fn embedding_error(e: EmbedError) -> CompileError {
    CompileError::Embedding(e)
}

pub fn compile(diagram: &RelativeSteinDiagram) -> Result<RelativeFibrationDescriptor, CompileError> {
    // one common page: the block union of all referenced grids
    let grids: Vec<GridDiagram> = diagram.grids.iter().map(|(_, g)| g.clone()).collect();
    let union = GridDiagram::split_union(&grids);
    let offset_of = |file: &str| -> usize {
        diagram
            .grids
            .iter()
            .take_while(|(f, _)| f != file)
            .map(|(_, g)| g.component_count())
            .sum()
    };
    let global = |c: &ComponentRef| offset_of(&c.grid_file) + c.component;

    let embedding = embed_on_page(&union).map_err(embedding_error)?;
    let mut embedding = puncture_page(&embedding, diagram.r).map_err(embedding_error)?;
    let (p, q) = (embedding.p(), embedding.q());
    let mu = milnor_numbers(p, q).mu as usize;

    let curve = build_graph(p, q, DimMode::Curve);
    let sphere = build_graph(p, q, DimMode::Sphere);
    let mut down = TwistWord::torus_word(&curve);
    let mut up = TwistWord::torus_word(&sphere);
    let mut notes = Vec::new();

    let mut dashed_handles = Vec::new();
    for (k, d) in diagram.dashed.iter().enumerate() {
        let class = embedding
            .component(global(&d.component))
            .map_err(embedding_error)?
            .homology_class
            .clone();
        let (dn, un) = (format!("K'_{}", k + 1), format!("L'_{}", k + 1));
        sphere.check_cycle(&class).map_err(|e| {
            CompileError::Cycle(CycleError::InvalidCycle(format!(
                "dashed component {} of {}: suspended class is not a -2 sphere ({e})",
                d.component.component, d.component.grid_file
            )))
        })?;
        down.push_extra(dn, class.clone());
        up.push_extra(un.clone(), class.clone());
        dashed_handles.push(HandleRecord {
            name: un,
            component: d.component.clone(),
            framing: d.framing,
            class,
        });
    }

    for (j, s) in diagram.solid.iter().enumerate() {
        let id = global(s);
        embedding = suspend_component(&embedding, id).map_err(|e| match e {
            EmbedError::NotDiskBounding { reason, .. } => CompileError::NotSuspendible {
                component: s.component,
                grid_file: s.grid_file.clone(),
                reason,
            },
            other => CompileError::Embedding(other),
        })?;
        let comp = embedding.component(id).map_err(embedding_error)?;
        if comp.self_pairing != -2 {
            return Err(CompileError::Cycle(CycleError::InvalidCycle(format!(
                "solid component {} of {}: suspended class has self-pairing {}, not -2",
                s.component, s.grid_file, comp.self_pairing
            ))));
        }
        down.push_extra(format!("K_{}", j + 1), comp.homology_class.clone());
        up.push_extra(format!("L_{}", j + 1), comp.homology_class.clone());
    }

    for (k, x) in up.extra_cycles().iter().enumerate() {
        let nonzero: Vec<usize> = (0..x.class.len()).filter(|&i| x.class[i] != 0).collect();
        if let [i] = nonzero.as_slice() {
            if x.class[*i].abs() == 1 {
                notes.push(format!(
                    "letter {} / {} is homologous to {}{}, so it acts by the same transvection as the torus letter {}",
                    x.name,
                    down.extra_cycles()[k].name,
                    if x.class[*i] < 0 { "-" } else { "" },
                    sphere.label(*i),
                    sphere.label(*i)
                ));
            }
        }
    }
    if diagram.r > 0 {
        notes.push(format!(
            "monodromies extend by the identity over the {} puncture{}",
            diagram.r,
            if diagram.r == 1 { "" } else { "s" }
        ));
    }

    let m_up = monodromy_matrix(&up)?;
    let m_down = monodromy_matrix(&down)?;
    let epsilon = default_critical_locus(p, q, 0, 0)?.epsilon();
    let euler = milnor_numbers(p, q).euler_char;
    let r = diagram.r;
    let nd = diagram.dashed.len();
    // a grid component with two columns is a rectangle, hence an unknot
    let single_unknot = diagram.solid.len() == 1
        && embedding
            .component(global(&diagram.solid[0]))
            .is_ok_and(|c| c.placement.len() == 4);
    let (stein_pair, boundary_pair) = boundary_names(diagram, single_unknot);
    if single_unknot && r == 0 && nd == 0 {
        notes.push(
            "the word pair keeps the torus letter and the solid letter as separate twists, so it has length 2 per side, not 1"
                .into(),
        );
    }
    let e = fmt_eps(epsilon);
    Ok(RelativeFibrationDescriptor {
        p,
        q,
        epsilon,
        punctures: r,
        stein_pair,
        boundary_pair,
        handle_decomposition_tag: diagram.handle_decomposition_tag.clone(),
        page_pair: (
            PageDescription {
                mode: DimMode::Sphere,
                label: format!("V_{e}({p},{q},2)"),
                p,
                q,
                punctures: r,
                handles: 2 * nd,
                euler_characteristic: 1 + mu as i64 - r as i64 + 2 * nd as i64,
            },
            PageDescription {
                mode: DimMode::Curve,
                label: format!("V_{e}({p},{q})"),
                p,
                q,
                punctures: r,
                handles: nd,
                euler_characteristic: euler - r as i64 - nd as i64,
            },
        ),
        char_polys: (char_poly(&m_up), char_poly(&m_down)),
        monodromy_matrices: (m_up, m_down),
        monodromy_pair: (up, down),
        dashed_handles,
        solid_count: diagram.solid.len(),
        notes,
    })
}
