use std::fmt::Write as _;

use brieskorn_core::brieskorn::{rational_critical_points, rational_to_f64};
use brieskorn_core::cycle_graph::TwistWord;
use brieskorn_core::{
    build_graph, char_poly, critical_locus, default_critical_locus, milnor_numbers, monodromy_matrix, CriticalLocus,
    DimMode, MorsifiedBrieskornMap,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::numfmt;
use crate::record::{to_json_lines, Record};
use crate::{write_matrix, CliError, DeltaValue, Format};

/// Largest denominator tried when recognising a decimal delta as a fraction.
const FRACTION_MAX_DEN: i64 = 10_000;
const FRACTION_REL_TOL: f64 = 1e-7;

struct ExactData {
    delta: (BigRational, BigRational),
    recognised: bool,
    points: Vec<((usize, usize), [BigRational; 2], BigRational)>,
}

/// Closed forms for δ as given when it is rational with rational roots;
/// otherwise for a nearby simple fraction of a real δ.
fn exact_delta(p: u32, q: u32, delta: &(DeltaValue, DeltaValue)) -> Option<ExactData> {
    let (d0, d1) = delta;
    let build = |pair: (BigRational, BigRational), recognised: bool| {
        let points = rational_critical_points(p, q, &pair.0, &pair.1);
        (!points.is_empty()).then_some(ExactData {
            delta: pair,
            recognised,
            points,
        })
    };
    if let (Some(a), Some(b)) = (&d0.exact, &d1.exact) {
        if let Some(ex) = build((a.clone(), b.clone()), false) {
            return Some(ex);
        }
    }
    if d0.value.im != 0.0 || d1.value.im != 0.0 {
        return None;
    }
    let f = |x: f64| numfmt::simple_fraction(x, FRACTION_MAX_DEN, FRACTION_REL_TOL);
    let pair = (f(d0.value.re)?, f(d1.value.re)?);
    if Some(&pair.0) == d0.exact.as_ref() && Some(&pair.1) == d1.exact.as_ref() {
        return None;
    }
    build(pair, true)
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A value quoted elsewhere for a closed-form point that disagrees with
/// direct evaluation.
struct QuotedValue {
    pq: (u32, u32),
    delta: (BigRational, BigRational),
    point: [BigRational; 2],
    quoted: &'static str,
}

fn quoted_discrepancies() -> Vec<QuotedValue> {
    vec![QuotedValue {
        pq: (3, 2),
        delta: (ratio(1, 243), BigRational::zero()),
        point: [ratio(-1, 27), BigRational::zero()],
        quoted: "-0.00020322105",
    }]
}

fn fibre_label(epsilon: f64, p: u32, q: u32, s: u32) -> String {
    let mut exps = vec![p.to_string(), q.to_string()];
    exps.extend((0..s).map(|_| "2".to_string()));
    format!("V_{}({})", numfmt::real(epsilon), exps.join(","))
}

fn polynomial(p: u32, q: u32, s: u32) -> String {
    let mut terms = vec![format!("z0^{p}"), format!("z1^{q}")];
    terms.extend((0..s).map(|i| format!("z{}^2", i + 2)));
    format!("{} - delta0 z0 - delta1 z1", terms.join(" + "))
}

fn coords_string(c: &[num_complex::Complex64]) -> String {
    let parts: Vec<String> = c.iter().map(|z| numfmt::complex(*z)).collect();
    format!("({})", parts.join(", "))
}

struct ModeData {
    mode: DimMode,
    word: TwistWord,
    monodromy: brieskorn_core::IntMatrix,
    char_poly: brieskorn_core::CharPoly,
}

fn mode_data(p: u32, q: u32, mode: DimMode) -> Result<ModeData, CliError> {
    let graph = build_graph(p, q, mode);
    let word = TwistWord::torus_word(&graph);
    let monodromy = monodromy_matrix(&word).map_err(brieskorn_core::CompileError::from)?;
    let char_poly = char_poly(&monodromy);
    Ok(ModeData {
        mode,
        word,
        monodromy,
        char_poly,
    })
}

fn locus_for(
    p: u32,
    q: u32,
    delta: Option<&(DeltaValue, DeltaValue)>,
    s: u32,
    epsilon: Option<f64>,
    seed: u64,
) -> Result<CriticalLocus, CliError> {
    let locus = match delta {
        Some((d0, d1)) => critical_locus(&MorsifiedBrieskornMap::new(p, q, (d0.value, d1.value), s)?)?,
        None => default_critical_locus(p, q, s, seed)?,
    };
    Ok(match epsilon {
        Some(e) => locus.with_epsilon(e)?,
        None => locus,
    })
}

pub fn fibration_output(
    p: u32,
    q: u32,
    delta: Option<&(DeltaValue, DeltaValue)>,
    s: u32,
    epsilon: Option<f64>,
    seed: u64,
    format: Format,
) -> Result<String, CliError> {
    let locus = locus_for(p, q, delta, s, epsilon, seed)?;
    let milnor = milnor_numbers(p, q);
    let exact = delta.and_then(|d| exact_delta(p, q, d));
    let mut notes = Vec::new();
    if let Some(ex) = &exact {
        if ex.recognised {
            notes.push(format!(
                "delta is within a relative {FRACTION_REL_TOL:e} of ({}, {}); closed forms are for that value",
                numfmt::rational(&ex.delta.0),
                numfmt::rational(&ex.delta.1)
            ));
        }
        for QuotedValue {
            pq,
            delta,
            point,
            quoted,
        } in quoted_discrepancies()
        {
            if pq != (p, q) || delta != ex.delta {
                continue;
            }
            if let Some((_, _, value)) = ex.points.iter().find(|(_, c, _)| *c == point) {
                notes.push(format!(
                    "at ({}, {}) direct evaluation gives {} ≈ {}; the quoted value {quoted} for this point disagrees and is not used",
                    numfmt::rational(&point[0]),
                    numfmt::rational(&point[1]),
                    numfmt::rational(value),
                    numfmt::real(rational_to_f64(value)),
                ));
            }
        }
    }
    let modes = [mode_data(p, q, DimMode::Curve)?, mode_data(p, q, DimMode::Sphere)?];

    Ok(match format {
        Format::Report => {
            let mut out = String::new();
            let (d0, d1) = locus.map().delta();
            let _ = writeln!(out, "fibration: {}", polynomial(p, q, s));
            let _ = writeln!(out, "delta: ({}, {})", numfmt::complex(d0), numfmt::complex(d1));
            let _ = writeln!(out, "suspensions: {s}");
            let _ = writeln!(out, "regular fibre: {}", fibre_label(locus.epsilon(), p, q, s));
            let _ = writeln!(out, "milnor number: {}", milnor.mu);
            let _ = writeln!(out, "euler characteristic of V({p},{q}): {}", milnor.euler_char);
            let _ = writeln!(out, "epsilon: {}", numfmt::real(locus.epsilon()));
            let _ = writeln!(
                out,
                "max critical value modulus: {}",
                numfmt::real(locus.max_value_modulus())
            );
            let _ = writeln!(out, "critical points: {}", locus.points().len());
            for (k, c) in locus.points().iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  [{k}] root ({},{}): z = {}, value {}, hessian_det {}",
                    c.root_index.0,
                    c.root_index.1,
                    coords_string(&c.coords),
                    numfmt::complex(c.value),
                    numfmt::complex(c.hessian_det)
                );
            }
            if let Some(ex) = &exact {
                let _ = writeln!(
                    out,
                    "closed form (delta = ({}, {})):",
                    numfmt::rational(&ex.delta.0),
                    numfmt::rational(&ex.delta.1)
                );
                for (idx, c, v) in &ex.points {
                    let _ = writeln!(
                        out,
                        "  root ({},{}): z = ({}, {}), value {} ≈ {}",
                        idx.0,
                        idx.1,
                        numfmt::rational(&c[0]),
                        numfmt::rational(&c[1]),
                        numfmt::rational(v),
                        numfmt::real(rational_to_f64(v))
                    );
                }
            }
            if !notes.is_empty() {
                let _ = writeln!(out, "notes:");
                for n in &notes {
                    let _ = writeln!(out, "  - {n}");
                }
            }
            for m in &modes {
                let g = m.word.graph();
                let _ = writeln!(out, "{} mode:", m.mode.name());
                let labels: Vec<String> = (0..g.len()).map(|k| g.label(k)).collect();
                let _ = writeln!(out, "  vanishing cycles: {}", labels.join(", "));
                let edges: Vec<String> = g
                    .edges()
                    .iter()
                    .map(|&(a, b, sign)| format!("{} -- {} ({sign:+})", g.label(a), g.label(b)))
                    .collect();
                let _ = writeln!(
                    out,
                    "  edges: {}",
                    if edges.is_empty() {
                        "none".into()
                    } else {
                        edges.join(", ")
                    }
                );
                let _ = writeln!(out, "  intersection form:");
                write_matrix(&mut out, g.form(), "    ");
                let _ = writeln!(out, "  torus word: {}", m.word.letter_names().join(" "));
                let _ = writeln!(out, "  monodromy:");
                write_matrix(&mut out, &m.monodromy, "    ");
                let _ = writeln!(out, "  char poly: {}", m.char_poly);
            }
            out
        }
        Format::Dot => modes.iter().map(|m| m.word.graph().to_dot()).collect(),
        Format::JsonLines => {
            let mut records = vec![Record::Map {
                map: locus.map().clone(),
                epsilon: locus.epsilon(),
                milnor,
            }];
            records.extend(
                locus
                    .points()
                    .iter()
                    .enumerate()
                    .map(|(index, c)| Record::CriticalPoint {
                        index,
                        point: c.clone(),
                    }),
            );
            if let Some(ex) = &exact {
                records.extend(ex.points.iter().map(|(idx, c, v)| Record::ExactPoint {
                    root_index: *idx,
                    coords: [numfmt::rational(&c[0]), numfmt::rational(&c[1])],
                    value: numfmt::rational(v),
                }));
            }
            records.extend(notes.iter().map(|n| Record::Note { text: n.clone() }));
            records.extend(modes.iter().map(|m| Record::Mode {
                mode: m.mode,
                graph: m.word.graph().clone(),
                monodromy: m.monodromy.clone(),
                char_poly: m.char_poly.clone(),
            }));
            to_json_lines(&records)?
        }
    })
}
