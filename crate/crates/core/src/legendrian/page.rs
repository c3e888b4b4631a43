//! Legendrian links on the page of the `(p,q)` torus-link open book.
//!
//! The page is modelled as the grid surface of a square-bridge link: `p`
//! vertical strips and `q` horizontal strips glued by a twisted square at
//! each of the `pq` junctions, so `χ = p + q − pq`. A square-bridge
//! component lies on the strips as drawn. Its homology class in the
//! `c_{i,j}` basis is the winding number around each grid cell, where cell
//! `c_{i,j}` sits between columns `i−1, i` and rows `j−1, j` (rows from the
//! bottom). The page framing is `vᵀΘv` for the Seifert matrix `Θ`.

use serde::{Deserialize, Serialize};

use super::bridge::square_bridge;
use super::front::{component_segments, front_invariants, Segment};
use super::grid::{ComponentLabel, GridDiagram};
use super::EmbedError;
use crate::brieskorn::milnor_numbers;
use crate::cycle_graph::{build_graph, seifert_matrix, DimMode, VanishingCycleGraph};

/// A spot near the page boundary where a fibre can be punctured: one piece
/// of a strip between two consecutive junctions, or an end piece.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PunctureSite {
    /// Piece `k ∈ 0..=q` of vertical strip `column`, below horizontal strip `k`.
    Vertical { column: usize, piece: usize },
    /// Piece `k ∈ 0..=p` of horizontal strip `row`, left of vertical strip `k`.
    Horizontal { row: usize, piece: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddedComponent {
    pub id: usize,
    pub label: Option<ComponentLabel>,
    /// Closed walk along the strips, page coordinates.
    pub placement: Vec<Segment>,
    pub tb: i64,
    pub page_framing: i64,
    pub suspended: bool,
    pub homology_class: Vec<i64>,
    /// Self-pairing of the class in the current mode's form.
    pub self_pairing: i64,
}

impl EmbeddedComponent {
    pub fn mode(&self) -> DimMode {
        if self.suspended {
            DimMode::Sphere
        } else {
            DimMode::Curve
        }
    }

    fn occupies(&self, site: PunctureSite) -> bool {
        self.placement.iter().any(|s| {
            let (lo, hi) = if s.is_vertical() {
                (s.from.1.min(s.to.1), s.from.1.max(s.to.1))
            } else {
                (s.from.0.min(s.to.0), s.from.0.max(s.to.0))
            };
            match site {
                PunctureSite::Vertical { column, piece } => {
                    s.is_vertical() && s.from.0 == column as i64 && lo < piece as i64 && piece as i64 <= hi
                }
                PunctureSite::Horizontal { row, piece } => {
                    !s.is_vertical() && s.from.1 == row as i64 && lo < piece as i64 && piece as i64 <= hi
                }
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberEmbedding {
    p: u32,
    q: u32,
    components: Vec<EmbeddedComponent>,
    punctures: Vec<PunctureSite>,
}

impl FiberEmbedding {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn components(&self) -> &[EmbeddedComponent] {
        &self.components
    }

    pub fn component(&self, id: usize) -> Result<&EmbeddedComponent, EmbedError> {
        self.components
            .iter()
            .find(|c| c.id == id)
            .ok_or(EmbedError::UnknownComponent(id))
    }

    pub fn punctures(&self) -> &[PunctureSite] {
        &self.punctures
    }

    pub fn graph(&self, mode: DimMode) -> VanishingCycleGraph {
        build_graph(self.p, self.q, mode)
    }

    /// Euler characteristic of the curve page after punctures.
    pub fn euler_characteristic(&self) -> i64 {
        milnor_numbers(self.p, self.q).euler_char - self.punctures.len() as i64
    }

    /// `v_aᵀΘv_b`; the linking number of two disjoint components.
    pub fn page_linking(&self, a: usize, b: usize) -> Result<i64, EmbedError> {
        let theta = seifert_matrix(self.p, self.q);
        Ok(theta.bilinear(&self.component(a)?.homology_class, &self.component(b)?.homology_class))
    }

    fn is_free(&self, site: PunctureSite) -> bool {
        !self.punctures.contains(&site) && !self.components.iter().any(|c| c.occupies(site))
    }

    fn site_in_range(&self, site: PunctureSite) -> bool {
        let (p, q) = (self.p as usize, self.q as usize);
        match site {
            PunctureSite::Vertical { column, piece } => column < p && piece <= q,
            PunctureSite::Horizontal { row, piece } => row < q && piece <= p,
        }
    }

    /// End pieces first, then interior pieces, each in index order.
    fn candidate_sites(&self) -> Vec<PunctureSite> {
        let (p, q) = (self.p as usize, self.q as usize);
        let mut out = Vec::new();
        for piece in [0, q] {
            out.extend((0..p).map(|column| PunctureSite::Vertical { column, piece }));
        }
        for piece in [0, p] {
            out.extend((0..q).map(|row| PunctureSite::Horizontal { row, piece }));
        }
        for column in 0..p {
            out.extend((1..q).map(|piece| PunctureSite::Vertical { column, piece }));
        }
        for row in 0..q {
            out.extend((1..p).map(|piece| PunctureSite::Horizontal { row, piece }));
        }
        out
    }
}

fn cell_windings(segs: &[Segment], p: u32, q: u32) -> Vec<i64> {
    let (w, h) = (p as usize - 1, q as usize - 1);
    let mut v = vec![0; w * h];
    for s in segs.iter().filter(|s| s.is_vertical()) {
        let x = s.from.0;
        let (lo, hi) = (s.from.1.min(s.to.1), s.from.1.max(s.to.1));
        let dir = (s.to.1 - s.from.1).signum();
        // cell (i, j) has centre (i + 1/2, j + 1/2), the ray runs east
        for i in 0..w {
            if x <= i as i64 {
                continue;
            }
            for j in 0..h {
                if lo <= j as i64 && (j as i64) < hi {
                    v[i * h + j] += dir;
                }
            }
        }
    }
    v
}

pub fn embed_on_page(grid: &GridDiagram) -> Result<FiberEmbedding, EmbedError> {
    embed_on_page_with(grid, 2, 2)
}

/// Embeds on a page at least `(min_p, min_q)`, padding with unused strips.
pub fn embed_on_page_with(grid: &GridDiagram, min_p: u32, min_q: u32) -> Result<FiberEmbedding, EmbedError> {
    let sb = square_bridge(grid);
    let p = (sb.vertical_segments as u32).max(min_p).max(2);
    let q = (sb.horizontal_segments as u32).max(min_q).max(2);
    let theta = seifert_matrix(p, q);
    let fronts = front_invariants(grid);
    let mut components = Vec::new();
    for (id, (segs, front)) in component_segments(grid).into_iter().zip(fronts).enumerate() {
        let homology_class = cell_windings(&segs, p, q);
        let page_framing = theta.bilinear(&homology_class, &homology_class);
        if page_framing != front.tb {
            return Err(EmbedError::FramingMismatch {
                component: id,
                tb: front.tb,
                page_framing,
            });
        }
        components.push(EmbeddedComponent {
            id,
            label: grid.label(id).copied(),
            placement: segs,
            tb: front.tb,
            page_framing,
            suspended: false,
            // skew form
            self_pairing: 0,
            homology_class,
        });
    }
    Ok(FiberEmbedding {
        p,
        q,
        components,
        punctures: Vec::new(),
    })
}

/// Lifts a disk-bounding component to the matching sphere over it in the
/// double branched cover. Coordinates are kept; the self-pairing is read
/// from the sphere form.
pub fn suspend_component(embedding: &FiberEmbedding, id: usize) -> Result<FiberEmbedding, EmbedError> {
    let mut out = embedding.clone();
    let sphere = embedding.graph(DimMode::Sphere);
    let comp = out
        .components
        .iter_mut()
        .find(|c| c.id == id)
        .ok_or(EmbedError::UnknownComponent(id))?;
    if comp.suspended {
        return Err(EmbedError::NotDiskBounding {
            component: id,
            reason: "already suspended".into(),
        });
    }
    if !comp.label.is_some_and(|l| l.disk) {
        return Err(EmbedError::NotDiskBounding {
            component: id,
            reason: "no Lagrangian disk declared".into(),
        });
    }
    comp.suspended = true;
    comp.self_pairing = sphere.form().bilinear(&comp.homology_class, &comp.homology_class);
    Ok(out)
}

/// Carves `count` boundary punctures at the first free sites.
pub fn puncture_page(embedding: &FiberEmbedding, count: usize) -> Result<FiberEmbedding, EmbedError> {
    let mut out = embedding.clone();
    let mut candidates = out.candidate_sites().into_iter();
    for _ in 0..count {
        let site = candidates
            .by_ref()
            .find(|&s| out.is_free(s))
            .ok_or_else(|| EmbedError::PlacementCollision("no free boundary site left on the page".into()))?;
        out.punctures.push(site);
    }
    Ok(out)
}

/// Carves punctures at caller-chosen sites.
pub fn puncture_page_at(embedding: &FiberEmbedding, sites: &[PunctureSite]) -> Result<FiberEmbedding, EmbedError> {
    let mut out = embedding.clone();
    for &site in sites {
        if !out.site_in_range(site) {
            return Err(EmbedError::PlacementCollision(format!("{site:?} is not on the page")));
        }
        if let Some(c) = out.components.iter().find(|c| c.occupies(site)) {
            return Err(EmbedError::PlacementCollision(format!(
                "{site:?} meets the placement of component {}",
                c.id
            )));
        }
        if out.punctures.contains(&site) {
            return Err(EmbedError::PlacementCollision(format!("{site:?} is already punctured")));
        }
        out.punctures.push(site);
    }
    Ok(out)
}
