//! Distinguished vanishing-cycle bases, intersection forms and homological
//! monodromy of Dehn twist words.
//!
//! Cycles `c_{i,j}` (`1 ≤ i < p`, `1 ≤ j < q`) are ordered row-major, which
//! matches the critical-point order of [`crate::brieskorn`]. Every form is
//! built from one Seifert matrix `Θ = −I + U`, with `U` strictly upper
//! triangular: `+1` from `c_{i,j}` to `c_{i+1,j}` and to `c_{i,j+1}`, `−1`
//! from `c_{i,j}` to `c_{i+1,j+1}`. The curve form is `Θ − Θᵀ` and the
//! sphere form is `Θ + Θᵀ`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::IntMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DimMode {
    /// Circles on the complex curve `V(p,q)`; skew form.
    Curve,
    /// Matching 2-spheres on the surface `V(p,q,2)`; symmetric form.
    Sphere,
}

impl DimMode {
    /// Self-pairing every twist cycle must have.
    pub fn required_self_pairing(self) -> i64 {
        match self {
            DimMode::Curve => 0,
            DimMode::Sphere => -2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DimMode::Curve => "curve",
            DimMode::Sphere => "sphere",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingCycleGraph {
    p: u32,
    q: u32,
    mode: DimMode,
    basis: Vec<(u32, u32)>,
    form: IntMatrix,
}

/// Seifert matrix `Θ` of the `(p,q)` page in the distinguished basis.
pub fn seifert_matrix(p: u32, q: u32) -> IntMatrix {
    assert!(p >= 2 && q >= 2, "exponents must be at least 2");
    let (w, h) = (p as usize - 1, q as usize - 1);
    let idx = |i: usize, j: usize| i * h + j;
    let mut theta = IntMatrix::identity(w * h).neg();
    for i in 0..w {
        for j in 0..h {
            if i + 1 < w {
                theta[(idx(i, j), idx(i + 1, j))] = 1;
            }
            if j + 1 < h {
                theta[(idx(i, j), idx(i, j + 1))] = 1;
            }
            if i + 1 < w && j + 1 < h {
                theta[(idx(i, j), idx(i + 1, j + 1))] = -1;
            }
        }
    }
    theta
}

pub fn build_graph(p: u32, q: u32, mode: DimMode) -> VanishingCycleGraph {
    let theta = seifert_matrix(p, q);
    let form = match mode {
        DimMode::Curve => theta.sub(&theta.transpose()),
        DimMode::Sphere => theta.add(&theta.transpose()),
    };
    let basis = (1..p).flat_map(|i| (1..q).map(move |j| (i, j))).collect();
    VanishingCycleGraph {
        p,
        q,
        mode,
        basis,
        form,
    }
}

impl VanishingCycleGraph {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn mode(&self) -> DimMode {
        self.mode
    }

    pub fn basis(&self) -> &[(u32, u32)] {
        &self.basis
    }

    pub fn form(&self) -> &IntMatrix {
        &self.form
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Same basis, other mode.
    pub fn with_mode(&self, mode: DimMode) -> Self {
        build_graph(self.p, self.q, mode)
    }

    /// Position of `c_{i,j}` (1-based labels) in the basis.
    pub fn index_of(&self, i: u32, j: u32) -> Option<usize> {
        (1..self.p)
            .contains(&i)
            .then_some(())
            .filter(|_| (1..self.q).contains(&j))
            .map(|_| (i as usize - 1) * (self.q as usize - 1) + (j as usize - 1))
    }

    pub fn label(&self, index: usize) -> String {
        let (i, j) = self.basis[index];
        format!("c_{i}_{j}")
    }

    pub fn basis_vector(&self, index: usize) -> Vec<i64> {
        let mut v = vec![0; self.len()];
        v[index] = 1;
        v
    }

    /// Edges `(a, b, sign)` with `a < b`; sign is the upper-triangle entry.
    pub fn edges(&self) -> Vec<(usize, usize, i64)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let s = self.form[(a, b)];
                if s != 0 {
                    out.push((a, b, s));
                }
            }
        }
        out
    }

    fn check_dim(&self, v: &[i64]) -> Result<(), CycleError> {
        if v.len() != self.len() {
            return Err(CycleError::DimensionMismatch {
                expected: self.len(),
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn pairing(&self, x: &[i64], y: &[i64]) -> Result<i64, CycleError> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(self.form.bilinear(x, y))
    }

    /// Checks the mode's self-pairing condition.
    pub fn check_cycle(&self, c: &[i64]) -> Result<(), CycleError> {
        let sp = self.pairing(c, c)?;
        let want = self.mode.required_self_pairing();
        if sp != want {
            return Err(CycleError::InvalidCycle(format!(
                "{} mode needs self-pairing {want}, class {c:?} has {sp}",
                self.mode.name()
            )));
        }
        Ok(())
    }

    /// DOT export; vertices `c_i_j`, each edge carries its sign.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "graph vanishing_cycles_{}_{}_{} {{",
            self.p,
            self.q,
            self.mode.name()
        );
        for k in 0..self.len() {
            let _ = writeln!(s, "  {};", self.label(k));
        }
        for (a, b, sign) in self.edges() {
            let _ = writeln!(s, "  {} -- {} [sign={sign}];", self.label(a), self.label(b));
        }
        s.push_str("}\n");
        s
    }
}

/// Matrix of `x ↦ x + ⟨x,c⟩·c`.
pub fn transvection(graph: &VanishingCycleGraph, c: &[i64]) -> Result<IntMatrix, CycleError> {
    graph.check_cycle(c)?;
    let mc = graph.form.mul_vec(c);
    let mut t = IntMatrix::identity(graph.len());
    for i in 0..c.len() {
        if c[i] == 0 {
            continue;
        }
        for j in 0..c.len() {
            t[(i, j)] += c[i] * mc[j];
        }
    }
    Ok(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Letter {
    Basis(usize),
    Extra(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtraCycle {
    pub name: String,
    pub class: Vec<i64>,
}

/// Right-handed Dehn twists applied left to right.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistWord {
    graph: VanishingCycleGraph,
    letters: Vec<Letter>,
    extra_cycles: Vec<ExtraCycle>,
}

impl TwistWord {
    /// Unchecked; see [`TwistWord::validate`].
    pub fn new(graph: VanishingCycleGraph, letters: Vec<Letter>, extra_cycles: Vec<ExtraCycle>) -> Self {
        TwistWord {
            graph,
            letters,
            extra_cycles,
        }
    }

    /// One twist per basis cycle in distinguished order.
    pub fn torus_word(graph: &VanishingCycleGraph) -> Self {
        TwistWord::new(graph.clone(), (0..graph.len()).map(Letter::Basis).collect(), Vec::new())
    }

    pub fn graph(&self) -> &VanishingCycleGraph {
        &self.graph
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn extra_cycles(&self) -> &[ExtraCycle] {
        &self.extra_cycles
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push_extra(&mut self, name: impl Into<String>, class: Vec<i64>) {
        self.extra_cycles.push(ExtraCycle {
            name: name.into(),
            class,
        });
        self.letters.push(Letter::Extra(self.extra_cycles.len() - 1));
    }

    pub fn letter_class(&self, letter: Letter) -> Result<Vec<i64>, CycleError> {
        match letter {
            Letter::Basis(k) if k < self.graph.len() => Ok(self.graph.basis_vector(k)),
            Letter::Extra(k) if k < self.extra_cycles.len() => Ok(self.extra_cycles[k].class.clone()),
            other => Err(CycleError::InvalidCycle(format!(
                "letter {other:?} references no cycle"
            ))),
        }
    }

    pub fn letter_name(&self, letter: Letter) -> String {
        match letter {
            Letter::Basis(k) if k < self.graph.len() => self.graph.label(k),
            Letter::Extra(k) if k < self.extra_cycles.len() => self.extra_cycles[k].name.clone(),
            Letter::Basis(k) => format!("c?{k}"),
            Letter::Extra(k) => format!("x?{k}"),
        }
    }

    pub fn letter_names(&self) -> Vec<String> {
        self.letters.iter().map(|&l| self.letter_name(l)).collect()
    }

    pub fn validate(&self) -> Result<(), CycleError> {
        for &l in &self.letters {
            self.graph.check_cycle(&self.letter_class(l)?)?;
        }
        Ok(())
    }
}

/// `T_last ⋯ T_first`.
pub fn monodromy_matrix(word: &TwistWord) -> Result<IntMatrix, CycleError> {
    let mut acc = IntMatrix::identity(word.graph.len());
    for &l in &word.letters {
        let t = transvection(&word.graph, &word.letter_class(l)?)?;
        acc = &t * &acc;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::char_poly;

    #[test]
    fn trefoil_curve_form() {
        let g = build_graph(3, 2, DimMode::Curve);
        assert_eq!(g.form().to_rows(), vec![vec![0, 1], vec![-1, 0]]);
        assert_eq!(g.edges(), vec![(0, 1, 1)]);
        let m = monodromy_matrix(&TwistWord::torus_word(&g)).unwrap();
        assert_eq!(m.to_rows(), vec![vec![1, -1], vec![1, 0]]);
        assert_eq!(char_poly(&m).to_i64().unwrap(), vec![1, -1, 1]);
    }

    #[test]
    fn hopf_sphere() {
        let g = build_graph(2, 2, DimMode::Sphere);
        assert_eq!(g.form().to_rows(), vec![vec![-2]]);
        let m = monodromy_matrix(&TwistWord::torus_word(&g)).unwrap();
        assert_eq!(m.to_rows(), vec![vec![-1]]);
    }

    #[test]
    fn edge_counts_4_3() {
        for mode in [DimMode::Curve, DimMode::Sphere] {
            let g = build_graph(4, 3, mode);
            assert_eq!(g.len(), 6);
            let e = g.edges();
            assert_eq!(e.iter().filter(|x| x.2 == 1).count(), 7);
            assert_eq!(e.iter().filter(|x| x.2 == -1).count(), 2);
        }
    }

    #[test]
    fn diagonal_edges_are_main_diagonal() {
        let g = build_graph(3, 3, DimMode::Sphere);
        let c11 = g.index_of(1, 1).unwrap();
        let c22 = g.index_of(2, 2).unwrap();
        let c21 = g.index_of(2, 1).unwrap();
        let c12 = g.index_of(1, 2).unwrap();
        assert_eq!(g.form()[(c11, c22)], -1);
        assert_eq!(g.form()[(c21, c12)], 0);
        assert_eq!(g.index_of(3, 1), None);
    }

    #[test]
    fn transvection_basics() {
        let g = build_graph(3, 3, DimMode::Sphere);
        let c = g.basis_vector(0);
        let t = transvection(&g, &c).unwrap();
        assert_eq!(t.mul_vec(&c), vec![-1, 0, 0, 0]);
        assert_eq!(&t * &t, IntMatrix::identity(4));
        // c_{2,1} and c_{1,2} are not adjacent
        let far = g.basis_vector(g.index_of(2, 1).unwrap());
        let far_image = transvection(&g, &far)
            .unwrap()
            .mul_vec(&g.basis_vector(g.index_of(1, 2).unwrap()));
        assert_eq!(far_image, g.basis_vector(g.index_of(1, 2).unwrap()));

        let gc = g.with_mode(DimMode::Curve);
        let t = transvection(&gc, &c).unwrap();
        assert_eq!(t.mul_vec(&c), c);
    }

    #[test]
    fn invalid_cycles() {
        let g = build_graph(3, 3, DimMode::Sphere);
        // c11 + c22 has ⟨v,v⟩ = -2-2-2 = -6
        let mut v = vec![0; 4];
        v[g.index_of(1, 1).unwrap()] = 1;
        v[g.index_of(2, 2).unwrap()] = 1;
        assert!(matches!(transvection(&g, &v), Err(CycleError::InvalidCycle(_))));
        assert!(matches!(
            transvection(&g, &[1, 0]),
            Err(CycleError::DimensionMismatch { expected: 4, found: 2 })
        ));
        let w = TwistWord::new(g, vec![Letter::Basis(9)], Vec::new());
        assert!(w.validate().is_err());
        assert!(monodromy_matrix(&w).is_err());
    }

    #[test]
    fn empty_word_is_identity() {
        let g = build_graph(4, 4, DimMode::Curve);
        let w = TwistWord::new(g, Vec::new(), Vec::new());
        assert_eq!(monodromy_matrix(&w).unwrap(), IntMatrix::identity(9));
    }

    #[test]
    fn extra_letters() {
        let g = build_graph(3, 2, DimMode::Sphere);
        let mut w = TwistWord::torus_word(&g);
        // c11 + c21 pairs to -2 -2 + 2 = -2
        w.push_extra("L", vec![1, 1]);
        w.validate().unwrap();
        assert_eq!(w.letter_names(), vec!["c_1_1", "c_2_1", "L"]);
        assert!(g.form().preserved_by(&monodromy_matrix(&w).unwrap()));
    }

    #[test]
    fn dot_export() {
        let dot = build_graph(3, 2, DimMode::Curve).to_dot();
        assert!(dot.contains("c_1_1 -- c_2_1 [sign=1];"));
        assert!(dot.starts_with("graph vanishing_cycles_3_2_curve {"));
    }
}
