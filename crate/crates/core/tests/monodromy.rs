mod support;

use brieskorn_core::cycle_graph::{build_graph, monodromy_matrix, transvection, DimMode, Letter, TwistWord};
use brieskorn_core::matrix::{char_poly, IntMatrix};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::cyclotomic::torus_eigen_polynomial;

fn torus_char_poly(p: u32, q: u32, mode: DimMode) -> Vec<i64> {
    let g = build_graph(p, q, mode);
    char_poly(&monodromy_matrix(&TwistWord::torus_word(&g)).unwrap())
        .to_i64()
        .unwrap()
}

#[test]
fn torus_words_match_cyclotomic_oracle() {
    for p in 2..=6u32 {
        for q in 2..=6u32 {
            assert_eq!(
                torus_char_poly(p, q, DimMode::Curve),
                torus_eigen_polynomial(p as usize, q as usize, 1),
                "curve ({p},{q})"
            );
            assert_eq!(
                torus_char_poly(p, q, DimMode::Sphere),
                torus_eigen_polynomial(p as usize, q as usize, -1),
                "sphere ({p},{q})"
            );
        }
    }
}

#[test]
fn swapping_exponents_keeps_char_poly() {
    for p in 2..=6u32 {
        for q in p..=6u32 {
            for mode in [DimMode::Curve, DimMode::Sphere] {
                assert_eq!(torus_char_poly(p, q, mode), torus_char_poly(q, p, mode));
            }
        }
    }
}

#[test]
fn small_cases() {
    assert_eq!(torus_char_poly(3, 2, DimMode::Curve), vec![1, -1, 1]);
    assert_eq!(torus_char_poly(2, 3, DimMode::Curve), vec![1, -1, 1]);
    let g = build_graph(2, 2, DimMode::Sphere);
    let m = monodromy_matrix(&TwistWord::torus_word(&g)).unwrap();
    assert_eq!(m.to_rows(), vec![vec![-1]]);
}

/// Random word over basis letters, with some sphere-valid extra cycles.
fn random_word(rng: &mut ChaCha8Rng, mode: DimMode) -> TwistWord {
    let p = rng.gen_range(2..=6);
    let q = rng.gen_range(2..=6);
    let g = build_graph(p, q, mode);
    let n = g.len();
    let len = rng.gen_range(0..=12);
    let mut w = TwistWord::new(
        g.clone(),
        (0..len).map(|_| Letter::Basis(rng.gen_range(0..n))).collect(),
        vec![],
    );
    for _ in 0..rng.gen_range(0..3) {
        // sums along a path of adjacent +1 grid edges keep self-pairing -2 in
        // sphere mode and 0 in curve mode
        let start = rng.gen_range(0..n);
        let mut v = g.basis_vector(start);
        if let Some(&(a, b, s)) = g.edges().iter().find(|e| (e.0 == start || e.1 == start) && e.2 == 1) {
            let other = if a == start { b } else { a };
            if mode == DimMode::Curve || s == 1 {
                v[other] += 1;
            }
        }
        if g.check_cycle(&v).is_ok() {
            w.push_extra(format!("x{}", w.extra_cycles().len()), v);
        }
    }
    w
}

#[test]
fn monodromies_preserve_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 0..500 {
        let mode = if k % 2 == 0 { DimMode::Curve } else { DimMode::Sphere };
        let w = random_word(&mut rng, mode);
        let m = monodromy_matrix(&w).unwrap();
        assert!(w.graph().form().preserved_by(&m));
    }
}

#[test]
fn sphere_transvections_are_involutions() {
    for p in 2..=6 {
        for q in 2..=6 {
            let g = build_graph(p, q, DimMode::Sphere);
            for k in 0..g.len() {
                let t = transvection(&g, &g.basis_vector(k)).unwrap();
                assert_eq!(&t * &t, IntMatrix::identity(g.len()));
            }
        }
    }
}

#[test]
fn forms_have_expected_shape() {
    for p in 2..=8 {
        for q in 2..=8 {
            let c = build_graph(p, q, DimMode::Curve);
            let s = build_graph(p, q, DimMode::Sphere);
            assert!(c.form().is_antisymmetric());
            assert!(s.form().is_symmetric());
            assert!((0..s.len()).all(|k| s.form()[(k, k)] == -2));
            // same edge set, same upper-triangle signs
            assert_eq!(c.edges(), s.edges());
            let (w, h) = (p as usize - 1, q as usize - 1);
            let grid_edges = w * (h.saturating_sub(1)) + h * (w - 1);
            let diagonals = (w - 1) * (h.saturating_sub(1));
            assert_eq!(c.edges().iter().filter(|e| e.2 == 1).count(), grid_edges);
            assert_eq!(c.edges().iter().filter(|e| e.2 == -1).count(), diagonals);
        }
    }
}

proptest! {
    #[test]
    fn transvections_preserve_form(p in 2u32..7, q in 2u32..7, idx in 0usize..36, sphere in any::<bool>()) {
        let mode = if sphere { DimMode::Sphere } else { DimMode::Curve };
        let g = build_graph(p, q, mode);
        let c = g.basis_vector(idx % g.len());
        let t = transvection(&g, &c).unwrap();
        prop_assert!(g.form().preserved_by(&t));
    }

    #[test]
    fn char_poly_is_monic_of_full_degree(rows in prop::collection::vec(prop::collection::vec(-5i64..5, 4), 4)) {
        let m = IntMatrix::from_rows(rows);
        let cp = char_poly(&m);
        prop_assert_eq!(cp.degree(), Some(4));
        let coeffs = cp.to_i64().unwrap();
        prop_assert_eq!(coeffs[4], 1);
        let trace: i64 = (0..4).map(|i| m[(i, i)]).sum();
        prop_assert_eq!(coeffs[3], -trace);
    }
}
