mod support;

use brieskorn_core::cycle_graph::DimMode;
use brieskorn_core::legendrian::{
    embed_on_page, front_invariants, linking_matrix, puncture_page, FiberEmbedding, GridDiagram,
};
use support::grids::{all_grids, framing_corpus};

#[test]
fn page_framing_equals_tb_on_corpus() {
    let corpus = framing_corpus();
    let mut components = 0;
    for g in &corpus {
        let e = embed_on_page(g).unwrap_or_else(|err| panic!("{err} for\n{g}"));
        for (c, f) in e.components().iter().zip(front_invariants(g)) {
            assert_eq!(c.page_framing, f.tb);
            components += 1;
        }
    }
    assert!(components > 8000);
}

#[test]
fn page_linking_matches_diagram_linking() {
    for n in 2..=5 {
        for g in all_grids(n) {
            let e = embed_on_page(&g).unwrap();
            let lk = linking_matrix(&g);
            let curve = e.graph(DimMode::Curve);
            let k = e.components().len();
            for (a, row) in lk.iter().enumerate().take(k) {
                for (b, &l) in row.iter().enumerate().take(k) {
                    if a == b {
                        continue;
                    }
                    assert_eq!(e.page_linking(a, b).unwrap(), l, "{g}");
                    // disjoint curves on the page have zero algebraic intersection
                    let (va, vb) = (&e.components()[a].homology_class, &e.components()[b].homology_class);
                    assert_eq!(curve.pairing(va, vb).unwrap(), 0);
                }
            }
        }
    }
}

#[test]
fn euler_characteristic_law() {
    for g in framing_corpus().iter().step_by(7) {
        let e: FiberEmbedding = embed_on_page(g).unwrap();
        let (p, q) = (e.p() as i64, e.q() as i64);
        assert_eq!(e.euler_characteristic(), p + q - p * q);
        for r in [1usize, 3] {
            let punctured = puncture_page(&e, r).unwrap();
            assert_eq!(punctured.euler_characteristic(), p + q - p * q - r as i64);
            assert_eq!(punctured.components(), e.components());
        }
    }
}

#[test]
fn tb_additive_under_split_union() {
    let grids: Vec<GridDiagram> = all_grids(3).into_iter().step_by(3).collect();
    for a in &grids {
        for b in grids.iter().take(4) {
            let u = GridDiagram::split_union(&[a.clone(), b.clone()]);
            let mut want: Vec<i64> = front_invariants(a).iter().map(|f| f.tb).collect();
            want.extend(front_invariants(b).iter().map(|f| f.tb));
            let got: Vec<i64> = front_invariants(&u).iter().map(|f| f.tb).collect();
            assert_eq!(got, want);
        }
    }
}

#[test]
fn tb_invariant_under_translation() {
    for n in 2..=5 {
        for g in all_grids(n) {
            let mut want: Vec<i64> = front_invariants(&g).iter().map(|f| f.tb).collect();
            want.sort();
            for (dc, dr) in [(1, 0), (0, 1), (2, 3)] {
                let mut got: Vec<i64> = front_invariants(&g.translate(dc, dr)).iter().map(|f| f.tb).collect();
                got.sort();
                assert_eq!(got, want, "{g}");
            }
        }
    }
}

#[test]
fn mirror_negates_writhe() {
    for g in all_grids(4) {
        let w: Vec<i64> = front_invariants(&g).iter().map(|f| f.writhe).collect();
        let mut m: Vec<i64> = front_invariants(&g.mirror()).iter().map(|f| -f.writhe).collect();
        let mut w_sorted = w.clone();
        w_sorted.sort();
        m.sort();
        assert_eq!(m, w_sorted);
    }
}

#[test]
fn basis_cycle_components() {
    // a square around a single grid cell is the corresponding basis cycle
    // up to orientation
    for n in 2..=4 {
        for g in all_grids(n) {
            let e = embed_on_page(&g).unwrap();
            for c in e.components() {
                let nonzero: Vec<_> = c.homology_class.iter().enumerate().filter(|(_, v)| **v != 0).collect();
                if nonzero.len() == 1 && nonzero[0].1.abs() == 1 {
                    assert_eq!(c.page_framing, -1);
                }
            }
        }
    }
}

#[test]
fn grid_text_round_trip() {
    for g in framing_corpus().iter().step_by(11) {
        let text = g.to_string();
        let back: GridDiagram = text.parse().unwrap();
        assert_eq!(&back, g);
        assert_eq!(back.to_string(), text);
    }
}
