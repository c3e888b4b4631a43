//! Grid corpora: every grid of a given size, and seeded random grids.

use brieskorn_core::legendrian::GridDiagram;
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn all_grids(n: usize) -> Vec<GridDiagram> {
    let mut out = Vec::new();
    for x in (0..n).permutations(n) {
        for o in (0..n).permutations(n) {
            if x.iter().zip(&o).all(|(a, b)| a != b) {
                out.push(GridDiagram::new(x.clone(), o, Vec::new()).unwrap());
            }
        }
    }
    out
}

pub fn random_grids(count: usize, max_n: usize, seed: u64) -> Vec<GridDiagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = *(2..=max_n).collect::<Vec<_>>().choose(&mut rng).unwrap();
        let mut x: Vec<usize> = (0..n).collect();
        let mut o: Vec<usize> = (0..n).collect();
        x.shuffle(&mut rng);
        o.shuffle(&mut rng);
        if let Ok(g) = GridDiagram::new(x, o, Vec::new()) {
            out.push(g);
        }
    }
    out
}

/// Exhaustive grids of size at most 5 plus 200 random grids of size at most 8.
pub fn framing_corpus() -> Vec<GridDiagram> {
    let mut v: Vec<GridDiagram> = (2..=5).flat_map(all_grids).collect();
    v.extend(random_grids(200, 8, 0x5eed));
    v
}
