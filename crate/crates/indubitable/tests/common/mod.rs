//! Shared helpers for the integration tests: fixture graphs and a seeded
//! random regular graph generator (pairing model with rejection).
//!
//! Each test binary compiles this module separately and uses a subset of it.
#![allow(dead_code)]

use indubitable::graph::{self, Graph};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random connected k-regular graph on n vertices via the pairing model:
/// shuffle n·k vertex stubs, pair them up, reject pairings with loops,
/// parallel edges, or a disconnected result. Deterministic in the seed.
pub fn random_regular(n: usize, k: usize, seed: u64) -> Graph {
    assert!((n * k).is_multiple_of(2), "n*k must be even");
    assert!(k < n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
        stubs.shuffle(&mut rng);
        let edges: Vec<(usize, usize)> = stubs.chunks(2).map(|c| (c[0], c[1])).collect();
        let mut ok = true;
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &edges {
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        let g = Graph::from_edges(n, &edges).expect("validated pairing");
        if graph::is_connected(&g) {
            return g;
        }
    }
}

/// A corpus of connected regular graph6 lines mixing small cycles with
/// random regular graphs. Deterministic in the seed.
pub fn regular_corpus(count: usize, seed: u64) -> Vec<String> {
    let mut lines = Vec::with_capacity(count);
    for n in 3..=24 {
        if lines.len() == count {
            break;
        }
        lines.push(graph::write_graph6(
            &graph::generate(&graph::FamilySpec::Cycle { n }).unwrap(),
        ));
    }
    let shapes = [(6, 3), (8, 3), (8, 4), (10, 3), (10, 4), (12, 3), (14, 4), (12, 5)];
    let mut i = 0u64;
    while lines.len() < count {
        let (n, k) = shapes[(i as usize) % shapes.len()];
        lines.push(graph::write_graph6(&random_regular(n, k, seed.wrapping_add(i))));
        i += 1;
    }
    lines
}

pub fn petersen() -> Graph {
    Graph::from_edges(
        10,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
        ],
    )
    .unwrap()
}
