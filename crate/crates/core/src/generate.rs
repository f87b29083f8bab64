//! Seeded generators: planar girth-5 embeddings grown from C5 or the
//! dodecahedron, and small abstract girth-5 graphs for oracle checks.

use std::collections::VecDeque;

use rand::distributions::WeightedIndex;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::fixtures;
use crate::graph::{Adjacency, EmbeddedGraph, RotationBuilder, SimpleGraph};

/// Knobs for `gen_planar_girth5_with`.
#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    /// Chance that a step subdivides an edge rather than inserting a path.
    pub subdivide: f64,
    /// Exponent on the degree when picking endpoints. Larger values grow
    /// hubs faster.
    pub hub_bias: f64,
    /// Most internal vertices on an inserted path.
    pub max_internal: usize,
    /// Chance of starting from the dodecahedron when the target allows it.
    pub dodecahedron: f64,
    /// Only subdivide edges between 3⁺-vertices and only insert paths with
    /// at most one internal vertex, so no two 2-vertices become adjacent.
    /// Such runs always start from the dodecahedron; targets below 20 fall
    /// back to the unrestricted steps.
    pub avoid_adjacent_twos: bool,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            subdivide: 0.25,
            hub_bias: 2.0,
            max_internal: 3,
            dodecahedron: 0.3,
            avoid_adjacent_twos: false,
        }
    }
}

impl GenParams {
    /// Sparser 2-vertices, never adjacent to each other; closer to the
    /// structure the discharging lemmas describe.
    pub fn structured() -> Self {
        GenParams {
            subdivide: 0.3,
            hub_bias: 1.5,
            max_internal: 1,
            dodecahedron: 1.0,
            avoid_adjacent_twos: true,
        }
    }
}

/// Largest number of vertices a generated graph can exceed its target by.
pub const MAX_OVERSHOOT: usize = 4;

pub fn gen_planar_girth5(seed: u64, target: usize) -> EmbeddedGraph {
    gen_planar_girth5_with(seed, target, &GenParams::default())
}

/// A connected plane graph of girth ≥ 5 with between `target` and
/// `target + MAX_OVERSHOOT` vertices (exactly C5 for `target ≤ 5`).
///
/// Every step is girth-safe: subdividing never shortens a cycle, and a path
/// with `k` internal vertices is only drawn between `u` and `v` on a common
/// face when `k + 1 + dist(u, v) ≥ 5`.
pub fn gen_planar_girth5_with(seed: u64, target: usize, params: &GenParams) -> EmbeddedGraph {
    assert!(
        params.max_internal <= MAX_OVERSHOOT,
        "max_internal too large for the overshoot bound"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if params.avoid_adjacent_twos && target < 20 {
        // C5 admits no step that keeps 2-vertices apart
        return gen_planar_girth5_with(
            seed,
            target,
            &GenParams {
                avoid_adjacent_twos: false,
                ..params.clone()
            },
        );
    }
    let mut b = if target >= 20 && (params.avoid_adjacent_twos || rng.gen_bool(params.dodecahedron)) {
        RotationBuilder::from_graph(&fixtures::dodecahedron())
    } else {
        RotationBuilder::cycle(5)
    };
    let mut g = b.build().expect("generator keeps a valid embedding");
    while b.vertex_count() < target {
        if rng.gen_bool(params.subdivide) {
            let u = pick_weighted(&mut rng, &g, (0..g.vertex_count()).collect(), params.hub_bias);
            let v = *g.neighbors(u).choose(&mut rng).unwrap();
            if !params.avoid_adjacent_twos || (g.degree(u) > 2 && g.degree(v) > 2) {
                b.subdivide(u, v);
                g = b.build().expect("generator keeps a valid embedding");
            }
            continue;
        }
        let u = pick_weighted(&mut rng, &g, (0..g.vertex_count()).collect(), params.hub_bias);
        let cu = rng.gen_range(0..g.degree(u));
        let (f, _) = g.corner_face(u, cu);
        let others: Vec<usize> = (0..g.face(f).degree())
            .filter(|&p| g.face(f).vertex_at(p) != u)
            .collect();
        if others.is_empty() {
            continue;
        }
        let weights: Vec<f64> = others
            .iter()
            .map(|&p| (g.degree(g.face(f).vertex_at(p)) as f64).powf(params.hub_bias))
            .collect();
        let occ = g.face(f).walk()[others[WeightedIndex::new(&weights).unwrap().sample(&mut rng)]];
        let dist = distance(&g, u, occ.vertex).unwrap_or(usize::MAX);
        let k_min = 4usize.saturating_sub(dist);
        if params.avoid_adjacent_twos && k_min > 1 {
            continue;
        }
        let k = rng.gen_range(k_min..=params.max_internal.max(k_min));
        if k == 0 && g.neighbors(u).contains(&occ.vertex) {
            continue;
        }
        b.add_path(u, cu, occ.vertex, occ.corner, k, false);
        g = b.build().expect("generator keeps a valid embedding");
    }
    g
}

fn pick_weighted(rng: &mut ChaCha8Rng, g: &EmbeddedGraph, pool: Vec<usize>, bias: f64) -> usize {
    let weights: Vec<f64> = pool.iter().map(|&v| (g.degree(v).max(1) as f64).powf(bias)).collect();
    pool[WeightedIndex::new(&weights).unwrap().sample(rng)]
}

/// BFS distance between two vertices.
pub fn distance<G: Adjacency + ?Sized>(g: &G, from: usize, to: usize) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    let mut queue = VecDeque::from([from]);
    dist[from] = 0;
    while let Some(x) = queue.pop_front() {
        if x == to {
            return Some(dist[x]);
        }
        for &y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    None
}

/// A random graph on `n` vertices with girth ≥ 5 (or acyclic): candidate
/// edges are visited in random order and each is kept with probability
/// `density` if it closes no cycle shorter than 5.
pub fn random_girth5_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> SimpleGraph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut g = SimpleGraph::new(n);
    for (u, v) in pairs {
        if rng.gen_bool(density) && distance(&g, u, v).is_none_or(|d| d >= 4) {
            g.add_edge(u, v).expect("fresh edge between distinct vertices");
        }
    }
    g
}

/// A reproducible corpus member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusEntry {
    pub index: usize,
    pub seed: u64,
    pub size: usize,
}

impl CorpusEntry {
    /// Odd indices use the structured parameters, even ones the defaults.
    pub fn params(&self) -> GenParams {
        if self.index % 2 == 1 {
            GenParams::structured()
        } else {
            GenParams::default()
        }
    }

    pub fn build(&self) -> EmbeddedGraph {
        gen_planar_girth5_with(self.seed, self.size, &self.params())
    }
}

const CORPUS_SEED: u64 = 0x6e1d_5eed;

/// 1000 planar girth-5 graphs with targets spread over 5..=196, so every
/// member has at most 200 vertices.
pub fn standard_corpus() -> Vec<CorpusEntry> {
    (0..1000)
        .map(|i| CorpusEntry {
            index: i,
            seed: CORPUS_SEED ^ (i as u64).wrapping_mul(0x9e37_79b9),
            size: 5 + (i * 131) % 192,
        })
        .collect()
}

/// Larger graphs with targets spread over 201..=496 (at most 500 vertices).
pub fn large_corpus() -> Vec<CorpusEntry> {
    (0..24)
        .map(|i| CorpusEntry {
            index: 1000 + i,
            seed: CORPUS_SEED.rotate_left(17) ^ i as u64,
            size: 201 + (i * 37) % 296,
        })
        .collect()
}
