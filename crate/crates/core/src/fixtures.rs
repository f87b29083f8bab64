//! Named embedded graphs used by tests, benches and the CLI.

use crate::discharge::FaceClass;
use crate::graph::{EmbeddedGraph, Neighbor, RotationBuilder};

/// The cycle `C_n` embedded in the plane.
pub fn cycle(n: usize) -> EmbeddedGraph {
    RotationBuilder::cycle(n).build().expect("cycle is a valid embedding")
}

/// The dodecahedron with its planar rotation system.
pub fn dodecahedron() -> EmbeddedGraph {
    let rot: [[usize; 3]; 20] = [
        [1, 10, 19],
        [0, 2, 8],
        [1, 3, 6],
        [2, 19, 4],
        [3, 17, 5],
        [4, 15, 6],
        [5, 7, 2],
        [6, 14, 8],
        [7, 9, 1],
        [8, 13, 10],
        [9, 11, 0],
        [10, 12, 18],
        [11, 13, 16],
        [12, 9, 14],
        [13, 7, 15],
        [14, 5, 16],
        [15, 17, 12],
        [16, 4, 18],
        [17, 19, 11],
        [18, 3, 0],
    ];
    EmbeddedGraph::from_rotations(rot.iter().map(|r| r.to_vec()).collect()).expect("dodecahedron is a valid embedding")
}

/// The Petersen graph embedded in the projective plane (six pentagonal
/// faces). Outer cycle `0..5`, spokes `i ~ i+5`, inner pentagram on `5..10`;
/// the edges 2-7, 3-8 and 6-9 carry a twist.
pub fn petersen_projective() -> EmbeddedGraph {
    let rot: [[usize; 3]; 10] = [
        [1, 4, 5],
        [0, 6, 2],
        [1, 7, 3],
        [2, 8, 4],
        [0, 3, 9],
        [0, 7, 8],
        [1, 8, 9],
        [2, 5, 9],
        [3, 6, 5],
        [4, 6, 7],
    ];
    let twisted = [(2, 7), (3, 8), (6, 9)];
    let spec = rot
        .iter()
        .enumerate()
        .map(|(u, r)| {
            r.iter()
                .map(|&v| Neighbor {
                    vertex: v,
                    twisted: twisted.contains(&(u.min(v), u.max(v))),
                })
                .collect()
        })
        .collect();
    EmbeddedGraph::new(spec).expect("Petersen projective embedding is valid")
}

/// A hub whose neighbours are all 2-vertices ("spokes"), with a ring of
/// outer vertices closing every hub corner into a 5-face
/// `spoke_i, hub, spoke_{i+1}, ring_{i+1}, ring_i`.
///
/// Ring vertices get their requested degree from pendant structure placed
/// in the outer face: a ring vertex of non-high degree first receives a
/// pendant path of length two (so that neighbour has degree 2), the rest
/// are leaves.
#[derive(Debug, Clone)]
pub struct HubGadget {
    pub hub_degree: usize,
    pub ring_degrees: Vec<usize>,
    /// Spokes that receive one extra leaf (raising them to degree 3), as
    /// `(spoke, hub corner)`: the leaf goes into the face at that hub corner,
    /// which must be `spoke - 1` or `spoke`.
    pub bumped_spokes: Vec<(usize, usize)>,
    pub t: usize,
}

#[derive(Debug, Clone)]
pub struct HubLayout {
    pub hub: usize,
    pub spokes: Vec<usize>,
    pub ring: Vec<usize>,
    /// Degree-2 pendant neighbour of each ring vertex, when one was added.
    pub pendant: Vec<Option<usize>>,
}

impl HubLayout {
    /// Face occupying hub corner `i` (between spokes `i` and `i + 1`).
    pub fn hub_face(&self, g: &EmbeddedGraph, i: usize) -> usize {
        g.corner_face(self.hub, i % self.spokes.len()).0
    }
}

impl HubGadget {
    pub fn new(hub_degree: usize, t: usize) -> Self {
        HubGadget {
            hub_degree,
            ring_degrees: vec![3; hub_degree],
            bumped_spokes: Vec::new(),
            t,
        }
    }

    pub fn ring(mut self, i: usize, degree: usize) -> Self {
        let d = self.hub_degree;
        self.ring_degrees[i % d] = degree;
        self
    }

    pub fn bump_spoke(mut self, spoke: usize, into_corner: usize) -> Self {
        self.bumped_spokes.push((spoke, into_corner));
        self
    }

    pub fn build(&self) -> (EmbeddedGraph, HubLayout) {
        let d = self.hub_degree;
        assert!(d >= 5, "hub gadget needs at least five spokes");
        let hub = 0;
        let spokes: Vec<usize> = (1..=d).collect();
        let ring: Vec<usize> = (d + 1..=2 * d).collect();
        let mut spec: Vec<Vec<Neighbor>> = vec![Vec::new(); 2 * d + 1];
        spec[hub] = spokes.iter().map(|&s| Neighbor::plain(s)).collect();
        for i in 0..d {
            spec[spokes[i]] = vec![Neighbor::plain(hub), Neighbor::plain(ring[i])];
            spec[ring[i]] = vec![
                Neighbor::plain(spokes[i]),
                Neighbor::plain(ring[(i + d - 1) % d]),
                Neighbor::plain(ring[(i + 1) % d]),
            ];
        }
        let mut b = RotationBuilder::from_graph(&EmbeddedGraph::new(spec).expect("gadget skeleton"));
        let mut pendant = vec![None; d];
        for i in 0..d {
            let want = self.ring_degrees[i];
            assert!(want >= 3, "ring vertices have degree at least 3");
            let u = ring[i];
            let mut first = want < self.t + 2;
            while b.degree(u) < want {
                // outer corner sits between ring[i-1] and the entries after it
                let e = b.add_leaf(u, 1);
                if first {
                    b.add_leaf(e, 0);
                    pendant[i] = Some(e);
                    first = false;
                }
            }
        }
        for &(s, into) in &self.bumped_spokes {
            // corner 0 of spoke i lies in hub face i-1, corner 1 in hub face i
            let corner = if into % d == s % d { 1 } else { 0 };
            b.add_leaf(spokes[s % d], corner);
        }
        let g = b.build().expect("hub gadget is a valid embedding");
        (
            g,
            HubLayout {
                hub,
                spokes,
                ring,
                pendant,
            },
        )
    }
}

/// A hub gadget whose hub corner 0 realises `class`; returns the gadget
/// description so callers can perturb it.
pub fn face_class_gadget(class: FaceClass, t: usize) -> HubGadget {
    let high = t + 2;
    let d = high;
    let g = HubGadget::new(d, t);
    match class {
        FaceClass::Special => g.ring(0, 5).ring(1, 3),
        FaceClass::X1 => g.ring(0, high).ring(1, 3).ring(2, 3),
        FaceClass::X2 => g.ring(0, high).ring(1, 4).ring(2, 3),
        FaceClass::Y1 => g.ring(d - 1, high).ring(0, 4).ring(1, 3).ring(2, high),
        FaceClass::Y2 => g.ring(d - 1, high).ring(0, 3).ring(1, 3).ring(2, high),
        FaceClass::Terrible => g.ring(d - 1, high).ring(0, 4).ring(1, 4).ring(2, high),
        FaceClass::Plain => g,
    }
}

/// Graph and face id realising `class` at hub corner 0.
pub fn face_class_fixture(class: FaceClass, t: usize) -> (EmbeddedGraph, usize, HubLayout) {
    let (g, layout) = face_class_gadget(class, t).build();
    let f = layout.hub_face(&g, 0);
    (g, f, layout)
}

/// A 6-cycle `u1 u2 u3 u4 x y` with `u1, u4` padded to degree `high` and
/// `u2, u3` padded to degrees `d2, d3` by leaves. Returns the graph and the
/// walk-ordered vertex ids `[u1, u2, u3, u4]`.
pub fn sponsor_fixture(high: usize, d2: usize, d3: usize) -> (EmbeddedGraph, [usize; 4]) {
    let mut b = RotationBuilder::cycle(6);
    let targets = [(0, high), (1, d2), (2, d3), (3, high)];
    for &(v, deg) in &targets {
        while b.degree(v) < deg {
            b.add_leaf(v, 1);
        }
    }
    (b.build().expect("sponsor fixture"), [0, 1, 2, 3])
}
