//! Combinatorial embeddings given by (signed) rotation systems.
//!
//! A graph is described by listing, for every vertex, its neighbours in
//! cyclic order. An edge may additionally be marked as *twisted*; twisted
//! edges flip the local orientation when a face walk crosses them, which is
//! what allows non-orientable surfaces such as the projective plane. With
//! no twisted edges the embedding is orientable and the faces are traced by
//! the usual rule: the successor of the dart `(u, v)` is `(v, w)` where `w`
//! follows `u` in the rotation at `v`.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

/// One entry of a rotation: the neighbouring vertex and the twist flag of
/// the connecting edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Neighbor {
    pub vertex: usize,
    pub twisted: bool,
}

impl Neighbor {
    pub fn plain(vertex: usize) -> Self {
        Neighbor { vertex, twisted: false }
    }

    pub fn twisted(vertex: usize) -> Self {
        Neighbor { vertex, twisted: true }
    }
}

/// Per-vertex cyclic neighbour lists.
pub type RotationSpec = Vec<Vec<Neighbor>>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {vertex} lists neighbour {neighbor}, which is out of range")]
    OutOfRange { vertex: usize, neighbor: usize },
    #[error("vertex {vertex}: loop or repeated neighbour {neighbor}")]
    NonSimple { vertex: usize, neighbor: usize },
    #[error("vertex {vertex} lists {neighbor} but not vice versa (or the twist flags differ)")]
    Asymmetric { vertex: usize, neighbor: usize },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
}

/// Read-only adjacency access shared by plain and embedded graphs.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;
    fn neighbors(&self, v: usize) -> &[usize];

    fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    fn edge_count(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).sum::<usize>() / 2
    }
}

/// A simple undirected graph without an embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize) -> Self {
        SimpleGraph {
            adjacency: vec![Vec::new(); vertex_count],
        }
    }

    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = SimpleGraph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.adjacency.len();
        if u >= n || v >= n {
            return Err(GraphError::OutOfRange {
                vertex: u.min(v),
                neighbor: u.max(v),
            });
        }
        if u == v || self.adjacency[u].contains(&v) {
            return Err(GraphError::NonSimple { vertex: u, neighbor: v });
        }
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(&v)
    }
}

impl Adjacency for SimpleGraph {
    fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }
}

/// One position of a face boundary walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Occurrence {
    pub vertex: usize,
    /// Corner of `vertex` occupied by the walk: corner `c` lies between
    /// rotation entries `c` and `c + 1` (cyclically).
    pub corner: usize,
    /// Rotation index at `vertex` of the dart leaving towards the next
    /// occurrence.
    pub out_index: usize,
}

/// A face given by its closed boundary walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    walk: Vec<Occurrence>,
    /// For walk position `p` (the edge from position `p` to `p + 1`), the
    /// face and position where the same edge is traversed the second time.
    across: Vec<(usize, usize)>,
    isolated: Option<usize>,
}

impl Face {
    /// Length of the boundary walk; a bridge contributes twice.
    pub fn degree(&self) -> usize {
        self.walk.len()
    }

    pub fn walk(&self) -> &[Occurrence] {
        &self.walk
    }

    /// Vertices along the boundary walk, with repetitions.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.walk.iter().map(|o| o.vertex).chain(self.isolated)
    }

    pub fn vertex_at(&self, pos: usize) -> usize {
        self.walk[pos % self.walk.len()].vertex
    }

    /// Darts `(u, v)` of the boundary walk in order.
    pub fn darts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let len = self.walk.len();
        (0..len).map(move |p| (self.walk[p].vertex, self.walk[(p + 1) % len].vertex))
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices().any(|w| w == v)
    }

    /// Face and walk position on the other side of the edge leaving
    /// position `pos`.
    pub fn across(&self, pos: usize) -> (usize, usize) {
        self.across[pos % self.across.len()]
    }
}

/// A validated, immutable embedded graph with traced faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    rotation: RotationSpec,
    adjacency: Vec<Vec<usize>>,
    /// `mirror[u][i]` is the index of `u` in the rotation of `rotation[u][i]`.
    mirror: Vec<Vec<usize>>,
    faces: Vec<Face>,
    /// `corner_face[v][c]` is the (face, walk position) occupying corner `c` of `v`.
    corner_face: Vec<Vec<(usize, usize)>>,
    edge_count: usize,
    components: usize,
}

/// Builds and validates an embedded graph from per-vertex rotations.
pub fn build_graph(rotation_spec: RotationSpec) -> Result<EmbeddedGraph, GraphError> {
    EmbeddedGraph::new(rotation_spec)
}

impl EmbeddedGraph {
    /// Validates the rotation system and traces its faces. The graph must be
    /// connected.
    pub fn new(rotation: RotationSpec) -> Result<Self, GraphError> {
        let g = Self::new_allow_disconnected(rotation)?;
        if g.components > 1 {
            return Err(GraphError::Disconnected {
                components: g.components,
            });
        }
        Ok(g)
    }

    /// Like [`EmbeddedGraph::new`] but keeps disconnected graphs; the genus
    /// is then the sum over the components.
    pub fn new_allow_disconnected(rotation: RotationSpec) -> Result<Self, GraphError> {
        let n = rotation.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut index: HashMap<(usize, usize), (usize, bool)> = HashMap::new();
        for (u, rot) in rotation.iter().enumerate() {
            for (i, nb) in rot.iter().enumerate() {
                if nb.vertex >= n {
                    return Err(GraphError::OutOfRange {
                        vertex: u,
                        neighbor: nb.vertex,
                    });
                }
                if nb.vertex == u || index.insert((u, nb.vertex), (i, nb.twisted)).is_some() {
                    return Err(GraphError::NonSimple {
                        vertex: u,
                        neighbor: nb.vertex,
                    });
                }
            }
        }
        let mut mirror = Vec::with_capacity(n);
        for (u, rot) in rotation.iter().enumerate() {
            let mut m = Vec::with_capacity(rot.len());
            for nb in rot {
                match index.get(&(nb.vertex, u)) {
                    Some(&(j, tw)) if tw == nb.twisted => m.push(j),
                    _ => {
                        return Err(GraphError::Asymmetric {
                            vertex: u,
                            neighbor: nb.vertex,
                        })
                    }
                }
            }
            mirror.push(m);
        }
        let adjacency: Vec<Vec<usize>> = rotation
            .iter()
            .map(|r| r.iter().map(|nb| nb.vertex).collect())
            .collect();
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        let components = count_components(&adjacency);
        let mut g = EmbeddedGraph {
            rotation,
            adjacency,
            mirror,
            faces: Vec::new(),
            corner_face: Vec::new(),
            edge_count,
            components,
        };
        g.trace_faces();
        Ok(g)
    }

    /// Convenience constructor for orientable embeddings.
    pub fn from_rotations(rotations: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        Self::new(
            rotations
                .into_iter()
                .map(|r| r.into_iter().map(Neighbor::plain).collect())
                .collect(),
        )
    }

    fn step(&self, u: usize, i: usize, forward: bool) -> (usize, usize, bool) {
        let nb = self.rotation[u][i];
        let v = nb.vertex;
        let forward = forward != nb.twisted;
        let j = self.mirror[u][i];
        let d = self.rotation[v].len();
        let next = if forward { (j + 1) % d } else { (j + d - 1) % d };
        (v, next, forward)
    }

    fn trace_faces(&mut self) {
        let n = self.rotation.len();
        let mut offset = vec![0usize; n + 1];
        for v in 0..n {
            offset[v + 1] = offset[v] + self.rotation[v].len();
        }
        let state = |u: usize, i: usize, fw: bool| 2 * (offset[u] + i) + usize::from(!fw);
        let mut seen = vec![false; 2 * offset[n]];
        let mut faces = Vec::new();
        let mut corner_face: Vec<Vec<(usize, usize)>> =
            self.rotation.iter().map(|r| vec![(usize::MAX, 0); r.len()]).collect();

        for fw in [true, false] {
            for u in 0..n {
                for i in 0..self.rotation[u].len() {
                    if seen[state(u, i, fw)] {
                        continue;
                    }
                    let face_id = faces.len();
                    let mut walk = Vec::new();
                    let (mut cu, mut ci, mut cf) = (u, i, fw);
                    loop {
                        let s = state(cu, ci, cf);
                        if seen[s] {
                            break;
                        }
                        seen[s] = true;
                        let d = self.rotation[cu].len();
                        let corner = if cf { (ci + d - 1) % d } else { ci };
                        corner_face[cu][corner] = (face_id, walk.len());
                        walk.push(Occurrence {
                            vertex: cu,
                            corner,
                            out_index: ci,
                        });
                        // the same face traversed backwards
                        let nb = self.rotation[cu][ci];
                        let rev_fw = !(cf != nb.twisted);
                        seen[state(nb.vertex, self.mirror[cu][ci], rev_fw)] = true;
                        let (nu, ni, nf) = self.step(cu, ci, cf);
                        cu = nu;
                        ci = ni;
                        cf = nf;
                    }
                    faces.push(Face {
                        walk,
                        across: Vec::new(),
                        isolated: None,
                    });
                }
            }
        }
        for (v, rot) in self.rotation.iter().enumerate() {
            if rot.is_empty() {
                faces.push(Face {
                    walk: Vec::new(),
                    across: Vec::new(),
                    isolated: Some(v),
                });
            }
        }

        let mut traversals: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
        for (fid, face) in faces.iter().enumerate() {
            for (pos, (a, b)) in face.darts().enumerate() {
                traversals.entry((a.min(b), a.max(b))).or_default().push((fid, pos));
            }
        }
        for (fid, face) in faces.iter_mut().enumerate() {
            let across: Vec<(usize, usize)> = face
                .darts()
                .enumerate()
                .map(|(pos, (a, b))| {
                    let sides = &traversals[&(a.min(b), a.max(b))];
                    debug_assert_eq!(sides.len(), 2);
                    if sides[0] == (fid, pos) {
                        sides[1]
                    } else {
                        sides[0]
                    }
                })
                .collect();
            face.across = across;
        }
        self.faces = faces;
        self.corner_face = corner_face;
    }

    pub fn rotation(&self, v: usize) -> &[Neighbor] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &RotationSpec {
        &self.rotation
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: usize) -> &Face {
        &self.faces[f]
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn is_orientable_signature(&self) -> bool {
        self.rotation.iter().flatten().all(|nb| !nb.twisted)
    }

    /// Face and walk position occupying corner `c` of `v`.
    pub fn corner_face(&self, v: usize, c: usize) -> (usize, usize) {
        self.corner_face[v][c]
    }

    /// Face occurrences around `v`, one per corner, in rotation order.
    pub fn incident_faces(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.corner_face[v].iter().map(|&(f, _)| f)
    }

    /// Euler genus: `|V| - |E| + |F| = 2c - γ` for `c` components.
    pub fn euler_genus(&self) -> usize {
        let chi = self.vertex_count() as i64 - self.edge_count as i64 + self.faces.len() as i64;
        let genus = 2 * self.components as i64 - chi;
        debug_assert!(genus >= 0);
        genus as usize
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        girth(self)
    }

    /// Neighbours of `v` that do not lie on the boundary walk of face `f`.
    pub fn f_external_neighbors(&self, v: usize, f: usize) -> Result<Vec<usize>, NotOnFace> {
        let face = &self.faces[f];
        if !face.contains(v) {
            return Err(NotOnFace { vertex: v, face: f });
        }
        Ok(self.adjacency[v]
            .iter()
            .copied()
            .filter(|&w| !face.contains(w))
            .collect())
    }

    /// The graph with the marked vertices removed (darts deleted, rotation
    /// order of the remaining darts kept), plus the map from new to old ids.
    pub fn without(&self, removed: &[bool]) -> Option<(EmbeddedGraph, Vec<usize>)> {
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|&v| !removed[v]).collect();
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let spec: RotationSpec = keep
            .iter()
            .map(|&v| {
                self.rotation[v]
                    .iter()
                    .filter(|nb| !removed[nb.vertex])
                    .map(|nb| Neighbor {
                        vertex: new_id[nb.vertex],
                        twisted: nb.twisted,
                    })
                    .collect()
            })
            .collect();
        let g = EmbeddedGraph::new_allow_disconnected(spec).ok()?;
        Some((g, keep))
    }

    /// Degree of each vertex, indexed by vertex id.
    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }
}

impl Adjacency for EmbeddedGraph {
    fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    fn edge_count(&self) -> usize {
        self.edge_count
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("vertex {vertex} is not on face {face}")]
pub struct NotOnFace {
    pub vertex: usize,
    pub face: usize,
}

fn count_components(adjacency: &[Vec<usize>]) -> usize {
    let n = adjacency.len();
    let mut seen = vec![false; n];
    let mut components = 0;
    let mut queue = VecDeque::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        components += 1;
        seen[s] = true;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in &adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    components
}

/// Euler genus of a connected embedded graph.
pub fn euler_genus(g: &EmbeddedGraph) -> usize {
    g.euler_genus()
}

/// Shortest cycle length by breadth-first search from every vertex.
pub fn girth<G: Adjacency + ?Sized>(g: &G) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[u] + 1 >= b {
                    break;
                }
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// Vertex classes by degree relative to the threshold `t` (10 for the
/// planar theorem): low `≤ 4`, five, medium `6..=t+1`, high `≥ t+2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexClass {
    Low,
    Five,
    Medium,
    High,
}

impl VertexClass {
    pub fn of_degree(degree: usize, t: usize) -> Self {
        match degree {
            0..=4 => VertexClass::Low,
            5 => VertexClass::Five,
            d if d >= t + 2 => VertexClass::High,
            _ => VertexClass::Medium,
        }
    }
}

pub fn classify_vertex<G: Adjacency + ?Sized>(g: &G, v: usize, t: usize) -> VertexClass {
    VertexClass::of_degree(g.degree(v), t)
}

/// Mutable rotation lists used to grow planar graphs by local operations.
#[derive(Debug, Clone, Default)]
pub struct RotationBuilder {
    rotation: RotationSpec,
}

impl RotationBuilder {
    pub fn new() -> Self {
        RotationBuilder::default()
    }

    pub fn from_graph(g: &EmbeddedGraph) -> Self {
        RotationBuilder {
            rotation: g.rotations().clone(),
        }
    }

    pub fn cycle(len: usize) -> Self {
        let rotation = (0..len)
            .map(|i| vec![Neighbor::plain((i + len - 1) % len), Neighbor::plain((i + 1) % len)])
            .collect();
        RotationBuilder { rotation }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn add_vertex(&mut self) -> usize {
        self.rotation.push(Vec::new());
        self.rotation.len() - 1
    }

    /// Inserts `w` into the rotation at `v` right after corner `corner`
    /// (between entries `corner` and `corner + 1`).
    fn insert_at_corner(&mut self, v: usize, corner: usize, w: Neighbor) {
        let d = self.rotation[v].len();
        let at = if d == 0 { 0 } else { corner % d + 1 };
        self.rotation[v].insert(at, w);
    }

    /// Replaces the edge `uv` by a path `u - w - v` through a new vertex.
    pub fn subdivide(&mut self, u: usize, v: usize) -> usize {
        let w = self.add_vertex();
        let iu = self.rotation[u].iter().position(|nb| nb.vertex == v).expect("edge uv");
        let iv = self.rotation[v].iter().position(|nb| nb.vertex == u).expect("edge vu");
        let tw = self.rotation[u][iu].twisted;
        self.rotation[u][iu] = Neighbor { vertex: w, twisted: tw };
        self.rotation[v][iv] = Neighbor { vertex: w, twisted: tw };
        self.rotation[w] = vec![Neighbor::plain(u), Neighbor::plain(v)];
        w
    }

    /// Adds a new leaf attached to `v` inside corner `corner`.
    pub fn add_leaf(&mut self, v: usize, corner: usize) -> usize {
        let w = self.add_vertex();
        self.insert_at_corner(v, corner, Neighbor::plain(w));
        self.rotation[w].push(Neighbor::plain(v));
        w
    }

    /// Joins corner `cu` of `u` to corner `cv` of `v` by a path with
    /// `internal` new vertices. When both corners belong to the same face of
    /// an orientable embedding the new path splits that face in two. Returns
    /// the internal vertices in order from `u` to `v`.
    pub fn add_path(&mut self, u: usize, cu: usize, v: usize, cv: usize, internal: usize, twisted: bool) -> Vec<usize> {
        assert!(u != v || internal > 0, "a direct edge needs two distinct endpoints");
        let inner: Vec<usize> = (0..internal).map(|_| self.add_vertex()).collect();
        let mut chain = vec![u];
        chain.extend(&inner);
        chain.push(v);
        // the twist, if any, sits on the first edge
        let first = Neighbor {
            vertex: chain[1],
            twisted,
        };
        let last = Neighbor::plain(chain[chain.len() - 2]);
        if u == v {
            let (c1, c2) = (cu, cv);
            // insert the later corner first so the earlier index stays valid
            if c1 >= c2 {
                self.insert_at_corner(u, c1, first);
                self.insert_at_corner(u, c2, last);
            } else {
                self.insert_at_corner(u, c2, last);
                self.insert_at_corner(u, c1, first);
            }
        } else {
            self.insert_at_corner(u, cu, first);
            self.insert_at_corner(v, cv, last);
        }
        for k in 1..chain.len() - 1 {
            let x = chain[k];
            let prev_tw = k == 1 && twisted;
            self.rotation[x] = vec![
                Neighbor {
                    vertex: chain[k - 1],
                    twisted: prev_tw,
                },
                Neighbor::plain(chain[k + 1]),
            ];
        }
        if inner.is_empty() {
            // direct edge: `last` above pointed at `u`; fix its twist flag
            let i = self.rotation[v].iter().position(|nb| nb.vertex == u).unwrap();
            self.rotation[v][i].twisted = twisted;
        }
        inner
    }

    pub fn spec(&self) -> &RotationSpec {
        &self.rotation
    }

    pub fn build(&self) -> Result<EmbeddedGraph, GraphError> {
        EmbeddedGraph::new(self.rotation.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn c5() -> EmbeddedGraph {
        fixtures::cycle(5)
    }

    #[test]
    fn cycle_has_two_faces_in_the_plane() {
        let g = c5();
        assert_eq!(g.face_count(), 2);
        assert_eq!(g.euler_genus(), 0);
        assert_eq!(g.girth(), Some(5));
        assert!(g.faces().iter().all(|f| f.degree() == 5));
    }

    #[test]
    fn loop_is_rejected() {
        let spec = vec![vec![Neighbor::plain(1)], vec![Neighbor::plain(0), Neighbor::plain(1)]];
        assert!(matches!(
            build_graph(spec),
            Err(GraphError::NonSimple { vertex: 1, neighbor: 1 })
        ));
    }

    #[test]
    fn duplicate_neighbor_is_rejected() {
        let spec = vec![
            vec![Neighbor::plain(1), Neighbor::plain(1)],
            vec![Neighbor::plain(0), Neighbor::plain(0)],
        ];
        assert!(matches!(build_graph(spec), Err(GraphError::NonSimple { .. })));
    }

    #[test]
    fn one_sided_adjacency_is_rejected() {
        let spec = vec![vec![Neighbor::plain(1)], vec![]];
        assert!(matches!(
            build_graph(spec),
            Err(GraphError::Asymmetric { vertex: 0, neighbor: 1 })
        ));
        let spec = vec![vec![Neighbor::twisted(1)], vec![Neighbor::plain(0)]];
        assert!(matches!(build_graph(spec), Err(GraphError::Asymmetric { .. })));
    }

    #[test]
    fn disconnected_is_rejected() {
        let spec = vec![
            vec![Neighbor::plain(1)],
            vec![Neighbor::plain(0)],
            vec![Neighbor::plain(3)],
            vec![Neighbor::plain(2)],
        ];
        assert_eq!(build_graph(spec), Err(GraphError::Disconnected { components: 2 }));
    }

    #[test]
    fn single_vertex_is_a_sphere() {
        let g = build_graph(vec![vec![]]).unwrap();
        assert_eq!(g.face_count(), 1);
        assert_eq!(g.euler_genus(), 0);
        assert_eq!(g.girth(), None);
    }

    #[test]
    fn petersen_projective() {
        let g = fixtures::petersen_projective();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.face_count(), 6);
        assert_eq!(g.euler_genus(), 1);
        assert!(g.faces().iter().all(|f| f.degree() == 5));
        assert_eq!(g.girth(), Some(5));
    }

    #[test]
    fn dodecahedron_is_planar() {
        let g = fixtures::dodecahedron();
        assert_eq!((g.vertex_count(), g.edge_count(), g.face_count()), (20, 30, 12));
        assert_eq!(g.euler_genus(), 0);
        assert_eq!(g.girth(), Some(5));
    }

    #[test]
    fn tree_is_acyclic_with_one_face() {
        let g = EmbeddedGraph::from_rotations(vec![vec![1, 2, 3], vec![0], vec![0], vec![0, 4], vec![3]]).unwrap();
        assert_eq!(g.girth(), None);
        assert_eq!(g.face_count(), 1);
        assert_eq!(g.faces()[0].degree(), 8);
        assert_eq!(g.euler_genus(), 0);
    }

    #[test]
    fn classification_thresholds() {
        assert_eq!(VertexClass::of_degree(12, 10), VertexClass::High);
        assert_eq!(VertexClass::of_degree(11, 10), VertexClass::Medium);
        assert_eq!(VertexClass::of_degree(7, 10), VertexClass::Medium);
        assert_eq!(VertexClass::of_degree(6, 10), VertexClass::Medium);
        assert_eq!(VertexClass::of_degree(5, 10), VertexClass::Five);
        assert_eq!(VertexClass::of_degree(2, 10), VertexClass::Low);
        assert_eq!(VertexClass::of_degree(4, 10), VertexClass::Low);
        assert_eq!(VertexClass::of_degree(13, 11), VertexClass::High);
        assert_eq!(VertexClass::of_degree(12, 11), VertexClass::Medium);
    }

    #[test]
    fn external_neighbors_on_cycle_are_empty() {
        let g = c5();
        for f in 0..g.face_count() {
            for v in 0..5 {
                assert!(g.f_external_neighbors(v, f).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn external_neighbors_requires_incidence() {
        let g = fixtures::dodecahedron();
        let f = 0;
        let off = (0..20).find(|&v| !g.face(f).contains(v)).unwrap();
        assert_eq!(g.f_external_neighbors(off, f), Err(NotOnFace { vertex: off, face: f }));
        let on = g.face(f).vertex_at(0);
        let ext = g.f_external_neighbors(on, f).unwrap();
        assert_eq!(ext.len(), 1);
    }

    #[test]
    fn corners_and_across_are_consistent() {
        for g in [c5(), fixtures::dodecahedron(), fixtures::petersen_projective()] {
            for (fid, face) in g.faces().iter().enumerate() {
                for (pos, occ) in face.walk().iter().enumerate() {
                    assert_eq!(g.corner_face(occ.vertex, occ.corner), (fid, pos));
                    let (of, op) = face.across(pos);
                    let (a, b) = face.darts().nth(pos).unwrap();
                    let (c, d) = g.face(of).darts().nth(op).unwrap();
                    assert_eq!((a.min(b), a.max(b)), (c.min(d), c.max(d)));
                    assert_eq!(g.face(of).across(op), (fid, pos));
                }
            }
        }
    }

    #[test]
    fn path_insertion_splits_a_face() {
        let mut b = RotationBuilder::cycle(6);
        let g = b.build().unwrap();
        let face = g.face(0);
        let (o0, o3) = (face.walk()[0], face.walk()[3]);
        b.add_path(o0.vertex, o0.corner, o3.vertex, o3.corner, 2, false);
        let h = b.build().unwrap();
        assert_eq!(h.face_count(), 3);
        assert_eq!(h.euler_genus(), 0);
        let mut degs: Vec<usize> = h.faces().iter().map(Face::degree).collect();
        degs.sort();
        assert_eq!(degs, vec![6, 6, 6]);
    }

    #[test]
    fn twisted_chord_adds_a_crosscap() {
        let mut b = RotationBuilder::cycle(8);
        let g = b.build().unwrap();
        let face = g.face(0);
        let (o0, o4) = (face.walk()[0], face.walk()[4]);
        b.add_path(o0.vertex, o0.corner, o4.vertex, o4.corner, 1, true);
        let h = b.build().unwrap();
        assert_eq!(h.face_count(), 2);
        assert_eq!(h.euler_genus(), 1);
    }
}
