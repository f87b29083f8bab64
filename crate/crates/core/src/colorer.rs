//! Constructive (1, t)-colouring by repeated deletion of reducible
//! configurations and local recolouring on the way back.

use std::fmt;

use thiserror::Error;

use crate::coloring::{is_valid, solve_exact, Coloring, DefectVector, SolveResult};
use crate::discharge::{classify_faces, face_allowance, FaceClass};
use crate::graph::{Adjacency, EmbeddedGraph};

/// Class index of the defect-1 class.
pub const ONE: usize = 0;
/// Class index of the defect-t class.
pub const BIG: usize = 1;

/// Node budget for the exact solver when no reduction applies.
pub const FALLBACK_BUDGET: u64 = 50_000_000;

/// `K(γ) = max(10, 4γ + 3)`.
pub fn capacity(genus: usize) -> usize {
    10.max(4 * genus + 3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReductionKind {
    DegreeAtMostOne,
    AdjacentTwoVertices,
    AllLowDegreeNeighbors,
    TerribleRichHighVertex,
    /// Same configuration counted with bad faces instead of terrible ones.
    BadRichHighVertex,
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub kind: ReductionKind,
    /// Vertices removed by this step, in the order they are recoloured.
    pub deleted: Vec<usize>,
    /// Named vertices around the deletion: `v` for the centre, `u'`/`v'`
    /// for outer neighbours of a 2-2 edge, `v4`, `u4`, `v5`, `u5` around a
    /// face-rich hub.
    pub labels: Vec<(&'static str, usize)>,
    pub t: usize,
}

impl ReductionStep {
    pub fn label(&self, name: &str) -> Option<usize> {
        self.labels.iter().find(|(n, _)| *n == name).map(|&(_, v)| v)
    }
}

/// One vertex changing class during an extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Recolor {
    pub vertex: usize,
    pub from: Option<usize>,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub step: ReductionStep,
    pub actions: Vec<Recolor>,
}

/// Reductions in deletion order with the recolourings that undid them.
/// Extensions ran in reverse order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringTrace {
    pub vertex_count: usize,
    pub t: usize,
    pub entries: Vec<TraceEntry>,
}

impl ColoringTrace {
    /// Re-applies every recolouring, last deletion first.
    pub fn replay(&self) -> Coloring {
        let mut phi = Coloring::empty(self.vertex_count, DefectVector::one_t(self.t));
        for e in self.entries.iter().rev() {
            for a in &e.actions {
                phi.set(a.vertex, Some(a.to));
            }
        }
        phi
    }
}

/// Local state when an extension gives up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionFailure {
    pub step: ReductionStep,
    /// Classes of the deleted vertices and their neighbourhoods at failure.
    pub local: Vec<(usize, Option<usize>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorerError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("girth {girth} is below 5")]
    GirthTooSmall { girth: usize },
    #[error("could not extend the colouring across a {} step", .0.step.kind)]
    ExtensionFailed(Box<ExtensionFailure>),
    #[error("no reduction applies and the exact solver found no colouring ({0})")]
    FallbackFailed(&'static str),
    #[error("colouring of the reduced graph does not match it: {0}")]
    BadInput(String),
}

#[derive(Debug, Clone)]
pub enum ColorOutcome {
    Reduced {
        coloring: Coloring,
        trace: ColoringTrace,
    },
    /// No reduction applied somewhere; the whole graph went to the exact
    /// solver. `theorem_anomaly` is set when the input was on the plane or
    /// projective plane with `t = 10`, where this should never happen.
    Fallback {
        coloring: Coloring,
        theorem_anomaly: bool,
    },
}

impl ColorOutcome {
    pub fn coloring(&self) -> &Coloring {
        match self {
            ColorOutcome::Reduced { coloring, .. } | ColorOutcome::Fallback { coloring, .. } => coloring,
        }
    }

    pub fn is_fallback(&self) -> bool {
        matches!(self, ColorOutcome::Fallback { .. })
    }
}

/// The graph as reductions see it: the input minus deleted vertices.
struct Work<'a> {
    g: &'a EmbeddedGraph,
    alive: Vec<bool>,
    deg: Vec<usize>,
    remaining: usize,
}

impl<'a> Work<'a> {
    fn new(g: &'a EmbeddedGraph) -> Self {
        Work {
            g,
            alive: vec![true; g.vertex_count()],
            deg: g.degrees(),
            remaining: g.vertex_count(),
        }
    }

    fn nbrs(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.g.neighbors(v).iter().copied().filter(move |&w| self.alive[w])
    }

    fn delete(&mut self, v: usize) {
        debug_assert!(self.alive[v]);
        self.alive[v] = false;
        self.remaining -= 1;
        for &w in self.g.neighbors(v) {
            if self.alive[w] {
                self.deg[w] -= 1;
            }
        }
    }

    fn live(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.alive.len()).filter(move |&v| self.alive[v])
    }

    fn find(&self, t: usize) -> Option<ReductionStep> {
        let step = |kind, deleted: Vec<usize>, labels| {
            Some(ReductionStep {
                kind,
                deleted,
                labels,
                t,
            })
        };

        if let Some(v) = self.live().find(|&v| self.deg[v] <= 1) {
            let mut labels = vec![("v", v)];
            labels.extend(self.nbrs(v).map(|w| ("w", w)));
            return step(ReductionKind::DegreeAtMostOne, vec![v], labels);
        }
        for u in self.live().filter(|&u| self.deg[u] == 2) {
            if let Some(v) = self.nbrs(u).filter(|&w| self.deg[w] == 2).min() {
                let u_out = self.nbrs(u).find(|&w| w != v).unwrap();
                let v_out = self.nbrs(v).find(|&w| w != u).unwrap();
                return step(
                    ReductionKind::AdjacentTwoVertices,
                    vec![u, v],
                    vec![("u", u), ("v", v), ("u'", u_out), ("v'", v_out)],
                );
            }
        }
        if let Some(v) = self
            .live()
            .find(|&v| self.deg[v] <= t + 1 && self.nbrs(v).all(|w| self.deg[w] <= t + 1))
        {
            return step(ReductionKind::AllLowDegreeNeighbors, vec![v], vec![("v", v)]);
        }
        if !self.live().any(|v| self.deg[v] >= t + 2) {
            return None;
        }
        let removed: Vec<bool> = self.alive.iter().map(|a| !a).collect();
        let (h, keep) = self.g.without(&removed)?;
        let mut found = face_rich_hub(
            &h,
            t,
            |c| c == FaceClass::Terrible,
            ReductionKind::TerribleRichHighVertex,
        );
        if found.is_none() {
            found = face_rich_hub(&h, t, FaceClass::is_bad, ReductionKind::BadRichHighVertex);
        }
        let mut s = found?;
        for v in s.deleted.iter_mut() {
            *v = keep[*v];
        }
        for (_, v) in s.labels.iter_mut() {
            *v = keep[*v];
        }
        Some(s)
    }
}

/// A high vertex with more `class`-faces than allowed, with the deleted
/// 2-vertex `v4` chosen so that the face three corners back is not such a
/// face.
fn face_rich_hub(
    h: &EmbeddedGraph,
    t: usize,
    class: impl Fn(FaceClass) -> bool,
    kind: ReductionKind,
) -> Option<ReductionStep> {
    let classes = classify_faces(h, t);
    for v in 0..h.vertex_count() {
        let d = h.degree(v);
        if d < t + 2 {
            continue;
        }
        let rich: Vec<bool> = (0..d).map(|c| class(classes.class(h.corner_face(v, c).0))).collect();
        if rich.iter().filter(|&&r| r).count() <= face_allowance(d, t) {
            continue;
        }
        let rot = h.neighbors(v);
        let mut pick = None;
        for c in (0..d).filter(|&c| rich[c]) {
            if !rich[(c + d - 3) % d] {
                pick = Some((rot[c], rot[(c + 1) % d]));
                break;
            }
            if !rich[(c + 3) % d] {
                pick = Some((rot[(c + 1) % d], rot[c]));
                break;
            }
        }
        let c0 = (0..d).find(|&c| rich[c]).unwrap();
        let (v4, v5) = pick.unwrap_or((rot[c0], rot[(c0 + 1) % d]));
        let other = |x: usize| h.neighbors(x).iter().copied().find(|&w| w != v);
        let mut labels = vec![("v", v), ("v4", v4), ("v5", v5)];
        if let Some(u4) = other(v4) {
            labels.push(("u4", u4));
        }
        if let Some(u5) = other(v5) {
            labels.push(("u5", u5));
        }
        return Some(ReductionStep {
            kind,
            deleted: vec![v4],
            labels,
            t,
        });
    }
    None
}

/// First applicable reducible configuration, searched in the fixed order
/// degree ≤ 1, adjacent 2-vertices, all-low neighbourhood, face-rich hub.
pub fn find_reduction(g: &EmbeddedGraph, t: usize) -> Result<Option<ReductionStep>, ColorerError> {
    if g.vertex_count() == 0 {
        return Err(ColorerError::EmptyGraph);
    }
    Ok(Work::new(g).find(t))
}

/// Extension state over a graph whose uncoloured vertices are treated as
/// absent.
struct Ext<'a, G: Adjacency + ?Sized> {
    g: &'a G,
    colors: Vec<Option<usize>>,
    caps: [usize; 2],
    actions: Vec<Recolor>,
}

impl<'a, G: Adjacency + ?Sized> Ext<'a, G> {
    fn same(&self, v: usize) -> usize {
        match self.colors[v] {
            None => 0,
            Some(c) => self
                .g
                .neighbors(v)
                .iter()
                .filter(|&&w| self.colors[w] == Some(c))
                .count(),
        }
    }

    fn over(&self, v: usize) -> bool {
        self.colors[v].is_some_and(|c| self.same(v) > self.caps[c])
    }

    fn set(&mut self, v: usize, c: usize) {
        let from = self.colors[v];
        if from != Some(c) {
            self.colors[v] = Some(c);
            self.actions.push(Recolor { vertex: v, from, to: c });
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.actions.len() > mark {
            let a = self.actions.pop().unwrap();
            self.colors[a.vertex] = a.from;
        }
    }

    /// Valid around every vertex touched since `mark`.
    fn valid_since(&self, mark: usize) -> bool {
        self.actions[mark..]
            .iter()
            .all(|a| !self.over(a.vertex) && self.g.neighbors(a.vertex).iter().all(|&w| !self.over(w)))
    }

    fn attempt(&mut self, f: impl FnOnce(&mut Self)) -> bool {
        let mark = self.actions.len();
        f(self);
        if self.valid_since(mark) {
            true
        } else {
            self.undo_to(mark);
            false
        }
    }

    fn big_neighbours(&self, v: usize) -> Vec<usize> {
        self.g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.colors[w] == Some(BIG))
            .collect()
    }

    /// Moves every over-full defect-t neighbour of `y` to the defect-1 class.
    fn relieve_around(&mut self, y: usize) {
        for w in self.big_neighbours(y) {
            if self.over(w) {
                self.set(w, ONE);
            }
        }
    }

    fn other_end(&self, x: usize, v: usize) -> Option<usize> {
        self.g
            .neighbors(x)
            .iter()
            .copied()
            .find(|&w| w != v && self.colors[w].is_some())
    }

    fn extend(&mut self, step: &ReductionStep) -> bool {
        match step.kind {
            ReductionKind::DegreeAtMostOne => {
                let v = step.deleted[0];
                let c = match self.g.neighbors(v).iter().find_map(|&w| self.colors[w]) {
                    Some(c) => 1 - c,
                    None => ONE,
                };
                self.attempt(|e| e.set(v, c))
            }
            ReductionKind::AdjacentTwoVertices => {
                let (u, v) = (step.deleted[0], step.deleted[1]);
                let cu = self.other_end(u, v).and_then(|w| self.colors[w]).unwrap_or(ONE);
                let cv = self.other_end(v, u).and_then(|w| self.colors[w]).unwrap_or(ONE);
                if cu == cv {
                    self.attempt(|e| {
                        e.set(u, 1 - cu);
                        e.set(v, 1 - cu);
                    })
                } else {
                    self.attempt(|e| {
                        e.set(u, 1 - cu);
                        e.set(v, 1 - cv);
                    })
                }
            }
            ReductionKind::AllLowDegreeNeighbors => {
                let v = step.deleted[0];
                let has_one = self.g.neighbors(v).iter().any(|&w| self.colors[w] == Some(ONE));
                if !has_one {
                    return self.attempt(|e| e.set(v, ONE));
                }
                self.attempt(|e| {
                    for w in e.big_neighbours(v) {
                        if e.same(w) >= e.caps[BIG] {
                            e.set(w, ONE);
                        }
                    }
                    e.set(v, BIG);
                })
            }
            ReductionKind::TerribleRichHighVertex | ReductionKind::BadRichHighVertex => self.extend_at_hub(step),
        }
    }

    /// Tries the recolourings of the face-rich hub argument in order and
    /// keeps the first that leaves a valid colouring.
    fn extend_at_hub(&mut self, step: &ReductionStep) -> bool {
        let v4 = step.deleted[0];
        let Some(v) = step.label("v") else { return false };
        let u4 = self.other_end(v4, v);

        if self.attempt(|e| e.set(v4, ONE)) || self.attempt(|e| e.set(v4, BIG)) {
            return true;
        }
        if let Some(u4) = u4 {
            if self.attempt(|e| {
                e.set(u4, ONE);
                e.set(v4, BIG);
            }) {
                return true;
            }
            if self.attempt(|e| {
                e.set(v4, ONE);
                e.set(u4, BIG);
                e.relieve_around(u4);
            }) {
                return true;
            }
        }
        for x in self.big_neighbours(v) {
            if self.attempt(|e| {
                e.set(x, ONE);
                e.set(v4, BIG);
            }) {
                return true;
            }
        }
        for x in self.big_neighbours(v) {
            let Some(ux) = self.other_end(x, v) else { continue };
            if self.attempt(|e| {
                e.set(x, ONE);
                e.set(ux, BIG);
                e.relieve_around(ux);
                e.set(v4, BIG);
            }) {
                return true;
            }
        }
        false
    }

    fn failure(&self, step: &ReductionStep) -> ExtensionFailure {
        let mut vs: Vec<usize> = step.deleted.clone();
        vs.extend(step.labels.iter().map(|&(_, v)| v));
        for &x in &step.deleted {
            vs.extend(self.g.neighbors(x).iter().copied());
        }
        vs.sort_unstable();
        vs.dedup();
        ExtensionFailure {
            step: step.clone(),
            local: vs.into_iter().map(|v| (v, self.colors[v])).collect(),
        }
    }
}

/// Extends a (1, t)-colouring of `g` minus `step.deleted` to all of `g`.
/// `phi_sub` is indexed by `g`'s vertices with the deleted ones uncoloured.
pub fn extend_coloring(g: &EmbeddedGraph, phi_sub: &Coloring, step: &ReductionStep) -> Result<Coloring, ColorerError> {
    if phi_sub.len() != g.vertex_count() {
        return Err(ColorerError::BadInput(format!(
            "{} classes for {} vertices",
            phi_sub.len(),
            g.vertex_count()
        )));
    }
    for v in 0..g.vertex_count() {
        let deleted = step.deleted.contains(&v);
        if deleted != phi_sub.class(v).is_none() {
            return Err(ColorerError::BadInput(format!(
                "vertex {v} coloured state does not match the step"
            )));
        }
    }
    let mut ext = Ext {
        g,
        colors: phi_sub.assignment().to_vec(),
        caps: [1, step.t],
        actions: Vec::new(),
    };
    if !ext.extend(step) {
        return Err(ColorerError::ExtensionFailed(Box::new(ext.failure(step))));
    }
    Ok(Coloring::from_partial(ext.colors, DefectVector::one_t(step.t)).expect("classes are 0 or 1"))
}

/// Colours `g` with defects (1, t) by reductions; falls back to the exact
/// solver if at some point no reduction applies.
pub fn color(g: &EmbeddedGraph, t: usize) -> Result<ColorOutcome, ColorerError> {
    if g.vertex_count() == 0 {
        return Err(ColorerError::EmptyGraph);
    }
    if let Some(girth) = g.girth() {
        if girth < 5 {
            return Err(ColorerError::GirthTooSmall { girth });
        }
    }
    let mut work = Work::new(g);
    let mut steps = Vec::new();
    while work.remaining > 0 {
        match work.find(t) {
            Some(step) => {
                for &v in &step.deleted {
                    work.delete(v);
                }
                steps.push(step);
            }
            None => return fallback(g, t),
        }
    }

    let mut ext = Ext {
        g,
        colors: vec![None; g.vertex_count()],
        caps: [1, t],
        actions: Vec::new(),
    };
    let mut entries: Vec<TraceEntry> = Vec::with_capacity(steps.len());
    for step in steps.into_iter().rev() {
        let mark = ext.actions.len();
        if !ext.extend(&step) {
            return Err(ColorerError::ExtensionFailed(Box::new(ext.failure(&step))));
        }
        let actions = ext.actions.split_off(mark);
        entries.push(TraceEntry { step, actions });
    }
    entries.reverse();
    let coloring = Coloring::from_partial(ext.colors, DefectVector::one_t(t)).expect("classes are 0 or 1");
    debug_assert!(is_valid(g, &coloring, &DefectVector::one_t(t)).unwrap_or(false));
    Ok(ColorOutcome::Reduced {
        coloring,
        trace: ColoringTrace {
            vertex_count: g.vertex_count(),
            t,
            entries,
        },
    })
}

fn fallback(g: &EmbeddedGraph, t: usize) -> Result<ColorOutcome, ColorerError> {
    let theorem_anomaly = g.euler_genus() <= 1 && t == 10;
    match solve_exact(g, &DefectVector::one_t(t), FALLBACK_BUDGET) {
        SolveResult::Found(coloring) => Ok(ColorOutcome::Fallback {
            coloring,
            theorem_anomaly,
        }),
        SolveResult::Infeasible => Err(ColorerError::FallbackFailed("infeasible")),
        SolveResult::Unknown => Err(ColorerError::FallbackFailed("budget exhausted")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{is_valid, solve_in_order};
    use crate::fixtures::{self, HubGadget};
    use crate::graph::RotationBuilder;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn valid(g: &EmbeddedGraph, phi: &Coloring, t: usize) -> bool {
        is_valid(g, phi, &DefectVector::one_t(t)).unwrap()
    }

    #[test]
    fn capacity_values() {
        assert_eq!(capacity(0), 10);
        assert_eq!(capacity(1), 10);
        assert_eq!(capacity(2), 11);
        assert!((0..50).all(|g| capacity(g) <= capacity(g + 1)));
    }

    #[test]
    fn single_vertex_reduces_by_degree() {
        let g = EmbeddedGraph::from_rotations(vec![vec![]]).unwrap();
        assert_eq!(
            find_reduction(&g, 10).unwrap().unwrap().kind,
            ReductionKind::DegreeAtMostOne
        );
    }

    #[test]
    fn c5_first_reduction_is_a_two_two_edge() {
        let s = find_reduction(&fixtures::cycle(5), 10).unwrap().unwrap();
        assert_eq!(s.kind, ReductionKind::AdjacentTwoVertices);
        assert_eq!(s.deleted, vec![0, 1]);
    }

    #[test]
    fn two_two_edge_wins_over_low_neighbourhood() {
        // a 6-cycle with two 3-vertices: 1-2 is a 2-2 edge, 0 is all-low
        let mut b = RotationBuilder::cycle(6);
        b.add_path(0, 0, 3, 0, 3, false);
        let g = b.build().unwrap();
        assert!(g.girth().unwrap() >= 5);
        let s = find_reduction(&g, 10).unwrap().unwrap();
        assert_eq!(s.kind, ReductionKind::AdjacentTwoVertices);
    }

    #[test]
    fn all_low_when_no_twos_touch() {
        let s = find_reduction(&fixtures::dodecahedron(), 10).unwrap().unwrap();
        assert_eq!(s.kind, ReductionKind::AllLowDegreeNeighbors);
        assert_eq!(s.deleted, vec![0]);
    }

    #[test]
    fn star_centre_goes_to_big_class() {
        let rot = vec![vec![1, 2, 3, 4, 5], vec![0], vec![0], vec![0], vec![0], vec![0]];
        let g = EmbeddedGraph::from_rotations(rot).unwrap();
        let step = ReductionStep {
            kind: ReductionKind::AllLowDegreeNeighbors,
            deleted: vec![0],
            labels: vec![("v", 0)],
            t: 10,
        };
        let sub = Coloring::from_partial(
            vec![None, Some(ONE), Some(ONE), Some(ONE), Some(ONE), Some(ONE)],
            DefectVector::one_t(10),
        )
        .unwrap();
        let phi = extend_coloring(&g, &sub, &step).unwrap();
        assert_eq!(phi.class(0), Some(BIG));
        assert!(valid(&g, &phi, 10));
    }

    #[test]
    fn two_two_edge_between_equal_ends() {
        let g = fixtures::cycle(5);
        let step = find_reduction(&g, 10).unwrap().unwrap();
        let sub = Coloring::from_partial(
            vec![None, None, Some(ONE), Some(BIG), Some(ONE)],
            DefectVector::one_t(10),
        )
        .unwrap();
        let phi = extend_coloring(&g, &sub, &step).unwrap();
        assert_eq!(phi.class(0), Some(BIG));
        assert_eq!(phi.class(1), Some(BIG));
        assert!(valid(&g, &phi, 10));
    }

    #[test]
    fn saturated_neighbour_is_moved() {
        // v = 0 with neighbours a = 1 (degree t + 1) and b; a has t leaves
        // coloured big, b is coloured one.
        let t = 10;
        let mut b = RotationBuilder::cycle(7);
        for _ in 0..t - 1 {
            b.add_leaf(1, 0);
        }
        let g = b.build().unwrap();
        assert_eq!(g.degree(1), t + 1);
        let mut sub = vec![Some(BIG); g.vertex_count()];
        sub[0] = None;
        sub[6] = Some(ONE);
        sub[5] = Some(ONE);
        sub[4] = Some(BIG);
        let sub = Coloring::from_partial(sub, DefectVector::one_t(t)).unwrap();
        let step = ReductionStep {
            kind: ReductionKind::AllLowDegreeNeighbors,
            deleted: vec![0],
            labels: vec![("v", 0)],
            t,
        };
        // vertex 1 sees 2 and its t - 1 leaves: saturated
        let phi = extend_coloring(&g, &sub, &step).unwrap();
        assert_eq!(phi.class(1), Some(ONE));
        assert_eq!(phi.class(0), Some(BIG));
        assert!(valid(&g, &phi, t));
    }

    #[test]
    fn named_graphs_are_colored_by_reductions() {
        for g in [
            fixtures::cycle(5),
            fixtures::dodecahedron(),
            fixtures::petersen_projective(),
        ] {
            match color(&g, 10).unwrap() {
                ColorOutcome::Reduced { coloring, trace } => {
                    assert!(valid(&g, &coloring, 10));
                    assert_eq!(trace.replay(), coloring);
                }
                ColorOutcome::Fallback { .. } => panic!("fallback fired"),
            }
        }
    }

    #[test]
    fn c5_trace_has_four_steps() {
        let ColorOutcome::Reduced { trace, .. } = color(&fixtures::cycle(5), 10).unwrap() else {
            panic!()
        };
        let kinds: Vec<_> = trace.entries.iter().map(|e| e.step.kind).collect();
        assert_eq!(kinds[0], ReductionKind::AdjacentTwoVertices);
        assert_eq!(kinds.len(), 4);
    }

    #[test]
    fn short_cycles_are_rejected() {
        assert_eq!(
            color(&fixtures::cycle(4), 10).unwrap_err(),
            ColorerError::GirthTooSmall { girth: 4 }
        );
    }

    /// A 12-hub whose every (t+1)^- vertex has a high neighbour, with one
    /// terrible face: the only applicable reduction is the face-rich hub.
    fn terrible_hub() -> EmbeddedGraph {
        let (g, _) = fixtures::face_class_gadget(FaceClass::Terrible, 10).build();
        g
    }

    #[test]
    fn terrible_hub_is_located() {
        let (g, layout) = fixtures::face_class_gadget(FaceClass::Terrible, 10).build();
        let s = face_rich_hub(
            &g,
            10,
            |c| c == FaceClass::Terrible,
            ReductionKind::TerribleRichHighVertex,
        )
        .unwrap();
        assert_eq!(s.label("v"), Some(layout.hub));
        assert!(layout.spokes.contains(&s.deleted[0]));
        assert_eq!(g.degree(s.deleted[0]), 2);
        // a plain hub carries no terrible face
        let (p, _) = HubGadget::new(12, 10).build();
        assert!(face_rich_hub(
            &p,
            10,
            |c| c == FaceClass::Terrible,
            ReductionKind::TerribleRichHighVertex
        )
        .is_none());
    }

    #[test]
    fn hub_extension_survives_adversarial_colorings() {
        let g = terrible_hub();
        let t = 10;
        let s = face_rich_hub(
            &g,
            t,
            |c| c == FaceClass::Terrible,
            ReductionKind::TerribleRichHighVertex,
        )
        .unwrap();
        let v4 = s.deleted[0];
        // colourings of g - v4 from randomised exact search
        let mut rest: Vec<bool> = vec![false; g.vertex_count()];
        rest[v4] = true;
        let (h, keep) = g.without(&rest).unwrap();
        let d = DefectVector::one_t(t);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        for _ in 0..300 {
            let mut order: Vec<usize> = (0..h.vertex_count()).collect();
            order.shuffle(&mut rng);
            let flips: Vec<bool> = (0..h.vertex_count()).map(|_| rng.gen()).collect();
            let prefs = |v: usize| if flips[v] { vec![BIG, ONE] } else { vec![ONE, BIG] };
            let SolveResult::Found(phi_h) = solve_in_order(&h, &d, 1_000_000, &order, &prefs) else {
                continue;
            };
            let mut sub = vec![None; g.vertex_count()];
            for (i, &old) in keep.iter().enumerate() {
                sub[old] = phi_h.class(i);
            }
            let sub = Coloring::from_partial(sub, d.clone()).unwrap();
            let phi = extend_coloring(&g, &sub, &s).unwrap();
            assert!(valid(&g, &phi, t));
            checked += 1;
        }
        assert!(checked > 250);
    }
}
