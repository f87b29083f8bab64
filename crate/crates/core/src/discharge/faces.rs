//! 5-face classes defined by cyclic degree patterns and sponsor relations
//! between adjacent faces.

use std::fmt;

use crate::graph::{Adjacency, EmbeddedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceClass {
    Special,
    X1,
    X2,
    Y1,
    Y2,
    Terrible,
    Plain,
}

impl FaceClass {
    /// Bad faces are the Y1- and Y2-faces.
    pub fn is_bad(self) -> bool {
        matches!(self, FaceClass::Y1 | FaceClass::Y2)
    }

    /// Order in which overlapping matches are resolved.
    pub const PRECEDENCE: [FaceClass; 6] = [
        FaceClass::Terrible,
        FaceClass::Y1,
        FaceClass::Y2,
        FaceClass::X2,
        FaceClass::X1,
        FaceClass::Special,
    ];
}

impl fmt::Display for FaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FaceClass::Special => "special",
            FaceClass::X1 => "X1",
            FaceClass::X2 => "X2",
            FaceClass::Y1 => "Y1",
            FaceClass::Y2 => "Y2",
            FaceClass::Terrible => "terrible",
            FaceClass::Plain => "plain",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy)]
enum Deg {
    Is(usize),
    High,
    NotHigh,
    AtLeast(usize),
}

impl Deg {
    fn accepts(self, d: usize, t: usize) -> bool {
        match self {
            Deg::Is(k) => d == k,
            Deg::High => d >= t + 2,
            Deg::NotHigh => d <= t + 1,
            Deg::AtLeast(k) => d >= k,
        }
    }
}

use Deg::{High, Is, NotHigh};

const SPECIAL: [Deg; 5] = [Is(2), High, Is(2), Is(5), Is(3)];
const X1: [Deg; 5] = [Is(2), High, Is(2), High, Is(3)];
const X2: [Deg; 5] = [Is(2), High, Is(2), High, Is(4)];
const Y1: [Deg; 5] = [Is(2), High, Is(2), Is(4), Is(3)];
const Y2: [Deg; 5] = [Is(2), High, Is(2), Is(3), Is(3)];
const TERRIBLE: [Deg; 5] = [Is(2), High, Is(2), Is(4), Is(4)];

const X2_FOUR_RING: [Deg; 4] = [NotHigh, Is(2), High, Deg::AtLeast(2)];
const Y1_FOUR_RING: [Deg; 4] = [Is(2), Is(3), NotHigh, High];
const TERRIBLE_FOUR_RING: [Deg; 4] = [Is(2), Is(4), NotHigh, High];

/// All alignments of `pattern` against the cyclic sequence `values`, read
/// in either direction. Each alignment maps pattern index to value index.
fn cyclic_alignments(values: &[usize], pattern: &[Deg], t: usize) -> Vec<Vec<usize>> {
    let n = values.len();
    let mut out = Vec::new();
    if n != pattern.len() {
        return out;
    }
    for start in 0..n {
        for forward in [true, false] {
            let map: Vec<usize> = (0..n)
                .map(|k| if forward { (start + k) % n } else { (start + n - k) % n })
                .collect();
            if pattern.iter().zip(&map).all(|(p, &i)| p.accepts(values[i], t)) {
                out.push(map);
            }
        }
    }
    out
}

fn neighbor_ring_matches(g: &EmbeddedGraph, v: usize, pattern: &[Deg], t: usize) -> bool {
    let degs: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
    !cyclic_alignments(&degs, pattern, t).is_empty()
}

/// Per-face classification of an embedded graph for threshold `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceClassification {
    classes: Vec<FaceClass>,
    /// Classes whose degree pattern matches, side conditions ignored.
    raw: Vec<Vec<FaceClass>>,
    /// Classes whose full definition matches, before precedence.
    matched: Vec<Vec<FaceClass>>,
}

impl FaceClassification {
    pub fn class(&self, f: usize) -> FaceClass {
        self.classes[f]
    }

    pub fn classes(&self) -> &[FaceClass] {
        &self.classes
    }

    pub fn raw_pattern_matches(&self, f: usize) -> &[FaceClass] {
        &self.raw[f]
    }

    pub fn full_matches(&self, f: usize) -> &[FaceClass] {
        &self.matched[f]
    }

    pub fn is_x1(&self, f: usize) -> bool {
        self.matched[f].contains(&FaceClass::X1)
    }

    pub fn is_x2(&self, f: usize) -> bool {
        self.matched[f].contains(&FaceClass::X2)
    }
}

/// The five boundary vertices of `f` when its walk is a 5-cycle.
fn pentagon(g: &EmbeddedGraph, f: usize) -> Option<[usize; 5]> {
    let face = g.face(f);
    if face.degree() != 5 {
        return None;
    }
    let mut vs = [0; 5];
    for (i, v) in face.vertices().enumerate() {
        vs[i] = v;
    }
    let mut sorted = vs;
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(vs)
}

/// The face on the other side of the 2-vertex at walk position `pos` of `f`.
fn other_face_at_two_vertex(g: &EmbeddedGraph, f: usize, pos: usize) -> Option<usize> {
    let occ = g.face(f).walk()[pos];
    if g.degree(occ.vertex) != 2 {
        return None;
    }
    Some(g.corner_face(occ.vertex, 1 - occ.corner).0)
}

fn x_statuses(g: &EmbeddedGraph, t: usize) -> Vec<(bool, bool)> {
    (0..g.face_count())
        .map(|f| match pentagon(g, f) {
            Some(vs) => (is_x1(g, f, &vs, t), is_x2(g, &vs, t)),
            None => (false, false),
        })
        .collect()
}

fn degrees_of(g: &EmbeddedGraph, vs: &[usize; 5]) -> Vec<usize> {
    vs.iter().map(|&v| g.degree(v)).collect()
}

fn is_x1(g: &EmbeddedGraph, f: usize, vs: &[usize; 5], t: usize) -> bool {
    let degs = degrees_of(g, vs);
    cyclic_alignments(&degs, &X1, t).iter().any(|m| {
        let three = vs[m[4]];
        g.f_external_neighbors(three, f)
            .map(|ext| ext.iter().all(|&w| g.degree(w) <= t + 1))
            .unwrap_or(false)
    })
}

fn is_x2(g: &EmbeddedGraph, vs: &[usize; 5], t: usize) -> bool {
    let degs = degrees_of(g, vs);
    cyclic_alignments(&degs, &X2, t)
        .iter()
        .any(|m| neighbor_ring_matches(g, vs[m[4]], &X2_FOUR_RING, t))
}

fn full_matches(g: &EmbeddedGraph, f: usize, t: usize, xs: &[(bool, bool)]) -> (Vec<FaceClass>, Vec<FaceClass>) {
    let Some(vs) = pentagon(g, f) else {
        return (Vec::new(), Vec::new());
    };
    let degs = degrees_of(g, &vs);
    let others = |m: &[usize]| -> Option<(usize, usize)> {
        Some((
            other_face_at_two_vertex(g, f, m[0])?,
            other_face_at_two_vertex(g, f, m[2])?,
        ))
    };
    let mut raw = Vec::new();
    let mut full = Vec::new();

    let al = cyclic_alignments(&degs, &TERRIBLE, t);
    if !al.is_empty() {
        raw.push(FaceClass::Terrible);
        if al.iter().any(|m| {
            neighbor_ring_matches(g, vs[m[3]], &TERRIBLE_FOUR_RING, t)
                && neighbor_ring_matches(g, vs[m[4]], &TERRIBLE_FOUR_RING, t)
                && others(m).is_some_and(|(a, b)| xs[a].1 && xs[b].1)
        }) {
            full.push(FaceClass::Terrible);
        }
    }
    let al = cyclic_alignments(&degs, &Y1, t);
    if !al.is_empty() {
        raw.push(FaceClass::Y1);
        if al.iter().any(|m| {
            neighbor_ring_matches(g, vs[m[3]], &Y1_FOUR_RING, t)
                && others(m).is_some_and(|(a, b)| (xs[a].0 && xs[b].1) || (xs[a].1 && xs[b].0))
        }) {
            full.push(FaceClass::Y1);
        }
    }
    let al = cyclic_alignments(&degs, &Y2, t);
    if !al.is_empty() {
        raw.push(FaceClass::Y2);
        if al.iter().any(|m| others(m).is_some_and(|(a, b)| xs[a].0 && xs[b].0)) {
            full.push(FaceClass::Y2);
        }
    }
    if !cyclic_alignments(&degs, &X2, t).is_empty() {
        raw.push(FaceClass::X2);
        if xs[f].1 {
            full.push(FaceClass::X2);
        }
    }
    if !cyclic_alignments(&degs, &X1, t).is_empty() {
        raw.push(FaceClass::X1);
        if xs[f].0 {
            full.push(FaceClass::X1);
        }
    }
    if !cyclic_alignments(&degs, &SPECIAL, t).is_empty() {
        raw.push(FaceClass::Special);
        full.push(FaceClass::Special);
    }
    (raw, full)
}

/// Classifies every face of `g` with high vertices of degree `≥ t + 2`.
pub fn classify_faces(g: &EmbeddedGraph, t: usize) -> FaceClassification {
    let xs = x_statuses(g, t);
    let mut classes = Vec::with_capacity(g.face_count());
    let mut raw = Vec::with_capacity(g.face_count());
    let mut matched = Vec::with_capacity(g.face_count());
    for f in 0..g.face_count() {
        let (r, m) = full_matches(g, f, t, &xs);
        let class = FaceClass::PRECEDENCE
            .iter()
            .copied()
            .find(|c| m.contains(c))
            .unwrap_or(FaceClass::Plain);
        classes.push(class);
        raw.push(r);
        matched.push(m);
    }
    FaceClassification { classes, raw, matched }
}

/// Class of a single face (threshold `t`).
pub fn classify_face(g: &EmbeddedGraph, f: usize, t: usize) -> FaceClass {
    let xs = x_statuses(g, t);
    let (_, m) = full_matches(g, f, t, &xs);
    FaceClass::PRECEDENCE
        .iter()
        .copied()
        .find(|c| m.contains(c))
        .unwrap_or(FaceClass::Plain)
}

/// The shared-edge endpoint degrees of a sponsor, read along the sponsor's
/// boundary walk, plus whether the sponsor is an X1- or X2-face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SponsorKind {
    pub degrees: (usize, usize),
    pub sponsor_is_x1: bool,
    pub sponsor_is_x2: bool,
}

impl SponsorKind {
    fn unordered(&self) -> (usize, usize) {
        let (a, b) = self.degrees;
        (a.min(b), a.max(b))
    }

    pub fn is_low_pair(&self, lo: usize, hi: usize) -> bool {
        self.unordered() == (lo.min(hi), lo.max(hi))
    }
}

/// One shared edge across which `sponsor` is a (d2, d3)-sponsor of
/// `recipient`: walk positions `position - 1 .. position + 2` of the sponsor
/// are `u1 u2 u3 u4` with `u1`, `u4` high.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SponsorInstance {
    pub sponsor: usize,
    pub recipient: usize,
    pub position: usize,
    pub kind: SponsorKind,
}

pub fn sponsor_instances(g: &EmbeddedGraph, classes: &FaceClassification, t: usize) -> Vec<SponsorInstance> {
    let mut out = Vec::new();
    for f1 in 0..g.face_count() {
        out.extend(sponsor_instances_of(g, classes, t, f1));
    }
    out
}

fn sponsor_instances_of(g: &EmbeddedGraph, classes: &FaceClassification, t: usize, f1: usize) -> Vec<SponsorInstance> {
    let face = g.face(f1);
    let len = face.degree();
    let mut out = Vec::new();
    if len < 4 {
        return out;
    }
    for p in 0..len {
        let u1 = face.vertex_at(p + len - 1);
        let u2 = face.vertex_at(p);
        let u3 = face.vertex_at(p + 1);
        let u4 = face.vertex_at(p + 2);
        if g.degree(u1) < t + 2 || g.degree(u4) < t + 2 {
            continue;
        }
        let (f2, _) = face.across(p);
        if f2 == f1 {
            continue;
        }
        out.push(SponsorInstance {
            sponsor: f1,
            recipient: f2,
            position: p,
            kind: SponsorKind {
                degrees: (g.degree(u2), g.degree(u3)),
                sponsor_is_x1: classes.is_x1(f1),
                sponsor_is_x2: classes.is_x2(f1),
            },
        });
    }
    out
}

/// First shared edge across which `f1` is a (d2, d3)-sponsor of `f2`.
pub fn sponsor_relation(g: &EmbeddedGraph, t: usize, f1: usize, f2: usize) -> Option<SponsorKind> {
    if f1 == f2 {
        return None;
    }
    let classes = classify_faces(g, t);
    sponsor_instances_of(g, &classes, t, f1)
        .into_iter()
        .find(|s| s.recipient == f2)
        .map(|s| s.kind)
}
