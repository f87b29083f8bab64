use std::collections::HashSet;
use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;

use super::faces::{classify_faces, sponsor_instances, FaceClass, FaceClassification, SponsorInstance};
use crate::graph::{Adjacency, EmbeddedGraph};

pub type Charge = Rational64;

/// Threshold used by the rules when none is given: high means degree ≥ 12.
pub const DEFAULT_T: usize = 10;

fn q(n: i64, d: i64) -> Charge {
    Charge::new(n, d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Vertex(usize),
    Face(usize),
}

impl Element {
    pub fn kind(&self) -> &'static str {
        match self {
            Element::Vertex(_) => "vertex",
            Element::Face(_) => "face",
        }
    }

    pub fn id(&self) -> usize {
        match *self {
            Element::Vertex(i) | Element::Face(i) => i,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8A,
    R8B,
}

impl Rule {
    pub const ALL: [Rule; 9] = [
        Rule::R1,
        Rule::R2,
        Rule::R3,
        Rule::R4,
        Rule::R5,
        Rule::R6,
        Rule::R7,
        Rule::R8A,
        Rule::R8B,
    ];
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Whether an R5 transfer is part of an R7/R8 instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum R5Tag {
    Independent,
    Coupled,
}

/// Where a transfer happens: a vertex corner (vertex to face, or face to a
/// 2-vertex) or a position on a face's boundary walk (face to face).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Witness {
    Corner { vertex: usize, corner: usize },
    Boundary { face: usize, position: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Corner { vertex, corner } => write!(f, "corner:{vertex}.{corner}"),
            Witness::Boundary { face, position } => write!(f, "boundary:{face}.{position}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub rule: Rule,
    pub tag: Option<R5Tag>,
    pub source: Element,
    pub target: Element,
    pub amount: Charge,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeLedger {
    pub vertex_initial: Vec<Charge>,
    pub vertex_final: Vec<Charge>,
    pub face_initial: Vec<Charge>,
    pub face_final: Vec<Charge>,
}

impl ChargeLedger {
    pub fn total_initial(&self) -> Charge {
        self.vertex_initial.iter().chain(&self.face_initial).copied().sum()
    }

    pub fn total_final(&self) -> Charge {
        self.vertex_final.iter().chain(&self.face_final).copied().sum()
    }

    pub fn initial(&self, e: Element) -> Charge {
        match e {
            Element::Vertex(v) => self.vertex_initial[v],
            Element::Face(f) => self.face_initial[f],
        }
    }

    pub fn final_charge(&self, e: Element) -> Charge {
        match e {
            Element::Vertex(v) => self.vertex_final[v],
            Element::Face(f) => self.face_final[f],
        }
    }

    /// Every element with its initial and final charge, vertices first.
    pub fn rows(&self) -> impl Iterator<Item = (Element, Charge, Charge)> + '_ {
        let vs =
            (0..self.vertex_initial.len()).map(|v| (Element::Vertex(v), self.vertex_initial[v], self.vertex_final[v]));
        let fs = (0..self.face_initial.len()).map(|f| (Element::Face(f), self.face_initial[f], self.face_final[f]));
        vs.chain(fs)
    }

    fn apply(&mut self, t: &Transfer) {
        *self.slot(t.source) -= t.amount;
        *self.slot(t.target) += t.amount;
    }

    fn slot(&mut self, e: Element) -> &mut Charge {
        match e {
            Element::Vertex(v) => &mut self.vertex_final[v],
            Element::Face(f) => &mut self.face_final[f],
        }
    }
}

/// `μ(v) = 2d(v) - 6` and `μ(f) = d(f) - 6`, with final charges equal to
/// the initial ones.
pub fn initial_charges(g: &EmbeddedGraph) -> ChargeLedger {
    let vertex_initial: Vec<Charge> = (0..g.vertex_count())
        .map(|v| Charge::from(2 * g.degree(v) as i64 - 6))
        .collect();
    let face_initial: Vec<Charge> = g.faces().iter().map(|f| Charge::from(f.degree() as i64 - 6)).collect();
    ChargeLedger {
        vertex_final: vertex_initial.clone(),
        face_final: face_initial.clone(),
        vertex_initial,
        face_initial,
    }
}

/// Result of running the rules.
#[derive(Debug, Clone)]
pub struct Discharging {
    pub t: usize,
    pub ledger: ChargeLedger,
    pub transfers: Vec<Transfer>,
    pub classes: FaceClassification,
    pub sponsors: Vec<SponsorInstance>,
}

impl Discharging {
    pub fn transfers_by(&self, rule: Rule) -> impl Iterator<Item = &Transfer> + '_ {
        self.transfers.iter().filter(move |t| t.rule == rule)
    }
}

/// Applies the rules with high vertices of degree ≥ 12.
pub fn apply_rules(g: &EmbeddedGraph) -> (ChargeLedger, Vec<Transfer>) {
    let d = apply_rules_with(g, DEFAULT_T);
    (d.ledger, d.transfers)
}

/// Applies the rules with high meaning degree ≥ `t + 2` and medium meaning
/// degree `6 ..= t + 1`.
pub fn apply_rules_with(g: &EmbeddedGraph, t: usize) -> Discharging {
    let classes = classify_faces(g, t);
    let sponsors = sponsor_instances(g, &classes, t);
    let high = |v: usize| g.degree(v) >= t + 2;

    let face_sets: Vec<Vec<usize>> = g
        .faces()
        .iter()
        .map(|f| {
            let mut vs: Vec<usize> = f.vertices().collect();
            vs.sort_unstable();
            vs.dedup();
            vs
        })
        .collect();
    // no high neighbour of v anywhere on f
    let eligible = |v: usize, f: usize| -> bool {
        !g.neighbors(v)
            .iter()
            .any(|&w| high(w) && face_sets[f].binary_search(&w).is_ok())
    };

    let mut transfers = Vec::new();
    for v in 0..g.vertex_count() {
        let d = g.degree(v);
        let corners = (0..d).map(|c| (c, g.corner_face(v, c).0));
        let mut send = |rule: Rule, c: usize, f: usize, amount: Charge| {
            transfers.push(Transfer {
                rule,
                tag: None,
                source: Element::Vertex(v),
                target: Element::Face(f),
                amount,
                witness: Witness::Corner { vertex: v, corner: c },
            });
        };
        if d >= t + 2 {
            for (c, f) in corners {
                let amount = if classes.class(f).is_bad() { q(2, 1) } else { q(3, 2) };
                send(Rule::R4, c, f, amount);
            }
        } else if d == 4 {
            for (c, f) in corners {
                send(Rule::R1, c, f, q(1, 2));
            }
        } else if d == 5 {
            for (c, f) in corners {
                if classes.class(f) == FaceClass::Special {
                    send(Rule::R2, c, f, q(3, 2));
                } else if eligible(v, f) {
                    send(Rule::R2, c, f, q(1, 1));
                }
            }
        } else if d >= 6 && d <= t + 1 {
            let chosen: Vec<(usize, usize)> = corners.filter(|&(_, f)| eligible(v, f)).collect();
            if !chosen.is_empty() {
                let share = q(2 * d as i64 - 6, chosen.len() as i64);
                for (c, f) in chosen {
                    send(Rule::R3, c, f, share);
                }
            }
        }
    }

    // R5 occurrences that belong to an R7/R8 instance
    let mut coupled: HashSet<(usize, usize)> = HashSet::new();
    for s in &sponsors {
        let lo = (
            s.kind.degrees.0.min(s.kind.degrees.1),
            s.kind.degrees.0.max(s.kind.degrees.1),
        );
        let fires = match lo {
            (2, 3) => !s.kind.sponsor_is_x1,
            (2, 4) => true,
            _ => false,
        };
        if fires {
            let len = g.face(s.sponsor).degree();
            for p in [s.position, (s.position + 1) % len] {
                if g.degree(g.face(s.sponsor).vertex_at(p)) == 2 {
                    coupled.insert((s.sponsor, p));
                }
            }
        }
    }

    for (f, face) in g.faces().iter().enumerate() {
        for (p, occ) in face.walk().iter().enumerate() {
            if g.degree(occ.vertex) == 2 {
                let tag = if coupled.contains(&(f, p)) {
                    R5Tag::Coupled
                } else {
                    R5Tag::Independent
                };
                transfers.push(Transfer {
                    rule: Rule::R5,
                    tag: Some(tag),
                    source: Element::Face(f),
                    target: Element::Vertex(occ.vertex),
                    amount: q(1, 1),
                    witness: Witness::Corner {
                        vertex: occ.vertex,
                        corner: occ.corner,
                    },
                });
            }
        }
    }

    for s in &sponsors {
        let (a, b) = s.kind.degrees;
        let rule_amount = match (a.min(b), a.max(b)) {
            (3, 3) | (3, 4) | (4, 4) => Some((Rule::R6, q(1, 1))),
            (2, 3) if !s.kind.sponsor_is_x1 => Some((Rule::R7, q(1, 2))),
            (2, 4) if s.kind.sponsor_is_x2 => Some((Rule::R8A, q(1, 2))),
            (2, 4) => Some((Rule::R8B, q(1, 1))),
            _ => None,
        };
        if let Some((rule, amount)) = rule_amount {
            transfers.push(Transfer {
                rule,
                tag: None,
                source: Element::Face(s.sponsor),
                target: Element::Face(s.recipient),
                amount,
                witness: Witness::Boundary {
                    face: s.sponsor,
                    position: s.position,
                },
            });
        }
    }

    transfers.sort_by_key(|x| (x.rule, x.source, x.witness));
    debug_assert!(transfers.iter().all(|t| t.amount > Charge::zero()));

    let mut ledger = initial_charges(g);
    for tr in &transfers {
        ledger.apply(tr);
    }
    Discharging {
        t,
        ledger,
        transfers,
        classes,
        sponsors,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn c5_only_r5_fires() {
        let g = fixtures::cycle(5);
        let (ledger, transfers) = apply_rules(&g);
        assert_eq!(transfers.len(), 10);
        assert!(transfers.iter().all(|t| t.rule == Rule::R5 && t.amount == q(1, 1)));
        assert!(ledger.vertex_final.iter().all(|c| c.is_zero()));
        assert!(ledger.face_final.iter().all(|&c| c == q(-6, 1)));
        assert_eq!(ledger.total_final(), q(-12, 1));
    }

    #[test]
    fn dodecahedron_is_inert() {
        let g = fixtures::dodecahedron();
        let (ledger, transfers) = apply_rules(&g);
        assert!(transfers.is_empty());
        assert_eq!(ledger.vertex_final, ledger.vertex_initial);
        assert_eq!(ledger.total_initial(), q(-12, 1));
        assert!(ledger.vertex_initial.iter().all(|c| c.is_zero()));
        assert!(ledger.face_initial.iter().all(|&c| c == q(-1, 1)));
    }

    #[test]
    fn petersen_total_is_minus_six() {
        let g = fixtures::petersen_projective();
        let (ledger, _) = apply_rules(&g);
        assert_eq!(ledger.total_initial(), q(-6, 1));
        assert_eq!(ledger.total_final(), q(-6, 1));
    }

    #[test]
    fn special_face_gets_three_halves_from_its_five_vertex() {
        let (g, f, layout) = fixtures::face_class_fixture(FaceClass::Special, 10);
        let d = apply_rules_with(&g, 10);
        let five = layout.ring[0];
        let amounts: Vec<Charge> = d
            .transfers_by(Rule::R2)
            .filter(|t| t.source == Element::Vertex(five) && t.target == Element::Face(f))
            .map(|t| t.amount)
            .collect();
        assert_eq!(amounts, vec![q(3, 2)]);
    }

    #[test]
    fn bad_face_gets_two_from_the_hub() {
        let (g, f, layout) = fixtures::face_class_fixture(FaceClass::Y2, 10);
        let d = apply_rules_with(&g, 10);
        let to_f: Vec<Charge> = d
            .transfers_by(Rule::R4)
            .filter(|t| t.source == Element::Vertex(layout.hub) && t.target == Element::Face(f))
            .map(|t| t.amount)
            .collect();
        assert_eq!(to_f, vec![q(2, 1)]);
        let other = layout.hub_face(&g, 5);
        assert!(d
            .transfers_by(Rule::R4)
            .any(|t| t.target == Element::Face(other) && t.amount == q(3, 2)));
    }

    #[test]
    fn medium_vertex_splits_its_charge() {
        // a 7-vertex on a long cycle with no high neighbour: 8/7 per face corner
        let mut b = crate::graph::RotationBuilder::cycle(9);
        for _ in 0..5 {
            b.add_leaf(0, 1);
        }
        let g = b.build().unwrap();
        let d = apply_rules_with(&g, 10);
        let r3: Vec<_> = d.transfers_by(Rule::R3).collect();
        assert_eq!(r3.len(), 7);
        assert!(r3.iter().all(|t| t.amount == q(8, 7)));
    }

    #[test]
    fn medium_vertex_with_every_face_blocked_sends_nothing() {
        // every face at the 7-vertex touches its only high neighbour
        let mut b = crate::graph::RotationBuilder::cycle(6);
        for _ in 0..5 {
            b.add_leaf(0, 0);
        }
        for _ in 0..10 {
            b.add_leaf(1, 0);
        }
        let g = b.build().unwrap();
        assert_eq!(g.degree(0), 7);
        assert_eq!(g.degree(1), 12);
        let d = apply_rules_with(&g, 10);
        let sent: Vec<_> = d
            .transfers_by(Rule::R3)
            .filter(|t| t.source == Element::Vertex(0))
            .collect();
        assert!(sent.is_empty());
        assert_eq!(d.ledger.total_final(), d.ledger.total_initial());
    }

    #[test]
    fn sponsor_fixture_fires_r6() {
        let (g, _) = fixtures::sponsor_fixture(12, 3, 4);
        let d = apply_rules_with(&g, 10);
        let r6: Vec<_> = d.transfers_by(Rule::R6).collect();
        assert_eq!(r6.len(), 1);
        assert_eq!(r6[0].amount, q(1, 1));
    }

    #[test]
    fn transfers_are_canonically_sorted() {
        let (g, _, _) = fixtures::face_class_fixture(FaceClass::Terrible, 10);
        let d = apply_rules_with(&g, 10);
        let keys: Vec<_> = d.transfers.iter().map(|t| (t.rule, t.source, t.witness)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}
