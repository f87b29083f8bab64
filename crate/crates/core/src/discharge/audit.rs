use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use super::faces::FaceClass;
use super::rules::{apply_rules_with, Charge, Discharging, Element};
use crate::graph::{Adjacency, EmbeddedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    /// Some vertex ends with negative charge.
    VertexNonNegative,
    /// Some face of degree at least 7 ends with non-positive charge.
    LargeFacePositive,
    SixFaceNonNegative,
    FiveFaceNonNegative,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimViolation {
    pub claim: Claim,
    pub element: Element,
    pub charge: Charge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Lemma {
    MinDegree,
    VxDegree,
    No22,
    SpecialFacesNum,
    TerribleFacesNum,
    BadFacesNum,
    VxHighGeneral,
}

impl Lemma {
    pub fn name(self) -> &'static str {
        match self {
            Lemma::MinDegree => "min-degree",
            Lemma::VxDegree => "vx-degree",
            Lemma::No22 => "no-22",
            Lemma::SpecialFacesNum => "special-faces-num",
            Lemma::TerribleFacesNum => "terrible-faces-num",
            Lemma::BadFacesNum => "bad-faces-num",
            Lemma::VxHighGeneral => "vx-high-general",
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A violated structural conclusion and the vertices witnessing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaViolation {
    pub lemma: Lemma,
    pub witnesses: Vec<usize>,
}

/// A high vertex whose final charge is below `2γ - 7/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighBoundViolation {
    pub vertex: usize,
    pub charge: Charge,
    pub bound: Charge,
}

#[derive(Debug, Clone)]
pub struct AuditReport {
    pub t: usize,
    pub genus: usize,
    pub discharging: Discharging,
    pub claim_violations: Vec<ClaimViolation>,
    pub lemma_violations: Vec<LemmaViolation>,
    pub high_bound_violations: Vec<HighBoundViolation>,
}

impl AuditReport {
    pub fn violates(&self, lemma: Lemma) -> bool {
        self.lemma_violations.iter().any(|l| l.lemma == lemma)
    }

    pub fn violates_claim(&self, claim: Claim) -> bool {
        self.claim_violations.iter().any(|c| c.claim == claim)
    }

    pub fn is_clean(&self) -> bool {
        self.claim_violations.is_empty() && self.lemma_violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("girth {girth} is below 5")]
    GirthTooSmall { girth: usize },
}

/// Largest number of terrible (or bad) faces a high vertex of degree `d`
/// may carry: `min(⌊d/3⌋, d - t - 2)`.
pub fn face_allowance(d: usize, t: usize) -> usize {
    (d / 3).min(d.saturating_sub(t + 2))
}

/// Runs the rules with threshold `t`, checks the four claims on the final
/// charges and independently checks the structural conclusions on `g`.
pub fn audit(g: &EmbeddedGraph, t: usize) -> Result<AuditReport, AuditError> {
    if let Some(girth) = g.girth() {
        if girth < 5 {
            return Err(AuditError::GirthTooSmall { girth });
        }
    }
    let discharging = apply_rules_with(g, t);
    let claim_violations = claims(g, &discharging);
    let lemma_violations = lemmas(g, &discharging, t);
    let genus = g.euler_genus();
    let bound = Charge::from(2 * genus as i64) - Charge::new(7, 2);
    let high_bound_violations = (0..g.vertex_count())
        .filter(|&v| g.degree(v) >= t + 2)
        .filter_map(|v| {
            let charge = discharging.ledger.vertex_final[v];
            (charge < bound).then_some(HighBoundViolation {
                vertex: v,
                charge,
                bound,
            })
        })
        .collect();
    Ok(AuditReport {
        t,
        genus,
        discharging,
        claim_violations,
        lemma_violations,
        high_bound_violations,
    })
}

fn claims(g: &EmbeddedGraph, d: &Discharging) -> Vec<ClaimViolation> {
    let mut out = Vec::new();
    for (v, &charge) in d.ledger.vertex_final.iter().enumerate() {
        if charge < Charge::zero() {
            out.push(ClaimViolation {
                claim: Claim::VertexNonNegative,
                element: Element::Vertex(v),
                charge,
            });
        }
    }
    for (f, &charge) in d.ledger.face_final.iter().enumerate() {
        let claim = match g.face(f).degree() {
            k if k >= 7 && charge <= Charge::zero() => Claim::LargeFacePositive,
            6 if charge < Charge::zero() => Claim::SixFaceNonNegative,
            5 if charge < Charge::zero() => Claim::FiveFaceNonNegative,
            _ => continue,
        };
        out.push(ClaimViolation {
            claim,
            element: Element::Face(f),
            charge,
        });
    }
    out
}

fn lemmas(g: &EmbeddedGraph, d: &Discharging, t: usize) -> Vec<LemmaViolation> {
    let n = g.vertex_count();
    let high = |v: usize| g.degree(v) >= t + 2;
    let mut out = Vec::new();
    let mut push = |lemma: Lemma, witnesses: Vec<usize>| {
        if !witnesses.is_empty() {
            out.push(LemmaViolation { lemma, witnesses });
        }
    };

    push(Lemma::MinDegree, (0..n).filter(|&v| g.degree(v) < 2).collect());
    push(
        Lemma::VxDegree,
        (0..n)
            .filter(|&v| !high(v) && !g.neighbors(v).iter().any(|&w| high(w)))
            .collect(),
    );
    let mut twos = Vec::new();
    for v in 0..n {
        if g.degree(v) == 2 {
            for &w in g.neighbors(v) {
                if v < w && g.degree(w) == 2 {
                    twos.extend([v, w]);
                }
            }
        }
    }
    push(Lemma::No22, twos);

    let count_at = |v: usize, pred: &dyn Fn(FaceClass) -> bool| {
        (0..g.degree(v))
            .filter(|&c| pred(d.classes.class(g.corner_face(v, c).0)))
            .count()
    };
    push(
        Lemma::SpecialFacesNum,
        (0..n)
            .filter(|&v| g.degree(v) == 5 && count_at(v, &|c| c == FaceClass::Special) > 2)
            .collect(),
    );
    push(
        Lemma::TerribleFacesNum,
        (0..n)
            .filter(|&v| high(v) && count_at(v, &|c| c == FaceClass::Terrible) > face_allowance(g.degree(v), t))
            .collect(),
    );
    push(
        Lemma::BadFacesNum,
        (0..n)
            .filter(|&v| high(v) && count_at(v, &|c| c.is_bad()) > face_allowance(g.degree(v), t))
            .collect(),
    );

    let has_cycle = g.edge_count() + g.component_count() > n;
    let highs: Vec<usize> = (0..n).filter(|&v| high(v)).collect();
    if has_cycle && highs.len() < 3 {
        // witnesses are the high vertices present, possibly none
        out.push(LemmaViolation {
            lemma: Lemma::VxHighGeneral,
            witnesses: highs,
        });
    }
    out
}
