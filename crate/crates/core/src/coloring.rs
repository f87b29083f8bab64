//! (d1, ..., dr)-colourings: validity, saturation and an exact solver.

use std::fmt;

use thiserror::Error;

use crate::graph::Adjacency;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("defect vector must have at least one class")]
    NoClasses,
    #[error("vertex {vertex} has no class")]
    PartialColoring { vertex: usize },
    #[error("vertex {vertex} is uncoloured")]
    Uncolored { vertex: usize },
    #[error("vertex {vertex} has class {class}, but only {classes} classes exist")]
    ClassOutOfRange {
        vertex: usize,
        class: usize,
        classes: usize,
    },
    #[error("colouring covers {found} vertices, graph has {expected}")]
    LengthMismatch { expected: usize, found: usize },
}

/// Per-class bounds on the induced maximum degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DefectVector(Vec<usize>);

impl DefectVector {
    pub fn new(defects: Vec<usize>) -> Result<Self, ColoringError> {
        if defects.is_empty() {
            return Err(ColoringError::NoClasses);
        }
        Ok(DefectVector(defects))
    }

    /// The (1, t) vector used by the colourer.
    pub fn one_t(t: usize) -> Self {
        DefectVector(vec![1, t])
    }

    pub fn classes(&self) -> usize {
        self.0.len()
    }

    pub fn defect(&self, class: usize) -> usize {
        self.0[class]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Componentwise `self ≤ other`.
    pub fn dominated_by(&self, other: &DefectVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for DefectVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A class index (0-based) per vertex; `None` marks an uncoloured vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    assignment: Vec<Option<usize>>,
    defects: DefectVector,
}

impl Coloring {
    pub fn empty(vertex_count: usize, defects: DefectVector) -> Self {
        Coloring {
            assignment: vec![None; vertex_count],
            defects,
        }
    }

    pub fn from_classes(classes: Vec<usize>, defects: DefectVector) -> Result<Self, ColoringError> {
        Self::from_partial(classes.into_iter().map(Some).collect(), defects)
    }

    pub fn from_partial(assignment: Vec<Option<usize>>, defects: DefectVector) -> Result<Self, ColoringError> {
        for (v, c) in assignment.iter().enumerate() {
            if let Some(class) = *c {
                if class >= defects.classes() {
                    return Err(ColoringError::ClassOutOfRange {
                        vertex: v,
                        class,
                        classes: defects.classes(),
                    });
                }
            }
        }
        Ok(Coloring { assignment, defects })
    }

    pub fn defects(&self) -> &DefectVector {
        &self.defects
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn class(&self, v: usize) -> Option<usize> {
        self.assignment[v]
    }

    pub fn set(&mut self, v: usize, class: Option<usize>) {
        debug_assert!(class.is_none_or(|c| c < self.defects.classes()));
        self.assignment[v] = class;
    }

    pub fn assignment(&self) -> &[Option<usize>] {
        &self.assignment
    }

    pub fn is_total(&self) -> bool {
        self.assignment.iter().all(Option::is_some)
    }

    /// Class per vertex, failing on the first uncoloured vertex.
    pub fn total(&self) -> Result<Vec<usize>, ColoringError> {
        self.assignment
            .iter()
            .enumerate()
            .map(|(v, c)| c.ok_or(ColoringError::PartialColoring { vertex: v }))
            .collect()
    }

    /// Same colouring under a different defect vector with as many classes.
    pub fn with_defects(&self, defects: DefectVector) -> Self {
        assert_eq!(defects.classes(), self.defects.classes());
        Coloring {
            assignment: self.assignment.clone(),
            defects,
        }
    }
}

/// Number of coloured neighbours of `v` sharing its class.
pub fn same_class_degree<G: Adjacency + ?Sized>(g: &G, phi: &Coloring, v: usize) -> usize {
    match phi.class(v) {
        None => 0,
        Some(c) => g.neighbors(v).iter().filter(|&&w| phi.class(w) == Some(c)).count(),
    }
}

fn check_len<G: Adjacency + ?Sized>(g: &G, phi: &Coloring) -> Result<(), ColoringError> {
    if phi.len() != g.vertex_count() {
        return Err(ColoringError::LengthMismatch {
            expected: g.vertex_count(),
            found: phi.len(),
        });
    }
    Ok(())
}

/// Maximum degree of the subgraph induced by each class (0 for empty classes).
pub fn induced_max_degrees<G: Adjacency + ?Sized>(g: &G, phi: &Coloring) -> Result<Vec<usize>, ColoringError> {
    check_len(g, phi)?;
    let classes = phi.total()?;
    let mut out = vec![0; phi.defects().classes()];
    for v in 0..g.vertex_count() {
        let d = g.neighbors(v).iter().filter(|&&w| classes[w] == classes[v]).count();
        out[classes[v]] = out[classes[v]].max(d);
    }
    Ok(out)
}

/// Whether every class induces maximum degree at most its defect in `d`.
pub fn is_valid<G: Adjacency + ?Sized>(g: &G, phi: &Coloring, d: &DefectVector) -> Result<bool, ColoringError> {
    let degs = induced_max_degrees(g, phi)?;
    Ok(degs.len() == d.classes() && degs.iter().enumerate().all(|(i, &k)| k <= d.defect(i)))
}

/// `v` has exactly as many same-class neighbours as its class allows.
pub fn is_saturated<G: Adjacency + ?Sized>(g: &G, phi: &Coloring, v: usize) -> Result<bool, ColoringError> {
    let c = phi.class(v).ok_or(ColoringError::Uncolored { vertex: v })?;
    Ok(same_class_degree(g, phi, v) == phi.defects().defect(c))
}

/// Outcome of the exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    Found(Coloring),
    Infeasible,
    /// The node budget ran out first.
    Unknown,
}

impl SolveResult {
    pub fn is_found(&self) -> bool {
        matches!(self, SolveResult::Found(_))
    }
}

/// Depth-first search over vertices in decreasing degree order (ties by id),
/// pruning as soon as a class bound is exceeded among coloured vertices.
/// Every attempted assignment counts against `budget`.
pub fn solve_exact<G: Adjacency + ?Sized>(g: &G, d: &DefectVector, budget: u64) -> SolveResult {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let prefs: Vec<usize> = (0..d.classes()).collect();
    solve_in_order(g, d, budget, &order, &|_| prefs.clone())
}

/// Exact search with a caller-chosen vertex order and per-vertex class
/// preference. Different orders reach different colourings, which is how
/// tests obtain many valid colourings of the same graph.
pub fn solve_in_order<G: Adjacency + ?Sized>(
    g: &G,
    d: &DefectVector,
    budget: u64,
    order: &[usize],
    class_order: &dyn Fn(usize) -> Vec<usize>,
) -> SolveResult {
    let n = g.vertex_count();
    assert_eq!(order.len(), n, "order must list every vertex once");
    let mut s = Search {
        g,
        d,
        colors: vec![None; n],
        same: vec![0; n],
        nodes: 0,
        budget,
    };
    match s.run(order, class_order) {
        Some(true) => {
            let classes = s.colors.iter().map(|c| c.unwrap()).collect();
            SolveResult::Found(Coloring::from_classes(classes, d.clone()).unwrap())
        }
        Some(false) => SolveResult::Infeasible,
        None => SolveResult::Unknown,
    }
}

struct Search<'a, G: Adjacency + ?Sized> {
    g: &'a G,
    d: &'a DefectVector,
    colors: Vec<Option<usize>>,
    /// coloured same-class neighbours per vertex
    same: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl<G: Adjacency + ?Sized> Search<'_, G> {
    fn fits(&self, v: usize, c: usize) -> bool {
        let cap = self.d.defect(c);
        let mut own = 0;
        for &w in self.g.neighbors(v) {
            if self.colors[w] == Some(c) {
                own += 1;
                if own > cap || self.same[w] + 1 > cap {
                    return false;
                }
            }
        }
        true
    }

    fn assign(&mut self, v: usize, c: Option<usize>) {
        let (class, delta) = match c {
            Some(c) => (c, 1isize),
            None => (self.colors[v].unwrap(), -1),
        };
        let mut own = 0;
        for &w in self.g.neighbors(v) {
            if self.colors[w] == Some(class) {
                self.same[w] = (self.same[w] as isize + delta) as usize;
                own += 1;
            }
        }
        self.same[v] = if c.is_some() { own } else { 0 };
        self.colors[v] = c;
    }

    /// `Some(found)` when the search finished, `None` on budget exhaustion.
    fn run(&mut self, order: &[usize], class_order: &dyn Fn(usize) -> Vec<usize>) -> Option<bool> {
        // explicit stack of (depth, next class index)
        let mut choice: Vec<usize> = vec![0; order.len() + 1];
        let mut depth = 0;
        let mut prefs: Vec<Vec<usize>> = order.iter().map(|&v| class_order(v)).collect();
        prefs.shrink_to_fit();
        loop {
            if depth == order.len() {
                return Some(true);
            }
            let v = order[depth];
            let mut advanced = false;
            while choice[depth] < prefs[depth].len() {
                let c = prefs[depth][choice[depth]];
                choice[depth] += 1;
                self.nodes += 1;
                if self.nodes > self.budget {
                    return None;
                }
                if self.fits(v, c) {
                    self.assign(v, Some(c));
                    depth += 1;
                    choice[depth] = 0;
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                if depth == 0 {
                    return Some(false);
                }
                depth -= 1;
                let u = order[depth];
                self.assign(u, None);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::SimpleGraph;
    use proptest::prelude::*;

    fn c5() -> SimpleGraph {
        SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn dv(v: &[usize]) -> DefectVector {
        DefectVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn induced_degrees_on_c5() {
        let g = c5();
        let mono = Coloring::from_classes(vec![0; 5], dv(&[2])).unwrap();
        assert_eq!(induced_max_degrees(&g, &mono).unwrap(), vec![2]);
        // A = {1, 2, 4}, B = {3, 5} in 1-based names
        let split = Coloring::from_classes(vec![0, 0, 1, 0, 1], dv(&[1, 0])).unwrap();
        assert_eq!(induced_max_degrees(&g, &split).unwrap(), vec![1, 0]);
        assert!(is_valid(&g, &split, &dv(&[1, 0])).unwrap());
    }

    #[test]
    fn edgeless_graph_has_zero_degrees() {
        let g = SimpleGraph::new(4);
        let phi = Coloring::from_classes(vec![0, 1, 1, 0], dv(&[0, 0])).unwrap();
        assert_eq!(induced_max_degrees(&g, &phi).unwrap(), vec![0, 0]);
    }

    #[test]
    fn monochromatic_c5() {
        let g = c5();
        let first = Coloring::from_classes(vec![0; 5], dv(&[1, 10])).unwrap();
        assert!(!is_valid(&g, &first, &dv(&[1, 10])).unwrap());
        let second = Coloring::from_classes(vec![1; 5], dv(&[1, 10])).unwrap();
        assert!(is_valid(&g, &second, &dv(&[1, 10])).unwrap());
    }

    #[test]
    fn partial_colorings_are_rejected() {
        let g = c5();
        let phi = Coloring::from_partial(vec![Some(0), None, Some(0), Some(1), Some(1)], dv(&[1, 1])).unwrap();
        assert_eq!(
            induced_max_degrees(&g, &phi),
            Err(ColoringError::PartialColoring { vertex: 1 })
        );
        assert_eq!(is_saturated(&g, &phi, 1), Err(ColoringError::Uncolored { vertex: 1 }));
    }

    #[test]
    fn saturation() {
        let path = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let phi = Coloring::from_classes(vec![0, 0, 1], dv(&[1, 10])).unwrap();
        assert!(is_saturated(&path, &phi, 1).unwrap());

        let single = SimpleGraph::new(1);
        let phi = Coloring::from_classes(vec![0], dv(&[1, 10])).unwrap();
        assert!(!is_saturated(&single, &phi, 0).unwrap());

        let star = SimpleGraph::from_edges(11, &(1..11).map(|i| (0, i)).collect::<Vec<_>>()).unwrap();
        let phi = Coloring::from_classes(vec![1; 11], dv(&[1, 10])).unwrap();
        assert!(is_saturated(&star, &phi, 0).unwrap());
    }

    #[test]
    fn solver_on_c5() {
        let g = c5();
        assert_eq!(solve_exact(&g, &dv(&[0, 0]), 1_000_000), SolveResult::Infeasible);
        match solve_exact(&g, &dv(&[1, 0]), 1_000_000) {
            SolveResult::Found(phi) => assert!(is_valid(&g, &phi, &dv(&[1, 0])).unwrap()),
            other => panic!("expected a colouring, got {other:?}"),
        }
    }

    #[test]
    fn solver_on_petersen() {
        let g = fixtures::petersen_projective();
        let d = dv(&[1, 10]);
        match solve_exact(&g, &d, 1_000_000) {
            SolveResult::Found(phi) => assert!(is_valid(&g, &phi, &d).unwrap()),
            other => panic!("expected a colouring, got {other:?}"),
        }
        // proper 2-colouring of an odd-girth graph is impossible
        assert_eq!(solve_exact(&g, &dv(&[0, 0]), 1_000_000), SolveResult::Infeasible);
    }

    #[test]
    fn tiny_budget_gives_unknown() {
        let g = fixtures::dodecahedron();
        assert_eq!(solve_exact(&g, &dv(&[0, 0]), 3), SolveResult::Unknown);
    }

    fn arb_graph() -> impl Strategy<Value = SimpleGraph> {
        (1usize..9).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = SimpleGraph::new(n);
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            g.add_edge(u, v).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn validity_is_monotone(g in arb_graph(), seed in any::<u64>(), a in 0usize..3, b in 0usize..3, da in 0usize..3, db in 0usize..3) {
            let n = g.vertex_count();
            let classes: Vec<usize> = (0..n).map(|v| ((seed >> (v % 64)) & 1) as usize).collect();
            let phi = Coloring::from_classes(classes, dv(&[a, b])).unwrap();
            if is_valid(&g, &phi, &dv(&[a, b])).unwrap() {
                prop_assert!(is_valid(&g, &phi, &dv(&[a + da, b + db])).unwrap());
            }
        }

        #[test]
        fn found_colorings_are_valid(g in arb_graph(), a in 0usize..3, b in 0usize..3) {
            let d = dv(&[a, b]);
            if let SolveResult::Found(phi) = solve_exact(&g, &d, 1_000_000) {
                prop_assert!(is_valid(&g, &phi, &d).unwrap());
            }
        }

        #[test]
        fn saturated_vertices_have_enough_neighbours(g in arb_graph(), seed in any::<u64>()) {
            let n = g.vertex_count();
            let classes: Vec<usize> = (0..n).map(|v| ((seed >> (v % 64)) & 1) as usize).collect();
            let phi = Coloring::from_classes(classes, dv(&[1, 2])).unwrap();
            for v in 0..n {
                if is_saturated(&g, &phi, v).unwrap() {
                    prop_assert!(g.degree(v) >= phi.defects().defect(phi.class(v).unwrap()));
                }
            }
        }
    }
}
