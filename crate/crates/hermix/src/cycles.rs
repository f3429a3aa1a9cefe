//! 4-cycles of the underlying graph, their holonomy (the product of the four
//! Hermitian entries around the cycle) and the three admissible mixed
//! 4-cycle types.
//!
//! For unit entries, orthogonality of the rows of the two opposite vertices
//! of a 4-cycle is equivalent to the holonomy being exactly -1: with
//! A = h_ux h_xv and B = h_vy h_yu, the orthogonality term is A + conj(B),
//! and A = -conj(B) <=> A*B = -1. This gives an O(1) per-cycle test whose
//! agreement with the exact H^2 criterion is enforced by the test suite.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hermitian::{is_optimum, GaussianInt};
use crate::mixed::MixedGraph;

/// A 4-cycle `u - x - v - y - u` of the underlying graph, stored in the
/// canonical orientation: `u` is the minimal vertex and `x < y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleQuad {
    pub u: usize,
    pub x: usize,
    pub v: usize,
    pub y: usize,
}

impl CycleQuad {
    pub fn vertices(&self) -> [usize; 4] {
        [self.u, self.x, self.v, self.y]
    }

    /// The four edges in traversal order: ux, xv, vy, yu.
    pub fn edges(&self) -> [(usize, usize); 4] {
        [(self.u, self.x), (self.x, self.v), (self.v, self.y), (self.y, self.u)]
    }
}

/// Classification of a mixed 4-cycle. The three non-`Invalid` values are
/// exactly the cycles with holonomy -1: two arcs with the two undirected
/// edges sharing a vertex, two arcs with the undirected edges opposite, or
/// four arcs with an odd number of them running with the traversal. No
/// cycle with one or three arcs ever has holonomy -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleType {
    TwoArcAdjacentU,
    TwoArcOppositeU,
    AllArcOdd,
    Invalid,
}

/// Every 4-cycle of `g`, once per rotation/reflection class, sorted by the
/// canonical quadruple. Each cycle is keyed by its minimal vertex `u`, the
/// opposite vertex `v`, and the common-neighbor pair `x < y`.
pub fn four_cycles(g: &Graph) -> Vec<CycleQuad> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let common: Vec<usize> =
                g.common_neighbors(u, v).into_iter().filter(|&w| w > u).collect();
            for i in 0..common.len() {
                for j in i + 1..common.len() {
                    out.push(CycleQuad { u, x: common[i], v, y: common[j] });
                }
            }
        }
    }
    out
}

fn check_is_cycle(m: &MixedGraph, quad: &CycleQuad) -> Result<()> {
    let vs = quad.vertices();
    let distinct = vs.iter().collect::<std::collections::HashSet<_>>().len() == 4;
    if !distinct || quad.edges().iter().any(|&(a, b)| !m.graph().has_edge(a, b)) {
        return Err(Error::NotAFourCycle(quad.u, quad.x, quad.v, quad.y));
    }
    Ok(())
}

/// Exact product of the four Hermitian entries around the cycle; a unit in
/// {1, -1, i, -i}. Independent of traversal start and direction.
pub fn holonomy(m: &MixedGraph, quad: &CycleQuad) -> Result<GaussianInt> {
    check_is_cycle(m, quad)?;
    let mut acc = GaussianInt::ONE;
    for (a, b) in quad.edges() {
        acc = acc * m.hermitian_entry(a, b);
    }
    Ok(acc)
}

/// Classifies a mixed 4-cycle; `Invalid` unless the holonomy is -1.
pub fn classify(m: &MixedGraph, quad: &CycleQuad) -> Result<CycleType> {
    if holonomy(m, quad)? != GaussianInt::new(-1, 0) {
        return Ok(CycleType::Invalid);
    }
    let undirected: Vec<usize> = quad
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| m.state(a, b).is_some_and(|s| !s.is_arc()))
        .map(|(i, _)| i)
        .collect();
    Ok(match undirected.len() {
        0 => CycleType::AllArcOdd,
        2 if (undirected[1] - undirected[0]) % 2 == 1 => CycleType::TwoArcAdjacentU,
        2 => CycleType::TwoArcOppositeU,
        // holonomy -1 with 1 or 3 arcs is impossible; 4 undirected gives +1
        k => unreachable!("holonomy -1 with {k} undirected edges"),
    })
}

/// Decides optimality through the 4-cycle criterion.
///
/// Applicable only when the underlying graph is connected, regular, has
/// n >= 3 and every vertex pair has 0 or 2 common neighbors (then each
/// orthogonality constraint is carried by exactly one 4-cycle). On that
/// domain the result agrees with [`is_optimum`]; outside it the call is
/// refused.
pub fn optimum_by_cycles(m: &MixedGraph) -> Result<bool> {
    let g = m.graph();
    if g.vertex_count() < 3 {
        return Err(Error::CriterionNotApplicable("graph has fewer than 3 vertices".into()));
    }
    if !g.is_regular() {
        return Err(Error::CriterionNotApplicable("graph is not regular".into()));
    }
    if !g.is_connected() {
        return Err(Error::CriterionNotApplicable("graph is not connected".into()));
    }
    for u in 0..g.vertex_count() {
        for v in u + 1..g.vertex_count() {
            let c = g.common_neighbors(u, v).len();
            if c != 0 && c != 2 {
                return Err(Error::CriterionNotApplicable(format!(
                    "pair ({u}, {v}) has {c} common neighbors"
                )));
            }
        }
    }
    for quad in four_cycles(g) {
        if classify(m, &quad)? == CycleType::Invalid {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Debug-oriented helper: agreement of the cycle criterion with the exact
/// matrix criterion wherever the former applies.
#[doc(hidden)]
pub fn criteria_agree(m: &MixedGraph) -> bool {
    match optimum_by_cycles(m) {
        Ok(b) => b == is_optimum(m),
        Err(_) => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, complete_graph, cycle_graph, hypercube, Graph};
    use crate::mixed::{fixture, undirect_all, EdgeState, MixedGraph};

    #[test]
    fn four_cycle_counts() {
        assert_eq!(four_cycles(&hypercube(3).unwrap()).len(), 6);
        assert_eq!(four_cycles(&complete_graph(4)).len(), 3);
        let path = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(four_cycles(&path).len(), 0);
    }

    fn c4_with(states: [EdgeState; 4]) -> MixedGraph {
        // cycle edges in traversal order (0,1),(1,2),(2,3),(0,3); the stored
        // edge list is (0,1),(0,3),(1,2),(2,3)
        let g = cycle_graph(4).unwrap();
        let by_edge = |u: usize, v: usize| match (u, v) {
            (0, 1) => states[0],
            (1, 2) => states[1],
            (2, 3) => states[2],
            (0, 3) => states[3].reversed(), // traversal runs 3 -> 0
            _ => unreachable!(),
        };
        let s = g.edges().iter().map(|&(u, v)| by_edge(u, v)).collect();
        MixedGraph::new(g, s).unwrap()
    }

    #[test]
    fn holonomy_examples() {
        use EdgeState::{Forward as F, Undirected as U};
        let quad = CycleQuad { u: 0, x: 1, v: 2, y: 3 };

        let all_undirected = c4_with([U, U, U, U]);
        assert_eq!(holonomy(&all_undirected, &quad).unwrap(), GaussianInt::ONE);

        // u->x, x->v, rest undirected: i * i * 1 * 1 = -1
        let two_arcs = c4_with([F, F, U, U]);
        assert_eq!(holonomy(&two_arcs, &quad).unwrap(), GaussianInt::new(-1, 0));

        // all four arcs cyclically: i^4 = +1, hence not optimal
        let cyclic = c4_with([F, F, F, F]);
        assert_eq!(holonomy(&cyclic, &quad).unwrap(), GaussianInt::ONE);

        let bad = CycleQuad { u: 0, x: 1, v: 3, y: 2 };
        assert!(holonomy(&all_undirected, &bad).is_err());
    }

    #[test]
    fn holonomy_traversal_invariance() {
        use EdgeState::{Backward as B, Forward as F, Undirected as U};
        for states in [[F, U, B, U], [F, F, U, U], [F, B, F, F]] {
            let m = c4_with(states);
            let base = holonomy(&m, &CycleQuad { u: 0, x: 1, v: 2, y: 3 }).unwrap();
            // all 8 traversals of the same geometric cycle
            let traversals = [
                [0, 1, 2, 3],
                [1, 2, 3, 0],
                [2, 3, 0, 1],
                [3, 0, 1, 2],
                [0, 3, 2, 1],
                [3, 2, 1, 0],
                [2, 1, 0, 3],
                [1, 0, 3, 2],
            ];
            for t in traversals {
                let q = CycleQuad { u: t[0], x: t[1], v: t[2], y: t[3] };
                assert_eq!(holonomy(&m, &q).unwrap(), base);
            }
        }
    }

    /// Brute force over all 3^4 = 81 edge-state assignments of a fixed
    /// 4-cycle, the independent oracle for the type table.
    #[test]
    fn classify_table_over_81_assignments() {
        use EdgeState::{Backward, Forward, Undirected};
        let all = [Undirected, Forward, Backward];
        let quad = CycleQuad { u: 0, x: 1, v: 2, y: 3 };
        let mut adjacent = 0;
        let mut opposite = 0;
        let mut all_arc = 0;
        let mut invalid = 0;
        let mut odd_arc_valid = 0;
        for a in all {
            for b in all {
                for c in all {
                    for d in all {
                        let m = c4_with([a, b, c, d]);
                        let narcs = [a, b, c, d].iter().filter(|s| s.is_arc()).count();
                        match classify(&m, &quad).unwrap() {
                            CycleType::TwoArcAdjacentU => adjacent += 1,
                            CycleType::TwoArcOppositeU => opposite += 1,
                            CycleType::AllArcOdd => all_arc += 1,
                            CycleType::Invalid => {
                                invalid += 1;
                                continue;
                            }
                        }
                        if narcs == 1 || narcs == 3 {
                            odd_arc_valid += 1;
                        }
                    }
                }
            }
        }
        assert_eq!((adjacent, opposite, all_arc), (8, 4, 8));
        assert_eq!(invalid, 61);
        assert_eq!(odd_arc_valid, 0);
    }

    #[test]
    fn h1_first_cycle_is_first_type() {
        // C1 = {v1, v2, v4, v3} -> 0-indexed traversal (0, 1, 3, 2)
        let h1 = fixture("H1").unwrap();
        let quad = CycleQuad { u: 0, x: 1, v: 3, y: 2 };
        assert_eq!(classify(&h1, &quad).unwrap(), CycleType::TwoArcAdjacentU);
    }

    #[test]
    fn optimum_by_cycles_examples() {
        assert!(optimum_by_cycles(&fixture("H1").unwrap()).unwrap());
        assert!(!optimum_by_cycles(&undirect_all(&hypercube(3).unwrap())).unwrap());
        let k33 = undirect_all(&complete_bipartite(3, 3));
        assert!(matches!(optimum_by_cycles(&k33), Err(Error::CriterionNotApplicable(_))));
    }

    #[test]
    fn criteria_agree_exhaustively_on_k4_and_c4() {
        use EdgeState::{Backward, Forward, Undirected};
        let all = [Undirected, Forward, Backward];
        for g in [complete_graph(4), cycle_graph(4).unwrap()] {
            let m = g.edge_count();
            let mut idx = vec![0usize; m];
            loop {
                let states: Vec<EdgeState> = idx.iter().map(|&i| all[i]).collect();
                let mg = MixedGraph::new(g.clone(), states).unwrap();
                assert_eq!(optimum_by_cycles(&mg).unwrap(), is_optimum(&mg));
                // increment mixed-radix counter
                let mut pos = 0;
                loop {
                    if pos == m {
                        break;
                    }
                    idx[pos] += 1;
                    if idx[pos] < 3 {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
                if pos == m {
                    break;
                }
            }
        }
    }

    #[test]
    fn phi0_cycles_all_arc_odd() {
        for k in 2..=4 {
            let o = crate::hypercube::phi0(k).unwrap();
            for quad in four_cycles(o.mixed().graph()) {
                assert_eq!(classify(o.mixed(), &quad).unwrap(), CycleType::AllArcOdd);
            }
        }
    }

    #[test]
    fn holonomy_switching_invariant() {
        let h1 = fixture("H1").unwrap();
        let theta = crate::switching::SwitchingFunction::new(vec![1, 1, 1, -1, 1, -1, 1, 1]).unwrap();
        let switched = crate::switching::apply_switching(&h1, &theta).unwrap();
        for quad in four_cycles(h1.graph()) {
            assert_eq!(holonomy(&h1, &quad).unwrap(), holonomy(&switched, &quad).unwrap());
        }
    }

    #[test]
    fn all_arcs_same_way_around_cycle_not_optimal() {
        use EdgeState::Forward as F;
        let m = c4_with([F, F, F, F]);
        assert!(!optimum_by_cycles(&m).unwrap());
        assert!(!is_optimum(&m));
    }

    #[test]
    fn single_flip_of_valid_two_arc_cycle_invalidates() {
        use EdgeState::{Backward as B, Forward as F, Undirected as U};
        let quad = CycleQuad { u: 0, x: 1, v: 2, y: 3 };
        let valid = c4_with([F, F, U, U]);
        assert_ne!(classify(&valid, &quad).unwrap(), CycleType::Invalid);
        let flipped = c4_with([F, B, U, U]);
        assert_eq!(classify(&flipped, &quad).unwrap(), CycleType::Invalid);
    }
}
