//! Switching functions theta: V -> {+1, -1}, conjugation of the Hermitian
//! matrix by diag(theta), a linear-time switching-equivalence solver and
//! partitioning of mixed-graph sets into switching+automorphism classes.
//!
//! A sign change across an undirected edge would conjugate its entry to -1,
//! which is outside the mixed-graph alphabet, so a switching is valid for a
//! given mixed graph only when it is constant on every connected component
//! of the undirected-edge subgraph.

use crate::error::{Error, Result};
use crate::graph::AutomorphismGroup;
use crate::mixed::{emit_mixed_json, EdgeState, MixedGraph};

/// Per-vertex sign in {+1, -1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchingFunction {
    signs: Vec<i8>,
}

impl SwitchingFunction {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if let Some(&bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::MixedJson(format!("switching sign {bad} is not +1 or -1")));
        }
        Ok(Self { signs })
    }

    pub fn all_plus(n: usize) -> Self {
        Self { signs: vec![1; n] }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn sign(&self, v: usize) -> i8 {
        self.signs[v]
    }

    /// The global flip -theta, which acts identically on every mixed graph.
    pub fn negated(&self) -> Self {
        Self { signs: self.signs.iter().map(|s| -s).collect() }
    }

    /// True if this equals `other` or its global negation componentwise.
    pub fn same_up_to_global_sign(&self, other: &Self) -> bool {
        self == other || *self == other.negated()
    }
}

/// Checks that `theta` never changes sign across an undirected edge of `m`.
pub fn check_valid(m: &MixedGraph, theta: &SwitchingFunction) -> Result<()> {
    let n = m.graph().vertex_count();
    if theta.len() != n {
        return Err(Error::SwitchingLength { got: theta.len(), n });
    }
    for (&(u, v), &s) in m.graph().edges().iter().zip(m.states()) {
        if s == EdgeState::Undirected && theta.sign(u) != theta.sign(v) {
            return Err(Error::InvalidSwitching(u, v));
        }
    }
    Ok(())
}

/// Conjugates H(m) by diag(theta): the arc u -> v flips exactly when
/// theta(u) * theta(v) = -1; undirected edges are unchanged (validity is
/// checked first).
pub fn apply_switching(m: &MixedGraph, theta: &SwitchingFunction) -> Result<MixedGraph> {
    check_valid(m, theta)?;
    let states = m
        .graph()
        .edges()
        .iter()
        .zip(m.states())
        .map(|(&(u, v), &s)| if theta.sign(u) == theta.sign(v) { s } else { s.reversed() })
        .collect();
    MixedGraph::new(m.graph().clone(), states)
}

/// Witness of an equivalence: an optional relabeling followed by a
/// switching maps the first graph onto the second exactly.
#[derive(Debug, Clone)]
pub struct EquivalenceWitness {
    pub theta: SwitchingFunction,
    pub perm: Option<Vec<usize>>,
}

impl EquivalenceWitness {
    /// Re-applies the witness and checks it reproduces `m2` from `m1`.
    pub fn verify(&self, m1: &MixedGraph, m2: &MixedGraph) -> Result<bool> {
        let relabeled = match &self.perm {
            Some(p) => m1.relabel(p)?,
            None => m1.clone(),
        };
        Ok(apply_switching(&relabeled, &self.theta)? == *m2)
    }
}

/// Required sign product theta(u) * theta(v) turning the state `a` on one
/// edge into the state `b`; `None` when no switching can do it.
fn required_ratio(a: EdgeState, b: EdgeState) -> Option<i8> {
    use EdgeState::*;
    match (a, b) {
        (Undirected, Undirected) => Some(1),
        (Forward, Forward) | (Backward, Backward) => Some(1),
        (Forward, Backward) | (Backward, Forward) => Some(-1),
        _ => None,
    }
}

/// Finds a switching with `apply_switching(m1, theta) == m2`, or `None`.
///
/// The sign product on every edge is forced, so signs are propagated from
/// the lowest vertex of each connected component (fixed to +1) along a BFS
/// spanning tree, then every remaining edge is verified. Errors if the two
/// graphs do not share the same labeled underlying graph.
pub fn switching_equivalent(m1: &MixedGraph, m2: &MixedGraph) -> Result<Option<EquivalenceWitness>> {
    if m1.graph() != m2.graph() {
        return Err(Error::UnderlyingMismatch);
    }
    let g = m1.graph();
    let n = g.vertex_count();
    let mut ratio = Vec::with_capacity(g.edge_count());
    for (&a, &b) in m1.states().iter().zip(m2.states()) {
        match required_ratio(a, b) {
            Some(r) => ratio.push(r),
            None => return Ok(None),
        }
    }
    let mut signs = vec![0i8; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if signs[root] != 0 {
            continue;
        }
        signs[root] = 1;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                let r = ratio[g.edge_index(u, v).expect("neighbor edge exists")];
                let want = r * signs[u];
                if signs[v] == 0 {
                    signs[v] = want;
                    queue.push_back(v);
                } else if signs[v] != want {
                    return Ok(None);
                }
            }
        }
    }
    let theta = SwitchingFunction::new(signs).expect("propagation emits only +-1");
    debug_assert_eq!(apply_switching(m1, &theta)?, *m2);
    Ok(Some(EquivalenceWitness { theta, perm: None }))
}

/// Tries every automorphism sigma of the shared underlying graph: returns a
/// witness (sigma, theta) with `relabel(m1, sigma)` switching-equivalent to
/// `m2`, or `None`.
pub fn iso_switching_equivalent(
    m1: &MixedGraph,
    m2: &MixedGraph,
    aut: &AutomorphismGroup,
) -> Result<Option<EquivalenceWitness>> {
    if m1.graph() != m2.graph() {
        return Err(Error::UnderlyingMismatch);
    }
    for perm in aut.perms() {
        let relabeled = m1.relabel(perm)?;
        if relabeled.graph() != m1.graph() {
            return Err(Error::NotAnAutomorphism);
        }
        if let Some(w) = switching_equivalent(&relabeled, m2)? {
            return Ok(Some(EquivalenceWitness { theta: w.theta, perm: Some(perm.clone()) }));
        }
    }
    Ok(None)
}

/// One switching+automorphism equivalence class of a partitioned set.
#[derive(Debug, Clone)]
pub struct MixedClass {
    /// Indices into the partitioned input slice.
    pub members: Vec<usize>,
    /// Member with the lexicographically smallest canonical JSON encoding.
    pub representative: MixedGraph,
    pub arc_count: usize,
    pub undirected_count: usize,
}

impl MixedClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Partitions mixed graphs (all on one labeled underlying graph) under
/// switching combined with the given automorphisms. Classes are sorted by
/// descending arc count, then by representative encoding; deterministic.
pub fn partition_classes(
    ms: &[MixedGraph],
    aut: &AutomorphismGroup,
) -> Result<Vec<MixedClass>> {
    if let Some(first) = ms.first() {
        if ms.iter().any(|m| m.graph() != first.graph()) {
            return Err(Error::UnderlyingMismatch);
        }
    }
    let mut classes: Vec<MixedClass> = Vec::new();
    for (i, m) in ms.iter().enumerate() {
        let mut placed = false;
        for class in classes.iter_mut() {
            if iso_switching_equivalent(m, &class.representative, aut)?.is_some() {
                class.members.push(i);
                if emit_mixed_json(m) < emit_mixed_json(&class.representative) {
                    class.representative = m.clone();
                }
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(MixedClass {
                members: vec![i],
                representative: m.clone(),
                arc_count: m.arc_count(),
                undirected_count: m.undirected_count(),
            });
        }
    }
    classes.sort_by(|a, b| {
        b.arc_count
            .cmp(&a.arc_count)
            .then_with(|| emit_mixed_json(&a.representative).cmp(&emit_mixed_json(&b.representative)))
    });
    Ok(classes)
}
