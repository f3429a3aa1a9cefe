//! The recursive optimum orientation phi0 of the hypercube Q_k, its exact
//! verification, and the constructive reduction of any optimum orientation
//! onto phi0 by a switching.
//!
//! phi0 is built recursively: Q_1 is the single arc 0 -> 1; for Q_k the
//! lower half (labels with bit k-1 clear) carries phi0 of Q_{k-1}, the upper
//! half carries its arc-reversal, and every cross edge is the arc
//! t -> t + 2^(k-1). Under this vertex order the Hermitian matrix has the
//! block form [[H_{k-1}, iI], [-iI, H'_{k-1}]].

use crate::cycles::{classify, four_cycles, CycleType};
use crate::error::{Error, Result};
use crate::graph::hypercube;
use crate::hermitian::hermitian_square;
use crate::mixed::{EdgeState, MixedGraph};
use crate::spectra::{hermitian_energy, DEFAULT_SOLVER_TOL};
use crate::switching::{switching_equivalent, SwitchingFunction};

/// Largest dimension for which the exact phi0 verification is supported.
pub const VERIFY_MAX_K: u32 = 10;
/// Largest dimension for which the numeric energy check runs.
pub const ENERGY_MAX_K: u32 = 8;

/// An orientation of the hypercube Q_k: every edge is an arc and the
/// underlying graph is exactly [`hypercube`]`(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypercubeOrientation {
    k: u32,
    mixed: MixedGraph,
}

impl HypercubeOrientation {
    /// Wraps an oriented mixed graph whose underlying graph is Q_k with the
    /// standard labeling.
    pub fn from_mixed(mixed: MixedGraph) -> Result<Self> {
        let n = mixed.graph().vertex_count();
        let k = n.trailing_zeros();
        if n == 0 || 1usize << k != n {
            return Err(Error::NotAHypercube(k));
        }
        if *mixed.graph() != hypercube(k)? {
            return Err(Error::NotAHypercube(k));
        }
        if let Some(&(u, v)) = mixed
            .graph()
            .edges()
            .iter()
            .zip(mixed.states())
            .find(|(_, s)| !s.is_arc())
            .map(|(e, _)| e)
        {
            return Err(Error::NotOriented(u, v));
        }
        Ok(Self { k, mixed })
    }

    pub fn dimension(&self) -> u32 {
        self.k
    }

    pub fn mixed(&self) -> &MixedGraph {
        &self.mixed
    }

    pub fn into_mixed(self) -> MixedGraph {
        self.mixed
    }
}

/// State of the edge (u, v), u < v, under phi0 on Q_k.
fn phi0_state(k: u32, u: usize, v: usize) -> EdgeState {
    let half = 1usize << (k - 1);
    if k == 1 {
        return EdgeState::Forward; // 0 -> 1
    }
    if v < half {
        phi0_state(k - 1, u, v)
    } else if u >= half {
        phi0_state(k - 1, u - half, v - half).reversed()
    } else {
        EdgeState::Forward // cross arc u -> u + half
    }
}

/// The recursive optimum orientation of Q_k.
pub fn phi0(k: u32) -> Result<HypercubeOrientation> {
    let graph = hypercube(k)?;
    let states = graph.edges().iter().map(|&(u, v)| phi0_state(k, u, v)).collect();
    let mixed = MixedGraph::new(graph, states)?;
    Ok(HypercubeOrientation { k, mixed })
}

/// True iff every 4-cycle of the orientation has holonomy -1 (for an
/// oriented graph, equivalently classifies as the all-arc type). Agrees
/// with the exact H^2 = k*I criterion.
pub fn is_optimum_orientation(o: &HypercubeOrientation) -> bool {
    four_cycles(o.mixed.graph()).iter().all(|quad| {
        classify(&o.mixed, quad).expect("cycles of the underlying graph are valid")
            == CycleType::AllArcOdd
    })
}

/// Outcome of [`verify_phi0`]; only ever observed with all checks passing
/// (failures surface as errors).
#[derive(Debug, Clone)]
pub struct Phi0Report {
    pub k: u32,
    pub n: usize,
    pub square_is_k_identity: bool,
    pub four_cycle_count: usize,
    pub all_cycles_all_arc_odd: bool,
    /// Numeric energy, computed for k <= 8 only.
    pub energy: Option<f64>,
    /// The target value 2^k * sqrt(k).
    pub energy_target: f64,
}

/// Verifies phi0(k) exactly (H^2 = k*I and every 4-cycle of the all-arc
/// type) and, for k <= 8, numerically checks the energy 2^k * sqrt(k)
/// within 1e-9 * 2^k. Any failed check is an error (it would indicate an
/// implementation bug).
pub fn verify_phi0(k: u32) -> Result<Phi0Report> {
    if k > VERIFY_MAX_K {
        return Err(Error::DimensionTooLarge(k, VERIFY_MAX_K));
    }
    let o = phi0(k)?;
    let n = 1usize << k;

    let square_ok = hermitian_square(&o.mixed).is_scalar_identity(k as i64);
    if !square_ok {
        return Err(Error::VerificationFailed(format!("H^2(phi0({k})) != {k}*I")));
    }
    let cycles = four_cycles(o.mixed.graph());
    let cycles_ok = is_optimum_orientation(&o);
    if !cycles_ok {
        return Err(Error::VerificationFailed(format!(
            "phi0({k}) has a 4-cycle that is not the all-arc type"
        )));
    }
    let mut energy = None;
    let energy_target = n as f64 * (k as f64).sqrt();
    if k <= ENERGY_MAX_K {
        let e = hermitian_energy(&o.mixed, DEFAULT_SOLVER_TOL)?;
        if (e - energy_target).abs() > 1e-9 * n as f64 {
            return Err(Error::VerificationFailed(format!(
                "energy(phi0({k})) = {e}, expected {energy_target}"
            )));
        }
        energy = Some(e);
    }
    Ok(Phi0Report {
        k,
        n,
        square_is_k_identity: square_ok,
        four_cycle_count: cycles.len(),
        all_cycles_all_arc_odd: cycles_ok,
        energy,
        energy_target,
    })
}

/// For an optimum orientation of Q_k, returns the switching carrying it
/// onto phi0(k). Existence is guaranteed by the uniqueness of the optimum
/// orientation up to switching; a solver failure on an optimum input is
/// reported as a loud defect rather than `None`.
pub fn reduce_to_phi0(o: &HypercubeOrientation) -> Result<SwitchingFunction> {
    if !is_optimum_orientation(o) {
        return Err(Error::NotOptimumOrientation(format!(
            "a 4-cycle of this Q_{} orientation has holonomy != -1",
            o.k
        )));
    }
    let target = phi0(o.k)?;
    match switching_equivalent(&o.mixed, &target.mixed)? {
        Some(w) => Ok(w.theta),
        None => Err(Error::UniquenessViolation(format!(
            "no switching maps this optimum Q_{} orientation onto phi0",
            o.k
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::{build_hermitian, is_optimum, GaussianInt};
    use crate::mixed::orient_low_high;
    use crate::switching::apply_switching;

    #[test]
    fn phi0_k1_matrix() {
        let o = phi0(1).unwrap();
        assert_eq!(o.mixed().state(0, 1), Some(EdgeState::Forward));
        let h = build_hermitian(o.mixed());
        assert_eq!(h.get(0, 1), GaussianInt::I);
        assert_eq!(h.get(1, 0), GaussianInt::MINUS_I);
    }

    #[test]
    fn phi0_k2_unique_cycle_all_arc() {
        let o = phi0(2).unwrap();
        let cycles = four_cycles(o.mixed().graph());
        assert_eq!(cycles.len(), 1);
        assert_eq!(classify(o.mixed(), &cycles[0]).unwrap(), CycleType::AllArcOdd);
    }

    #[test]
    fn phi0_k3_square() {
        let o = phi0(3).unwrap();
        assert!(hermitian_square(o.mixed()).is_scalar_identity(3));
    }

    #[test]
    fn phi0_block_structure() {
        for k in 2..=5u32 {
            let o = phi0(k).unwrap();
            let prev = phi0(k - 1).unwrap();
            let h = build_hermitian(o.mixed());
            let hp = build_hermitian(prev.mixed());
            let half = 1usize << (k - 1);
            for i in 0..half {
                for j in 0..half {
                    assert_eq!(h.get(i, j), hp.get(i, j));
                    assert_eq!(h.get(half + i, half + j), hp.get(i, j).conj());
                    let cross = if i == j { GaussianInt::I } else { GaussianInt::ZERO };
                    assert_eq!(h.get(i, half + j), cross);
                    assert_eq!(h.get(half + i, j), cross.conj());
                }
            }
        }
    }

    #[test]
    fn verify_phi0_small() {
        let r1 = verify_phi0(1).unwrap();
        assert!((r1.energy.unwrap() - 2.0).abs() < 1e-9);
        let r3 = verify_phi0(3).unwrap();
        assert!((r3.energy.unwrap() - 8.0 * 3.0f64.sqrt()).abs() < 1e-9 * 8.0);
        assert_eq!(r3.four_cycle_count, 6);
        let r5 = verify_phi0(5).unwrap();
        assert!((r5.energy.unwrap() - 32.0 * 5.0f64.sqrt()).abs() < 1e-9 * 32.0);
        assert!(matches!(verify_phi0(11), Err(Error::DimensionTooLarge(11, 10))));
        assert!(matches!(phi0(0), Err(Error::ZeroDimension)));
    }

    #[test]
    fn optimum_orientation_examples() {
        for k in 1..=6 {
            assert!(is_optimum_orientation(&phi0(k).unwrap()));
        }
        let low_high = HypercubeOrientation::from_mixed(orient_low_high(&hypercube(3).unwrap()))
            .unwrap();
        assert!(!is_optimum_orientation(&low_high));
        assert!(!is_optimum(low_high.mixed()));
    }

    #[test]
    fn single_arc_flips_break_k2() {
        let o = phi0(2).unwrap();
        for i in 0..4 {
            let mut states = o.mixed().states().to_vec();
            states[i] = states[i].reversed();
            let flipped = HypercubeOrientation::from_mixed(
                MixedGraph::new(o.mixed().graph().clone(), states).unwrap(),
            )
            .unwrap();
            assert!(!is_optimum_orientation(&flipped));
        }
    }

    #[test]
    fn cycle_and_matrix_criteria_agree_on_orientations() {
        let g = hypercube(3).unwrap();
        // a deterministic spread of the 2^12 orientations
        for seed in 0u32..128 {
            let mask = seed.wrapping_mul(0x9e3779b9) & 0xfff;
            let states: Vec<EdgeState> = (0..12)
                .map(|i| if mask >> i & 1 == 1 { EdgeState::Forward } else { EdgeState::Backward })
                .collect();
            let m = MixedGraph::new(g.clone(), states).unwrap();
            let o = HypercubeOrientation::from_mixed(m).unwrap();
            assert_eq!(is_optimum_orientation(&o), is_optimum(o.mixed()));
        }
    }

    #[test]
    fn reduce_identity_and_reversal() {
        for k in [1u32, 3, 4] {
            let o = phi0(k).unwrap();
            let theta = reduce_to_phi0(&o).unwrap();
            assert_eq!(theta, SwitchingFunction::all_plus(1 << k));

            let rev = HypercubeOrientation::from_mixed(o.mixed().reverse_all_arcs()).unwrap();
            let theta = reduce_to_phi0(&rev).unwrap();
            let parity: Vec<i8> = (0..1usize << k)
                .map(|v| if v.count_ones() % 2 == 0 { 1 } else { -1 })
                .collect();
            let parity = SwitchingFunction::new(parity).unwrap();
            assert!(theta.same_up_to_global_sign(&parity));
        }
    }

    #[test]
    fn reduce_recovers_random_switchings() {
        let o = phi0(4).unwrap();
        for seed in 0u64..20 {
            let mut x = seed.wrapping_mul(0x2545f4914f6cdd1d).wrapping_add(1);
            let signs: Vec<i8> = (0..16)
                .map(|_| {
                    x ^= x << 13;
                    x ^= x >> 7;
                    x ^= x << 17;
                    if x & 1 == 1 {
                        -1
                    } else {
                        1
                    }
                })
                .collect();
            let theta = SwitchingFunction::new(signs).unwrap();
            let switched = HypercubeOrientation::from_mixed(
                apply_switching(o.mixed(), &theta).unwrap(),
            )
            .unwrap();
            let found = reduce_to_phi0(&switched).unwrap();
            // applying the found switching lands on phi0; the switching
            // itself matches up to the global sign
            assert_eq!(
                apply_switching(switched.mixed(), &found).unwrap(),
                *o.mixed()
            );
            assert!(found.same_up_to_global_sign(&theta));
        }
    }

    #[test]
    fn reduce_rejects_non_optimum() {
        let bad = HypercubeOrientation::from_mixed(orient_low_high(&hypercube(3).unwrap()))
            .unwrap();
        assert!(matches!(reduce_to_phi0(&bad), Err(Error::NotOptimumOrientation(_))));
    }

    #[test]
    fn from_mixed_rejects_non_hypercubes() {
        let k4 = orient_low_high(&crate::graph::complete_graph(4));
        assert!(HypercubeOrientation::from_mixed(k4).is_err());
        let undirected = crate::mixed::undirect_all(&hypercube(2).unwrap());
        assert!(matches!(
            HypercubeOrientation::from_mixed(undirected),
            Err(Error::NotOriented(0, 1))
        ));
    }
}
