//! Cross-module property tests: codec round trips, criterion agreement and
//! solver completeness on randomized inputs.

use proptest::prelude::*;
// explicit imports win over the proptest prelude glob, which re-exports its
// own bundled rand traits
use rand::{Rng as _, SeedableRng as _};
use rand_chacha::ChaCha8Rng;

use hermix::cycles::optimum_by_cycles;
use hermix::graph::{emit_graph6, hypercube, parse_graph6, Graph};
use hermix::hermitian::is_optimum;
use hermix::mixed::{emit_mixed_json, orient_all, parse_mixed_json, EdgeState, MixedGraph};
use hermix::spectra::{skew_energy_equals_hermitian, DEFAULT_SOLVER_TOL as TOL};
use hermix::switching::{apply_switching, check_valid, switching_equivalent, SwitchingFunction};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let m = pairs.len();
            (Just(n), Just(pairs), proptest::collection::vec(any::<bool>(), m))
        })
        .prop_map(|(n, pairs, keep)| {
            let edges = pairs.into_iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| e);
            Graph::new(n, edges).expect("generated edges are simple")
        })
}

fn arb_mixed(max_n: usize) -> impl Strategy<Value = MixedGraph> {
    arb_graph(max_n).prop_flat_map(|g| {
        let m = g.edge_count();
        proptest::collection::vec(0..3u8, m).prop_map(move |digits| {
            let states = digits
                .iter()
                .map(|&d| match d {
                    0 => EdgeState::Undirected,
                    1 => EdgeState::Forward,
                    _ => EdgeState::Backward,
                })
                .collect();
            MixedGraph::new(g.clone(), states).expect("aligned states")
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trip(g in arb_graph(62)) {
        let enc = emit_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(enc.as_bytes()).unwrap(), g);
    }

    #[test]
    fn reverse_all_arcs_is_involution(m in arb_mixed(12)) {
        prop_assert_eq!(m.reverse_all_arcs().reverse_all_arcs(), m);
    }

    #[test]
    fn arc_plus_undirected_is_edge_count(m in arb_mixed(12)) {
        prop_assert_eq!(m.arc_count() + m.undirected_count(), m.graph().edge_count());
        let r = m.reverse_all_arcs();
        prop_assert_eq!((m.arc_count(), m.undirected_count()), (r.arc_count(), r.undirected_count()));
    }
}

proptest! {
    // the codec round trip runs at a higher case count
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn mixed_json_round_trip(m in arb_mixed(16)) {
        let text = emit_mixed_json(&m);
        let back = parse_mixed_json(&text).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(emit_mixed_json(&back), text);
    }
}

#[test]
fn cycle_criterion_agrees_on_random_q3_q4() {
    let mut rng = ChaCha8Rng::seed_from_u64(7788);
    for (g, trials) in [(hypercube(3).unwrap(), 5000), (hypercube(4).unwrap(), 5000)] {
        for _ in 0..trials {
            let states: Vec<EdgeState> = (0..g.edge_count())
                .map(|_| match rng.gen_range(0..3) {
                    0 => EdgeState::Undirected,
                    1 => EdgeState::Forward,
                    _ => EdgeState::Backward,
                })
                .collect();
            let m = MixedGraph::new(g.clone(), states).unwrap();
            assert_eq!(optimum_by_cycles(&m).unwrap(), is_optimum(&m));
        }
    }
}

#[test]
fn skew_energy_matches_on_random_oriented_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5544);
    for _ in 0..100 {
        let n = rng.gen_range(2..=10);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen::<bool>() {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges).unwrap();
        let dirs: std::collections::HashMap<(usize, usize), bool> =
            g.edges().iter().map(|&e| (e, rng.gen())).collect();
        let oriented = orient_all(&g, |u, v| dirs[&(u, v)]);
        assert!(skew_energy_equals_hermitian(&oriented, TOL).unwrap());
    }
}

/// Solver completeness: whenever the tree-propagation solver answers
/// `None`, exhaustive search over all valid sign patterns agrees.
#[test]
fn solver_none_matches_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(3311);
    let mut nones = 0;
    for _ in 0..300 {
        let n = rng.gen_range(2..=8usize);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges).unwrap();
        let random_states = |rng: &mut ChaCha8Rng| -> Vec<EdgeState> {
            (0..g.edge_count())
                .map(|_| match rng.gen_range(0..3) {
                    0 => EdgeState::Undirected,
                    1 => EdgeState::Forward,
                    _ => EdgeState::Backward,
                })
                .collect()
        };
        let m1 = MixedGraph::new(g.clone(), random_states(&mut rng)).unwrap();
        let m2 = MixedGraph::new(g.clone(), random_states(&mut rng)).unwrap();
        let answer = switching_equivalent(&m1, &m2).unwrap();
        let mut brute = None;
        for mask in 0u32..1 << n {
            let signs: Vec<i8> = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            let theta = SwitchingFunction::new(signs).unwrap();
            if check_valid(&m1, &theta).is_ok() && apply_switching(&m1, &theta).unwrap() == m2 {
                brute = Some(theta);
                break;
            }
        }
        match (&answer, &brute) {
            (Some(w), Some(_)) => assert!(w.verify(&m1, &m2).unwrap()),
            (None, None) => nones += 1,
            (got, want) => panic!("solver {got:?} disagrees with brute force {want:?}"),
        }
    }
    // most random pairs are inequivalent; make sure the negative branch
    // was actually exercised
    assert!(nones > 100, "only {nones} negative cases");
}

/// theta and -theta act identically; on a connected graph these are the
/// only coincidences.
#[test]
fn switching_orbit_size_on_connected_oriented_graph() {
    let g = hypercube(2).unwrap();
    let m = orient_all(&g, |_, _| true);
    let mut images = std::collections::HashSet::new();
    for mask in 0u32..16 {
        let signs: Vec<i8> = (0..4).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
        let theta = SwitchingFunction::new(signs).unwrap();
        images.insert(emit_mixed_json(&apply_switching(&m, &theta).unwrap()));
    }
    assert_eq!(images.len(), 8); // 2^4 / 2
}

// spectra never fail their internal moment checks on random inputs
proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spectra_moment_checks_hold(m in arb_mixed(10)) {
        let h = hermix::hermitian::build_hermitian(&m);
        let sp = hermix::spectra::eigenvalues(&h, TOL).unwrap();
        prop_assert_eq!(sp.eigenvalues().len(), m.graph().vertex_count());
    }
}
