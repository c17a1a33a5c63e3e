use odiam::graph::{diameter, is_bridgeless, Distance, UndirectedGraph};
use odiam::oracle::{enumerate_bridgeless, oriented_diameter, random_bridgeless};
use odiam::orient::{
    orient_bounded, orient_bounded_with, orient_hamiltonian, Method, OrientOptions,
};
use odiam::Error;
use proptest::prelude::*;

#[test]
fn complete_graph_on_five() {
    let cert = orient_bounded(&UndirectedGraph::complete(5)).unwrap();
    assert!(cert.diameter.within(3));
    assert!(cert.is_consistent());
    assert!(
        oriented_diameter(&UndirectedGraph::complete(5))
            .unwrap()
            .diameter
            <= cert.diameter
    );
}

#[test]
fn petersen_without_fallbacks() {
    let opts = OrientOptions {
        oracle_fallback: false,
        hamiltonian_budget: 0,
        ..Default::default()
    };
    let cert = orient_bounded_with(&UndirectedGraph::petersen(), &opts).unwrap();
    assert!(cert.diameter.within(8));
    assert_ne!(cert.method, Method::HamiltonianCycle);
}

#[test]
fn size_below_threshold_is_rejected() {
    let h6 = odiam::constructions::build_h(6).unwrap().0;
    assert!(matches!(orient_bounded(&h6), Err(Error::Precondition(_))));
    assert!(matches!(
        orient_bounded(&UndirectedGraph::complete(4)),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn bridge_is_reported_as_such() {
    // two copies of K4 joined by a bridge: 14 edges on 8 vertices
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for base in [0, 4] {
        for u in 0..4 {
            edges.extend((u + 1..4).map(|v| (base + u, base + v)));
        }
    }
    edges.push((3, 4));
    let g = UndirectedGraph::new(8, edges).unwrap();
    assert!(!is_bridgeless(&g));
    let err = orient_bounded(&g).unwrap_err();
    assert!(matches!(err, Error::Bridge(_)));
    assert!(err.to_string().contains("only if it has no bridge"));
}

#[test]
fn every_small_class_meets_the_bound_and_never_beats_the_oracle() {
    for n in 5..=6 {
        for g in enumerate_bridgeless(n).unwrap() {
            if g.size() < n + 3 {
                continue;
            }
            let cert = orient_bounded(&g).unwrap();
            assert!(cert.diameter.within(n - 2), "{g:?}");
            assert_eq!(diameter(&cert.orientation), cert.diameter);
            assert!(oriented_diameter(&g).unwrap().diameter <= cert.diameter);
        }
    }
}

#[test]
fn hamiltonian_helper_declines_non_hamiltonian_graphs() {
    assert_eq!(
        orient_hamiltonian(&UndirectedGraph::petersen(), 1_000_000).unwrap(),
        None
    );
    let cert = orient_hamiltonian(&UndirectedGraph::complete(7), 1_000)
        .unwrap()
        .unwrap();
    assert_eq!(cert.method, Method::HamiltonianCycle);
    assert!(cert.diameter.within(5));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_graphs_get_verified_certificates(n in 5usize..=16, p in 0.2f64..0.7, seed in any::<u64>()) {
        let g = random_bridgeless(n, p, seed).unwrap();
        prop_assume!(g.size() >= n + 3);
        let opts = OrientOptions { oracle_fallback: false, ..Default::default() };
        let cert = orient_bounded_with(&g, &opts).unwrap();
        prop_assert!(cert.diameter.within(n - 2));
        prop_assert_eq!(diameter(&cert.orientation), cert.diameter);
        prop_assert!(cert.diameter != Distance::Unreachable);
    }
}
