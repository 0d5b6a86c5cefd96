use m1part::enumerate::enumerate_connected_chordal;
use m1part::format::{from_edge_list, from_graph6, parse_auto, to_dot, to_edge_list, to_graph6};
use m1part::graph::{Bipartition, Graph, VertexSet};
use m1part::search::is_isomorphic;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

#[test]
fn graph6_round_trip_on_corpus() {
    for g in enumerate_connected_chordal(8).unwrap() {
        let text = to_graph6(&g);
        assert_eq!(to_graph6(&from_graph6(&text).unwrap()), text);
        assert_eq!(from_graph6(&text).unwrap(), g);
    }
}

#[test]
fn reference_codes() {
    assert_eq!(to_graph6(&Graph::empty(1)), "@");
    let star = from_graph6("D?{").unwrap();
    assert_eq!(star.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
    let p3 = from_graph6("BW").unwrap();
    assert_eq!(p3.edges(), vec![(0, 2), (1, 2)]);
    let k3 = Graph::complete(3);
    assert_eq!(from_graph6(&to_graph6(&k3)).unwrap(), k3);
}

#[test]
fn induced_examples() {
    let k4 = Graph::complete(4);
    assert_eq!(k4.induced(&VertexSet::new([0, 2, 3])).unwrap(), Graph::complete(3));
    let c4 = Graph::cycle(4);
    assert!(is_isomorphic(&c4.induced(&VertexSet::new([0, 1, 2])).unwrap(), &Graph::path(3)));
    assert_eq!(c4.induced(&c4.vertices()).unwrap(), c4);
    assert!(c4.induced(&VertexSet::new([0, 4])).is_err());
}

#[test]
fn component_examples() {
    let g = Graph::complete(3).disjoint_union(&Graph::complete(2));
    let sizes: Vec<usize> = g.components().iter().map(VertexSet::len).collect();
    assert_eq!(sizes, vec![3, 2]);
    assert_eq!(Graph::path(5).components().len(), 1);
    assert!(Graph::empty(0).components().is_empty());
}

#[test]
fn bipartition_examples() {
    let Bipartition::Bipartite(c) = Graph::cycle(4).bipartition() else { panic!() };
    assert_eq!(c, vec![0, 1, 0, 1]);
    let Bipartition::OddCycle(cyc) = Graph::complete(3).bipartition() else { panic!() };
    assert_eq!(cyc.len(), 3);
    assert_eq!(Graph::empty(0).bipartition(), Bipartition::Bipartite(vec![]));
}

#[test]
fn other_formats() {
    let g = Graph::path(4);
    assert_eq!(from_edge_list(&to_edge_list(&g)).unwrap(), g);
    assert_eq!(parse_auto("Cr").unwrap(), from_graph6("Cr").unwrap());
    assert_eq!(parse_auto("2 1\n0 1\n").unwrap(), Graph::complete(2));
    let dot = to_dot(&g, "p4", Some(&VertexSet::new([1])));
    assert!(dot.starts_with("graph \"p4\" {"));
    assert!(dot.contains("1 [style=filled"));
    assert!(dot.contains("1 -- 2"));
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(40)) {
        let text = to_graph6(&g);
        prop_assert_eq!(&from_graph6(&text).unwrap(), &g);
        prop_assert_eq!(&from_edge_list(&to_edge_list(&g)).unwrap(), &g);
    }

    #[test]
    fn bipartition_certificates(g in arb_graph(12)) {
        match g.bipartition() {
            Bipartition::Bipartite(c) => {
                for (u, v) in g.edges() {
                    prop_assert_ne!(c[u], c[v]);
                }
            }
            Bipartition::OddCycle(cyc) => {
                prop_assert_eq!(cyc.len() % 2, 1);
                for i in 0..cyc.len() {
                    prop_assert!(g.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]));
                }
            }
        }
    }
}
