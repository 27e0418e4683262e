use qclc::bounds::{edge_bound, min_a};
use qclc::chord::is_chordfree;
use qclc::cycles::is_four_cycle_free;
use qclc::ets::{enumerate_ets, vn_graph};
use qclc::fixtures::compact_small;
use qclc::mindist::{min_distance, Distance, Strategy};
use qclc::tanner::TannerGraph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

mod common;
use common::random_lift;

/// Random regular matrices of girth 6 without 8-cycles-wc.
fn chordfree_corpus(count: usize, seed: u64) -> Vec<(usize, TannerGraph)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let c = rng.gen_range(3..=4);
        let d = rng.gen_range(4..=5);
        let n = rng.gen_range(7..=13);
        let b = random_lift(&mut rng, c, d, n);
        if is_four_cycle_free(&b) && is_chordfree(&b).unwrap() {
            let g = TannerGraph::from_exponent(&b);
            if g.bfs_girth() == Some(6) {
                out.push((c, g));
            }
        }
    }
    out
}

#[test]
fn degree_accounting_and_edge_bound() {
    let (mut sets, mut below) = (0, 0);
    for (gamma, g) in chordfree_corpus(25, 0xe75) {
        for r in enumerate_ets(&g, 2 * gamma + 1, gamma) {
            sets += 1;
            assert!(r.elementary);
            assert_eq!(r.b, r.a * gamma - 2 * r.edges);
            let vg = vn_graph(&r.vars, &g);
            assert_eq!(vg.edge_count(), r.edges);
            assert!(vg.is_connected());
            assert!((0..r.a).all(|u| vg.degree(u) <= gamma));
            assert!(r.edges <= edge_bound(r.a), "{r:?}");
            assert!(!vg.has_shared_triangle_edge(), "{r:?}");
            assert!(r.chordfree);
            if r.b < r.a {
                below += 1;
                let bound = min_a(gamma, r.b).value.expect("parity admits the class");
                assert!(r.a >= bound, "gamma={gamma} {r:?}");
            }
        }
    }
    assert!(sets > 100 && below > 0, "{sets} {below}");
}

#[test]
fn distance_strategies_agree() {
    let mut rng = StdRng::seed_from_u64(0xd1);
    let mut tested = 0;
    while tested < 30 {
        let c = rng.gen_range(2..=3);
        let d = rng.gen_range(3..=5);
        let n = rng.gen_range(3..=9);
        let g = TannerGraph::from_exponent(&random_lift(&mut rng, c, d, n));
        let a = min_distance(&g, Strategy::Enumerate, None).unwrap();
        if a.dimension > 20 {
            continue;
        }
        tested += 1;
        let b = min_distance(&g, Strategy::EvenSubgraph, None).unwrap();
        let value = |d: &Distance| match d {
            Distance::Exact { value, .. } => Some(*value),
            _ => None,
        };
        assert_eq!(value(&a.distance), value(&b.distance));
        if let Distance::Exact { witness, .. } = b.distance {
            // the witness is a codeword: every check sees an even count
            assert!((0..g.num_checks()).all(|ch| {
                g.check_neighbours(ch).iter().filter(|v| witness.contains(v)).count() % 2 == 0
            }));
        }
    }
}

#[test]
fn published_distances() {
    for f in compact_small() {
        if f.n > 5 {
            continue;
        }
        let g = TannerGraph::from_exponent(&f.matrix());
        let d = min_distance(&g, Strategy::Auto, None).unwrap();
        assert_eq!(d.strategy, Strategy::Enumerate);
        match d.distance {
            Distance::Exact { value, .. } => assert_eq!(Some(value), f.dmin, "{}", f.label()),
            other => panic!("{other:?}"),
        }
    }
}
