use proptest::prelude::*;
use qclc::chord::check_3x3;
use qclc::compact::{build_compact, corollary_check, CompactSpec};
use qclc::search::{search, search_compact, search_general, Criterion, SearchConfig, SearchMode};
use qclc::tanner::{find_8wc, TannerGraph};

fn compact(gamma: usize, n: usize, hi: usize) -> SearchConfig {
    SearchConfig::new(gamma, n, hi, SearchMode::Compact)
}

#[test]
fn compact_three_by_five_exhausts_below_eleven() {
    let out = search_compact(&compact(3, 5, 11)).unwrap();
    let (last, below) = out.per_lifting.split_last().unwrap();
    assert_eq!(last.lifting, 11);
    assert!(!last.exhausted);
    assert_eq!(below.first().unwrap().lifting, 3);
    assert!(below.iter().all(|s| s.exhausted && s.nodes.is_some()));
    let spec = out.found.unwrap().spec.unwrap();
    assert_eq!(spec, CompactSpec::new(vec![0, 1, 3], vec![0, 1, 2, 4, 7], 11).unwrap());
}

#[test]
fn compact_range_without_solution() {
    let out = search_compact(&compact(3, 5, 10)).unwrap();
    assert!(out.found.is_none());
    assert!(!out.budget_exhausted);
    assert!(out.per_lifting.iter().all(|s| s.exhausted));
}

#[test]
fn published_gamma_three_rows_are_lexicographic_minima() {
    let cases = [
        (6, 13, vec![0, 1, 4], vec![0, 1, 2, 3, 5, 8]),
        (7, 19, vec![0, 1, 3], vec![0, 1, 2, 4, 7, 15, 16]),
        (8, 19, vec![0, 1, 4], vec![0, 1, 2, 3, 5, 7, 12, 13]),
        (9, 19, vec![0, 1, 4], vec![0, 1, 2, 3, 5, 7, 12, 13, 16]),
    ];
    for (n, lifting, seed, coefs) in cases {
        let f = search_compact(&compact(3, n, lifting)).unwrap().found.unwrap();
        assert_eq!(f.spec.unwrap(), CompactSpec::new(seed, coefs, lifting).unwrap(), "n={n}");
        assert!(f.certificate.holds());
    }
}

#[test]
fn exact_and_band_minima_for_four_by_five() {
    let exact = search_compact(&compact(4, 5, 17)).unwrap().found.unwrap();
    assert_eq!(
        exact.spec.unwrap(),
        CompactSpec::new(vec![0, 1, 3, 4], vec![0, 1, 2, 4, 7], 17).unwrap()
    );
    assert!(exact.certificate.holds());

    let mut cfg = compact(4, 5, 17);
    cfg.criterion = Criterion::Band;
    let band = search_compact(&cfg).unwrap().found.unwrap();
    assert_eq!(band.matrix.lifting(), 11);
    let c = band.certificate;
    assert_eq!((c.failing_3x3, c.failing_3x4), (0, 0));
    assert!(!c.chordfree);
    assert_eq!(c.oracle_8wc_pairs, Some(440));
}

#[test]
fn corollary_filter_can_raise_the_minimum() {
    let mut cfg = compact(4, 6, 23);
    let plain = search_compact(&cfg).unwrap().found.unwrap();
    cfg.require_corollary = true;
    let filtered = search_compact(&cfg).unwrap().found.unwrap();
    assert_eq!((plain.matrix.lifting(), filtered.matrix.lifting()), (19, 23));
    assert_eq!(plain.certificate.corollary_holds, Some(false));
    assert_eq!(filtered.certificate.corollary_holds, Some(true));
}

#[test]
fn general_three_by_five_needs_ten() {
    let out = search_general(&SearchConfig::new(3, 5, 10, SearchMode::General)).unwrap();
    let f = out.found.unwrap();
    assert_eq!(f.matrix.lifting(), 10);
    assert!(f.certificate.holds());
    let g = TannerGraph::from_exponent(&f.matrix);
    assert_eq!(g.bfs_girth(), Some(6));
    assert!(find_8wc(&g).unwrap().is_empty());
    let below = &out.per_lifting[..out.per_lifting.len() - 1];
    assert_eq!(below.last().unwrap().lifting, 9);
    assert!(below.iter().all(|s| s.exhausted));
}

#[test]
fn worker_count_does_not_change_results() {
    for mode in [SearchMode::Compact, SearchMode::General] {
        let runs: Vec<_> = [1, 2, 4]
            .into_iter()
            .map(|w| {
                let mut cfg = SearchConfig::new(3, 5, 12, mode);
                cfg.workers = w;
                let out = search(&cfg).unwrap();
                (out.found.map(|f| f.matrix), out.per_lifting)
            })
            .collect();
        assert!(runs.windows(2).all(|w| w[0] == w[1]), "{mode:?}");
    }
}

#[test]
fn zero_budget_reports_unsettled() {
    let mut cfg = compact(4, 8, 40);
    cfg.budget = Some(std::time::Duration::ZERO);
    let out = search_compact(&cfg).unwrap();
    assert!(out.budget_exhausted);
    assert!(out.found.is_none());
    assert!(!out.per_lifting.last().unwrap().exhausted);
}

#[test]
fn rejects_bad_configs() {
    assert!(search(&SearchConfig::new(1, 5, 10, SearchMode::General)).is_err());
    assert!(search(&SearchConfig::new(4, 3, 10, SearchMode::Compact)).is_err());
    let mut cfg = compact(3, 5, 10);
    cfg.lifting_min = 11;
    assert!(search(&cfg).is_err());
    assert!(search_general(&compact(3, 5, 10)).is_err());
}

fn specs() -> impl Strategy<Value = CompactSpec> {
    (3usize..=4, 3usize..=6, 7usize..=29).prop_flat_map(|(gamma, n, lifting)| {
        let entries = proptest::collection::btree_set(2u32..lifting as u32, n - 2);
        let seed = proptest::collection::vec(2u32..lifting as u32, gamma - 2);
        (entries, seed).prop_map(move |(coefs, tail)| {
            let mut seed_v = vec![0, 1];
            seed_v.extend(tail);
            let mut c = vec![0, 1];
            c.extend(coefs);
            CompactSpec::new(seed_v, c, lifting).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn corollary_implies_every_3x3_passes(spec in specs()) {
        prop_assume!(spec.seed.iter().collect::<std::collections::BTreeSet<_>>().len() == spec.gamma());
        prop_assume!(corollary_check(&spec).unwrap().is_none());
        let b = build_compact(&spec).unwrap();
        let (g, n) = (spec.gamma(), spec.n());
        for i1 in 0..g { for i2 in i1 + 1..g { for i3 in i2 + 1..g {
            for j1 in 0..n { for j2 in j1 + 1..n { for j3 in j2 + 1..n {
                prop_assert!(check_3x3(&b, [i1, i2, i3], [j1, j2, j3]).unwrap().is_none());
            }}}
        }}}
    }
}
