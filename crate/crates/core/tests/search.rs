use gauss_universal::search::normal_form_cmp;
use gauss_universal::*;
use itertools::Itertools;

fn box_points(side: i64) -> Vec<GaussInt> {
    (0..=side).flat_map(|re| (0..=side).map(move |im| GaussInt::new(re, im))).collect()
}

fn verdict(set: &PointSet) -> Verdict {
    check_universal_exact(set).unwrap().verdict
}

#[test]
fn verdicts_are_invariant_under_symmetries() {
    let points = box_points(2);
    for n in 1..=3 {
        for c in points.iter().cloned().combinations(n + 1) {
            let c = PointSet::new(c).unwrap();
            let v = verdict(&c);
            assert_eq!(verdict(&normalize(&c)), v);
            assert_eq!(verdict(&c.map(|z| z.conj())), v);
            for u in GaussInt::units() {
                for t in [GaussInt::new(0, 0), GaussInt::new(3, -1), GaussInt::new(-2, 5)] {
                    assert_eq!(verdict(&c.map(|z| &(&u * z) + &t)), v, "{c} under {u}, {t}");
                }
            }
        }
    }
}

#[test]
fn normalize_is_idempotent() {
    let points = box_points(3);
    for c in points.iter().cloned().combinations(3).step_by(7) {
        let c = PointSet::new(c).unwrap();
        let once = normalize(&c);
        assert_eq!(normalize(&once), once);
        assert_eq!(normalize(&c.map(|z| z.mul_i().conj())), once);
    }
}

/// Lexicographically first normalized universal set of minimal size,
/// found by trying every subset of the box.
fn naive_minimal(degree: usize, side: u32, max: usize) -> Option<PointSet> {
    let points = SearchBox::square(side).points();
    for size in degree + 1..=max {
        let best = points
            .iter()
            .cloned()
            .combinations(size)
            .map(|c| PointSet::new(c).unwrap())
            .filter(|c| check_universal_superset(c, degree).unwrap().verdict.is_positive())
            .map(|c| normalize(&c))
            .min_by(normal_form_cmp);
        if best.is_some() {
            return best;
        }
    }
    None
}

#[test]
fn search_matches_naive_filter() {
    for degree in 1..=2 {
        for side in 1..=3 {
            let max = degree + 3;
            let config = SearchConfig::new(degree).with_box(SearchBox::square(side)).with_max_cardinality(max);
            let out = search_minimal(&config).unwrap();
            assert!(out.row.exhaustive);
            assert_eq!(out.found, naive_minimal(degree, side, max), "degree {degree}, box {side}");
        }
    }
}

#[test]
fn superset_sweep_matches_naive_filter() {
    // a 1-wide strip holds no 3-point universal set, so larger sets are tried
    let config = SearchConfig::new(2).with_box(SearchBox { width: 3, height: 0 }).with_max_cardinality(4);
    let out = search_minimal(&config).unwrap();
    let points = config.search_box.points();
    let naive = (3..=4).find_map(|size| {
        points
            .iter()
            .cloned()
            .combinations(size)
            .map(|c| PointSet::new(c).unwrap())
            .filter(|c| check_universal_superset(c, 2).unwrap().verdict.is_positive())
            .map(|c| normalize(&c))
            .min_by(normal_form_cmp)
    });
    assert_eq!(out.found, naive);
    assert!(out.found.is_none());
    assert!(out.row.exhaustive);
}

#[test]
fn small_examples_are_found() {
    let out = search_minimal(&SearchConfig::new(1).with_box(SearchBox::square(2))).unwrap();
    assert_eq!(out.found.unwrap(), PointSet::from_pairs(&[(0, 0), (1, 0)]).unwrap());
    let out = search_minimal(&SearchConfig::new(3).with_box(SearchBox::square(3))).unwrap();
    assert_eq!(out.row.minimal_cardinality_found, Some(4));
    assert_eq!(verdict(&out.found.unwrap()), Verdict::Universal);
}

#[test]
fn degree_four_needs_six_points_in_small_box() {
    let config = SearchConfig::new(4).with_box(SearchBox::square(6)).with_max_cardinality(6);
    let out = search_minimal(&config).unwrap();
    assert_eq!(out.row.minimal_cardinality_found, Some(6));
    assert!(out.row.exhaustive);
    let found = out.found.unwrap();
    assert!(check_universal_superset(&found, 4).unwrap().verdict.is_positive());
}

#[test]
fn minimal_cardinality_is_monotone_in_degree() {
    let configs: Vec<SearchConfig> =
        (1..=4).map(|n| SearchConfig::new(n).with_box(SearchBox::square(4)).with_max_cardinality(7)).collect();
    let rows = growth_table(&configs).unwrap();
    let sizes: Vec<usize> = rows.iter().map(|r| r.minimal_cardinality_found.unwrap()).collect();
    assert_eq!(sizes, vec![2, 3, 4, 6]);
    assert!(rows.iter().all(|r| r.minimal_cardinality_found.unwrap() > r.degree));
}

#[test]
fn truncated_sweeps_are_flagged() {
    let config = SearchConfig::new(4).with_box(SearchBox::square(6)).with_max_cardinality(5).with_node_budget(Some(10));
    let out = search_minimal(&config).unwrap();
    assert!(!out.row.exhaustive);
}
