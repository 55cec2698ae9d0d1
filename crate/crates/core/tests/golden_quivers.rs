use std::collections::BTreeSet;

use infgon::{build_exchange_quiver, BaseFamily, Edge, TriangulationDesc};

fn golden(name: &str) -> BTreeSet<(Edge, Edge)> {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (u, v) = l.split_once("->").unwrap();
            (u.parse().unwrap(), v.parse().unwrap())
        })
        .collect()
}

fn arrows(t: &TriangulationDesc) -> BTreeSet<(Edge, Edge)> {
    build_exchange_quiver(t, -6, 7)
        .unwrap()
        .arrows()
        .into_iter()
        .map(|(u, v, m)| {
            assert_eq!(m, 1);
            (u, v)
        })
        .collect()
}

fn edges(pairs: &[(i64, i64)]) -> BTreeSet<Edge> {
    pairs.iter().map(|&p| Edge::try_from(p).unwrap()).collect()
}

fn thinned_fountain_golden() -> TriangulationDesc {
    TriangulationDesc::new(
        BaseFamily::Fountain { vertex: 0 },
        edges(&[(-4, 0), (-3, 0), (0, 2), (0, 4), (0, 6)]),
        edges(&[(-4, -2), (-5, -2), (1, 3), (3, 5), (5, 7)]),
    )
    .unwrap()
}

#[test]
fn leapfrog_window_matches_golden() {
    assert_eq!(arrows(&TriangulationDesc::leapfrog(0)), golden("leapfrog.txt"));
}

#[test]
fn thinned_fountain_window_matches_golden() {
    let t = thinned_fountain_golden();
    t.validate().unwrap();
    assert_eq!(arrows(&t), golden("thinned_fountain.txt"));
    assert_eq!(build_exchange_quiver(&t, -6, 7).unwrap().connected_components().len(), 2);
}

#[test]
fn dot_export_round_trips_leapfrog_golden() {
    let dot = infgon::export_dot(&build_exchange_quiver(&TriangulationDesc::leapfrog(0), -6, 7).unwrap());
    let parsed: BTreeSet<(Edge, Edge)> = dot
        .lines()
        .filter_map(|l| l.trim().strip_suffix(';')?.split_once(" -> "))
        .map(|(u, v)| (u.trim_matches('"').parse().unwrap(), v.trim_matches('"').parse().unwrap()))
        .collect();
    assert_eq!(parsed, golden("leapfrog.txt"));
}
