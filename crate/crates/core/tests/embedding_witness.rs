mod common;

use posetlab::embedding::*;
use posetlab::families::*;
use posetlab::graph::{CoverGraph, Graph};
use posetlab::witness::*;
use posetlab::Poset;

fn wheel_plane(n: usize) -> PlanePoset {
    let (p, e) = canonical_wheel_embedding(n).unwrap();
    PlanePoset::new(p, e).unwrap()
}

fn idx(p: &Poset, labels: &[&str]) -> Vec<usize> {
    labels.iter().map(|l| p.index_of(l).unwrap()).collect()
}

#[test]
fn cover_graph_shapes() {
    let c = CoverGraph::of(&chain(3));
    assert_eq!(c.graph.edge_count(), 2);
    let s2 = CoverGraph::of(&standard_example(2).unwrap());
    assert_eq!(s2.graph.edges(), vec![(0, 3), (1, 2)]);
    assert!(s2.is_up(0, 3) && !s2.is_up(3, 0));
    let w3 = CoverGraph::of(&wheel(3, false).unwrap());
    assert_eq!(w3.graph.len(), 7);
    assert!(is_planar(&w3.graph).is_planar());
}

#[test]
fn planarity_of_standard_examples() {
    assert!(is_planar(&CoverGraph::of(&standard_example(4).unwrap()).graph).is_planar());
    assert!(is_planar(&Graph::complete(4)).is_planar());
    match is_planar(&CoverGraph::of(&standard_example(5).unwrap()).graph) {
        Planarity::NonPlanar(w) => assert!(!w.edges.is_empty()),
        Planarity::Planar(_) => panic!("the cover graph of S_5 is not planar"),
    }
    assert!(!is_planar(&Graph::complete(5)).is_planar());
}

#[test]
fn euler_formula_by_independent_face_tracing() {
    let mut embs = Vec::new();
    for n in 3..=7 {
        let (p, e) = canonical_wheel_embedding(n).unwrap();
        assert_eq!(p.len(), n * n - n + 1);
        embs.push(e);
    }
    for seed in 0..30 {
        embs.push(embed_poset(&random_cover_planar_with_unique_min(seed, 16)).unwrap());
    }
    for e in embs {
        let g = e.graph();
        let f = common::face_count(&e);
        assert_eq!(f, e.faces().len());
        assert_eq!(g.len() + f, g.edge_count() + 1 + g.components().len());
        assert!(e.euler_holds());
    }
}

#[test]
fn minimum_is_on_the_outer_face() {
    for n in 3..=7 {
        let (p, e) = canonical_wheel_embedding(n).unwrap();
        let min = p.index_of("min").unwrap();
        assert_eq!(e.x0(), Some(min));
        assert!(e.outer_face_vertices().contains(&min));
    }
}

#[test]
fn ordering_of_a_star() {
    // d below u, five elements above u, drawn clockwise as d, e1, .., e5
    let names = ["d", "u", "e1", "e2", "e3", "e4", "e5"];
    let covers: Vec<(&str, &str)> = std::iter::once(("d", "u"))
        .chain(names[2..].iter().map(|&e| ("u", e)))
        .collect();
    let p = Poset::from_cover_pairs(&names, &covers).unwrap();
    let cover = CoverGraph::of(&p);
    let mut rot = vec![Vec::new(); p.len()];
    rot[1] = (0..7).filter(|&v| v != 1).collect();
    for v in [0, 2, 3, 4, 5, 6] {
        rot[v] = vec![1];
    }
    let emb = PlaneEmbedding::from_rotation(cover.graph.clone(), rot, None)
        .unwrap()
        .with_e_infinity_at(0)
        .unwrap();
    assert_eq!(
        u_e_ordering(&emb, &cover, 1, Some(0)).unwrap(),
        vec![2, 3, 4, 5, 6]
    );
    assert_eq!(u_e_ordering(&emb, &cover, 0, None).unwrap(), vec![1]);
    assert!(u_e_ordering(&emb, &cover, 1, Some(2)).is_err());
}

#[test]
fn ordering_at_the_minimum_reads_the_rotation() {
    for n in 3..=6 {
        let pp = wheel_plane(n);
        let emb = pp.embedding();
        let (x0, k) = emb.e_infinity().unwrap();
        let rot = emb.rotation(x0);
        let direct: Vec<usize> = (0..rot.len()).map(|i| rot[(k + i) % rot.len()]).collect();
        assert_eq!(pp.u_e_ordering(x0, None).unwrap(), direct);
    }
}

/// A point inside the face that holds `e_∞`, and the face polygon.
fn e_infinity_face(pp: &PlanePoset, pos: &[(f64, f64)]) -> ((f64, f64), Vec<usize>) {
    let face = pp.embedding().outer_face_vertices();
    let k = face.len() as f64;
    let c = face.iter().fold((0.0, 0.0), |(x, y), &v| {
        (x + pos[v].0 / k, y + pos[v].1 / k)
    });
    let poly: Vec<(f64, f64)> = face.iter().map(|&v| pos[v]).collect();
    assert!(
        common::inside_polygon(c, &poly),
        "the face centroid must lie in the face"
    );
    (c, face)
}

fn signed_area(poly: &[(f64, f64)]) -> f64 {
    let k = poly.len();
    (0..k)
        .map(|i| poly[i].0 * poly[(i + 1) % k].1 - poly[(i + 1) % k].0 * poly[i].1)
        .sum::<f64>()
        / 2.0
}

#[test]
fn side_partition_matches_the_drawing() {
    let mut checked = 0;
    for (n, mirror) in [(5, false), (6, false), (7, false), (5, true), (6, true)] {
        let pp = if mirror {
            wheel_plane(n).reflect()
        } else {
            wheel_plane(n)
        };
        let (_, mut pos) = wheel_coordinates(n).unwrap();
        if mirror {
            pos.iter_mut().for_each(|q| q.0 = -q.0);
        }
        let (c, face) = e_infinity_face(&pp, &pos);
        for &end in face.iter().filter(|&&v| v != pp.x0()) {
            for path in common::all_paths(&pp, pp.x0(), end, 400) {
                // close the path through the e_infinity face
                let mut poly: Vec<(f64, f64)> = path.iter().map(|&v| pos[v]).collect();
                poly.push(c);
                let ccw = signed_area(&poly) > 0.0;
                let sides = pp.side_partition(&path).unwrap();
                for v in 0..pp.poset().len() {
                    if path.contains(&v) {
                        assert_eq!(sides.of(v), Some(Side::On));
                        continue;
                    }
                    let inside = common::inside_polygon(pos[v], &poly);
                    let want = if inside == ccw {
                        Side::Left
                    } else {
                        Side::Right
                    };
                    assert_eq!(
                        sides.of(v),
                        Some(want),
                        "H_{n} path {path:?} vertex {}",
                        pp.poset().label(v)
                    );
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn bridge_paths_leave_one_side_empty() {
    let p = chain(3);
    let pp = PlanePoset::embed(p).unwrap();
    let s = pp.side_partition(&[0, 1]).unwrap();
    assert!(s.left().is_empty() || s.right().is_empty());
    assert_eq!(s.on(), vec![0, 1]);
}

#[test]
fn extreme_paths_agree_with_enumeration() {
    let mut planes: Vec<PlanePoset> = (3..=5).map(wheel_plane).collect();
    planes.push(wheel_plane(4).reflect());
    planes.extend(
        (0..25).filter_map(|s| PlanePoset::embed(random_cover_planar_with_unique_min(s, 14)).ok()),
    );
    for pp in &planes {
        for u in 0..pp.poset().len() {
            for dir in [Direction::Left, Direction::Right] {
                if let Some(want) = common::extreme_by_enumeration(pp, u, dir) {
                    assert_eq!(pp.witnessing_path(u, dir), want);
                }
            }
            if common::all_paths(pp, pp.x0(), u, 2).len() == 1 {
                assert_eq!(
                    pp.witnessing_path(u, Direction::Left),
                    pp.witnessing_path(u, Direction::Right)
                );
            }
        }
        assert_eq!(pp.witnessing_path(pp.x0(), Direction::Left), vec![pp.x0()]);
    }
    let h5 = wheel_plane(5);
    let r11 = h5.poset().index_of("r(1,1)").unwrap();
    let want = idx(h5.poset(), &["min", "r(5,3)", "r(1,3)", "r(1,2)", "r(1,1)"]);
    assert_eq!(h5.witnessing_path(r11, Direction::Left), want);
}

#[test]
fn path_comparison() {
    let pp = wheel_plane(5);
    let p = pp.poset();
    let w = pp.witnessing_path(p.index_of("r(3,3)").unwrap(), Direction::Left);
    assert_eq!(pp.compare_paths(&w, &w).unwrap(), PathOrder::PrefixRelated);
    assert_eq!(
        pp.compare_paths(&w, &w[..3]).unwrap(),
        PathOrder::PrefixRelated
    );
    let left = idx(p, &["min", "r(5,3)", "r(1,3)"]);
    let right = idx(p, &["min", "r(1,4)", "r(1,3)"]);
    assert_eq!(pp.compare_paths(&left, &right).unwrap(), PathOrder::LeftOf);
    assert_eq!(pp.compare_paths(&right, &left).unwrap(), PathOrder::RightOf);
    assert!(pp
        .compare_paths(&idx(p, &["r(1,3)", "r(1,2)"]), &left)
        .is_err());
}

#[test]
fn standard_example_inside_the_wheel_in_drawing_order() {
    for n in 3..=7 {
        let pp = wheel_plane(n);
        let p = pp.poset();
        let (a, _) = wheel_standard_example_labels(n);
        let a: Vec<usize> = a.iter().map(|l| p.index_of(l).unwrap()).collect();
        // left to right around min: a_{n-1}, .., a_1, a_n
        let mut order: Vec<usize> = (0..n - 1).rev().map(|i| a[i]).collect();
        order.push(a[n - 1]);
        for i in 0..n {
            for j in i + 1..n {
                assert_eq!(
                    pp.classify_pair(order[i], order[j]),
                    PairClass::LeftPair,
                    "H_{n}"
                );
                assert_eq!(
                    pp.classify_pair(order[j], order[i]),
                    PairClass::RightPair,
                    "H_{n}"
                );
            }
        }
        let min = p.index_of("min").unwrap();
        assert_eq!(pp.classify_pair(min, a[0]), PairClass::Comparable);
    }
}

#[test]
fn intervals_match_the_drawing() {
    for n in [5, 6] {
        let pp = wheel_plane(n);
        let (_, pos) = wheel_coordinates(n).unwrap();
        let (c, _) = e_infinity_face(&pp, &pos);
        let p = pp.poset();
        for y in 0..p.len() {
            let wl = pp.witnessing_path(y, Direction::Left);
            let wr = pp.witnessing_path(y, Direction::Right);
            for w2 in common::all_paths(&pp, pp.x0(), y, 50) {
                let Some(s) = (1..wl.len().min(w2.len())).find(|&i| wl[i] != w2[i]) else {
                    continue;
                };
                let Some(j) = (s..wl.len()).find(|&i| w2[s..].contains(&wl[i])) else {
                    continue;
                };
                let k = w2.iter().position(|&v| v == wl[j]).unwrap();
                let (w, wp) = (&wl[s - 1..=j], &w2[s - 1..=k]);
                let iv = pp.interval(w, wp).unwrap();
                let mut cycle: Vec<usize> = w.to_vec();
                cycle.extend(wp[1..wp.len() - 1].iter().rev());
                let poly: Vec<(f64, f64)> = cycle.iter().map(|&v| pos[v]).collect();
                let outside = common::inside_polygon(c, &poly);
                for v in 0..p.len() {
                    let want =
                        cycle.contains(&v) || common::inside_polygon(pos[v], &poly) != outside;
                    assert_eq!(
                        iv.contains(v),
                        want,
                        "H_{n} y={} v={}",
                        p.label(y),
                        p.label(v)
                    );
                }
                assert!(iv.contains(w[0]) && iv.contains(*w.last().unwrap()));
            }
            let _ = wr;
        }
    }
}

#[test]
fn shadowing_can_fail_and_reports_a_witness() {
    let pp = wheel_plane(5);
    let p = pp.poset();
    let w = idx(p, &["min", "r(1,4)", "r(1,3)", "r(1,2)"]);
    let wp = idx(p, &["min", "r(4,2)", "r(5,2)", "r(1,2)"]);
    let iv = pp.interval(&w, &wp).unwrap();
    let v = iv.shadowing().unwrap_err();
    assert!(iv.contains(v.z));
    let path = pp.witnessing_path(v.z, v.dir);
    let x = p.index_of("min").unwrap();
    let pos = path.iter().position(|&u| u == x);
    assert!(pos.is_none() || path[pos.unwrap()..].iter().any(|&u| !iv.contains(u)));

    let pp4 = wheel_plane(4);
    let p4 = pp4.poset();
    let iv4 = pp4
        .interval(
            &idx(p4, &["min", "r(1,3)", "r(1,2)"]),
            &idx(p4, &["min", "r(4,2)", "r(1,2)"]),
        )
        .unwrap();
    assert!(iv4.shadowing().is_ok());
    // x is then the unique minimal element of the induced poset
    let q = iv4.poset().unwrap();
    assert_eq!(q.minimal_elements().len(), 1);
    assert_eq!(q.label(q.minimal_elements()[0]), "min");
}

#[test]
fn hat_partition_splits_the_interval() {
    let pp = wheel_plane(4);
    let p = pp.poset();
    let y = p.index_of("r(1,2)").unwrap();
    let iv = pp
        .interval(
            &idx(p, &["min", "r(1,3)", "r(1,2)"]),
            &idx(p, &["min", "r(4,2)", "r(1,2)"]),
        )
        .unwrap();
    let h = iv.hat_partition();
    let mut all: Vec<usize> = h
        .a_hat
        .iter()
        .chain(&h.b_hat)
        .chain(&h.e_hat)
        .copied()
        .collect();
    all.sort();
    assert_eq!(all, iv.members());
    for &a in &h.a_hat {
        assert!(p.incomparable(a, y));
    }
    for &b in &h.b_hat {
        assert!(p.lt(y, b));
    }
    for l in ["r(3,1)", "r(2,4)"] {
        assert!(h.a_hat.contains(&p.index_of(l).unwrap()));
    }
    for l in ["r(2,2)", "r(1,1)"] {
        assert!(h.b_hat.contains(&p.index_of(l).unwrap()));
    }

    // y maximal: nothing above it
    let pp5 = wheel_plane(5);
    let p5 = pp5.poset();
    let iv = pp5
        .interval(
            &idx(p5, &["min", "r(3,1)", "r(4,1)", "r(5,1)", "r(1,1)"]),
            &idx(p5, &["min", "r(1,4)", "r(1,3)", "r(1,2)", "r(1,1)"]),
        )
        .unwrap();
    assert!(iv.hat_partition().b_hat.is_empty());
}

#[test]
fn separating_paths_have_three_segments_and_a_least_peak() {
    let pp = wheel_plane(5);
    let p = pp.poset();
    let w = idx(p, &["min", "r(1,4)", "r(1,3)"]);
    let wp = idx(p, &["min", "r(5,3)", "r(1,3)"]);
    let iv = pp.interval(&w, &wp).unwrap();
    let y = p.index_of("r(1,3)").unwrap();
    let x = p.index_of("min").unwrap();
    let h = iv.hat_partition();
    let mut built = 0;
    for &a in &h.a_hat {
        for &b in &h.b_hat {
            if !p.lt(a, b) {
                continue;
            }
            for dir in [Direction::Left, Direction::Right] {
                let Ok(n) = iv.separating_path(a, b, dir) else {
                    continue;
                };
                built += 1;
                let [first, middle, last] = &n.segments;
                let to_a = pp.witnessing_path(a, dir.opposite());
                assert_eq!(
                    first.as_slice(),
                    &to_a[to_a.iter().position(|&v| v == x).unwrap()..]
                );
                assert_eq!((middle[0], *middle.last().unwrap()), (a, n.peak));
                assert!(middle
                    .windows(2)
                    .all(|s| pp.cover().is_up(s[0], s[1]) && iv.contains(s[1])));
                let to_b = pp.witnessing_path(b, dir);
                let first_above = to_b.iter().copied().find(|&v| p.lt(a, v)).unwrap();
                assert_eq!(n.peak, first_above);
                assert_eq!(last[0], y);
                assert!(to_b.windows(last.len()).any(|s| s == last.as_slice()));
            }
        }
    }
    assert!(built > 0);
    let a = p.index_of("r(3,1)").unwrap();
    assert!(matches!(
        iv.separating_path(a, a, Direction::Left),
        Err(posetlab::Error::PreconditionViolated(_))
    ));
}

#[test]
fn separating_paths_put_the_other_element_on_the_promised_side() {
    let mut wheel_instances = Vec::new();
    for n in 3..=6 {
        let pp = wheel_plane(n);
        let plain = common::obs21_instances(&pp);
        let mirrored = common::obs21_instances(&pp.reflect());
        let lefts = |v: &[Obs21Outcome]| v.iter().filter(|o| o.pair == PairClass::LeftPair).count();
        assert_eq!(lefts(&plain), plain.len() - lefts(&mirrored));
        wheel_instances.extend(plain);
        wheel_instances.extend(mirrored);
    }
    assert!(wheel_instances.len() >= 500);
    for o in &wheel_instances {
        assert!(o.holds, "{o:?}");
        let want = if o.pair == PairClass::LeftPair {
            Side::Right
        } else {
            Side::Left
        };
        assert_eq!(o.sides, [Some(want), Some(want)]);
    }
}

#[test]
fn lemma_certificates() {
    let pp = wheel_plane(4);
    let p = pp.poset();
    let l = |s: &[&str]| idx(p, s);
    let good = IntervalCertificate {
        x: p.index_of("min").unwrap(),
        y: p.index_of("r(1,2)").unwrap(),
        w: l(&["min", "r(1,3)", "r(1,2)"]),
        w_prime: l(&["min", "r(4,2)", "r(1,2)"]),
        a: l(&["r(3,1)", "r(2,4)"]),
        b: l(&["r(2,2)", "r(1,1)"]),
    };
    let r = verify_lemma_certificate(&pp, &good).unwrap();
    assert!(r.holds(), "{r:?}");

    let mut reordered = good.clone();
    reordered.a.reverse();
    reordered.b.reverse();
    assert_eq!(
        verify_lemma_certificate(&pp, &reordered)
            .unwrap()
            .failed_items(),
        vec![4]
    );

    let mut off_y = good.clone();
    off_y.b[1] = p.index_of("r(3,3)").unwrap();
    assert!(!p.lt(good.y, off_y.b[1]));
    assert!(verify_lemma_certificate(&pp, &off_y)
        .unwrap()
        .failed_items()
        .contains(&3));

    let mut short = good.clone();
    short.b.pop();
    assert!(matches!(
        verify_lemma_certificate(&pp, &short),
        Err(posetlab::Error::MalformedCertificate(_))
    ));
}
