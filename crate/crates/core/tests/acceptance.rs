//! Acceptance criteria 1-10, one line each. Exits non-zero if any fails.

mod common;

use std::path::Path;
use std::time::{Duration, Instant};

use posetlab::containment::{contains_subposet, se, verify_embedding};
use posetlab::dimension::dim_exact;
use posetlab::embedding::canonical_wheel_embedding;
use posetlab::families::{kelly, standard_example, wheel};
use posetlab::graph::{CoverGraph, Graph};
use posetlab::harness::{run, Manifest, Status, Suite};
use posetlab::io;
use posetlab::metrics::{treewidth_exact, verify_grid_map, wheel_grid_certificate};
use posetlab::witness::{verify_lemma_certificate, IntervalCertificate, PlanePoset};
use posetlab::{Budget, Poset};

type Outcome = Result<String, String>;

fn timed<T>(limit: Duration, f: impl FnOnce() -> T) -> (T, Duration, bool) {
    let start = Instant::now();
    let v = f();
    let t = start.elapsed();
    (v, t, t < limit)
}

fn exact_dims(
    name: &str,
    orders: &[usize],
    build: impl Fn(usize) -> Poset,
    limit: Duration,
) -> Outcome {
    let mut notes = Vec::new();
    for &d in orders {
        let p = build(d);
        let (r, t, fast) = timed(limit, || {
            dim_exact(&p, 12, &Budget::default().with_time(limit))
        });
        match r {
            Ok(c) if c.dimension == d && p.verify_realizer(&c.realizer) && fast => {
                notes.push(format!("{name}_{d}={d} ({:.1?})", t))
            }
            Ok(c) => return Err(format!("{name}_{d}: got {} in {:.1?}", c.dimension, t)),
            Err(e) => return Err(format!("{name}_{d}: {e}")),
        }
    }
    Ok(notes.join(", "))
}

fn criterion_1() -> Outcome {
    exact_dims(
        "S",
        &[2, 3, 4, 5, 6, 7],
        |d| standard_example(d).unwrap(),
        Duration::from_secs(60),
    )
}

fn criterion_2() -> Outcome {
    let limit = Duration::from_secs(300);
    let mut line = exact_dims("H", &[3, 4, 5], |d| wheel(d, false).unwrap(), limit)?;
    let h6 = wheel(6, false).unwrap();
    let (r, t, _) = timed(limit, || {
        dim_exact(&h6, 12, &Budget::default().with_time(limit))
    });
    match r {
        Ok(c) if c.dimension == 6 && h6.verify_realizer(&c.realizer) => {
            line += &format!("; stretch H_6=6 ({:.1?})", t)
        }
        Ok(c) => return Err(format!("H_6: got {}", c.dimension)),
        Err(e) => line += &format!("; stretch H_6 unknown ({e})"),
    }
    Ok(line)
}

fn criterion_3() -> Outcome {
    exact_dims(
        "K",
        &[3, 4, 5, 6],
        |d| kelly(d).unwrap(),
        Duration::from_secs(120),
    )
}

fn criterion_4() -> Outcome {
    let mut notes = Vec::new();
    for d in 3..=7 {
        let h = wheel(d, false).unwrap();
        let (r, t, fast) = timed(Duration::from_secs(60), || se(&h, 12, &Budget::default()));
        let s = r.map_err(|e| format!("H_{d}: {e}"))?;
        let ok =
            s.value == d && verify_embedding(&h, &standard_example(d).unwrap(), &s.embedding());
        if !ok || !fast {
            return Err(format!("se(H_{d}) = {} in {:.1?}", s.value, t));
        }
        notes.push(format!("se(H_{d})={d}"));
    }
    Ok(notes.join(", "))
}

fn criterion_5() -> Outcome {
    for d in 3..=5 {
        let (host, pattern) = (wheel(d, false).unwrap(), kelly(d).unwrap());
        match contains_subposet(&host, &pattern, &Budget::default()) {
            Ok(Some(m)) if verify_embedding(&host, &pattern, &m) => {}
            other => return Err(format!("K_{d} in H_{d}: {other:?}")),
        }
    }
    Ok("K_d embeds in H_d for d = 3, 4, 5".into())
}

fn tw(g: &Graph) -> Result<usize, String> {
    let t = treewidth_exact(g, 16, &Budget::default()).map_err(|e| e.to_string())?;
    t.decomposition.validate(g)?;
    Ok(t.width)
}

fn criterion_6() -> Outcome {
    let mut kd = Vec::new();
    for d in 3..=7 {
        let w = tw(&CoverGraph::of(&kelly(d).unwrap()).graph)?;
        if w > 3 {
            return Err(format!("tw(cover(K_{d})) = {w}"));
        }
        kd.push(w.to_string());
    }
    for n in 2..=4 {
        let w = tw(&Graph::grid(n, n))?;
        if w != n {
            return Err(format!("tw({n}x{n} grid) = {w}"));
        }
    }
    Ok(format!(
        "tw(cover(K_3..K_7)) = {}; grids 2, 3, 4",
        kd.join(", ")
    ))
}

fn criterion_7() -> Outcome {
    for n in 2..=3 {
        let (cover, map) = wheel_grid_certificate(n).map_err(|e| e.to_string())?;
        if !verify_grid_map(&cover.graph, n, &map) {
            return Err(format!("{n}x{n} certificate rejected"));
        }
    }
    Ok("2x2 in H_5 and 3x3 in H_7 verified".into())
}

fn criterion_8() -> Outcome {
    let (r, t, fast) = timed(Duration::from_secs(30 * 60), || {
        run(&Manifest::builtin(), &Suite::ALL)
    });
    let r = r.map_err(|e| e.to_string())?;
    let parts: Vec<String> = r
        .suites
        .iter()
        .map(|s| {
            format!(
                "{} {}/{}/{}/{}",
                s.suite.name(),
                s.count(Status::Pass),
                s.count(Status::Fail),
                s.count(Status::Unknown),
                s.count(Status::NotApplicable)
            )
        })
        .collect();
    let line = format!("pass/fail/unknown/n-a: {} in {:.1?}", parts.join(", "), t);
    let fails: usize = r.suites.iter().map(|s| s.count(Status::Fail)).sum();
    if fails == 0 && fast {
        Ok(line)
    } else {
        Err(line)
    }
}

fn criterion_9() -> Outcome {
    let mut failed = Vec::new();
    for (name, check) in common::props::ALL {
        if let Err(e) = check(200) {
            failed.push(format!("{name}: {e}"));
        }
    }
    if failed.is_empty() {
        Ok(format!(
            "{} properties x 200 cases",
            common::props::ALL.len()
        ))
    } else {
        Err(failed.join("; "))
    }
}

fn certificate(
    pp: &PlanePoset,
    x: &str,
    y: &str,
    w: &[&str],
    wp: &[&str],
    a: &[&str],
    b: &[&str],
) -> IntervalCertificate {
    let p = pp.poset();
    let at = |l: &str| p.index_of(l).unwrap();
    let list = |ls: &[&str]| ls.iter().map(|l| at(l)).collect();
    IntervalCertificate {
        x: at(x),
        y: at(y),
        w: list(w),
        w_prime: list(wp),
        a: list(a),
        b: list(b),
    }
}

fn criterion_10() -> Outcome {
    let wheel_plane = |n| {
        let (p, e) = canonical_wheel_embedding(n).unwrap();
        PlanePoset::new(p, e).unwrap()
    };
    let h4 = wheel_plane(4);
    let (w, wp) = (["min", "r(1,3)", "r(1,2)"], ["min", "r(4,2)", "r(1,2)"]);
    let base = certificate(
        &h4,
        "min",
        "r(1,2)",
        &w,
        &wp,
        &["r(3,1)", "r(2,4)"],
        &["r(2,2)", "r(1,1)"],
    );
    let mut reordered = base.clone();
    reordered.a.reverse();
    reordered.b.reverse();

    let h5 = wheel_plane(5);
    let escaping = certificate(
        &h5,
        "min",
        "r(1,2)",
        &["min", "r(1,4)", "r(1,3)", "r(1,2)"],
        &["min", "r(4,2)", "r(5,2)", "r(1,2)"],
        &["r(3,1)", "r(2,4)"],
        &["r(2,2)", "r(1,1)"],
    );

    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let p = io::read_poset(dir.join("item3_poset.json")).map_err(|e| e.to_string())?;
    let emb =
        io::read_embedding(dir.join("item3_embedding.json"), &p).map_err(|e| e.to_string())?;
    let plane = PlanePoset::new(p, emb).map_err(|e| e.to_string())?;
    let unrelated = io::read_certificate(dir.join("item3_certificate.json"), plane.poset())
        .map_err(|e| e.to_string())?;

    let cases: [(&str, &PlanePoset, &IntervalCertificate, Vec<usize>); 4] = [
        ("base", &h4, &base, vec![]),
        ("item 1 (H_5 variant)", &h5, &escaping, vec![1]),
        ("item 3 (separate fixture)", &plane, &unrelated, vec![3]),
        ("item 4 (lists reversed)", &h4, &reordered, vec![4]),
    ];
    let mut notes = Vec::new();
    for (name, pp, cert, want) in cases {
        let got = verify_lemma_certificate(pp, cert)
            .map_err(|e| e.to_string())?
            .failed_items();
        if got != want {
            return Err(format!("{name}: failed items {got:?}, expected {want:?}"));
        }
        notes.push(format!("{name} -> {got:?}"));
    }
    Ok(notes.join(", "))
}

fn main() {
    let criteria: [fn() -> Outcome; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let mut failures = 0;
    for (i, c) in criteria.iter().enumerate() {
        match c() {
            Ok(note) => println!("criterion {:>2}: PASS  {note}", i + 1),
            Err(note) => {
                failures += 1;
                println!("criterion {:>2}: FAIL  {note}", i + 1);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
