//! Leftmost and rightmost witnessing paths, pair classification and
//! separating paths inside an interval of H_5.

use posetlab::embedding::canonical_wheel_embedding;
use posetlab::witness::{Direction, PlanePoset};

fn main() -> posetlab::Result<()> {
    let (p, emb) = canonical_wheel_embedding(5)?;
    let pp = PlanePoset::new(p, emb)?;
    let p = pp.poset();
    let at = |l: &str| p.index_of(l);
    let show = |w: &[usize]| {
        w.iter()
            .map(|&v| p.label(v))
            .collect::<Vec<_>>()
            .join(" -> ")
    };

    for target in ["r(1,1)", "r(3,3)", "r(4,4)"] {
        let u = at(target)?;
        println!(
            "W_L({target}) = {}",
            show(&pp.witnessing_path(u, Direction::Left))
        );
        println!(
            "W_R({target}) = {}",
            show(&pp.witnessing_path(u, Direction::Right))
        );
    }
    for (a, b) in [
        ("r(2,5)", "r(3,1)"),
        ("r(3,1)", "r(2,5)"),
        ("r(1,1)", "r(4,4)"),
    ] {
        println!("({a}, {b}) is {:?}", pp.classify_pair(at(a)?, at(b)?));
    }

    let w: Vec<usize> = ["min", "r(1,4)", "r(1,3)"]
        .iter()
        .map(|l| at(l))
        .collect::<posetlab::Result<_>>()?;
    let w2: Vec<usize> = ["min", "r(5,3)", "r(1,3)"]
        .iter()
        .map(|l| at(l))
        .collect::<posetlab::Result<_>>()?;
    let interval = pp.interval(&w, &w2)?;
    println!(
        "interval has {} elements; shadowing: {:?}",
        interval.members().len(),
        interval.shadowing().is_ok()
    );
    let h = interval.hat_partition();
    println!(
        "|A^| = {}, |B^| = {}, |E^| = {}",
        h.a_hat.len(),
        h.b_hat.len(),
        h.e_hat.len()
    );

    let (a, b) = (at("r(3,1)")?, at("r(1,1)")?);
    for dir in [Direction::Left, Direction::Right] {
        let n = interval.separating_path(a, b, dir)?;
        println!("N_{dir}: {} (peak {})", show(&n.path()), p.label(n.peak));
    }
    let a2 = at("r(2,5)")?;
    let o = interval.obs21_check(a, a2, b)?;
    println!(
        "({}, {}) is {:?}; sides {:?}; holds {}",
        p.label(a),
        p.label(a2),
        o.pair,
        o.sides,
        o.holds
    );
    Ok(())
}
