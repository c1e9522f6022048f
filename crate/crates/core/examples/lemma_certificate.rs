//! Checks a k = 2 interval certificate in H_4 and three broken variants.

use posetlab::embedding::canonical_wheel_embedding;
use posetlab::witness::{verify_lemma_certificate, IntervalCertificate, PlanePoset};

fn main() -> posetlab::Result<()> {
    let (p, emb) = canonical_wheel_embedding(4)?;
    let pp = PlanePoset::new(p, emb)?;
    let at = |l: &str| pp.poset().index_of(l).unwrap();
    let list = |ls: &[&str]| ls.iter().map(|l| at(l)).collect::<Vec<_>>();

    let good = IntervalCertificate {
        x: at("min"),
        y: at("r(1,2)"),
        w: list(&["min", "r(1,3)", "r(1,2)"]),
        w_prime: list(&["min", "r(4,2)", "r(1,2)"]),
        a: list(&["r(3,1)", "r(2,4)"]),
        b: list(&["r(2,2)", "r(1,1)"]),
    };
    let mut reversed = good.clone();
    reversed.a.reverse();
    reversed.b.reverse();
    let mut off_y = good.clone();
    off_y.b[1] = at("r(3,3)");

    for (name, cert) in [
        ("certificate", &good),
        ("reversed lists", &reversed),
        ("b2 off y", &off_y),
    ] {
        let r = verify_lemma_certificate(&pp, cert)?;
        println!(
            "{name}: holds {}, failed items {:?}",
            r.holds(),
            r.failed_items()
        );
        for (i, item) in r.items.iter().enumerate() {
            if let Some(c) = &item.counterexample {
                println!("  ({}) {c}", i + 1);
            }
        }
    }
    Ok(())
}
