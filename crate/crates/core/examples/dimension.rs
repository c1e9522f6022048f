//! Exact dimension with a realizer and a lower-bound witness.

use posetlab::dimension::{dim_exact, is_reversible, LowerBound, Reversibility};
use posetlab::families::{interval_order_all, kelly, standard_example, wheel};
use posetlab::{Budget, Poset};

fn report(name: &str, p: &Poset) -> posetlab::Result<()> {
    let start = std::time::Instant::now();
    let c = dim_exact(p, 12, &Budget::default())?;
    assert!(p.verify_realizer(&c.realizer));
    let why = match &c.lower_bound {
        LowerBound::Trivial => "trivial".to_string(),
        LowerBound::StandardExample(pairs) => format!("contains S_{}", pairs.len()),
        LowerBound::Exhaustive { refuted } => format!("{refuted} extensions refuted"),
    };
    println!(
        "{name:>12}: dim {} ({why}) in {:?}",
        c.dimension,
        start.elapsed()
    );
    Ok(())
}

fn main() -> posetlab::Result<()> {
    for d in 2..=6 {
        report(&format!("S_{d}"), &standard_example(d)?)?;
    }
    for n in 3..=5 {
        report(&format!("H_{n}"), &wheel(n, false)?)?;
    }
    for d in 3..=6 {
        report(&format!("K_{d}"), &kelly(d)?)?;
    }
    report("I(5)", &interval_order_all(5))?;

    // the critical pairs of S_3 cannot all be reversed by one extension
    let s3 = standard_example(3)?;
    let crit = s3.critical_pairs();
    match is_reversible(&s3, &crit)? {
        Reversibility::Reversible(_) => println!("S_3: critical pairs reversible at once"),
        Reversibility::AlternatingCycle(c) => {
            println!("S_3: alternating cycle of length {}", c.len())
        }
    }
    Ok(())
}
