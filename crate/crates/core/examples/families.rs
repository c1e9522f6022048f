//! Builds the named families and writes one of them as JSON.
//!
//! ```text
//! cargo run --example families -- [OUT.json]
//! ```

use posetlab::families::{kelly, standard_example, wheel, wheel_standard_example_labels};
use posetlab::io;

fn main() -> posetlab::Result<()> {
    for d in 2..=5 {
        let s = standard_example(d)?;
        println!("S_{d}: {} elements, {} covers", s.len(), s.covers().len());
    }
    for n in 3..=7 {
        let h = wheel(n, false)?;
        println!(
            "H_{n}: {} elements, height {}, width {}",
            h.len(),
            h.height(),
            h.width()
        );
    }
    for d in 3..=6 {
        let k = kelly(d)?;
        println!("K_{d}: {} elements, height {}", k.len(), k.height());
    }

    let (a, b) = wheel_standard_example_labels(5);
    println!("standard example inside H_5:");
    for (x, y) in a.iter().zip(&b) {
        println!("  {x} || {y}");
    }

    if let Some(path) = std::env::args().nth(1) {
        io::write_poset(&wheel(5, true)?, &path)?;
        println!("wrote H_5 with a maximum to {path}");
    }
    Ok(())
}
