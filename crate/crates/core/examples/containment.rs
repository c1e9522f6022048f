//! Standard example, wheel and Kelly numbers, and subposet search.

use posetlab::containment::{contains_subposet, kelly_number, se, verify_embedding, wheel_number};
use posetlab::families::{kelly, random_cover_planar_with_unique_min, wheel};
use posetlab::Budget;

fn main() -> posetlab::Result<()> {
    let budget = Budget::default();
    for n in 3..=7 {
        let h = wheel(n, false)?;
        let s = se(&h, 12, &budget)?;
        let names: Vec<String> = s
            .pairs
            .iter()
            .map(|&(a, b)| format!("{}/{}", h.label(a), h.label(b)))
            .collect();
        println!("se(H_{n}) = {}: {}", s.value, names.join(" "));
    }

    for d in 3..=5 {
        let host = wheel(d, false)?;
        let pattern = kelly(d)?;
        let map =
            contains_subposet(&host, &pattern, &budget)?.expect("wheels contain Kelly posets");
        assert!(verify_embedding(&host, &pattern, &map));
        println!("K_{d} inside H_{d}: {} elements mapped", map.len());
    }

    for seed in 0..5 {
        let p = random_cover_planar_with_unique_min(seed, 14);
        let w = wheel_number(&p, 8, &budget)?;
        let k = kelly_number(&p, 8, &budget)?;
        println!(
            "random #{seed} ({} elements): se {} wheel {} kelly {}",
            p.len(),
            w.se.value,
            w.value,
            k.value
        );
    }
    Ok(())
}
