//! Randomized invariants. Each `check_*` runs `cases` proptest cases and
//! returns the shrunk counterexample on failure.

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use posetlab::dimension::dim_exact;
use posetlab::embedding::Side;
use posetlab::families::{random_cover_planar_with_unique_min, random_poset};
use posetlab::witness::{Direction, PathOrder, PlanePoset};
use posetlab::{containment, Budget, Poset};

use super::*;

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

fn report<T: std::fmt::Debug>(
    r: Result<(), proptest::test_runner::TestError<T>>,
) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

fn poset_strategy(max: usize) -> impl Strategy<Value = (u64, usize, f64)> {
    (any::<u64>(), 1..=max, 0.05f64..0.8)
}

fn plane(seed: u64, size: usize) -> Option<PlanePoset> {
    PlanePoset::embed(random_cover_planar_with_unique_min(seed, size)).ok()
}

pub fn check_poset_axioms(cases: u32) -> Result<(), String> {
    report(runner(cases).run(&poset_strategy(14), |(seed, n, d)| {
        let p = random_poset(seed, n, d);
        for x in 0..n {
            prop_assert!(!p.lt(x, x));
            for y in 0..n {
                prop_assert!(!(p.lt(x, y) && p.lt(y, x)));
                for z in 0..n {
                    prop_assert!(!(p.lt(x, y) && p.lt(y, z)) || p.lt(x, z));
                }
            }
        }
        prop_assert_eq!(closure(n, &p.covers()), order_matrix(&p));
        Ok(())
    }))
}

pub fn check_realizers(cases: u32) -> Result<(), String> {
    report(runner(cases).run(&poset_strategy(10), |(seed, n, d)| {
        let p = random_poset(seed, n, d);
        let c = dim_exact(&p, 12, &Budget::default())
            .map_err(|e| TestCaseError::fail(e.to_string()))?;
        let exts: Vec<Vec<usize>> = c
            .realizer
            .extensions
            .iter()
            .map(|l| l.positions())
            .collect();
        for l in &c.realizer.extensions {
            prop_assert!(p.is_linear_extension(l.as_slice()));
        }
        for x in 0..n {
            for y in 0..n {
                let below_everywhere = x != y && exts.iter().all(|pos| pos[x] < pos[y]);
                prop_assert_eq!(below_everywhere, p.lt(x, y));
            }
        }
        Ok(())
    }))
}

pub fn check_dim_oracle(cases: u32) -> Result<(), String> {
    report(runner(cases).run(&poset_strategy(8), |(seed, n, d)| {
        let p = random_poset(seed, n, d);
        let c = dim_exact(&p, 12, &Budget::default())
            .map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(c.dimension, brute_dim(&p));
        Ok(())
    }))
}

pub fn check_se_oracle(cases: u32) -> Result<(), String> {
    report(runner(cases).run(&poset_strategy(10), |(seed, n, d)| {
        let p = random_poset(seed, n, d);
        let s = containment::se(&p, 12, &Budget::default())
            .map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(s.value, brute_se(&p));
        if s.value >= 2 {
            prop_assert!(containment::verify_standard_example(&p, &s.pairs).unwrap());
        }
        Ok(())
    }))
}

pub fn check_split(cases: u32) -> Result<(), String> {
    report(
        runner(cases).run(&(any::<u64>(), 3..=16usize), |(seed, size)| {
            let Some(pp) = plane(seed, size) else {
                return Ok(());
            };
            let n = pp.poset().len();
            for dir in [Direction::Left, Direction::Right] {
                let paths: Vec<Vec<usize>> = (0..n).map(|u| pp.witnessing_path(u, dir)).collect();
                for u in 0..n {
                    for v in 0..n {
                        let (a, b) = (&paths[u], &paths[v]);
                        let i = (0..a.len().min(b.len()))
                            .find(|&i| a[i] != b[i])
                            .unwrap_or(a.len().min(b.len()));
                        for w in &a[i..] {
                            prop_assert!(
                                !b[i..].contains(w),
                                "paths to {} and {} meet again at {}",
                                u,
                                v,
                                w
                            );
                        }
                    }
                }
            }
            Ok(())
        }),
    )
}

pub fn check_compare_antisymmetry(cases: u32) -> Result<(), String> {
    report(runner(cases).run(
        &(any::<u64>(), 3..=16usize, any::<u64>()),
        |(seed, size, pick)| {
            let Some(pp) = plane(seed, size) else {
                return Ok(());
            };
            let mut rng = ChaCha8Rng::seed_from_u64(pick);
            let n = pp.poset().len();
            for _ in 0..20 {
                let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                let pu = all_paths(&pp, pp.x0(), u, 64);
                let pv = all_paths(&pp, pp.x0(), v, 64);
                let w = pu.choose(&mut rng).unwrap();
                let w2 = pv.choose(&mut rng).unwrap();
                let ab = pp.compare_paths(w, w2).unwrap();
                let ba = pp.compare_paths(w2, w).unwrap();
                let mirrored = match ab {
                    PathOrder::LeftOf => PathOrder::RightOf,
                    PathOrder::RightOf => PathOrder::LeftOf,
                    PathOrder::PrefixRelated => PathOrder::PrefixRelated,
                };
                prop_assert_eq!(ba, mirrored);
            }
            Ok(())
        },
    ))
}

pub fn check_euler(cases: u32) -> Result<(), String> {
    report(
        runner(cases).run(&(any::<u64>(), 2..=20usize), |(seed, size)| {
            let Some(pp) = plane(seed, size) else {
                return Ok(());
            };
            for e in [pp.embedding().clone(), pp.embedding().reflect()] {
                let g = e.graph();
                prop_assert!(e.euler_holds());
                prop_assert_eq!(
                    g.len() + face_count(&e),
                    g.edge_count() + 1 + g.components().len()
                );
            }
            Ok(())
        }),
    )
}

pub fn check_side_reflection(cases: u32) -> Result<(), String> {
    report(
        runner(cases).run(&(any::<u64>(), 3..=16usize), |(seed, size)| {
            let Some(pp) = plane(seed, size) else {
                return Ok(());
            };
            let mirror = pp.reflect();
            let walk = pp.embedding().outer_face_vertices();
            for &end in &walk {
                // a cut vertex has several outer corners and the closing
                // corner is then a convention that reflection does not keep
                if end == pp.x0() || walk.iter().filter(|&&v| v == end).count() > 1 {
                    continue;
                }
                for dir in [Direction::Left, Direction::Right] {
                    let path = pp.witnessing_path(end, dir);
                    let a = pp.side_partition(&path).unwrap();
                    let b = mirror.side_partition(&path).unwrap();
                    for v in 0..pp.poset().len() {
                        prop_assert_eq!(b.of(v), a.of(v).map(Side::flipped));
                    }
                }
            }
            Ok(())
        }),
    )
}

pub fn check_separating_sides(cases: u32) -> Result<(), String> {
    report(runner(cases).run(
        &(any::<u64>(), 6..=16usize, any::<bool>()),
        |(seed, size, flip)| {
            let Some(pp) = plane(seed, size) else {
                return Ok(());
            };
            let pp = if flip { pp.reflect() } else { pp };
            for o in obs21_instances(&pp) {
                prop_assert!(o.holds, "{:?}", o);
            }
            Ok(())
        },
    ))
}

fn random_upset_extension(p: &Poset, x: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut left: Vec<usize> = p.upset(x);
    let mut out = Vec::new();
    while !left.is_empty() {
        let ready: Vec<usize> = left
            .iter()
            .copied()
            .filter(|&v| left.iter().all(|&w| !p.lt(w, v)))
            .collect();
        let v = *ready.choose(rng).unwrap();
        left.retain(|&w| w != v);
        out.push(v);
    }
    out
}

pub fn check_lift_extension(cases: u32) -> Result<(), String> {
    report(runner(cases).run(
        &(poset_strategy(14), any::<u64>()),
        |((seed, n, d), pick)| {
            let p = random_poset(seed, n, d);
            let mut rng = ChaCha8Rng::seed_from_u64(pick);
            let x = rng.gen_range(0..n);
            let lu = random_upset_extension(&p, x, &mut rng);
            let l = p.lift_extension(x, &lu).unwrap();
            prop_assert!(p.is_linear_extension(l.as_slice()));
            let pos = l.positions();
            let upset = p.upset(x);
            for (i, &y1) in lu.iter().enumerate() {
                for &y2 in &lu[i + 1..] {
                    prop_assert!(pos[y1] < pos[y2]);
                }
            }
            for z in (0..n).filter(|z| !upset.contains(z)) {
                for &y in &upset {
                    prop_assert!(pos[z] < pos[y]);
                }
            }
            Ok(())
        },
    ))
}

pub type Check = fn(u32) -> Result<(), String>;

/// Every property with its name, in a fixed order.
pub const ALL: [(&str, Check); 10] = [
    ("poset axioms", check_poset_axioms),
    ("realizer validity", check_realizers),
    ("dimension equals brute force", check_dim_oracle),
    ("se equals brute force", check_se_oracle),
    ("extreme paths never rejoin", check_split),
    ("path comparison antisymmetry", check_compare_antisymmetry),
    ("Euler formula", check_euler),
    ("side partition reflection", check_side_reflection),
    ("separating path sides", check_separating_sides),
    ("lift_extension conditions", check_lift_extension),
];
