//! Runs every theorem suite over the bundled corpus and prints a summary.

use posetlab::harness::{run, Manifest, Status, Suite};

fn main() -> posetlab::Result<()> {
    let start = std::time::Instant::now();
    let report = run(&Manifest::builtin(), &Suite::ALL)?;
    for s in &report.suites {
        println!(
            "{:<11} {:<44} pass {:>3}  fail {}  unknown {}  n/a {}",
            s.suite.name(),
            s.statement,
            s.count(Status::Pass),
            s.count(Status::Fail),
            s.count(Status::Unknown),
            s.count(Status::NotApplicable)
        );
    }
    println!(
        "exit code {} after {:?}",
        report.exit_code(),
        start.elapsed()
    );
    Ok(())
}
