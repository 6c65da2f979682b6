// Running property suites from code and inspecting the records.

use stonespec::verify::{run, Config};

pub fn run_example() -> stonespec::Result<()> {
    let cfg = Config {
        max_ring: 24,
        ..Config::default()
    };
    let report = run(&["counting", "ultrafilters"], &cfg)?;
    for r in &report.records {
        println!(
            "{} {}: {} ({})",
            if r.pass { "PASS" } else { "FAIL" },
            r.suite,
            r.instance,
            r.witness
        );
    }
    println!(
        "{} checks, {} failed",
        report.summary.checks, report.summary.failed
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example runs");
}
