//! Runs the full identity suite on a few random lists and prints a summary.

use arith_tutte::arithmetic::Represented;
use arith_tutte::sample::{random_lists, InstanceShape};
use arith_tutte::suite::{check_theorems, Instance, SuiteOptions};
use arith_tutte::Limits;

fn main() -> arith_tutte::Result<()> {
    let shape = InstanceShape { max_rank: 2, max_len: 4, entry_bound: 3, torsion: true };
    for (i, list) in random_lists(2024, 5, shape).into_iter().enumerate() {
        let group = list.group().to_string();
        let instance = Instance::List { rep: Represented::new(list)?, graph: None };
        let report = check_theorems(&instance, i as u64, Limits::default(), SuiteOptions::default())?;
        println!("instance {i} in {group}: {} checks, {} failed", report.len(), report.failures().count());
        for f in report.failures() {
            println!("  FAIL {}: {}", f.name, f.detail);
        }
    }
    Ok(())
}
