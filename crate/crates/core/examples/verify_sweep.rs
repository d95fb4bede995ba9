// Sweeps the closed forms against the engine, with oracle backing on the
// small members, and prints the table plus every mismatch in detail.

use chromatic_curling::verify::{render_table, sweep, SweepConfig};
use chromatic_curling::Verdict;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let records = sweep(&SweepConfig::default())?;
    print!("{}", render_table(&records));
    for r in records.iter().filter(|r| r.verdict == Verdict::PaperMismatch) {
        println!(
            "{}: theta {:?} gives ({}, {}), closed form says ({:?}, {:?})",
            r.family().symbol(r.n()),
            r.engine.theta.as_slice(),
            r.engine.cn_chi,
            r.engine.cnc_chi,
            r.claim.claimed_cn,
            r.claim.claimed_cnc,
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
