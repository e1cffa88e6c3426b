//! Relators of VP_{n+1} produced by cabling, checked in VP_{n+1}.
use vpbraid::cabling::{cabled_relators, verify_cabled_relators};
use vpbraid::Budget;

fn main() -> vpbraid::Result<()> {
    let c = cabled_relators(3)?;
    println!("{} relators from {} raw", c.relators.len(), c.raw_count);
    for r in c.relators.iter().take(5) {
        println!("  {r}");
    }
    let report = verify_cabled_relators(4, Budget::default())?;
    let s = report.summary();
    println!("VP_5: {} proven of {}", s.proven_trivial, s.total);
    Ok(())
}
