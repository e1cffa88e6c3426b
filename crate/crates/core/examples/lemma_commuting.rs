//! Commuting rules among cabling elements, with transported certificates.
use vpbraid::cabling::verify_lemma_commuting;
use vpbraid::Budget;

fn main() -> vpbraid::Result<()> {
    let report = verify_lemma_commuting(5, Budget::default())?;
    for c in &report.checks {
        let steps = c.verdict.trace().map_or(0, |t| t.len());
        println!("{:<40} {:?} ({steps} steps)", c.id, c.verdict.kind());
    }
    println!("all replay: {}", report.all_replay());
    Ok(())
}
