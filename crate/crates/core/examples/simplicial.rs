//! Strand deletion and doubling on VP_n, and the simplicial identities.
use vpbraid::oracle::Budget;
use vpbraid::simplicial::{degeneracy, face, verify_simplicial_identities};
use vpbraid::{Alphabet, Word};

fn main() -> vpbraid::Result<()> {
    let u = Word::parse(Alphabet::Lambda(3), "l[1,2] l[2,3]^-1 l[3,1]")?;
    println!("u = {u}");
    for i in 0..3 {
        println!("d{i} u = {}", face(i, &u)?);
    }
    for i in 0..3 {
        println!("s{i} u = {}", degeneracy(i, &u)?);
    }
    let report = verify_simplicial_identities(4, Budget::default())?;
    print!("{}", report.render_text().lines().last().unwrap_or_default());
    println!();
    Ok(())
}
