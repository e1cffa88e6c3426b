//! Deciding triviality and equality in VP_n, with replayable certificates.
use vpbraid::{equal, triviality, Alphabet, Budget, Word};

fn main() -> vpbraid::Result<()> {
    let a = Alphabet::Lambda(4);
    let b = Budget::default();
    let cases = [
        "l[1,2] l[3,4] l[1,2]^-1 l[3,4]^-1",
        "l[1,2] l[2,1] l[1,2]^-1 l[2,1]^-1",
        "l[1,3] l[2,4]^-1",
    ];
    for text in cases {
        let u = Word::parse(a, text)?;
        let v = triviality(&u, b)?;
        println!("{text}: {:?}, replays: {}", v.kind(), v.replay());
    }
    let lhs = Word::parse(a, "l[3,1] l[3,2] l[1,2]")?;
    let rhs = Word::parse(a, "l[1,2] l[3,2] l[3,1]")?;
    let v = equal(&lhs, &rhs, b)?;
    println!("{lhs} = {rhs}: {:?}", v.kind());
    if let Some(t) = v.trace() {
        for s in &t.steps {
            println!("  insert ({}) ({}) ({})^-1", s.conjugator, s.relator, s.conjugator);
        }
    }
    Ok(())
}
