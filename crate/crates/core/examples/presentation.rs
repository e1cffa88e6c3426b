//! Presentations of VP_n and the braid-word dictionary for its generators.
use vpbraid::presentation::{lambda_as_braid_word, vp_presentation};

fn main() -> vpbraid::Result<()> {
    for n in 2..=5 {
        let p = vp_presentation(n)?;
        println!(
            "VP_{n}: {} generators, {} relators",
            p.generators.len(),
            p.relators.len()
        );
    }
    for r in &vp_presentation(3)?.relators {
        println!("  {r}");
    }
    for (i, j) in [(1, 2), (2, 1), (1, 3)] {
        println!("l[{i},{j}] = {}", lambda_as_braid_word(i, j, 3)?);
    }
    Ok(())
}
