//! Cabling elements and the reconstruction of generators from them.
use vpbraid::cabling::{a_closed, a_elem, b_elem, c_elem, cabling_program, lambda_via_ab, Variant};
use vpbraid::Word;

fn main() -> vpbraid::Result<()> {
    for (k, l) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        println!("a[{k},{l}] = {}", a_elem(k, l)?);
        println!("b[{k},{l}] = {}", b_elem(k, l)?);
        println!("c[{k},{l}] = {}", c_elem(k, l)?);
        println!(
            "  program {}, closed form agrees: {}",
            cabling_program(k, k + l)?,
            a_elem(k, l)? == a_closed(k, l)?
        );
    }
    let n = 4;
    for k in 1..n {
        let row = lambda_via_ab(k, n, Variant::Row)?;
        println!("l[{k},{n}] rebuilt: {}", row == Word::lambda(n, k, n)?);
    }
    Ok(())
}
