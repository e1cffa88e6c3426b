//! The action of VB_n and VP_n on the free group.
use vpbraid::oracle::{braid_rep, rep};
use vpbraid::presentation::lambda_as_braid_word;
use vpbraid::word::Generator;
use vpbraid::{Alphabet, Word};

fn main() -> vpbraid::Result<()> {
    let sigma = braid_rep(Generator::Sigma(1), 3)?;
    println!(
        "sigma_1: {:?}",
        sigma.images().iter().map(ToString::to_string).collect::<Vec<_>>()
    );
    println!(
        "sigma_1 then its inverse is identity: {}",
        sigma.compose(&sigma.inverse())?.is_identity()
    );
    for (i, j) in [(1, 2), (2, 1)] {
        let w = Word::lambda(3, i, j)?;
        let a = rep(&w)?;
        let via_braids = rep(&lambda_as_braid_word(i, j, 3)?)?;
        println!(
            "l[{i},{j}]: {:?}, matches braid word: {}",
            a.images().iter().map(ToString::to_string).collect::<Vec<_>>(),
            a.images() == via_braids.images()
        );
    }
    let c = Word::parse(Alphabet::Lambda(2), "l[1,2]^-1 l[2,1]^-1 l[1,2] l[2,1]")?;
    println!(
        "[l12, l21] moves x[{}]",
        rep(&c)?.moved_basis_letter().map_or(0, |g| g + 1)
    );
    Ok(())
}
