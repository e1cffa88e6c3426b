//! Brunnian tests and sampled symmetric commutators.
use vpbraid::brunnian::{is_brunnian, random_sample, verify_brunnian_samples};
use vpbraid::{Budget, Word};

fn main() -> vpbraid::Result<()> {
    let b = Budget::default();
    let l12 = Word::lambda(3, 1, 2)?;
    println!("l[1,2] in VP_3: {:?}", is_brunnian(&l12, b)?.overall);
    let s = random_sample(3, 2, 1)?;
    println!("sample (permutation {:?}), length {}", s.permutation, s.word.len());
    println!("  {:?}", is_brunnian(&s.word, b)?.overall);
    let run = verify_brunnian_samples(&[3, 4], 20, 4, b)?;
    println!("{} samples, passes: {}", run.samples.len(), run.passes());
    Ok(())
}
