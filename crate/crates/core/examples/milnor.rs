//! The Milnor construction on `S^1 ∨ S^1` mapped into `VP_*`.
use vpbraid::milnor::{check_theta_simplicial, milnor_basis, milnor_face, theta};
use vpbraid::Budget;

fn main() -> vpbraid::Result<()> {
    for e in milnor_basis(2)? {
        let faces: Vec<String> = (0..=2)
            .map(|i| milnor_face(i, &e).map(|f| f.map_or("1".to_string(), |f| f.to_string())))
            .collect::<vpbraid::Result<_>>()?;
        println!("{e} = {} -> {}; faces {faces:?}", e.program(), theta(&e)?);
    }
    let r = check_theta_simplicial(4, Budget::default())?;
    println!("{} squares, {} proven", r.summary().total, r.summary().proven_trivial);
    Ok(())
}
