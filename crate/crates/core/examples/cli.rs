//! Driving the `vpb` command line in-process.
fn main() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = vpbraid::cli::run(["vpb", "verify", "theta", "--max-n", "3"], &mut out, &mut err);
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit {code}");
}
