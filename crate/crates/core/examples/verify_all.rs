//! Runs the full cross-check suite from library code.

use pilegame::verify::{render, run_checks, VerifyInputs};

fn main() {
    let inputs = VerifyInputs::compute(200, 12).expect("valid sizes");
    let (report, code) = render(&run_checks(&inputs));
    print!("{report}");
    std::process::exit(code);
}
