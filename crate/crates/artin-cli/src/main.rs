use std::io::{stderr, stdout};

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let code = artin_cli::run(&argv, &mut stdout(), &mut stderr());
    std::process::exit(code);
}
