use std::io;
use std::process;

use clap::Parser;

use whitney::cli::{self, Cli};

fn main() {
    let cli = Cli::parse();
    let stdin = io::stdin();
    let code = cli::run(
        &cli,
        &mut stdin.lock(),
        &mut io::stdout(),
        &mut io::stderr(),
    );
    process::exit(code);
}
