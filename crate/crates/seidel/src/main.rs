use clap::Parser;
use seidel::cli::{run, CliArgs};

fn main() {
    let args = CliArgs::parse();
    let mut stdout = std::io::stdout().lock();
    std::process::exit(run(&args, &mut stdout));
}
