use clap::Parser;

use hermspec::cli;

fn main() {
    let parsed = cli::Cli::parse();
    std::process::exit(cli::run(&parsed));
}
