use std::process::exit;

use bluher::cli;
use clap::Parser;

fn main() {
    let args = cli::Cli::parse();
    match cli::run(&args) {
        Ok(out) => println!("{out}"),
        Err(e) => {
            eprintln!("error: {e}");
            exit(cli::exit_code(&e));
        }
    }
}
