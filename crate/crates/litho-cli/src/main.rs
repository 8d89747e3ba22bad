mod cli;
mod commands;
mod config;
mod error;
mod output;
mod recipe_io;

use clap::Parser;

fn main() {
    let parsed = cli::Cli::parse();
    let result = config::resolve(parsed).and_then(|run| commands::execute(&run));
    if let Err(err) = result {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
