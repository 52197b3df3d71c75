use clap::Parser;
use elastic_riemann::cli::{run, Cli};

fn main() {
    std::process::exit(run(&Cli::parse()));
}
