use clap::Parser;
use fano_pentad::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let status = run(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(status.code());
}
