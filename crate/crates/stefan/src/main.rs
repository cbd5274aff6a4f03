use clap::Parser;

fn main() {
    let cli = stefan::cli::Cli::parse();
    std::process::exit(stefan::cli::run(cli));
}
