use clap::Parser;

fn main() {
    let cli = apsort_cli::Cli::parse();
    std::process::exit(apsort_cli::run(cli) as i32);
}
