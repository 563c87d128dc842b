use clap::Parser;

fn main() -> std::process::ExitCode {
    let cli = g2zeta::cli::Cli::parse();
    std::process::ExitCode::from(g2zeta::cli::run(cli))
}
