use std::net::{Ipv4Addr, SocketAddr};
use std::process::ExitCode;

use clap::Parser;
use lotopt_service::cli::{run_solve, Cli, Command, Outcome};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Solve(args) => match run_solve(&args, &mut std::io::stdout().lock()) {
            Ok(outcome) => {
                if let Outcome::NoPlan(e) = &outcome {
                    eprintln!("lotopt: {e}");
                }
                outcome.exit_code()
            }
            Err(e) => {
                eprintln!("lotopt: {e}");
                ExitCode::FAILURE
            }
        },
        Command::Serve(args) => {
            let addr = SocketAddr::from((Ipv4Addr::UNSPECIFIED, args.port));
            let rt = match tokio::runtime::Runtime::new() {
                Ok(rt) => rt,
                Err(e) => {
                    eprintln!("lotopt: {e}");
                    return ExitCode::FAILURE;
                }
            };
            eprintln!("lotopt: listening on {addr}");
            match rt.block_on(lotopt_service::api::serve(addr)) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("lotopt: {e}");
                    ExitCode::FAILURE
                }
            }
        }
    }
}
