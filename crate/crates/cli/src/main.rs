//! Command-line front end: dispatches a subcommand by name through the
//! registry and renders the result as JSON (default) or an ASCII table.
//!
//! Exit codes: 0 on success or a passing check, 1 on a verification
//! failure, 2 on a usage error.

mod config;
mod registry;

use config::{CommandConfig, OutputFormat};
use registry::{CliError, Registry};

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let registry = Registry::standard();
    if args.is_empty() || args[0] == "--help" || args[0] == "help" {
        print_usage(&registry);
        return if args.is_empty() { 2 } else { 0 };
    }
    let cfg = match CommandConfig::parse(&args) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("usage error: {e}");
            return 2;
        }
    };
    let Some(command) = registry.find(&cfg.command) else {
        eprintln!("unknown subcommand `{}`", cfg.command);
        print_usage(&registry);
        return 2;
    };
    let format = match cfg.format() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("usage error: {e}");
            return 2;
        }
    };
    match command.run(&cfg) {
        Ok(output) => {
            match format {
                OutputFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&output.json).unwrap());
                }
                OutputFormat::Table => match &output.table {
                    Some(t) => print!("{t}"),
                    None => println!("{}", serde_json::to_string_pretty(&output.json).unwrap()),
                },
            }
            match output.verified {
                Some(false) => 1,
                _ => 0,
            }
        }
        Err(CliError::Usage(e)) => {
            eprintln!("usage error: {e}");
            2
        }
        Err(CliError::Run(e)) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn print_usage(registry: &Registry) {
    eprintln!("usage: glmn <subcommand> [--flag value]...");
    eprintln!();
    eprintln!("subcommands:");
    for (name, about) in registry.names() {
        eprintln!("  {name:<18} {about}");
    }
    eprintln!();
    eprintln!("common flags: --m M --n N --lambda c1,c2,... --format json|table");
}
