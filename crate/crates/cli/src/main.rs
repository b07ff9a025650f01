use std::process::ExitCode;

use clap::Parser;
use exactcat_cli::{exec, Cli, Format, Status};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match exec::execute(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable")),
                Format::Text => print!("{}", out.text),
            }
            ExitCode::from(out.status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(Status::InputError as u8)
        }
    }
}
