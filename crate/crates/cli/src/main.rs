use clap::Parser;
use pisot_cli::{emit, exit, run, Cli};

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(out) => match emit(&out) {
            Ok(()) => out.code,
            Err(f) => {
                eprintln!("error: {}", f.message);
                f.code
            }
        },
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    };
    if code != exit::OK {
        std::process::exit(code);
    }
}
