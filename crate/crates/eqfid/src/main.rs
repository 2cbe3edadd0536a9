use clap::Parser;

fn main() {
    let cli = eqfid::Cli::parse();
    let code = match eqfid::run(cli) {
        Ok(o) => o.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
