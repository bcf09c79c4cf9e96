use std::io;

fn main() {
    let code = symrep_cli::run(
        std::env::args_os(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
        &symrep_cli::budget::process_env,
    );
    std::process::exit(code);
}
