use std::io;

fn main() {
    hilbert_cli::configure_threads();
    let code = hilbert_cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
