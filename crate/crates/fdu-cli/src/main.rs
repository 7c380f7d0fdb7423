use std::io::Write;

fn main() {
    let code = fdu_cli::run(std::env::args().collect(), &mut std::io::stdout(), &mut std::io::stderr());
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}
