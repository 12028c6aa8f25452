use std::io::Write;

fn main() {
    let result = kas3_cli::run(std::env::args_os());
    let (out, err) = result.render();
    let _ = std::io::stdout().write_all(out.as_bytes());
    let _ = std::io::stderr().write_all(err.as_bytes());
    std::process::exit(result.status);
}
