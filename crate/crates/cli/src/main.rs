use std::io::Write;

fn main() {
    let (code, out, err) = polymix_cli::run(std::env::args_os());
    std::io::stdout().write_all(out.as_bytes()).ok();
    std::io::stderr().write_all(err.as_bytes()).ok();
    std::process::exit(code);
}
