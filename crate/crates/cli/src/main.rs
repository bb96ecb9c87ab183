fn main() {
    let code = gbls_cli::run(std::env::args_os());
    std::process::exit(code);
}
