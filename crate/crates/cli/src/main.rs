fn main() {
    std::process::exit(pwt_cli::run(std::env::args_os()));
}
