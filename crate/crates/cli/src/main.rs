fn main() {
    std::process::exit(tds_entropy_cli::run(std::env::args_os()));
}
