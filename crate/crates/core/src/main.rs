fn main() {
    std::process::exit(so4::cli::run(std::env::args_os()));
}
