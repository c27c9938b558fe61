fn main() {
    std::process::exit(voa_forge::cli::run(std::env::args_os()));
}
