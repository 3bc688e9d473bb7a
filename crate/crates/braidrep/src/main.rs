fn main() {
    std::process::exit(braidrep::cli::run(std::env::args_os()));
}
