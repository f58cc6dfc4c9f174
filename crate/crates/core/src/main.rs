fn main() {
    std::process::exit(cfib::cli::run(std::env::args_os()));
}
