fn main() {
    std::process::exit(gldim::cli::run(std::env::args_os()));
}
