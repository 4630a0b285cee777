fn main() {
    std::process::exit(logpoisson::cli::run());
}
