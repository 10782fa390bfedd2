fn main() {
    std::process::exit(qcentral::cli::run());
}
