fn main() {
    std::process::exit(qsing::cli::run());
}
