fn main() {
    std::process::exit(meanlab::cli::run());
}
