fn main() {
    std::process::exit(aeadfde::cli::run(std::env::args()));
}
