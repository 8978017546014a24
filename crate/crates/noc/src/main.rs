fn main() {
    std::process::exit(noc::cli::run_from_args());
}
