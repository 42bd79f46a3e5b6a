fn main() {
    std::process::exit(grover_plus::cli::run());
}
