fn main() {
    std::process::exit(dsring::cli::main());
}
