fn main() {
    std::process::exit(bezout::cli::main());
}
