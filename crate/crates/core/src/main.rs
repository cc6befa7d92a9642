fn main() {
    std::process::exit(expander_lab::cli::main());
}
