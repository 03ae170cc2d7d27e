fn main() {
    std::process::exit(iwahori_kit::cli::main());
}
