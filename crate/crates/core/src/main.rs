fn main() {
    std::process::exit(stonespec::cli::main());
}
