fn main() {
    std::process::exit(brickwork::cli::main_entry());
}
