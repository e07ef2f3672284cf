fn main() {
    wedderburn::cli::main_with_env()
}
