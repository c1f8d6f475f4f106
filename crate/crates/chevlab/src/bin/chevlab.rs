fn main() {
    std::process::exit(chevlab::cli::main_run());
}
