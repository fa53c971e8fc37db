fn main() {
    let exit_code = gate_forge::cli::main_impl(std::env::args().collect());
    std::process::exit(exit_code);
}
