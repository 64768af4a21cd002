fn main() {
    std::process::exit(zeta_crystal_cli::run(std::env::args_os()));
}
