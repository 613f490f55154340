fn main() {
    std::process::exit(mmwave_coverage::cli::run(std::env::args_os()));
}
