fn main() {
    std::process::exit(dynquant_cli::run(std::env::args_os()));
}
