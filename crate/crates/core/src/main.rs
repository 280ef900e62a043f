fn main() {
    std::process::exit(qmf::cli::run(std::env::args_os()));
}
