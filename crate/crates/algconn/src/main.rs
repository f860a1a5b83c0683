fn main() {
    std::process::exit(algconn::cli::run(std::env::args_os()));
}
