fn main() {
    std::process::exit(padic_gibbs::cli::run(std::env::args_os()));
}
