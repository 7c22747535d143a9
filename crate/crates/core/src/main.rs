fn main() {
    std::process::exit(bihom::cli::cli_main(std::env::args_os()));
}
