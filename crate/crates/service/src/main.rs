fn main() {
    std::process::exit(rtvis_service::run_cli(std::env::args_os()));
}
