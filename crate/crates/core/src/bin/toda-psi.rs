fn main() -> std::process::ExitCode {
    toda_psi::cli::run(std::env::args_os())
}
