fn main() -> std::process::ExitCode {
    circulant::cli::main()
}
